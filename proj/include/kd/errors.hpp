#pragma once

#include <stdexcept>
#include <string>

namespace kd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeError : Error { using Error::Error; };
struct ZeroPolynomialError : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatchError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

struct PointValidationError : Error { using Error::Error; };
struct SingularCurveError : Error { using Error::Error; };

struct KernelOrderError : Error { using Error::Error; };
struct DomainMismatchError : Error { using Error::Error; };

struct InvalidParametersError : Error { using Error::Error; };
struct ConjugationError : Error { using Error::Error; };
struct InfinityError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };

struct DecompositionNotFound : Error { using Error::Error; };
struct EmptyQuotient : Error { using Error::Error; };
struct BaseReducibleFlag : Error { using Error::Error; };

} // namespace kd
