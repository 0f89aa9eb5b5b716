#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kd/curve.hpp"
#include "kd/poly.hpp"

namespace kd {

/// User-supplied presentation of E(Q): free generators plus torsion generators
/// with their orders.  Free generators are declared, not verified; torsion
/// orders are checked on construction.
struct MWBasis {
    CurveQ curve;
    std::vector<PointQ> free_gens;
    std::vector<std::pair<PointQ, int>> torsion_gens;

    MWBasis(CurveQ c, std::vector<PointQ> free_g,
            std::vector<std::pair<PointQ, int>> torsion_g);

    int rank() const { return static_cast<int>(free_gens.size()); }

    /// Point for a coefficient vector (free part, then torsion part).
    PointQ combine(const std::vector<long>& free_coeffs,
                   const std::vector<long>& torsion_coeffs = {}) const;
};

struct Decomposition {
    std::vector<long> free_coeffs;
    std::vector<long> torsion_coeffs;
};

/// Expresses P as an integer combination of the basis by bounded exhaustive
/// search: free coefficients |n_i| <= bound, first hit in lexicographic order
/// of (sum |n_i|, coefficient vector).  Throws DecompositionNotFound.
Decomposition decompose(const PointQ& P, const MWBasis& basis, int bound = 3);

/// The image phi*(E*(Q)) inside E(Q) written in generator coordinates, and the
/// induced F_ell quotient.  Coordinates are the free generators followed by
/// the torsion generators whose order is divisible by ell.
class ImagePresentation {
public:
    ImagePresentation(int ell, std::vector<std::vector<long>> rows, int free_rank,
                      std::vector<int> ell_torsion_positions);

    int ell() const { return ell_; }
    const std::vector<std::vector<long>>& rows() const { return rows_; }
    int dimension() const { return dim_; }
    int quotient_rank() const { return quotient_rank_; }
    int free_rank() const { return free_rank_; }
    const std::vector<int>& ell_torsion_positions() const { return ell_torsion_positions_; }

    /// Class of a coordinate vector in the quotient (Z/ell)^quotient_rank.
    std::vector<int> project(const std::vector<long>& free_coeffs,
                             const std::vector<long>& torsion_coeffs) const;

    bool in_image(const std::vector<long>& free_coeffs,
                  const std::vector<long>& torsion_coeffs) const;

private:
    int ell_;
    std::vector<std::vector<long>> rows_;
    int free_rank_;
    std::vector<int> ell_torsion_positions_; // indices into basis.torsion_gens
    int dim_;
    int quotient_rank_;
    std::vector<std::vector<int>> rref_;  // row-reduced image matrix mod ell
    std::vector<int> pivot_of_row_;
    std::vector<int> nonpivot_cols_;
};

using PhiStarFn = std::function<PointQ(const PointQ&)>;

/// Decomposes phi*(Q_j) for every E*-generator and presents the quotient.
ImagePresentation image_presentation(const PhiStarFn& phi_star, const MWBasis& e_basis,
                                     const MWBasis& estar_basis, int ell, int bound = 3);

/// True iff P lies in phi*(E*(Q)), i.e. its class in the quotient vanishes.
bool membership(const PointQ& P, const ImagePresentation& pres, const MWBasis& e_basis,
                int bound = 3);

struct ClassificationEntry {
    std::vector<int> line;        // canonical direction of the order-ell subgroup
    Decomposition rep_coeffs;     // representative in generator coordinates
    PointQ representative = PointQ::infinity();
    std::optional<Rational> beta;
    std::optional<UniPoly> polynomial;
};

struct Classification {
    int ell = 0;
    int quotient_rank = 0;
    std::vector<ClassificationEntry> classes;
    std::optional<int> base_class; // index into classes, when a base point was given
};

/// Optional attachments for the beta-table: map a representative point to its
/// parameter value and polynomial.
struct ClassAttachments {
    std::function<Rational(const PointQ&)> beta;
    std::function<UniPoly(const PointQ&)> polynomial;
};

/// Enumerates all (ell^k - 1)/(ell - 1) order-ell subgroups of the quotient
/// with minimal coset representatives.  Throws EmptyQuotient when k = 0.
Classification enumerate_classes(const ImagePresentation& pres, const MWBasis& e_basis,
                                 const ClassAttachments& attach = {});

/// Index of the class containing P0; throws BaseReducibleFlag when P0 lies in
/// the image.
int base_class(const PointQ& P0, const ImagePresentation& pres,
               const Classification& cls, const MWBasis& e_basis, int bound = 3);

/// True iff p (degree 3 or 5, rational coefficients) factors nontrivially
/// over Q.  Exact: float candidates are only hints, verified by exact
/// polynomial division.
bool reducibility_oracle(const UniPoly& p);

} // namespace kd
