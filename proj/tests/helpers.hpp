#pragma once

#include <random>

#include "kd/rational.hpp"

namespace kd::testutil {

/// Deterministic small random rationals for property tests.
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    Rational rational(long mag = 20, long den = 6) {
        long n = integer(-mag, mag);
        long d = integer(1, den);
        return Rational(n, d);
    }

    Rational nonzero_rational(long mag = 20, long den = 6) {
        for (;;) {
            Rational r = rational(mag, den);
            if (!r.is_zero()) return r;
        }
    }

private:
    std::mt19937 gen_;
};

} // namespace kd::testutil
