#include "kd/mw.hpp"

#include <algorithm>

namespace kd {

MWBasis::MWBasis(CurveQ c, std::vector<PointQ> free_g,
                 std::vector<std::pair<PointQ, int>> torsion_g)
    : curve(std::move(c)), free_gens(std::move(free_g)), torsion_gens(std::move(torsion_g)) {
    for (const auto& P : free_gens)
        if (!curve.on_curve(P))
            throw PointValidationError("free generator is not on the curve");
    for (const auto& [T, order] : torsion_gens) {
        if (!curve.on_curve(T))
            throw PointValidationError("torsion generator is not on the curve");
        auto n = curve.torsion_order(T, std::max(order, 12));
        if (!n || *n != order)
            throw InvalidParametersError("declared torsion order " + std::to_string(order) +
                                         " is wrong");
    }
}

PointQ MWBasis::combine(const std::vector<long>& free_coeffs,
                        const std::vector<long>& torsion_coeffs) const {
    PointQ acc = PointQ::infinity();
    for (size_t i = 0; i < free_coeffs.size() && i < free_gens.size(); ++i)
        acc = curve.add_raw(acc, curve.mul(free_coeffs[i], free_gens[i]));
    for (size_t i = 0; i < torsion_coeffs.size() && i < torsion_gens.size(); ++i)
        acc = curve.add_raw(acc, curve.mul(torsion_coeffs[i], torsion_gens[i].first));
    return acc;
}

namespace {

// Precomputed small multiples [n]G for n in [-bound, bound].
struct MultipleTable {
    std::vector<std::vector<PointQ>> free_mults;    // [i][n + bound]
    std::vector<std::vector<PointQ>> torsion_mults; // [i][t], t in [0, order)
    int bound;
};

MultipleTable build_table(const MWBasis& basis, int bound) {
    MultipleTable tab;
    tab.bound = bound;
    for (const auto& G : basis.free_gens) {
        std::vector<PointQ> row;
        row.reserve(static_cast<size_t>(2 * bound + 1));
        for (long n = -bound; n <= bound; ++n) row.push_back(basis.curve.mul(n, G));
        tab.free_mults.push_back(std::move(row));
    }
    for (const auto& [T, order] : basis.torsion_gens) {
        std::vector<PointQ> row;
        for (long t = 0; t < order; ++t) row.push_back(basis.curve.mul(t, T));
        tab.torsion_mults.push_back(std::move(row));
    }
    return tab;
}

// DFS over free coefficient vectors with exact L1 budget, lexicographic order.
bool search_free(const MWBasis& basis, const MultipleTable& tab, const PointQ& target,
                 size_t index, int budget, const PointQ& partial, std::vector<long>& coeffs,
                 std::vector<long>& torsion_out) {
    const int r = basis.rank();
    if (index == static_cast<size_t>(r)) {
        if (budget != 0) return false;
        if (basis.torsion_gens.empty()) {
            if (partial == target) {
                torsion_out.clear();
                return true;
            }
            return false;
        }
        // iterate torsion combinations in lexicographic order
        std::vector<long> t(basis.torsion_gens.size(), 0);
        for (;;) {
            PointQ sum = partial;
            for (size_t i = 0; i < t.size(); ++i)
                sum = basis.curve.add_raw(sum, tab.torsion_mults[i][static_cast<size_t>(t[i])]);
            if (sum == target) {
                torsion_out = t;
                return true;
            }
            size_t i = t.size();
            while (i > 0) {
                --i;
                if (++t[i] < basis.torsion_gens[i].second) break;
                t[i] = 0;
                if (i == 0) return false;
            }
            if (t == std::vector<long>(t.size(), 0)) return false;
        }
    }
    int remaining_capacity = (r - static_cast<int>(index) - 1) * tab.bound;
    for (long n = -tab.bound; n <= tab.bound; ++n) {
        int cost = static_cast<int>(n < 0 ? -n : n);
        if (cost > budget) continue;
        if (budget - cost > remaining_capacity) continue;
        coeffs[index] = n;
        PointQ next = basis.curve.add_raw(
            partial, tab.free_mults[index][static_cast<size_t>(n + tab.bound)]);
        if (search_free(basis, tab, target, index + 1, budget - cost, next, coeffs,
                        torsion_out))
            return true;
    }
    return false;
}

std::vector<int> canonical_direction(std::vector<int> v, int ell) {
    // scale so the first nonzero entry is 1
    int lead = 0;
    for (int x : v)
        if (x != 0) {
            lead = x;
            break;
        }
    if (lead == 0) return v;
    int inv = 1;
    for (int cand = 1; cand < ell; ++cand)
        if (cand * lead % ell == 1) {
            inv = cand;
            break;
        }
    for (int& x : v) x = x * inv % ell;
    return v;
}

} // namespace

Decomposition decompose(const PointQ& P, const MWBasis& basis, int bound) {
    if (!basis.curve.on_curve(P))
        throw PointValidationError("decompose: point is not on the basis curve");
    MultipleTable tab = build_table(basis, bound);
    const int r = basis.rank();
    std::vector<long> coeffs(static_cast<size_t>(r), 0);
    std::vector<long> torsion_out;
    for (int s = 0; s <= r * bound; ++s) {
        if (search_free(basis, tab, P, 0, s, PointQ::infinity(), coeffs, torsion_out)) {
            if (torsion_out.empty())
                torsion_out.assign(basis.torsion_gens.size(), 0);
            return Decomposition{coeffs, torsion_out};
        }
    }
    throw DecompositionNotFound("no decomposition with |coefficients| <= " +
                                std::to_string(bound) + "; try a larger bound");
}

ImagePresentation::ImagePresentation(int ell, std::vector<std::vector<long>> rows,
                                     int free_rank, std::vector<int> ell_torsion_positions)
    : ell_(ell), rows_(std::move(rows)), free_rank_(free_rank),
      ell_torsion_positions_(std::move(ell_torsion_positions)) {
    dim_ = free_rank_ + static_cast<int>(ell_torsion_positions_.size());
    // reduce the image matrix mod ell
    std::vector<std::vector<int>> m;
    for (const auto& row : rows_) {
        std::vector<int> v(static_cast<size_t>(dim_));
        for (int i = 0; i < dim_; ++i) {
            long x = row[static_cast<size_t>(i)] % ell_;
            if (x < 0) x += ell_;
            v[static_cast<size_t>(i)] = static_cast<int>(x);
        }
        m.push_back(std::move(v));
    }
    // Gaussian elimination over F_ell
    int pivot_row = 0;
    std::vector<bool> is_pivot(static_cast<size_t>(dim_), false);
    for (int col = 0; col < dim_ && pivot_row < static_cast<int>(m.size()); ++col) {
        int found = -1;
        for (int row = pivot_row; row < static_cast<int>(m.size()); ++row)
            if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                found = row;
                break;
            }
        if (found < 0) continue;
        std::swap(m[static_cast<size_t>(pivot_row)], m[static_cast<size_t>(found)]);
        auto& prow = m[static_cast<size_t>(pivot_row)];
        int inv = 1;
        for (int cand = 1; cand < ell_; ++cand)
            if (cand * prow[static_cast<size_t>(col)] % ell_ == 1) {
                inv = cand;
                break;
            }
        for (auto& x : prow) x = x * inv % ell_;
        for (int row = 0; row < static_cast<int>(m.size()); ++row) {
            if (row == pivot_row) continue;
            int f = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int k = 0; k < dim_; ++k) {
                auto& x = m[static_cast<size_t>(row)][static_cast<size_t>(k)];
                x = (x - f * prow[static_cast<size_t>(k)]) % ell_;
                if (x < 0) x += ell_;
            }
        }
        rref_.push_back(prow);
        pivot_of_row_.push_back(col);
        is_pivot[static_cast<size_t>(col)] = true;
        ++pivot_row;
    }
    for (int col = 0; col < dim_; ++col)
        if (!is_pivot[static_cast<size_t>(col)]) nonpivot_cols_.push_back(col);
    quotient_rank_ = static_cast<int>(nonpivot_cols_.size());
}

std::vector<int> ImagePresentation::project(const std::vector<long>& free_coeffs,
                                            const std::vector<long>& torsion_coeffs) const {
    std::vector<int> v(static_cast<size_t>(dim_), 0);
    for (int i = 0; i < free_rank_; ++i) {
        long x = (i < static_cast<int>(free_coeffs.size()) ? free_coeffs[static_cast<size_t>(i)]
                                                           : 0) % ell_;
        if (x < 0) x += ell_;
        v[static_cast<size_t>(i)] = static_cast<int>(x);
    }
    for (size_t j = 0; j < ell_torsion_positions_.size(); ++j) {
        int pos = ell_torsion_positions_[j];
        long x = (pos < static_cast<int>(torsion_coeffs.size())
                      ? torsion_coeffs[static_cast<size_t>(pos)]
                      : 0) % ell_;
        if (x < 0) x += ell_;
        v[static_cast<size_t>(free_rank_) + j] = static_cast<int>(x);
    }
    // reduce by the image rows
    for (size_t row = 0; row < rref_.size(); ++row) {
        int col = pivot_of_row_[row];
        int f = v[static_cast<size_t>(col)];
        if (f == 0) continue;
        for (int k = 0; k < dim_; ++k) {
            auto& x = v[static_cast<size_t>(k)];
            x = (x - f * rref_[row][static_cast<size_t>(k)]) % ell_;
            if (x < 0) x += ell_;
        }
    }
    std::vector<int> out;
    out.reserve(nonpivot_cols_.size());
    for (int col : nonpivot_cols_) out.push_back(v[static_cast<size_t>(col)]);
    return out;
}

bool ImagePresentation::in_image(const std::vector<long>& free_coeffs,
                                 const std::vector<long>& torsion_coeffs) const {
    auto q = project(free_coeffs, torsion_coeffs);
    return std::all_of(q.begin(), q.end(), [](int x) { return x == 0; });
}

ImagePresentation image_presentation(const PhiStarFn& phi_star, const MWBasis& e_basis,
                                     const MWBasis& estar_basis, int ell, int bound) {
    std::vector<int> ell_torsion_positions;
    for (size_t i = 0; i < e_basis.torsion_gens.size(); ++i) {
        int order = e_basis.torsion_gens[i].second;
        if (order % (ell * ell) == 0)
            throw InvalidParametersError("torsion of order divisible by ell^2 not supported");
        if (order % ell == 0) ell_torsion_positions.push_back(static_cast<int>(i));
    }
    std::vector<std::vector<long>> rows;
    auto push_image = [&](const PointQ& Q) {
        Decomposition dec = decompose(phi_star(Q), e_basis, bound);
        std::vector<long> row = dec.free_coeffs;
        for (int pos : ell_torsion_positions)
            row.push_back(dec.torsion_coeffs[static_cast<size_t>(pos)]);
        rows.push_back(std::move(row));
    };
    for (const auto& Q : estar_basis.free_gens) push_image(Q);
    for (const auto& [T, order] : estar_basis.torsion_gens) {
        (void)order;
        push_image(T);
    }
    return ImagePresentation(ell, std::move(rows), e_basis.rank(),
                             std::move(ell_torsion_positions));
}

bool membership(const PointQ& P, const ImagePresentation& pres, const MWBasis& e_basis,
                int bound) {
    if (P.is_infinity()) return true;
    Decomposition dec = decompose(P, e_basis, bound);
    return pres.in_image(dec.free_coeffs, dec.torsion_coeffs);
}

namespace {

// Coefficient vectors over the quotient coordinates in (sum |c|, lex) order.
// Entries are balanced residues in [-(ell-1)/2, (ell-1)/2].
bool next_candidate(std::vector<long>& c, int h, int s, bool& fresh) {
    // enumerate vectors with sum |c_i| == s in lexicographic order
    auto l1 = [&](const std::vector<long>& v) {
        long t = 0;
        for (long x : v) t += x < 0 ? -x : x;
        return t;
    };
    if (fresh) {
        fresh = false;
        c.assign(c.size(), -h);
        if (l1(c) == s) return true;
    }
    for (;;) {
        size_t i = c.size();
        while (i > 0) {
            --i;
            if (c[i] < h) {
                ++c[i];
                for (size_t j = i + 1; j < c.size(); ++j) c[j] = -h;
                break;
            }
            if (i == 0) return false;
        }
        if (l1(c) == s) return true;
    }
}

} // namespace

Classification enumerate_classes(const ImagePresentation& pres, const MWBasis& e_basis,
                                 const ClassAttachments& attach) {
    const int ell = pres.ell();
    const int k = pres.quotient_rank();
    if (k == 0)
        throw EmptyQuotient("the quotient is trivial: every class is the reducible class");

    // all order-ell subgroups = lines with canonical direction, lex order
    std::vector<std::vector<int>> lines;
    std::vector<int> dir(static_cast<size_t>(k), 0);
    for (;;) {
        bool nonzero = std::any_of(dir.begin(), dir.end(), [](int x) { return x != 0; });
        if (nonzero) {
            auto canon = canonical_direction(dir, ell);
            if (canon == dir) lines.push_back(dir);
        }
        int i = k;
        bool done = false;
        while (i > 0) {
            --i;
            if (++dir[static_cast<size_t>(i)] < ell) break;
            dir[static_cast<size_t>(i)] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }

    Classification out;
    out.ell = ell;
    out.quotient_rank = k;

    const int h = (ell - 1) / 2;
    const size_t ncoords = static_cast<size_t>(e_basis.rank()) +
                           pres.ell_torsion_positions().size();
    for (const auto& line : lines) {
        ClassificationEntry entry;
        entry.line = line;
        bool found = false;
        std::vector<long> c(ncoords, 0);
        long max_l1 = static_cast<long>(ncoords) * h;
        for (int s = 1; s <= max_l1 && !found; ++s) {
            bool fresh = true;
            while (next_candidate(c, h, s, fresh)) {
                std::vector<long> free_part(c.begin(), c.begin() + e_basis.rank());
                std::vector<long> torsion_part(e_basis.torsion_gens.size(), 0);
                for (size_t j = 0; j < pres.ell_torsion_positions().size(); ++j)
                    torsion_part[static_cast<size_t>(pres.ell_torsion_positions()[j])] =
                        c[static_cast<size_t>(e_basis.rank()) + j];
                auto q = pres.project(free_part, torsion_part);
                bool on_line = false;
                for (int mu = 1; mu < ell && !on_line; ++mu) {
                    bool eq = true;
                    for (int i = 0; i < k; ++i)
                        if (q[static_cast<size_t>(i)] !=
                            mu * line[static_cast<size_t>(i)] % ell) {
                            eq = false;
                            break;
                        }
                    on_line = eq;
                }
                if (on_line) {
                    // normalize the sign so the first nonzero coefficient is positive
                    for (long x : c) {
                        if (x == 0) continue;
                        if (x < 0) {
                            for (auto& fp : free_part) fp = -fp;
                            for (auto& tp : torsion_part) tp = -tp;
                        }
                        break;
                    }
                    entry.rep_coeffs = Decomposition{free_part, torsion_part};
                    entry.representative = e_basis.combine(free_part, torsion_part);
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            throw DecompositionNotFound("no representative found for a quotient line");
        if (attach.beta) entry.beta = attach.beta(entry.representative);
        if (attach.polynomial) entry.polynomial = attach.polynomial(entry.representative);
        out.classes.push_back(std::move(entry));
    }
    return out;
}

int base_class(const PointQ& P0, const ImagePresentation& pres, const Classification& cls,
               const MWBasis& e_basis, int bound) {
    Decomposition dec = decompose(P0, e_basis, bound);
    auto q = pres.project(dec.free_coeffs, dec.torsion_coeffs);
    if (std::all_of(q.begin(), q.end(), [](int x) { return x == 0; }))
        throw BaseReducibleFlag("the base point lies in the image: reducible class");
    auto canon = canonical_direction(q, pres.ell());
    for (size_t i = 0; i < cls.classes.size(); ++i)
        if (cls.classes[i].line == canon) return static_cast<int>(i);
    throw DecompositionNotFound("base class not among the enumerated subgroups");
}

} // namespace kd
