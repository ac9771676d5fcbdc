#include "grasstensor/grassmann.hpp"

#include <bit>
#include <cstdint>

#include "grasstensor/multiindex.hpp"

namespace grasstensor {

namespace {

// Per-axis selection table: for every tensor index along one mode, the
// complement columns that enter the minor and the parity of the multi-index
// sum (the entry sign is (-1)^{sum I + sum J + sum K}).
struct AxisSelection {
    std::vector<int> chosen;  // 0-based column indices within the block, ascending
    int index_sum_parity = 0;
};

std::vector<AxisSelection> axis_selections(int h_plus_1, int s_plus_1) {
    std::vector<AxisSelection> out;
    const auto subsets = all_subsets(s_plus_1, h_plus_1);
    out.reserve(subsets.size());
    for (const auto& idx : subsets) {
        AxisSelection sel;
        int sum = 0;
        for (int e : idx.elements) sum += e;
        sel.index_sum_parity = sum & 1;
        const MultiIndex comp = complement(idx);
        sel.chosen.reserve(comp.elements.size());
        for (int e : comp.elements) sel.chosen.push_back(e - 1);
        out.push_back(std::move(sel));
    }
    return out;
}

// Unit-column data for the permutation fast path: column c of the block hits
// exactly row `row[c]` with value `value[c]`.
struct UnitBlock {
    std::vector<int> row;
    std::vector<Rational> value;
};

bool unit_columns(const RationalMatrix& block, UnitBlock& out) {
    out.row.assign(block.cols(), -1);
    out.value.assign(block.cols(), Rational(0));
    for (int c = 0; c < block.cols(); ++c) {
        for (int r = 0; r < block.rows(); ++r) {
            if (block(r, c) == 0) continue;
            if (out.row[c] >= 0) return false;
            out.row[c] = r;
            out.value[c] = block(r, c);
        }
        if (out.row[c] < 0) return false;  // zero column: excluded by validate anyway
    }
    return true;
}

// Precomputed state of one column selection in the fast path.
struct FastSelection {
    std::uint64_t mask = 0;      // set of rows hit
    std::vector<int> rows;       // rows in chosen-column order
    int parity = 0;              // inversions within the block XOR multi-index parity
    Rational value = 1;          // product of the unit values
    bool value_is_one = true;
};

std::vector<FastSelection> fast_selections(const std::vector<AxisSelection>& sels,
                                           const UnitBlock& unit) {
    std::vector<FastSelection> out(sels.size());
    for (std::size_t s = 0; s < sels.size(); ++s) {
        FastSelection& f = out[s];
        int inversions = 0;
        for (int c : sels[s].chosen) {
            const int r = unit.row[c];
            for (int prev : f.rows)
                if (prev > r) ++inversions;
            f.rows.push_back(r);
            f.mask |= std::uint64_t(1) << r;
            if (unit.value[c] != 1) {
                f.value *= unit.value[c];
                f.value_is_one = false;
            }
        }
        if (f.rows.size() != static_cast<std::size_t>(std::popcount(f.mask)))
            f.mask = ~std::uint64_t(0);  // duplicate rows inside one block: every minor is zero
        f.parity = (inversions & 1) ^ sels[s].index_sum_parity;
    }
    return out;
}

inline int cross_inversions_parity(std::uint64_t earlier_mask, const std::vector<int>& later_rows) {
    int count = 0;
    for (int r : later_rows) count += std::popcount(earlier_mask >> (r + 1));
    return count & 1;
}

}  // namespace

GrassmannTensor build(const ProjectionSetup& setup) {
    setup.validate();
    GrassmannTensor gt;
    gt.setup = setup;
    gt.inv = invariants(setup);
    const auto& inv = gt.inv;
    const int size = inv.k + 1;

    const std::array<RationalMatrix, 3> block = {setup.P[0].transpose(), setup.P[1].transpose(),
                                                 setup.P[2].transpose()};
    std::array<std::vector<AxisSelection>, 3> sels;
    for (int j = 0; j < 3; ++j) sels[j] = axis_selections(inv.h[j] + 1, inv.s[j] + 1);

    gt.tensor = Tensor3<Rational>(static_cast<int>(inv.n[0]), static_cast<int>(inv.n[1]),
                                  static_cast<int>(inv.n[2]));
    auto& data = gt.tensor.data();

    std::array<UnitBlock, 3> units;
    const bool fast = size <= 63 && unit_columns(block[0], units[0]) &&
                      unit_columns(block[1], units[1]) && unit_columns(block[2], units[2]);

    if (fast) {
        const auto f1 = fast_selections(sels[0], units[0]);
        const auto f2 = fast_selections(sels[1], units[1]);
        const auto f3 = fast_selections(sels[2], units[2]);
        std::size_t pos = 0;
        for (const auto& a : f1) {
            for (const auto& b : f2) {
                if ((a.mask & b.mask) != 0) {
                    pos += f3.size();
                    continue;
                }
                const std::uint64_t mask_ab = a.mask | b.mask;
                const int parity_ab =
                    a.parity ^ b.parity ^ cross_inversions_parity(a.mask, b.rows);
                const bool ab_is_one = a.value_is_one && b.value_is_one;
                for (const auto& c : f3) {
                    if ((mask_ab & c.mask) != 0) {
                        ++pos;
                        continue;
                    }
                    int parity = parity_ab ^ c.parity ^
                                 cross_inversions_parity(mask_ab, c.rows);
                    if (ab_is_one && c.value_is_one) {
                        data[pos] = parity ? -1 : 1;
                    } else {
                        Rational v = a.value * b.value * c.value;
                        data[pos] = parity ? Rational(-v) : v;
                    }
                    ++pos;
                }
            }
        }
        return gt;
    }

    RationalMatrix sub(size, size);
    std::size_t pos = 0;
    for (const auto& a : sels[0]) {
        for (const auto& b : sels[1]) {
            for (const auto& c : sels[2]) {
                int col = 0;
                for (int src : a.chosen) {
                    for (int r = 0; r < size; ++r) sub(r, col) = block[0](r, src);
                    ++col;
                }
                for (int src : b.chosen) {
                    for (int r = 0; r < size; ++r) sub(r, col) = block[1](r, src);
                    ++col;
                }
                for (int src : c.chosen) {
                    for (int r = 0; r < size; ++r) sub(r, col) = block[2](r, src);
                    ++col;
                }
                Rational minor = det(sub);
                const int parity =
                    a.index_sum_parity ^ b.index_sum_parity ^ c.index_sum_parity;
                data[pos++] = parity ? Rational(-minor) : minor;
            }
        }
    }
    return gt;
}

std::vector<Rational> plucker_of_subspace(const RationalMatrix& basis) {
    const int h_plus_1 = basis.rows();
    const int s_plus_1 = basis.cols();
    if (s_plus_1 < 1 || s_plus_1 > h_plus_1) throw DimensionError("plucker: bad basis shape");
    if (rank(basis) != s_plus_1) throw DimensionError("plucker: basis is rank deficient");
    const auto subsets = all_subsets(s_plus_1, h_plus_1);
    std::vector<Rational> out;
    out.reserve(subsets.size());
    RationalMatrix sub(s_plus_1, s_plus_1);
    for (const auto& idx : subsets) {
        for (int r = 0; r < s_plus_1; ++r)
            for (int c = 0; c < s_plus_1; ++c) sub(r, c) = basis(idx.elements[r] - 1, c);
        out.push_back(det(sub));
    }
    return out;
}

Rational contract_plucker(const GrassmannTensor& gt, const std::vector<Rational>& w1,
                          const std::vector<Rational>& w2, const std::vector<Rational>& w3) {
    const auto& d = gt.tensor.dims();
    if (static_cast<int>(w1.size()) != d[0] || static_cast<int>(w2.size()) != d[1] ||
        static_cast<int>(w3.size()) != d[2])
        throw DimensionError("contract_plucker: vector lengths must match tensor dims");
    Rational total = 0;
    for (int i = 0; i < d[0]; ++i) {
        if (w1[i] == 0) continue;
        for (int j = 0; j < d[1]; ++j) {
            if (w2[j] == 0) continue;
            for (int k = 0; k < d[2]; ++k) {
                const Rational& t = gt.tensor.at(i, j, k);
                if (t == 0 || w3[k] == 0) continue;
                total += t * w1[i] * w2[j] * w3[k];
            }
        }
    }
    return total;
}

CorrespondenceCheck verify_correspondence(const GrassmannTensor& gt, std::vector<Rational> X,
                                          std::mt19937_64& rng) {
    const auto& setup = gt.setup;
    if (static_cast<int>(X.size()) != setup.k + 1)
        throw DimensionError("verify_correspondence: point has wrong length");
    bool nonzero = false;
    for (const auto& x : X) nonzero = nonzero || x != 0;
    if (!nonzero) throw DimensionError("verify_correspondence: point must be nonzero");

    auto small_int = [&rng]() { return Rational(static_cast<int>(rng() % 19) - 9); };
    auto image = [&](int j, const std::vector<Rational>& point) {
        std::vector<Rational> y(setup.h[j] + 1, Rational(0));
        for (int r = 0; r <= setup.h[j]; ++r)
            for (int c = 0; c <= setup.k; ++c) y[r] += setup.P[j](r, c) * point[c];
        return y;
    };

    CorrespondenceCheck result;
    std::array<std::vector<Rational>, 3> y;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 1000) throw InternalError("verify_correspondence: cannot leave the centers");
        bool degenerate = false;
        for (int j = 0; j < 3; ++j) {
            y[j] = image(j, X);
            bool any = false;
            for (const auto& v : y[j]) any = any || v != 0;
            if (!any) degenerate = true;
        }
        if (!degenerate) break;
        // X sits in a projection center; draw a fresh point
        ++result.point_resamples;
        for (auto& x : X) x = small_int();
        nonzero = false;
        for (const auto& x : X) nonzero = nonzero || x != 0;
        if (!nonzero) X[0] = 1;
    }

    std::array<std::vector<Rational>, 3> w;
    for (int j = 0; j < 3; ++j) {
        const int cols = gt.inv.s[j] + 1;
        RationalMatrix basis(setup.h[j] + 1, cols);
        while (true) {
            for (int r = 0; r <= setup.h[j]; ++r) {
                basis(r, 0) = y[j][r];
                for (int c = 1; c < cols; ++c) basis(r, c) = small_int();
            }
            if (rank(basis) == cols) break;
        }
        w[j] = plucker_of_subspace(basis);
    }
    result.residual = contract_plucker(gt, w[0], w[1], w[2]);
    return result;
}

}  // namespace grasstensor
