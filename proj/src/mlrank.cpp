#include "grasstensor/mlrank.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "grasstensor/multiindex.hpp"

namespace grasstensor {

namespace {

// The two views other than r, ascending.  Band slots of block r are
// (i, j_{r,other[0]}, j_{r,other[1]}).
std::array<int, 2> other_views(int r) {
    switch (r) {
        case 1:
            return {2, 3};
        case 2:
            return {1, 3};
        case 3:
            return {1, 2};
        default:
            throw DimensionError("mode must be 1, 2 or 3");
    }
}

void require_generic_dims(const DimensionInvariants& inv) {
    if (inv.i < 0) throw GenericityError("formula requires i >= 0");
}

bool condition_holds(const DimensionInvariants& inv, int r, int s, int t) {
    const int lhs = inv.j(r, s) - inv.alpha[s - 1] - 1;
    const int rhs = std::max(0, inv.alpha[r - 1] - inv.i - inv.j(r, t));
    return lhs >= rhs;
}

}  // namespace

std::array<int, 3> mode_band_caps(const DimensionInvariants& inv, int r) {
    const auto [u, v] = other_views(r);
    return {inv.i, inv.j(r, u), inv.j(r, v)};
}

std::vector<int> zero_row_conditions(const DimensionInvariants& inv, int r) {
    require_generic_dims(inv);
    const auto [u, v] = other_views(r);
    std::vector<int> out;
    if (condition_holds(inv, r, u, v)) out.push_back(u);
    if (condition_holds(inv, r, v, u)) out.push_back(v);
    return out;
}

std::vector<std::array<int, 3>> deficiency_set(const DimensionInvariants& inv, int r) {
    require_generic_dims(inv);
    const auto [u, v] = other_views(r);
    const int zero_cap_u = inv.j(r, u) - inv.alpha[u - 1] - 1;
    const int zero_cap_v = inv.j(r, v) - inv.alpha[v - 1] - 1;

    const int alpha_r = inv.alpha[r - 1];
    const std::array<int, 3> caps = mode_band_caps(inv, r);
    std::vector<std::array<int, 3>> out;
    std::array<int, 3> x{};
    for (x[0] = 0; x[0] <= std::min(caps[0], alpha_r); ++x[0]) {
        for (x[1] = 0; x[1] <= std::min(caps[1], alpha_r - x[0]); ++x[1]) {
            x[2] = alpha_r - x[0] - x[1];
            if (x[2] > caps[2]) continue;
            // a row vanishes when a band selection is so small that every
            // completion from the other blocks repeats a column
            if (x[1] <= zero_cap_u || x[2] <= zero_cap_v) out.push_back(x);
        }
    }
    return out;
}

namespace {

// Number of admissible (x1, x_t) completions for each constrained value of
// the window band; `literal` switches to the published case table.
std::int64_t window_count(const DimensionInvariants& inv, int r, int s, int t, bool literal) {
    const int alpha_r = inv.alpha[r - 1];
    const int lo = std::max(0, alpha_r - inv.i - inv.j(r, t));
    const int hi = inv.j(r, s) - inv.alpha[s - 1] - 1;
    std::int64_t total = 0;
    for (int a_s = lo; a_s <= hi; ++a_s) {
        const int remaining = alpha_r - a_s;  // split between the i band and the t band
        if (!literal) {
            const int count = std::min(inv.i, remaining) - std::max(0, remaining - inv.j(r, t)) + 1;
            if (count > 0) total += count;
            continue;
        }
        const int m1 = std::min(inv.i, remaining);
        const int m2 = std::min(inv.j(r, t), remaining);
        if (m1 == remaining && m2 == remaining) {
            total += remaining + 1;
        } else if (m1 == inv.i && m2 == remaining) {
            total += inv.i + 1;
        } else if (m1 == remaining && m2 == inv.j(r, t)) {
            total += inv.j(r, s) + 1;  // published with the s band; the t band is what bounds it
        } else {
            total += std::abs(inv.i - alpha_r + a_s + inv.j(r, t)) + 1;
        }
    }
    return total;
}

std::int64_t deficiency_count(const DimensionInvariants& inv, int r, bool literal) {
    const std::vector<int> satisfied = zero_row_conditions(inv, r);
    if (satisfied.empty()) throw SetupError("deficiency count: no zero-row condition satisfied");
    const auto [u, v] = other_views(r);
    std::int64_t total = 0;
    // With both conditions satisfied the two windows are disjoint as row
    // sets (a shared row would need x1 > i), so the counts add up.
    for (int s : satisfied) {
        const int t = (s == u) ? v : u;
        total += window_count(inv, r, s, t, literal);
    }
    return total;
}

}  // namespace

std::int64_t deficiency_count_formula(const DimensionInvariants& inv, int r) {
    return deficiency_count(inv, r, false);
}

std::int64_t deficiency_count_paper_literal(const DimensionInvariants& inv, int r) {
    return deficiency_count(inv, r, true);
}

MultilinearRankResult multilinear_rank(const DimensionInvariants& inv) {
    require_generic_dims(inv);
    MultilinearRankResult result;
    for (int r = 1; r <= 3; ++r) {
        RankReport& report = result.reports[r - 1];
        report.mode = r;
        report.n = inv.n[r - 1];
        report.deficiency_triples = deficiency_set(inv, r);
        const std::array<int, 3> caps = mode_band_caps(inv, r);
        report.deficiency = 0;
        for (const auto& x : report.deficiency_triples) {
            report.deficiency += binom(caps[0], x[0]) * binom(caps[1], x[1]) * binom(caps[2], x[2]);
        }
        report.formula_rank = report.n - report.deficiency;
        report.zero_rows = zero_rows(inv, r);
        result.frank[r - 1] = report.formula_rank;
    }
    return result;
}

std::vector<std::int64_t> zero_rows(const DimensionInvariants& inv, int r) {
    const auto triples = deficiency_set(inv, r);
    const std::array<int, 3> caps = mode_band_caps(inv, r);
    const int universe = inv.h[r - 1] + 1;  // = caps[0] + caps[1] + caps[2]
    const std::array<int, 3> band_offset = {0, caps[0], caps[0] + caps[1]};

    std::vector<std::int64_t> rows;
    for (const auto& x : triples) {
        const auto picks0 = all_subsets(x[0], caps[0]);
        const auto picks1 = all_subsets(x[1], caps[1]);
        const auto picks2 = all_subsets(x[2], caps[2]);
        for (const auto& p0 : picks0) {
            for (const auto& p1 : picks1) {
                for (const auto& p2 : picks2) {
                    MultiIndex chosen;
                    chosen.universe = universe;
                    for (int e : p0.elements) chosen.elements.push_back(band_offset[0] + e);
                    for (int e : p1.elements) chosen.elements.push_back(band_offset[1] + e);
                    for (int e : p2.elements) chosen.elements.push_back(band_offset[2] + e);
                    rows.push_back(rank_lex(complement(chosen)));
                }
            }
        }
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

namespace {

// Exact row reduction of a flattening read in place from the tensor storage;
// a row is copied out only when elimination actually has to modify it, so
// the sparse canonical tensors never pay for a dense matrix copy.  Agrees
// with rank(flatten(t, mode).matrix) entry for entry (same layout, same
// pivoting), which the tests assert.
std::int64_t flattening_rank(const Tensor3<Rational>& t, int mode) {
    const auto& d = t.dims();
    const std::size_t n1 = d[0], n2 = d[1], n3 = d[2];
    int nrows, cols;
    switch (mode) {
        case 1:
            nrows = d[0];
            cols = d[1] * d[2];
            break;
        case 2:
            nrows = d[1];
            cols = d[2] * d[0];
            break;
        case 3:
            nrows = d[2];
            cols = d[0] * d[1];
            break;
        default:
            throw DimensionError("flattening_rank: mode must be 1, 2 or 3");
    }

    const Rational* base = t.data().data();
    auto view = [&](int row, int c) -> const Rational& {
        if (mode == 1) return base[(static_cast<std::size_t>(row) * n2 + c % n2) * n3 + c / n2];
        if (mode == 2) return base[((static_cast<std::size_t>(c) / n3) * n2 + row) * n3 + c % n3];
        return base[((static_cast<std::size_t>(c) % n1) * n2 + c / n1) * n3 + row];
    };

    std::vector<std::vector<Rational>> owned(nrows);
    std::vector<int> slot(nrows);
    for (int i = 0; i < nrows; ++i) slot[i] = i;
    auto entry = [&](int logical, int c) -> const Rational& {
        const int phys = slot[logical];
        return owned[phys].empty() ? view(phys, c) : owned[phys][c];
    };
    auto materialize = [&](int logical) -> std::vector<Rational>& {
        const int phys = slot[logical];
        if (owned[phys].empty() && cols > 0) {
            owned[phys].reserve(cols);
            for (int c = 0; c < cols; ++c) owned[phys].push_back(view(phys, c));
        }
        return owned[phys];
    };

    int r = 0;
    for (int c = 0; c < cols && r < nrows; ++c) {
        int p = -1;
        for (int i = r; i < nrows; ++i) {
            if (!is_zero(entry(i, c))) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(slot[p], slot[r]);
        for (int i = r + 1; i < nrows; ++i) {
            if (is_zero(entry(i, c))) continue;
            const Rational factor = entry(i, c) / entry(r, c);
            auto& target = materialize(i);
            for (int j = c; j < cols; ++j) target[j] -= factor * entry(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace

std::array<std::int64_t, 3> oracle_frank(const GrassmannTensor& gt) {
    std::array<std::int64_t, 3> out{};
    for (int mode = 1; mode <= 3; ++mode) {
        out[mode - 1] = flattening_rank(gt.tensor, mode);
    }
    return out;
}

}  // namespace grasstensor
