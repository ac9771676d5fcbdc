#ifndef GRASSTENSOR_MLRANK_HPP
#define GRASSTENSOR_MLRANK_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "grasstensor/grassmann.hpp"

namespace grasstensor {

// Closed-form multilinear rank of trifocal Grassmann tensors under the
// genericity assumption, plus the exact oracle on flattenings.
//
// For mode r the rows of the canonical flattening correspond to column
// selections (x1, x2, x3) from the three identity bands of block r of the
// canonical matrix; the bands have heights (i, j_{r,u}, j_{r,v}) with u < v
// the other two views.  A row is zero exactly when one of its non-i band
// counts is small enough that every completing selection is forced to repeat
// a column: x_s <= j_{r,s} - alpha_s - 1 for s in {u, v}.

struct RankReport {
    int mode = 0;
    std::int64_t n = 0;
    std::vector<std::array<int, 3>> deficiency_triples;
    std::int64_t deficiency = 0;    // binomial-weighted count of zero rows
    std::int64_t formula_rank = 0;  // n - deficiency
    std::optional<std::int64_t> oracle_rank;
    std::vector<std::int64_t> zero_rows;  // 1-based, ascending
};

struct MultilinearRankResult {
    std::array<std::int64_t, 3> frank{0, 0, 0};
    std::array<RankReport, 3> reports;
};

/// Band heights (i, j_{r,u}, j_{r,v}) of block r, u < v the other views.
std::array<int, 3> mode_band_caps(const DimensionInvariants& inv, int r);

/// View indices s (ascending) whose zero-row inequality
///   j_{r,s} - alpha_s - 1 >= max(0, alpha_r - i - j_{r,t})
/// is satisfied for mode r.  Empty means the mode-r flattening has full
/// rank.  Usually at most one condition holds, but both can: the two
/// windows then contribute disjoint sets of zero rows (no row selection can
/// sit in both windows, since that would need x1 > i).  Requires i >= 0.
std::vector<int> zero_row_conditions(const DimensionInvariants& inv, int r);

/// All band-selection triples indexing zero rows of the canonical mode-r
/// flattening, in lexicographic order; empty iff the rank is maximal.
std::vector<std::array<int, 3>> deficiency_set(const DimensionInvariants& inv, int r);

/// Closed-form cardinality of deficiency_set: for each satisfied zero-row
/// condition, sum over the constrained band count the number of admissible
/// completions.  Throws SetupError when no condition is satisfied.
std::int64_t deficiency_count_formula(const DimensionInvariants& inv, int r);

/// The cardinality expression with its published case table taken verbatim
/// (including the suspect "j_{r,s}+1" case).  Kept for comparison against
/// the enumeration; see deficiency_count_formula for the corrected version.
std::int64_t deficiency_count_paper_literal(const DimensionInvariants& inv, int r);

/// Formula multilinear rank for all three modes.  Requires i >= 0.
MultilinearRankResult multilinear_rank(const DimensionInvariants& inv);

/// 1-based indices of the vanishing rows of the canonical mode-r flattening:
/// rank_lex of the complement of every admissible band selection.
std::vector<std::int64_t> zero_rows(const DimensionInvariants& inv, int r);

/// Exact flattening ranks (rk T1, rk T2, rk T3); defined for any setup,
/// generic or not.
std::array<std::int64_t, 3> oracle_frank(const GrassmannTensor& gt);

}  // namespace grasstensor

#endif
