#ifndef GRASSTENSOR_MULTIINDEX_HPP
#define GRASSTENSOR_MULTIINDEX_HPP

#include <cstdint>
#include <vector>

namespace grasstensor {

// Strictly increasing multi-indices over {1..n}, 1-based everywhere.  Tensor
// axes and compound-matrix axes are ordered by rank_lex, the single ordering
// convention of the library.

struct MultiIndex {
    std::vector<int> elements;  // 1 <= e1 < e2 < ... <= universe
    int universe = 0;

    bool valid() const;
};

/// C(n,k); 0 when k < 0 or k > n.  Sizes stay far below 2^63 for every
/// dimension this library handles.
std::int64_t binom(std::int64_t n, std::int64_t k);

/// 1-based position of idx among all p-subsets of {1..n} in lexicographic
/// order.  Throws ParseError on an invalid multi-index.
std::int64_t rank_lex(const MultiIndex& idx);

/// Inverse of rank_lex: the r-th p-subset of {1..n}, 1 <= r <= C(n,p).
MultiIndex unrank_lex(std::int64_t r, int p, int n);

/// Sorted complement within {1..universe}.
MultiIndex complement(const MultiIndex& idx);

/// All p-subsets of {1..n} in lexicographic order.
std::vector<MultiIndex> all_subsets(int p, int n);

/// All tuples of non-negative integers summing to `total` with
/// componentwise bound caps[u], in lexicographic order.
std::vector<std::vector<int>> enumerate_compositions(int total, const std::vector<int>& caps);

}  // namespace grasstensor

#endif
