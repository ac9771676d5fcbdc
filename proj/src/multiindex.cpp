#include "grasstensor/multiindex.hpp"

#include <algorithm>
#include <functional>

#include "grasstensor/errors.hpp"

namespace grasstensor {

bool MultiIndex::valid() const {
    int prev = 0;
    for (int e : elements) {
        if (e <= prev || e > universe) return false;
        prev = e;
    }
    return true;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;  // exact at every step
    }
    return result;
}

std::int64_t rank_lex(const MultiIndex& idx) {
    if (!idx.valid()) throw ParseError("invalid multi-index");
    const int p = static_cast<int>(idx.elements.size());
    const int n = idx.universe;
    // Count subsets strictly before idx: those agreeing on a prefix and then
    // taking a smaller element.
    std::int64_t before = 0;
    int prev = 0;
    for (int m = 0; m < p; ++m) {
        for (int v = prev + 1; v < idx.elements[m]; ++v) {
            before += binom(n - v, p - m - 1);
        }
        prev = idx.elements[m];
    }
    return before + 1;
}

MultiIndex unrank_lex(std::int64_t r, int p, int n) {
    if (p < 0 || n < 0 || r < 1 || r > binom(n, p)) throw ParseError("unrank_lex: rank out of range");
    MultiIndex idx;
    idx.universe = n;
    idx.elements.reserve(p);
    std::int64_t remaining = r - 1;
    int v = 1;
    for (int m = 0; m < p; ++m) {
        while (true) {
            const std::int64_t block = binom(n - v, p - m - 1);
            if (remaining < block) break;
            remaining -= block;
            ++v;
        }
        idx.elements.push_back(v);
        ++v;
    }
    return idx;
}

MultiIndex complement(const MultiIndex& idx) {
    if (!idx.valid()) throw ParseError("invalid multi-index");
    MultiIndex out;
    out.universe = idx.universe;
    out.elements.reserve(idx.universe - idx.elements.size());
    auto it = idx.elements.begin();
    for (int v = 1; v <= idx.universe; ++v) {
        if (it != idx.elements.end() && *it == v) {
            ++it;
        } else {
            out.elements.push_back(v);
        }
    }
    return out;
}

std::vector<MultiIndex> all_subsets(int p, int n) {
    std::vector<MultiIndex> out;
    if (p < 0 || p > n) return out;
    out.reserve(static_cast<std::size_t>(binom(n, p)));
    MultiIndex idx;
    idx.universe = n;
    idx.elements.resize(p);
    for (int m = 0; m < p; ++m) idx.elements[m] = m + 1;
    while (true) {
        out.push_back(idx);
        // next combination in lex order
        int m = p - 1;
        while (m >= 0 && idx.elements[m] == n - (p - 1 - m)) --m;
        if (m < 0) break;
        ++idx.elements[m];
        for (int t = m + 1; t < p; ++t) idx.elements[t] = idx.elements[t - 1] + 1;
    }
    return out;
}

std::vector<std::vector<int>> enumerate_compositions(int total, const std::vector<int>& caps) {
    std::vector<std::vector<int>> out;
    if (total < 0) return out;
    std::vector<int> current(caps.size(), 0);
    // depth-first over slots; lexicographic because lower values come first
    std::function<void(std::size_t, int)> recurse = [&](std::size_t slot, int remaining) {
        if (slot == caps.size()) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        const int cap = std::min(caps[slot], remaining);
        for (int v = 0; v <= cap; ++v) {
            current[slot] = v;
            recurse(slot + 1, remaining - v);
        }
        current[slot] = 0;
    };
    recurse(0, total);
    return out;
}

}  // namespace grasstensor
