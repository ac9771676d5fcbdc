#include "grasstensor/exact_linalg.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "grasstensor/multiindex.hpp"

namespace grasstensor {

namespace {

// det of a matrix whose columns each carry at most one nonzero entry:
// zero if a column is empty or two columns share a row, otherwise the
// product of entries times the parity of the row permutation.
std::optional<Rational> det_if_unit_columns(const RationalMatrix& m) {
    const int n = m.rows();
    std::vector<int> row_of_col(n, -1);
    for (int c = 0; c < n; ++c) {
        int found = -1;
        for (int r = 0; r < n; ++r) {
            if (!is_zero(m(r, c))) {
                if (found >= 0) return std::nullopt;  // dense column: not this path
                found = r;
            }
        }
        if (found < 0) return Rational(0);
        row_of_col[c] = found;
    }
    std::vector<bool> seen(n, false);
    for (int c = 0; c < n; ++c) {
        if (seen[row_of_col[c]]) return Rational(0);
        seen[row_of_col[c]] = true;
    }
    int inversions = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (row_of_col[a] > row_of_col[b]) ++inversions;
    Rational product = (inversions % 2 == 0) ? Rational(1) : Rational(-1);
    for (int c = 0; c < n; ++c) product *= m(row_of_col[c], c);
    return product;
}

Rational det_small(const RationalMatrix& m) {
    switch (m.rows()) {
        case 0:
            return Rational(1);
        case 1:
            return m(0, 0);
        case 2:
            return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        default:
            return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
}

// Fraction-free elimination over the integers after clearing denominators
// row by row; keeps intermediate growth polynomial.
Rational det_bareiss(const RationalMatrix& m) {
    const int n = m.rows();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (int r = 0; r < n; ++r) {
        Integer lcm = 1;
        for (int c = 0; c < n; ++c) {
            const Integer d = denominator(m(r, c));
            lcm = boost::multiprecision::lcm(lcm, d);
        }
        scale *= lcm;
        for (int c = 0; c < n; ++c) {
            a[r][c] = numerator(m(r, c)) * (lcm / denominator(m(r, c)));
        }
    }

    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (a[r][k] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational result(a[n - 1][n - 1], scale);
    return sign > 0 ? result : Rational(-result);
}

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(std::vector<std::vector<Rational>>& rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < cols && r < nrows; ++c) {
        int p = -1;
        for (int i = r; i < nrows; ++i) {
            if (!is_zero(rows[i][c])) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(rows[p], rows[r]);
        const Rational inv_pivot = Rational(1) / rows[r][c];
        for (int j = c; j < cols; ++j) rows[r][j] *= inv_pivot;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || is_zero(rows[i][c])) continue;
            const Rational factor = rows[i][c];
            for (int j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
    return rows;
}

std::vector<std::vector<Rational>> take_rows(RationalMatrix&& m) {
    std::vector<std::vector<Rational>> rows(m.rows());
    auto& flat = m.data();
    for (int r = 0; r < m.rows(); ++r) {
        rows[r].reserve(m.cols());
        const std::size_t base = static_cast<std::size_t>(r) * m.cols();
        for (int c = 0; c < m.cols(); ++c) rows[r].push_back(std::move(flat[base + c]));
    }
    return rows;
}

int rank_of_rows(std::vector<std::vector<Rational>>& rows, int cols) {
    const int nrows = static_cast<int>(rows.size());
    int r = 0;
    for (int c = 0; c < cols && r < nrows; ++c) {
        int p = -1;
        for (int i = r; i < nrows; ++i) {
            if (!is_zero(rows[i][c])) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(rows[p], rows[r]);
        for (int i = r + 1; i < nrows; ++i) {
            if (is_zero(rows[i][c])) continue;
            const Rational factor = rows[i][c] / rows[r][c];
            for (int j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

Rational det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("det: matrix is not square");
    if (auto shortcut = det_if_unit_columns(m)) return *shortcut;
    if (m.rows() <= 3) return det_small(m);
    return det_bareiss(m);
}

int rank(const RationalMatrix& m) {
    auto rows = to_rows(m);
    return rank_of_rows(rows, m.cols());
}

int rank(RationalMatrix&& m) {
    const int cols = m.cols();
    auto rows = take_rows(std::move(m));
    return rank_of_rows(rows, cols);
}

RationalMatrix nullspace(const RationalMatrix& m) {
    auto rows = to_rows(m);
    const std::vector<int> pivots = rref(rows, m.cols());
    std::vector<int> free_cols;
    {
        auto it = pivots.begin();
        for (int c = 0; c < m.cols(); ++c) {
            if (it != pivots.end() && *it == c) {
                ++it;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    RationalMatrix basis(m.cols(), static_cast<int>(free_cols.size()));
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
        const int fc = free_cols[j];
        basis(fc, j) = 1;
        for (int pi = 0; pi < static_cast<int>(pivots.size()); ++pi) {
            basis(pivots[pi], j) = -rows[pi][fc];
        }
    }
    return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
    const int n = m.rows();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug[r][c] = m(r, c);
        aug[r][n + r] = 1;
    }
    const std::vector<int> pivots = rref(aug, 2 * n);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw DimensionError("inverse: singular matrix");
    RationalMatrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = aug[r][n + c];
    return out;
}

RationalMatrix column_space_basis(const RationalMatrix& m) {
    auto rows = to_rows(m);
    const std::vector<int> pivots = rref(rows, m.cols());
    return m.select_columns(pivots);
}

RationalMatrix intersect_column_spaces(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("intersect_column_spaces: row count mismatch");
    // (u; v) in ker[a | b]  =>  a u = -b v lies in both column spaces.
    const RationalMatrix kernel = nullspace(a.hconcat(b));
    RationalMatrix candidates(a.rows(), kernel.cols());
    for (int j = 0; j < kernel.cols(); ++j) {
        for (int r = 0; r < a.rows(); ++r) {
            Rational sum = 0;
            for (int c = 0; c < a.cols(); ++c) sum += a(r, c) * kernel(c, j);
            candidates(r, j) = sum;
        }
    }
    return column_space_basis(candidates);
}

RationalMatrix compound(const RationalMatrix& m, int p) {
    if (m.rows() != m.cols()) throw DimensionError("compound: matrix is not square");
    const int n = m.rows();
    if (p < 1 || p > n) throw DimensionError("compound: order out of range");
    const auto subsets = all_subsets(p, n);
    const int size = static_cast<int>(subsets.size());
    std::vector<std::vector<int>> zero_based(size);
    for (int s = 0; s < size; ++s) {
        zero_based[s].reserve(p);
        for (int e : subsets[s].elements) zero_based[s].push_back(e - 1);
    }
    RationalMatrix out(size, size);
    RationalMatrix sub(p, p);
    for (int ri = 0; ri < size; ++ri) {
        for (int ci = 0; ci < size; ++ci) {
            for (int a = 0; a < p; ++a)
                for (int b = 0; b < p; ++b) sub(a, b) = m(zero_based[ri][a], zero_based[ci][b]);
            out(ri, ci) = det(sub);
        }
    }
    return out;
}

}  // namespace grasstensor
