#include "grasstensor/exact_linalg.hpp"

#include <gtest/gtest.h>

#include <random>

#include "grasstensor/geometry.hpp"
#include "grasstensor/multiindex.hpp"
#include "../reference_data.hpp"

using namespace grasstensor;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, bool with_denominators) {
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const int num = static_cast<int>(rng() % 11) - 5;
            const int den = with_denominators ? 1 + static_cast<int>(rng() % 4) : 1;
            m(r, c) = Rational(num, den);
        }
    return m;
}

RationalMatrix random_invertible(std::mt19937_64& rng, int n) {
    while (true) {
        RationalMatrix m = random_matrix(rng, n, n, false);
        if (!is_zero(det(m))) return m;
    }
}

// independent determinant oracle: Laplace expansion along the first row
Rational det_laplace(const RationalMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m(0, 0);
    Rational total = 0;
    for (int c = 0; c < n; ++c) {
        if (is_zero(m(0, c))) continue;
        RationalMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int col = 0; col < n; ++col) {
                if (col == c) continue;
                minor(r - 1, cc++) = m(r, col);
            }
        }
        const Rational term = m(0, c) * det_laplace(minor);
        total += (c % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

}  // namespace

TEST(Det, Basics) {
    EXPECT_EQ(det(RationalMatrix::identity(3)), 1);
    EXPECT_EQ(det(RationalMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_THROW(det(RationalMatrix(2, 3)), DimensionError);
}

TEST(Det, MatchesLaplaceOracle) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 8; ++rep) {
        const RationalMatrix m = random_matrix(rng, 4 + rep % 2, 4 + rep % 2, true);
        EXPECT_EQ(det(m), det_laplace(m));
    }
}

TEST(Det, UnitColumnShortcutMatchesDense) {
    // scaled column-permutation matrices take the structural path
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 6; ++rep) {
        RationalMatrix m(5, 5);
        std::vector<int> perm{0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int c = 0; c < 5; ++c) m(perm[c], c) = Rational(1 + static_cast<int>(rng() % 5), 2);
        EXPECT_EQ(det(m), det_laplace(m));
    }
}

TEST(Det, IsMultiplicative) {
    std::mt19937_64 rng(23);
    for (int n : {4, 5}) {
        for (int rep = 0; rep < 4; ++rep) {
            const RationalMatrix a = random_matrix(rng, n, n, true);
            const RationalMatrix b = random_matrix(rng, n, n, true);
            EXPECT_EQ(det(a * b), det(a) * det(b));
        }
    }
}

TEST(Rank, Basics) {
    EXPECT_EQ(rank(RationalMatrix(4, 7)), 0);
    EXPECT_EQ(rank(RationalMatrix::identity(5)), 5);
    const auto setup = testdata::worked_setup();
    for (int v = 0; v < 3; ++v) EXPECT_EQ(rank(setup.P[v]), setup.h[v] + 1);
}

TEST(Rank, EqualsRankOfTranspose) {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        RationalMatrix m = random_matrix(rng, 3 + rep % 4, 5, true);
        // sprinkle zero rows to vary the rank
        if (rep % 3 == 0)
            for (int c = 0; c < m.cols(); ++c) m(0, c) = 0;
        EXPECT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(Nullspace, Basics) {
    EXPECT_EQ(nullspace(RationalMatrix::identity(4)).cols(), 0);
    const RationalMatrix hyperplane = {{1, 0, 0}};
    const RationalMatrix ns = nullspace(hyperplane);
    ASSERT_EQ(ns.cols(), 2);
    for (int c = 0; c < 2; ++c) EXPECT_EQ(ns(0, c), 0);
    EXPECT_EQ(rank(ns), 2);
}

TEST(Nullspace, AnnihilatesExactly) {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 8; ++rep) {
        const RationalMatrix m = random_matrix(rng, 3, 6, true);
        const RationalMatrix ns = nullspace(m);
        EXPECT_EQ(ns.cols(), 6 - rank(m));
        const RationalMatrix product = m * ns;
        for (int r = 0; r < product.rows(); ++r)
            for (int c = 0; c < product.cols(); ++c) EXPECT_EQ(product(r, c), 0);
    }
}

TEST(Nullspace, ProjectionCenterOfWorkedExample) {
    // the second projection of the worked example has a 2-dimensional center
    const auto setup = testdata::worked_setup();
    const RationalMatrix center = nullspace(setup.P[1]);
    ASSERT_EQ(center.cols(), 2);
    const RationalMatrix product = setup.P[1] * center;
    for (int r = 0; r < product.rows(); ++r)
        for (int c = 0; c < product.cols(); ++c) EXPECT_EQ(product(r, c), 0);
}

TEST(Inverse, RoundTrip) {
    std::mt19937_64 rng(59);
    const RationalMatrix m = random_invertible(rng, 5);
    EXPECT_TRUE(inverse(m) * m == RationalMatrix::identity(5));
    EXPECT_THROW(inverse(RationalMatrix(3, 3)), DimensionError);
}

TEST(IntersectColumnSpaces, Basics) {
    const RationalMatrix id3 = RationalMatrix::identity(3);
    EXPECT_EQ(rank(intersect_column_spaces(id3, id3)), 3);

    const RationalMatrix a = {{1, 0}, {0, 1}, {0, 0}};  // span{e1, e2}
    const RationalMatrix b = {{0, 0}, {1, 0}, {0, 1}};  // span{e2, e3}
    const RationalMatrix meet = intersect_column_spaces(a, b);
    ASSERT_EQ(meet.cols(), 1);
    EXPECT_EQ(meet(0, 0), 0);
    EXPECT_NE(meet(1, 0), 0);
    EXPECT_EQ(meet(2, 0), 0);

    EXPECT_THROW(intersect_column_spaces(RationalMatrix(2, 2), RationalMatrix(3, 2)),
                 DimensionError);
}

TEST(IntersectColumnSpaces, GrassmannFormula) {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 8; ++rep) {
        const RationalMatrix a = random_matrix(rng, 6, 3, false);
        const RationalMatrix b = random_matrix(rng, 6, 4, false);
        const int expected = rank(a) + rank(b) - rank(a.hconcat(b));
        EXPECT_EQ(intersect_column_spaces(a, b).cols(), expected);
    }
}

TEST(IntersectColumnSpaces, CanonicalBlocksOfFirstTableExample) {
    // k=7, h=(6,4,4): the first two canonical blocks meet in dimension i + j12 = 4
    const auto inv = invariants_from_dims(7, {6, 4, 4}, {3, 3, 2});
    const auto setup = canonical_setup(inv);
    const RationalMatrix meet =
        intersect_column_spaces(setup.P[0].transpose(), setup.P[1].transpose());
    EXPECT_EQ(meet.cols(), 4);
}

TEST(Compound, Basics) {
    EXPECT_TRUE(compound(RationalMatrix::identity(4), 2) == RationalMatrix::identity(6));

    RationalMatrix d(3, 3);
    d(0, 0) = 2;
    d(1, 1) = 3;
    d(2, 2) = 5;
    const RationalMatrix c2 = compound(d, 2);
    RationalMatrix expected(3, 3);
    expected(0, 0) = 6;   // rows {1,2}
    expected(1, 1) = 10;  // rows {1,3}
    expected(2, 2) = 15;  // rows {2,3}
    EXPECT_TRUE(c2 == expected);

    EXPECT_THROW(compound(d, 0), DimensionError);
    EXPECT_THROW(compound(d, 4), DimensionError);
}

TEST(Compound, EntryIsSelectedMinor) {
    std::mt19937_64 rng(83);
    const RationalMatrix m = random_matrix(rng, 4, 4, true);
    const RationalMatrix c = compound(m, 2);
    const auto subsets = all_subsets(2, 4);
    for (std::size_t ri = 0; ri < subsets.size(); ++ri) {
        for (std::size_t ci = 0; ci < subsets.size(); ++ci) {
            RationalMatrix sub(2, 2);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    sub(a, b) = m(subsets[ri].elements[a] - 1, subsets[ci].elements[b] - 1);
            EXPECT_EQ(c(static_cast<int>(ri), static_cast<int>(ci)), det(sub));
        }
    }
}

TEST(Compound, InverseCompound) {
    std::mt19937_64 rng(97);
    const RationalMatrix m = random_invertible(rng, 4);
    EXPECT_TRUE(compound(m, 2) * compound(inverse(m), 2) == RationalMatrix::identity(6));
}

TEST(Compound, CauchyBinet) {
    std::mt19937_64 rng(101);
    for (int n : {4, 5}) {
        const RationalMatrix a = random_matrix(rng, n, n, true);
        const RationalMatrix b = random_matrix(rng, n, n, true);
        for (int p = 2; p <= 3; ++p) {
            EXPECT_TRUE(compound(a * b, p) == compound(a, p) * compound(b, p));
        }
    }
}
