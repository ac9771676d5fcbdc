#include "grasstensor/core_extract.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "grasstensor/grassmann.hpp"
#include "grasstensor/mlrank.hpp"
#include "../reference_data.hpp"
#include "../test_util.hpp"

using namespace grasstensor;

namespace {

constexpr double kTol = 1e-9;

Tensor3<Complex> worked_float() { return to_complex(testdata::worked_tensor()); }

}  // namespace

TEST(Hosvd, RankOneTensor) {
    // a (x) b (x) c with unit direction choices; the single core entry
    // carries the product of the norms
    const std::vector<double> a{3.0, 4.0}, b{1.0, 0.0, 0.0}, c{0.0, 2.0};
    Tensor3<Complex> t(2, 3, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 2; ++k) t.at(i, j, k) = Complex(a[i] * b[j] * c[k], 0.0);
    const auto cd = hosvd_core(t);
    ASSERT_EQ(cd.core.dims(), (std::array<int, 3>{1, 1, 1}));
    EXPECT_NEAR(std::abs(cd.core.at(0, 0, 0)), 5.0 * 1.0 * 2.0, 1e-12);
    EXPECT_LT(cd.residual, 1e-12);
}

TEST(Hosvd, WorkedTensor) {
    const auto cd = hosvd_core(worked_float());
    EXPECT_EQ(cd.core.dims(), (std::array<int, 3>{5, 3, 3}));
    EXPECT_LT(cd.residual, kTol);
    const auto axioms = verify_core_axioms(worked_float(), cd, kTol, {5, 3, 3});
    EXPECT_TRUE(axioms.passed);
}

TEST(Hosvd, ThresholdAndForcedRanksAgreeOnExactTensors) {
    const auto free_rank = hosvd_core(worked_float());
    const auto forced = hosvd_core(worked_float(), std::array<int, 3>{5, 3, 3});
    EXPECT_EQ(free_rank.core.dims(), forced.core.dims());
}

TEST(Hosvd, FirstTableExampleCoreDims) {
    const auto inv = invariants_from_dims(7, {6, 4, 4}, {3, 3, 2});
    const auto gt = build(canonical_setup(inv));
    const auto cd = hosvd_core(to_complex(gt.tensor));
    EXPECT_EQ(cd.core.dims(), (std::array<int, 3>{31, 10, 10}));
    const auto axioms = verify_core_axioms(to_complex(gt.tensor), cd, kTol, {31, 10, 10});
    EXPECT_TRUE(axioms.passed);
}

TEST(Hosvd, ZeroTensorIsFlagged) {
    const auto cd = hosvd_core(Tensor3<Complex>(2, 2, 2));
    EXPECT_TRUE(cd.empty_input);
    EXPECT_EQ(cd.core.dims(), (std::array<int, 3>{0, 0, 0}));
}

TEST(SelectionMatrices, WorkedCanonicalTensor) {
    const auto u = canonical_selection_matrices(testdata::worked_canonical_tensor());
    EXPECT_TRUE(u[0] == testdata::worked_u1());
    EXPECT_TRUE(u[1] == RationalMatrix::identity(3));
    EXPECT_TRUE(u[2] == RationalMatrix::identity(3));
}

TEST(SelectionMatrices, FullRankTensorGivesIdentities) {
    std::mt19937_64 rng(7);
    Tensor3<Rational> t(2, 2, 2);
    for (auto& v : t.data()) v = Rational(1 + static_cast<int>(rng() % 5));
    const auto u = canonical_selection_matrices(t);
    EXPECT_TRUE(u[0] == RationalMatrix::identity(2));
}

TEST(SelectionMatrices, FirstTableExampleOmitsTheZeroRows) {
    const auto inv = invariants_from_dims(7, {6, 4, 4}, {3, 3, 2});
    const auto gt = build(canonical_setup(inv));
    const auto u = canonical_selection_matrices(gt.tensor);
    ASSERT_EQ(u[0].rows(), 35);
    ASSERT_EQ(u[0].cols(), 31);
    // columns skip rows 20, 30, 34, 35 (1-based)
    const std::vector<std::int64_t> zero = {20, 30, 34, 35};
    int col = 0;
    for (int row = 1; row <= 35; ++row) {
        if (std::find(zero.begin(), zero.end(), row) != zero.end()) continue;
        EXPECT_EQ(u[0](row - 1, col), 1);
        ++col;
    }
}

TEST(CanonicalCore, WorkedExampleMatchesPrintedDecomposition) {
    const auto core = canonical_core(testdata::worked_canonical_tensor());
    ASSERT_EQ(core.dims(), (std::array<int, 3>{5, 3, 3}));
    EXPECT_TRUE(core == testdata::worked_canonical_core());
}

TEST(CanonicalCore, EqualsSelectionProjection) {
    const auto tc = testdata::worked_canonical_tensor();
    const auto u = canonical_selection_matrices(tc);
    const auto projected =
        multilinear_multiply(u[0].transpose(), u[1].transpose(), u[2].transpose(), tc);
    EXPECT_TRUE(projected == canonical_core(tc));
}

TEST(CanonicalCore, NoZeroSlicesMeansUnchanged) {
    const auto core = canonical_core(testdata::worked_canonical_core());
    EXPECT_TRUE(core == testdata::worked_canonical_core());
}

TEST(CanonicalCore, ZeroTensorCollapses) {
    const auto core = canonical_core(Tensor3<Rational>(2, 3, 2));
    EXPECT_EQ(core.dims(), (std::array<int, 3>{0, 0, 0}));
}

TEST(Pullback, WorkedExampleSatisfiesEveryBound) {
    const auto setup = testdata::worked_setup();
    const auto gt = build(setup);
    const auto ct = canonicalize(setup);
    const auto tc = multilinear_multiply(ct.V[0], ct.V[1], ct.V[2], gt.tensor);
    EXPECT_TRUE(equal_up_to_scale(tc, testdata::worked_canonical_tensor()).equal);

    const auto pulled = pullback_core(ct, tc);
    for (int m = 0; m < 3; ++m) {
        const auto s = pulled.data.S[m];
        const auto gram = adjoint(s) * s;
        for (int r = 0; r < gram.rows(); ++r)
            for (int c = 0; c < gram.cols(); ++c)
                EXPECT_NEAR(std::abs(gram(r, c) - (r == c ? Complex(1) : Complex(0))), 0.0, 1e-10);
    }
    EXPECT_LT(pulled.decomposition.residual, kTol);

    const auto axioms = verify_core_axioms(worked_float(), pulled.decomposition, kTol, {5, 3, 3});
    EXPECT_TRUE(axioms.passed);
}

TEST(Pullback, CommutingDiagramCloses) {
    const auto setup = testdata::worked_setup();
    const auto gt = build(setup);
    const auto ct = canonicalize(setup);
    const auto tc = multilinear_multiply(ct.V[0], ct.V[1], ct.V[2], gt.tensor);
    const auto pulled = pullback_core(ct, tc);

    // (S . B^{-1} . U^T . V) applied to the tensor lands back on the tensor
    const auto t_float = worked_float();
    auto chased = multilinear_multiply(to_complex(ct.V[0]), to_complex(ct.V[1]),
                                       to_complex(ct.V[2]), t_float);
    const auto& u = pulled.data.U;
    chased = multilinear_multiply(to_complex(u[0].transpose()), to_complex(u[1].transpose()),
                                  to_complex(u[2].transpose()), chased);
    chased = multilinear_multiply(pulled.data.Binv[0], pulled.data.Binv[1], pulled.data.Binv[2],
                                  chased);
    chased = multilinear_multiply(pulled.data.S[0], pulled.data.S[1], pulled.data.S[2], chased);

    double diff = 0.0, ref = 0.0;
    for (std::size_t e = 0; e < t_float.size(); ++e) {
        diff += std::norm(chased.data()[e] - t_float.data()[e]);
        ref += std::norm(t_float.data()[e]);
    }
    EXPECT_LT(std::sqrt(diff / ref), kTol);
}

TEST(Pullback, IdentityTransformGivesOrthogonalFactors) {
    const auto tc = testdata::worked_canonical_tensor();
    CanonicalTransform ct;
    for (int m = 0; m < 3; ++m) {
        const int n = tc.dims()[m];
        ct.V[m] = RationalMatrix::identity(n);
        ct.Vinv[m] = RationalMatrix::identity(n);
    }
    const auto pulled = pullback_core(ct, tc);
    EXPECT_LT(pulled.decomposition.residual, 1e-12);
    for (int m = 0; m < 3; ++m) {
        const auto gram = adjoint(pulled.data.S[m]) * pulled.data.S[m];
        for (int r = 0; r < gram.rows(); ++r)
            for (int c = 0; c < gram.cols(); ++c)
                EXPECT_NEAR(std::abs(gram(r, c) - (r == c ? Complex(1) : Complex(0))), 0.0, 1e-12);
    }
}

TEST(Pullback, RandomGenericSetupClosesTheDiagram) {
    std::mt19937_64 rng(2025);
    const auto setup = testutil::random_generic_setup(rng, 5, {2, 4, 4}, {2, 2, 2});
    const auto gt = build(setup);
    const auto ct = canonicalize(setup);
    const auto tc = multilinear_multiply(ct.V[0], ct.V[1], ct.V[2], gt.tensor);
    const auto pulled = pullback_core(ct, tc);
    EXPECT_LT(pulled.decomposition.residual, kTol);
    const auto frank = multilinear_rank(invariants(setup)).frank;
    const auto axioms = verify_core_axioms(
        to_complex(gt.tensor), pulled.decomposition, kTol,
        {static_cast<int>(frank[0]), static_cast<int>(frank[1]), static_cast<int>(frank[2])});
    EXPECT_TRUE(axioms.passed);
}

TEST(CoreEquivalence, BothRoutesShareDimensions) {
    const auto setup = testdata::worked_setup();
    const auto gt = build(setup);
    const auto hosvd = hosvd_core(to_complex(gt.tensor));
    const auto ct = canonicalize(setup);
    const auto tc = multilinear_multiply(ct.V[0], ct.V[1], ct.V[2], gt.tensor);
    const auto pulled = pullback_core(ct, tc);
    EXPECT_EQ(hosvd.core.dims(), pulled.decomposition.core.dims());
}

TEST(VerifyCoreAxioms, DetectsOverTruncation) {
    const auto cd = hosvd_core(worked_float(), std::array<int, 3>{4, 3, 3});
    const auto axioms = verify_core_axioms(worked_float(), cd, kTol, {5, 3, 3});
    EXPECT_FALSE(axioms.passed);
    EXPECT_FALSE(axioms.dims_match);
    EXPECT_GT(axioms.reconstruct_residual, 1e-3);
}
