#ifndef GRASSTENSOR_CORE_EXTRACT_HPP
#define GRASSTENSOR_CORE_EXTRACT_HPP

#include <array>
#include <optional>

#include "grasstensor/geometry.hpp"
#include "grasstensor/tensor3.hpp"

namespace grasstensor {

enum class CoreMethod { hosvd, canonical };

/// Core tensor plus semi-orthogonal factors: (factors*) . t = core and
/// (factors) . core = t within `residual` relative Frobenius error.
struct CoreDecomposition {
    Tensor3<Complex> core;
    std::array<Matrix<Complex>, 3> factors;  // n_j x r_j, semi-orthogonal
    CoreMethod method = CoreMethod::hosvd;
    double residual = 0.0;
    bool empty_input = false;  // zero tensor: no core exists
};

/// Compact SVD of each flattening truncated at the numerical rank (or at
/// `forced_ranks` when the exact multilinear rank is known, which overrides
/// the threshold).  Singular values are kept while sigma > 1e-10 * sigma_max.
CoreDecomposition hosvd_core(const Tensor3<Complex>& t,
                             std::optional<std::array<int, 3>> forced_ranks = std::nullopt);

/// Selection matrices of a canonical tensor: U_j has the standard basis
/// vectors of the nonzero mode-j slices as columns, so U_j^T deletes the
/// zero rows of the mode-j flattening.
std::array<RationalMatrix, 3> canonical_selection_matrices(const Tensor3<Rational>& tc);

/// The core of a canonical tensor: all zero faces deleted in the three
/// directions; equals (U1^T, U2^T, U3^T) . tc exactly.
Tensor3<Rational> canonical_core(const Tensor3<Rational>& tc);

/// The canonical-route pullback data: with M_j = V_j^{-1} U_j,
/// B_j = E_j D_j^{-1} built from the singular values D_j of M_j and the
/// eigenvector matrix E_j of M_j* M_j; S_j = M_j B_j is semi-orthogonal and
/// C = (B_1^{-1}, B_2^{-1}, B_3^{-1}) . C^c is a core of the original tensor.
struct CanonicalCoreData {
    std::array<RationalMatrix, 3> U;
    std::array<Matrix<Complex>, 3> B;
    std::array<Matrix<Complex>, 3> Binv;  // = D_j E_j*, since E_j is unitary
    std::array<Matrix<Complex>, 3> S;
    Tensor3<Rational> Cc;
};

struct PullbackResult {
    CoreDecomposition decomposition;  // core C with factors S_j
    CanonicalCoreData data;
};

/// Pulls the canonical core back to a core of the original tensor
/// T = (V^{-1}) . tc and checks the commuting diagram numerically.
PullbackResult pullback_core(const CanonicalTransform& ct, const Tensor3<Rational>& tc);

struct CoreAxiomReport {
    std::array<double, 3> semi_orthogonality{0, 0, 0};  // max |F*F - I|
    double project_residual = 0.0;                      // |(F*) . t - core| / |core|
    double reconstruct_residual = 0.0;                  // |(F) . core - t| / |t|
    bool dims_match = false;
    bool passed = false;
};

/// Checks the defining properties of a core against tolerance `tol`;
/// `expected_dims` is the known multilinear rank.
CoreAxiomReport verify_core_axioms(const Tensor3<Complex>& t, const CoreDecomposition& cd,
                                   double tol, const std::array<int, 3>& expected_dims);

Matrix<Complex> adjoint(const Matrix<Complex>& m);

}  // namespace grasstensor

#endif
