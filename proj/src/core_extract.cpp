#include "grasstensor/core_extract.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace grasstensor {

namespace {

Eigen::MatrixXcd to_eigen(const Matrix<Complex>& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

Matrix<Complex> from_eigen(const Eigen::MatrixXcd& m) {
    Matrix<Complex> out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

double max_abs_deviation_from_identity(const Eigen::MatrixXcd& m) {
    double worst = 0.0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const Complex expected = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            worst = std::max(worst, std::abs(m(r, c) - expected));
        }
    return worst;
}

double relative_error(const Tensor3<Complex>& got, const Tensor3<Complex>& want) {
    if (got.dims() != want.dims()) return std::numeric_limits<double>::infinity();
    double diff = 0.0, ref = 0.0;
    for (std::size_t e = 0; e < want.size(); ++e) {
        diff += std::norm(got.data()[e] - want.data()[e]);
        ref += std::norm(want.data()[e]);
    }
    return ref == 0.0 ? std::sqrt(diff) : std::sqrt(diff / ref);
}

}  // namespace

Matrix<Complex> adjoint(const Matrix<Complex>& m) {
    Matrix<Complex> out(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
    return out;
}

CoreDecomposition hosvd_core(const Tensor3<Complex>& t,
                             std::optional<std::array<int, 3>> forced_ranks) {
    constexpr double kSigmaRelTol = 1e-10;
    CoreDecomposition out;
    out.method = CoreMethod::hosvd;

    if (frobenius_norm(t) == 0.0) {
        out.empty_input = true;
        out.core = Tensor3<Complex>(0, 0, 0);
        for (int m = 0; m < 3; ++m) out.factors[m] = Matrix<Complex>(t.dims()[m], 0);
        return out;
    }

    for (int mode = 1; mode <= 3; ++mode) {
        const Eigen::MatrixXcd flat = to_eigen(flatten(t, mode).matrix);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(flat, Eigen::ComputeThinU);
        const auto& sigma = svd.singularValues();
        int r;
        if (forced_ranks) {
            r = (*forced_ranks)[mode - 1];
            if (r < 0 || r > sigma.size()) throw DimensionError("hosvd: forced rank out of range");
        } else {
            r = 0;
            while (r < sigma.size() && sigma(r) > kSigmaRelTol * sigma(0)) ++r;
        }
        out.factors[mode - 1] = from_eigen(svd.matrixU().leftCols(r));
    }

    out.core = multilinear_multiply(adjoint(out.factors[0]), adjoint(out.factors[1]),
                                    adjoint(out.factors[2]), t);
    const Tensor3<Complex> rebuilt =
        multilinear_multiply(out.factors[0], out.factors[1], out.factors[2], out.core);
    out.residual = relative_error(rebuilt, t);
    return out;
}

std::array<RationalMatrix, 3> canonical_selection_matrices(const Tensor3<Rational>& tc) {
    std::array<RationalMatrix, 3> u;
    for (int mode = 1; mode <= 3; ++mode) {
        const std::vector<int> keep = nonzero_slices(tc, mode);
        RationalMatrix sel(tc.dims()[mode - 1], static_cast<int>(keep.size()));
        for (int c = 0; c < static_cast<int>(keep.size()); ++c) sel(keep[c] - 1, c) = 1;
        u[mode - 1] = sel;
    }
    return u;
}

Tensor3<Rational> canonical_core(const Tensor3<Rational>& tc) {
    const std::vector<int> keep1 = nonzero_slices(tc, 1);
    const std::vector<int> keep2 = nonzero_slices(tc, 2);
    const std::vector<int> keep3 = nonzero_slices(tc, 3);
    Tensor3<Rational> core(static_cast<int>(keep1.size()), static_cast<int>(keep2.size()),
                           static_cast<int>(keep3.size()));
    for (int i = 0; i < core.dims()[0]; ++i)
        for (int j = 0; j < core.dims()[1]; ++j)
            for (int k = 0; k < core.dims()[2]; ++k)
                core.at(i, j, k) = tc.at(keep1[i] - 1, keep2[j] - 1, keep3[k] - 1);
    return core;
}

PullbackResult pullback_core(const CanonicalTransform& ct, const Tensor3<Rational>& tc) {
    PullbackResult out;
    out.data.U = canonical_selection_matrices(tc);
    out.data.Cc = canonical_core(tc);

    for (int m = 0; m < 3; ++m) {
        const RationalMatrix mj_exact = ct.Vinv[m] * out.data.U[m];
        const Eigen::MatrixXcd mj = to_eigen(to_complex(mj_exact));
        const int r = static_cast<int>(mj.cols());

        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mj);
        const Eigen::VectorXd sigma = svd.singularValues();
        if (r > 0 && sigma(r - 1) <= 0.0)
            throw InternalError("pullback: V^{-1} U lost full column rank");

        // Eigenvectors of M*M, eigenvalues descending, each column phased so
        // its largest component is real positive; the eigendecomposition is
        // only determined up to these choices.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(mj.adjoint() * mj);
        if (eig.info() != Eigen::Success)
            throw InternalError("pullback: eigendecomposition failed");
        Eigen::MatrixXcd e(r, r);
        for (int c = 0; c < r; ++c) e.col(c) = eig.eigenvectors().col(r - 1 - c);
        for (int c = 0; c < r; ++c) {
            int arg = 0;
            for (int row = 1; row < r; ++row)
                if (std::abs(e(row, c)) > std::abs(e(arg, c))) arg = row;
            const Complex pivot = e(arg, c);
            if (std::abs(pivot) > 0.0) e.col(c) *= std::conj(pivot) / std::abs(pivot);
        }

        const Eigen::VectorXcd d = sigma.head(r).cast<Complex>();
        const Eigen::MatrixXcd b = e * d.cwiseInverse().asDiagonal();
        out.data.B[m] = from_eigen(b);
        out.data.Binv[m] = from_eigen(Eigen::MatrixXcd(d.asDiagonal() * e.adjoint()));
        out.data.S[m] = from_eigen(mj * b);
    }

    out.decomposition.method = CoreMethod::canonical;
    out.decomposition.factors = out.data.S;
    out.decomposition.core = multilinear_multiply(out.data.Binv[0], out.data.Binv[1],
                                                  out.data.Binv[2], to_complex(out.data.Cc));

    // T = (V^{-1}) . tc is the original tensor; the diagram closes with
    // (S1, S2, S3) . C = T.
    const Tensor3<Rational> original =
        multilinear_multiply(ct.Vinv[0], ct.Vinv[1], ct.Vinv[2], tc);
    const Tensor3<Complex> rebuilt =
        multilinear_multiply(out.data.S[0], out.data.S[1], out.data.S[2],
                             out.decomposition.core);
    out.decomposition.residual = relative_error(rebuilt, to_complex(original));
    return out;
}

CoreAxiomReport verify_core_axioms(const Tensor3<Complex>& t, const CoreDecomposition& cd,
                                   double tol, const std::array<int, 3>& expected_dims) {
    CoreAxiomReport report;
    for (int m = 0; m < 3; ++m) {
        const Eigen::MatrixXcd f = to_eigen(cd.factors[m]);
        report.semi_orthogonality[m] = max_abs_deviation_from_identity(f.adjoint() * f);
    }
    const Tensor3<Complex> projected = multilinear_multiply(
        adjoint(cd.factors[0]), adjoint(cd.factors[1]), adjoint(cd.factors[2]), t);
    report.project_residual = relative_error(projected, cd.core);
    const Tensor3<Complex> rebuilt =
        multilinear_multiply(cd.factors[0], cd.factors[1], cd.factors[2], cd.core);
    report.reconstruct_residual = relative_error(rebuilt, t);
    report.dims_match = cd.core.dims() == expected_dims;
    report.passed = report.dims_match && report.project_residual <= tol &&
                    report.reconstruct_residual <= tol &&
                    report.semi_orthogonality[0] <= tol && report.semi_orthogonality[1] <= tol &&
                    report.semi_orthogonality[2] <= tol;
    return report;
}

}  // namespace grasstensor
