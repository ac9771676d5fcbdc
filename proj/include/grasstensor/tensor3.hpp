#ifndef GRASSTENSOR_TENSOR3_HPP
#define GRASSTENSOR_TENSOR3_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "grasstensor/matrix.hpp"

namespace grasstensor {

using Complex = std::complex<double>;

/// Dense order-3 tensor, entries stored row-major with the third index
/// fastest.  The same container serves exact rationals (construction, rank
/// oracle) and complex floats (SVD, cores).
template <typename T>
class Tensor3 {
  public:
    Tensor3() = default;
    Tensor3(int n1, int n2, int n3)
        : dims_{n1, n2, n3}, data_(static_cast<std::size_t>(n1) * n2 * n3) {
        if (n1 < 0 || n2 < 0 || n3 < 0) throw DimensionError("negative tensor dimension");
    }

    const std::array<int, 3>& dims() const { return dims_; }
    int dim(int mode) const { return dims_[mode - 1]; }
    std::size_t size() const { return data_.size(); }

    T& at(int i, int j, int k) { return data_[offset(i, j, k)]; }
    const T& at(int i, int j, int k) const { return data_[offset(i, j, k)]; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool operator==(const Tensor3& rhs) const { return dims_ == rhs.dims_ && data_ == rhs.data_; }

  private:
    std::size_t offset(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + k;
    }

    std::array<int, 3> dims_{0, 0, 0};
    std::vector<T> data_;
};

template <typename T>
struct Flattening {
    int mode = 0;
    Matrix<T> matrix;
};

/// Mode-1 flattening puts entry (i,j,k) at column (k-1)*n2 + j (1-based);
/// modes 2 and 3 follow by the cyclic shift (i,j,k) -> (j,k,i) -> (k,i,j).
template <typename T>
Flattening<T> flatten(const Tensor3<T>& t, int mode) {
    const auto& d = t.dims();
    Flattening<T> out;
    out.mode = mode;
    switch (mode) {
        case 1:
            out.matrix = Matrix<T>(d[0], d[1] * d[2]);
            for (int i = 0; i < d[0]; ++i)
                for (int j = 0; j < d[1]; ++j)
                    for (int k = 0; k < d[2]; ++k) out.matrix(i, k * d[1] + j) = t.at(i, j, k);
            break;
        case 2:
            out.matrix = Matrix<T>(d[1], d[2] * d[0]);
            for (int i = 0; i < d[0]; ++i)
                for (int j = 0; j < d[1]; ++j)
                    for (int k = 0; k < d[2]; ++k) out.matrix(j, i * d[2] + k) = t.at(i, j, k);
            break;
        case 3:
            out.matrix = Matrix<T>(d[2], d[0] * d[1]);
            for (int i = 0; i < d[0]; ++i)
                for (int j = 0; j < d[1]; ++j)
                    for (int k = 0; k < d[2]; ++k) out.matrix(k, j * d[0] + i) = t.at(i, j, k);
            break;
        default:
            throw DimensionError("flatten: mode must be 1, 2 or 3");
    }
    return out;
}

/// Inverse of flatten for the same layout convention.
template <typename T>
Tensor3<T> unflatten(const Matrix<T>& m, int mode, const std::array<int, 3>& dims) {
    Tensor3<T> t(dims[0], dims[1], dims[2]);
    switch (mode) {
        case 1:
            if (m.rows() != dims[0] || m.cols() != dims[1] * dims[2])
                throw DimensionError("unflatten: shape mismatch");
            for (int i = 0; i < dims[0]; ++i)
                for (int j = 0; j < dims[1]; ++j)
                    for (int k = 0; k < dims[2]; ++k) t.at(i, j, k) = m(i, k * dims[1] + j);
            break;
        case 2:
            if (m.rows() != dims[1] || m.cols() != dims[2] * dims[0])
                throw DimensionError("unflatten: shape mismatch");
            for (int i = 0; i < dims[0]; ++i)
                for (int j = 0; j < dims[1]; ++j)
                    for (int k = 0; k < dims[2]; ++k) t.at(i, j, k) = m(j, i * dims[2] + k);
            break;
        case 3:
            if (m.rows() != dims[2] || m.cols() != dims[0] * dims[1])
                throw DimensionError("unflatten: shape mismatch");
            for (int i = 0; i < dims[0]; ++i)
                for (int j = 0; j < dims[1]; ++j)
                    for (int k = 0; k < dims[2]; ++k) t.at(i, j, k) = m(k, j * dims[0] + i);
            break;
        default:
            throw DimensionError("unflatten: mode must be 1, 2 or 3");
    }
    return t;
}

template <typename T>
Tensor3<T> mode_multiply(const Matrix<T>& m, const Tensor3<T>& t, int mode) {
    const auto& d = t.dims();
    if (m.cols() != d[mode - 1]) throw DimensionError("mode_multiply: shape mismatch");
    std::array<int, 3> nd = d;
    nd[mode - 1] = m.rows();
    Tensor3<T> out(nd[0], nd[1], nd[2]);
    if (mode == 1) {
        for (int p = 0; p < nd[0]; ++p)
            for (int i = 0; i < d[0]; ++i) {
                const T& w = m(p, i);
                if (is_zero(w)) continue;
                for (int j = 0; j < d[1]; ++j)
                    for (int k = 0; k < d[2]; ++k) out.at(p, j, k) += w * t.at(i, j, k);
            }
    } else if (mode == 2) {
        for (int q = 0; q < nd[1]; ++q)
            for (int j = 0; j < d[1]; ++j) {
                const T& w = m(q, j);
                if (is_zero(w)) continue;
                for (int i = 0; i < d[0]; ++i)
                    for (int k = 0; k < d[2]; ++k) out.at(i, q, k) += w * t.at(i, j, k);
            }
    } else {
        for (int s = 0; s < nd[2]; ++s)
            for (int k = 0; k < d[2]; ++k) {
                const T& w = m(s, k);
                if (is_zero(w)) continue;
                for (int i = 0; i < d[0]; ++i)
                    for (int j = 0; j < d[1]; ++j) out.at(i, j, s) += w * t.at(i, j, k);
            }
    }
    return out;
}

/// (m1, m2, m3) . t, i.e. result[p,q,r] = sum m1[p,i] m2[q,j] m3[r,k] t[i,j,k].
template <typename T>
Tensor3<T> multilinear_multiply(const Matrix<T>& m1, const Matrix<T>& m2, const Matrix<T>& m3,
                                const Tensor3<T>& t) {
    return mode_multiply(m3, mode_multiply(m2, mode_multiply(m1, t, 1), 2), 3);
}

struct ScaleMatch {
    bool equal = false;
    Rational scale_rational = 0;
    Complex scale_complex = 0.0;
};

/// Exact test for a = lambda * b with lambda != 0.  Two zero tensors match
/// with lambda = 1.
ScaleMatch equal_up_to_scale(const Tensor3<Rational>& a, const Tensor3<Rational>& b);

/// Floating-point variant: every entry must satisfy |a - lambda*b| <= tol * max|b|.
ScaleMatch equal_up_to_scale(const Tensor3<Complex>& a, const Tensor3<Complex>& b, double tol);

/// 1-based indices of mode-r slices containing a nonzero entry.
std::vector<int> nonzero_slices(const Tensor3<Rational>& t, int mode);

/// Float variant; an entry counts as zero iff |entry| <= tol * max|entries|.
std::vector<int> nonzero_slices(const Tensor3<Complex>& t, int mode, double tol = 1e-12);

Tensor3<Complex> to_complex(const Tensor3<Rational>& t);
Matrix<Complex> to_complex(const RationalMatrix& m);

double frobenius_norm(const Tensor3<Complex>& t);

}  // namespace grasstensor

#endif
