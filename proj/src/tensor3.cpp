#include "grasstensor/tensor3.hpp"

#include <algorithm>

namespace grasstensor {

ScaleMatch equal_up_to_scale(const Tensor3<Rational>& a, const Tensor3<Rational>& b) {
    ScaleMatch out;
    if (a.dims() != b.dims()) return out;
    std::size_t ref = b.size();
    for (std::size_t e = 0; e < b.size(); ++e) {
        if (b.data()[e] != 0) {
            ref = e;
            break;
        }
    }
    if (ref == b.size()) {
        // b = 0: a = lambda b only possible when a = 0 too
        for (const auto& v : a.data())
            if (v != 0) return out;
        out.equal = true;
        out.scale_rational = 1;
        return out;
    }
    const Rational lambda = a.data()[ref] / b.data()[ref];
    if (lambda == 0) return out;
    for (std::size_t e = 0; e < b.size(); ++e) {
        if (a.data()[e] != lambda * b.data()[e]) return out;
    }
    out.equal = true;
    out.scale_rational = lambda;
    return out;
}

ScaleMatch equal_up_to_scale(const Tensor3<Complex>& a, const Tensor3<Complex>& b, double tol) {
    ScaleMatch out;
    if (a.dims() != b.dims()) return out;
    double bmax = 0.0;
    std::size_t ref = 0;
    for (std::size_t e = 0; e < b.size(); ++e) {
        const double mag = std::abs(b.data()[e]);
        if (mag > bmax) {
            bmax = mag;
            ref = e;
        }
    }
    if (bmax == 0.0) {
        for (const auto& v : a.data())
            if (std::abs(v) > tol) return out;
        out.equal = true;
        out.scale_complex = 1.0;
        return out;
    }
    const Complex lambda = a.data()[ref] / b.data()[ref];
    if (std::abs(lambda) == 0.0) return out;
    for (std::size_t e = 0; e < b.size(); ++e) {
        if (std::abs(a.data()[e] - lambda * b.data()[e]) > tol * bmax) return out;
    }
    out.equal = true;
    out.scale_complex = lambda;
    return out;
}

namespace {

// One linear pass over the storage; the mode index is tracked incrementally
// so large tensors scan at memory speed.
template <typename T, typename NonzeroTest>
std::vector<int> nonzero_slices_impl(const Tensor3<T>& t, int mode, NonzeroTest nonzero) {
    if (mode < 1 || mode > 3) throw DimensionError("nonzero_slices: mode must be 1, 2 or 3");
    const auto& d = t.dims();
    std::vector<bool> hit(d[mode - 1], false);
    const T* p = t.data().data();
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
            for (int k = 0; k < d[2]; ++k, ++p) {
                if (!nonzero(*p)) continue;
                hit[mode == 1 ? i : mode == 2 ? j : k] = true;
            }
    std::vector<int> out;
    for (int r = 0; r < static_cast<int>(hit.size()); ++r)
        if (hit[r]) out.push_back(r + 1);
    return out;
}

}  // namespace

std::vector<int> nonzero_slices(const Tensor3<Rational>& t, int mode) {
    return nonzero_slices_impl(t, mode, [](const Rational& v) { return !is_zero(v); });
}

std::vector<int> nonzero_slices(const Tensor3<Complex>& t, int mode, double tol) {
    double maxabs = 0.0;
    for (const auto& v : t.data()) maxabs = std::max(maxabs, std::abs(v));
    const double cut = tol * maxabs;
    return nonzero_slices_impl(t, mode, [cut](const Complex& v) { return std::abs(v) > cut; });
}

Tensor3<Complex> to_complex(const Tensor3<Rational>& t) {
    Tensor3<Complex> out(t.dims()[0], t.dims()[1], t.dims()[2]);
    for (std::size_t e = 0; e < t.size(); ++e) out.data()[e] = Complex(to_double(t.data()[e]), 0.0);
    return out;
}

Matrix<Complex> to_complex(const RationalMatrix& m) {
    Matrix<Complex> out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = Complex(to_double(m(r, c)), 0.0);
    return out;
}

double frobenius_norm(const Tensor3<Complex>& t) {
    double sum = 0.0;
    for (const auto& v : t.data()) sum += std::norm(v);
    return std::sqrt(sum);
}

}  // namespace grasstensor
