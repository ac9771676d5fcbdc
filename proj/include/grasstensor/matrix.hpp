#ifndef GRASSTENSOR_MATRIX_HPP
#define GRASSTENSOR_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "grasstensor/errors.hpp"
#include "grasstensor/rational.hpp"

namespace grasstensor {

inline bool is_zero(const Rational& v) { return v.is_zero(); }
template <typename T>
bool is_zero(const T& v) {
    return v == T(0);
}

/// Dense row-major matrix.  Used with Rational for the exact lane and with
/// std::complex<double> for the floating-point lane.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_) throw DimensionError("ragged initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix out(rows_, rhs.cols_);
        for (int r = 0; r < rows_; ++r) {
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(r, k);
                if (is_zero(a)) continue;
                for (int c = 0; c < rhs.cols_; ++c) {
                    out(r, c) += a * rhs(k, c);
                }
            }
        }
        return out;
    }

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

    /// Columns `which` (0-based), in the given order.
    Matrix select_columns(const std::vector<int>& which) const {
        Matrix out(rows_, static_cast<int>(which.size()));
        for (int c = 0; c < out.cols(); ++c) {
            const int src = which[c];
            if (src < 0 || src >= cols_) throw DimensionError("column selection out of range");
            for (int r = 0; r < rows_; ++r) out(r, c) = (*this)(r, src);
        }
        return out;
    }

    Matrix select_rows(const std::vector<int>& which) const {
        Matrix out(static_cast<int>(which.size()), cols_);
        for (int r = 0; r < out.rows(); ++r) {
            const int src = which[r];
            if (src < 0 || src >= rows_) throw DimensionError("row selection out of range");
            for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(src, c);
        }
        return out;
    }

    /// [this | rhs]
    Matrix hconcat(const Matrix& rhs) const {
        if (rows_ != rhs.rows_) throw DimensionError("hconcat row mismatch");
        Matrix out(rows_, cols_ + rhs.cols_);
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
            for (int c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
        }
        return out;
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

}  // namespace grasstensor

#endif
