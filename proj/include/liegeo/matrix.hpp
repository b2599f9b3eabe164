#pragma once

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "liegeo/qsqrt2.hpp"

namespace liegeo {

// Small dense matrix, row-major. Used with double and QSqrt2 scalars;
// everything in this project is at most 8x8.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("Matrix: bad dimensions");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        int r = static_cast<int>(rows.size());
        int c = static_cast<int>(rows.begin()->size());
        Matrix m(r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c)
                throw std::invalid_argument("Matrix: ragged rows");
            int j = 0;
            for (const auto& v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] + b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] - b.data_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (int j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const Matrix& a, const T& s) {
        Matrix r = a;
        for (auto& v : r.data_) v = v * s;
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& a) { return a * s; }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.data_) v = -v;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;

    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }
};

using Mat = Matrix<double>;
using XMat = Matrix<QSqrt2>;

inline Mat to_double(const XMat& m) {
    Mat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_double();
    return r;
}

inline double max_abs(const Mat& m) {
    double r = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
    return r;
}

inline double max_abs_diff(const Mat& a, const Mat& b) { return max_abs(a - b); }

}  // namespace liegeo
