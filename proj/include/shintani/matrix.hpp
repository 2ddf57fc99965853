#pragma once

#include <cstddef>
#include <vector>

#include "shintani/numeric.hpp"

namespace shintani {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, const std::vector<T>& c)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = c[i];
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_columns(std::size_t a, std::size_t b)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y)
    {
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }

    friend std::vector<T> operator*(const Matrix& x, const std::vector<T>& v)
    {
        std::vector<T> r(x.rows_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k)
                r[i] += x(i, k) * v[k];
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rat(const IntMatrix& m);
// Converts a rational matrix with integral entries; throws otherwise.
IntMatrix to_int(const RatMatrix& m);

Rat determinant(RatMatrix m);
Int determinant(const IntMatrix& m);
std::size_t rank(RatMatrix m);
RatMatrix inverse(const RatMatrix& m);
std::vector<Rat> solve(const RatMatrix& m, const std::vector<Rat>& b);

// Column-style Hermite form: A U = H with U unimodular. The nonzero columns of H sit on
// the right and form an upper triangular basis with positive pivots; entries to the right
// of a pivot in its row are reduced into [0, pivot).
struct HermiteResult {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;
};
HermiteResult hermite(const IntMatrix& A, bool want_transform = false);

// Square basis (d x d) of the full-rank lattice spanned by the columns of A.
IntMatrix hnf_basis(const IntMatrix& A);

// U A V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... (nonnegative).
struct SmithResult {
    IntMatrix D, U, V;
    std::vector<Int> diagonal() const;
};
SmithResult smith(const IntMatrix& A);

// Integer kernel basis (columns) of A.
IntMatrix integer_kernel(const IntMatrix& A);

} // namespace shintani
