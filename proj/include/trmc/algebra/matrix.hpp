#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trmc/algebra/rational.hpp"
#include "trmc/errors.hpp"

namespace trmc {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(size_t rows, size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        size_t c = rows.empty() ? 0 : rows[0].size();
        Matrix m(rows.size(), c);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw InputError("ragged matrix rows");
            for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n, T(0));
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(size_t j) const {
        std::vector<T> c(rows_);
        for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> r;
        for (size_t i = 0; i < rows_; ++i) r.push_back(row(i));
        return r;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
        Matrix r(rows_, o.cols_, T(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k) == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
            }
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < rows_; ++i) {
            s += i ? ", [" : "[";
            for (size_t j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += (*this)(i, j).get_str();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

IntegerMatrix to_integer_matrix(const std::vector<std::vector<int>>& rows);
RationalMatrix to_rational(const IntegerMatrix& m);

// ---- fraction-free elimination ----------------------------------------------

// Row echelon form of an integer matrix by Bareiss elimination; pivots are the
// first nonzero entry in each column scan (deterministic).
struct EchelonForm {
    IntegerMatrix reduced;
    std::vector<size_t> pivot_cols;
};
EchelonForm bareiss_echelon(IntegerMatrix m);

size_t rank(const RationalMatrix& m);
size_t rank(const IntegerMatrix& m);
Integer determinant(const IntegerMatrix& m);
Rational determinant(const RationalMatrix& m);

// Basis of the right nullspace; one vector per free column (in column order),
// with that free coordinate equal to 1.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Some solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

// Incrementally maintained echelon basis of a subspace of Q^dim, stored as
// sparse primitive integer rows keyed by pivot column.
class RowSpace {
public:
    using Sparse = std::vector<std::pair<size_t, Integer>>;

    explicit RowSpace(size_t dim) : dim_(dim) {}

    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }
    const std::map<size_t, Sparse>& basis() const { return rows_; }

    bool insert(const std::vector<Rational>& v);  // true if v enlarged the span
    bool insert_sparse(Sparse v);                 // integer sparse input

    // Remainder of v after eliminating every pivot column (dense, rational).
    std::vector<Rational> reduce(const std::vector<Rational>& v) const;
    bool contains(const std::vector<Rational>& v) const;

    std::vector<size_t> non_pivot_columns() const;

private:
    size_t dim_;
    std::map<size_t, Sparse> rows_;
};

// ---- Smith normal form -------------------------------------------------------

struct SmithForm {
    IntegerMatrix U, D, V;  // U * m * V = D
    std::vector<Integer> divisors;  // nonzero diagonal entries, each dividing the next
    size_t rank() const { return divisors.size(); }
};

SmithForm smith_normal_form(const IntegerMatrix& m);

// Row-style Hermite normal form of the row lattice: echelon, positive pivots,
// entries above each pivot reduced into [0, pivot). Zero rows are dropped.
IntegerMatrix hermite_normal_form(IntegerMatrix m);

// Z-basis of {x in Z^cols : m x = 0}, one basis vector per row.
IntegerMatrix integer_kernel(const IntegerMatrix& m);

// Primitive integer multiple of a rational vector (sign preserved).
std::vector<Integer> primitive_integer(const std::vector<Rational>& v);

}  // namespace trmc
