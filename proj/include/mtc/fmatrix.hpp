#pragma once

#include <string>
#include <vector>

#include "mtc/gf.hpp"

namespace mtc {

using Vec = std::vector<Elem>;

/// Dense matrix over GF(q).
class Matrix {
  public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    /// Every row must have `cols` entries.
    Matrix(Field field, std::size_t cols, const std::vector<Vec>& rows);

    static Matrix identity(const Field& f, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Vec row(std::size_t i) const;
    std::vector<Vec> row_list() const;

    bool is_zero() const;
    Matrix transpose() const;
    Matrix frobenius(unsigned k) const;
    /// Multiply on the right by J_cols.
    Matrix reverse_columns() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

Matrix vstack(const Matrix& a, const Matrix& b);

/// Reduced row-echelon form with zero rows removed.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis (in RREF) of {v : m * v^T = 0}; cols() columns.
Matrix nullspace(const Matrix& m);

/// Whitespace-separated field literals, one row per line.
std::string to_string(const Matrix& m);
std::string to_string(const Field& f, const Vec& v);

}  // namespace mtc
