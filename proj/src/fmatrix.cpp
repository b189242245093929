#include "mtc/fmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "mtc/errors.hpp"

namespace mtc {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

Matrix::Matrix(Field field, std::size_t cols, const std::vector<Vec>& rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(cols) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DomainError("ragged matrix");
        for (Elem e : r) {
            if (e.code >= field_.order()) throw DomainError("matrix entry not in field");
            data_.push_back(e);
        }
    }
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Vec> Matrix::row_list() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e.code == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::frobenius(unsigned k) const {
    Matrix r(*this);
    for (auto& e : r.data_) e = field_.frobenius(e, k);
    return r;
}

Matrix Matrix::reverse_columns() const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, cols_ - 1 - j);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in multiplication");
    if (!(a.field_ == b.field_)) throw DomainError("matrices over different fields");
    const Field& f = a.field_;
    Matrix r(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Elem x = a(i, k);
            if (x.code == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = f.add(r(i, j), f.mul(x, b(k, j)));
        }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DomainError("column mismatch in vstack");
    std::vector<Vec> rows = a.row_list();
    for (auto& r : b.row_list()) rows.push_back(std::move(r));
    return Matrix(a.field(), a.cols(), rows);
}

namespace {

// In-place Gauss-Jordan; returns pivot columns. Nonzero rows end up first.
std::vector<std::size_t> gauss_jordan(const Field& f, std::vector<Vec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].code == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Elem inv = f.inv(rows[r][c]);
        for (auto& e : rows[r]) e = f.mul(e, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].code == 0) continue;
            const Elem t = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(t, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

Matrix rref(const Matrix& m) {
    std::vector<Vec> rows = m.row_list();
    gauss_jordan(m.field(), rows, m.cols());
    return Matrix(m.field(), m.cols(), rows);
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Matrix nullspace(const Matrix& m) {
    const Field& f = m.field();
    std::vector<Vec> rows = m.row_list();
    const std::vector<std::size_t> pivots = gauss_jordan(f, rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rows[i][free]);
        basis.push_back(std::move(v));
    }
    return rref(Matrix(f, m.cols(), basis));
}

std::string to_string(const Field& f, const Vec& v) {
    std::ostringstream os;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) os << ' ';
        os << f.format(v[j]);
    }
    return os.str();
}

std::string to_string(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) out += to_string(m.field(), m.row(i)) + '\n';
    return out;
}

}  // namespace mtc
