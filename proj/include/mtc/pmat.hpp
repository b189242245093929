#pragma once

#include <string>
#include <vector>

#include "mtc/upoly.hpp"

namespace mtc {

/// One diagonal entry x^m - lambda of diag(x^{m_i} - lambda_i).
struct Modulus {
    std::size_t m = 1;
    Elem lambda;

    friend bool operator==(const Modulus&, const Modulus&) = default;
};
using Moduli = std::vector<Modulus>;

/// Dense matrix over F_q[x].
class PolyMatrix {
  public:
    PolyMatrix(Field field, std::size_t rows, std::size_t cols);
    /// Every row must have `cols` entries.
    PolyMatrix(Field field, std::size_t cols, std::vector<std::vector<Poly>> rows);

    static PolyMatrix identity(const Field& f, std::size_t n);
    static PolyMatrix diagonal(const Field& f, const std::vector<Poly>& d);
    /// diag(x^{m_i} - lambda_i)
    static PolyMatrix moduli_diagonal(const Field& f, const Moduli& moduli);
    /// J_n
    static PolyMatrix backward_identity(const Field& f, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::vector<Poly> row(std::size_t i) const;

    bool is_zero() const;
    bool row_is_zero(std::size_t i) const;

    PolyMatrix transpose() const;
    PolyMatrix scaled(const Poly& c) const;
    /// Coefficient Frobenius a -> a^(p^k) on every entry.
    PolyMatrix frobenius(unsigned k) const;
    /// Rows [first, first + count).
    PolyMatrix row_block(std::size_t first, std::size_t count) const;
    /// Every entry reduced modulo m.
    PolyMatrix reduced(const Poly& m) const;
    /// Column j reduced modulo x^{m_j} - lambda_j.
    PolyMatrix reduced_by_column(const Moduli& moduli) const;
    /// Entry (i, j) -> x^{m_j} f(1/x); entries need degree <= m_j.
    PolyMatrix reciprocal_by_column(const std::vector<std::size_t>& blocks) const;

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Poly> data_;
};

/// [a; b]
PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);

/// One row per line, entries separated by ` | `.
std::string to_string(const PolyMatrix& m);
/// Row strings in the same form; all rows must have equal length.
PolyMatrix parse_poly_matrix(const Field& f, const std::vector<std::string>& rows);

struct HnfResult {
    PolyMatrix H;  // U * M, upper echelon, monic pivots, zero rows last
    PolyMatrix U;  // unimodular
    std::vector<std::size_t> pivots;
};

/// Hermite normal form by column-forward Euclidean elimination. Entries above
/// a pivot have degree strictly below the pivot's.
HnfResult hnf(const PolyMatrix& m);

/// HNF of a generating set, zero rows dropped. The result must be square
/// (moduli.size() rows) with nonzero determinant; otherwise DomainError.
PolyMatrix reduce_to_gpm(const PolyMatrix& rows, const Moduli& moduli);

/// The unique A with A * G = diag(x^{m_i} - lambda_i). Throws DomainError when
/// some diagonal row is not in the row module of G.
PolyMatrix solve_identical(const PolyMatrix& gpm, const Moduli& moduli);

/// Degree of det(M) from HNF pivot degrees; minus infinity when singular.
Degree deg_det(const PolyMatrix& m);
/// Full determinant by fraction-free (Bareiss) elimination.
Poly determinant(const PolyMatrix& m);

/// Rank over F_q[x]/<p> after entrywise reduction. p must be irreducible.
std::size_t rank_mod(const PolyMatrix& m, const Poly& p);

/// Type {r_0, ..., r_{f-1}} of the row module of M over F_q[x]/<p^f>.
struct ChainType {
    Poly p;
    int f = 1;
    std::vector<int> r;

    /// log_q of the module size: deg(p) * sum (f - h) r_h.
    long long log_size() const;
};

ChainType chain_type(const PolyMatrix& m, const Poly& p, int f);

}  // namespace mtc
