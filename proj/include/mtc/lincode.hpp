#pragma once

#include <cstdint>
#include <optional>

#include "mtc/fmatrix.hpp"

namespace mtc {

inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 24;

/// Linear [n, k] code. G and H are both kept in reduced row-echelon form, so
/// two codes are equal exactly when their generators are equal.
class LinearCode {
  public:
    /// Row space of `rows`; all-zero input gives the zero code.
    static LinearCode from_generator(const Matrix& rows);
    static LinearCode zero(const Field& f, std::size_t n);
    static LinearCode full(const Field& f, std::size_t n);

    const Field& field() const { return G_.field(); }
    std::size_t length() const { return G_.cols(); }
    std::size_t dimension() const { return G_.rows(); }
    const Matrix& generator() const { return G_; }
    const Matrix& parity_check() const { return H_; }
    bool contains(const Vec& v) const;
    /// Every codeword of `other` lies in this code.
    bool contains(const LinearCode& other) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.G_ == b.G_; }

  private:
    LinearCode(Matrix g, Matrix h) : G_(std::move(g)), H_(std::move(h)) {}
    Matrix G_;
    Matrix H_;
};

/// sum_i u_i * sigma^kappa(v_i) over the n coordinates.
Elem galois_inner_product(const Field& f, const Vec& u, const Vec& v, unsigned kappa);

/// C1 ∩ C2 generated by P G2, P the parity check of the code spanned by H1 G2^T.
LinearCode intersect(const LinearCode& c1, const LinearCode& c2);
/// rank(H1 G2^T) == k2.
bool trivially_intersects(const LinearCode& c1, const LinearCode& c2);
/// Generated by sigma^(e - kappa)(H).
LinearCode galois_dual(const LinearCode& c, unsigned kappa);
/// C1^{⊥κ} ∩ C2 from the row space of sigma^(e - kappa)(G1) G2^T.
LinearCode galois_intersect(const LinearCode& c1, const LinearCode& c2, unsigned kappa);
LinearCode galois_hull(const LinearCode& c, unsigned kappa);
/// G J_n.
LinearCode reversed(const LinearCode& c);

struct ReversibilityReport {
    bool reversible = false;
    Matrix residue;  // H J_n G^T
    std::size_t residue_rank = 0;
    LinearCode largest_reversible_subcode;
};
ReversibilityReport reversibility_report(const LinearCode& c);

/// Minimum Hamming weight of a nonzero codeword; nullopt for the zero code.
/// Throws BudgetExceeded when q^k exceeds the budget.
std::optional<std::size_t> min_distance(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget);

/// q^k, saturating at UINT64_MAX.
std::uint64_t code_size(const LinearCode& c);

}  // namespace mtc
