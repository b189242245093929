#include "mtc/lincode.hpp"

#include <limits>

#include "mtc/errors.hpp"

namespace mtc {

LinearCode LinearCode::from_generator(const Matrix& rows) {
    Matrix g = rref(rows);
    Matrix h = nullspace(g);
    return LinearCode(std::move(g), std::move(h));
}

LinearCode LinearCode::zero(const Field& f, std::size_t n) { return from_generator(Matrix(f, 0, n)); }

LinearCode LinearCode::full(const Field& f, std::size_t n) { return from_generator(Matrix::identity(f, n)); }

bool LinearCode::contains(const Vec& v) const {
    if (v.size() != length()) throw DomainError("vector length differs from code length");
    const Field& f = field();
    for (std::size_t i = 0; i < H_.rows(); ++i) {
        Elem acc = f.zero();
        for (std::size_t j = 0; j < v.size(); ++j) acc = f.add(acc, f.mul(H_(i, j), v[j]));
        if (acc.code != 0) return false;
    }
    return true;
}

bool LinearCode::contains(const LinearCode& other) const {
    if (!(other.field() == field()) || other.length() != length()) throw DomainError("codes over different spaces");
    return (H_ * other.G_.transpose()).is_zero();
}

Elem galois_inner_product(const Field& f, const Vec& u, const Vec& v, unsigned kappa) {
    if (u.size() != v.size()) throw DomainError("inner product of vectors of different lengths");
    Elem acc = f.zero();
    for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], f.frobenius(v[i], kappa)));
    return acc;
}

namespace {

void require_compatible(const LinearCode& a, const LinearCode& b) {
    if (!(a.field() == b.field())) throw DomainError("codes over different fields");
    if (a.length() != b.length())
        throw DomainError("code lengths differ: " + std::to_string(a.length()) + " vs " + std::to_string(b.length()));
}

void require_kappa(const Field& f, unsigned kappa) {
    if (kappa >= f.degree())
        throw DomainError("Galois index " + std::to_string(kappa) + " out of range [0, " + std::to_string(f.degree()) + ")");
}

// Code generated by P * G2 where P is a parity check of the row space of M.
LinearCode intersect_via(const Matrix& m, const LinearCode& c2) {
    const Matrix P = nullspace(m);
    return LinearCode::from_generator(P * c2.generator());
}

}  // namespace

LinearCode intersect(const LinearCode& c1, const LinearCode& c2) {
    require_compatible(c1, c2);
    return intersect_via(c1.parity_check() * c2.generator().transpose(), c2);
}

bool trivially_intersects(const LinearCode& c1, const LinearCode& c2) {
    require_compatible(c1, c2);
    return rank(c1.parity_check() * c2.generator().transpose()) == c2.dimension();
}

LinearCode galois_dual(const LinearCode& c, unsigned kappa) {
    require_kappa(c.field(), kappa);
    return LinearCode::from_generator(c.parity_check().frobenius(c.field().degree() - kappa));
}

LinearCode galois_intersect(const LinearCode& c1, const LinearCode& c2, unsigned kappa) {
    require_compatible(c1, c2);
    require_kappa(c1.field(), kappa);
    const Matrix s = c1.generator().frobenius(c1.field().degree() - kappa);
    return intersect_via(s * c2.generator().transpose(), c2);
}

LinearCode galois_hull(const LinearCode& c, unsigned kappa) { return galois_intersect(c, c, kappa); }

LinearCode reversed(const LinearCode& c) { return LinearCode::from_generator(c.generator().reverse_columns()); }

ReversibilityReport reversibility_report(const LinearCode& c) {
    Matrix residue = c.parity_check().reverse_columns() * c.generator().transpose();
    const std::size_t r = rank(residue);
    LinearCode sub = intersect_via(residue, c);
    return {residue.is_zero(), std::move(residue), r, std::move(sub)};
}

std::uint64_t code_size(const LinearCode& c) {
    const std::uint64_t q = c.field().order();
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        if (size > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        size *= q;
    }
    return size;
}

std::optional<std::size_t> min_distance(const LinearCode& c, std::uint64_t budget) {
    const std::size_t k = c.dimension(), n = c.length();
    if (k == 0) return std::nullopt;
    if (code_size(c) > budget)
        throw BudgetExceeded("minimum distance needs " + std::to_string(c.field().order()) + "^" + std::to_string(k) +
                             " codewords, above the budget of " + std::to_string(budget));
    const Field& f = c.field();
    const Matrix& G = c.generator();
    const std::uint32_t q = f.order();

    // Mixed-radix walk over messages; each step updates the codeword by one
    // scaled generator row.
    std::vector<std::uint32_t> digit(k, 0);
    Vec word(n, f.zero());
    std::size_t best = n;
    for (;;) {
        std::size_t i = 0;
        while (i < k && digit[i] == q - 1) {
            const Elem d = f.neg(Elem{q - 1});
            for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(d, G(i, j)));
            digit[i] = 0;
            ++i;
        }
        if (i == k) break;
        const Elem d = f.sub(Elem{digit[i] + 1}, Elem{digit[i]});
        for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(d, G(i, j)));
        ++digit[i];
        std::size_t w = 0;
        for (Elem e : word) w += e.code != 0;
        if (w < best) best = w;
    }
    return best;
}

}  // namespace mtc
