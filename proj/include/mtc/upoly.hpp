#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mtc/gf.hpp"

namespace mtc {

/// Polynomial degree with an explicit minus-infinity for the zero polynomial.
class Degree {
  public:
    constexpr Degree() = default;  // minus infinity
    constexpr explicit Degree(long long d) : value_(d), finite_(true) {}

    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_finite() const { return finite_; }
    /// Only valid for finite degrees.
    constexpr long long value() const { return value_; }

    friend constexpr bool operator==(Degree a, Degree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return Degree();
        return Degree(a.value_ + b.value_);
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

  private:
    long long value_ = 0;
    bool finite_ = false;
};

/// Univariate polynomial over a finite field, coefficients low degree first,
/// never storing a trailing zero.
class Poly {
  public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly constant(const Field& f, Elem c);
    static Poly monomial(const Field& f, Elem c, std::size_t k);
    static Poly x(const Field& f) { return monomial(f, f.one(), 1); }
    /// x^m - lambda
    static Poly binomial(const Field& f, std::size_t m, Elem lambda);

    const Field& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    Degree degree() const { return c_.empty() ? Degree() : Degree(static_cast<long long>(c_.size()) - 1); }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    Elem leading() const { return c_.empty() ? field_.zero() : c_.back(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& b);
    Poly& operator-=(const Poly& b);
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(Elem c) const;
    /// Multiply by x^k.
    Poly shifted(std::size_t k) const;
    Poly monic() const;
    /// Apply a -> a^(p^k) to every coefficient.
    Poly frobenius(unsigned k) const;
    Poly derivative() const;
    Elem eval(Elem at) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  private:
    void normalize();
    void require_same_field(const Poly& b) const;

    Field field_;
    std::vector<Elem> c_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws DomainError for b = 0.
DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Exact quotient; throws DomainError when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcd {
    Poly g;  // monic
    Poly s;
    Poly t;  // s*a + t*b = g
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

Poly pow_mod(Poly base, std::uint64_t k, const Poly& modulus);
/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);

/// x^m * f(1/x). Throws DomainError when deg f > m.
Poly reciprocal_poly(const Poly& f, std::size_t m);

bool is_irreducible(const Poly& f);

/// Canonical ordering: degree first, then coefficient codes low degree first.
bool canonical_less(const Poly& a, const Poly& b);

struct FactorPower {
    Poly factor;  // monic irreducible
    int multiplicity = 1;
};

struct Factorization {
    Elem unit;
    std::vector<FactorPower> factors;  // sorted by canonical_less
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x6d74636f646573ULL;

/// Complete factorization into monic irreducibles. Square-free split via
/// derivative gcds and p-th roots, then distinct-degree and equal-degree
/// (Cantor-Zassenhaus) splitting driven by a generator seeded with `seed`.
/// Throws DomainError for the zero polynomial.
Factorization factor(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);
Poly expand(const Factorization& fz, const Field& field);

/// `c0 + c1*x + ...` using field literals; `0` for the zero polynomial.
std::string to_string(const Poly& f);
/// Parses the same grammar (also accepts `-`, products and parentheses).
/// Throws ParseError with a 1-based column.
Poly parse_poly(const Field& f, std::string_view text);
/// A polynomial expression of degree <= 0.
Elem parse_element(const Field& f, std::string_view text);

}  // namespace mtc
