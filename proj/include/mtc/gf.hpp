#pragma once

// Exact arithmetic in GF(p^e).
//
// Elements are stored as their coordinate vector in the polynomial basis
// 1, w, ..., w^(e-1), packed base p into an integer code (c0 + c1 p + ...).
// Multiplication and inversion go through discrete-log tables built once per
// field; a Field is an immutable shared handle and is cheap to copy.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mtc {

/// A field element. Only meaningful together with the Field it came from.
struct Elem {
    std::uint32_t code = 0;

    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {
struct FieldData;
}

class Field {
  public:
    /// GF(p^e) with the given monic modulus (coefficients low degree first,
    /// e + 1 entries). Without a modulus, the lexicographically least monic
    /// irreducible of degree e is used, comparing coefficients from the
    /// constant term upward. Throws DomainError for a non-prime p, e == 0,
    /// a field larger than 2^20 elements, or a bad modulus.
    static Field create(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus = std::nullopt);

    unsigned characteristic() const;
    unsigned degree() const;
    std::uint32_t order() const;
    /// Modulus coefficients, low degree first, monic.
    const std::vector<unsigned>& modulus() const;

    Elem zero() const { return {0}; }
    Elem one() const { return {1}; }
    /// The class of the indeterminate modulo the modulus (printed as w).
    Elem omega() const;
    /// Image of an integer under Z -> GF(p).
    Elem from_int(long long v) const;
    /// Element with the given base-p coordinates (low degree first).
    Elem from_coords(const std::vector<unsigned>& coords) const;
    std::vector<unsigned> coords(Elem a) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Throws DomainError on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t k) const;

    /// a^(p^k); k is reduced mod e.
    Elem frobenius(Elem a, unsigned k) const;
    /// Least t >= 1 with a^t = 1. Throws DomainError for a = 0.
    std::uint64_t mult_order(Elem a) const;

    bool is_zero(Elem a) const { return a.code == 0; }
    bool in_prime_field(Elem a) const { return a.code < characteristic(); }
    /// True when omega generates the multiplicative group.
    bool omega_is_primitive() const;
    /// k with omega^k = a, when omega is primitive and a != 0.
    std::optional<std::uint32_t> omega_log(Elem a) const;

    /// All q elements in code order.
    std::vector<Elem> elements() const;

    /// `0`, `1`, `2`, `w`, `w^k`; polynomial form `(c0+c1*w)` when omega is
    /// not primitive.
    std::string format(Elem a) const;
    /// `GF(p^e) mod c0 c1 ... ce`.
    std::string header() const;

    /// Fields compare equal only with identical (p, e, modulus).
    friend bool operator==(const Field& a, const Field& b);

  private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
};

bool is_prime(std::uint64_t n);

}  // namespace mtc
