// Factorization of univariate polynomials over GF(q).

#include <algorithm>
#include <random>

#include "mtc/errors.hpp"
#include "mtc/upoly.hpp"

namespace mtc {

namespace {

struct SquareFreePart {
    Poly poly;  // monic, square-free
    int multiplicity;
};

// Inverse of the coefficient Frobenius on a polynomial in x^p.
Poly pth_root(const Poly& f) {
    const Field& F = f.field();
    const unsigned p = F.characteristic();
    std::vector<Elem> out((f.coeffs().size() + p - 1) / p, F.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out[i / p] = F.frobenius(f.coeffs()[i], F.degree() - 1);
    return Poly(F, std::move(out));
}

void square_free(const Poly& f, int scale, std::vector<SquareFreePart>& out) {
    const Field& F = f.field();
    if (f.degree() <= Degree(0)) return;
    Poly c = gcd(f, f.derivative());
    Poly w = exact_div(f, c);
    int i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly fac = exact_div(w, y);
        if (!fac.is_one()) out.push_back({fac.monic(), i * scale});
        w = std::move(y);
        c = exact_div(c, w);
        ++i;
    }
    if (!c.is_one()) square_free(pth_root(c).monic(), scale * static_cast<int>(F.characteristic()), out);
}

Poly random_poly(const Field& F, std::size_t below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, F.order() - 1);
    std::vector<Elem> c(below_degree);
    for (auto& x : c) x = Elem{dist(rng)};
    return Poly(F, std::move(c));
}

// Splits a monic square-free f whose irreducible factors all have degree d.
void equal_degree(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const Field& F = f.field();
    const std::size_t n = static_cast<std::size_t>(f.degree().value());
    if (n == d) {
        out.push_back(f);
        return;
    }
    const std::uint64_t q = F.order();
    for (;;) {
        Poly a = random_poly(F, n, rng);
        if (a.degree() <= Degree(0)) continue;
        Poly b(F);
        if (F.characteristic() == 2) {
            // Absolute trace to GF(2): a + a^2 + ... + a^(2^(e d - 1)).
            Poly t = a % f;
            b = t;
            for (std::size_t i = 1; i < F.degree() * d; ++i) {
                t = (t * t) % f;
                b += t;
            }
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
            Poly t = a % f;
            Poly s = t;
            for (std::size_t i = 1; i < d; ++i) {
                t = pow_mod(t, q, f);
                s = (s * t) % f;
            }
            b = pow_mod(s, (q - 1) / 2, f) - Poly::constant(F, F.one());
        }
        Poly g = gcd(f, b);
        if (g.degree() > Degree(0) && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

void distinct_degree(const Poly& f, std::mt19937_64& rng, std::vector<Poly>& out) {
    const Field& F = f.field();
    const Poly x = Poly::x(F);
    Poly g = f;
    Poly h = x % g;
    for (std::size_t i = 1; g.degree() >= Degree(static_cast<long long>(2 * i)); ++i) {
        h = pow_mod(h, F.order(), g);
        Poly d = gcd(g, h - x);
        if (!d.is_one()) {
            equal_degree(d, i, rng, out);
            g = exact_div(g, d);
            h = h % g;
        }
    }
    if (g.degree() > Degree(0)) out.push_back(g.monic());
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.degree() <= Degree(0)) return false;
    if (f.degree() == Degree(1)) return true;
    const Field& F = f.field();
    const Poly g = f.monic();
    const Poly x = Poly::x(F);
    const std::size_t n = static_cast<std::size_t>(g.degree().value());
    Poly h = x % g;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        h = pow_mod(h, F.order(), g);
        if (!gcd(g, h - x).is_one()) return false;
    }
    return true;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    Factorization result{f.leading(), {}, seed};
    std::mt19937_64 rng(seed);

    std::vector<SquareFreePart> parts;
    square_free(f.monic(), 1, parts);

    std::vector<std::pair<Poly, int>> collected;
    for (const auto& part : parts) {
        std::vector<Poly> irreducibles;
        distinct_degree(part.poly, rng, irreducibles);
        for (auto& p : irreducibles) collected.emplace_back(p.monic(), part.multiplicity);
    }
    for (auto& [p, m] : collected) {
        auto it = std::find_if(result.factors.begin(), result.factors.end(),
                               [&](const FactorPower& fp) { return fp.factor == p; });
        if (it != result.factors.end())
            it->multiplicity += m;
        else
            result.factors.push_back({p, m});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
    return result;
}

Poly expand(const Factorization& fz, const Field& field) {
    Poly acc = Poly::constant(field, fz.unit);
    for (const auto& fp : fz.factors)
        for (int i = 0; i < fp.multiplicity; ++i) acc = acc * fp.factor;
    return acc;
}

}  // namespace mtc
