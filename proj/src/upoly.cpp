#include "mtc/upoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mtc/errors.hpp"

namespace mtc {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Elem c : c_)
        if (c.code >= field_.order()) throw DomainError("coefficient not in field");
    normalize();
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, Elem c, std::size_t k) {
    if (f.is_zero(c)) return Poly(f);
    std::vector<Elem> v(k + 1, f.zero());
    v[k] = c;
    return Poly(f, std::move(v));
}

Poly Poly::binomial(const Field& f, std::size_t m, Elem lambda) {
    std::vector<Elem> v(m + 1, f.zero());
    v[m] = f.one();
    v[0] = f.sub(v[0], lambda);
    return Poly(f, std::move(v));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
}

void Poly::require_same_field(const Poly& b) const {
    if (!(field_ == b.field_)) throw DomainError("polynomials over different fields");
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = field_.neg(c);
    return r;
}

Poly& Poly::operator+=(const Poly& b) {
    require_same_field(b);
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), field_.zero());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_.add(c_[i], b.c_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& b) {
    require_same_field(b);
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), field_.zero());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_.sub(c_[i], b.c_[i]);
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_field(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const Field& f = a.field_;
    std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].code == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(f, std::move(out));
}

Poly Poly::scaled(Elem c) const {
    if (field_.is_zero(c)) return Poly(field_);
    Poly r(*this);
    for (auto& x : r.c_) x = field_.mul(x, c);
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(field_);
    r.c_.assign(k, field_.zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
}

Poly Poly::frobenius(unsigned k) const {
    Poly r(*this);
    for (auto& c : r.c_) c = field_.frobenius(c, k);
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Elem> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = field_.mul(field_.from_int(static_cast<long long>(i)), c_[i]);
    return Poly(field_, std::move(out));
}

Elem Poly::eval(Elem at) const {
    Elem acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, at), c_[i]);
    return acc;
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (!(a.field() == b.field())) throw DomainError("polynomials over different fields");
    const Field& f = a.field();
    std::vector<Elem> r = a.coeffs();
    const std::vector<Elem>& d = b.coeffs();
    if (r.size() < d.size()) return {Poly(f), a};
    const Elem inv_lead = f.inv(d.back());
    std::vector<Elem> q(r.size() - d.size() + 1, f.zero());
    for (std::size_t k = q.size(); k-- > 0;) {
        const Elem c = f.mul(r[k + d.size() - 1], inv_lead);
        q[k] = c;
        if (c.code == 0) continue;
        for (std::size_t i = 0; i < d.size(); ++i) r[k + i] = f.sub(r[k + i], f.mul(c, d[i]));
    }
    r.resize(d.size() - 1);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, f.one()), s1(f);
    Poly t0(f), t1 = Poly::constant(f, f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elem inv = f.inv(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly pow_mod(Poly base, std::uint64_t k, const Poly& modulus) {
    const Field& f = base.field();
    Poly result = Poly::constant(f, f.one()) % modulus;
    base = base % modulus;
    while (k > 0) {
        if (k & 1) result = (result * base) % modulus;
        k >>= 1;
        if (k > 0) base = (base * base) % modulus;
    }
    return result;
}

Poly inverse_mod(const Poly& a, const Poly& m) {
    ExtGcd eg = ext_gcd(a % m, m);
    if (!eg.g.is_one()) throw DomainError("polynomial is not invertible modulo the given modulus");
    return eg.s % m;
}

Poly reciprocal_poly(const Poly& f, std::size_t m) {
    if (f.is_zero()) return f;
    const auto& c = f.coeffs();
    if (c.size() - 1 > m) throw DomainError("reciprocal: degree exceeds block length");
    std::vector<Elem> out(m + 1, f.field().zero());
    for (std::size_t i = 0; i < c.size(); ++i) out[m - i] = c[i];
    return Poly(f.field(), std::move(out));
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const Field& F = f.field();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Elem c = f.coeffs()[i];
        if (c.code == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << F.format(c);
            continue;
        }
        if (c != F.one()) os << F.format(c) << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

namespace {

class PolyParser {
  public:
    PolyParser(const Field& f, std::string_view text) : f_(f), s_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 0, pos_ + 1); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_primary() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'w' || c == 'x' || c == '(';
    }

    unsigned long long number() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
        unsigned long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(s_[pos_] - '0');
            if (v > (1ULL << 40)) fail("number too large");
            ++pos_;
        }
        return v;
    }

    Poly expr() {
        skip_ws();
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        Poly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (starts_primary()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = primary();
        if (peek('^')) {
            ++pos_;
            const unsigned long long k = number();
            if (base.degree() > Degree(0) && k > 100000) fail("exponent too large");
            if (base.degree() <= Degree(0)) return Poly::constant(f_, f_.pow(base.coeff(0), k));
            Poly result = Poly::constant(f_, f_.one());
            for (unsigned long long e = k; e > 0; e >>= 1) {
                if (e & 1) result = result * base;
                if (e > 1) base = base * base;
            }
            return result;
        }
        return base;
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const unsigned long long v = number();
            return Poly::constant(f_, f_.from_int(static_cast<long long>(v % f_.characteristic())));
        }
        if (c == 'w') {
            ++pos_;
            return Poly::constant(f_, f_.omega());
        }
        if (c == 'x') {
            ++pos_;
            return Poly::x(f_);
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const Field& f_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Field& f, std::string_view text) { return PolyParser(f, text).parse(); }

Elem parse_element(const Field& f, std::string_view text) {
    Poly p = parse_poly(f, text);
    if (p.degree() > Degree(0)) throw ParseError("expected a field element, got a polynomial", 0, 1);
    return p.coeff(0);
}

}  // namespace mtc
