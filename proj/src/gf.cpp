#include "mtc/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mtc/errors.hpp"

namespace mtc {

namespace detail {

struct FieldData {
    unsigned p = 0;
    unsigned e = 0;
    std::uint32_t q = 0;
    std::vector<unsigned> modulus;
    std::vector<std::uint32_t> pow_p;  // p^i, i <= e
    std::vector<std::uint32_t> exp;    // generator^i, i < 2(q-1)
    std::vector<std::uint32_t> log;    // inverse of exp on nonzero codes
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> add_table;  // q*q when q is small
    std::uint32_t generator = 1;
    bool omega_primitive = false;
};

}  // namespace detail

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 20;
constexpr std::uint32_t kAddTableLimit = 256;

using Digits = std::vector<unsigned>;

// Polynomials over GF(p) as digit vectors; only used while building tables
// and checking the modulus.
Digits trim(Digits a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Digits rem_mod_p(Digits a, const Digits& b, unsigned p) {
    a = trim(std::move(a));
    const std::size_t db = b.size() - 1;
    unsigned inv_lead = 1;
    while ((inv_lead * b.back()) % p != 1) ++inv_lead;
    while (a.size() >= b.size()) {
        const unsigned c = (a.back() * inv_lead) % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p * p - c * b[i] % p) % p;
        a = trim(std::move(a));
    }
    return a;
}

bool irreducible_mod_p(const Digits& f, unsigned p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t k = 0; k < count; ++k) {
            Digits g(d + 1, 0);
            std::uint64_t t = k;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (rem_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::uint32_t pack(const Digits& d, const std::vector<std::uint32_t>& pow_p) {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < d.size(); ++i) code += d[i] * pow_p[i];
    return code;
}

Digits unpack(std::uint32_t code, unsigned p, unsigned e) {
    Digits d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

// Product in GF(p)[w]/(modulus) on codes, without tables.
std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b, const detail::FieldData& f) {
    const Digits da = unpack(a, f.p, f.e), db = unpack(b, f.p, f.e);
    Digits prod(2 * f.e - 1, 0);
    for (unsigned i = 0; i < f.e; ++i)
        for (unsigned j = 0; j < f.e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
    Digits r = rem_mod_p(prod, f.modulus, f.p);
    r.resize(f.e, 0);
    return pack(r, f.pow_p);
}

std::uint32_t raw_pow(std::uint32_t a, std::uint64_t k, const detail::FieldData& f) {
    std::uint32_t result = 1;
    while (k > 0) {
        if (k & 1) result = raw_mul(result, a, f);
        a = raw_mul(a, a, f);
        k >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool raw_is_primitive(std::uint32_t a, const detail::FieldData& f) {
    if (a == 0) return false;
    const std::uint64_t order = f.q - 1;
    if (order == 1) return a == 1;
    for (std::uint64_t r : prime_factors(order))
        if (raw_pow(a, order / r, f) == 1) return false;
    return true;
}

Digits least_irreducible(unsigned p, unsigned e) {
    // Lexicographic order on (c0, c1, ..., c_{e-1}): c0 is the most
    // significant digit of the enumeration counter.
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
        Digits f(e + 1, 0);
        std::uint64_t t = k;
        for (unsigned i = e; i-- > 0;) {
            f[i] = static_cast<unsigned>(t % p);
            t /= p;
        }
        f[e] = 1;
        if (irreducible_mod_p(f, p)) return f;
    }
    throw DomainError("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::create(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus) {
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw DomainError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw DomainError("field order exceeds 2^20");
    }

    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->e = e;
    d->q = static_cast<std::uint32_t>(q);
    d->pow_p.resize(e + 1);
    d->pow_p[0] = 1;
    for (unsigned i = 1; i <= e; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;

    if (modulus) {
        Digits m = *modulus;
        if (m.size() != e + 1) throw DomainError("modulus must have degree " + std::to_string(e));
        for (unsigned c : m)
            if (c >= p) throw DomainError("modulus coefficient out of range");
        if (m.back() != 1) throw DomainError("modulus must be monic");
        if (!irreducible_mod_p(m, p)) throw DomainError("modulus is reducible over GF(" + std::to_string(p) + ")");
        d->modulus = std::move(m);
    } else {
        d->modulus = least_irreducible(p, e);
    }

    d->neg.resize(d->q);
    for (std::uint32_t a = 0; a < d->q; ++a) {
        Digits digits = unpack(a, p, e);
        for (auto& c : digits) c = (p - c) % p;
        d->neg[a] = pack(digits, d->pow_p);
    }

    const std::uint32_t omega = e == 1 ? (p - d->modulus[0]) % p : p;
    d->omega_primitive = raw_is_primitive(omega, *d);
    if (d->omega_primitive) {
        d->generator = omega;
    } else {
        std::uint32_t g = 1;
        while (!raw_is_primitive(g, *d)) ++g;
        d->generator = g;
    }

    const std::uint32_t n = d->q - 1;
    d->exp.resize(2 * static_cast<std::size_t>(n));
    d->log.assign(d->q, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        d->exp[i] = cur;
        d->log[cur] = i;
        cur = raw_mul(cur, d->generator, *d);
    }
    for (std::uint32_t i = 0; i < n; ++i) d->exp[n + i] = d->exp[i];

    if (d->q <= kAddTableLimit) {
        d->add_table.resize(static_cast<std::size_t>(d->q) * d->q);
        for (std::uint32_t a = 0; a < d->q; ++a) {
            const Digits da = unpack(a, p, e);
            for (std::uint32_t b = 0; b < d->q; ++b) {
                Digits db = unpack(b, p, e);
                for (unsigned i = 0; i < e; ++i) db[i] = (da[i] + db[i]) % p;
                d->add_table[static_cast<std::size_t>(a) * d->q + b] = pack(db, d->pow_p);
            }
        }
    }
    return Field(std::move(d));
}

unsigned Field::characteristic() const { return d_->p; }
unsigned Field::degree() const { return d_->e; }
std::uint32_t Field::order() const { return d_->q; }
const std::vector<unsigned>& Field::modulus() const { return d_->modulus; }

Elem Field::omega() const {
    if (d_->e == 1) return {(d_->p - d_->modulus[0]) % d_->p};
    return {d_->p};
}

Elem Field::from_int(long long v) const {
    const long long p = d_->p;
    return {static_cast<std::uint32_t>(((v % p) + p) % p)};
}

Elem Field::from_coords(const std::vector<unsigned>& coords) const {
    if (coords.size() > d_->e) throw DomainError("too many coordinates for field element");
    Digits d(coords);
    for (auto& c : d) c %= d_->p;
    return {pack(d, d_->pow_p)};
}

std::vector<unsigned> Field::coords(Elem a) const { return unpack(a.code, d_->p, d_->e); }

Elem Field::add(Elem a, Elem b) const {
    const auto& f = *d_;
    if (!f.add_table.empty()) return {f.add_table[static_cast<std::size_t>(a.code) * f.q + b.code]};
    if (f.p == 2) return {a.code ^ b.code};
    std::uint32_t x = a.code, y = b.code, out = 0;
    for (unsigned i = 0; i < f.e; ++i) {
        out += ((x % f.p + y % f.p) % f.p) * f.pow_p[i];
        x /= f.p;
        y /= f.p;
    }
    return {out};
}

Elem Field::neg(Elem a) const { return {d_->neg[a.code]}; }
Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a.code == 0 || b.code == 0) return {0};
    const auto& f = *d_;
    return {f.exp[f.log[a.code] + f.log[b.code]]};
}

Elem Field::inv(Elem a) const {
    if (a.code == 0) throw DomainError("inverse of zero");
    const auto& f = *d_;
    const std::uint32_t n = f.q - 1;
    return {f.exp[(n - f.log[a.code]) % n]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t k) const {
    if (k == 0) return one();
    if (a.code == 0) return zero();
    const auto& f = *d_;
    const std::uint64_t n = f.q - 1;
    return {f.exp[(static_cast<std::uint64_t>(f.log[a.code]) * (k % n)) % n]};
}

Elem Field::frobenius(Elem a, unsigned k) const {
    k %= d_->e;
    std::uint64_t power = 1;
    for (unsigned i = 0; i < k; ++i) power *= d_->p;
    return pow(a, power);
}

std::uint64_t Field::mult_order(Elem a) const {
    if (a.code == 0) throw DomainError("multiplicative order of zero");
    const std::uint64_t n = d_->q - 1;
    return n / std::gcd<std::uint64_t>(d_->log[a.code], n);
}

bool Field::omega_is_primitive() const { return d_->omega_primitive; }

std::optional<std::uint32_t> Field::omega_log(Elem a) const {
    if (!d_->omega_primitive || a.code == 0) return std::nullopt;
    return d_->log[a.code];
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(d_->q);
    for (std::uint32_t i = 0; i < d_->q; ++i) out[i] = {i};
    return out;
}

std::string Field::format(Elem a) const {
    if (a.code < d_->p) return std::to_string(a.code);
    if (d_->omega_primitive) {
        const std::uint32_t k = d_->log[a.code];
        return k == 1 ? "w" : "w^" + std::to_string(k);
    }
    std::ostringstream os;
    os << '(';
    bool first = true;
    const Digits digits = coords(a);
    for (unsigned i = 0; i < digits.size(); ++i) {
        if (digits[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << digits[i];
            continue;
        }
        if (digits[i] != 1) os << digits[i] << '*';
        os << 'w';
        if (i > 1) os << '^' << i;
    }
    os << ')';
    return os.str();
}

std::string Field::header() const {
    std::ostringstream os;
    os << "GF(" << d_->p << '^' << d_->e << ") mod";
    for (unsigned c : d_->modulus) os << ' ' << c;
    return os.str();
}

bool operator==(const Field& a, const Field& b) {
    if (a.d_ == b.d_) return true;
    return a.d_->p == b.d_->p && a.d_->e == b.d_->e && a.d_->modulus == b.d_->modulus;
}

}  // namespace mtc
