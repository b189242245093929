#include "mtc/oracle.hpp"

#include <algorithm>

#include "mtc/errors.hpp"

namespace mtc::oracle {

namespace {

std::uint64_t power_or_saturate(std::uint64_t q, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t{1} << 62) / q) return ~std::uint64_t{0};
        r *= q;
    }
    return r;
}

void require_budget(std::uint64_t q, std::size_t k, std::uint64_t budget, const char* what) {
    if (power_or_saturate(q, k) > budget)
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(q) + "^" + std::to_string(k) +
                             " vectors exceed the enumeration budget of " + std::to_string(budget));
}

// Calls visit(v) for every F_q-combination of the rows of g.
template <class Visit>
void for_each_combination(const Matrix& g, Visit&& visit) {
    const Field& f = g.field();
    const std::size_t k = g.rows(), n = g.cols();
    const std::uint32_t q = f.order();
    std::vector<std::uint32_t> digit(k, 0);
    Vec word(n, f.zero());
    visit(word);
    for (;;) {
        std::size_t i = 0;
        while (i < k && digit[i] == q - 1) ++i;
        if (i == k) return;
        for (std::size_t r = 0; r < i; ++r) digit[r] = 0;
        ++digit[i];
        // Recompute from scratch: the oracle stays deliberately simple.
        for (std::size_t j = 0; j < n; ++j) {
            Elem acc = f.zero();
            for (std::size_t r = 0; r < k; ++r) acc = f.add(acc, f.mul(Elem{digit[r]}, g(r, j)));
            word[j] = acc;
        }
        visit(word);
    }
}

void finish(CodewordSet& s) {
    std::sort(s.words.begin(), s.words.end());
    s.words.erase(std::unique(s.words.begin(), s.words.end()), s.words.end());
}

}  // namespace

bool CodewordSet::contains(const Vec& v) const { return std::binary_search(words.begin(), words.end(), v); }

CodewordSet enumerate(const LinearCode& c, std::uint64_t budget) {
    require_budget(c.field().order(), c.dimension(), budget, "enumerate");
    CodewordSet s{c.field(), c.length(), {}};
    for_each_combination(c.generator(), [&](const Vec& w) { s.words.push_back(w); });
    finish(s);
    return s;
}

CodewordSet enumerate_space(const Field& f, std::size_t n, std::uint64_t budget) {
    require_budget(f.order(), n, budget, "enumerate_space");
    CodewordSet s{f, n, {}};
    for_each_combination(Matrix::identity(f, n), [&](const Vec& w) { s.words.push_back(w); });
    finish(s);
    return s;
}

CodewordSet intersect_enum(const CodewordSet& a, const CodewordSet& b) {
    if (!(a.field == b.field) || a.length != b.length) throw DomainError("codeword sets over different spaces");
    CodewordSet s{a.field, a.length, {}};
    std::set_intersection(a.words.begin(), a.words.end(), b.words.begin(), b.words.end(), std::back_inserter(s.words));
    return s;
}

CodewordSet dual_enum(const LinearCode& c, unsigned kappa, std::uint64_t budget) {
    if (kappa >= c.field().degree()) throw DomainError("Galois index out of range");
    const CodewordSet code = enumerate(c, budget);
    const CodewordSet space = enumerate_space(c.field(), c.length(), budget);
    CodewordSet s{c.field(), c.length(), {}};
    for (const Vec& v : space.words) {
        bool ok = true;
        for (const Vec& w : code.words)
            if (galois_inner_product(c.field(), w, v, kappa).code != 0) {
                ok = false;
                break;
            }
        if (ok) s.words.push_back(v);
    }
    return s;
}

CodewordSet map_words(const CodewordSet& s, Vec (*map)(const Vec&)) {
    CodewordSet out{s.field, s.length, {}};
    for (const Vec& w : s.words) out.words.push_back(map(w));
    finish(out);
    return out;
}

Vec twisted_shift(const Field& f, const Vec& v, const std::vector<Elem>& shifts, const std::vector<std::size_t>& blocks) {
    if (shifts.size() != blocks.size()) throw DomainError("shift and block counts differ");
    Vec out(v.size());
    std::size_t base = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::size_t m = blocks[b];
        if (base + m > v.size()) throw DomainError("blocks exceed vector length");
        out[base] = f.mul(shifts[b], v[base + m - 1]);
        for (std::size_t j = 1; j < m; ++j) out[base + j] = v[base + j - 1];
        base += m;
    }
    if (base != v.size()) throw DomainError("blocks do not cover the vector");
    return out;
}

bool invariant_under(const CodewordSet& s, const std::vector<Elem>& shifts, const std::vector<std::size_t>& blocks) {
    for (const Vec& w : s.words)
        if (!s.contains(twisted_shift(s.field, w, shifts, blocks))) return false;
    return true;
}

Matrix span_rref(const CodewordSet& s) { return rref(Matrix(s.field, s.length, s.words)); }

LinearCode as_code(const CodewordSet& s) { return LinearCode::from_generator(Matrix(s.field, s.length, s.words)); }

std::optional<std::size_t> min_weight(const CodewordSet& s) {
    std::optional<std::size_t> best;
    for (const Vec& w : s.words) {
        const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem e) { return e.code != 0; }));
        if (wt > 0 && (!best || wt < *best)) best = wt;
    }
    return best;
}

bool looks_linear(const CodewordSet& s, std::size_t samples) {
    const Field& f = s.field;
    if (s.words.empty()) return false;
    const std::size_t sz = s.words.size();
    for (std::size_t t = 0; t < samples; ++t) {
        const Vec& a = s.words[(t * 7919) % sz];
        const Vec& b = s.words[(t * 104729 + 13) % sz];
        const Elem c{static_cast<std::uint32_t>(t % f.order())};
        Vec sum(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) sum[j] = f.add(a[j], f.mul(c, b[j]));
        if (!s.contains(sum)) return false;
    }
    return true;
}

}  // namespace mtc::oracle
