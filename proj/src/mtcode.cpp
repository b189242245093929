#include "mtc/mtcode.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "mtc/errors.hpp"

namespace mtc {

// ---------------------------------------------------------------------------
// Profile

MTProfile::MTProfile(Field field, std::vector<std::size_t> blocks, std::vector<Elem> shifts)
    : field_(std::move(field)), blocks_(std::move(blocks)), shifts_(std::move(shifts)) {
    if (blocks_.empty()) throw DomainError("an MT profile needs at least one block");
    if (blocks_.size() != shifts_.size())
        throw DomainError("profile has " + std::to_string(blocks_.size()) + " blocks but " + std::to_string(shifts_.size()) + " shifts");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i] == 0) throw DomainError("block lengths must be positive");
        if (shifts_[i].code >= field_.order()) throw DomainError("shift constant not in field");
        if (field_.is_zero(shifts_[i])) throw DomainError("shift constants must be nonzero");
        orders_.push_back(field_.mult_order(shifts_[i]));
        N_ = std::lcm(N_, orders_.back() * blocks_[i]);
        length_ += blocks_[i];
    }
}

Moduli MTProfile::moduli() const {
    Moduli out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back({blocks_[i], shifts_[i]});
    return out;
}

MTProfile MTProfile::inverse() const {
    std::vector<Elem> s;
    for (Elem e : shifts_) s.push_back(field_.inv(e));
    return MTProfile(field_, blocks_, s);
}

MTProfile MTProfile::frobenius(unsigned k) const {
    std::vector<Elem> s;
    for (Elem e : shifts_) s.push_back(field_.frobenius(e, k));
    return MTProfile(field_, blocks_, s);
}

MTProfile MTProfile::reversed() const {
    std::vector<std::size_t> b(blocks_.rbegin(), blocks_.rend());
    std::vector<Elem> s;
    for (auto it = shifts_.rbegin(); it != shifts_.rend(); ++it) s.push_back(field_.inv(*it));
    return MTProfile(field_, b, s);
}

Poly MTProfile::xn_minus_one() const { return Poly::binomial(field_, N_, field_.one()); }

PolyMatrix MTProfile::cofactor_diagonal() const {
    const Poly xn = xn_minus_one();
    std::vector<Poly> d;
    for (const auto& md : moduli()) d.push_back(exact_div(xn, Poly::binomial(field_, md.m, md.lambda)));
    return PolyMatrix::diagonal(field_, d);
}

std::vector<Poly> to_poly_vector(const MTProfile& profile, const Vec& v) {
    if (v.size() != profile.length()) throw DomainError("vector length differs from profile length");
    std::vector<Poly> out;
    std::size_t base = 0;
    for (std::size_t m : profile.blocks()) {
        out.emplace_back(profile.field(), Vec(v.begin() + static_cast<std::ptrdiff_t>(base),
                                              v.begin() + static_cast<std::ptrdiff_t>(base + m)));
        base += m;
    }
    return out;
}

Vec to_scalar_vector(const MTProfile& profile, const std::vector<Poly>& polys) {
    if (polys.size() != profile.ell()) throw DomainError("polynomial vector length differs from ell");
    Vec out;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const std::size_t m = profile.blocks()[i];
        if (polys[i].degree() >= Degree(static_cast<long long>(m))) throw DomainError("block polynomial not reduced");
        for (std::size_t j = 0; j < m; ++j) out.push_back(polys[i].coeff(j));
    }
    return out;
}

// ---------------------------------------------------------------------------
// MTCode

struct MTCode::Cache {
    std::once_flag once;
    std::optional<DualPair> dual;
};

MTCode::MTCode(MTProfile profile, PolyMatrix g, PolyMatrix a, std::size_t dim)
    : profile_(std::move(profile)), G_(std::move(g)), A_(std::move(a)), dim_(dim), cache_(std::make_shared<Cache>()) {}

MTCode MTCode::from_gpm(const MTProfile& profile, const PolyMatrix& gpm) {
    const std::size_t l = profile.ell();
    if (gpm.rows() != l || gpm.cols() != l) throw DomainError("GPM must be " + std::to_string(l) + "x" + std::to_string(l));
    if (!(gpm.field() == profile.field())) throw DomainError("GPM and profile over different fields");
    HnfResult h = hnf(gpm);
    if (h.pivots.size() != l) throw DomainError("GPM is singular");
    PolyMatrix A = solve_identical(h.H, profile.moduli());
    const Degree d = deg_det(A);
    return MTCode(profile, std::move(h.H), std::move(A), static_cast<std::size_t>(d.value()));
}

MTCode MTCode::from_generators(const MTProfile& profile, const PolyMatrix& rows) {
    if (rows.cols() != profile.ell()) throw DomainError("generator rows need " + std::to_string(profile.ell()) + " entries");
    const PolyMatrix stack = vstack(rows.reduced_by_column(profile.moduli()), PolyMatrix::moduli_diagonal(profile.field(), profile.moduli()));
    return from_gpm(profile, reduce_to_gpm(stack, profile.moduli()));
}

MTCode MTCode::zero(const MTProfile& profile) {
    return from_gpm(profile, PolyMatrix::moduli_diagonal(profile.field(), profile.moduli()));
}

MTCode MTCode::full(const MTProfile& profile) { return from_gpm(profile, PolyMatrix::identity(profile.field(), profile.ell())); }

const DualPair& MTCode::dual() const {
    std::call_once(cache_->once, [this] { cache_->dual = dual_gpm(*this); });
    return *cache_->dual;
}

// ---------------------------------------------------------------------------
// Conversions

MTCode mt_from_linear(const LinearCode& c, const MTProfile& profile) {
    if (!(c.field() == profile.field())) throw DomainError("code and profile over different fields");
    if (c.length() != profile.length())
        throw DomainError("code length " + std::to_string(c.length()) + " differs from block sum " + std::to_string(profile.length()));
    const Field& f = c.field();
    std::vector<std::vector<Poly>> rows;
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        const Vec g = c.generator().row(i);
        // T_Lambda(g) = x * g in the polynomial picture.
        std::vector<Poly> p = to_poly_vector(profile, g);
        std::vector<Poly> shifted;
        for (std::size_t b = 0; b < p.size(); ++b)
            shifted.push_back(p[b].shifted(1) % Poly::binomial(f, profile.blocks()[b], profile.shifts()[b]));
        if (!c.contains(to_scalar_vector(profile, shifted)))
            throw DomainError("code is not invariant under the twisted shift of the profile");
        rows.push_back(std::move(p));
    }
    MTCode m = MTCode::from_generators(profile, PolyMatrix(f, profile.ell(), std::move(rows)));
    if (m.dimension() != c.dimension()) throw DomainError("GPM dimension check failed");
    return m;
}

LinearCode mt_to_linear(const MTCode& m) {
    const MTProfile& pr = m.profile();
    const Field& f = pr.field();
    const Moduli mods = pr.moduli();
    std::vector<Poly> md;
    for (const auto& x : mods) md.push_back(Poly::binomial(f, x.m, x.lambda));
    std::vector<Vec> vecs;
    for (std::size_t i = 0; i < pr.ell(); ++i) {
        std::vector<Poly> v = m.gpm().row(i);
        for (std::size_t b = 0; b < v.size(); ++b) v[b] = v[b] % md[b];
        // The F_q-span of x^j * row stabilises within n steps.
        for (std::size_t j = 0; j < pr.length(); ++j) {
            vecs.push_back(to_scalar_vector(pr, v));
            for (std::size_t b = 0; b < v.size(); ++b) v[b] = v[b].shifted(1) % md[b];
        }
    }
    LinearCode c = LinearCode::from_generator(Matrix(f, pr.length(), vecs));
    if (c.dimension() != m.dimension())
        throw DomainError("scalar expansion has dimension " + std::to_string(c.dimension()) + " but deg det A = " + std::to_string(m.dimension()));
    return c;
}

PolyMatrix reciprocal_transform(const PolyMatrix& m, const MTProfile& profile) {
    return m.reduced_by_column(profile.moduli()).reciprocal_by_column(profile.blocks());
}

// ---------------------------------------------------------------------------
// Duals and reversal

namespace {

void require_kappa(const Field& f, unsigned kappa) {
    if (kappa >= f.degree())
        throw DomainError("Galois index " + std::to_string(kappa) + " out of range [0, " + std::to_string(f.degree()) + ")");
}

void require_same_profile(const MTCode& a, const MTCode& b) {
    if (!(a.profile() == b.profile())) throw DomainError("MT codes have different profiles");
}

}  // namespace

DualPair dual_gpm(const MTCode& m) {
    const MTProfile& pr = m.profile();
    const MTProfile inv = pr.inverse();
    const PolyMatrix top = reciprocal_transform(m.companion().transpose(), pr);
    PolyMatrix H = reduce_to_gpm(vstack(top, PolyMatrix::moduli_diagonal(pr.field(), inv.moduli())), inv.moduli());
    PolyMatrix B = solve_identical(H, inv.moduli());
    return {std::move(H), std::move(B), inv};
}

DualPair galois_dual_gpm(const MTCode& m, unsigned kappa) {
    const Field& f = m.profile().field();
    require_kappa(f, kappa);
    const unsigned s = f.degree() - kappa;
    const DualPair& d = m.dual();
    return {d.H.frobenius(s), d.B.frobenius(s), d.profile.frobenius(s)};
}

MTCode galois_dual_code(const MTCode& m, unsigned kappa) {
    DualPair d = galois_dual_gpm(m, kappa);
    return MTCode::from_gpm(d.profile, d.H);
}

MTCode reversed_gpm(const MTCode& m) {
    const MTProfile rp = m.profile().reversed();
    const PolyMatrix& B = m.dual().B;
    return MTCode::from_gpm(rp, B.transpose() * PolyMatrix::backward_identity(rp.field(), rp.ell()));
}

MTCode lmap_gpm(const MTCode& m) { return MTCode::from_gpm(m.profile().inverse(), m.dual().B.transpose()); }

// ---------------------------------------------------------------------------
// Intersections

namespace {

IntersectionResult finish_intersection(const MTProfile& pr, const PolyMatrix& T, const MTCode& m2) {
    const Field& f = pr.field();
    const std::size_t l = pr.ell();
    const Poly xn = pr.xn_minus_one();
    const PolyMatrix t = T.reduced(xn);
    const Moduli qc(l, Modulus{static_cast<std::size_t>(pr.N()), f.one()});
    PolyMatrix Q = reduce_to_gpm(vstack(t, PolyMatrix::identity(f, l).scaled(xn)), qc);
    PolyMatrix P = solve_identical(Q, qc);
    MTCode code = MTCode::from_gpm(pr, P.transpose() * m2.gpm());
    return {std::move(code), t, std::move(Q), std::move(P)};
}

}  // namespace

IntersectionResult intersect_gpm(const MTCode& m1, const MTCode& m2) {
    require_same_profile(m1, m2);
    const MTProfile& pr = m1.profile();
    const PolyMatrix T = m1.companion().transpose() * pr.cofactor_diagonal() * m2.gpm().transpose();
    return finish_intersection(pr, T, m2);
}

IntersectionResult galois_intersect_gpm(const MTCode& m1, const MTCode& m2, unsigned kappa) {
    const Field& f = m1.profile().field();
    require_kappa(f, kappa);
    const unsigned s = f.degree() - kappa;
    if (m1.profile().blocks() != m2.profile().blocks()) throw DomainError("MT codes have different block lengths");
    if (!(m1.profile().inverse().frobenius(s) == m2.profile()))
        throw DomainError("shift constants incompatible: sigma^(e-kappa)(Lambda1^-1) must equal Lambda2");
    // One N serves both profiles: inversion and Frobenius preserve orders.
    if (m1.profile().N() != m2.profile().N()) throw DomainError("internal: profiles disagree on N");
    const MTProfile& pr = m2.profile();
    const PolyMatrix T = reciprocal_transform(m1.gpm(), m1.profile()).frobenius(s) * pr.cofactor_diagonal() * m2.gpm().transpose();
    return finish_intersection(pr, T, m2);
}

bool contains(const MTCode& m1, const MTCode& m2) {
    require_same_profile(m1, m2);
    const MTProfile& pr = m1.profile();
    return (m1.gpm() * pr.cofactor_diagonal() * m2.companion()).reduced(pr.xn_minus_one()).is_zero();
}

// ---------------------------------------------------------------------------
// Rank tables

namespace {

// Contribution of each p_j^{f_j} | x^N - 1 to log_q |Q|. `coprime` is used
// when f_j = 1 (rank over the residue field), `chain` otherwise.
std::vector<FactorContribution> factor_table(const Factorization& fz, const PolyMatrix& coprime, const PolyMatrix& chain) {
    std::vector<FactorContribution> out;
    for (const auto& fp : fz.factors) {
        ChainType t = fp.multiplicity == 1
                          ? ChainType{fp.factor, 1, {static_cast<int>(rank_mod(coprime, fp.factor))}}
                          : chain_type(chain, fp.factor, fp.multiplicity);
        const long long w = t.log_size();
        out.push_back({fp.factor, fp.multiplicity, std::move(t), w});
    }
    return out;
}

long long total(const std::vector<FactorContribution>& v) {
    long long s = 0;
    for (const auto& c : v) s += c.weight;
    return s;
}

}  // namespace

TrivialIntersectionReport trivial_intersection_mt(const MTCode& m1, const MTCode& m2) {
    require_same_profile(m1, m2);
    const MTProfile& pr = m1.profile();
    const Poly xn = pr.xn_minus_one();
    const PolyMatrix D = pr.cofactor_diagonal();
    const PolyMatrix chain = (m1.companion().transpose() * D * m2.gpm().transpose()).reduced(xn);
    const PolyMatrix coprime = (m2.gpm() * D * m1.companion()).reduced(xn);
    const Factorization fz = factor(xn);
    TrivialIntersectionReport r{false, chain, factor_table(fz, coprime, chain), 0, m2.dimension(), fz.seed};
    r.weighted_sum = total(r.factors);
    r.trivial = r.weighted_sum == static_cast<long long>(r.target);
    return r;
}

// ---------------------------------------------------------------------------
// Property tests

std::string to_string(Property p) {
    switch (p) {
        case Property::self_orthogonal: return "self_orthogonal";
        case Property::dual_containing: return "dual_containing";
        case Property::lcd: return "lcd";
        case Property::reversible: return "reversible";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "true";
        case Verdict::fails: return "false";
        case Verdict::precondition_unmet: return "precondition unmet";
    }
    return "?";
}

PropertyReport property_check(const MTCode& m, Property which, unsigned kappa) {
    const MTProfile& pr = m.profile();
    const Field& f = pr.field();
    PropertyReport r;
    r.property = which;
    r.dimension = m.dimension();
    if (which == Property::reversible) {
        kappa = 0;
    } else {
        require_kappa(f, kappa);
    }
    r.kappa = kappa;
    const unsigned s = f.degree() - kappa;
    const Poly xn = pr.xn_minus_one();
    const PolyMatrix D = pr.cofactor_diagonal();

    if (which == Property::reversible) {
        const std::size_t l = pr.ell();
        for (std::size_t i = 0; i < l; ++i) {
            if (pr.blocks()[i] != pr.blocks()[l - 1 - i] || pr.shifts()[i] != f.inv(pr.shifts()[l - 1 - i])) {
                r.verdict = Verdict::precondition_unmet;
                r.reason = "requires m_i = m_(l-i+1) and lambda_i = lambda_(l-i+1)^-1";
                return r;
            }
        }
        PolyMatrix res = (reciprocal_transform(m.gpm(), pr) * PolyMatrix::backward_identity(f, l) * D * m.companion()).reduced(xn);
        r.verdict = res.is_zero() ? Verdict::holds : Verdict::fails;
        r.residue = std::move(res);
        return r;
    }

    if (!(pr.inverse().frobenius(s) == pr)) {
        r.verdict = Verdict::precondition_unmet;
        r.reason = "requires sigma^(e-kappa)(Lambda^-1) = Lambda";
        return r;
    }

    if (which == Property::self_orthogonal || which == Property::lcd) {
        PolyMatrix res = (reciprocal_transform(m.gpm(), pr).frobenius(s) * D * m.gpm().transpose()).reduced(xn);
        if (which == Property::self_orthogonal) {
            r.verdict = res.is_zero() ? Verdict::holds : Verdict::fails;
            r.residue = std::move(res);
            return r;
        }
        const Factorization fz = factor(xn);
        r.seed = fz.seed;
        r.factors = factor_table(fz, res, res);
        r.weighted_sum = total(r.factors);
        r.verdict = r.weighted_sum == static_cast<long long>(m.dimension()) ? Verdict::holds : Verdict::fails;
        r.residue = std::move(res);
        return r;
    }

    // dual containing
    PolyMatrix res = (reciprocal_transform(m.companion().transpose(), pr).frobenius(s) * D * m.companion()).reduced(xn);
    r.verdict = res.is_zero() ? Verdict::holds : Verdict::fails;
    r.residue = std::move(res);
    return r;
}

// ---------------------------------------------------------------------------
// Intersection structure

std::string DistanceInfo::str() const {
    switch (kind) {
        case Kind::finite: return std::to_string(value);
        case Kind::infinite: return "inf";
        case Kind::unknown: return "unknown";
    }
    return "?";
}

DistanceInfo distance_info(const LinearCode& c, std::uint64_t budget) {
    try {
        auto d = min_distance(c, budget);
        if (!d) return {DistanceInfo::Kind::infinite, 0};
        return {DistanceInfo::Kind::finite, *d};
    } catch (const BudgetExceeded&) {
        return {DistanceInfo::Kind::unknown, 0};
    }
}

namespace {

bool invariant(const LinearCode& c, const MTProfile& pr) {
    const Field& f = c.field();
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        const Vec g = c.generator().row(i);
        Vec t(g.size());
        std::size_t base = 0;
        for (std::size_t b = 0; b < pr.ell(); ++b) {
            const std::size_t m = pr.blocks()[b];
            t[base] = f.mul(pr.shifts()[b], g[base + m - 1]);
            for (std::size_t j = 1; j < m; ++j) t[base + j] = g[base + j - 1];
            base += m;
        }
        if (!c.contains(t)) return false;
    }
    return true;
}

std::size_t differing(const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

// d <= D, with an unknown or infinite distance never satisfying the bound.
bool at_most(const DistanceInfo& d, std::size_t bound) {
    return d.kind == DistanceInfo::Kind::finite && d.value <= bound;
}

bool above(const DistanceInfo& d, std::size_t bound) {
    return d.kind == DistanceInfo::Kind::infinite || (d.kind == DistanceInfo::Kind::finite && d.value > bound);
}

}  // namespace

AdvisorReport intersection_structure_advisor(const LinearCode& c1, const MTProfile& p1, const LinearCode& c2,
                                             const MTProfile& p2, std::uint64_t gamma_budget,
                                             std::uint64_t distance_budget) {
    if (p1.blocks() != p2.blocks()) throw DomainError("advisor needs equal block lengths");
    if (!(p1.field() == c1.field()) || !(p2.field() == c2.field()) || !(c1.field() == c2.field()))
        throw DomainError("codes and profiles over different fields");
    if (c1.length() != p1.length() || c2.length() != p2.length()) throw DomainError("code length differs from block sum");
    const Field& f = c1.field();
    const std::size_t l = p1.ell();
    const std::vector<Elem>& L = p1.shifts();
    const std::vector<Elem>& Dl = p2.shifts();

    AdvisorReport r(intersect(c1, c2));
    r.d1 = distance_info(c1, distance_budget);
    r.d2 = distance_info(c2, distance_budget);
    r.d_intersection = distance_info(r.intersection, distance_budget);
    r.ell = l;
    r.differing = differing(L, Dl);
    r.lambda_admits = invariant(r.intersection, p1);
    r.delta_admits = invariant(r.intersection, p2);

    std::uint64_t count = 1;
    bool within = true;
    for (std::size_t i = 0; i < l && within; ++i) {
        if (count > gamma_budget / (f.order() - 1)) within = false;
        count *= f.order() - 1;
    }
    within = within && count <= gamma_budget;
    r.exhaustive = within;
    if (within) {
        std::vector<std::uint32_t> digit(l, 1);
        for (;;) {
            std::vector<Elem> g;
            for (auto d : digit) g.push_back(Elem{d});
            ++r.candidates_tested;
            if (invariant(r.intersection, MTProfile(f, p1.blocks(), g))) r.admitted.push_back(g);
            std::size_t i = l;
            while (i > 0 && digit[i - 1] == f.order() - 1) digit[--i] = 1;
            if (i == 0) break;
            ++digit[i - 1];
        }
    } else {
        r.candidates_tested = L == Dl ? 1 : 2;
        if (r.lambda_admits) r.admitted.push_back(L);
        if (r.delta_admits && !(L == Dl)) r.admitted.push_back(Dl);
        std::sort(r.admitted.begin(), r.admitted.end());
    }

    auto admits = [&](const std::vector<Elem>& g) { return std::find(r.admitted.begin(), r.admitted.end(), g) != r.admitted.end(); };
    const std::string D = std::to_string(r.differing);
    if (L == Dl) {
        r.cases.push_back("case 1: equal shifts; the intersection is Lambda-MT");
    } else {
        if (r.admitted.empty())
            r.cases.push_back(r.exhaustive ? "case 2: no shift vector admits an MT structure" : "case 2: neither Lambda nor Delta admits; inconclusive beyond the tested set");
        if (above(r.d1, l)) r.cases.push_back("case 2(a): d(C1) > l, so any MT structure is Lambda-MT");
        if (above(r.d2, l)) r.cases.push_back("case 2(b): d(C2) > l, so any MT structure is Delta-MT");
        if (at_most(r.d1, l) && at_most(r.d2, l)) {
            r.cases.push_back("case 2(c): d(C1) <= l and d(C2) <= l");
            if (r.lambda_admits && r.delta_admits) r.cases.push_back("case 2(c)i: both Lambda-MT and Delta-MT");
            if (r.lambda_admits && at_most(r.d2, r.differing))
                r.cases.push_back("case 2(c)ii: Lambda-MT with d(C2) <= D = " + D);
            if (r.delta_admits && at_most(r.d1, r.differing))
                r.cases.push_back("case 2(c)iii: Delta-MT with d(C1) <= D = " + D);
            for (const auto& g : r.admitted) {
                if (g == L || g == Dl) continue;
                if (at_most(r.d1, differing(L, g)) && at_most(r.d2, differing(Dl, g))) {
                    std::string s = "case 2(c)iv: Gamma = (";
                    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + f.format(g[i]);
                    r.cases.push_back(s + ")");
                }
            }
        }
        if (!admits(L) && !admits(Dl) && !r.admitted.empty() && !(at_most(r.d1, l) && at_most(r.d2, l)))
            r.cases.push_back("note: admitted shifts differ from Lambda and Delta");
    }

    r.corollary_applies = above(r.d1, l) && above(r.d2, l);
    std::size_t base = 0;
    for (std::size_t b = 0; b < l; ++b) {
        const std::size_t m = p1.blocks()[b];
        if (L[b] != Dl[b]) {
            bool zero = true;
            for (std::size_t i = 0; i < r.intersection.dimension() && zero; ++i)
                for (std::size_t j = base; j < base + m; ++j)
                    if (r.intersection.generator()(i, j).code != 0) {
                        zero = false;
                        break;
                    }
            r.differing_blocks.push_back(b);
            r.zero_projection.push_back(zero);
        }
        base += m;
    }
    return r;
}

}  // namespace mtc
