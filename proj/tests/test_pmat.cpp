#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mtc/errors.hpp"

using namespace mtc;
using namespace testing;

namespace {

Poly random_poly(const Field& f, std::size_t deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
    std::vector<Elem> c(deg + 1);
    for (auto& x : c) x = Elem{d(rng)};
    return Poly(f, c);
}

PolyMatrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::size_t deg, std::mt19937_64& rng) {
    PolyMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_poly(f, rng() % (deg + 1), rng);
    return m;
}

Moduli c1_moduli(const Field& f) { return {{6, f.one()}, {2, f.omega()}}; }

PolyMatrix c1_stack(const Field& f) {
    return PM(f, {"1 + w*x^5 | x", "x + w^2*x^5 | x", "x^2 + x^5 | 0", "x^3 + w*x^5 | x", "x^4 + w^2*x^5 | x",
                  "0 | 1 + w*x", "x^6 - 1 | 0", "0 | x^2 - w"});
}

// The residue field F_q[x]/<p> realised as GF(p^(e d)) via a scalar embedding:
// reduce to a vector over F_q of length deg p and eliminate over the extension by
// brute force on the ring itself (small instances only).
std::size_t rank_by_enumeration(const PolyMatrix& m, const Poly& p) {
    // Count |row span over F_q[x]/<p>| = q^{deg p * rank}, enumerating F_q-combinations
    // of the F_q-basis {x^k * row_i}.
    const Field& f = m.field();
    const std::size_t d = static_cast<std::size_t>(p.degree().value());
    std::vector<std::vector<Poly>> gens;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < d; ++k) {
            std::vector<Poly> g;
            for (std::size_t j = 0; j < m.cols(); ++j) g.push_back((m(i, j).shifted(k)) % p);
            gens.push_back(g);
        }
    // Scalar vectors of length cols * d, Gaussian elimination over F_q.
    std::vector<std::vector<Elem>> rows;
    for (auto& g : gens) {
        std::vector<Elem> v;
        for (auto& e : g)
            for (std::size_t k = 0; k < d; ++k) v.push_back(e.coeff(k));
        rows.push_back(v);
    }
    std::size_t rank = 0;
    const std::size_t C = m.cols() * d;
    for (std::size_t c = 0; c < C && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && f.is_zero(rows[piv][c])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Elem inv = f.inv(rows[rank][c]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || f.is_zero(rows[i][c])) continue;
            Elem t = f.mul(rows[i][c], inv);
            for (std::size_t j = 0; j < C; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(t, rows[rank][j]));
        }
        ++rank;
    }
    return rank / d;
}

}  // namespace

TEST_CASE("matrix arithmetic") {
    Field f = F4();
    PolyMatrix G1 = PM(f, {"w + x | w", "0 | w^2 + x"});
    PolyMatrix A1 = PM(f, {"w^2 + w*x + x^2 + w^2*x^3 + w*x^4 + x^5 | w + w*x + w*x^3 + w*x^4", "0 | w^2 + x"});
    CHECK(G1 * PolyMatrix::identity(f, 2) == G1);
    CHECK(A1 * G1 == PolyMatrix::moduli_diagonal(f, c1_moduli(f)));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        PolyMatrix a = random_matrix(f, 3, 3, 4, rng), b = random_matrix(f, 3, 3, 4, rng);
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
    }
    CHECK_THROWS_AS(PolyMatrix(f, 2, 3) * PolyMatrix(f, 2, 3), DomainError);
    CHECK_THROWS_AS(PolyMatrix(f, 2, 3) + PolyMatrix(f, 3, 2), DomainError);
}

TEST_CASE("text form") {
    Field f = F4();
    PolyMatrix G1 = PM(f, {"w + x | w", "0 | w^2 + x"});
    CHECK(to_string(G1) == "w + x | w\n0 | w^2 + x\n");
    CHECK_THROWS_AS(PM(f, {"x | 1", "x"}), ParseError);
    try {
        PM(f, {"x | 1", "x | 1 +"});
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("hnf of stacked generators") {
    Field f = F4();
    HnfResult h = hnf(c1_stack(f));
    CHECK(h.H.row_block(0, 2) == PM(f, {"w + x | w", "0 | w^2 + x"}));
    for (std::size_t i = 2; i < 8; ++i) CHECK(h.H.row_is_zero(i));
    CHECK(h.U * c1_stack(f) == h.H);
    CHECK(h.pivots == std::vector<std::size_t>{0, 1});

    PolyMatrix g2 = reduce_to_gpm(PM(f, {"1 + w^2*x^3 + w^2*x^4 + x^5 | 1", "x + w^2*x^3 + w*x^5 | 1 + x",
                                         "x^2 + x^3 + w*x^4 + w*x^5 | x", "x^6 - 1 | 0", "0 | x^2 - w"}),
                                  c1_moduli(f));
    CHECK(g2 == PM(f, {"w^2 + w^2*x + x^2 + x^3 | w*x", "0 | w + x^2"}));

    // B1^T J_2 for the reversed code.
    PolyMatrix b1 = PM(f, {"1 + x + x^2 | w^2 + x", "0 | 1"});
    CHECK(hnf(b1.transpose() * PolyMatrix::backward_identity(f, 2)).H == PM(f, {"1 | w^2 + x", "0 | 1 + x + x^2"}));
    CHECK(hnf(PolyMatrix::identity(f, 3)).H == PolyMatrix::identity(f, 3));
}

TEST_CASE("reduce_to_gpm errors and zero code") {
    Field f = F4();
    PolyMatrix d = PolyMatrix::moduli_diagonal(f, c1_moduli(f));
    CHECK(reduce_to_gpm(d, c1_moduli(f)) == d);
    CHECK_THROWS_AS(reduce_to_gpm(PM(f, {"1 | 0"}), c1_moduli(f)), DomainError);
    // Full rank but missing x^2 - w from the row module.
    CHECK_THROWS_AS(reduce_to_gpm(PM(f, {"x^6 - 1 | 0", "0 | x^3"}), c1_moduli(f)), DomainError);
}

TEST_CASE("solve_identical") {
    Field f = F4();
    PolyMatrix G1 = PM(f, {"w + x | w", "0 | w^2 + x"});
    CHECK(solve_identical(G1, c1_moduli(f)) ==
          PM(f, {"w^2 + w*x + x^2 + w^2*x^3 + w*x^4 + x^5 | w + w*x + w*x^3 + w*x^4", "0 | w^2 + x"}));
    PolyMatrix G2 = PM(f, {"w^2 + w^2*x + x^2 + x^3 | w*x", "0 | w + x^2"});
    PolyMatrix A2 = solve_identical(G2, c1_moduli(f));
    CHECK(A2 == PM(f, {"w + w*x + x^2 + x^3 | w*x + w*x^2", "0 | 1"}));
    CHECK(deg_det(A2) == Degree(3));
    CHECK(solve_identical(PolyMatrix::moduli_diagonal(f, c1_moduli(f)), c1_moduli(f)) == PolyMatrix::identity(f, 2));
}

TEST_CASE("solve_identical multiply-back on random GPMs") {
    std::mt19937_64 rng(99);
    for (const Field& f : {F2(), F3(), F4()}) {
        for (int t = 0; t < 30; ++t) {
            const std::size_t l = 1 + rng() % 3;
            Moduli mods;
            for (std::size_t i = 0; i < l; ++i) {
                std::uniform_int_distribution<std::uint32_t> d(1, f.order() - 1);
                mods.push_back({1 + rng() % 5, Elem{d(rng)}});
            }
            PolyMatrix gens = vstack(random_matrix(f, 2, l, 5, rng), PolyMatrix::moduli_diagonal(f, mods));
            PolyMatrix G = reduce_to_gpm(gens, mods);
            PolyMatrix A = solve_identical(G, mods);
            CHECK(A * G == PolyMatrix::moduli_diagonal(f, mods));
            CHECK(hnf(G).H == G);
            HnfResult h = hnf(gens);
            CHECK(h.U * gens == h.H);
            CHECK(deg_det(h.U).value() == 0);
            CHECK(determinant(h.U).degree() == Degree(0));
        }
    }
}

TEST_CASE("determinants") {
    Field f = F4();
    PolyMatrix A1 = PM(f, {"w^2 + w*x + x^2 + w^2*x^3 + w*x^4 + x^5 | w + w*x + w*x^3 + w*x^4", "0 | w^2 + x"});
    CHECK(deg_det(A1) == Degree(6));
    CHECK(deg_det(PolyMatrix::identity(f, 3)) == Degree(0));
    CHECK(deg_det(PolyMatrix(f, 2, 2)) == Degree::minus_infinity());
    std::mt19937_64 rng(1);
    for (int i = 0; i < 30; ++i) {
        PolyMatrix m = random_matrix(f, 3, 3, 3, rng);
        CHECK(determinant(m).degree() == deg_det(m));
        // det(m) = m00 det(minor) - ... for 2x2 blocks; compare with cofactor expansion.
        auto det2 = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
            return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        };
        Poly cof = m(0, 0) * det2(1, 2, 1, 2) - m(0, 1) * det2(1, 2, 0, 2) + m(0, 2) * det2(1, 2, 0, 1);
        CHECK(determinant(m) == cof);
    }
}

TEST_CASE("rank_mod") {
    Field f = F4();
    CHECK(rank_mod(PolyMatrix(f, 2, 3), P(f, "x + 1")) == 0);
    CHECK_THROWS_AS(rank_mod(PolyMatrix(f, 2, 2), P(f, "x^2 + 1")), DomainError);
    std::mt19937_64 rng(8);
    for (const Field& g : {F2(), F3(), F4()}) {
        Factorization fz = factor(Poly::binomial(g, 15, g.one()));
        for (int i = 0; i < 20; ++i) {
            PolyMatrix m = random_matrix(g, 1 + rng() % 3, 1 + rng() % 3, 6, rng);
            for (const auto& fp : fz.factors) CHECK(rank_mod(m, fp.factor) == rank_by_enumeration(m, fp.factor));
        }
    }
}

TEST_CASE("chain types of a trivial Galois intersection") {
    Field f = F4();
    // sigma(B1)^T diag((x^6-1)/(x^{m_i}-lambda_i)) G2^T with shifts (1, w).
    PolyMatrix sb = PM(f, {"1 + x + x^2 | w + x", "0 | 1"});
    PolyMatrix g2 = PM(f, {"w^2 + w^2*x + x^2 + x^3 | w*x", "0 | w + x^2"});
    Poly xn = P(f, "x^6 - 1");
    PolyMatrix d = PolyMatrix::diagonal(f, {exact_div(xn, P(f, "x^6 - 1")), exact_div(xn, P(f, "x^2 - w"))});
    PolyMatrix t = (sb.transpose() * d * g2.transpose()).reduced(xn);
    CHECK(t(0, 0) == P(f, "(x + 1)(x + w)^3 (x + w^2)"));
    CHECK(t(1, 0) == P(f, "w (x + 1)(x + w)^2 (x^2 + w*x + 1)"));

    ChainType c1 = chain_type(t, P(f, "x + 1"), 2);
    ChainType c2 = chain_type(t, P(f, "x + w"), 2);
    ChainType c3 = chain_type(t, P(f, "x + w^2"), 2);
    CHECK(c1.r == std::vector<int>{0, 1});
    CHECK(c2.r == std::vector<int>{0, 0});
    CHECK(c3.r == std::vector<int>{1, 0});
    CHECK(c1.log_size() + c2.log_size() + c3.log_size() == 3);
}

TEST_CASE("chain type basics") {
    Field f = F3();
    CHECK(chain_type(PolyMatrix(f, 2, 2), P(f, "x + 1"), 3).r == std::vector<int>{0, 0, 0});
    CHECK_THROWS_AS(chain_type(PolyMatrix(f, 2, 2), P(f, "x^2 - 1"), 1), DomainError);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 30; ++i) {
        PolyMatrix m = random_matrix(f, 1 + rng() % 3, 1 + rng() % 3, 5, rng);
        for (const char* p : {"x + 1", "x + 2", "x^2 + 1"}) {
            ChainType c = chain_type(m, P(f, p), 1);
            CHECK(c.r.size() == 1);
            CHECK(static_cast<std::size_t>(c.r[0]) == rank_mod(m, P(f, p)));
        }
    }
}

TEST_CASE("chain type size matches enumeration of the row span") {
    // |row span over F_q[x]/<p^f>| by closure, for deg(p) * f <= 4.
    std::mt19937_64 rng(21);
    for (const Field& f : {F2(), F3()}) {
        for (int t = 0; t < 25; ++t) {
            const int mult = 1 + static_cast<int>(rng() % 2);
            Poly p = f.order() == 2 ? P(f, t % 2 ? "x + 1" : "x^2 + x + 1") : P(f, t % 2 ? "x + 1" : "x^2 + 1");
            if (p.degree().value() * mult > 4) continue;
            Poly pf = P(f, "1");
            for (int i = 0; i < mult; ++i) pf = pf * p;
            const std::size_t D = static_cast<std::size_t>(pf.degree().value());
            const std::size_t R = 1 + rng() % 2, C = 1 + rng() % 2;
            PolyMatrix m = random_matrix(f, R, C, 6, rng).reduced(pf);
            // Span over F_q of x^k * row_i, k < D.
            std::vector<std::vector<Elem>> vs;
            for (std::size_t i = 0; i < R; ++i)
                for (std::size_t k = 0; k < D; ++k) {
                    std::vector<Elem> v;
                    for (std::size_t j = 0; j < C; ++j) {
                        Poly e = m(i, j).shifted(k) % pf;
                        for (std::size_t c = 0; c < D; ++c) v.push_back(e.coeff(c));
                    }
                    vs.push_back(v);
                }
            std::size_t rank = 0;
            const std::size_t W = C * D;
            for (std::size_t c = 0; c < W && rank < vs.size(); ++c) {
                std::size_t piv = rank;
                while (piv < vs.size() && f.is_zero(vs[piv][c])) ++piv;
                if (piv == vs.size()) continue;
                std::swap(vs[rank], vs[piv]);
                Elem inv = f.inv(vs[rank][c]);
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    if (i == rank || f.is_zero(vs[i][c])) continue;
                    Elem s = f.mul(vs[i][c], inv);
                    for (std::size_t j = 0; j < W; ++j) vs[i][j] = f.sub(vs[i][j], f.mul(s, vs[rank][j]));
                }
                ++rank;
            }
            CHECK(chain_type(m, p, mult).log_size() == static_cast<long long>(rank));
        }
    }
}
