#include "doctest.h"
#include "mtc/errors.hpp"
#include "mtc/oracle.hpp"
#include "reference_codes.hpp"
#include "random_codes.hpp"

using namespace mtc;
using namespace testing;

TEST_CASE("code_from_generator") {
    LinearCode c1 = C1();
    CHECK(c1.length() == 8);
    CHECK(c1.dimension() == 6);
    CHECK(c1.parity_check() == rref(H1()));
    CHECK((c1.generator() * c1.parity_check().transpose()).is_zero());

    LinearCode full = LinearCode::full(F3(), 5);
    CHECK(full.dimension() == 5);
    CHECK(full.parity_check().rows() == 0);
    LinearCode zero = LinearCode::from_generator(Matrix(F3(), 2, 5));
    CHECK(zero.dimension() == 0);
    CHECK(zero.parity_check() == Matrix::identity(F3(), 5));

    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        LinearCode c = LinearCode::from_generator(random_matrix(F3(), 4, 10, rng));
        CHECK((c.generator() * c.parity_check().transpose()).is_zero());
        CHECK(c.dimension() + c.parity_check().rows() == 10);
    }
    CHECK(C3().parity_check() == H3());
    CHECK(C4().parity_check() == rref(H4()));
    CHECK(C5().parity_check() == rref(H5()));
}

TEST_CASE("intersection of the quaternary pair") {
    LinearCode c = intersect(C1(), C2());
    CHECK(c.generator() == C1C2());
    CHECK(min_distance(c) == std::optional<std::size_t>(6));
    CHECK(intersect(C1(), C1()) == C1());
    CHECK(!trivially_intersects(C1(), C1()));
    CHECK_THROWS_AS(intersect(C1(), C3()), DomainError);
}

TEST_CASE("trivial intersection with the dual of C5") {
    // rank(G5 G3^T) = k3: C5's dual meets C3 trivially.
    LinearCode d5 = galois_dual(C5(), 0);
    CHECK(trivially_intersects(d5, C3()));
    CHECK(rank(C5().generator() * C3().generator().transpose()) == 3);
    CHECK(min_distance(d5) == std::optional<std::size_t>(5));
}

TEST_CASE("galois duals and hulls") {
    LinearCode c1 = C1();
    CHECK(galois_dual(c1, 0).generator() == rref(H1()));
    CHECK(galois_dual(c1, 1).generator() == rref(H1().frobenius(1)));
    CHECK(galois_dual(LinearCode::full(F4(), 4), 1).dimension() == 0);
    CHECK_THROWS_AS(galois_dual(c1, 2), DomainError);
    CHECK(galois_intersect(C1(), C2(), 1).dimension() == 0);
    // C3 is self-orthogonal, so its Euclidean hull is itself.
    CHECK(galois_hull(C3(), 0) == C3());

    LinearCode d = galois_dual(c1, 1);
    for (const Vec& u : oracle::enumerate(c1).words)
        for (std::size_t i = 0; i < d.dimension(); ++i) CHECK(galois_inner_product(F4(), u, d.generator().row(i), 1) == F4().zero());
}

TEST_CASE("reversibility") {
    CHECK(reversed(C4()) == C4());
    CHECK(reversed(reversed(C3())) == C3());

    ReversibilityReport r4 = reversibility_report(C4());
    CHECK(r4.reversible);
    CHECK((H4().reverse_columns() * C4().generator().transpose()).is_zero());

    ReversibilityReport r3 = reversibility_report(C3());
    CHECK(!r3.reversible);
    CHECK(r3.residue_rank == 3);
    CHECK(r3.largest_reversible_subcode.dimension() == 0);
    CHECK(rank(H3().reverse_columns() * C3().generator().transpose()) == 3);
    CHECK(r3.residue == SM(F3(), {"2 2 2", "2 2 2", "2 2 2", "1 0 1", "0 1 1", "1 1 0"}));

    ReversibilityReport r5 = reversibility_report(C5());
    CHECK(!r5.reversible);
    CHECK(r5.residue == SM(F3(), {"0 1 2 0 0 1", "1 1 1 0 1 2", "1 2 1 1 2 1"}));
    CHECK(nullspace(r5.residue) == SM(F3(), {"1 0 0 1 2 0", "0 1 0 0 1 2", "0 0 1 1 0 1"}));
    CHECK(r5.largest_reversible_subcode.generator() == C5Reversible());
}

TEST_CASE("intersection C3 and C4") {
    CHECK(intersect(C3(), C4()).generator() == SM(F3(), {"1 1 0 0 2 0 1 2 1"}));
    CHECK(intersect(C3(), C5()).generator() == SM(F3(), {"1 1 1 1 1 1 2 2 2"}));
}

TEST_CASE("minimum distances") {
    CHECK(min_distance(C2()) == std::optional<std::size_t>(5));
    CHECK(min_distance(C3()) == std::optional<std::size_t>(6));
    CHECK(min_distance(C1()) == std::optional<std::size_t>(2));
    CHECK(min_distance(C6()) == std::optional<std::size_t>(5));
    CHECK(!min_distance(LinearCode::zero(F3(), 4)).has_value());
    CHECK_THROWS_AS(min_distance(C6(), 1000), BudgetExceeded);
}

TEST_CASE("random codes against the enumeration oracle") {
    std::mt19937_64 rng(77);
    for (const Field& f : {F2(), F3(), F4()}) {
        const std::size_t nmax = f.order() == 2 ? 10 : f.order() == 3 ? 7 : 6;
        for (int t = 0; t < 15; ++t) {
            const std::size_t n = 1 + rng() % nmax;
            LinearCode a = random_code(f, n, rng), b = random_code(f, n, rng);
            auto sa = oracle::enumerate(a), sb = oracle::enumerate(b);
            CHECK(sa.size() == code_size(a));

            auto inter = oracle::intersect_enum(sa, sb);
            CHECK(intersect(a, b).generator() == oracle::span_rref(inter));
            CHECK(intersect(a, b) == intersect(b, a));
            CHECK(intersect(a, b).dimension() == b.dimension() - rank(a.parity_check() * b.generator().transpose()));
            CHECK(trivially_intersects(a, b) == (inter.size() == 1));

            for (unsigned kappa = 0; kappa < f.degree(); ++kappa) {
                auto dual = oracle::dual_enum(a, kappa);
                CHECK(galois_dual(a, kappa).generator() == oracle::span_rref(dual));
                CHECK(galois_intersect(a, b, kappa).generator() == oracle::span_rref(oracle::intersect_enum(dual, sb)));
                CHECK(galois_hull(a, kappa).generator() == oracle::span_rref(oracle::intersect_enum(dual, sa)));
            }

            auto rev = oracle::map_words(sa, [](const Vec& v) { return Vec(v.rbegin(), v.rend()); });
            CHECK(reversed(a).generator() == oracle::span_rref(rev));
            CHECK(min_distance(reversed(a)) == min_distance(a));
            CHECK(min_distance(a) == oracle::min_weight(sa));

            ReversibilityReport rr = reversibility_report(a);
            CHECK(rr.reversible == (rev == sa));
            // Largest reversible subcode equals the set of words whose reversal is also a codeword.
            CHECK(rr.largest_reversible_subcode.generator() == oracle::span_rref(oracle::intersect_enum(sa, rev)));
            CHECK(reversed(rr.largest_reversible_subcode) == rr.largest_reversible_subcode);
            CHECK(a.contains(rr.largest_reversible_subcode));
        }
    }
}
