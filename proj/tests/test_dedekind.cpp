#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/quadring.hpp"

#include <random>

using namespace invar;

namespace {
const QuadraticRing R5(-5);

QuadIdeal ideal(const std::vector<QuadElem>& gens) { return QuadIdeal::from_generators(R5, gens); }
} // namespace

TEST_CASE("ring validation") {
    CHECK_NOTHROW(QuadraticRing(-5));
    CHECK_NOTHROW(QuadraticRing(-1));
    CHECK_NOTHROW(QuadraticRing(-2));
    CHECK_THROWS(QuadraticRing(5));     // real quadratic
    CHECK_THROWS(QuadraticRing(-3));    // -3 = 1 mod 4: non-maximal order
    CHECK_THROWS(QuadraticRing(-4));    // not squarefree
}

TEST_CASE("element parsing and arithmetic") {
    QuadElem e = parse_qelem("1+s");
    CHECK(e.a == 1);
    CHECK(e.b == 1);
    CHECK(parse_qelem("3-2s").b == -2);
    CHECK(parse_qelem("-s").b == -1);
    CHECK(parse_qelem("7").a == 7);
    CHECK(qnorm(R5, e) == 6);   // 1 + 5
    QuadElem sq = qmul(R5, e, e);   // (1+s)^2 = 1 + 2s + s^2 = -4 + 2s
    CHECK(sq.a == -4);
    CHECK(sq.b == 2);
}

TEST_CASE("HNF construction is canonical") {
    QuadIdeal unit = QuadIdeal::unit_ideal(R5);
    CHECK(unit.a() == 1);
    CHECK(unit.c() == 1);
    CHECK(unit.norm() == 1);

    QuadIdeal p = ideal({{2, 0}, {1, 1}});   // (2, 1+sqrt(-5))
    CHECK(p.norm() == 2);

    // Same ideal from different generating sets.
    QuadIdeal p2 = ideal({{1, 1}, {2, 0}});
    QuadIdeal p3 = ideal({{2, 0}, {1, 1}, {3, 1}});   // 3+s = (1+s) + 2
    CHECK(p == p2);
    CHECK(p == p3);

    CHECK_THROWS(ideal({{0, 0}}));
}

TEST_CASE("ideal products, powers and norm multiplicativity") {
    QuadIdeal p = ideal({{2, 0}, {1, 1}});
    QuadIdeal p_sq = p.mul(p);
    CHECK(p_sq == QuadIdeal::principal(R5, {2, 0}));
    CHECK(p_sq.norm() == 4);
    CHECK(p.pow(2) == p_sq);
    CHECK(p.pow(0) == QuadIdeal::unit_ideal(R5));
    CHECK(p.mul(QuadIdeal::unit_ideal(R5)) == p);

    std::mt19937 rng(2025);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int it = 0; it < 60; ++it) {
        QuadElem g1{c(rng), c(rng)}, g2{c(rng), c(rng)}, h1{c(rng), c(rng)};
        if ((g1.is_zero() && g2.is_zero()) || h1.is_zero()) continue;
        QuadIdeal a = ideal({g1, g2});
        QuadIdeal b = ideal({h1});
        CHECK(a.mul(b).norm() == a.norm() * b.norm());
        CHECK(a.mul(b) == b.mul(a));
    }
}

TEST_CASE("principality") {
    CHECK(QuadIdeal::principal(R5, {2, 0}).principal_generator().has_value());
    QuadIdeal p = ideal({{2, 0}, {1, 1}});
    CHECK_FALSE(p.principal_generator().has_value());
    auto u = QuadIdeal::unit_ideal(R5).principal_generator();
    REQUIRE(u.has_value());
    CHECK(qnorm(R5, *u) == 1);

    // principal(g) reconstructs the ideal exactly
    QuadIdeal q = ideal({{1, 2}});   // (1 + 2 sqrt(-5)), norm 21
    auto gen = q.principal_generator();
    REQUIRE(gen.has_value());
    CHECK(QuadIdeal::principal(R5, *gen) == q);
}

TEST_CASE("primes above a rational prime") {
    // 2 ramifies: (2) = P^2.
    auto above2 = primes_above(R5, 2);
    REQUIRE(above2.size() == 1);
    CHECK(above2[0].norm() == 2);
    CHECK(above2[0].mul(above2[0]) == QuadIdeal::principal(R5, {2, 0}));

    // 3 splits: two conjugate primes of norm 3.
    auto above3 = primes_above(R5, 3);
    REQUIRE(above3.size() == 2);
    CHECK(above3[0].norm() == 3);
    CHECK(above3[1].norm() == 3);
    CHECK(above3[0].mul(above3[1]) == QuadIdeal::principal(R5, {3, 0}));

    // 11 is inert: x^2 + 5 has no root mod 11.
    auto above11 = primes_above(R5, 11);
    REQUIRE(above11.size() == 1);
    CHECK(above11[0].norm() == 121);

    // 5 ramifies: (5) = (sqrt(-5))^2.
    auto above5 = primes_above(R5, 5);
    REQUIRE(above5.size() == 1);
    CHECK(above5[0].norm() == 5);
}

TEST_CASE("ideal valuations") {
    QuadIdeal p = primes_above(R5, 2)[0];
    CHECK(ideal_valuation(QuadIdeal::principal(R5, {2, 0}), p) == 2);
    CHECK(ideal_valuation(p, p) == 1);
    CHECK(ideal_valuation(QuadIdeal::unit_ideal(R5), p) == 0);
    CHECK(element_valuation(R5, {1, 1}, p) == 1);   // (1+s) = P * Q3
    QuadIdeal q3 = primes_above(R5, 3)[0];
    CHECK(element_valuation(R5, {2, 0}, q3) == 0);
}

TEST_CASE("local principal generators with certificates") {
    QuadIdeal a = ideal({{2, 0}, {1, 1}});

    LocalGenCertificate at3 = local_principal_generator(a, 3);
    CHECK(at3.verified);
    for (const auto& pr : at3.primes) {
        CHECK(pr.v_generator == pr.v_ideal);
        CHECK(pr.basis_integral);
        CHECK(pr.v_ideal == 0);   // 3 splits away from the support of A
    }

    LocalGenCertificate at2 = local_principal_generator(a, 2);
    CHECK(at2.verified);
    REQUIRE(at2.primes.size() == 1);
    CHECK(at2.primes[0].v_ideal == 1);
    CHECK(at2.primes[0].v_generator == 1);
    // 2 itself has valuation 2 at the ramified prime, so g != 2.
    CHECK(!(at2.generator == QuadElem{2, 0}));

    LocalGenCertificate at7 = local_principal_generator(a, 7);
    CHECK(at7.verified);

    // Already principal: (2) at q=3 localizes with generator 2.
    LocalGenCertificate p2 = local_principal_generator(QuadIdeal::principal(R5, {2, 0}), 3);
    CHECK(p2.verified);
}

TEST_CASE("class order four in Z[sqrt(-14)]") {
    QuadraticRing r14(-14);
    // 3 splits (1^2 = -14 mod 3); P = (3, 1+sqrt(-14)) has class order 4:
    // no element of norm 9 or 27 generates a power, norm 81 does.
    QuadIdeal p = QuadIdeal::from_generators(r14, {{3, 0}, {1, 1}});
    CHECK(p.norm() == 3);
    GradingCheckReport rep = blowup_grading_check(p, 4);
    CHECK(rep.products_ok);
    CHECK(rep.norms_ok);
    REQUIRE(rep.power_principal.size() == 5);
    CHECK(rep.power_principal[0]);
    CHECK_FALSE(rep.power_principal[1]);
    CHECK_FALSE(rep.power_principal[2]);
    CHECK_FALSE(rep.power_principal[3]);
    CHECK(rep.power_principal[4]);
    REQUIRE(rep.power_generator[4].has_value());
    CHECK(qnorm(r14, *rep.power_generator[4]) == 81);

    LocalGenCertificate at3 = local_principal_generator(p, 3);
    CHECK(at3.verified);
    LocalGenCertificate at5 = local_principal_generator(p, 5);
    CHECK(at5.verified);
}

TEST_CASE("blowup grading check") {
    QuadIdeal p = ideal({{2, 0}, {1, 1}});
    GradingCheckReport rep = blowup_grading_check(p, 4);
    CHECK(rep.products_ok);
    CHECK(rep.norms_ok);
    // Class of P has order 2: principality alternates.
    REQUIRE(rep.power_principal.size() == 5);
    CHECK(rep.power_principal[0]);
    CHECK_FALSE(rep.power_principal[1]);
    CHECK(rep.power_principal[2]);
    CHECK_FALSE(rep.power_principal[3]);
    CHECK(rep.power_principal[4]);

    GradingCheckReport runit = blowup_grading_check(QuadIdeal::unit_ideal(R5), 3);
    CHECK(runit.products_ok);
    CHECK(runit.norms_ok);
    for (bool b : runit.power_principal) CHECK(b);

    GradingCheckReport r3 = blowup_grading_check(QuadIdeal::principal(R5, {3, 0}), 4);
    CHECK(r3.products_ok);
    CHECK(r3.norms_ok);
    for (bool b : r3.power_principal) CHECK(b);
}
