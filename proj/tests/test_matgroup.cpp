#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/fixtures.hpp"

#include <random>

using namespace invar;

namespace {
const Domain Q = Domain::rationals();
const Domain Z = Domain::integers();

ScalarMatrix m2(const Domain& d, long a, long b, long c, long e) {
    return ScalarMatrix::from_rows(d, {{Scalar(d, a), Scalar(d, b)}, {Scalar(d, c), Scalar(d, e)}});
}
} // namespace

TEST_CASE("closure of small groups") {
    MatrixGroup sign = MatrixGroup::close({m2(Q, -1, 0, 0, -1)});
    CHECK(sign.order() == 2);

    MatrixGroup rot4 = MatrixGroup::close({m2(Q, 0, -1, 1, 0)});
    CHECK(rot4.order() == 4);

    MatrixGroup s3 = s3_reflection(Domain::localized_integers(3));
    CHECK(s3.order() == 6);
    CHECK(s3.dimension() == 2);

    CHECK(s3_permutation(Z).order() == 6);
    CHECK(d4_order8(Z).order() == 8);
    CHECK(c5_companion(Z).order() == 5);
    CHECK(cyclic_rotation(6, Z).order() == 6);
}

TEST_CASE("closure failure modes") {
    // Infinite group: a shear has infinite order.
    CHECK_THROWS(MatrixGroup::close({m2(Q, 1, 1, 0, 1)}, 64));
    // Non-invertible generator.
    CHECK_THROWS(MatrixGroup::close({m2(Q, 1, 0, 0, 0)}));
    // Invertible over Q but not over Z.
    CHECK_THROWS(MatrixGroup::close({m2(Z, 2, 0, 0, 1)}, 64));
}

TEST_CASE("the action is a left action and fixes the known invariants") {
    MatrixGroup s3 = s3_reflection(Q);
    Polynomial f = parse_polynomial("x^2+3*x*y+3*y^2", Q, 2);
    Polynomial g = parse_polynomial("2*x^3+9*x^2*y+9*x*y^2", Q, 2);
    CHECK(s3.is_invariant(f));
    CHECK(s3.is_invariant(g));
    CHECK(s3.act(0, f) == f);   // identity

    Polynomial x = parse_polynomial("x", Q, 2);
    MatrixGroup sign = MatrixGroup::close({m2(Q, -1, 0, 0, -1)});
    CHECK(sign.act(1, x) == -x);

    // act(sigma tau, f) = act(sigma, act(tau, f)) on random data
    std::mt19937 rng(404);
    std::uniform_int_distribution<long> pick(0, (int)s3.order() - 1);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (int it = 0; it < 40; ++it) {
        int i = (int)pick(rng), j = (int)pick(rng);
        std::vector<Polynomial::Term> ts;
        for (int k = 0; k < 3; ++k)
            ts.push_back({Monomial(std::vector<int>{(int)(rng() % 3), (int)(rng() % 3)}),
                          Scalar(Q, coeff(rng))});
        Polynomial h(Q, 2, ts);
        ScalarMatrix prod = s3.element(i) * s3.element(j);
        CHECK(act_matrix(prod, h) == s3.act(i, s3.act(j, h)));
    }
}

TEST_CASE("invariance checked on generators equals invariance on all elements") {
    MatrixGroup s3 = s3_reflection(Q);
    Polynomial f = parse_polynomial("x^2+3*x*y+3*y^2", Q, 2);
    for (long e = 0; e < s3.order(); ++e) CHECK(s3.act((int)e, f) == f);
    Polynomial not_inv = parse_polynomial("x^2", Q, 2);
    CHECK_FALSE(s3.is_invariant(not_inv));
    bool all_fixed = true;
    for (long e = 0; e < s3.order(); ++e)
        if (!(s3.act((int)e, not_inv) == not_inv)) all_fixed = false;
    CHECK_FALSE(all_fixed);
}

TEST_CASE("pseudoreflection detection") {
    CHECK_FALSE(is_pseudoreflection(ScalarMatrix::identity(Q, 2)));
    CHECK(is_pseudoreflection(m2(Q, 1, 3, 0, -1)));
    CHECK(is_pseudoreflection(m2(Q, -2, -3, 1, 2)));
    CHECK_FALSE(is_pseudoreflection(m2(Q, -1, 0, 0, -1)));

    CHECK(pseudoreflection_generated(s3_reflection(Q)));
    CHECK(pseudoreflection_generated(s3_permutation(Q)));
    CHECK(pseudoreflection_generated(d4_order8(Q)));
    CHECK_FALSE(pseudoreflection_generated(cyclic_rotation(4, Q)));
    CHECK_FALSE(pseudoreflection_generated(c5_companion(Q)));

    // Conjugation invariance on the S3 reflection group.
    MatrixGroup s3 = s3_reflection(Q);
    for (long i = 0; i < s3.order(); ++i)
        for (long j = 0; j < s3.order(); ++j) {
            ScalarMatrix conj = s3.element((int)j) * s3.element((int)i) * s3.inverse((int)j);
            CHECK(is_pseudoreflection(conj) == is_pseudoreflection(s3.element((int)i)));
        }
}

TEST_CASE("reduction mod p") {
    MatrixGroup s3 = s3_reflection(Domain::localized_integers(3));
    auto [im3, rep3] = s3.reduce_at_prime(3);
    CHECK(rep3.image_order == 6);
    CHECK(rep3.injective);
    CHECK(im3.order() == 6);
    CHECK(im3.domain().kind == DomainKind::PrimeField);

    MatrixGroup trivial = MatrixGroup::close({ScalarMatrix::identity(Z, 2)});
    auto [imt, rept] = trivial.reduce_at_prime(5);
    CHECK(rept.image_order == 1);
    CHECK(rept.injective);

    // diag(1,-1) = identity mod 2: order-2 group collapses.
    MatrixGroup c2 = c2_diagonal(Z);
    auto [im2, rep2] = c2.reduce_at_prime(2);
    CHECK(rep2.image_order == 1);
    CHECK_FALSE(rep2.injective);
    CHECK(im2.order() == 1);

    // Lagrange: the image order divides |G|.
    for (long p : {2L, 3L, 5L, 7L}) {
        for (auto& [name, g] : fixture_groups(Z)) {
            auto [img, rep] = g.reduce_at_prime(p);
            CHECK(Int(g.order()) % rep.image_order == 0);
        }
    }
}

TEST_CASE("with_domain validates entries") {
    MatrixGroup s3 = s3_reflection(Z);
    CHECK_NOTHROW(s3.with_domain(Domain::localized_integers(3)));
    CHECK_NOTHROW(s3.with_domain(Q));
    // A conjugated rotation with a 1/2 entry cannot live over Z_(2).
    ScalarMatrix conj = ScalarMatrix::from_rows(
        Q, {{Scalar(Q, 0), Scalar(Q, -2)}, {Scalar(Q, make_rat(1, 2)), Scalar(Q, 0)}});
    MatrixGroup half = MatrixGroup::close({conj});
    CHECK(half.order() == 4);
    CHECK_THROWS(half.with_domain(Domain::localized_integers(2)));
    CHECK_NOTHROW(half.with_domain(Domain::localized_integers(3)));
}
