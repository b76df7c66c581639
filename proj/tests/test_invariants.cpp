#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/fixtures.hpp"
#include "invar/invariants.hpp"
#include "invar/groebner.hpp"

#include <algorithm>

using namespace invar;

namespace {
const Domain Q = Domain::rationals();
const Domain Z3 = Domain::localized_integers(3);
const Domain F3 = Domain::prime_field(3);

Polynomial P(const std::string& s, const Domain& d = Q, int n = 2) {
    return parse_polynomial(s, d, n);
}

std::vector<int> sorted_degrees(const GeneratorSet& gs) {
    std::vector<int> d = gs.degrees;
    std::sort(d.begin(), d.end());
    return d;
}
} // namespace

TEST_CASE("invariant spaces of the S3 reflection representation") {
    MatrixGroup gq = s3_reflection(Q);
    CHECK(invariant_space(gq, 0).rank() == 1);
    CHECK(invariant_space(gq, 1).rank() == 0);
    InvariantBasis d2 = invariant_space(gq, 2);
    REQUIRE(d2.rank() == 1);
    CHECK(d2.basis[0] == P("x^2+3*x*y+3*y^2"));   // echelon-monic

    auto [gbar, rep] = s3_reflection(Z3).reduce_at_prime(3);
    InvariantBasis f1 = invariant_space(gbar, 1);
    REQUIRE(f1.rank() == 1);
    CHECK(f1.basis[0] == P("x", F3));
    CHECK(invariant_space(gbar, 6).rank() == 2);
}

TEST_CASE("production route equals the stacked-kernel route") {
    for (auto& [name, g] : fixture_groups(Q)) {
        for (int d = 0; d <= 6; ++d) {
            INFO(name << " degree " << d);
            InvariantBasis a = invariant_space(g, d);
            InvariantBasis b = invariant_space_via_kernel(g, d);
            REQUIRE(a.rank() == b.rank());
            for (int i = 0; i < a.rank(); ++i) CHECK(a.basis[i] == b.basis[i]);
        }
    }
    // Modular side: both routes coincide there as well.
    auto [gbar, rep] = s3_reflection(Z3).reduce_at_prime(3);
    for (int d = 0; d <= 8; ++d) {
        InvariantBasis a = invariant_space(gbar, d);
        InvariantBasis b = invariant_space_via_kernel(gbar, d);
        REQUIRE(a.rank() == b.rank());
        for (int i = 0; i < a.rank(); ++i) CHECK(a.basis[i] == b.basis[i]);
    }
}

TEST_CASE("invariant lattice of the S3 reflection representation over Z_(3)") {
    MatrixGroup g = s3_reflection(Z3);

    InvariantBasis l2 = invariant_lattice(g, 2);
    REQUIRE(l2.rank() == 1);
    CHECK(l2.basis[0] == P("x^2+3*x*y+3*y^2", Z3));

    // Degree 6: rank equals dim_K K[x,y]^G_6 = 2; the saturated basis
    // reduces to an independent set containing g' up to unit.
    InvariantBasis l6 = invariant_lattice(g, 6);
    REQUIRE(l6.rank() == 2);
    std::vector<Polynomial> reductions;
    for (const auto& b : l6.basis) {
        CHECK(min_coeff_valuation(b, 3) == 0);
        reductions.push_back(map_coefficients_mod_p(b));
        CHECK_FALSE(reductions.back().is_zero());
    }
    // g' lies in the F_3-span of the reductions.
    Polynomial gp = P("x^4*y^2+x^2*y^4+y^6", F3);
    bool in_span = false;
    for (const Scalar& c0 : {Scalar(F3, 0), Scalar(F3, 1), Scalar(F3, 2)})
        for (const Scalar& c1 : {Scalar(F3, 0), Scalar(F3, 1), Scalar(F3, 2)})
            if (reductions[0].scaled(c0) + reductions[1].scaled(c1) == gp) in_span = true;
    CHECK(in_span);

    // Trivial group: the lattice at degree 1 is all of degree 1.
    MatrixGroup trivial = MatrixGroup::close({ScalarMatrix::identity(Z3, 2)});
    InvariantBasis l1 = invariant_lattice(trivial, 1);
    REQUIRE(l1.rank() == 2);
    CHECK(l1.basis[0] == P("x", Z3));
    CHECK(l1.basis[1] == P("y", Z3));
}

TEST_CASE("lattice saturation and localization across fixtures") {
    for (long p : {2L, 3L, 5L}) {
        Domain zp = Domain::localized_integers(p);
        for (auto& [name, g] : fixture_groups(zp)) {
            MatrixGroup gq = g.with_domain(Q);
            for (int d = 1; d <= 5; ++d) {
                INFO(name << " p=" << p << " d=" << d);
                InvariantBasis lat = invariant_lattice(g, d);
                InvariantBasis vs = invariant_space(gq, d);
                REQUIRE(lat.rank() == vs.rank());
                if (lat.rank() == 0) continue;
                // Q-spans agree: each lattice vector is a Q-combination of the
                // space basis and ranks match.
                std::vector<Polynomial> all = vs.basis;
                for (const auto& b : lat.basis) all.push_back(poly_to_rationals(b));
                // rank unchanged when adjoining lattice vectors
                auto monos = monomials_of_degree(g.dimension(), d);
                std::vector<QRow> rows;
                for (const auto& f : all) {
                    QRow r(monos.size(), Rat(0));
                    for (const auto& t : f.terms()) {
                        for (size_t i = 0; i < monos.size(); ++i)
                            if (monos[i] == t.mono) r[i] = t.coeff.value();
                    }
                    rows.push_back(std::move(r));
                }
                CHECK((int)rref_rational(rows).rows.size() == vs.rank());
                // Reductions mod p are independent.
                std::vector<PRow> red;
                for (const auto& b : lat.basis) {
                    QRow r(monos.size(), Rat(0));
                    for (const auto& t : b.terms())
                        for (size_t i = 0; i < monos.size(); ++i)
                            if (monos[i] == t.mono) r[i] = t.coeff.value();
                    red.push_back(reduce_row_modp(r, p));
                }
                CHECK((int)rref_modp(red, p).rows.size() == lat.rank());
            }
        }
    }
}

TEST_CASE("reynolds operator") {
    MatrixGroup s3p = s3_permutation(Q);
    Polynomial x1 = parse_polynomial("x", Q, 3);
    Polynomial r = reynolds(s3p, x1);
    CHECK(r == parse_polynomial("1/3*x+1/3*y+1/3*z", Q, 3));

    // Projection: fixes invariants, idempotent.
    MatrixGroup gq = s3_reflection(Q);
    Polynomial f = P("x^2+3*x*y+3*y^2");
    CHECK(reynolds(gq, f) == f);
    Polynomial h = P("x^2-5*x*y+y^2+x");
    CHECK(reynolds(gq, reynolds(gq, h)) == reynolds(gq, h));
    CHECK(gq.is_invariant(reynolds(gq, h)));

    // Unavailable in the modular situation.
    CHECK_THROWS(reynolds(s3_reflection(Z3), P("x^2", Z3)));
    auto [gbar, rep] = s3_reflection(Z3).reduce_at_prime(3);
    CHECK_THROWS(reynolds(gbar, P("x", F3)));
}

TEST_CASE("reynolds image spans the invariant space per degree") {
    MatrixGroup g = d4_order8(Q);
    for (int d = 1; d <= 6; ++d) {
        InvariantBasis vs = invariant_space(g, d);
        std::vector<Polynomial> images;
        for (const auto& m : monomials_of_degree(2, d)) {
            Polynomial r = reynolds(g, Polynomial::monomial_term(Q, m, Scalar::one(Q)));
            if (!r.is_zero()) images.push_back(r);
        }
        for (const auto& im : images) CHECK(g.is_invariant(im));
        // dim of the span equals the space dimension
        auto monos = monomials_of_degree(2, d);
        std::vector<QRow> rows;
        for (const auto& f : images) {
            QRow r(monos.size(), Rat(0));
            for (const auto& t : f.terms())
                for (size_t i = 0; i < monos.size(); ++i)
                    if (monos[i] == t.mono) r[i] = t.coeff.value();
            rows.push_back(std::move(r));
        }
        CHECK((int)rref_rational(rows).rows.size() == vs.rank());
    }
}

TEST_CASE("molien dimensions: closed forms") {
    MatrixGroup trivial = MatrixGroup::close({ScalarMatrix::identity(Q, 2)});
    std::vector<Int> dt = molien_dimensions(trivial, 2);
    CHECK(dt == std::vector<Int>{1, 2, 3});

    std::vector<Int> ds3 = molien_dimensions(s3_reflection(Q), 6);
    CHECK(ds3 == std::vector<Int>{1, 0, 1, 1, 1, 1, 2});

    MatrixGroup sign = MatrixGroup::close({ScalarMatrix::from_rows(
        Q, {{Scalar(Q, -1), Scalar(Q, 0)}, {Scalar(Q, 0), Scalar(Q, -1)}})});
    std::vector<Int> dsign = molien_dimensions(sign, 2);
    CHECK(dsign == std::vector<Int>{1, 0, 3});

    CHECK_THROWS(molien_dimensions(s3_reflection(Z3).reduce_at_prime(3).first, 3));

    // D4 in its reflection representation has Hilbert series
    // 1/((1-t^2)(1-t^4)).
    std::vector<Int> d4 = molien_dimensions(d4_order8(Q), 8);
    CHECK(d4 == std::vector<Int>{1, 0, 1, 0, 2, 0, 2, 0, 3});
}

TEST_CASE("closed-form dimension pins") {
    // Rotation by 2pi/k diagonalizes over C as (zeta, zeta-bar); the fixed
    // space of degree d counts pairs a+b = d with k | a-b, and invariant
    // dimensions are stable under field extension.
    std::vector<Int> c4 = molien_dimensions(cyclic_rotation(4, Q), 8);
    CHECK(c4 == std::vector<Int>{1, 0, 1, 0, 3, 0, 3, 0, 5});
    std::vector<Int> c6 = molien_dimensions(cyclic_rotation(6, Q), 8);
    CHECK(c6 == std::vector<Int>{1, 0, 1, 0, 1, 0, 3, 0, 3});

    // Symmetric polynomials in three variables: partitions into parts <= 3.
    std::vector<Int> s3p = molien_dimensions(s3_permutation(Q), 8);
    CHECK(s3p == std::vector<Int>{1, 1, 2, 3, 4, 5, 7, 8, 10});

    for (int d = 0; d <= 8; ++d) {
        CHECK(Int(invariant_space(cyclic_rotation(4, Q), d).rank()) == c4[d]);
        CHECK(Int(invariant_space(s3_permutation(Q), d).rank()) == s3p[d]);
    }
}

TEST_CASE("the full linear group over F_2 has the classical generators") {
    // Reducing the S3 reflection representation mod 2 hits all of Gl_2(F_2);
    // its invariant ring is generated in degrees 2 and 3.
    auto [gbar, rep] = s3_reflection(Domain::integers()).reduce_at_prime(2);
    CHECK(gbar.order() == 6);
    CHECK(rep.injective);
    GeneratorSet gs = minimal_generators(gbar, 6);
    Domain f2 = Domain::prime_field(2);
    REQUIRE(gs.generators.size() == 2);
    CHECK(gs.generators[0] == parse_polynomial("x^2+x*y+y^2", f2, 2));
    CHECK(gs.generators[1] == parse_polynomial("x^2*y+x*y^2", f2, 2));
    CHECK(gs.certified_complete);
}

TEST_CASE("minimal generators across the example's three rings") {
    MatrixGroup gq = s3_reflection(Q);
    GeneratorSet kq = minimal_generators(gq, 6);
    CHECK(sorted_degrees(kq) == std::vector<int>{2, 3});
    CHECK(kq.certified_complete);

    auto [gbar, rep] = s3_reflection(Z3).reduce_at_prime(3);
    GeneratorSet kf = minimal_generators(gbar, 6);
    CHECK(sorted_degrees(kf) == std::vector<int>{1, 6});
    CHECK(kf.certified_complete);

    GeneratorSet kr = minimal_generators(s3_reflection(Z3), 6);
    CHECK(sorted_degrees(kr) == std::vector<int>{2, 3, 6});

    for (const auto& g : kr.generators) CHECK(s3_reflection(Z3).is_invariant(g));
    for (const auto& g : kq.generators) CHECK(gq.is_invariant(g));
    for (const auto& g : kf.generators) CHECK(gbar.is_invariant(g));
}

TEST_CASE("default degree bounds") {
    CHECK(default_degree_bound(s3_reflection(Q)) == 6);
    auto [gbar, rep] = s3_reflection(Z3).reduce_at_prime(3);
    CHECK(default_degree_bound(gbar) == 2 * 5);
    CHECK(default_degree_bound(s3_reflection(Z3)) == 2 * 5);
    CHECK(default_degree_bound(s3_reflection(Domain::localized_integers(5))) == 6);
}
