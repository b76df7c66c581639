#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/polynomial.hpp"
#include "invar/matrix.hpp"

#include <random>

using namespace invar;

namespace {
const Domain Q = Domain::rationals();

Polynomial P(const std::string& s, int n = 2, const Domain& d = Q) {
    return parse_polynomial(s, d, n);
}

std::vector<std::vector<Scalar>> mat2(long a, long b, long c, long d, const Domain& dom = Q) {
    return {{Scalar(dom, a), Scalar(dom, b)}, {Scalar(dom, c), Scalar(dom, d)}};
}
} // namespace

TEST_CASE("arith basics") {
    CHECK(arith(P("x+y"), P("x-y"), ArithOp::Add) == P("2*x"));
    CHECK(arith(P("x+y"), P("x-y"), ArithOp::Mul) == P("x^2-y^2"));
    CHECK(arith(P("x^2+3*x*y"), Polynomial::zero(Q, 2), ArithOp::Mul).is_zero());
    CHECK_THROWS(arith(P("x"), P("x", 3), ArithOp::Add));
    Domain f5 = Domain::prime_field(5);
    CHECK_THROWS(arith(P("x"), P("x", 2, f5), ArithOp::Add));
}

TEST_CASE("parse and format round-trip") {
    for (const char* s : {"x^2+3*x*y+3*y^2", "2*x^3+9*x^2*y+9*x*y^2", "-x^4*y^2-6*x^3*y^3",
                          "1/2*x-3", "0", "7", "x"}) {
        Polynomial f = P(s);
        CHECK(parse_polynomial(format_polynomial(f), Q, 2) == f);
    }
    CHECK(format_polynomial(P("y+x")) == "x+y");
    CHECK_THROWS(P("x+"));
    CHECK_THROWS(P("q"));
}

TEST_CASE("linear substitution") {
    CHECK(P("x^2").linear_substitute(mat2(1, 0, 0, 1)) == P("x^2"));
    // The first S3 reflection generator sends x to x + 3y.
    CHECK(P("x").linear_substitute(mat2(1, 3, 0, -1)) == P("x+3*y"));
    CHECK(P("x+y").linear_substitute(mat2(2, 0, 0, 2)) == P("2*x+2*y"));
    CHECK_THROWS(P("x").linear_substitute({{Scalar(Q, 1)}}));
}

TEST_CASE("linear substitution composes with the matrix product") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> e(-3, 3);
    for (int it = 0; it < 40; ++it) {
        std::vector<std::vector<Scalar>> a = mat2(e(rng), e(rng), e(rng), e(rng));
        std::vector<std::vector<Scalar>> b = mat2(e(rng), e(rng), e(rng), e(rng));
        ScalarMatrix ma = ScalarMatrix::from_rows(Q, a), mb = ScalarMatrix::from_rows(Q, b);
        ScalarMatrix mab = ma * mb;
        Polynomial f = P("x^2-2*x*y+3*y^3+x");
        Polynomial lhs = f.linear_substitute(a).linear_substitute(b);
        // f(A x) then x -> B x gives f(A B x).
        Polynomial rhs = f.linear_substitute(mab.to_rows());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("homogeneous components") {
    Polynomial f = P("x^2+3*x*y+3*y^2+x");
    CHECK(f.homogeneous_component(2) == P("x^2+3*x*y+3*y^2"));
    CHECK(f.homogeneous_component(1) == P("x"));
    CHECK(f.homogeneous_component(9).is_zero());
    CHECK(P("7").homogeneous_component(0) == P("7"));
    Polynomial sum = Polynomial::zero(Q, 2);
    for (int d = 0; d <= f.degree(); ++d) sum = sum + f.homogeneous_component(d);
    CHECK(sum == f);
}

TEST_CASE("coefficient reduction Z_(3) -> F_3") {
    Domain z3 = Domain::localized_integers(3);
    Domain f3 = Domain::prime_field(3);
    Polynomial f = P("x^2+3*x*y+3*y^2", 2, z3);
    CHECK(map_coefficients_mod_p(f) == P("x^2", 2, f3));
    Polynomial g = P("2*x^3+9*x^2*y+9*x*y^2", 2, z3);
    CHECK(map_coefficients_mod_p(g) == P("2*x^3", 2, f3));
    CHECK(map_coefficients_mod_p(Polynomial::zero(z3, 2)).is_zero());
}

TEST_CASE("map_coefficients commutes with ring ops") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> c(-9, 9);
    Domain z3 = Domain::localized_integers(3);
    auto rnd = [&]() {
        std::vector<Polynomial::Term> ts;
        for (int k = 0; k < 4; ++k) {
            Monomial m(std::vector<int>{(int)(rng() % 3), (int)(rng() % 3)});
            ts.push_back({m, Scalar(z3, c(rng))});
        }
        return Polynomial(z3, 2, ts);
    };
    for (int it = 0; it < 60; ++it) {
        Polynomial a = rnd(), b = rnd();
        CHECK(map_coefficients_mod_p(a * b) == map_coefficients_mod_p(a) * map_coefficients_mod_p(b));
        CHECK(map_coefficients_mod_p(a + b) == map_coefficients_mod_p(a) + map_coefficients_mod_p(b));
    }
}

TEST_CASE("monomial orders are multiplicative total orders with 1 minimal") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> e(0, 4);
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::grevlex(),
                                         MonomialOrder::block_elimination(2)};
    Monomial one(3);
    for (int it = 0; it < 400; ++it) {
        Monomial a(std::vector<int>{e(rng), e(rng), e(rng)});
        Monomial b(std::vector<int>{e(rng), e(rng), e(rng)});
        Monomial c(std::vector<int>{e(rng), e(rng), e(rng)});
        for (const auto& o : orders) {
            CHECK(o.compare(a, b) == -o.compare(b, a));
            if (!(a == one)) CHECK(o.compare(one, a) < 0);
            if (o.compare(a, b) < 0) CHECK(o.compare(a * c, b * c) < 0);
            // transitivity spot-check
            if (o.compare(a, b) < 0 && o.compare(b, c) < 0) CHECK(o.compare(a, c) < 0);
        }
    }
}

TEST_CASE("block order eliminates the first block") {
    MonomialOrder o = MonomialOrder::block_elimination(1);
    // any monomial containing x beats any pure-y monomial
    Monomial x(std::vector<int>{1, 0}), y9(std::vector<int>{0, 9});
    CHECK(o.compare(x, y9) > 0);
}

TEST_CASE("derivative") {
    CHECK(P("x^3+x*y").derivative(0) == P("3*x^2+y"));
    CHECK(P("x^3+x*y").derivative(1) == P("x"));
    CHECK(P("7").derivative(0).is_zero());
}
