#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invar/groebner.hpp"
#include "invar/linalg.hpp"

#include <map>
#include <random>

using namespace invar;

namespace {

const Domain Q = Domain::rationals();

Polynomial P(const std::string& s, int n = 1, const Domain& d = Q) {
    return parse_polynomial(s, d, n);
}

// Exhaustive bounded-degree membership: f in (g_1,...,g_k) with multiplier
// degrees <= B, decided by exact linear algebra over the coefficient field.
bool brute_force_member(const Polynomial& f, const std::vector<Polynomial>& gens, int bound) {
    int n = f.nvars();
    int maxdeg = 0;
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
    int total = bound + maxdeg;
    std::vector<Monomial> all;
    for (int d = 0; d <= total; ++d)
        for (const auto& m : monomials_of_degree(n, d)) all.push_back(m);
    std::map<std::vector<int>, int> idx;
    for (size_t i = 0; i < all.size(); ++i) idx[all[i].e] = (int)i;

    std::vector<Polynomial> span_polys;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        for (int d = 0; d <= bound; ++d)
            for (const auto& m : monomials_of_degree(n, d))
                span_polys.push_back(g * Polynomial::monomial_term(g.domain(), m, Scalar::one(g.domain())));
    }

    if (f.domain().kind == DomainKind::PrimeField) {
        long long p = f.domain().p.get_si();
        auto vec = [&](const Polynomial& q) {
            PRow r(all.size(), 0);
            for (const auto& t : q.terms()) r[idx.at(t.mono.e)] = t.coeff.value().get_num().get_si();
            return r;
        };
        std::vector<PRow> span;
        for (const auto& q : span_polys) span.push_back(vec(q));
        PEchelon e = rref_modp(span, p);
        PRow target = vec(f);
        for (size_t r = 0; r < e.rows.size(); ++r) {
            int c = e.pivots[r];
            if (target[c] == 0) continue;
            long long t = target[c];
            for (size_t j = 0; j < target.size(); ++j)
                target[j] = ((target[j] - t * e.rows[r][j]) % p + p) % p;
        }
        for (long long x : target)
            if (x != 0) return false;
        return true;
    }

    auto vec = [&](const Polynomial& q) {
        QRow r(all.size(), Rat(0));
        for (const auto& t : q.terms()) r[idx.at(t.mono.e)] = t.coeff.value();
        return r;
    };
    std::vector<QRow> span;
    for (const auto& q : span_polys) span.push_back(vec(q));
    QEchelon e = rref_rational(span);
    QRow target = vec(f);
    for (size_t r = 0; r < e.rows.size(); ++r) {
        int c = e.pivots[r];
        if (target[c] == 0) continue;
        Rat t = target[c];
        for (size_t j = 0; j < target.size(); ++j) target[j] -= t * e.rows[r][j];
    }
    for (const Rat& x : target)
        if (x != 0) return false;
    return true;
}

Polynomial random_poly(std::mt19937& rng, const Domain& dom, int n, int maxdeg, int nterms) {
    std::uniform_int_distribution<long> coeff(-2, 2);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::vector<Polynomial::Term> ts;
    for (int k = 0; k < nterms; ++k) {
        std::vector<int> e(n, 0);
        int d = deg(rng);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < d; ++i) e[pick(rng)]++;
        ts.push_back({Monomial(e), Scalar(dom, coeff(rng))});
    }
    return Polynomial(dom, n, ts);
}

} // namespace

TEST_CASE("buchberger on principal and collapsing ideals") {
    GroebnerBasis g1 = buchberger({P("x")}, MonomialOrder::lex());
    REQUIRE(g1.generators.size() == 1);
    CHECK(g1.generators[0] == P("x"));

    GroebnerBasis g2 = buchberger({P("x^2-1"), P("x-1")}, MonomialOrder::lex());
    REQUIRE(g2.generators.size() == 1);
    CHECK(g2.generators[0] == P("x-1"));

    GroebnerBasis g0 = buchberger({}, MonomialOrder::lex());
    CHECK(g0.generators.empty());
}

TEST_CASE("normal form basics") {
    GroebnerBasis gx = buchberger({P("x")}, MonomialOrder::lex());
    CHECK(normal_form(P("x^2"), gx).is_zero());
    CHECK(normal_form(P("x+1"), gx) == P("1"));
    GroebnerBasis g0 = buchberger({}, MonomialOrder::lex());
    CHECK(normal_form(P("x^3+x"), g0) == P("x^3+x"));
}

TEST_CASE("reduced basis properties and the Buchberger criterion") {
    std::mt19937 rng(123);
    MonomialOrder order = MonomialOrder::grevlex();
    for (int it = 0; it < 30; ++it) {
        std::vector<Polynomial> gens;
        int n = 2 + (int)(rng() % 2);
        int k = 1 + (int)(rng() % 3);
        for (int i = 0; i < k; ++i) gens.push_back(random_poly(rng, Q, n, 3, 3));
        GroebnerBasis gb = buchberger(gens, order);
        // Reduced: monic, and no term of any generator is divisible by the
        // leading monomial of another.
        for (size_t i = 0; i < gb.generators.size(); ++i) {
            const auto& gi = gb.generators[i];
            Monomial lmi = gi.terms()[0].mono;
            for (const auto& t : gi.terms()) {
                if (order.compare(t.mono, lmi) > 0) lmi = t.mono;
            }
            for (size_t j = 0; j < gb.generators.size(); ++j) {
                if (i == j) continue;
                Monomial lmj = gb.generators[j].terms()[0].mono;
                for (const auto& t : gb.generators[j].terms())
                    if (order.compare(t.mono, lmj) > 0) lmj = t.mono;
                for (const auto& t : gi.terms()) CHECK(!lmj.divides(t.mono));
            }
        }
        // Buchberger criterion: every S-polynomial reduces to zero.
        for (size_t i = 0; i < gb.generators.size(); ++i)
            for (size_t j = i + 1; j < gb.generators.size(); ++j) {
                const auto &a = gb.generators[i], &b = gb.generators[j];
                Monomial lma = a.terms()[0].mono, lmb = b.terms()[0].mono;
                for (const auto& t : a.terms()) if (order.compare(t.mono, lma) > 0) lma = t.mono;
                for (const auto& t : b.terms()) if (order.compare(t.mono, lmb) > 0) lmb = t.mono;
                Monomial l = Monomial::lcm(lma, lmb);
                Polynomial sa = Polynomial::monomial_term(Q, l.divide(lma), a.coeff(lma).inverse());
                Polynomial sb = Polynomial::monomial_term(Q, l.divide(lmb), b.coeff(lmb).inverse());
                Polynomial s = a * sa - b * sb;
                CHECK(normal_form(s, gb).is_zero());
            }
    }
}

TEST_CASE("normal form membership agrees with bounded brute force") {
    std::mt19937 rng(777);
    Domain f5 = Domain::prime_field(5);
    int checked = 0;
    for (int it = 0; it < 50; ++it) {
        const Domain& dom = (it % 2 == 0) ? Q : f5;
        int n = 1 + (int)(rng() % 3);
        int k = 1 + (int)(rng() % 3);
        std::vector<Polynomial> gens;
        for (int i = 0; i < k; ++i) gens.push_back(random_poly(rng, dom, n, 3, 3));
        GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex());
        for (int c = 0; c < 4; ++c) {
            Polynomial f;
            if (c % 2 == 0) {
                f = random_poly(rng, dom, n, 4, 4);
            } else {
                f = Polynomial::zero(dom, n);
                for (const auto& g : gens) f = f + g * random_poly(rng, dom, n, 2, 2);
            }
            bool nf_member = normal_form(f, gb).is_zero();
            bool bf_member = brute_force_member(f, gens, 6);
            CHECK(nf_member == bf_member);
            ++checked;
        }
    }
    CHECK(checked >= 200 / 2);
}

TEST_CASE("reduced basis is independent of the generator presentation") {
    std::mt19937 rng(90210);
    for (int it = 0; it < 20; ++it) {
        int n = 2;
        std::vector<Polynomial> gens = {random_poly(rng, Q, n, 3, 3), random_poly(rng, Q, n, 2, 3)};
        GroebnerBasis a = buchberger(gens, MonomialOrder::grevlex());
        // Adjoin a random combination and rescale: same ideal, same basis.
        std::vector<Polynomial> gens2 = gens;
        gens2.push_back(gens[0] * random_poly(rng, Q, n, 2, 2) + gens[1].scaled(Scalar(Q, 3)));
        gens2[0] = gens2[0].scaled(Scalar(Q, make_rat(-7, 2)));
        GroebnerBasis b = buchberger(gens2, MonomialOrder::grevlex());
        REQUIRE(a.generators.size() == b.generators.size());
        for (size_t i = 0; i < a.generators.size(); ++i) CHECK(a.generators[i] == b.generators[i]);
    }
}

TEST_CASE("normal form is idempotent and linear") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 25; ++it) {
        int n = 2;
        std::vector<Polynomial> gens = {random_poly(rng, Q, n, 3, 3), random_poly(rng, Q, n, 2, 2)};
        GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex());
        Polynomial f = random_poly(rng, Q, n, 4, 4), g = random_poly(rng, Q, n, 4, 4);
        Polynomial nf = normal_form(f, gb);
        CHECK(normal_form(nf, gb) == nf);
        CHECK(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));
        CHECK(normal_form(f.scaled(Scalar(Q, 7)), gb) == normal_form(f, gb).scaled(Scalar(Q, 7)));
    }
}

TEST_CASE("subalgebra membership") {
    Domain f3 = Domain::prime_field(3);
    SubalgebraResult r1 = subalgebra_membership(P("x^2*y^2", 2), {P("x^2", 2), P("y^2", 2)});
    CHECK(r1.member);
    CHECK(r1.expression == P("x*y", 2));   // y1*y2 in tag variables

    CHECK_FALSE(subalgebra_membership(P("x", 2), {P("x^2", 2)}).member);

    // The second modular generator of the S3 example is not in F_3[x].
    Polynomial gp = P("x^4*y^2+x^2*y^4+y^6", 2, f3);
    CHECK_FALSE(subalgebra_membership(gp, {P("x", 2, f3)}).member);
    CHECK(subalgebra_membership(P("x^6", 2, f3), {P("x", 2, f3)}).member);
}

TEST_CASE("algebraic independence and relation witnesses") {
    CHECK(algebraically_independent({P("x", 2), P("y", 2)}).independent);

    IndependenceResult dep = algebraically_independent({P("x^2", 1), P("x^3", 1)});
    REQUIRE_FALSE(dep.independent);
    REQUIRE(dep.witness.has_value());
    CHECK(dep.witness->relation == P("x^3-y^2", 2));   // y1^3 - y2^2

    Domain f3 = Domain::prime_field(3);
    IndependenceResult dep3 = algebraically_independent({P("x^2", 2, f3), P("2*x^3", 2, f3)});
    CHECK_FALSE(dep3.independent);

    GroebnerBasis rel0 = relations_ideal({P("x", 2), P("y", 2)});
    CHECK(rel0.generators.empty());
    GroebnerBasis rel1 = relations_ideal({P("x+y", 2), P("x+y", 2)});
    REQUIRE(rel1.generators.size() == 1);
    CHECK(rel1.generators[0] == P("x-y", 2));   // y1 - y2
}

TEST_CASE("independence is stable under permutation and unit scaling") {
    std::mt19937 rng(555);
    for (int it = 0; it < 10; ++it) {
        std::vector<Polynomial> fs = {random_poly(rng, Q, 2, 3, 3), random_poly(rng, Q, 2, 2, 2)};
        if (fs[0].is_zero() || fs[1].is_zero()) continue;
        bool a = algebraically_independent(fs).independent;
        std::vector<Polynomial> swapped = {fs[1], fs[0]};
        CHECK(algebraically_independent(swapped).independent == a);
        std::vector<Polynomial> scaled = {fs[0].scaled(Scalar(Q, make_rat(5, 3))), fs[1]};
        CHECK(algebraically_independent(scaled).independent == a);
    }
}
