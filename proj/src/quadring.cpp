#include "invar/quadring.hpp"

#include <algorithm>
#include <sstream>

namespace invar {

QuadraticRing::QuadraticRing(long dd) : d(dd) {
    if (d >= 0) throw std::invalid_argument("QuadraticRing: d must be negative (imaginary quadratic)");
    long m = ((d % 4) + 4) % 4;
    if (m == 1)
        throw std::invalid_argument("QuadraticRing: d = 1 mod 4 makes Z[sqrt(d)] a non-maximal order");
    // Squarefree check by trial division.
    long ad = -d;
    for (long f = 2; f * f <= ad; ++f)
        if (ad % (f * f) == 0) throw std::invalid_argument("QuadraticRing: d must be squarefree");
}

QuadElem qadd(const QuadElem& x, const QuadElem& y) { return {x.a + y.a, x.b + y.b}; }

QuadElem qmul(const QuadraticRing& r, const QuadElem& x, const QuadElem& y) {
    return {x.a * y.a + Int(r.d) * x.b * y.b, x.a * y.b + x.b * y.a};
}

Int qnorm(const QuadraticRing& r, const QuadElem& x) { return x.a * x.a - Int(r.d) * x.b * x.b; }

std::string qelem_str(const QuadElem& x) {
    if (x.is_zero()) return "0";
    std::ostringstream o;
    if (x.a != 0) o << x.a.get_str();
    if (x.b != 0) {
        if (x.a != 0 && x.b > 0) o << "+";
        if (x.b == -1) o << "-";
        else if (x.b != 1) o << x.b.get_str() << "*";
        o << "s";
    }
    return o.str();
}

QuadElem parse_qelem(const std::string& text) {
    // Terms of the form k, k*s, s, -s separated by + or -.
    QuadElem r;
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && isspace((unsigned char)text[i])) ++i; };
    skip();
    if (i >= text.size()) throw std::invalid_argument("empty quadratic element");
    while (i < text.size()) {
        skip();
        int sign = 1;
        while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -sign;
            ++i;
            skip();
        }
        std::string digits;
        while (i < text.size() && isdigit((unsigned char)text[i])) digits.push_back(text[i++]);
        skip();
        if (i < text.size() && text[i] == '*') { ++i; skip(); }
        if (i < text.size() && (text[i] == 's' || text[i] == 'S')) {
            ++i;
            Int k = digits.empty() ? Int(1) : Int(digits);
            r.b += sign * k;
        } else {
            if (digits.empty()) throw std::invalid_argument("bad quadratic element: " + text);
            r.a += sign * Int(digits);
        }
        skip();
    }
    return r;
}

QuadIdeal QuadIdeal::hnf(const QuadraticRing& ring, std::vector<std::pair<Int, Int>> rows) {
    // Reduce the sqrt(d) column to a single pivot row by extended gcds,
    // then gcd the rational-integer column.
    Int b = 0, c = 0;
    std::vector<Int> pure;
    for (auto& [u, v] : rows) {
        if (v == 0) {
            if (u != 0) pure.push_back(u);
            continue;
        }
        if (c == 0) {
            b = u;
            c = v;
            continue;
        }
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
        Int nb = s * b + t * u;
        Int leftover = (c / g) * u - (v / g) * b;
        b = nb;
        c = g;
        if (leftover != 0) pure.push_back(leftover);
    }
    if (c == 0) throw std::invalid_argument("generators span no ideal (zero sqrt-part)");
    if (c < 0) { c = -c; b = -b; }
    Int a = 0;
    for (const Int& u : pure) mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), u.get_mpz_t());
    if (a == 0) throw std::invalid_argument("generators span no full-rank lattice");
    b = ((b % a) + a) % a;
    QuadIdeal id(ring, a, b, c);
    // Ideal property: closure under multiplication by sqrt(d).
    if (!id.contains({0, a}) || !id.contains(qmul(ring, {b, c}, {0, 1})))
        throw std::invalid_argument("lattice is not an ideal of " + ring.str());
    return id;
}

QuadIdeal QuadIdeal::from_generators(const QuadraticRing& ring, const std::vector<QuadElem>& gens) {
    std::vector<std::pair<Int, Int>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        rows.push_back({g.a, g.b});
        QuadElem gs = qmul(ring, g, {0, 1});
        rows.push_back({gs.a, gs.b});
    }
    if (rows.empty()) throw std::invalid_argument("ideal needs at least one nonzero generator");
    return hnf(ring, std::move(rows));
}

QuadIdeal QuadIdeal::unit_ideal(const QuadraticRing& ring) {
    return from_generators(ring, {{1, 0}});
}

QuadIdeal QuadIdeal::principal(const QuadraticRing& ring, const QuadElem& g) {
    return from_generators(ring, {g});
}

QuadIdeal QuadIdeal::mul(const QuadIdeal& other) const {
    if (!(ring_ == other.ring_)) throw std::invalid_argument("ideal product across different rings");
    std::vector<QuadElem> mine = basis(), theirs = other.basis();
    std::vector<std::pair<Int, Int>> rows;
    for (const auto& x : mine)
        for (const auto& y : theirs) {
            QuadElem p = qmul(ring_, x, y);
            rows.push_back({p.a, p.b});
            QuadElem ps = qmul(ring_, p, {0, 1});
            rows.push_back({ps.a, ps.b});
        }
    return hnf(ring_, std::move(rows));
}

QuadIdeal QuadIdeal::pow(long m) const {
    if (m < 0) throw std::invalid_argument("ideal_pow: negative exponent");
    QuadIdeal r = unit_ideal(ring_);
    for (long i = 0; i < m; ++i) r = r.mul(*this);
    return r;
}

bool QuadIdeal::contains(const QuadElem& x) const {
    if (x.b % c_ != 0) return false;
    Int y = x.b / c_;
    Int rem = x.a - y * b_;
    return rem % a_ == 0;
}

bool QuadIdeal::contains_ideal(const QuadIdeal& other) const {
    for (const auto& e : other.basis())
        if (!contains(e)) return false;
    return true;
}

std::optional<QuadElem> QuadIdeal::principal_generator() const {
    Int n = norm();
    Int ad(-ring_.d);
    // a^2 + |d| b^2 = N has |b| <= sqrt(N/|d|).
    Int bmax = sqrt_exact(n / ad);
    for (Int bb = 0; bb <= bmax; ++bb) {
        Int rem = n - ad * bb * bb;
        if (rem < 0) break;
        Int aa = sqrt_exact(rem);
        if (aa * aa != rem) continue;
        std::vector<QuadElem> cands;
        if (aa == 0 && bb == 0) continue;
        cands.push_back({aa, bb});
        if (bb != 0 && aa != 0) cands.push_back({aa, -bb});
        for (const auto& cand : cands) {
            if (principal(ring_, cand) == *this) return cand;
        }
    }
    return std::nullopt;
}

std::string QuadIdeal::str() const {
    std::ostringstream o;
    o << "[" << a_.get_str() << ", " << qelem_str({b_, c_}) << "]";
    return o.str();
}

std::vector<QuadIdeal> primes_above(const QuadraticRing& ring, const Int& q) {
    if (!is_prime_trial(q)) throw std::invalid_argument("primes_above: q must be prime");
    Int d(ring.d);
    Int dmod = ((d % q) + q) % q;
    if (dmod == 0) {
        // q | d: ramified, P = (q, sqrt(d)).
        return {QuadIdeal::from_generators(ring, {{q, 0}, {0, 1}})};
    }
    if (q == 2) {
        // d = 3 mod 4 here (d = 1 mod 4 rejected, d = 2 mod 4 has 2 | d):
        // x^2 - d = (x+1)^2 mod 2, ramified at (2, 1 + sqrt(d)).
        return {QuadIdeal::from_generators(ring, {{2, 0}, {1, 1}})};
    }
    for (Int r = 0; r < q; ++r) {
        if ((r * r - d) % q == 0) {
            // Split: (q, sqrt(d) - r) and its conjugate.
            QuadIdeal p1 = QuadIdeal::from_generators(ring, {{q, 0}, {-r, 1}});
            QuadIdeal p2 = QuadIdeal::from_generators(ring, {{q, 0}, {r, 1}});
            if (p1 == p2) return {p1};
            return {p1, p2};
        }
    }
    // Inert: (q) is prime.
    return {QuadIdeal::principal(ring, {q, 0})};
}

long ideal_valuation(const QuadIdeal& j, const QuadIdeal& p) {
    long v = 0;
    QuadIdeal pk = p;
    while (pk.contains_ideal(j)) {
        ++v;
        pk = pk.mul(p);
        if (v > 4096) throw std::logic_error("ideal valuation diverges; P is not prime?");
    }
    return v;
}

long element_valuation(const QuadraticRing& ring, const QuadElem& x, const QuadIdeal& p) {
    if (x.is_zero()) throw std::invalid_argument("valuation of zero element");
    return ideal_valuation(QuadIdeal::principal(ring, x), p);
}

LocalGenCertificate local_principal_generator(const QuadIdeal& a, const Int& q) {
    const QuadraticRing& ring = a.ring();
    std::vector<QuadIdeal> ps = primes_above(ring, q);
    std::vector<QuadElem> bas = a.basis();
    // Candidates: the HNF basis elements and small combinations; with at most
    // two primes above q a shifted sum always attains the minimal valuation.
    std::vector<QuadElem> cands = {bas[0], bas[1], qadd(bas[0], bas[1]),
                                   qadd(bas[0], qadd(bas[1], bas[1]))};
    std::vector<long> va;
    for (const auto& p : ps) va.push_back(ideal_valuation(a, p));
    for (const auto& g : cands) {
        if (g.is_zero()) continue;
        bool good = true;
        LocalGenCertificate cert;
        cert.generator = g;
        for (size_t i = 0; i < ps.size() && good; ++i) {
            LocalGenPrimeReport rep{ps[i], va[i], element_valuation(ring, g, ps[i]), true};
            if (rep.v_generator != rep.v_ideal) good = false;
            // Certificate: every basis element of A is g times a P-integral
            // element, i.e. v_P(b) >= v_P(g).
            for (const auto& b : bas)
                if (element_valuation(ring, b, ps[i]) < rep.v_generator) rep.basis_integral = false;
            if (!rep.basis_integral) good = false;
            cert.primes.push_back(rep);
        }
        if (good && a.contains(g)) {
            cert.verified = true;
            return cert;
        }
    }
    throw std::logic_error("no local principal generator among the candidate combinations");
}

GradingCheckReport blowup_grading_check(const QuadIdeal& a, int m_max) {
    if (m_max < 2) throw std::invalid_argument("blowup_grading_check: m_max must be >= 2");
    GradingCheckReport rep;
    rep.m_max = m_max;
    std::vector<QuadIdeal> powers;
    for (int m = 0; m <= m_max; ++m) powers.push_back(a.pow(m));
    rep.products_ok = true;
    for (int i = 0; i <= m_max; ++i)
        for (int j = 0; i + j <= m_max; ++j)
            if (!(powers[i].mul(powers[j]) == powers[i + j])) rep.products_ok = false;
    rep.norms_ok = true;
    Int n = a.norm();
    Int nm = 1;
    for (int m = 0; m <= m_max; ++m) {
        if (powers[m].norm() != nm) rep.norms_ok = false;
        nm *= n;
        auto gen = powers[m].principal_generator();
        rep.power_principal.push_back(gen.has_value());
        rep.power_generator.push_back(gen);
    }
    return rep;
}

} // namespace invar
