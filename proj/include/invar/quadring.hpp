#pragma once

#include "invar/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace invar {

/// The imaginary quadratic ring Z[sqrt(d)], d squarefree and negative with
/// d = 2, 3 mod 4 so the ring is the maximal order (hence Dedekind). The
/// negativity makes the norm form positive definite, which keeps the
/// principality search finite.
struct QuadraticRing {
    long d;
    explicit QuadraticRing(long d);

    bool operator==(const QuadraticRing& o) const { return d == o.d; }
    std::string str() const { return "Z[sqrt(" + std::to_string(d) + ")]"; }
};

/// a + b sqrt(d)
struct QuadElem {
    Int a = 0, b = 0;
    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
};

QuadElem qadd(const QuadElem& x, const QuadElem& y);
QuadElem qmul(const QuadraticRing& r, const QuadElem& x, const QuadElem& y);
Int qnorm(const QuadraticRing& r, const QuadElem& x);   // a^2 - d b^2
std::string qelem_str(const QuadElem& x);
QuadElem parse_qelem(const std::string& text);

/// Nonzero ideal of Z[sqrt(d)] as a lattice in Hermite normal form with
/// basis rows (a, 0) and (b, c): the Z-module Z a + Z (b + c sqrt(d)),
/// a, c > 0, c | a, c | b, 0 <= b < a. Canonical: equal ideals have equal
/// (a, b, c).
class QuadIdeal {
public:
    static QuadIdeal from_generators(const QuadraticRing& ring, const std::vector<QuadElem>& gens);
    static QuadIdeal unit_ideal(const QuadraticRing& ring);
    static QuadIdeal principal(const QuadraticRing& ring, const QuadElem& g);

    const QuadraticRing& ring() const { return ring_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    std::vector<QuadElem> basis() const { return {{a_, 0}, {b_, c_}}; }

    Int norm() const { return a_ * c_; }
    QuadIdeal mul(const QuadIdeal& other) const;
    QuadIdeal pow(long m) const;

    bool contains(const QuadElem& x) const;
    bool contains_ideal(const QuadIdeal& other) const;
    bool operator==(const QuadIdeal& o) const {
        return ring_ == o.ring_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }

    /// Exhaustive norm-form search; the definite form makes it finite.
    std::optional<QuadElem> principal_generator() const;

    std::string str() const;

private:
    QuadIdeal(QuadraticRing ring, Int a, Int b, Int c)
        : ring_(ring), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
    static QuadIdeal hnf(const QuadraticRing& ring, std::vector<std::pair<Int, Int>> rows);

    QuadraticRing ring_;
    Int a_, b_, c_;
};

/// Primes of Z[sqrt(d)] above the rational prime q, from the splitting of
/// x^2 - d mod q: one ramified or inert prime, or a split conjugate pair.
std::vector<QuadIdeal> primes_above(const QuadraticRing& ring, const Int& q);

/// v_P(J): the exact power of the prime P dividing J.
long ideal_valuation(const QuadIdeal& j, const QuadIdeal& p);
/// v_P of a nonzero element.
long element_valuation(const QuadraticRing& ring, const QuadElem& x, const QuadIdeal& p);

struct LocalGenPrimeReport {
    QuadIdeal prime;
    long v_ideal = 0;       // v_P(A)
    long v_generator = 0;   // v_P(g); equality with v_ideal is the certificate
    bool basis_integral = true;  // every b/g is P-integral
};

struct LocalGenCertificate {
    QuadElem generator;
    std::vector<LocalGenPrimeReport> primes;
    bool verified = false;
};

/// An element g of A generating A R_P for every prime P above q, certified
/// by P-valuations both ways (g in A; each HNF basis element of A has
/// P-integral coordinates over g).
LocalGenCertificate local_principal_generator(const QuadIdeal& a, const Int& q);

struct GradingCheckReport {
    int m_max = 0;
    bool products_ok = false;   // A^i A^j = A^{i+j} for all i+j <= m_max
    bool norms_ok = false;      // N(A^m) = N(A)^m
    std::vector<bool> power_principal;              // index m = 0..m_max
    std::vector<std::optional<QuadElem>> power_generator;
};

/// The multiplicative consistency of the blowup grading B_I R = sum I^m.
GradingCheckReport blowup_grading_check(const QuadIdeal& a, int m_max);

} // namespace invar
