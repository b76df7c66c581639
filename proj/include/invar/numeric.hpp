#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <limits>
#include <string>
#include <stdexcept>

namespace invar {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Trial-division primality check; p is small in every intended use.
inline bool is_prime_trial(const Int& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// Encodes v_p(0) = +infinity.
constexpr long VAL_INFINITY = std::numeric_limits<long>::max();

/// p-adic valuation of a nonzero integer.
inline long valuation_int(Int a, const Int& p) {
    if (a == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

/// p-adic valuation of a nonzero rational: v(num) - v(den).
inline long valuation_rat(const Rat& r, const Int& p) {
    if (r == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    if (r.get_num() % p == 0) v += valuation_int(r.get_num(), p);
    if (r.get_den() % p == 0) v -= valuation_int(r.get_den(), p);
    return v;
}

/// Inverse of a mod p (p prime, a not divisible by p).
inline Int mod_inverse(const Int& a, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), Int(((a % p) + p) % p).get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod p");
    return r;
}

inline Int mod_reduce(const Int& a, const Int& p) { return ((a % p) + p) % p; }

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

inline Int sqrt_exact(const Int& n) {
    // Returns floor(sqrt(n)); callers check the square themselves.
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace invar
