#pragma once

#include "invar/numeric.hpp"
#include <optional>
#include <string>

namespace invar {

enum class DomainKind { Integers, Rationals, PrimeField, LocalizedIntegers };

/// Coefficient-domain descriptor. The prime is present exactly for
/// PrimeField(p) and LocalizedIntegers(p), i.e. F_p and Z_(p).
struct Domain {
    DomainKind kind = DomainKind::Rationals;
    Int p = 0;

    static Domain integers() { return {DomainKind::Integers, 0}; }
    static Domain rationals() { return {DomainKind::Rationals, 0}; }
    static Domain prime_field(const Int& p);
    static Domain localized_integers(const Int& p);

    bool has_prime() const {
        return kind == DomainKind::PrimeField || kind == DomainKind::LocalizedIntegers;
    }
    bool is_field() const {
        return kind == DomainKind::Rationals || kind == DomainKind::PrimeField;
    }
    /// Characteristic-zero domains: Z, Q, Z_(p).
    bool char_zero() const { return kind != DomainKind::PrimeField; }

    /// The fraction field: Q for Z, Q, Z_(p); F_p for itself.
    Domain fraction_field() const {
        return kind == DomainKind::PrimeField ? *this : rationals();
    }

    bool operator==(const Domain& o) const = default;
    std::string str() const;
};

/// Immutable exact scalar in one of the four domains. Rationals are kept in
/// lowest terms with positive denominator; prime-field values in [0, p).
/// Z_(p) values must have denominator prime to p, checked at construction.
class Scalar {
public:
    Scalar() : dom_(Domain::rationals()), v_(0) {}
    Scalar(Domain d, const Rat& value);
    Scalar(Domain d, const Int& value) : Scalar(d, Rat(value)) {}
    Scalar(Domain d, long value) : Scalar(d, Rat(value)) {}

    static Scalar zero(const Domain& d) { return Scalar(d, Rat(0)); }
    static Scalar one(const Domain& d) { return Scalar(d, Rat(1)); }

    const Domain& domain() const { return dom_; }
    const Rat& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    /// Division in the fraction field; throws on zero divisor or when the
    /// quotient leaves a non-field domain (Z, Z_(p)).
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    bool operator==(const Scalar& o) const { return dom_ == o.dom_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// True when the value is a unit of its domain.
    bool is_unit() const;

    std::string str() const;

private:
    Domain dom_;
    Rat v_;
    void check_same(const Scalar& o) const;
};

/// v_p of a rational or Z_(p) scalar; VAL_INFINITY encodes the zero input.
long valuation(const Scalar& c, const Int& p);

/// The projection Z_(p) -> F_p: denominator inverted mod p.
/// Rejects scalars whose denominator is divisible by p.
Scalar reduce_mod_p(const Scalar& c);

/// Reduce an Integers or LocalizedIntegers scalar at an explicit prime.
Scalar reduce_at_prime(const Scalar& c, const Int& p);

/// Reinterpret a scalar of any char-zero domain as a rational.
Scalar to_rational(const Scalar& c);
/// Reinterpret a rational with p-integral denominator as a Z_(p) scalar.
Scalar to_localized(const Scalar& c, const Int& p);
/// Lift an F_p residue to Z_(p) (the representative in [0, p)).
Scalar lift_to_localized(const Scalar& c);

} // namespace invar
