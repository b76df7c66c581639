#include "invar/domain.hpp"

#include <sstream>

namespace invar {

Domain Domain::prime_field(const Int& p) {
    if (!is_prime_trial(p)) throw std::invalid_argument("PrimeField: p must be prime, got " + p.get_str());
    return {DomainKind::PrimeField, p};
}

Domain Domain::localized_integers(const Int& p) {
    if (!is_prime_trial(p)) throw std::invalid_argument("LocalizedIntegers: p must be prime, got " + p.get_str());
    return {DomainKind::LocalizedIntegers, p};
}

std::string Domain::str() const {
    switch (kind) {
        case DomainKind::Integers: return "ZZ";
        case DomainKind::Rationals: return "QQ";
        case DomainKind::PrimeField: return "GF(" + p.get_str() + ")";
        case DomainKind::LocalizedIntegers: return "ZZ_(" + p.get_str() + ")";
    }
    return "?";
}

Scalar::Scalar(Domain d, const Rat& value) : dom_(std::move(d)), v_(value) {
    v_.canonicalize();
    switch (dom_.kind) {
        case DomainKind::Integers:
            if (!is_integer(v_)) throw std::invalid_argument("not an integer: " + v_.get_str());
            break;
        case DomainKind::Rationals:
            break;
        case DomainKind::PrimeField:
            if (!is_integer(v_)) {
                // Fractions are legal input; the denominator is inverted mod p.
                if (v_.get_den() % dom_.p == 0)
                    throw std::invalid_argument("denominator divisible by p in GF(p) scalar");
                Int num = mod_reduce(v_.get_num(), dom_.p);
                v_ = Rat(num * mod_inverse(v_.get_den(), dom_.p) % dom_.p);
            } else {
                v_ = Rat(mod_reduce(v_.get_num(), dom_.p));
            }
            break;
        case DomainKind::LocalizedIntegers:
            if (v_.get_den() % dom_.p == 0)
                throw std::invalid_argument("denominator divisible by " + dom_.p.get_str() +
                                            " in Z_(p) scalar: " + v_.get_str());
            break;
    }
}

void Scalar::check_same(const Scalar& o) const {
    if (!(dom_ == o.dom_)) throw std::invalid_argument("scalar domain mismatch: " + dom_.str() + " vs " + o.dom_.str());
}

Scalar Scalar::operator+(const Scalar& o) const { check_same(o); return Scalar(dom_, Rat(v_ + o.v_)); }
Scalar Scalar::operator-(const Scalar& o) const { check_same(o); return Scalar(dom_, Rat(v_ - o.v_)); }
Scalar Scalar::operator*(const Scalar& o) const { check_same(o); return Scalar(dom_, Rat(v_ * o.v_)); }
Scalar Scalar::operator-() const { return Scalar(dom_, Rat(-v_)); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    switch (dom_.kind) {
        case DomainKind::Rationals:
            return Scalar(dom_, Rat(1 / v_));
        case DomainKind::PrimeField:
            return Scalar(dom_, Rat(mod_inverse(v_.get_num(), dom_.p)));
        case DomainKind::Integers:
            if (v_ != 1 && v_ != -1) throw std::domain_error("not a unit of ZZ: " + v_.get_str());
            return *this;
        case DomainKind::LocalizedIntegers:
            if (!is_unit()) throw std::domain_error("not a unit of Z_(p): " + v_.get_str());
            return Scalar(dom_, Rat(1 / v_));
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar r = Scalar::one(dom_);
    for (unsigned long i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Scalar::is_unit() const {
    if (is_zero()) return false;
    switch (dom_.kind) {
        case DomainKind::Rationals:
        case DomainKind::PrimeField: return true;
        case DomainKind::Integers: return v_ == 1 || v_ == -1;
        case DomainKind::LocalizedIntegers: return v_.get_num() % dom_.p != 0;
    }
    return false;
}

std::string Scalar::str() const { return v_.get_str(); }

long valuation(const Scalar& c, const Int& p) {
    if (!is_prime_trial(p)) throw std::invalid_argument("valuation: p must be prime");
    if (c.domain().kind == DomainKind::PrimeField)
        throw std::invalid_argument("valuation undefined on GF(p) scalars");
    if (c.is_zero()) return VAL_INFINITY;
    return valuation_rat(c.value(), p);
}

Scalar reduce_at_prime(const Scalar& c, const Int& p) {
    Domain fp = Domain::prime_field(p);
    if (c.domain().kind == DomainKind::PrimeField) {
        if (c.domain().p != p) throw std::invalid_argument("reduce: prime mismatch");
        return c;
    }
    if (!c.is_zero() && valuation_rat(c.value(), p) < 0)
        throw std::domain_error("cannot reduce mod " + p.get_str() + ": denominator divisible by p in " + c.str());
    return Scalar(fp, c.value());
}

Scalar reduce_mod_p(const Scalar& c) {
    if (c.domain().kind != DomainKind::LocalizedIntegers)
        throw std::invalid_argument("reduce_mod_p expects a Z_(p) scalar");
    return reduce_at_prime(c, c.domain().p);
}

Scalar to_rational(const Scalar& c) {
    if (c.domain().kind == DomainKind::PrimeField)
        throw std::invalid_argument("cannot reinterpret GF(p) scalar as rational");
    return Scalar(Domain::rationals(), c.value());
}

Scalar to_localized(const Scalar& c, const Int& p) {
    if (c.domain().kind == DomainKind::PrimeField)
        throw std::invalid_argument("cannot reinterpret GF(p) scalar in Z_(p)");
    return Scalar(Domain::localized_integers(p), c.value());
}

Scalar lift_to_localized(const Scalar& c) {
    if (c.domain().kind != DomainKind::PrimeField)
        throw std::invalid_argument("lift_to_localized expects a GF(p) scalar");
    return Scalar(Domain::localized_integers(c.domain().p), c.value());
}

} // namespace invar
