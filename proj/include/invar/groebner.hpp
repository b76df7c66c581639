#pragma once

#include "invar/polynomial.hpp"

#include <optional>
#include <vector>

namespace invar {

/// Groebner basis over a field (Rationals or PrimeField). Z_(p) inputs are
/// embedded into Q before any basis computation; the engine itself is
/// field-only.
struct GroebnerBasis {
    MonomialOrder order;
    Domain domain = Domain::rationals();
    int nvars = 0;
    std::vector<Polynomial> generators;   // monic, sorted by leading monomial
    bool reduced = false;
};

/// Reduced Groebner basis of the ideal generated by gens.
GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& order);

/// Full normal form: no term of the result is divisible by any leading
/// monomial of G; f - normal_form(f, G) lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool ideal_member(const Polynomial& f, const GroebnerBasis& G);

/// Result of the elimination-based subalgebra membership test. When member,
/// expression is a polynomial in tag variables y_1..y_m with
/// expression(f_1,...,f_m) = f, verified by evaluation before returning.
struct SubalgebraResult {
    bool member = false;
    Polynomial expression;
};

SubalgebraResult subalgebra_membership(const Polynomial& f, const std::vector<Polynomial>& gens);

/// Reusable membership tester: builds the tag-variable elimination basis for
/// one generator list and answers many queries against it.
class SubalgebraTester {
public:
    explicit SubalgebraTester(const std::vector<Polynomial>& gens);
    SubalgebraResult test(const Polynomial& f) const;
    bool empty() const { return m_ == 0; }

private:
    int n_ = 0, m_ = 0;
    Domain dom_ = Domain::rationals();
    std::vector<Polynomial> fs_field_;
    GroebnerBasis gb_;
};

/// A nonzero polynomial q in tag variables with q(f_1,...,f_m) = 0.
struct RelationWitness {
    Polynomial relation;
};

struct IndependenceResult {
    bool independent = false;
    std::optional<RelationWitness> witness;
};

/// Kernel of the evaluation map y_i -> f_i, as a reduced Groebner basis in
/// the tag variables; empty exactly when the f_i are algebraically
/// independent.
GroebnerBasis relations_ideal(const std::vector<Polynomial>& fs);

IndependenceResult algebraically_independent(const std::vector<Polynomial>& fs);

} // namespace invar
