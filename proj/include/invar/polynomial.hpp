#pragma once

#include "invar/domain.hpp"
#include "invar/monomial.hpp"

#include <vector>
#include <string>
#include <functional>

namespace invar {

/// Exact sparse multivariate polynomial over a single coefficient domain.
/// Terms are kept sorted descending under GrevLex (the reference order) with
/// no zero coefficients, so structural equality is semantic equality.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Scalar coeff;
    };

    Polynomial() : dom_(Domain::rationals()), nvars_(0) {}
    Polynomial(Domain dom, int nvars) : dom_(std::move(dom)), nvars_(nvars) {}
    /// From an arbitrary term list; merges duplicates and drops zeros.
    Polynomial(Domain dom, int nvars, std::vector<Term> terms);

    static Polynomial zero(const Domain& d, int nvars) { return Polynomial(d, nvars); }
    static Polynomial constant(const Domain& d, int nvars, const Scalar& c);
    static Polynomial variable(const Domain& d, int nvars, int i);
    static Polynomial monomial_term(const Domain& d, const Monomial& m, const Scalar& c);

    const Domain& domain() const { return dom_; }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant()); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(unsigned long e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Scalar coeff(const Monomial& m) const;   // zero scalar if absent

    /// f(M x): substitute each variable x_i by the linear form given by row i
    /// of M (a square nvars x nvars matrix of scalars, stored row-major).
    Polynomial linear_substitute(const std::vector<std::vector<Scalar>>& m) const;

    /// Sum of the terms of total degree exactly d.
    Polynomial homogeneous_component(int d) const;

    /// Coefficient-wise map into another domain.
    Polynomial map_coefficients(const Domain& target,
                                const std::function<Scalar(const Scalar&)>& f) const;

    /// Substitute polynomials for the variables (composition).
    Polynomial compose(const std::vector<Polynomial>& fs) const;

    /// Evaluate at scalars.
    Scalar evaluate(const std::vector<Scalar>& xs) const;

    /// Formal partial derivative with respect to variable i.
    Polynomial derivative(int i) const;

    std::string str() const;

private:
    Domain dom_;
    int nvars_;
    std::vector<Term> terms_;
    void normalize();
    void check_compatible(const Polynomial& o) const;
};

/// arith() of the operations table: add/sub/mul with domain and arity checks.
enum class ArithOp { Add, Sub, Mul };
Polynomial arith(const Polynomial& f, const Polynomial& g, ArithOp op);

/// Coefficient-wise projection Z_(p)[x] -> F_p[x].
Polynomial map_coefficients_mod_p(const Polynomial& f);
/// Reinterpret a char-zero-coefficient polynomial over Q.
Polynomial poly_to_rationals(const Polynomial& f);
/// Reinterpret a polynomial with p-integral rational coefficients over Z_(p).
Polynomial poly_to_localized(const Polynomial& f, const Int& p);
/// Lift F_p coefficients to Z_(p) representatives in [0, p).
Polynomial poly_lift_to_localized(const Polynomial& f);

/// Minimum p-adic valuation over all coefficients; VAL_INFINITY for zero.
long min_coeff_valuation(const Polynomial& f, const Int& p);

/// Text format: "x^2+3*x*y+3*y^2". Variables print as x,y,z for n<=3 and
/// x1,x2,... otherwise; both spellings parse.
std::string format_polynomial(const Polynomial& f);
Polynomial parse_polynomial(const std::string& text, const Domain& d, int nvars);

std::string variable_name(int nvars, int i);

} // namespace invar
