#include "invar/example_s3.hpp"
#include "invar/fixtures.hpp"

#include <algorithm>
#include <sstream>

namespace invar {

namespace {

const Int kP = 3;

std::string degrees_str(std::vector<int> d) {
    std::sort(d.begin(), d.end());
    std::ostringstream o;
    o << "{";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) o << ",";
        o << d[i];
    }
    o << "}";
    return o.str();
}

/// Equal up to a unit of Z_(3): proportional with a ratio of valuation 0.
bool equal_up_to_unit(const Polynomial& a, const Polynomial& b, const Int& p) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms().size() != b.terms().size()) return false;
    Rat ratio = a.terms()[0].coeff.value() / b.terms()[0].coeff.value();
    ratio.canonicalize();
    if (valuation_rat(ratio, p) != 0) return false;
    for (size_t i = 0; i < a.terms().size(); ++i) {
        if (!(a.terms()[i].mono == b.terms()[i].mono)) return false;
        Rat r = a.terms()[i].coeff.value() / b.terms()[i].coeff.value();
        r.canonicalize();
        if (r != ratio) return false;
    }
    return true;
}

} // namespace

ExampleS3Report run_example_s3() {
    ExampleS3Report rep;
    auto check = [&](const std::string& name, const std::string& expected,
                     const std::string& computed, bool ok) {
        rep.checks.push_back({name, expected, computed, ok});
    };

    Domain dq = Domain::rationals();
    Domain dz3 = Domain::localized_integers(kP);
    Domain df3 = Domain::prime_field(kP);

    MatrixGroup g = s3_reflection(dz3);
    check("group order", "6", std::to_string(g.order()), g.order() == 6);

    Polynomial f = parse_polynomial("x^2+3*x*y+3*y^2", dq, 2);
    Polynomial gg = parse_polynomial("2*x^3+9*x^2*y+9*x*y^2", dq, 2);
    Polynomial fprime = parse_polynomial("x", df3, 2);
    Polynomial gprime = parse_polynomial("x^4*y^2+x^2*y^4+y^6", df3, 2);

    // K side.
    MatrixGroup gq = g.with_domain(dq);
    GeneratorSet kgen = minimal_generators(gq, 6);
    check("K-generator degrees", "{2,3}", degrees_str(kgen.degrees),
          degrees_str(kgen.degrees) == "{2,3}");
    bool f_match = false, g_match = false;
    for (const auto& cand : kgen.generators) {
        if (cand.degree() == 2 && equal_up_to_unit(cand, f, kP)) f_match = true;
        if (cand.degree() == 3 && equal_up_to_unit(cand, gg, kP)) g_match = true;
    }
    check("K-generator of degree 2 is f up to unit", "x^2+3*x*y+3*y^2",
          kgen.generators.empty() ? "-" : format_polynomial(kgen.generators[0]), f_match);
    check("K-generator of degree 3 is g up to unit", "2*x^3+9*x^2*y+9*x*y^2",
          kgen.generators.size() < 2 ? "-" : format_polynomial(kgen.generators[1]), g_match);
    check("f invariant", "true", gq.is_invariant(f) ? "true" : "false", gq.is_invariant(f));
    check("g invariant", "true", gq.is_invariant(gg) ? "true" : "false", gq.is_invariant(gg));

    // F side.
    auto [gbar, red] = g.reduce_at_prime(kP);
    check("reduction injective", "true (image order 6)",
          std::string(red.injective ? "true" : "false") + " (image order " +
              red.image_order.get_str() + ")",
          red.injective && red.image_order == 6);
    GeneratorSet fgen = minimal_generators(gbar, 6);
    check("F-generator degrees", "{1,6}", degrees_str(fgen.degrees),
          degrees_str(fgen.degrees) == "{1,6}");
    bool fp_match = false, gp_match = false;
    for (const auto& cand : fgen.generators) {
        if (cand.degree() == 1 && equal_up_to_unit(cand, fprime, kP)) fp_match = true;
        if (cand.degree() == 6 && equal_up_to_unit(cand, gprime, kP)) gp_match = true;
    }
    check("F-generator of degree 1 is f' up to unit", "x",
          fgen.generators.empty() ? "-" : format_polynomial(fgen.generators[0]), fp_match);
    check("F-generator of degree 6 is g' up to unit", "x^4*y^2+x^2*y^4+y^6",
          fgen.generators.size() < 2 ? "-" : format_polynomial(fgen.generators[1]), gp_match);

    // The obstruction identity 27 h = g^2 - 4 f^3.
    Polynomial disc = gg * gg - f.pow(3).scaled(Scalar(dq, 4));
    long v = min_coeff_valuation(disc, kP);
    check("g^2-4*f^3 divisible by 27", "true", v >= 3 ? "true" : "false", v >= 3);
    Polynomial h = disc.scaled(Scalar(dq, make_rat(Int(1), Int(27))));
    Polynomial h27 = h.scaled(Scalar(dq, 27));
    check("27*h = g^2-4*f^3", "true", h27 == disc ? "true" : "false", h27 == disc);
    bool h_int = min_coeff_valuation(h, kP) >= 0;
    check("h has p-integral coefficients", "true", h_int ? "true" : "false", h_int);
    check("h invariant", "true", gq.is_invariant(h) ? "true" : "false", gq.is_invariant(h));

    // h leaves R[f, g]: its unique K[f,g]-expression has a coefficient of
    // negative 3-adic valuation.
    SubalgebraResult mem = subalgebra_membership(h, {f, gg});
    bool outside = mem.member && min_coeff_valuation(mem.expression, kP) < 0;
    check("h outside R[f,g] (expression has negative valuation)", "true",
          mem.member ? ("expression " + format_polynomial(mem.expression) + ", min valuation " +
                        std::to_string(mem.member ? min_coeff_valuation(mem.expression, kP) : 0))
                     : "not even in K[f,g]",
          outside);

    // Projections.
    Polynomial phi_f = map_coefficients_mod_p(poly_to_localized(f, kP));
    Polynomial phi_g = map_coefficients_mod_p(poly_to_localized(gg, kP));
    Polynomial phi_h = map_coefficients_mod_p(poly_to_localized(h, kP));
    Polynomial fp2 = fprime * fprime;
    Polynomial fp3 = fp2 * fprime;
    check("phi(f) = f'^2", format_polynomial(fp2), format_polynomial(phi_f), phi_f == fp2);
    check("phi(g) = f'^3 up to unit", format_polynomial(fp3) + " up to unit",
          format_polynomial(phi_g), equal_up_to_unit(phi_g, fp3, kP));
    check("phi(h) = g' up to unit", format_polynomial(gprime) + " up to unit",
          format_polynomial(phi_h), equal_up_to_unit(phi_h, gprime, kP));

    // Full pipeline verdict.
    rep.verdict = decide_dvr(g, kP, 0);
    check("verdict", "NotPolynomialRing", conclusion_str(rep.verdict.conclusion),
          rep.verdict.conclusion == Conclusion::NotPolynomialRing);
    bool obst6 = rep.verdict.obstruction && rep.verdict.obstruction->degree == 6;
    check("obstruction degree", "6",
          rep.verdict.obstruction ? std::to_string(rep.verdict.obstruction->degree) : "-", obst6);
    bool obst_is_h = false;
    if (rep.verdict.obstruction)
        obst_is_h = equal_up_to_unit(poly_to_rationals(rep.verdict.obstruction->element), h, kP);
    check("obstruction is h up to unit", format_polynomial(h) + " up to unit",
          rep.verdict.obstruction ? format_polynomial(rep.verdict.obstruction->element) : "-",
          obst_is_h);

    rep.ok = true;
    for (const auto& c : rep.checks) rep.ok &= c.ok;
    return rep;
}

} // namespace invar
