#include "invar/example_s3.hpp"
#include "invar/fixtures.hpp"
#include "invar/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace invar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotPolynomial = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBoundExhausted = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitMismatch = 5;

MatrixGroup group_from_file(const std::string& path) {
    Representation rep = load_representation(path);
    return MatrixGroup::close(rep.generators);
}

int cmd_invariants(const std::string& input, int degree_bound, bool as_json) {
    MatrixGroup g = group_from_file(input);
    // Integer representations are reported over the fraction field; the
    // Z_(p)-lattice story belongs to `decide`.
    if (g.domain().kind == DomainKind::Integers) g = g.with_domain(Domain::rationals());
    int bound = degree_bound > 0 ? degree_bound : default_degree_bound(g);
    GeneratorSet gs = minimal_generators(g, bound);

    std::vector<long> dims;
    for (int d = 0; d <= bound; ++d) {
        if (g.domain().kind == DomainKind::LocalizedIntegers)
            dims.push_back(invariant_lattice(g, d).rank());
        else
            dims.push_back(invariant_space(g, d).rank());
    }

    if (as_json) {
        json out;
        out["schema"] = "1";
        out["command"] = "invariants";
        out["domain"] = domain_to_json(g.domain());
        out["n"] = g.dimension();
        out["group_order"] = g.order();
        out["pseudoreflection_generated"] = pseudoreflection_generated(g);
        out["degree_bound"] = bound;
        json dt = json::array();
        for (int d = 0; d <= bound; ++d) dt.push_back({{"degree", d}, {"dimension", dims[d]}});
        out["dimensions"] = dt;
        json gens = json::array();
        for (size_t i = 0; i < gs.generators.size(); ++i)
            gens.push_back({{"degree", gs.degrees[i]}, {"text", format_polynomial(gs.generators[i])}});
        out["generators"] = gens;
        out["certified_complete"] = gs.certified_complete;
        out["growing_at_bound"] = gs.growing_at_bound;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "group of order " << g.order() << " in dimension " << g.dimension()
                  << " over " << g.domain().str() << "\n";
        std::cout << "pseudoreflection-generated: "
                  << (pseudoreflection_generated(g) ? "true" : "false") << "\n";
        std::cout << "per-degree invariant dimensions (d <= " << bound << "):\n";
        for (int d = 0; d <= bound; ++d) std::cout << "  d=" << d << ": " << dims[d] << "\n";
        std::cout << "minimal generators:\n";
        for (size_t i = 0; i < gs.generators.size(); ++i)
            std::cout << "  deg " << gs.degrees[i] << ": " << format_polynomial(gs.generators[i]) << "\n";
        std::cout << "complete up to degree " << bound
                  << (gs.certified_complete ? "; certified complete"
                                            : "; completeness beyond the bound unknown")
                  << "\n";
        if (gs.growing_at_bound)
            std::cout << "warning: generator set still growing at the degree bound\n";
    }
    return gs.certified_complete ? kExitOk : kExitBoundExhausted;
}

int exit_for(Conclusion c) {
    switch (c) {
        case Conclusion::PolynomialRing: return kExitOk;
        case Conclusion::NotPolynomialRing: return kExitNotPolynomial;
        default: return kExitInconclusive;
    }
}

void print_local(const LocalVerdict& lv) {
    std::cout << "  p=" << lv.p.get_str() << ": " << conclusion_str(lv.conclusion)
              << "  K-degrees ";
    for (int d : lv.k_degrees) std::cout << d << " ";
    std::cout << " F-degrees ";
    for (int d : lv.f_degrees) std::cout << d << " ";
    std::cout << " injective=" << (lv.injective ? "true" : "false");
    if (lv.obstruction)
        std::cout << "\n    obstruction (degree " << lv.obstruction->degree
                  << "): " << format_polynomial(lv.obstruction->element);
    for (const auto& n : lv.notes) std::cout << "\n    note: " << n;
    std::cout << "\n";
}

int cmd_decide(const std::string& input, long prime, int degree_bound, bool as_json, bool verify) {
    MatrixGroup g = group_from_file(input);
    Verdict v;
    v.degree_bound = degree_bound;
    MatrixGroup g_for_verify = g;
    if (prime > 0) {
        Int p(prime);
        LocalVerdict lv = decide_dvr(g, p, degree_bound);
        v.conclusion = lv.conclusion;
        v.primes.push_back(std::move(lv));
        v.pseudoreflection_generated = pseudoreflection_generated(g);
    } else {
        if (g.domain().kind != DomainKind::Integers)
            throw std::invalid_argument("decide over all primes requires an Integers-domain representation; "
                                        "pass --prime for a local decision");
        v = decide_over_integers(g, degree_bound);
    }
    if (verify) verify_verdict(g_for_verify, v);

    if (as_json) {
        std::cout << verdict_to_json(v).dump(2) << "\n";
    } else {
        std::cout << "conclusion: " << conclusion_str(v.conclusion) << "\n";
        for (const auto& lv : v.primes) print_local(lv);
        if (verify)
            std::cout << "certificates re-verified: " << (v.certificates_verified ? "yes" : "NO") << "\n";
        for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
    }
    if (verify && !v.certificates_verified) return kExitMismatch;
    return exit_for(v.conclusion);
}

int cmd_example_s3(bool as_json) {
    ExampleS3Report rep = run_example_s3();
    if (as_json) {
        json out;
        out["schema"] = "1";
        out["command"] = "example-s3";
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name}, {"expected", c.expected},
                              {"computed", c.computed}, {"ok", c.ok}});
        out["checks"] = checks;
        out["ok"] = rep.ok;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            std::cout << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.computed;
            if (!c.ok) std::cout << "  (expected " << c.expected << ")";
            std::cout << "\n";
        }
        std::cout << (rep.ok ? "all pinned facts reproduced\n" : "MISMATCH against pinned facts\n");
    }
    return rep.ok ? kExitOk : kExitMismatch;
}

std::vector<QuadElem> parse_gens(const std::string& s) {
    std::vector<QuadElem> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(parse_qelem(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(parse_qelem(cur));
    if (out.empty()) throw std::invalid_argument("no generators given");
    return out;
}

int cmd_ideal(long d, const std::string& gens, const std::string& gens2, const std::string& op,
              long m, long q, bool as_json) {
    QuadraticRing ring(d);
    QuadIdeal a = QuadIdeal::from_generators(ring, parse_gens(gens));
    json out;
    out["schema"] = "1";
    out["command"] = "ideal";
    out["op"] = op;
    out["ring"] = ring.str();
    out["input"] = quad_ideal_to_json(a);
    std::ostringstream text;
    text << "A = " << a.str() << " in " << ring.str() << "\n";

    if (op == "norm") {
        out["norm"] = a.norm().get_str();
        text << "N(A) = " << a.norm().get_str() << "\n";
    } else if (op == "mul") {
        if (gens2.empty()) throw std::invalid_argument("--op mul needs --gens2");
        QuadIdeal b = QuadIdeal::from_generators(ring, parse_gens(gens2));
        QuadIdeal c = a.mul(b);
        out["other"] = quad_ideal_to_json(b);
        out["product"] = quad_ideal_to_json(c);
        text << "B = " << b.str() << "\nA*B = " << c.str() << "\n";
    } else if (op == "pow") {
        QuadIdeal c = a.pow(m);
        out["m"] = m;
        out["power"] = quad_ideal_to_json(c);
        text << "A^" << m << " = " << c.str() << "\n";
    } else if (op == "principal") {
        auto gen = a.principal_generator();
        out["principal"] = gen.has_value();
        if (gen) out["generator"] = qelem_str(*gen);
        text << (gen ? "principal, generator " + qelem_str(*gen) : std::string("not principal")) << "\n";
    } else if (op == "localize") {
        if (q <= 0) throw std::invalid_argument("--op localize needs --q");
        LocalGenCertificate cert = local_principal_generator(a, q);
        out["q"] = q;
        out["generator"] = qelem_str(cert.generator);
        out["verified"] = cert.verified;
        json ps = json::array();
        text << "local generator at q=" << q << ": " << qelem_str(cert.generator) << "\n";
        for (const auto& pr : cert.primes) {
            ps.push_back({{"prime", pr.prime.str()}, {"v_ideal", pr.v_ideal},
                          {"v_generator", pr.v_generator}, {"basis_integral", pr.basis_integral}});
            text << "  prime " << pr.prime.str() << ": v_P(A)=" << pr.v_ideal
                 << " v_P(g)=" << pr.v_generator
                 << " basis P-integral over g: " << (pr.basis_integral ? "yes" : "no") << "\n";
        }
        out["primes"] = ps;
    } else if (op == "grading-check") {
        int mm = m > 0 ? (int)m : 4;
        GradingCheckReport rep = blowup_grading_check(a, mm);
        out["m_max"] = rep.m_max;
        out["products_ok"] = rep.products_ok;
        out["norms_ok"] = rep.norms_ok;
        json pows = json::array();
        text << "I^a * I^b = I^(a+b) for a+b <= " << rep.m_max << ": "
             << (rep.products_ok ? "yes" : "NO") << "\n";
        text << "N(I^m) = N(I)^m: " << (rep.norms_ok ? "yes" : "NO") << "\n";
        for (int i = 0; i <= rep.m_max; ++i) {
            json e;
            e["m"] = i;
            e["principal"] = (bool)rep.power_principal[i];
            if (rep.power_generator[i]) e["generator"] = qelem_str(*rep.power_generator[i]);
            pows.push_back(e);
            text << "  I^" << i << (rep.power_principal[i] ? " principal" : " not principal");
            if (rep.power_generator[i]) text << " (" << qelem_str(*rep.power_generator[i]) << ")";
            text << "\n";
        }
        out["powers"] = pows;
        if (!rep.products_ok || !rep.norms_ok) {
            std::cout << (as_json ? out.dump(2) + "\n" : text.str());
            return kExitMismatch;
        }
    } else {
        throw std::invalid_argument("unknown --op " + op);
    }
    std::cout << (as_json ? out.dump(2) + "\n" : text.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant rings of finite matrix groups over exact coefficient domains"};
    app.require_subcommand(1);

    std::string input, gens, gens2, op = "norm";
    int degree_bound = 0;
    long prime = 0, dval = 0, mval = 0, qval = 0;
    bool as_json = false, no_verify = false;

    auto* inv = app.add_subcommand("invariants", "per-degree dimensions and minimal generators");
    inv->add_option("--input", input, "representation file (JSON)")->required();
    inv->add_option("--degree-bound", degree_bound, "search bound (default per domain policy)");
    inv->add_flag("--json", as_json, "JSON output");

    auto* dec = app.add_subcommand("decide", "is the invariant ring a polynomial ring?");
    dec->add_option("--input", input, "representation file (JSON)")->required();
    dec->add_option("--prime", prime, "decide locally at Z_(p)");
    dec->add_option("--degree-bound", degree_bound, "search bound (default per domain policy)");
    dec->add_flag("--json", as_json, "JSON output");
    dec->add_flag("--no-verify", no_verify, "skip certificate re-verification");

    auto* exs3 = app.add_subcommand("example-s3", "reproduce the built-in S3 over Z_(3) example");
    exs3->add_flag("--json", as_json, "JSON output");

    auto* idl = app.add_subcommand("ideal", "ideal arithmetic in Z[sqrt(d)]");
    idl->add_option("--d", dval, "squarefree negative d with d = 2,3 mod 4")->required();
    idl->add_option("--gens", gens, "ideal generators, e.g. \"2, 1+s\" (s = sqrt(d))")->required();
    idl->add_option("--gens2", gens2, "second ideal for --op mul");
    idl->add_option("--op", op, "mul | pow | norm | principal | localize | grading-check");
    idl->add_option("--m", mval, "exponent for pow / m_max for grading-check");
    idl->add_option("--q", qval, "rational prime for localize");
    idl->add_flag("--json", as_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return cmd_invariants(input, degree_bound, as_json);
        if (dec->parsed()) return cmd_decide(input, prime, degree_bound, as_json, !no_verify);
        if (exs3->parsed()) return cmd_example_s3(as_json);
        if (idl->parsed()) return cmd_ideal(dval, gens, gens2, op, mval, qval, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
