#include "invar/json_io.hpp"

#include <fstream>

namespace invar {

std::string scalar_to_string(const Scalar& s) {
    return s.value().get_str();
}

Scalar scalar_from_json(const Domain& d, const json& v) {
    if (v.is_number_integer()) return Scalar(d, Rat((long)v.get<long long>()));
    if (v.is_string()) {
        std::string t = v.get<std::string>();
        auto slash = t.find('/');
        if (slash == std::string::npos) return Scalar(d, Rat(Int(t)));
        return Scalar(d, make_rat(Int(t.substr(0, slash)), Int(t.substr(slash + 1))));
    }
    throw std::invalid_argument("scalar must be an integer or a string");
}

json domain_to_json(const Domain& d) {
    json v;
    switch (d.kind) {
        case DomainKind::Integers: v["kind"] = "Integers"; break;
        case DomainKind::Rationals: v["kind"] = "Rationals"; break;
        case DomainKind::PrimeField: v["kind"] = "PrimeField"; break;
        case DomainKind::LocalizedIntegers: v["kind"] = "LocalizedIntegers"; break;
    }
    if (d.has_prime()) v["p"] = d.p.get_si();
    return v;
}

Domain domain_from_json(const json& v) {
    std::string kind = v.at("kind").get<std::string>();
    if (kind == "Integers") return Domain::integers();
    if (kind == "Rationals") return Domain::rationals();
    if (kind == "PrimeField") return Domain::prime_field(v.at("p").get<long>());
    if (kind == "LocalizedIntegers") return Domain::localized_integers(v.at("p").get<long>());
    throw std::invalid_argument("unknown domain kind: " + kind);
}

json polynomial_to_json(const Polynomial& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) {
        json term;
        term["monomial"] = t.mono.e;
        term["coeff"] = scalar_to_string(t.coeff);
        terms.push_back(term);
    }
    json v;
    v["nvars"] = f.nvars();
    v["terms"] = terms;
    v["text"] = format_polynomial(f);
    return v;
}

Representation representation_from_json(const json& v) {
    Representation rep;
    rep.n = v.at("n").get<int>();
    if (rep.n <= 0) throw std::invalid_argument("representation: n must be positive");
    rep.domain = domain_from_json(v.at("domain"));
    const json& gens = v.at("generators");
    if (!gens.is_array() || gens.empty())
        throw std::invalid_argument("representation: generators must be a nonempty array");
    for (const json& gm : gens) {
        if (!gm.is_array() || (int)gm.size() != rep.n)
            throw std::invalid_argument("representation: generator must have n rows");
        std::vector<std::vector<Scalar>> rows;
        for (const json& gr : gm) {
            if (!gr.is_array() || (int)gr.size() != rep.n)
                throw std::invalid_argument("representation: generator rows must have n entries");
            std::vector<Scalar> row;
            for (const json& e : gr) row.push_back(scalar_from_json(rep.domain, e));
            rows.push_back(std::move(row));
        }
        rep.generators.push_back(ScalarMatrix::from_rows(rep.domain, rows));
    }
    return rep;
}

Representation load_representation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open representation file: " + path);
    json v = json::parse(in);
    return representation_from_json(v);
}

json verdict_to_json(const Verdict& v) {
    json out;
    out["schema"] = "1";
    out["conclusion"] = conclusion_str(v.conclusion);
    json primes = json::array();
    for (const auto& lv : v.primes) {
        json p;
        p["p"] = lv.p.get_si();
        p["verdict"] = conclusion_str(lv.conclusion);
        p["k_degrees"] = lv.k_degrees;
        p["f_degrees"] = lv.f_degrees;
        p["injective"] = lv.injective;
        if (lv.obstruction) p["obstruction"] = format_polynomial(lv.obstruction->element);
        else p["obstruction"] = nullptr;
        primes.push_back(p);
    }
    out["primes"] = primes;
    out["degree_bound"] = v.degree_bound;
    out["certificates_verified"] = v.certificates_verified;
    if (!v.notes.empty()) out["notes"] = v.notes;
    return out;
}

json quad_ideal_to_json(const QuadIdeal& a) {
    json v;
    v["d"] = a.ring().d;
    v["hnf"] = {{a.a().get_str(), "0"}, {a.b().get_str(), a.c().get_str()}};
    v["norm"] = a.norm().get_str();
    v["text"] = a.str();
    return v;
}

} // namespace invar
