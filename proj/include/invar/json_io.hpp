#pragma once

#include "invar/criteria.hpp"
#include "invar/quadring.hpp"

#include <json.hpp>

#include <string>

namespace invar {

using nlohmann::json;

std::string scalar_to_string(const Scalar& s);
Scalar scalar_from_json(const Domain& d, const json& v);

json domain_to_json(const Domain& d);
Domain domain_from_json(const json& v);

json polynomial_to_json(const Polynomial& f);

/// Representation input file: { "n": int, "domain": descriptor,
/// "generators": [[[entry, ...], ...], ...] } with scalar entries encoded as
/// decimal or "num/den" strings (plain JSON integers also accepted).
struct Representation {
    int n = 0;
    Domain domain = Domain::rationals();
    std::vector<ScalarMatrix> generators;
};

Representation representation_from_json(const json& v);
Representation load_representation(const std::string& path);

json verdict_to_json(const Verdict& v);
json quad_ideal_to_json(const QuadIdeal& a);

} // namespace invar
