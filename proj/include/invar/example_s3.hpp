#pragma once

#include "invar/criteria.hpp"

#include <string>
#include <vector>

namespace invar {

/// One pinned fact of the built-in S_3 over Z_(3) reproduction.
struct ExampleCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool ok = false;
};

struct ExampleS3Report {
    bool ok = false;
    std::vector<ExampleCheck> checks;
    LocalVerdict verdict;
};

/// End-to-end reproduction of the S_3-over-Z_(3) counterexample: K- and
/// F-side generators, injectivity of the reduction, the invariant
/// h = (g^2 - 4 f^3)/27 with its membership failure, the projections of
/// f, g, h, and the final NotPolynomialRing verdict.
ExampleS3Report run_example_s3();

} // namespace invar
