#pragma once

#include "invar/matgroup.hpp"
#include "invar/linalg.hpp"

#include <vector>

namespace invar {

/// Canonical basis of one graded component of the invariant ring: a
/// vector-space basis over a field, a free-lattice basis over Z_(p).
struct InvariantBasis {
    int degree = 0;
    Domain domain = Domain::rationals();
    std::vector<Polynomial> basis;

    int rank() const { return (int)basis.size(); }
};

/// Degree-d invariants of a group over a field, as the canonical
/// (reduced-echelon) basis on the monomial basis of degree d.
InvariantBasis invariant_space(const MatrixGroup& g, int d);

/// Reference route for the same space: kernel of the stacked maps
/// f -> act(gen, f) - f. Always computed by elimination on the stacked
/// matrix; used as an independent oracle against the production path.
InvariantBasis invariant_space_via_kernel(const MatrixGroup& g, int d);

/// Free Z_(p)-basis of the degree-d invariant lattice R[x]^G_d: solved over
/// Q, then saturated at p so the reductions mod p stay linearly independent.
InvariantBasis invariant_lattice(const MatrixGroup& g, int d);

/// (1/|G|) sum_sigma sigma.f; requires |G| invertible in the domain.
Polynomial reynolds(const MatrixGroup& g, const Polynomial& f);

/// Coefficients of (1/|G|) sum_sigma 1/det(1 - t sigma) up to t^D.
/// Char-zero domains only.
std::vector<Int> molien_dimensions(const MatrixGroup& g, int max_degree);

struct GeneratorSet {
    std::vector<Polynomial> generators;   // homogeneous, degree-ascending
    std::vector<int> degrees;
    int degree_bound_used = 0;
    /// Complete beyond the bound: Kemper certificate (n independent
    /// generators with degree product |G|) or the char-0 Noether bound.
    bool certified_complete = false;
    /// A generator appeared at the last degree scanned and no completeness
    /// certificate applies; the set may still be growing.
    bool growing_at_bound = false;

    Int degree_product() const {
        Int p = 1;
        for (int d : degrees) p *= d;
        return p;
    }
};

/// Minimal homogeneous generators up to degree D: ascending by degree,
/// keeping exactly the basis elements that fail membership in the subalgebra
/// generated so far. Over fields the membership test is the tag-variable
/// elimination; over Z_(p) it is an exact p-local span test, so the result
/// generates the invariant lattice degree by degree.
GeneratorSet minimal_generators(const MatrixGroup& g, int degree_bound);

/// Default bound: |G| when |G| is invertible in the coefficient domain
/// (Noether), n(|G|-1) in the modular case (no bound in general; pragmatic).
int default_degree_bound(const MatrixGroup& g);

/// Apply the group action to every monomial of degree d and return the
/// matrix rows over Q; column j is the image of the j-th degree-d monomial.
std::vector<QRow> action_matrix_rational(const MatrixGroup& g, int element_index, int d);

} // namespace invar
