#pragma once

#include "invar/matrix.hpp"
#include "invar/polynomial.hpp"

#include <vector>

namespace invar {

struct ReductionReport {
    Int p;
    Int image_order;
    bool injective = false;
};

/// Finite matrix group materialized by breadth-first closure from its
/// generators. Immutable after construction; element 0 is the identity.
class MatrixGroup {
public:
    static constexpr long kDefaultMaxOrder = 100000;

    /// Closure under multiplication. Throws when a generator is singular,
    /// its inverse leaves the coefficient domain, or the closure exceeds
    /// max_order.
    static MatrixGroup close(const std::vector<ScalarMatrix>& generators,
                             long max_order = kDefaultMaxOrder);

    int dimension() const { return n_; }
    const Domain& domain() const { return dom_; }
    long order() const { return (long)elements_.size(); }
    const std::vector<ScalarMatrix>& generators() const { return generators_; }
    const std::vector<ScalarMatrix>& elements() const { return elements_; }
    const ScalarMatrix& element(int i) const { return elements_.at(i); }
    /// Inverse of element(i), with entries in the coefficient domain.
    const ScalarMatrix& inverse(int i) const { return inverses_.at(i); }

    /// The action (sigma . f)(a) = f(sigma^-1 a).
    Polynomial act(int element_index, const Polynomial& f) const;

    bool is_invariant(const Polynomial& f) const;   // checks the generators

    /// Reinterpret the group over another char-zero domain (QQ, Z_(p), ZZ);
    /// entries must lie in the target domain.
    MatrixGroup with_domain(const Domain& target) const;

    /// Entry-wise reduction mod p; reports the image order and injectivity.
    std::pair<MatrixGroup, ReductionReport> reduce_at_prime(const Int& p) const;

private:
    int n_ = 0;
    Domain dom_ = Domain::rationals();
    std::vector<ScalarMatrix> generators_;
    std::vector<ScalarMatrix> elements_;
    std::vector<ScalarMatrix> inverses_;
};

/// The action by an explicit matrix: f(sigma^-1 x). The inverse is computed
/// over the fraction field and validated to lie in the matrix's domain.
Polynomial act_matrix(const ScalarMatrix& sigma, const Polynomial& f);

/// rank(sigma - id) = 1 over the fraction field.
bool is_pseudoreflection(const ScalarMatrix& sigma);

/// True when the subgroup generated by the pseudoreflections of G is all
/// of G. Reported informationally; no decision procedure assumes it.
bool pseudoreflection_generated(const MatrixGroup& g);

} // namespace invar
