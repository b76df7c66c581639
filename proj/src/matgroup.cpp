#include "invar/matgroup.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace invar {

namespace {

ScalarMatrix into_domain(const ScalarMatrix& m, const Domain& target) {
    if (!m.entries_in_domain(target))
        throw std::domain_error("matrix entries leave the coefficient domain " + target.str());
    if (target.kind == DomainKind::PrimeField)
        return m;   // already over GF(p); nothing to convert
    return m.map_entries(target, [&](const Scalar& s) { return Scalar(target, s.value()); });
}

ScalarMatrix domain_inverse(const ScalarMatrix& m) {
    auto inv = m.inverse_fraction_field();
    if (!inv) throw std::domain_error("singular matrix in group construction");
    return into_domain(*inv, m.domain());
}

} // namespace

MatrixGroup MatrixGroup::close(const std::vector<ScalarMatrix>& generators, long max_order) {
    if (generators.empty()) throw std::invalid_argument("close_group: need at least one generator");
    MatrixGroup g;
    g.dom_ = generators[0].domain();
    g.n_ = generators[0].rows();
    if (g.n_ == 0) throw std::invalid_argument("close_group: empty matrix");
    for (const auto& m : generators) {
        if (m.rows() != m.cols()) throw std::invalid_argument("close_group: generators must be square");
        if (m.rows() != g.n_) throw std::invalid_argument("close_group: generator sizes differ");
        if (!(m.domain() == g.dom_)) throw std::invalid_argument("close_group: generator domains differ");
        domain_inverse(m);   // validates invertibility within the domain
        g.generators_.push_back(m);
    }

    std::unordered_set<std::string> seen;
    ScalarMatrix id = ScalarMatrix::identity(g.dom_, g.n_);
    g.elements_.push_back(id);
    seen.insert(id.encode());
    for (size_t head = 0; head < g.elements_.size(); ++head) {
        // Copy, since elements_ may reallocate while we append.
        ScalarMatrix cur = g.elements_[head];
        for (const auto& gen : g.generators_) {
            ScalarMatrix nxt = cur * gen;
            if (seen.insert(nxt.encode()).second) {
                if ((long)g.elements_.size() >= max_order)
                    throw std::runtime_error("close_group: closure exceeds max_order=" + std::to_string(max_order) +
                                             " (group infinite or too large)");
                g.elements_.push_back(std::move(nxt));
            }
        }
    }
    g.inverses_.reserve(g.elements_.size());
    for (const auto& e : g.elements_) g.inverses_.push_back(domain_inverse(e));
    return g;
}

Polynomial MatrixGroup::act(int element_index, const Polynomial& f) const {
    if (f.nvars() != n_) throw std::invalid_argument("act: polynomial arity differs from group dimension");
    if (!(f.domain() == dom_)) throw std::invalid_argument("act: polynomial domain differs from group domain");
    return f.linear_substitute(inverses_.at(element_index).to_rows());
}

bool MatrixGroup::is_invariant(const Polynomial& f) const {
    for (const auto& gen : generators_) {
        if (!(act_matrix(gen, f) == f)) return false;
    }
    return true;
}

MatrixGroup MatrixGroup::with_domain(const Domain& target) const {
    if (target.kind == DomainKind::PrimeField)
        throw std::invalid_argument("with_domain cannot target GF(p); use reduce_at_prime");
    if (dom_.kind == DomainKind::PrimeField)
        throw std::invalid_argument("a GF(p) group has no canonical char-zero lift");
    MatrixGroup g;
    g.n_ = n_;
    g.dom_ = target;
    for (const auto& m : generators_) g.generators_.push_back(into_domain(m, target));
    for (const auto& m : elements_) g.elements_.push_back(into_domain(m, target));
    for (const auto& m : inverses_) g.inverses_.push_back(into_domain(m, target));
    return g;
}

std::pair<MatrixGroup, ReductionReport> MatrixGroup::reduce_at_prime(const Int& p) const {
    if (dom_.kind == DomainKind::PrimeField || dom_.kind == DomainKind::Rationals)
        throw std::invalid_argument("reduce_at_prime expects a group over ZZ or Z_(p)");
    if (dom_.kind == DomainKind::LocalizedIntegers && dom_.p != p)
        throw std::invalid_argument("reduce_at_prime: prime differs from the localization prime");
    std::unordered_set<std::string> image;
    for (const auto& e : elements_) {
        ScalarMatrix red = e.reduce_at_prime(p);
        if (red.rank_fraction_field() < n_)
            throw std::domain_error("an element reduces to a singular matrix mod " + p.get_str());
        image.insert(red.encode());
    }
    std::vector<ScalarMatrix> red_gens;
    for (const auto& m : generators_) red_gens.push_back(m.reduce_at_prime(p));
    MatrixGroup img = MatrixGroup::close(red_gens);
    if ((size_t)img.order() != image.size())
        throw std::logic_error("image closure disagrees with element-wise reduction");
    ReductionReport rep;
    rep.p = p;
    rep.image_order = (long)image.size();
    rep.injective = (rep.image_order == order());
    return {std::move(img), rep};
}

Polynomial act_matrix(const ScalarMatrix& sigma, const Polynomial& f) {
    ScalarMatrix inv = domain_inverse(sigma);
    return f.linear_substitute(inv.to_rows());
}

bool is_pseudoreflection(const ScalarMatrix& sigma) {
    if (sigma.rows() != sigma.cols()) throw std::invalid_argument("is_pseudoreflection: non-square matrix");
    ScalarMatrix diff = sigma - ScalarMatrix::identity(sigma.domain(), sigma.rows());
    return diff.rank_fraction_field() == 1;
}

bool pseudoreflection_generated(const MatrixGroup& g) {
    std::vector<ScalarMatrix> refl;
    for (const auto& e : g.elements())
        if (is_pseudoreflection(e)) refl.push_back(e);
    if (refl.empty()) return g.order() == 1;
    MatrixGroup sub = MatrixGroup::close(refl);
    return sub.order() == g.order();
}

} // namespace invar
