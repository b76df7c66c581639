#include "invar/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace invar {

namespace {

Polynomial embed_to_field(const Polynomial& f) {
    switch (f.domain().kind) {
        case DomainKind::Rationals:
        case DomainKind::PrimeField: return f;
        case DomainKind::LocalizedIntegers: return poly_to_rationals(f);
        case DomainKind::Integers:
            throw std::invalid_argument("Groebner engine needs field coefficients; got ZZ");
    }
    throw std::logic_error("unreachable");
}

// Terms sorted descending under the working order.
struct WPoly {
    std::vector<Polynomial::Term> t;
    bool zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().mono; }
    const Scalar& lc() const { return t.front().coeff; }
};

WPoly to_wpoly(const Polynomial& f, const MonomialOrder& o) {
    WPoly w{f.terms()};
    std::sort(w.t.begin(), w.t.end(), [&](const auto& a, const auto& b) {
        return o.compare(a.mono, b.mono) > 0;
    });
    return w;
}

Polynomial to_polynomial(const WPoly& w, const Domain& d, int nvars) {
    return Polynomial(d, nvars, w.t);
}

// w -= c * m * g; all inputs sorted, result sorted (merge).
WPoly submul(const WPoly& w, const Scalar& c, const Monomial& m, const WPoly& g, const MonomialOrder& o) {
    WPoly r;
    r.t.reserve(w.t.size() + g.t.size());
    size_t i = 0, j = 0;
    while (i < w.t.size() && j < g.t.size()) {
        Monomial gm = g.t[j].mono * m;
        int cmp = o.compare(w.t[i].mono, gm);
        if (cmp > 0) {
            r.t.push_back(w.t[i++]);
        } else if (cmp < 0) {
            r.t.push_back({gm, -(c * g.t[j].coeff)});
            ++j;
        } else {
            Scalar s = w.t[i].coeff - c * g.t[j].coeff;
            if (!s.is_zero()) r.t.push_back({w.t[i].mono, s});
            ++i; ++j;
        }
    }
    while (i < w.t.size()) r.t.push_back(w.t[i++]);
    while (j < g.t.size()) {
        r.t.push_back({g.t[j].mono * m, -(c * g.t[j].coeff)});
        ++j;
    }
    return r;
}

void make_monic(WPoly& w) {
    if (w.zero() || w.lc().is_one()) return;
    Scalar inv = w.lc().inverse();
    for (auto& t : w.t) t.coeff = t.coeff * inv;
}

// Full reduction: every term of the remainder avoids all leading monomials.
WPoly reduce_full(WPoly p, const std::vector<WPoly>& basis, const MonomialOrder& o) {
    WPoly rem;
    while (!p.zero()) {
        const Monomial& lm = p.lm();
        int hit = -1;
        for (size_t k = 0; k < basis.size(); ++k)
            if (basis[k].lm().divides(lm)) { hit = (int)k; break; }
        if (hit < 0) {
            rem.t.push_back(p.t.front());
            p.t.erase(p.t.begin());
            continue;
        }
        const WPoly& g = basis[hit];
        Scalar c = p.lc() / g.lc();
        p = submul(p, c, lm.divide(g.lm()), g, o);
    }
    return rem;
}

WPoly spoly(const WPoly& f, const WPoly& g, const MonomialOrder& o) {
    Monomial l = Monomial::lcm(f.lm(), g.lm());
    // monic basis: coefficients are 1
    WPoly a;
    Monomial mf = l.divide(f.lm());
    a.t.reserve(f.t.size());
    for (const auto& t : f.t) a.t.push_back({t.mono * mf, t.coeff});
    Scalar c = g.lc().is_one() ? f.lc() : f.lc() / g.lc();
    return submul(a, c, l.divide(g.lm()), g, o);
}

struct PairKey {
    int deg;
    Monomial lcm;
    int i, j;
};

} // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& order) {
    Domain dom = Domain::rationals();
    int nvars = 0;
    bool have = false;
    for (auto& g : gens) {
        g = embed_to_field(g);
        if (!have) { dom = g.domain(); nvars = g.nvars(); have = true; }
        else {
            if (!(g.domain() == dom)) throw std::invalid_argument("Groebner input domain mismatch");
            if (g.nvars() != nvars) throw std::invalid_argument("Groebner input arity mismatch");
        }
    }
    GroebnerBasis out;
    out.order = order;
    out.domain = dom;
    out.nvars = nvars;

    std::vector<WPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        WPoly w = to_wpoly(g, order);
        make_monic(w);
        basis.push_back(std::move(w));
    }

    auto cmp_pairs = [&](const PairKey& a, const PairKey& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<PairKey> pending;
    auto push_pair = [&](int i, int j) {
        Monomial l = Monomial::lcm(basis[i].lm(), basis[j].lm());
        pending.push_back({l.degree(), l, i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair((int)i, (int)j);

    std::set<std::pair<int, int>> treated;
    auto is_treated = [&](int a, int b) {
        return treated.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), cmp_pairs);
        PairKey pk = *it;
        pending.erase(it);
        treated.insert({pk.i, pk.j});

        const Monomial& lmi = basis[pk.i].lm();
        const Monomial& lmj = basis[pk.j].lm();
        // Product criterion.
        if (Monomial::coprime(lmi, lmj)) continue;
        // Chain criterion, with strict lcm inequalities to avoid circular skips.
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if ((int)k == pk.i || (int)k == pk.j) continue;
            if (!basis[k].lm().divides(pk.lcm)) continue;
            if (Monomial::lcm(lmi, basis[k].lm()) == pk.lcm) continue;
            if (Monomial::lcm(lmj, basis[k].lm()) == pk.lcm) continue;
            if (is_treated(pk.i, (int)k) && is_treated(pk.j, (int)k)) chained = true;
        }
        if (chained) continue;

        WPoly s = spoly(basis[pk.i], basis[pk.j], order);
        WPoly r = reduce_full(std::move(s), basis, order);
        if (r.zero()) continue;
        make_monic(r);
        basis.push_back(std::move(r));
        int newi = (int)basis.size() - 1;
        for (int i = 0; i < newi; ++i) push_pair(i, newi);
    }

    // Minimalize: drop generators whose leading monomial is divisible by
    // another's.
    std::vector<WPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lm().divides(basis[i].lm())) {
                if (basis[j].lm() == basis[i].lm()) redundant = j < i;
                else redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Tail-reduce each against the others.
    std::vector<WPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<WPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        WPoly r = reduce_full(minimal[i], others, order);
        if (!r.zero()) {
            make_monic(r);
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const WPoly& a, const WPoly& b) {
        return order.compare(a.lm(), b.lm()) < 0;
    });
    for (const auto& w : reduced) out.generators.push_back(to_polynomial(w, dom, nvars));
    out.reduced = true;
    return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    Polynomial ff = embed_to_field(f);
    if (G.generators.empty()) return ff;
    if (!(ff.domain() == G.domain)) throw std::invalid_argument("normal_form domain mismatch");
    if (ff.nvars() != G.nvars) throw std::invalid_argument("normal_form arity mismatch");
    std::vector<WPoly> basis;
    basis.reserve(G.generators.size());
    for (const auto& g : G.generators) basis.push_back(to_wpoly(g, G.order));
    WPoly r = reduce_full(to_wpoly(ff, G.order), basis, G.order);
    return to_polynomial(r, G.domain, G.nvars);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& G) {
    return normal_form(f, G).is_zero();
}

namespace {

// Embed an n-variable polynomial into the first block of an (n+m)-variable ring.
Polynomial pad_vars(const Polynomial& f, int total) {
    std::vector<Polynomial::Term> ts;
    for (const auto& t : f.terms()) {
        Monomial m(total);
        std::copy(t.mono.e.begin(), t.mono.e.end(), m.e.begin());
        ts.push_back({m, t.coeff});
    }
    return Polynomial(f.domain(), total, ts);
}

// Project a polynomial supported on the last m variables down to m variables.
Polynomial unpad_tags(const Polynomial& f, int n, int m) {
    std::vector<Polynomial::Term> ts;
    for (const auto& t : f.terms()) {
        Monomial mm(m);
        std::copy(t.mono.e.begin() + n, t.mono.e.end(), mm.e.begin());
        ts.push_back({mm, t.coeff});
    }
    return Polynomial(f.domain(), m, ts);
}

bool uses_first_block(const Polynomial& f, int n) {
    for (const auto& t : f.terms())
        for (int i = 0; i < n; ++i)
            if (t.mono.e[i] > 0) return true;
    return false;
}

struct TagSetup {
    Domain dom;
    int n = 0, m = 0;
    std::vector<Polynomial> fs_field;
    GroebnerBasis gb;   // of {y_i - f_i} under the x-eliminating block order
};

TagSetup build_tag_ideal(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw std::invalid_argument("empty generator list for tag ideal");
    TagSetup s;
    s.m = (int)fs.size();
    for (const auto& f : fs) {
        Polynomial g = embed_to_field(f);
        if (s.fs_field.empty()) { s.dom = g.domain(); s.n = g.nvars(); }
        else {
            if (!(g.domain() == s.dom)) throw std::invalid_argument("generator domain mismatch");
            if (g.nvars() != s.n) throw std::invalid_argument("generator arity mismatch");
        }
        s.fs_field.push_back(std::move(g));
    }
    int total = s.n + s.m;
    std::vector<Polynomial> ideal;
    for (int i = 0; i < s.m; ++i) {
        Polynomial yi = Polynomial::variable(s.dom, total, s.n + i);
        ideal.push_back(yi - pad_vars(s.fs_field[i], total));
    }
    s.gb = buchberger(std::move(ideal), MonomialOrder::block_elimination(s.n));
    return s;
}

} // namespace

SubalgebraTester::SubalgebraTester(const std::vector<Polynomial>& gens) {
    m_ = (int)gens.size();
    if (m_ == 0) return;
    TagSetup s = build_tag_ideal(gens);
    n_ = s.n;
    dom_ = s.dom;
    fs_field_ = std::move(s.fs_field);
    gb_ = std::move(s.gb);
}

SubalgebraResult SubalgebraTester::test(const Polynomial& f) const {
    Polynomial ff = embed_to_field(f);
    SubalgebraResult res;
    if (m_ == 0) {
        // The subalgebra generated by nothing is the constants.
        if (!ff.is_constant()) return res;
        res.member = true;
        res.expression = Polynomial::constant(ff.domain(), 0, ff.is_zero() ? Scalar::zero(ff.domain())
                                                                           : ff.terms()[0].coeff);
        return res;
    }
    if (!(ff.domain() == dom_) || ff.nvars() != n_)
        throw std::invalid_argument("subalgebra_membership domain/arity mismatch");
    Polynomial nf = normal_form(pad_vars(ff, n_ + m_), gb_);
    if (uses_first_block(nf, n_)) return res;
    res.member = true;
    res.expression = unpad_tags(nf, n_, m_);
    if (!(res.expression.compose(fs_field_) == ff))
        throw std::logic_error("subalgebra membership expression failed its evaluation check");
    return res;
}

SubalgebraResult subalgebra_membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
    return SubalgebraTester(gens).test(f);
}

GroebnerBasis relations_ideal(const std::vector<Polynomial>& fs) {
    TagSetup s = build_tag_ideal(fs);
    std::vector<Polynomial> rels;
    for (const auto& g : s.gb.generators)
        if (!uses_first_block(g, s.n)) rels.push_back(unpad_tags(g, s.n, s.m));
    // Pure-tag elements of the elimination basis form a Groebner basis of the
    // kernel under the induced order; interreduce for the canonical form.
    GroebnerBasis out = buchberger(std::move(rels), MonomialOrder::grevlex());
    out.domain = s.dom;
    out.nvars = s.m;
    return out;
}

IndependenceResult algebraically_independent(const std::vector<Polynomial>& fs) {
    IndependenceResult r;
    GroebnerBasis rel = relations_ideal(fs);
    if (rel.generators.empty()) {
        r.independent = true;
        return r;
    }
    Polynomial q = rel.generators.front();
    std::vector<Polynomial> fs_field;
    for (const auto& f : fs) fs_field.push_back(embed_to_field(f));
    if (!q.compose(fs_field).is_zero())
        throw std::logic_error("relation witness failed its evaluation check");
    r.witness = RelationWitness{q};
    return r;
}

} // namespace invar
