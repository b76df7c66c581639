#include "invar/invariants.hpp"
#include "invar/groebner.hpp"

#include <algorithm>
#include <map>

namespace invar {

namespace {

using MonoIndex = std::map<std::vector<int>, int>;

MonoIndex index_of(const std::vector<Monomial>& monos) {
    MonoIndex idx;
    for (size_t i = 0; i < monos.size(); ++i) idx[monos[i].e] = (int)i;
    return idx;
}

QRow poly_to_qrow(const Polynomial& f, const MonoIndex& idx, size_t ncols) {
    QRow r(ncols, Rat(0));
    for (const auto& t : f.terms()) {
        auto it = idx.find(t.mono.e);
        if (it == idx.end()) throw std::logic_error("term outside the degree component");
        r[it->second] = t.coeff.value();
    }
    return r;
}

Polynomial qrow_to_poly(const QRow& row, const std::vector<Monomial>& monos, const Domain& dom) {
    std::vector<Polynomial::Term> ts;
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) ts.push_back({monos[i], Scalar(dom, row[i])});
    return Polynomial(dom, monos.empty() ? 0 : monos[0].nvars(), ts);
}

Polynomial prow_to_poly(const PRow& row, const std::vector<Monomial>& monos, const Domain& dom) {
    std::vector<Polynomial::Term> ts;
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) ts.push_back({monos[i], Scalar(dom, (long)row[i])});
    return Polynomial(dom, monos.empty() ? 0 : monos[0].nvars(), ts);
}

// Images of every degree-d monomial under x -> M x, over the fraction field.
std::vector<Polynomial> substitution_images(const ScalarMatrix& m_ff,
                                            const std::vector<Monomial>& monos) {
    const Domain& dom = m_ff.domain();
    int n = m_ff.rows();
    std::vector<Polynomial> linear(n);
    for (int i = 0; i < n; ++i) {
        Polynomial li(dom, n);
        for (int j = 0; j < n; ++j)
            li = li + Polynomial::monomial_term(dom, Monomial::var(n, j), m_ff.at(i, j));
        linear[i] = li;
    }
    std::vector<std::vector<Polynomial>> powers(n);
    auto power_of = [&](int i, int e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(dom, n, Scalar::one(dom)));
        while ((int)cache.size() <= e) cache.push_back(cache.back() * linear[i]);
        return cache[e];
    };
    std::vector<Polynomial> images;
    images.reserve(monos.size());
    for (const auto& mo : monos) {
        Polynomial prod = Polynomial::constant(dom, n, Scalar::one(dom));
        for (int i = 0; i < n; ++i)
            if (mo.e[i] > 0) prod = prod * power_of(i, mo.e[i]);
        images.push_back(std::move(prod));
    }
    return images;
}

ScalarMatrix fraction_field_inverse(const ScalarMatrix& m) {
    auto inv = m.inverse_fraction_field();
    if (!inv) throw std::domain_error("singular matrix in action");
    return *inv;
}

bool order_invertible(const MatrixGroup& g) {
    if (!g.domain().has_prime()) return true;
    return Int(g.order()) % g.domain().p != 0;
}

long long prime_as_ll(const Domain& d) {
    if (d.p >= Int("2147483648"))
        throw std::invalid_argument("prime too large for per-degree linear algebra");
    return d.p.get_si();
}

InvariantBasis make_basis(int d, const Domain& dom, std::vector<Polynomial> polys) {
    InvariantBasis b;
    b.degree = d;
    b.domain = dom;
    b.basis = std::move(polys);
    return b;
}

} // namespace

std::vector<QRow> action_matrix_rational(const MatrixGroup& g, int element_index, int d) {
    int n = g.dimension();
    auto monos = monomials_of_degree(n, d);
    MonoIndex idx = index_of(monos);
    ScalarMatrix inv = g.inverse(element_index)
                           .map_entries(Domain::rationals(), [](const Scalar& s) { return to_rational(s); });
    auto images = substitution_images(inv, monos);
    size_t nm = monos.size();
    std::vector<QRow> rows(nm, QRow(nm, Rat(0)));
    for (size_t j = 0; j < nm; ++j) {
        QRow col = poly_to_qrow(images[j], idx, nm);
        for (size_t i = 0; i < nm; ++i)
            if (col[i] != 0) rows[i][j] = col[i];
    }
    return rows;
}

InvariantBasis invariant_space(const MatrixGroup& g, int d) {
    const Domain& dom = g.domain();
    if (!dom.is_field())
        throw std::invalid_argument("invariant_space needs a field domain; got " + dom.str());
    if (d < 0) throw std::invalid_argument("negative degree");
    int n = g.dimension();
    auto monos = monomials_of_degree(n, d);
    MonoIndex idx = index_of(monos);
    size_t nm = monos.size();
    if (d == 0) {
        return make_basis(0, dom, {Polynomial::constant(dom, n, Scalar::one(dom))});
    }

    if (order_invertible(g)) {
        // |G| invertible: the invariant space is the span of the Reynolds
        // images of the monomials.
        if (dom.kind == DomainKind::Rationals) {
            std::vector<QRow> span(nm, QRow(nm, Rat(0)));
            for (long e = 0; e < g.order(); ++e) {
                ScalarMatrix inv = g.inverse((int)e)
                                       .map_entries(dom, [](const Scalar& s) { return to_rational(s); });
                auto images = substitution_images(inv, monos);
                for (size_t j = 0; j < nm; ++j)
                    for (const auto& t : images[j].terms())
                        span[j][idx.at(t.mono.e)] += t.coeff.value();
            }
            QEchelon e = rref_rational(std::move(span));
            std::vector<Polynomial> basis;
            for (const auto& r : e.rows) basis.push_back(qrow_to_poly(r, monos, dom));
            return make_basis(d, dom, std::move(basis));
        }
        long long p = prime_as_ll(dom);
        std::vector<PRow> span(nm, PRow(nm, 0));
        for (long e = 0; e < g.order(); ++e) {
            auto images = substitution_images(g.inverse((int)e), monos);
            for (size_t j = 0; j < nm; ++j)
                for (const auto& t : images[j].terms()) {
                    size_t i = idx.at(t.mono.e);
                    span[j][i] = (span[j][i] + t.coeff.value().get_num().get_si()) % p;
                }
        }
        PEchelon e = rref_modp(std::move(span), p);
        std::vector<Polynomial> basis;
        for (const auto& r : e.rows) basis.push_back(prow_to_poly(r, monos, dom));
        return make_basis(d, dom, std::move(basis));
    }
    // Modular case: kernel of the stacked generator maps.
    return invariant_space_via_kernel(g, d);
}

InvariantBasis invariant_space_via_kernel(const MatrixGroup& g, int d) {
    const Domain& dom = g.domain();
    if (!dom.is_field())
        throw std::invalid_argument("invariant_space needs a field domain; got " + dom.str());
    if (d < 0) throw std::invalid_argument("negative degree");
    int n = g.dimension();
    auto monos = monomials_of_degree(n, d);
    MonoIndex idx = index_of(monos);
    size_t nm = monos.size();
    if (d == 0)
        return make_basis(0, dom, {Polynomial::constant(dom, n, Scalar::one(dom))});

    if (dom.kind == DomainKind::Rationals) {
        std::vector<QRow> stacked;
        for (const auto& gen : g.generators()) {
            ScalarMatrix inv = fraction_field_inverse(gen);
            auto images = substitution_images(inv, monos);
            std::vector<QRow> block(nm, QRow(nm, Rat(0)));
            for (size_t j = 0; j < nm; ++j) {
                for (const auto& t : images[j].terms())
                    block[idx.at(t.mono.e)][j] += t.coeff.value();
                block[j][j] -= 1;
            }
            for (auto& r : block) stacked.push_back(std::move(r));
        }
        auto kernel = kernel_rational(stacked, (int)nm);
        std::vector<Polynomial> basis;
        for (const auto& r : kernel) basis.push_back(qrow_to_poly(r, monos, dom));
        return make_basis(d, dom, std::move(basis));
    }
    long long p = prime_as_ll(dom);
    std::vector<PRow> stacked;
    for (const auto& gen : g.generators()) {
        ScalarMatrix inv = fraction_field_inverse(gen);
        auto images = substitution_images(inv, monos);
        std::vector<PRow> block(nm, PRow(nm, 0));
        for (size_t j = 0; j < nm; ++j) {
            for (const auto& t : images[j].terms()) {
                size_t i = idx.at(t.mono.e);
                block[i][j] = (block[i][j] + t.coeff.value().get_num().get_si()) % p;
            }
            block[j][j] = ((block[j][j] - 1) % p + p) % p;
        }
        for (auto& r : block) stacked.push_back(std::move(r));
    }
    auto kernel = kernel_modp(stacked, (int)nm, p);
    std::vector<Polynomial> basis;
    for (const auto& r : kernel) basis.push_back(prow_to_poly(r, monos, dom));
    return make_basis(d, dom, std::move(basis));
}

InvariantBasis invariant_lattice(const MatrixGroup& g, int d) {
    if (g.domain().kind != DomainKind::LocalizedIntegers)
        throw std::invalid_argument("invariant_lattice needs a Z_(p) group");
    const Int& p = g.domain().p;
    MatrixGroup gq = g.with_domain(Domain::rationals());
    InvariantBasis vq = invariant_space(gq, d);
    int n = g.dimension();
    auto monos = monomials_of_degree(n, d);
    MonoIndex idx = index_of(monos);
    std::vector<QRow> rows;
    for (const auto& b : vq.basis) rows.push_back(poly_to_qrow(b, idx, monos.size()));
    rows = saturate_at_p(std::move(rows), p);
    std::vector<Polynomial> basis;
    for (const auto& r : rows) basis.push_back(qrow_to_poly(r, monos, g.domain()));
    return make_basis(d, g.domain(), std::move(basis));
}

Polynomial reynolds(const MatrixGroup& g, const Polynomial& f) {
    if (!order_invertible(g))
        throw std::domain_error("Reynolds operator unavailable: " + g.domain().p.get_str() +
                                " divides the group order " + std::to_string(g.order()));
    if (g.domain().kind == DomainKind::Integers && g.order() != 1)
        throw std::domain_error("Reynolds operator unavailable: |G| not invertible in ZZ");
    Polynomial sum(f.domain(), f.nvars());
    for (long e = 0; e < g.order(); ++e) sum = sum + g.act((int)e, f);
    return sum.scaled(Scalar(f.domain(), make_rat(Int(1), Int(g.order()))));
}

namespace {

using UPoly = std::vector<Rat>;   // univariate, index = power of t

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

// det(I - t M) by cofactor expansion with a column-mask memo.
UPoly char_series_poly(const ScalarMatrix& m) {
    int n = m.rows();
    std::map<std::pair<int, unsigned>, UPoly> memo;
    auto rec = [&](auto&& self, int row, unsigned mask) -> UPoly {
        if (row == n) return UPoly{Rat(1)};
        auto key = std::make_pair(row, mask);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        UPoly acc{Rat(0)};
        int sign = 1;
        for (int c = 0; c < n; ++c) {
            if (mask & (1u << c)) continue;
            // entry (row, c) of I - tM: delta - t*m_rc
            UPoly entry{row == c ? Rat(1) : Rat(0), -to_rational(m.at(row, c)).value()};
            if (!(entry[0] == 0 && entry[1] == 0)) {
                UPoly sub = self(self, row + 1, mask | (1u << c));
                UPoly term = upoly_mul(entry, sub);
                if (sign < 0)
                    for (auto& x : term) x = -x;
                if (term.size() > acc.size()) acc.resize(term.size(), Rat(0));
                for (size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
            }
            sign = -sign;
        }
        memo[key] = acc;
        return acc;
    };
    return rec(rec, 0, 0);
}

// 1/P as a power series up to degree D; needs P(0) = 1.
UPoly series_inverse(const UPoly& p, int D) {
    if (p.empty() || p[0] != 1) throw std::logic_error("series inverse needs constant term 1");
    UPoly q(D + 1, Rat(0));
    q[0] = 1;
    for (int k = 1; k <= D; ++k) {
        Rat s(0);
        for (size_t i = 1; i < p.size() && (int)i <= k; ++i)
            if (p[i] != 0) s += p[i] * q[k - i];
        q[k] = -s;
    }
    return q;
}

} // namespace

std::vector<Int> molien_dimensions(const MatrixGroup& g, int max_degree) {
    if (!g.domain().char_zero())
        throw std::invalid_argument("molien_dimensions requires characteristic zero");
    if (g.dimension() > 31) throw std::invalid_argument("dimension too large for Molien determinant");
    std::vector<Rat> acc(max_degree + 1, Rat(0));
    for (long e = 0; e < g.order(); ++e) {
        UPoly det = char_series_poly(g.element((int)e));
        UPoly inv = series_inverse(det, max_degree);
        for (int k = 0; k <= max_degree; ++k) acc[k] += inv[k];
    }
    std::vector<Int> dims(max_degree + 1);
    Rat order((long)g.order());
    for (int k = 0; k <= max_degree; ++k) {
        Rat v = acc[k] / order;
        v.canonicalize();
        if (!is_integer(v) || v < 0)
            throw std::logic_error("Molien series produced a non-integral coefficient");
        dims[k] = v.get_num();
    }
    return dims;
}

int default_degree_bound(const MatrixGroup& g) {
    bool modular = g.domain().has_prime() && Int(g.order()) % g.domain().p == 0;
    if (modular) return g.dimension() * ((int)g.order() - 1);
    return (int)g.order();
}

namespace {

// Exponent tuples alpha with sum alpha_i * deg_i = d.
void weighted_tuples(const std::vector<int>& degs, int d, std::vector<int>& cur, size_t pos,
                     std::vector<std::vector<int>>& out) {
    if (pos == degs.size()) {
        if (d == 0) out.push_back(cur);
        return;
    }
    for (int k = 0; k * degs[pos] <= d; ++k) {
        cur[pos] = k;
        weighted_tuples(degs, d - k * degs[pos], cur, pos + 1, out);
    }
    cur[pos] = 0;
}

std::vector<Polynomial> products_of_degree(const std::vector<Polynomial>& gens,
                                           const std::vector<int>& degs, int d) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(degs.size(), 0);
    weighted_tuples(degs, d, cur, 0, tuples);
    std::vector<Polynomial> out;
    for (const auto& a : tuples) {
        bool all_zero = true;
        for (int k : a)
            if (k) { all_zero = false; break; }
        if (all_zero) continue;   // the constant does not help in degree d > 0
        Polynomial prod = gens[0].pow(0); // 1 in the right ring
        for (size_t i = 0; i < gens.size(); ++i)
            if (a[i] > 0) prod = prod * gens[i].pow((unsigned long)a[i]);
        out.push_back(std::move(prod));
    }
    return out;
}

GeneratorSet minimal_generators_field(const MatrixGroup& g, int D) {
    GeneratorSet gs;
    gs.degree_bound_used = D;
    int n = g.dimension();
    SubalgebraTester tester(gs.generators);
    int last_added_degree = 0;
    for (int d = 1; d <= D; ++d) {
        InvariantBasis ib = invariant_space(g, d);
        for (const auto& b : ib.basis) {
            if (tester.test(b).member) continue;
            gs.generators.push_back(b);
            gs.degrees.push_back(d);
            last_added_degree = d;
            tester = SubalgebraTester(gs.generators);
        }
        if ((int)gs.generators.size() == n && gs.degree_product() == g.order() &&
            algebraically_independent(gs.generators).independent) {
            gs.certified_complete = true;   // Kemper certificate
            break;
        }
    }
    if (!gs.certified_complete && order_invertible(g) && D >= g.order())
        gs.certified_complete = true;       // Noether bound
    gs.growing_at_bound = !gs.certified_complete && last_added_degree == D;
    return gs;
}

GeneratorSet minimal_generators_dvr(const MatrixGroup& g, int D) {
    GeneratorSet gs;
    gs.degree_bound_used = D;
    const Int& p = g.domain().p;
    int n = g.dimension();
    int last_added_degree = 0;
    long long pl = prime_as_ll(g.domain());
    for (int d = 1; d <= D; ++d) {
        InvariantBasis lat = invariant_lattice(g, d);
        if (lat.basis.empty()) continue;
        auto monos = monomials_of_degree(n, d);
        MonoIndex idx = index_of(monos);
        size_t k = lat.basis.size();
        // Work in lattice coordinates: the new generators at this degree are
        // a lift of a basis of L/(D + pL), D the span of the decomposables.
        // Nakayama then makes the extended set generate all of L_d.
        std::vector<QRow> lat_rows;
        for (const auto& b : lat.basis)
            lat_rows.push_back(poly_to_qrow(poly_to_rationals(b), idx, monos.size()));
        DvrEchelon lat_ech = dvr_echelon(lat_rows, p);
        std::vector<PRow> quotient_rows;
        for (const auto& prod : products_of_degree(gs.generators, gs.degrees, d)) {
            QRow row = poly_to_qrow(poly_to_rationals(prod), idx, monos.size());
            auto coords = dvr_solve(lat_ech, std::move(row));
            if (!coords) throw std::logic_error("decomposable invariant escaped the lattice");
            quotient_rows.push_back(reduce_row_modp(*coords, p));
        }
        for (size_t i = 0; i < k; ++i) {
            PEchelon span = rref_modp(quotient_rows, pl);
            PRow e(k, 0);
            e[i] = 1;
            for (size_t r = 0; r < span.rows.size(); ++r) {
                int c = span.pivots[r];
                if (e[c] == 0) continue;
                long long t = e[c];
                for (size_t j = 0; j < k; ++j)
                    e[j] = ((e[j] - t * span.rows[r][j]) % pl + pl) % pl;
            }
            bool in_span = true;
            for (long long x : e)
                if (x != 0) in_span = false;
            if (in_span) continue;
            gs.generators.push_back(lat.basis[i]);
            gs.degrees.push_back(d);
            last_added_degree = d;
            PRow unit(k, 0);
            unit[i] = 1;
            quotient_rows.push_back(std::move(unit));
        }
    }
    if (order_invertible(g) && D >= g.order())
        gs.certified_complete = true;       // Noether bound, |G| invertible in Z_(p)
    gs.growing_at_bound = !gs.certified_complete && last_added_degree == D;
    return gs;
}

} // namespace

GeneratorSet minimal_generators(const MatrixGroup& g, int degree_bound) {
    if (degree_bound < 1) throw std::invalid_argument("degree bound must be >= 1");
    switch (g.domain().kind) {
        case DomainKind::Rationals:
        case DomainKind::PrimeField:
            return minimal_generators_field(g, degree_bound);
        case DomainKind::LocalizedIntegers:
            return minimal_generators_dvr(g, degree_bound);
        case DomainKind::Integers:
            throw std::invalid_argument("minimal_generators over ZZ: localize at a prime first");
    }
    throw std::logic_error("unreachable");
}

} // namespace invar
