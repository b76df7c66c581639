#include "invar/monomial.hpp"

#include <algorithm>

namespace invar {

Monomial Monomial::operator*(const Monomial& o) const {
    if (e.size() != o.e.size()) throw std::invalid_argument("monomial arity mismatch");
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e.size() != o.e.size()) throw std::invalid_argument("monomial arity mismatch");
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("monomial division not exact");
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("monomial arity mismatch");
    Monomial r = a;
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

namespace {

int cmp_lex(const int* a, const int* b, int n) {
    for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int cmp_grevlex(const int* a, const int* b, int n) {
    int da = 0, db = 0;
    for (int i = 0; i < n; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the monomial with the smaller last differing exponent wins.
    for (int i = n - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("monomial arity mismatch");
    int n = (int)a.e.size();
    switch (kind) {
        case OrderKind::Lex:
            return cmp_lex(a.e.data(), b.e.data(), n);
        case OrderKind::GrevLex:
            return cmp_grevlex(a.e.data(), b.e.data(), n);
        case OrderKind::BlockElimination: {
            int k = block_split;
            if (k < 0 || k > n) throw std::invalid_argument("block split out of range");
            int c = cmp_grevlex(a.e.data(), b.e.data(), k);
            if (c != 0) return c;
            return cmp_grevlex(a.e.data() + k, b.e.data() + k, n - k);
        }
    }
    throw std::logic_error("unreachable");
}

std::string MonomialOrder::str() const {
    switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::GrevLex: return "grevlex";
        case OrderKind::BlockElimination: return "block(" + std::to_string(block_split) + ")";
    }
    return "?";
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    if (nvars <= 0) {
        std::vector<Monomial> out;
        if (d == 0) out.push_back(Monomial(0));
        return out;
    }
    std::vector<Monomial> out;
    std::vector<int> cur(nvars, 0);
    // Enumerate recursively, then sort descending under grevlex.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            cur[pos] = rem;
            out.push_back(Monomial(cur));
            return;
        }
        for (int k = rem; k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, rem - k);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    MonomialOrder o = MonomialOrder::grevlex();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return o.compare(a, b) > 0; });
    return out;
}

} // namespace invar
