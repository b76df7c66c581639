#include "invar/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace invar {

namespace {

bool row_is_zero(const QRow& r) {
    for (const Rat& x : r)
        if (x != 0) return false;
    return true;
}

int leading_index(const QRow& r) {
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) return (int)i;
    return -1;
}

long long modmul(long long a, long long b, long long p) {
    return (long long)((__int128)a * b % p);
}

long long modpow(long long a, long long e, long long p) {
    long long r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = modmul(r, a, p);
        a = modmul(a, a, p);
        e >>= 1;
    }
    return r;
}

long long modinv(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("mod-p inverse of zero");
    return modpow(a, p - 2, p);
}

} // namespace

QRow primitive_integer_vector(QRow v) {
    Int l = 1;
    for (const Rat& x : v)
        if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    Int g = 0;
    for (Rat& x : v) {
        x *= l;
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (g == 0) return v; // zero vector
    int lead = leading_index(v);
    if (v[lead] < 0) g = -g;
    for (Rat& x : v) {
        x /= g;
        x.canonicalize();
    }
    return v;
}

QEchelon rref_rational(std::vector<QRow> rows) {
    QEchelon out;
    if (rows.empty()) return out;
    size_t ncols = rows[0].size();
    for (auto& r : rows)
        if (r.size() != ncols) throw std::invalid_argument("ragged rows");
    // Keep working rows as primitive integer vectors; this caps coefficient
    // growth far better than raw rational elimination.
    for (auto& r : rows) r = primitive_integer_vector(std::move(r));
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        // Pivot: nonzero entry at column c with the smallest absolute value.
        int piv = -1;
        for (size_t i = rank; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            if (piv < 0) { piv = (int)i; continue; }
            Rat a = abs(rows[i][c]), b = abs(rows[piv][c]);
            if (a < b) piv = (int)i;
        }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            // rows[i] := rows[i]*a - rows[rank]*b, integer combination.
            Rat a = rows[rank][c], b = rows[i][c];
            for (size_t j = 0; j < ncols; ++j)
                rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
            rows[i] = primitive_integer_vector(std::move(rows[i]));
        }
        ++rank;
        out.pivots.push_back((int)c);
    }
    rows.resize(rank);
    // Scale to leading ones.
    for (size_t r = 0; r < rank; ++r) {
        Rat inv = 1 / rows[r][out.pivots[r]];
        for (Rat& x : rows[r]) { x *= inv; x.canonicalize(); }
    }
    out.rows = std::move(rows);
    return out;
}

std::vector<QRow> kernel_rational(const std::vector<QRow>& rows, int ncols) {
    QEchelon e = rref_rational(rows);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<QRow> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        QRow v(ncols, Rat(0));
        v[f] = 1;
        for (size_t r = 0; r < e.rows.size(); ++r)
            v[e.pivots[r]] = -e.rows[r][f];
        basis.push_back(std::move(v));
    }
    QEchelon k = rref_rational(basis);
    return k.rows;
}

PEchelon rref_modp(std::vector<PRow> rows, long long p) {
    PEchelon out;
    out.p = p;
    if (rows.empty()) return out;
    size_t ncols = rows[0].size();
    for (auto& r : rows)
        for (auto& x : r) { x %= p; if (x < 0) x += p; }
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        int piv = -1;
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][c] != 0) { piv = (int)i; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        long long inv = modinv(rows[rank][c], p);
        for (auto& x : rows[rank]) x = modmul(x, inv, p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            long long f = rows[i][c];
            for (size_t j = c; j < ncols; ++j) {
                rows[i][j] = (rows[i][j] - modmul(f, rows[rank][j], p)) % p;
                if (rows[i][j] < 0) rows[i][j] += p;
            }
        }
        ++rank;
        out.pivots.push_back((int)c);
    }
    rows.resize(rank);
    out.rows = std::move(rows);
    return out;
}

std::vector<PRow> kernel_modp(const std::vector<PRow>& rows, int ncols, long long p) {
    PEchelon e = rref_modp(rows, p);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<PRow> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        PRow v(ncols, 0);
        v[f] = 1;
        for (size_t r = 0; r < e.rows.size(); ++r)
            v[e.pivots[r]] = (p - e.rows[r][f]) % p;
        basis.push_back(std::move(v));
    }
    PEchelon k = rref_modp(basis, p);
    return k.rows;
}

namespace {

long val_or_inf(const Rat& x, const Int& p) {
    if (x == 0) return VAL_INFINITY;
    return valuation_rat(x, p);
}

} // namespace

DvrEchelon dvr_echelon(std::vector<QRow> rows, const Int& p) {
    DvrEchelon out;
    out.p = p;
    rows.erase(std::remove_if(rows.begin(), rows.end(), row_is_zero), rows.end());
    if (rows.empty()) return out;
    size_t ncols = rows[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        int piv = -1;
        long best = VAL_INFINITY;
        for (size_t i = rank; i < rows.size(); ++i) {
            long v = val_or_inf(rows[i][c], p);
            if (v < best) { best = v; piv = (int)i; }
        }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        // Normalize by the unit part so the pivot becomes exactly p^v.
        Rat pivval = rows[rank][c];
        Rat pv;
        if (best >= 0) pv = Rat(int_pow(p, best));
        else pv = make_rat(Int(1), int_pow(p, -best));
        Rat unit = pivval / pv;
        unit.canonicalize();
        for (Rat& x : rows[rank]) { x /= unit; x.canonicalize(); }
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            long vi = val_or_inf(rows[i][c], p);
            if (i > rank && vi < best) throw std::logic_error("dvr_echelon pivot was not minimal");
            // Clearing above the pivot is unimodular only when the multiplier
            // is p-integral; otherwise the entry stays.
            if (i < rank && vi < best) continue;
            Rat f = rows[i][c] / pv;
            f.canonicalize();
            for (size_t j = 0; j < ncols; ++j) {
                rows[i][j] -= f * rows[rank][j];
                rows[i][j].canonicalize();
            }
        }
        out.pivot_cols.push_back((int)c);
        out.pivot_vals.push_back(best);
        ++rank;
    }
    rows.resize(rank);
    out.rows = std::move(rows);
    return out;
}

std::optional<std::vector<Rat>> dvr_solve(const DvrEchelon& ech, QRow target) {
    std::vector<Rat> coords(ech.rows.size(), Rat(0));
    for (size_t r = 0; r < ech.rows.size(); ++r) {
        int c = ech.pivot_cols[r];
        if (target[c] == 0) continue;
        long v = valuation_rat(target[c], ech.p);
        if (v < ech.pivot_vals[r]) return std::nullopt;
        Rat t = target[c] / ech.rows[r][c];
        t.canonicalize();
        for (size_t j = 0; j < target.size(); ++j) {
            target[j] -= t * ech.rows[r][j];
            target[j].canonicalize();
        }
        coords[r] = t;
    }
    if (!row_is_zero(target)) return std::nullopt;
    return coords;
}

PRow reduce_row_modp(const QRow& v, const Int& p) {
    if (p >= Int("2147483648"))
        throw std::invalid_argument("prime too large for lattice linear algebra");
    PRow r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) {
            // p-integral rationals reduce via the inverse of the denominator.
            if (v[i].get_den() % p == 0) throw std::domain_error("entry not p-integral");
            Int num = mod_reduce(v[i].get_num(), p);
            Int den = mod_inverse(v[i].get_den(), p);
            r[i] = Int(num * den % p).get_si();
        } else {
            r[i] = mod_reduce(v[i].get_num(), p).get_si();
        }
    }
    return r;
}

std::vector<QRow> saturate_at_p(std::vector<QRow> basis, const Int& p) {
    basis.erase(std::remove_if(basis.begin(), basis.end(), row_is_zero), basis.end());
    if (basis.empty()) return basis;
    for (auto& v : basis) v = primitive_integer_vector(std::move(v));
    long long pl = p.get_si();
    while (true) {
        // Dependencies among the mod-p reductions lift to vectors divisible
        // by p; dividing by p strictly enlarges the module inside V.
        std::vector<PRow> cols((basis[0].size()), PRow(basis.size(), 0));
        for (size_t i = 0; i < basis.size(); ++i) {
            PRow red = reduce_row_modp(basis[i], p);
            for (size_t j = 0; j < red.size(); ++j) cols[j][i] = red[j];
        }
        std::vector<PRow> dep = kernel_modp(cols, (int)basis.size(), pl);
        if (dep.empty()) break;
        const PRow& lam = dep.front();
        QRow w(basis[0].size(), Rat(0));
        for (size_t i = 0; i < basis.size(); ++i) {
            if (lam[i] == 0) continue;
            Rat li((long)lam[i]);
            for (size_t j = 0; j < w.size(); ++j) w[j] += li * basis[i][j];
        }
        for (Rat& x : w) { x /= p; x.canonicalize(); }
        int replace = -1;
        for (int i = (int)basis.size() - 1; i >= 0; --i)
            if (lam[i] % pl != 0) { replace = i; break; }
        if (replace < 0) throw std::logic_error("saturation dependency was trivial");
        basis[replace] = primitive_integer_vector(std::move(w));
    }
    DvrEchelon e = dvr_echelon(std::move(basis), p);
    return e.rows;
}

} // namespace invar
