#include "invar/matrix.hpp"

#include <sstream>

namespace invar {

ScalarMatrix::ScalarMatrix(Domain d, int rows, int cols)
    : dom_(std::move(d)), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(dom_)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

ScalarMatrix ScalarMatrix::identity(const Domain& d, int n) {
    ScalarMatrix m(d, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(d);
    return m;
}

ScalarMatrix ScalarMatrix::from_rows(const Domain& d, const std::vector<std::vector<Scalar>>& rows) {
    int r = (int)rows.size();
    int c = r == 0 ? 0 : (int)rows[0].size();
    ScalarMatrix m(d, r, c);
    for (int i = 0; i < r; ++i) {
        if ((int)rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) {
            if (!(rows[i][j].domain() == d)) throw std::invalid_argument("matrix entry domain mismatch");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_ || !(dom_ == o.dom_)) throw std::invalid_argument("matrix product shape/domain mismatch");
    ScalarMatrix r(dom_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
    if (cols_ != o.cols_ || rows_ != o.rows_ || !(dom_ == o.dom_))
        throw std::invalid_argument("matrix difference shape/domain mismatch");
    ScalarMatrix r(dom_, rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(dom_ == o.dom_)) return false;
    for (int i = 0; i < rows_ * cols_; ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

namespace {

// Gauss-Jordan over the fraction field on an augmented matrix.
struct FFElim {
    Domain ff;
    int rows, cols;
    std::vector<Scalar> a;

    Scalar& at(int i, int j) { return a[i * cols + j]; }

    // Returns rank of the leading `lead` columns; full reduced echelon form.
    int run(int lead) {
        int r = 0;
        for (int c = 0; c < lead && r < rows; ++c) {
            int piv = -1;
            for (int i = r; i < rows; ++i)
                if (!at(i, c).is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            if (piv != r)
                for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
            Scalar inv = at(r, c).inverse();
            for (int j = 0; j < cols; ++j) at(r, j) = at(r, j) * inv;
            for (int i = 0; i < rows; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                Scalar f = at(i, c);
                for (int j = 0; j < cols; ++j) at(i, j) = at(i, j) - f * at(r, j);
            }
            ++r;
        }
        return r;
    }
};

FFElim to_ff(const ScalarMatrix& m, int extra_cols) {
    Domain ff = m.domain().fraction_field();
    FFElim e{ff, m.rows(), m.cols() + extra_cols, {}};
    e.a.assign(e.rows * e.cols, Scalar::zero(ff));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            e.at(i, j) = ff.kind == DomainKind::PrimeField ? m.at(i, j) : to_rational(m.at(i, j));
    return e;
}

} // namespace

Scalar ScalarMatrix::det_fraction_field() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    Domain ff = dom_.fraction_field();
    FFElim e = to_ff(*this, 0);
    // Plain elimination tracking the product of pivots and row swaps.
    Scalar det = Scalar::one(ff);
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (!e.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) return Scalar::zero(ff);
        if (piv != r) {
            for (int j = 0; j < e.cols; ++j) std::swap(e.at(piv, j), e.at(r, j));
            det = -det;
        }
        det = det * e.at(r, c);
        Scalar inv = e.at(r, c).inverse();
        for (int i = r + 1; i < rows_; ++i) {
            if (e.at(i, c).is_zero()) continue;
            Scalar f = e.at(i, c) * inv;
            for (int j = c; j < cols_; ++j) e.at(i, j) = e.at(i, j) - f * e.at(r, j);
        }
        ++r;
    }
    return det;
}

int ScalarMatrix::rank_fraction_field() const {
    FFElim e = to_ff(*this, 0);
    return e.run(cols_);
}

std::optional<ScalarMatrix> ScalarMatrix::inverse_fraction_field() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    Domain ff = dom_.fraction_field();
    FFElim e = to_ff(*this, cols_);
    for (int i = 0; i < rows_; ++i) e.at(i, cols_ + i) = Scalar::one(ff);
    int rank = e.run(cols_);
    if (rank < cols_) return std::nullopt;
    ScalarMatrix inv(ff, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = e.at(i, cols_ + j);
    return inv;
}

bool ScalarMatrix::entries_in_domain(const Domain& d) const {
    for (const Scalar& s : a_) {
        switch (d.kind) {
            case DomainKind::Integers:
                if (!is_integer(s.value())) return false;
                break;
            case DomainKind::LocalizedIntegers:
                if (s.value().get_den() % d.p == 0) return false;
                break;
            case DomainKind::Rationals:
            case DomainKind::PrimeField:
                break;
        }
    }
    return true;
}

ScalarMatrix ScalarMatrix::reduce_at_prime(const Int& p) const {
    Domain fp = Domain::prime_field(p);
    return map_entries(fp, [&](const Scalar& s) { return invar::reduce_at_prime(s, p); });
}

ScalarMatrix ScalarMatrix::map_entries(const Domain& target,
                                       const std::function<Scalar(const Scalar&)>& f) const {
    ScalarMatrix r(target, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = f(at(i, j));
    return r;
}

std::vector<std::vector<Scalar>> ScalarMatrix::to_rows() const {
    std::vector<std::vector<Scalar>> rows(rows_);
    for (int i = 0; i < rows_; ++i) {
        rows[i].reserve(cols_);
        for (int j = 0; j < cols_; ++j) rows[i].push_back(at(i, j));
    }
    return rows;
}

std::string ScalarMatrix::encode() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        if (i) out << ";";
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ",";
            out << at(i, j).value().get_str();
        }
    }
    return out.str();
}

std::string ScalarMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < rows_; ++i) {
        out << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).str();
        }
        out << "]";
        if (i + 1 < rows_) out << ", ";
    }
    out << "]";
    return out.str();
}

} // namespace invar
