#pragma once

#include "invar/domain.hpp"

#include <vector>
#include <optional>
#include <string>
#include <functional>

namespace invar {

/// Small dense matrix of scalars over a shared domain. Group elements and
/// representation generators live here; sizes are tiny (n <= a handful).
class ScalarMatrix {
public:
    ScalarMatrix() : dom_(Domain::rationals()), rows_(0), cols_(0) {}
    ScalarMatrix(Domain d, int rows, int cols);
    static ScalarMatrix identity(const Domain& d, int n);
    static ScalarMatrix from_rows(const Domain& d, const std::vector<std::vector<Scalar>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Domain& domain() const { return dom_; }

    const Scalar& at(int i, int j) const { return a_[i * cols_ + j]; }
    Scalar& at(int i, int j) { return a_[i * cols_ + j]; }

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;
    bool operator==(const ScalarMatrix& o) const;

    /// Determinant over the fraction field.
    Scalar det_fraction_field() const;
    /// Rank over the fraction field.
    int rank_fraction_field() const;
    /// Gauss-Jordan inverse over the fraction field; nullopt when singular.
    /// The result carries fraction-field entries.
    std::optional<ScalarMatrix> inverse_fraction_field() const;

    /// True when every entry lies in the matrix's own coefficient domain.
    bool entries_in_domain(const Domain& d) const;

    /// Entry-wise reduction mod p (domain Z or Z_(p) -> GF(p)).
    ScalarMatrix reduce_at_prime(const Int& p) const;

    /// Map entries into another domain.
    ScalarMatrix map_entries(const Domain& target,
                             const std::function<Scalar(const Scalar&)>& f) const;

    std::vector<std::vector<Scalar>> to_rows() const;

    /// Canonical string encoding, used as a hash key in group closure.
    std::string encode() const;
    std::string str() const;

private:
    Domain dom_;
    int rows_, cols_;
    std::vector<Scalar> a_;
};

} // namespace invar
