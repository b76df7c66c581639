#pragma once

#include "invar/numeric.hpp"

#include <vector>
#include <optional>

namespace invar {

// Exact dense linear algebra used by the per-degree invariant computations:
// rational RREF/kernels, mod-p RREF/kernels, and p-local (DVR) echelon forms
// for Z_(p)-lattice work. Row vectors throughout.

using QRow = std::vector<Rat>;
using PRow = std::vector<long long>;

struct QEchelon {
    std::vector<QRow> rows;      // reduced row echelon form, leading 1s
    std::vector<int> pivots;     // pivot column per row
};

/// Reduced row echelon form over Q. Deterministic; RREF is unique per span.
QEchelon rref_rational(std::vector<QRow> rows);

/// Right kernel {v : A v = 0} of the matrix with the given rows, as an
/// RREF'd basis.
std::vector<QRow> kernel_rational(const std::vector<QRow>& rows, int ncols);

struct PEchelon {
    std::vector<PRow> rows;
    std::vector<int> pivots;
    long long p;
};

PEchelon rref_modp(std::vector<PRow> rows, long long p);
std::vector<PRow> kernel_modp(const std::vector<PRow>& rows, int ncols, long long p);

/// Row echelon form over the DVR Z_(p): pivots are exact powers of p
/// (minimal-valuation pivot per column); row operations are restricted to
/// Z_(p)-unimodular ones, so the Z_(p)-row span is preserved exactly.
struct DvrEchelon {
    std::vector<QRow> rows;
    std::vector<int> pivot_cols;
    std::vector<long> pivot_vals;
    Int p;
};

DvrEchelon dvr_echelon(std::vector<QRow> rows, const Int& p);

/// Solve target = sum c_i * rows_i with all c_i in Z_(p); nullopt when the
/// target is outside the Z_(p)-span.
std::optional<std::vector<Rat>> dvr_solve(const DvrEchelon& ech, QRow target);

/// Scale a nonzero rational vector to integer entries with content 1 and
/// positive leading coefficient.
QRow primitive_integer_vector(QRow v);

/// Basis of (Q-span of basis) intersected with Z_(p)^N, starting from a
/// Q-basis: p-content normalization followed by repeated division of mod-p
/// dependencies by p, then a deterministic DVR echelon pass.
std::vector<QRow> saturate_at_p(std::vector<QRow> basis, const Int& p);

/// Entry-wise reduction of an integer-entry rational vector mod p.
PRow reduce_row_modp(const QRow& v, const Int& p);

} // namespace invar
