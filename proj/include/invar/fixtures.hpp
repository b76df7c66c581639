#pragma once

#include "invar/matgroup.hpp"

#include <string>
#include <utility>
#include <vector>

namespace invar {

/// Representations used across the test and benchmark surfaces. All are
/// integer matrices, so they re-domain to ZZ, QQ or any Z_(p).

/// The 2-dimensional reflection representation of S_3 sending the
/// transpositions (1 2) and (2 3) to [[1,3],[0,-1]] and [[-2,-3],[1,2]].
MatrixGroup s3_reflection(const Domain& dom);

/// S_3 as 3x3 permutation matrices.
MatrixGroup s3_permutation(const Domain& dom);

/// diag(1, -1), order 2.
MatrixGroup c2_diagonal(const Domain& dom);
/// Rotation of order k in Gl_2 for k in {3, 4, 6}.
MatrixGroup cyclic_rotation(int k, const Domain& dom);
/// Companion matrix of the fifth cyclotomic polynomial, order 5 in Gl_4.
MatrixGroup c5_companion(const Domain& dom);
/// Dihedral group of order 8: rotation by 90 degrees and a reflection.
MatrixGroup d4_order8(const Domain& dom);

/// The fixture set of the Molien/brute-force agreement suite.
std::vector<std::pair<std::string, MatrixGroup>> fixture_groups(const Domain& dom);

} // namespace invar
