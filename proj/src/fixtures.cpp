#include "invar/fixtures.hpp"

namespace invar {

namespace {

ScalarMatrix mat(const Domain& d, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Scalar>> s;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (long x : r) row.emplace_back(d, x);
        s.push_back(std::move(row));
    }
    return ScalarMatrix::from_rows(d, s);
}

} // namespace

MatrixGroup s3_reflection(const Domain& dom) {
    return MatrixGroup::close({mat(dom, {{1, 3}, {0, -1}}), mat(dom, {{-2, -3}, {1, 2}})});
}

MatrixGroup s3_permutation(const Domain& dom) {
    // Images of the transpositions (1 2) and (2 3).
    return MatrixGroup::close({mat(dom, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                               mat(dom, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})});
}

MatrixGroup c2_diagonal(const Domain& dom) {
    return MatrixGroup::close({mat(dom, {{1, 0}, {0, -1}})});
}

MatrixGroup cyclic_rotation(int k, const Domain& dom) {
    switch (k) {
        case 3: return MatrixGroup::close({mat(dom, {{0, -1}, {1, -1}})});
        case 4: return MatrixGroup::close({mat(dom, {{0, -1}, {1, 0}})});
        case 6: return MatrixGroup::close({mat(dom, {{1, -1}, {1, 0}})});
        default: throw std::invalid_argument("cyclic_rotation supports k in {3, 4, 6}");
    }
}

MatrixGroup c5_companion(const Domain& dom) {
    // Companion matrix of t^4 + t^3 + t^2 + t + 1.
    return MatrixGroup::close({mat(dom, {{0, 0, 0, -1},
                                         {1, 0, 0, -1},
                                         {0, 1, 0, -1},
                                         {0, 0, 1, -1}})});
}

MatrixGroup d4_order8(const Domain& dom) {
    return MatrixGroup::close({mat(dom, {{0, -1}, {1, 0}}), mat(dom, {{1, 0}, {0, -1}})});
}

std::vector<std::pair<std::string, MatrixGroup>> fixture_groups(const Domain& dom) {
    std::vector<std::pair<std::string, MatrixGroup>> out;
    out.emplace_back("C2-diagonal", c2_diagonal(dom));
    out.emplace_back("C3-rotation", cyclic_rotation(3, dom));
    out.emplace_back("C4-rotation", cyclic_rotation(4, dom));
    out.emplace_back("C5-companion", c5_companion(dom));
    out.emplace_back("C6-rotation", cyclic_rotation(6, dom));
    out.emplace_back("S3-reflection", s3_reflection(dom));
    out.emplace_back("S3-permutation", s3_permutation(dom));
    out.emplace_back("D4-order8", d4_order8(dom));
    return out;
}

} // namespace invar
