#pragma once

#include <vector>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace invar {

/// Exponent vector; length equals the ambient variable count.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {
        for (int x : e)
            if (x < 0) throw std::invalid_argument("negative exponent");
    }
    static Monomial var(int nvars, int i, int power = 1) {
        Monomial m(nvars);
        m.e.at(i) = power;
        return m;
    }

    int nvars() const { return (int)e.size(); }
    int degree() const { int d = 0; for (int x : e) d += x; return d; }
    bool is_constant() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;       // this / o
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e == o.e; }
};

enum class OrderKind { Lex, GrevLex, BlockElimination };

/// Monomial order: a multiplicative total order with 1 minimal.
/// BlockElimination(k) eliminates the first k variables: blocks are compared
/// by graded reverse lexicographic order, first block first.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    int block_split = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder block_elimination(int k) { return {OrderKind::BlockElimination, k}; }

    /// Negative if a < b, zero if equal, positive if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string str() const;
};

/// Degree-d monomials in nvars variables, listed descending under GrevLex.
/// This ordering is the column convention of all per-degree linear algebra.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

} // namespace invar
