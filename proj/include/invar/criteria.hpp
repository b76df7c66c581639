#pragma once

#include "invar/invariants.hpp"
#include "invar/groebner.hpp"

#include <optional>
#include <string>

namespace invar {

enum class Conclusion { PolynomialRing, NotPolynomialRing, BlowupTensorOnly, Inconclusive };

std::string conclusion_str(Conclusion c);

/// An invariant with p-integral coefficients that is not an element of the
/// subalgebra generated by the (unit-normalized) lifts of the K-generators.
/// k_expression writes it as a polynomial in the K-generators over K; a
/// coefficient of negative p-valuation is the certificate, since the
/// expression is unique once the K-generators are independent.
struct ObstructionWitness {
    Polynomial element;          // over Z_(p)
    int degree = 0;
    Polynomial k_expression;     // tag variables, over Q
    long expression_valuation = 0;
};

struct LocalVerdict {
    Int p = 0;
    Conclusion conclusion = Conclusion::Inconclusive;
    std::vector<int> k_degrees, f_degrees, r_degrees;
    bool injective = false;
    Int image_order = 0;
    bool k_certified = false;
    bool f_certified = false;
    bool by_corollary = false;           // settled without computation (p does not divide |G|)
    std::optional<ObstructionWitness> obstruction;
    std::vector<Polynomial> k_generators;   // over Q
    std::vector<Polynomial> f_generators;   // over F_p
    std::vector<Polynomial> r_generators;   // over Z_(p), lattice-minimal
    int degree_bound_k = 0, degree_bound_f = 0;
    std::vector<std::string> notes;
};

struct Verdict {
    Conclusion conclusion = Conclusion::Inconclusive;
    std::vector<LocalVerdict> primes;
    int degree_bound = 0;
    bool certificates_verified = false;
    bool pseudoreflection_generated = false;
    std::vector<std::string> notes;
};

/// Kemper's criterion: n candidates, algebraically independent, and
/// deg f_1 ... deg f_n = |G| certify K[x]^G = K[f_1,...,f_n].
/// Throws when the candidate count differs from the dimension.
bool check_kemper(const std::vector<Polynomial>& fs, const MatrixGroup& g);

/// Given K[x]^G is known polynomial: independent homogeneous invariants with
/// degree product <= |G| are automatically a full generating set.
bool check_deg_product_bound(const std::vector<Polynomial>& fs, const MatrixGroup& g);

struct AinvModuloResult {
    bool equals_r_algebra = false;
    std::optional<RelationWitness> witness;   // relation among the reductions
};

/// The mod-p criterion: fs (invariants over Z_(p) generating K[x]^G) generate
/// R[x]^G as an R-algebra iff their reductions mod p are algebraically
/// independent.
AinvModuloResult ainv_modulo(const std::vector<Polynomial>& fs, const MatrixGroup& g);

/// Reynolds lifts of the F_p-side generators when p does not divide |G|:
/// coefficient-wise preimages averaged by the Reynolds operator.
GeneratorSet reynolds_lift(const MatrixGroup& g, const Int& p,
                           const std::vector<Polynomial>& f_generators);

/// The local decision pipeline at a DVR Z_(p).
/// degree_bound = 0 selects the default policy per side.
LocalVerdict decide_dvr(const MatrixGroup& g, const Int& p, int degree_bound = 0);

/// Aggregate decision over ZZ: decide_dvr at every prime dividing |G|;
/// other primes are settled by the invertible-order corollary when the group
/// is generated by pseudoreflections.
Verdict decide_over_integers(const MatrixGroup& g, int degree_bound = 0);

/// Independent re-verification of every certificate carried by a verdict,
/// by code paths distinct from the producing pipeline (Jacobian-based
/// independence, element-wise invariance, Groebner expression valuations).
/// Returns true when everything re-verifies; failures are described.
bool verify_local_certificates(const MatrixGroup& g, const LocalVerdict& v,
                               std::vector<std::string>* failures = nullptr);
bool verify_verdict(const MatrixGroup& g_over_z, Verdict& v,
                    std::vector<std::string>* failures = nullptr);

} // namespace invar
