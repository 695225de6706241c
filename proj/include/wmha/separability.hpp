#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wmha/algebra.hpp"
#include "wmha/verdict.hpp"

namespace wmha {

class NotFaithful : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoModularAutomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Gram matrix G[i][j] = phi(b_i b_j).
Matrix gram_matrix(const FiniteAlgebra& b, const Vector& phi);
bool is_faithful(const FiniteAlgebra& b, const Vector& phi);

// The automorphism sigma with phi(x1 x2) = phi(x2 sigma(x1)). Throws
// NotFaithful or NoModularAutomorphism.
Matrix modular_automorphism(const FiniteAlgebra& b, const Vector& phi);

// An element of B(x)C together with its antipodal maps and integrals. E is
// indexed i * dim(C) + j.
struct SeparabilityIdempotent {
  FiniteAlgebra B;
  FiniteAlgebra C;
  Vector E;
  Matrix S_B;  // B -> C
  Matrix S_C;  // C -> B
  Vector phi_B;
  Vector phi_C;
  Matrix sigma_B;
  Matrix sigma_C;
};

struct NotIdempotentResult {
  Vector E;
  // E^2 - E in B(x)C.
  Vector defect;
};

// E = sum_i b_i (x) S_B(b^i) with phi(b_i b^k) = delta_ik. Idempotency is
// checked; the remaining data is completed by derive_antipodal_data.
std::variant<SeparabilityIdempotent, NotIdempotentResult> build_E_from_functional(
    const FiniteAlgebra& b, const Vector& phi, const FiniteAlgebra& c, const Matrix& s_b);

// Raw dual-basis element without the idempotency check.
Vector dual_basis_element(const FiniteAlgebra& b, const Vector& phi, const Matrix& s_b);

// Fills S_C = sigma_B^-1 S_B^-1, phi_C = phi_B o S_B^-1 and sigma_C.
void derive_antipodal_data(SeparabilityIdempotent& sep);

// Solves (phi_B (x) id)E = 1 and (id (x) phi_C)E = 1; nullopt when either
// system is inconsistent or underdetermined.
struct FunctionalPair {
  Vector phi_B;
  Vector phi_C;
};
std::optional<FunctionalPair> functional_from_E(const FiniteAlgebra& b, const FiniteAlgebra& c,
                                                const Vector& e);

// All invariants of a separability idempotent.
Report check_separability_idempotent(const SeparabilityIdempotent& sep);

// Kernel of the trace form (x, y) -> tr(L_{xy}); equals the Jacobson radical
// in characteristic zero.
Subspace trace_form_radical(const FiniteAlgebra& b);
// Independent validation that x is in the Jacobson radical: every L_{x b_j}
// is nilpotent.
bool radical_witness_valid(const FiniteAlgebra& b, const Vector& x);
// Functional a -> tr(L_a).
Vector regular_trace(const FiniteAlgebra& b);

struct FrobeniusCertificate {
  Vector phi;
  Matrix sigma;
  Vector E;  // in B (x) B^op with S_B the identity map
};
struct FrobeniusRefutation {
  Vector radical_element;
};
struct Inconclusive {};
using FrobeniusVerdict = std::variant<FrobeniusCertificate, FrobeniusRefutation, Inconclusive>;

// Radical criterion, then the caller's candidates, then the regular trace.
FrobeniusVerdict certify_separable_frobenius(const FiniteAlgebra& b,
                                             const std::vector<Vector>& candidates = {});

// Basis of the solution space of phi(x1 x2) = phi(x2 sigma(x1)).
std::vector<Vector> functionals_with_modular_automorphism(const FiniteAlgebra& b,
                                                          const Matrix& sigma);

}  // namespace wmha
