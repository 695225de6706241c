#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wmha/algebroid.hpp"
#include "wmha/separability.hpp"
#include "wmha/wmha.hpp"

namespace wmha {

enum class ObstructionStage {
  NotSeparableFrobenius,
  ModularAutomorphismMismatch,
  CounitsDiffer,
  RangeConditionFailed,
  KernelConditionFailed,
  // Any other failed condition of the pipeline; the narrative names it.
  ConditionFailed,
};
std::string stage_name(ObstructionStage s);

// Concrete evidence. The meaning of the entries depends on the stage:
//   NotSeparableFrobenius        elements = {x}, x a nonzero radical element in B-coordinates
//   ModularAutomorphismMismatch  elements = {z} (z central in B with sigma*(z) != z, may be
//                                absent), matrices = {sigma*, sigma of a faithful functional}
//   CounitsDiffer                index a with eps(e_a) != eps'(e_a);
//                                elements = {E in A(x)A, phi_B, phi_C}
//   RangeConditionFailed         elements = {v}; label names the equality
//   KernelConditionFailed        elements = {v}; label names the map
struct ObstructionWitness {
  std::string label;
  std::vector<Vector> elements;
  std::vector<Matrix> matrices;
  std::optional<std::size_t> index;
  std::string text;
};

struct ObstructionReport {
  ObstructionStage stage;
  ObstructionWitness witness;
  std::string narrative;
  // Both counits whenever they were computed.
  std::optional<Vector> counit;
  std::optional<Vector> counit_prime;
};

// sigma* = (S_C S_B)^-1 on B.
Matrix required_modular_automorphism(const QuantumGraphPair& g);
// Basis of the center of an algebra.
std::vector<Vector> center_basis(const FiniteAlgebra& a);

// Finds a separating functional on B with modular automorphism sigma* and
// antipodal maps S_B, S_C. Candidates are tried in order: the caller's list,
// the regular trace, the rescaled generator of the functionals with modular
// automorphism sigma*, and finally a direct linear solve for E.
std::variant<SeparabilityIdempotent, ObstructionReport> find_separable_frobenius_base(
    const QuantumGraphPair& g, const std::vector<Vector>& candidates = {});

// Delta(a) = E rep(Delta_B(a)) and Delta'(a) = rep(Delta_C(a)) E, both n^2 x n.
struct BuiltCoproducts {
  Vector E;  // in A(x)A
  Matrix delta;
  Matrix delta_prime;
};
BuiltCoproducts build_delta(const Algebroid& alg, const SeparabilityIdempotent& sep);
Report check_built_coproducts(const Algebroid& alg, const BuiltCoproducts& c);

// eps = phi_B o eps_B and eps' = phi_C o eps_C as rows.
struct Counits {
  Vector eps;
  Vector eps_prime;
};
Counits build_counits(const Algebroid& alg, const SeparabilityIdempotent& sep);
Report check_counit_laws(const FiniteAlgebra& a, const BuiltCoproducts& c, const Counits& k);

// The four canonical maps with T1, T4 taken from Delta and T2, T3 from Delta'.
CanonicalMaps mixed_canonical_maps(const Algebroid& alg, const BuiltCoproducts& c);
Report check_ranges_and_fullness(const FiniteAlgebra& a, const CanonicalMaps& m,
                                 std::optional<ObstructionWitness>* witness = nullptr);
Report check_mixed_kernels(const FiniteAlgebra& a, const CanonicalMaps& m,
                           std::optional<ObstructionWitness>* witness = nullptr);
Report check_E_comultiplicativity(const FiniteAlgebra& a, const BuiltCoproducts& c);
Report check_mixed_coassociativity(const FiniteAlgebra& a, const BuiltCoproducts& c);

struct PipelineResult {
  std::optional<Wmha> wmha;
  std::optional<ObstructionReport> obstruction;
  Report report;
  std::optional<Vector> counit;
  std::optional<Vector> counit_prime;
  // eps = eps' and eps o S = eps, when both counits exist. The pipeline also
  // checks eps o S = eps', which makes the two equivalent.
  std::optional<bool> counits_equal;
  std::optional<bool> counit_antipode_invariant;

  bool ok() const { return wmha.has_value(); }
};

// Runs every stage in dependency order and stops at the first failure. On
// success the bundle has passed the full wmha suite and carries the
// algebroid's antipode.
PipelineResult reconstruct_wmha(const Algebroid& alg,
                                    const std::vector<Vector>& candidates = {});

// Re-checks a witness from the algebroid data alone, without the detection
// routines. Returns an empty string when the witness exhibits a genuine
// violation, otherwise the reason it does not.
std::string validate_obstruction(const Algebroid& alg, const ObstructionReport& r);

}  // namespace wmha
