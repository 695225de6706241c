#pragma once

#include <optional>
#include <string>

#include "wmha/algebroid.hpp"
#include "wmha/separability.hpp"
#include "wmha/wmha.hpp"

namespace wmha {

// A = C(x)B with basis index c * dim B + b, y -> y(x)1 and x -> 1(x)x.
// Delta(yx) = (y(x)1)E(1(x)x), S(yx) = S_B(x)S_C(y), eps(yx) = phi_C(y S_B(x)).
Wmha separability_wmha(const SeparabilityIdempotent& sep);
// Embeddings of B and C into C(x)B as n x dim matrices.
Matrix separability_wmha_B_embedding(const SeparabilityIdempotent& sep);
Matrix separability_wmha_C_embedding(const SeparabilityIdempotent& sep);

// Algebroid on A = C(x)B with C = B^op, S_B = id and S_C = sigma^-1.
// Both coproducts have representative y(x)x for yx; eps_B(xy) = x S_B^-1(y),
// eps_C(xy) = S_C^-1(x)y and S(yx) = S_B(x)S_C(y). No functional on B is
// involved, so this exists for any unital B and automorphism sigma.
Algebroid base_twisted_algebroid(const FiniteAlgebra& b, const Matrix& sigma);

enum class ExpectedStage { Success, NotSeparableFrobenius, ModularAutomorphismMismatch, CounitsDiffer };
std::string expected_stage_name(ExpectedStage s);

struct ObstructionScenario {
  std::string name;
  Algebroid algebroid;
  ExpectedStage expected;
};

// '1': dual numbers, sigma = id. '2': dual numbers, sigma(x) = 2x.
// '3': Q^2 with the swap. '4': M_2 with sigma = Ad diag(1,2).
ObstructionScenario obstruction_scenario(char which);

// Conjugation by an invertible element g of B on B, in B-coordinates.
Matrix inner_automorphism(const FiniteAlgebra& b, const Vector& g);

// Elements u, v of B (coordinates) with E(vu(x)1)E = E.
struct TwistData {
  Vector u;
  Vector v;
};

class TwistConditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Delta'(a) = (u(x)1)Delta(a)(v(x)1), eps'(a) = eps(u^-1 a v^-1),
// S'(a) = u S(v a v^-1) u^-1. u, v are given in coordinates of the supplied
// B embedding. Throws TwistConditionFailed unless u, v are invertible and
// E(vu(x)1)E = E.
Wmha twist_wmha(const Wmha& w, const Matrix& B_emb, const TwistData& t);

// Searches pairs u, v in B with entries from small integers and halves,
// returning the first pair with vu != 1 passing E(vu(x)1)E = E and giving a
// coproduct different from the original one.
std::optional<TwistData> search_twist(const Wmha& w, const Matrix& B_emb, int bound);

// Left quantum graph and coproduct from w, right quantum graph and coproduct
// from the twist of w.
Algebroid mixed_algebroid(const Wmha& w, const Matrix& B_emb, const TwistData& t);

// Weighted trace tr(d .) on M_n for a diagonal d.
Vector weighted_trace(std::size_t n, const std::vector<Rational>& diag);

// Example instances used by tests and the CLI.
SeparabilityIdempotent trace_separability_M2();
SeparabilityIdempotent weighted_separability_M2();
// u = [[1,1],[0,1]], v = [[1,-1/2],[0,1]] on the weighted M_2 bundle.
TwistData frozen_twist_M2();

// u = sum_k (k+1) e_k over the units and v = u^-1, in unit coordinates. On a
// groupoid with at least two units u is not central in QG, so the twist is
// nontrivial although vu = 1.
TwistData unit_weight_twist(std::size_t units);

}  // namespace wmha
