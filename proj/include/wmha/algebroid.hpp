#pragma once

#include <memory>

#include "wmha/balanced.hpp"
#include "wmha/source_target.hpp"
#include "wmha/verdict.hpp"
#include "wmha/wmha.hpp"

namespace wmha {

// A regular multiplier Hopf algebroid over a unital algebra A. Coproducts
// are stored by representatives in A(x)A: column a of delta_B represents
// Delta_B(a) modulo the l-relations, column a of delta_C represents
// Delta_C(a) modulo the r-relations. Counital maps land in B- and
// C-coordinates.
struct Algebroid {
  QuantumGraphPair graphs;
  Matrix delta_B;  // n^2 x n
  Matrix delta_C;  // n^2 x n
  Matrix eps_B;    // dim B x n
  Matrix eps_C;    // dim C x n
  Matrix antipode; // n x n

  std::size_t dim() const { return graphs.A.dim(); }
};

// The six balanced quotients of one quantum graph pair.
struct BalancedSpaces {
  BalancedSpace l, r, s, t, s_up, t_up;
  explicit BalancedSpaces(const QuantumGraphPair& g);
  const BalancedSpace& get(BalancedKind k) const;
};

// Matrices between quotient coordinates:
//   T_rho:    s    -> l,  a(x)b -> Delta_B(a)(1(x)b)
//   T_lambda: t-up -> l,  a(x)b -> Delta_B(b)(a(x)1)
//   lambda_T: t    -> r,  a(x)b -> (a(x)1)Delta_C(b)
//   rho_T:    s-up -> r,  a(x)b -> (1(x)b)Delta_C(a)
struct AlgebroidCanonicalMaps {
  Matrix T_rho;
  Matrix T_lambda;
  Matrix lambda_T;
  Matrix rho_T;
};
AlgebroidCanonicalMaps algebroid_canonical_maps(const Algebroid& alg, const BalancedSpaces& sp);

Report check_quantum_graphs(const Algebroid& alg);
Report check_coproducts(const Algebroid& alg, const BalancedSpaces& sp);
Report check_coassociativity(const Algebroid& alg);
Report check_canonical_bijections(const Algebroid& alg, const BalancedSpaces& sp,
                                  const AlgebroidCanonicalMaps& m);
Report check_counital_maps(const Algebroid& alg, const BalancedSpaces& sp);
Report check_antipode_diagrams(const Algebroid& alg, const BalancedSpaces& sp);

// All of the above in a fixed order.
Report check_algebroid_axioms(const Algebroid& alg);
Report check_algebroid_axioms(const Algebroid& alg, const BalancedSpaces& sp);

struct ForwardResult {
  Algebroid algebroid;
  Report report;
};
// Delta_B = pi_l Delta, Delta_C = pi_r Delta, eps_B = S^-1 eps_t,
// eps_C = S^-1 eps_s. The report holds the algebroid suite together with the
// comparisons against the original canonical maps and counital formulas.
ForwardResult forward_construct(const Wmha& w);
Algebroid forward_algebroid(const Wmha& w, const BaseAlgebraData& d);

// Elements of A: x in B-coordinates and y in C-coordinates pushed into A.
Vector embed_B(const Algebroid& alg, const Vector& x);
Vector embed_C(const Algebroid& alg, const Vector& y);

}  // namespace wmha
