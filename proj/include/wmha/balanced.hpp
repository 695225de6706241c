#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wmha/algebra.hpp"
#include "wmha/source_target.hpp"
#include "wmha/verdict.hpp"

namespace wmha {

// A unital algebra A with two commuting subalgebras B, C (columns of B_emb,
// C_emb) and anti-isomorphisms S_B: B -> C, S_C: C -> B in coordinates. E,
// when present, holds coordinates in B(x)C indexed i * dim C + j.
struct QuantumGraphPair {
  FiniteAlgebra A;
  FiniteAlgebra B;
  FiniteAlgebra C;
  Matrix B_emb;
  Matrix C_emb;
  Matrix S_B;
  Matrix S_C;
  std::optional<Vector> E;

  // Elements of A.
  Vector x(std::size_t i) const { return B_emb.column(i); }
  Vector y(std::size_t j) const { return C_emb.column(j); }
  Vector S_B_of(std::size_t i) const { return C_emb.apply(S_B.column(i)); }
  Vector S_C_of(std::size_t j) const { return B_emb.apply(S_C.column(j)); }
  // E pushed into A(x)A with the given maps applied to its legs; first: B ->
  // A, second: C -> A, both as n x dim matrices.
  Vector E_with_legs(const Matrix& first, const Matrix& second) const;
  Vector E_in_A() const { return E_with_legs(B_emb, C_emb); }
};

QuantumGraphPair graph_pair_from_wmha(const Wmha& w, const BaseAlgebraData& d);

enum class BalancedKind { Left, Right, Source, Target, SourceUp, TargetUp };
std::string kind_name(BalancedKind k);

// Quotient of A(x)A by the span of the relators of one kind:
//   Left      xa(x)b  - a(x)S_B(x)b
//   Right     a(x)by  - aS_C(y)(x)b
//   Source    ax(x)b  - a(x)xb
//   Target    a(x)yb  - ay(x)b
//   SourceUp  xa(x)b  - a(x)bx
//   TargetUp  a(x)by  - ya(x)b
// The relation space is kept in reduced echelon form; its remainder map is the
// canonical representative, and the quotient basis is indexed by the free
// columns.
class BalancedSpace {
 public:
  BalancedSpace(BalancedKind kind, const QuantumGraphPair& g);

  BalancedKind kind() const { return kind_; }
  std::size_t ambient() const { return rel_.ambient(); }
  std::size_t dim() const { return free_.size(); }
  std::size_t relation_dim() const { return rel_.rank(); }
  const Echelon& relations() const { return rel_; }
  const std::vector<std::size_t>& free_columns() const { return free_; }

  Vector canonical(const Vector& v) const { return rel_.reduce(v); }
  bool equivalent(const Vector& v, const Vector& w) const;
  // pi: quotient coordinates.
  Vector project(const Vector& v) const;
  // The representative sum_k q_k e_{free_k}.
  Vector lift(const Vector& q) const;

 private:
  BalancedKind kind_;
  Echelon rel_;
  std::vector<std::size_t> free_;
};

// Relator generators of a kind, over basis elements of A, B and C.
std::vector<Vector> relators(BalancedKind kind, const QuantumGraphPair& g);

// The section formula on all of A(x)A; needs E.
//   Left      E v            Right     v E
//   Source    (a(x)1)F1(1(x)b)  with F1 = (id(x)S_C)E
//   Target    (a(x)1)F2(1(x)b)  with F2 = (S_B(x)id)E
//   SourceUp  (1(x)b)F3(a(x)1)  with F3 = (id(x)S_B^-1)E
//   TargetUp  (1(x)b)F4(a(x)1)  with F4 = (S_C^-1(x)id)E
Vector section_formula(BalancedKind kind, const QuantumGraphPair& g, const Vector& v);
Vector section_idempotent(BalancedKind kind, const QuantumGraphPair& g);

// theta: columns are section_formula on the lifted quotient basis.
Matrix section_matrix(const BalancedSpace& s, const QuantumGraphPair& g);

// Well-definedness, pi o theta = id, theta o pi idempotent with kernel the
// relation space, and range of theta = range of the formula.
Report check_section(const BalancedSpace& s, const QuantumGraphPair& g);

// sum v_ab (aF_1 (x) F_2 b) and sum v_ab (F_1 a (x) b F_2).
Vector outer_sandwich(const FiniteAlgebra& a, const Vector& f, const Vector& v);
Vector inner_sandwich(const FiniteAlgebra& a, const Vector& f, const Vector& v);

}  // namespace wmha
