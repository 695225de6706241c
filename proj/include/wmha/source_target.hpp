#pragma once

#include <optional>

#include "wmha/algebra.hpp"
#include "wmha/verdict.hpp"
#include "wmha/wmha.hpp"

namespace wmha {

// Base algebras B = range of the source map and C = range of the target map,
// held both embedded in A (columns of B_emb, C_emb) and abstractly.
struct BaseAlgebraData {
  Matrix eps_s;  // n x n
  Matrix eps_t;  // n x n
  Matrix B_emb;  // n x dim B
  Matrix C_emb;  // n x dim C
  FiniteAlgebra B;
  FiniteAlgebra C;
  Matrix S_B;  // C-coordinates of S on B
  Matrix S_C;  // B-coordinates of S on C
  // Coordinates of E in B(x)C, indexed i * dim C + j; empty when E is not
  // in B(x)C.
  Vector E;
  std::optional<Vector> phi_B;
  std::optional<Vector> phi_C;
};

// eps_s(a) = mu(S (x) id) Delta(a), eps_t(a) = mu(id (x) S) Delta(a).
Matrix source_map(const Wmha& w);
Matrix target_map(const Wmha& w);

// Throws std::runtime_error when S does not map B onto C and C onto B.
BaseAlgebraData compute_base_algebras(const Wmha& w);

// Module relations, nice embedding, antipodal maps, membership and
// separability of E, integrals, legs of E.
Report check_base_algebras(const Wmha& w, const BaseAlgebraData& d);

// {x : Delta(x) = E(1 (x) x)} equals B and {y : Delta(y) = (y (x) 1)E}
// equals C.
Report check_characterizations(const Wmha& w, const BaseAlgebraData& d);

// compute_base_algebras followed by both check groups; a failure to extract
// the base data is reported as a failed check.
Report check_source_target(const Wmha& w);

// Column span of m as an echelon basis, returned as columns.
Matrix column_basis(const Matrix& m);

}  // namespace wmha
