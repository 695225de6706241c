#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "wmha/algebra.hpp"
#include "wmha/verdict.hpp"

namespace wmha {

// A finite-dimensional weak multiplier Hopf algebra. A is unital, so
// M(A) = A, M(A(x)A) = A(x)A and the coproduct is an honest map A -> A(x)A.
struct Wmha {
  FiniteAlgebra algebra;
  // n^2 x n; column i is Delta(e_i).
  Matrix delta;
  // Counit as a row of values on the basis.
  Vector counit;
  Matrix antipode;
  // Optional supplied canonical idempotent; when present it must equal Delta(1).
  std::optional<Vector> idempotent;

  std::size_t dim() const { return algebra.dim(); }
  Vector coproduct(const Vector& a) const { return delta.apply(a); }
};

class AntipodeNotBijective : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CanonicalMaps {
  std::array<Matrix, 4> T;
  std::array<Matrix, 4> R;
  std::array<Vector, 4> F;
  Vector E;
  Matrix S_inv;
};

// Throws AntipodeNotBijective.
CanonicalMaps build_canonical_maps(const Wmha& w);

// E = Delta(1).
Vector compute_E(const Wmha& w);

// Same coproduct on the opposite algebra, with antipode S^{-1}.
Wmha opposite_wmha(const Wmha& w);

// Individual check groups.
Report check_coproduct(const Wmha& w);
Report check_counit(const Wmha& w);
Report check_counit_uniqueness(const Wmha& w);
Report check_E_identities(const Wmha& w);
Report check_ranges(const Wmha& w, const CanonicalMaps& m);
Report check_generalized_inverses(const Wmha& w, const CanonicalMaps& m);
Report check_kernels(const Wmha& w, const CanonicalMaps& m);
Report check_antipode_identities(const Wmha& w, const CanonicalMaps& m);

// Every check above, in a fixed order. Conditions of the full axiom list
// that are not implemented appear as skipped-not-applicable entries.
Report check_wmha(const Wmha& w);

// (a (x) 1) X (1 (x) b) and (1 (x) b) X (a (x) 1) for X in A(x)A.
Vector sandwich_left_right(const FiniteAlgebra& a, const Vector& x, const Vector& left,
                           const Vector& right);
Vector sandwich_right_left(const FiniteAlgebra& a, const Vector& x, const Vector& left,
                           const Vector& right);

std::string format_element(const FiniteAlgebra& a, const Vector& v);
std::string format_tensor(const FiniteAlgebra& a, const Vector& x);

}  // namespace wmha
