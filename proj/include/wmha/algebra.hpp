#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wmha/linalg.hpp"

namespace wmha {

enum class AlgebraErrorKind { NonAssociative, DegenerateProduct, NotIdempotent, BadShape };

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(AlgebraErrorKind kind, std::vector<std::size_t> witness, const std::string& msg)
      : std::runtime_error(msg), kind_(kind), witness_(std::move(witness)) {}
  AlgebraErrorKind kind() const { return kind_; }
  // Basis indices exhibiting the failure.
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  AlgebraErrorKind kind_;
  std::vector<std::size_t> witness_;
};

// Structure constants c[i][j][k] with e_i e_j = sum_k c[i][j][k] e_k.
using StructureConstants = std::vector<std::vector<Vector>>;

// Finite-dimensional algebra presented by structure constants. Products of
// basis elements are stored sparsely.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  StructureConstants structure_constants() const;

  Vector mul(const Vector& a, const Vector& b) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(dim_, i); }
  // Matrices of b -> a b and b -> b a.
  Matrix left_mult(const Vector& a) const;
  Matrix right_mult(const Vector& a) const;

  const std::optional<Vector>& unit() const { return unit_; }
  Vector one() const;

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

  // Builds without validation; used for constructions valid by design.
  // When known_unit is given it is trusted as the unit; otherwise the unit
  // is solved for.
  static FiniteAlgebra trusted(std::vector<std::string> labels, std::vector<SparseVec> table,
                               std::optional<std::optional<Vector>> known_unit = std::nullopt);

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  std::optional<Vector> unit_;
};

// Validates associativity on basis triples, non-degeneracy and idempotency.
FiniteAlgebra make_algebra(std::vector<std::string> labels, const StructureConstants& c);
FiniteAlgebra make_algebra_from_table(std::vector<std::string> labels,
                                      std::vector<SparseVec> table);

// Basis index of e_i (x) f_j is i * dim(B) + j.
FiniteAlgebra tensor_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);
FiniteAlgebra opposite_algebra(const FiniteAlgebra& a);

// A multiplier: the pair of its left and right actions on A.
struct Multiplier {
  Matrix left;
  Matrix right;
  friend bool operator==(const Multiplier&, const Multiplier&) = default;
};

Multiplier multiplier_of(const FiniteAlgebra& a, const Vector& x);
Multiplier compose(const Multiplier& m, const Multiplier& n);
// First violated compatibility constraint, if any.
std::optional<std::string> check_multiplier(const FiniteAlgebra& a, const Multiplier& m);

struct MultiplierAlgebra {
  FiniteAlgebra algebra;
  std::vector<Multiplier> basis;
  // Columns are the M(A)-coordinates of the images of the basis of A.
  Matrix embedding;
  bool embedding_surjective = false;
};
MultiplierAlgebra multiplier_algebra(const FiniteAlgebra& a);

// For finite dimension, local units exist iff a two-sided unit does.
std::optional<Vector> has_local_units(const FiniteAlgebra& a);

// Standard instances.
FiniteAlgebra scalar_algebra();
FiniteAlgebra matrix_algebra(std::size_t n);
FiniteAlgebra function_algebra(std::size_t n);
FiniteAlgebra direct_sum(const FiniteAlgebra& a, const FiniteAlgebra& b);
// Q[x]/(x^2) with basis {1, x}. Valid as an algebra (unital), though not
// semisimple.
FiniteAlgebra dual_numbers();
FiniteAlgebra group_algebra_cyclic(std::size_t n);

// Map checks for square or rectangular matrices between algebras.
bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst, const Matrix& m);
bool is_anti_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst, const Matrix& m);

// Subalgebra spanned by the columns of emb (a basis inside a), with the
// induced structure constants. Throws if the span is not closed.
FiniteAlgebra induced_subalgebra(const FiniteAlgebra& a, const Matrix& emb);

}  // namespace wmha
