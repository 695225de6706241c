#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wmha/rational.hpp"

namespace wmha {

using Vector = std::vector<Rational>;

// Sorted (index, nonzero coefficient) pairs.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
void axpy(Vector& y, const Rational& a, const Vector& x);
Rational dot(const Vector& a, const Vector& b);
SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, std::size_t n);
// Index of the first nonzero entry, or v.size() if v is zero.
std::size_t leading_index(const Vector& v);

// Dense rational matrix, row-major. A LinMap from a space of dimension cols()
// to a space of dimension rows().
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  void set_column(std::size_t j, const Vector& v);

  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using LinMap = Matrix;

// Incrementally maintained reduced row-echelon form with sparse rows. Every
// stored row has a unit pivot and zeros in every other pivot column, so the
// row set is a canonical basis of the span.
class Echelon {
 public:
  explicit Echelon(std::size_t ambient = 0);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true if v was outside the current span.
  bool insert(const Vector& v);
  bool insert(const SparseVec& v);

  // Remainder of v after eliminating every pivot column; zero iff v is in
  // the span. The remainder is a canonical representative of v modulo span.
  Vector reduce(Vector v) const;
  void reduce_in_place(Vector& v) const;
  bool contains(const Vector& v) const;
  // Sparse variants touch only the stored rows hit by v's pivot entries.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // Rows sorted by pivot column, densified.
  std::vector<Vector> basis() const;
  std::vector<std::size_t> pivots() const;
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  std::vector<std::size_t> free_columns() const;

 private:
  void insert_reduced(Vector v);

  std::size_t ambient_;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> row_pivot_;
  std::vector<long> pivot_row_;
};

// A subspace of Q^n held in canonical echelon form: equal subspaces have
// identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ech_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vector>& gens);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ech_.ambient(); }
  std::size_t dim() const { return ech_.rank(); }
  std::vector<Vector> basis() const { return ech_.basis(); }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  void add(const Vector& v) { ech_.insert(v); }
  const Echelon& echelon() const { return ech_; }

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Echelon ech_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
// Dimension of the quotient ambient/sub.
std::size_t quotient_dim(const Subspace& sub);

std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

struct LinearSolution {
  Vector particular;
  std::vector<Vector> kernel_basis;
};
// Solves m x = b; nullopt when inconsistent.
std::optional<LinearSolution> solve(const Matrix& m, const Vector& b);

// Coordinates of v in the linearly independent columns of basis; nullopt
// when v is outside their span.
std::optional<Vector> coordinates(const Matrix& basis, const Vector& v);

std::string format_vector(const Vector& v);

}  // namespace wmha
