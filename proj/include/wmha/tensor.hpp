#pragma once

#include "wmha/algebra.hpp"
#include "wmha/linalg.hpp"

namespace wmha {

// Elements of A(x)A are dense vectors indexed i * n + j; elements of A(x)A(x)A
// are sparse vectors indexed (i * n + j) * n + k.

Vector tensor(const Vector& a, const Vector& b);
SparseVec tensor3(const Vector& a, const Vector& b, const Vector& c);

// Componentwise product in A(x)A, and in A(x)B for two algebras.
Vector tmul(const FiniteAlgebra& a, const Vector& x, const Vector& y);
Vector tmul2(const FiniteAlgebra& a, const FiniteAlgebra& b, const Vector& x, const Vector& y);
SparseVec tmul3(const FiniteAlgebra& a, const SparseVec& x, const SparseVec& y);

// (f (x) g) applied to x in V(x)W, with f: V -> V', g: W -> W'.
Vector apply_legs(const Matrix& f, const Matrix& g, const Vector& x);
// Flip of V(x)W into W(x)V.
Vector flip(const Vector& x, std::size_t dv, std::size_t dw);
// Multiplication A(x)A -> A.
Vector mu(const FiniteAlgebra& a, const Vector& x);
// (phi (x) id) and (id (x) phi) for a functional phi given as a row vector.
Vector slice_first(const Vector& phi, const Vector& x, std::size_t dv, std::size_t dw);
Vector slice_second(const Vector& phi, const Vector& x, std::size_t dv, std::size_t dw);

// Matrices of y -> x y and y -> y x on A(x)A.
Matrix tensor_left_mult(const FiniteAlgebra& a, const Vector& x);
Matrix tensor_right_mult(const FiniteAlgebra& a, const Vector& x);

// d is the n^2 x n matrix of a coproduct-like map A -> A(x)A.
SparseVec apply_first_leg(const Matrix& d, const Vector& x, std::size_t n);
SparseVec apply_second_leg(const Matrix& d, const Vector& x, std::size_t n);
// x (x) 1 and 1 (x) x in A(x)A(x)A.
SparseVec tensor_then_one(const Vector& x, const Vector& one);
SparseVec one_then_tensor(const Vector& one, const Vector& x);

SparseVec sparse_sub(const SparseVec& a, const SparseVec& b);

}  // namespace wmha
