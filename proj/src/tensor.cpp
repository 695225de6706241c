#include "wmha/tensor.hpp"

#include <map>

namespace wmha {

namespace {

using Acc = std::map<std::size_t, Rational>;

SparseVec flush(Acc& acc) {
  SparseVec out;
  for (auto& [k, q] : acc)
    if (!is_zero(q)) out.emplace_back(k, std::move(q));
  return out;
}

}  // namespace

Vector tensor(const Vector& a, const Vector& b) {
  Vector r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!is_zero(b[j])) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

SparseVec tensor3(const Vector& a, const Vector& b, const Vector& c) {
  return to_sparse(tensor(tensor(a, b), c));
}

Vector tmul2(const FiniteAlgebra& a, const FiniteAlgebra& b, const Vector& x, const Vector& y) {
  std::size_t n = a.dim(), m = b.dim();
  if (x.size() != n * m || y.size() != n * m) throw DimensionMismatch("tensor product");
  Vector r(n * m);
  SparseVec xs = to_sparse(x), ys = to_sparse(y);
  for (const auto& [ix, p] : xs) {
    std::size_t i1 = ix / m, i2 = ix % m;
    for (const auto& [iy, q] : ys) {
      std::size_t j1 = iy / m, j2 = iy % m;
      const SparseVec& l = a.product(i1, j1);
      if (l.empty()) continue;
      const SparseVec& rr = b.product(i2, j2);
      if (rr.empty()) continue;
      Rational s = p * q;
      for (const auto& [k1, c1] : l)
        for (const auto& [k2, c2] : rr) r[k1 * m + k2] += s * c1 * c2;
    }
  }
  return r;
}

Vector tmul(const FiniteAlgebra& a, const Vector& x, const Vector& y) { return tmul2(a, a, x, y); }

SparseVec tmul3(const FiniteAlgebra& a, const SparseVec& x, const SparseVec& y) {
  std::size_t n = a.dim();
  Acc acc;
  for (const auto& [ix, p] : x) {
    std::size_t i1 = ix / (n * n), i2 = (ix / n) % n, i3 = ix % n;
    for (const auto& [iy, q] : y) {
      std::size_t j1 = iy / (n * n), j2 = (iy / n) % n, j3 = iy % n;
      const SparseVec& l1 = a.product(i1, j1);
      const SparseVec& l2 = a.product(i2, j2);
      const SparseVec& l3 = a.product(i3, j3);
      if (l1.empty() || l2.empty() || l3.empty()) continue;
      Rational s = p * q;
      for (const auto& [k1, c1] : l1)
        for (const auto& [k2, c2] : l2)
          for (const auto& [k3, c3] : l3) acc[(k1 * n + k2) * n + k3] += s * c1 * c2 * c3;
    }
  }
  return flush(acc);
}

Vector apply_legs(const Matrix& f, const Matrix& g, const Vector& x) {
  std::size_t dv = f.cols(), dw = g.cols();
  if (x.size() != dv * dw) throw DimensionMismatch("apply_legs");
  std::size_t ov = f.rows(), ow = g.rows();
  Vector r(ov * ow);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) {
      const Rational& c = x[i * dw + j];
      if (is_zero(c)) continue;
      for (std::size_t p = 0; p < ov; ++p) {
        if (is_zero(f(p, i))) continue;
        Rational s = c * f(p, i);
        for (std::size_t q = 0; q < ow; ++q)
          if (!is_zero(g(q, j))) r[p * ow + q] += s * g(q, j);
      }
    }
  return r;
}

Vector flip(const Vector& x, std::size_t dv, std::size_t dw) {
  Vector r(x.size());
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) r[j * dv + i] = x[i * dw + j];
  return r;
}

Vector mu(const FiniteAlgebra& a, const Vector& x) {
  std::size_t n = a.dim();
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& c = x[i * n + j];
      if (is_zero(c)) continue;
      for (const auto& [k, q] : a.product(i, j)) r[k] += c * q;
    }
  return r;
}

Vector slice_first(const Vector& phi, const Vector& x, std::size_t dv, std::size_t dw) {
  Vector r(dw);
  for (std::size_t i = 0; i < dv; ++i) {
    if (is_zero(phi[i])) continue;
    for (std::size_t j = 0; j < dw; ++j)
      if (!is_zero(x[i * dw + j])) r[j] += phi[i] * x[i * dw + j];
  }
  return r;
}

Vector slice_second(const Vector& phi, const Vector& x, std::size_t dv, std::size_t dw) {
  Vector r(dv);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j)
      if (!is_zero(x[i * dw + j]) && !is_zero(phi[j])) r[i] += phi[j] * x[i * dw + j];
  return r;
}

Matrix tensor_left_mult(const FiniteAlgebra& a, const Vector& x) {
  std::size_t nn = a.dim() * a.dim();
  Matrix m(nn, nn);
  for (std::size_t k = 0; k < nn; ++k) m.set_column(k, tmul(a, x, unit_vector(nn, k)));
  return m;
}

Matrix tensor_right_mult(const FiniteAlgebra& a, const Vector& x) {
  std::size_t nn = a.dim() * a.dim();
  Matrix m(nn, nn);
  for (std::size_t k = 0; k < nn; ++k) m.set_column(k, tmul(a, unit_vector(nn, k), x));
  return m;
}

SparseVec apply_first_leg(const Matrix& d, const Vector& x, std::size_t n) {
  Acc acc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& c = x[i * n + j];
      if (is_zero(c)) continue;
      for (std::size_t pq = 0; pq < n * n; ++pq)
        if (!is_zero(d(pq, i))) acc[pq * n + j] += c * d(pq, i);
    }
  return flush(acc);
}

SparseVec apply_second_leg(const Matrix& d, const Vector& x, std::size_t n) {
  Acc acc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& c = x[i * n + j];
      if (is_zero(c)) continue;
      for (std::size_t pq = 0; pq < n * n; ++pq)
        if (!is_zero(d(pq, j))) acc[i * n * n + pq] += c * d(pq, j);
    }
  return flush(acc);
}

SparseVec tensor_then_one(const Vector& x, const Vector& one) { return to_sparse(tensor(x, one)); }

SparseVec one_then_tensor(const Vector& one, const Vector& x) { return to_sparse(tensor(one, x)); }

SparseVec sparse_sub(const SparseVec& a, const SparseVec& b) {
  Acc acc;
  for (const auto& [k, q] : a) acc[k] += q;
  for (const auto& [k, q] : b) acc[k] -= q;
  return flush(acc);
}

}  // namespace wmha
