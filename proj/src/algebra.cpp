#include "wmha/algebra.hpp"

#include <algorithm>
#include <map>

namespace wmha {

namespace {

void add_scaled(std::map<std::size_t, Rational>& acc, const SparseVec& v, const Rational& s) {
  for (const auto& [k, q] : v) acc[k] += s * q;
}

SparseVec from_map(std::map<std::size_t, Rational>& acc) {
  SparseVec out;
  for (auto& [k, q] : acc) {
    if (!is_zero(q)) out.emplace_back(k, std::move(q));
  }
  return out;
}

// (sum_i a_i e_i)(e_j) for sparse a.
SparseVec mul_sparse(const FiniteAlgebra& alg, const SparseVec& a, const SparseVec& b) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, p] : a)
    for (const auto& [j, q] : b) add_scaled(acc, alg.product(i, j), p * q);
  return from_map(acc);
}

void validate(const FiniteAlgebra& alg) {
  std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& ij = alg.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec ek{{k, Rational(1)}};
        SparseVec lhs = mul_sparse(alg, ij, ek);
        SparseVec rhs = mul_sparse(alg, SparseVec{{i, Rational(1)}}, alg.product(j, k));
        if (lhs != rhs) {
          throw AlgebraError(AlgebraErrorKind::NonAssociative, {i, j, k},
                             "associativity fails on basis triple (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  // a A = 0 and A a = 0 each force a = 0.
  for (int side = 0; side < 2; ++side) {
    Echelon rows(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < n; ++t) {
        Vector r(n);
        for (std::size_t i = 0; i < n; ++i) {
          const SparseVec& p = side == 0 ? alg.product(i, j) : alg.product(j, i);
          for (const auto& [k, q] : p)
            if (k == t) r[i] = q;
        }
        rows.insert(r);
      }
    }
    auto free = rows.free_columns();
    if (!free.empty()) {
      throw AlgebraError(AlgebraErrorKind::DegenerateProduct, {free.front()},
                         std::string("product is degenerate: a nonzero element involving basis ") +
                             std::to_string(free.front()) + " annihilates A from the " +
                             (side == 0 ? "right" : "left"));
    }
  }
  Echelon span(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) span.insert(alg.product(i, j));
  auto free = span.free_columns();
  if (!free.empty()) {
    throw AlgebraError(AlgebraErrorKind::NotIdempotent, {free.front()},
                       "A*A misses basis direction " + std::to_string(free.front()));
  }
}

}  // namespace

FiniteAlgebra FiniteAlgebra::trusted(std::vector<std::string> labels,
                                     std::vector<SparseVec> table,
                                     std::optional<std::optional<Vector>> known_unit) {
  FiniteAlgebra a;
  a.dim_ = labels.size();
  if (table.size() != a.dim_ * a.dim_) {
    throw AlgebraError(AlgebraErrorKind::BadShape, {}, "product table has wrong size");
  }
  a.labels_ = std::move(labels);
  a.table_ = std::move(table);
  a.unit_ = known_unit ? *known_unit : has_local_units(a);
  return a;
}

StructureConstants FiniteAlgebra::structure_constants() const {
  StructureConstants c(dim_, std::vector<Vector>(dim_, Vector(dim_)));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, q] : product(i, j)) c[i][j][k] = q;
  return c;
}

Vector FiniteAlgebra::mul(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionMismatch("algebra product");
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(b[j])) continue;
      Rational s = a[i] * b[j];
      for (const auto& [k, q] : product(i, j)) r[k] += s * q;
    }
  }
  return r;
}

Matrix FiniteAlgebra::left_mult(const Vector& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, mul(a, basis_vector(j)));
  return m;
}

Matrix FiniteAlgebra::right_mult(const Vector& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, mul(basis_vector(j), a));
  return m;
}

Vector FiniteAlgebra::one() const {
  if (!unit_) throw std::logic_error("algebra has no unit");
  return *unit_;
}

FiniteAlgebra make_algebra_from_table(std::vector<std::string> labels,
                                      std::vector<SparseVec> table) {
  FiniteAlgebra a = FiniteAlgebra::trusted(std::move(labels), std::move(table));
  validate(a);
  return a;
}

FiniteAlgebra make_algebra(std::vector<std::string> labels, const StructureConstants& c) {
  std::size_t n = labels.size();
  if (c.size() != n) throw AlgebraError(AlgebraErrorKind::BadShape, {}, "structure constants: outer size");
  std::vector<SparseVec> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) throw AlgebraError(AlgebraErrorKind::BadShape, {i}, "structure constants: row size");
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i][j].size() != n) {
        throw AlgebraError(AlgebraErrorKind::BadShape, {i, j}, "structure constants: entry size");
      }
      table.push_back(to_sparse(c[i][j]));
    }
  }
  return make_algebra_from_table(std::move(labels), std::move(table));
}

FiniteAlgebra tensor_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::size_t n = a.dim(), m = b.dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) labels.push_back(a.labels()[i] + "(x)" + b.labels()[j]);
  std::vector<SparseVec> table(n * m * n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          SparseVec& out = table[(i * m + j) * n * m + (k * m + l)];
          for (const auto& [p, x] : a.product(i, k))
            for (const auto& [q, y] : b.product(j, l)) out.emplace_back(p * m + q, x * y);
          std::sort(out.begin(), out.end());
        }
  std::optional<Vector> unit;
  if (a.unit() && b.unit()) {
    Vector u(n * m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) u[i * m + j] = (*a.unit())[i] * (*b.unit())[j];
    unit = std::move(u);
  }
  return FiniteAlgebra::trusted(std::move(labels), std::move(table), unit);
}

FiniteAlgebra opposite_algebra(const FiniteAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = a.product(j, i);
  return FiniteAlgebra::trusted(a.labels(), std::move(table), a.unit());
}

Multiplier multiplier_of(const FiniteAlgebra& a, const Vector& x) {
  return {a.left_mult(x), a.right_mult(x)};
}

Multiplier compose(const Multiplier& m, const Multiplier& n) {
  return {m.left * n.left, n.right * m.right};
}

std::optional<std::string> check_multiplier(const FiniteAlgebra& a, const Multiplier& m) {
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector ei = a.basis_vector(i), ej = a.basis_vector(j);
      Vector ab = a.mul(ei, ej);
      std::string at = " at basis (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (m.left.apply(ab) != a.mul(m.left.apply(ei), ej)) return "m(ab) != m(a)b" + at;
      if (m.right.apply(ab) != a.mul(ei, m.right.apply(ej))) return "(ab)m != a(bm)" + at;
      if (a.mul(m.right.apply(ei), ej) != a.mul(ei, m.left.apply(ej))) return "(am)b != a(mb)" + at;
    }
  }
  return std::nullopt;
}

MultiplierAlgebra multiplier_algebra(const FiniteAlgebra& a) {
  std::size_t n = a.dim();
  std::size_t nn = n * n;
  auto L = [n](std::size_t r, std::size_t c) { return r * n + c; };
  auto R = [n, nn](std::size_t r, std::size_t c) { return nn + r * n + c; };
  auto c = a.structure_constants();
  Echelon eqs(2 * nn);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < n; ++t) {
        std::map<std::size_t, Rational> e1, e2, e3;
        for (std::size_t k = 0; k < n; ++k) {
          if (!is_zero(c[i][j][k])) {
            e1[L(t, k)] += c[i][j][k];
            e2[R(t, k)] += c[i][j][k];
          }
        }
        for (std::size_t r = 0; r < n; ++r) {
          if (!is_zero(c[r][j][t])) {
            e1[L(r, i)] -= c[r][j][t];
            e3[R(r, i)] += c[r][j][t];
          }
          if (!is_zero(c[i][r][t])) {
            e2[R(r, j)] -= c[i][r][t];
            e3[L(r, j)] -= c[i][r][t];
          }
        }
        eqs.insert(from_map(e1));
        eqs.insert(from_map(e2));
        eqs.insert(from_map(e3));
      }
    }
  }
  auto free = eqs.free_columns();
  auto rows = eqs.basis();
  auto piv = eqs.pivots();
  MultiplierAlgebra out;
  std::vector<Vector> flat;
  for (std::size_t f : free) {
    Vector v(2 * nn);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][f];
    Multiplier m{Matrix(n, n), Matrix(n, n)};
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) {
        m.left(r, col) = v[L(r, col)];
        m.right(r, col) = v[R(r, col)];
      }
    out.basis.push_back(std::move(m));
    flat.push_back(std::move(v));
  }
  auto coords = [&](const Multiplier& m) {
    Vector v(free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      std::size_t f = free[k];
      v[k] = f < nn ? m.left(f / n, f % n) : m.right((f - nn) / n, (f - nn) % n);
    }
    return v;
  };
  std::size_t d = free.size();
  std::vector<std::string> labels;
  std::vector<SparseVec> table(d * d);
  for (std::size_t p = 0; p < d; ++p) {
    labels.push_back("m" + std::to_string(p));
    for (std::size_t q = 0; q < d; ++q) table[p * d + q] = to_sparse(coords(compose(out.basis[p], out.basis[q])));
  }
  out.algebra = FiniteAlgebra::trusted(std::move(labels), std::move(table));
  out.embedding = Matrix(d, n);
  for (std::size_t i = 0; i < n; ++i) out.embedding.set_column(i, coords(multiplier_of(a, a.basis_vector(i))));
  out.embedding_surjective = rank(out.embedding) == d;
  return out;
}

std::optional<Vector> has_local_units(const FiniteAlgebra& a) {
  std::size_t n = a.dim();
  if (n == 0) return std::nullopt;
  // Unknown e; equations e e_i = e_i and e_i e = e_i.
  Matrix m(2 * n * n, n);
  Vector rhs(2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& [t, q] : a.product(k, i)) m(i * n + t, k) += q;
      for (const auto& [t, q] : a.product(i, k)) m(n * n + i * n + t, k) += q;
    }
    rhs[i * n + i] = 1;
    rhs[n * n + i * n + i] = 1;
  }
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  return sol->particular;
}

FiniteAlgebra scalar_algebra() { return FiniteAlgebra::trusted({"1"}, {SparseVec{{0, Rational(1)}}}); }

FiniteAlgebra matrix_algebra(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<SparseVec> table(n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (j == k) table[(i * n + j) * n * n + (k * n + l)] = {{i * n + l, Rational(1)}};
  return FiniteAlgebra::trusted(std::move(labels), std::move(table));
}

FiniteAlgebra function_algebra(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("d" + std::to_string(i + 1));
    table[i * n + i] = {{i, Rational(1)}};
  }
  return FiniteAlgebra::trusted(std::move(labels), std::move(table));
}

FiniteAlgebra direct_sum(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::size_t n = a.dim(), m = b.dim(), d = n + m;
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  std::vector<SparseVec> table(d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * d + j] = a.product(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      SparseVec p = b.product(i, j);
      for (auto& e : p) e.first += n;
      table[(n + i) * d + (n + j)] = std::move(p);
    }
  return FiniteAlgebra::trusted(std::move(labels), std::move(table));
}

FiniteAlgebra dual_numbers() {
  return FiniteAlgebra::trusted({"1", "x"}, {SparseVec{{0, Rational(1)}}, SparseVec{{1, Rational(1)}},
                                             SparseVec{{1, Rational(1)}}, SparseVec{}});
}

FiniteAlgebra group_algebra_cyclic(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("g" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = {{(i + j) % n, Rational(1)}};
  }
  return FiniteAlgebra::trusted(std::move(labels), std::move(table));
}

bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst, const Matrix& m) {
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      Vector lhs = m.apply(src.mul(src.basis_vector(i), src.basis_vector(j)));
      if (lhs != dst.mul(m.column(i), m.column(j))) return false;
    }
  return true;
}

bool is_anti_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst, const Matrix& m) {
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      Vector lhs = m.apply(src.mul(src.basis_vector(i), src.basis_vector(j)));
      if (lhs != dst.mul(m.column(j), m.column(i))) return false;
    }
  return true;
}

FiniteAlgebra induced_subalgebra(const FiniteAlgebra& a, const Matrix& emb) {
  std::size_t d = emb.cols();
  std::vector<std::string> labels;
  std::vector<SparseVec> table(d * d);
  for (std::size_t p = 0; p < d; ++p) {
    labels.push_back("b" + std::to_string(p));
    for (std::size_t q = 0; q < d; ++q) {
      auto sol = solve(emb, a.mul(emb.column(p), emb.column(q)));
      if (!sol) throw std::invalid_argument("subspace is not closed under the product");
      table[p * d + q] = to_sparse(sol->particular);
    }
  }
  return FiniteAlgebra::trusted(std::move(labels), std::move(table));
}

}  // namespace wmha
