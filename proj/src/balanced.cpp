#include "wmha/balanced.hpp"

#include <stdexcept>

#include "wmha/tensor.hpp"

namespace wmha {

Vector QuantumGraphPair::E_with_legs(const Matrix& first, const Matrix& second) const {
  if (!E) throw std::logic_error("quantum graph pair carries no separability idempotent");
  std::size_t n = A.dim(), dc = C.dim();
  Vector out(n * n);
  for (std::size_t i = 0; i < B.dim(); ++i)
    for (std::size_t j = 0; j < dc; ++j) {
      const Rational& c = (*E)[i * dc + j];
      if (is_zero(c)) continue;
      axpy(out, c, tensor(first.column(i), second.column(j)));
    }
  return out;
}

QuantumGraphPair graph_pair_from_wmha(const Wmha& w, const BaseAlgebraData& d) {
  QuantumGraphPair g{w.algebra, d.B, d.C, d.B_emb, d.C_emb, d.S_B, d.S_C, std::nullopt};
  if (!d.E.empty()) g.E = d.E;
  return g;
}

std::string kind_name(BalancedKind k) {
  switch (k) {
    case BalancedKind::Left: return "l";
    case BalancedKind::Right: return "r";
    case BalancedKind::Source: return "s";
    case BalancedKind::Target: return "t";
    case BalancedKind::SourceUp: return "s-up";
    case BalancedKind::TargetUp: return "t-up";
  }
  return "?";
}

std::vector<Vector> relators(BalancedKind kind, const QuantumGraphPair& g) {
  const FiniteAlgebra& A = g.A;
  std::size_t n = A.dim();
  bool uses_b = kind == BalancedKind::Left || kind == BalancedKind::Source ||
                kind == BalancedKind::SourceUp;
  std::size_t d = uses_b ? g.B.dim() : g.C.dim();
  std::vector<Vector> out;
  out.reserve(d * n * n);
  for (std::size_t k = 0; k < d; ++k) {
    Vector z = uses_b ? g.x(k) : g.y(k);
    Vector sz = uses_b ? g.S_B_of(k) : g.S_C_of(k);
    for (std::size_t i = 0; i < n; ++i) {
      Vector a = A.basis_vector(i);
      for (std::size_t j = 0; j < n; ++j) {
        Vector b = A.basis_vector(j);
        switch (kind) {
          case BalancedKind::Left: out.push_back(tensor(A.mul(z, a), b) - tensor(a, A.mul(sz, b))); break;
          case BalancedKind::Right: out.push_back(tensor(a, A.mul(b, z)) - tensor(A.mul(a, sz), b)); break;
          case BalancedKind::Source: out.push_back(tensor(A.mul(a, z), b) - tensor(a, A.mul(z, b))); break;
          case BalancedKind::Target: out.push_back(tensor(a, A.mul(z, b)) - tensor(A.mul(a, z), b)); break;
          case BalancedKind::SourceUp: out.push_back(tensor(A.mul(z, a), b) - tensor(a, A.mul(b, z))); break;
          case BalancedKind::TargetUp: out.push_back(tensor(a, A.mul(b, z)) - tensor(A.mul(z, a), b)); break;
        }
      }
    }
  }
  return out;
}

BalancedSpace::BalancedSpace(BalancedKind kind, const QuantumGraphPair& g)
    : kind_(kind), rel_(g.A.dim() * g.A.dim()) {
  for (const auto& r : relators(kind, g)) rel_.insert(to_sparse(r));
  free_ = rel_.free_columns();
}

bool BalancedSpace::equivalent(const Vector& v, const Vector& w) const {
  return rel_.contains(v - w);
}

Vector BalancedSpace::project(const Vector& v) const {
  Vector r = rel_.reduce(v);
  Vector q(free_.size());
  for (std::size_t k = 0; k < free_.size(); ++k) q[k] = r[free_[k]];
  return q;
}

Vector BalancedSpace::lift(const Vector& q) const {
  Vector v(ambient());
  for (std::size_t k = 0; k < free_.size(); ++k) v[free_[k]] = q[k];
  return v;
}

Vector outer_sandwich(const FiniteAlgebra& a, const Vector& f, const Vector& v) {
  std::size_t n = a.dim();
  SparseVec fs = to_sparse(f), vs = to_sparse(v);
  Vector out(n * n);
  for (const auto& [ab, val] : vs) {
    std::size_t i = ab / n, j = ab % n;
    for (const auto& [pq, c] : fs) {
      const SparseVec& l = a.product(i, pq / n);
      const SparseVec& r = a.product(pq % n, j);
      Rational s = val * c;
      for (const auto& [k1, c1] : l)
        for (const auto& [k2, c2] : r) out[k1 * n + k2] += s * c1 * c2;
    }
  }
  return out;
}

Vector inner_sandwich(const FiniteAlgebra& a, const Vector& f, const Vector& v) {
  std::size_t n = a.dim();
  SparseVec fs = to_sparse(f), vs = to_sparse(v);
  Vector out(n * n);
  for (const auto& [ab, val] : vs) {
    std::size_t i = ab / n, j = ab % n;
    for (const auto& [pq, c] : fs) {
      const SparseVec& l = a.product(pq / n, i);
      const SparseVec& r = a.product(j, pq % n);
      Rational s = val * c;
      for (const auto& [k1, c1] : l)
        for (const auto& [k2, c2] : r) out[k1 * n + k2] += s * c1 * c2;
    }
  }
  return out;
}

Vector section_idempotent(BalancedKind kind, const QuantumGraphPair& g) {
  switch (kind) {
    case BalancedKind::Left:
    case BalancedKind::Right: return g.E_in_A();
    case BalancedKind::Source: return g.E_with_legs(g.B_emb, g.B_emb * g.S_C);
    case BalancedKind::Target: return g.E_with_legs(g.C_emb * g.S_B, g.C_emb);
    case BalancedKind::SourceUp: {
      auto inv = inverse(g.S_B);
      if (!inv) throw std::invalid_argument("S_B is not invertible");
      return g.E_with_legs(g.B_emb, g.B_emb * *inv);
    }
    case BalancedKind::TargetUp: {
      auto inv = inverse(g.S_C);
      if (!inv) throw std::invalid_argument("S_C is not invertible");
      return g.E_with_legs(g.C_emb * *inv, g.C_emb);
    }
  }
  return {};
}

Vector section_formula(BalancedKind kind, const QuantumGraphPair& g, const Vector& v) {
  Vector f = section_idempotent(kind, g);
  switch (kind) {
    case BalancedKind::Left: return tmul(g.A, f, v);
    case BalancedKind::Right: return tmul(g.A, v, f);
    case BalancedKind::Source:
    case BalancedKind::Target: return outer_sandwich(g.A, f, v);
    case BalancedKind::SourceUp:
    case BalancedKind::TargetUp: return inner_sandwich(g.A, f, v);
  }
  return {};
}

Matrix section_matrix(const BalancedSpace& s, const QuantumGraphPair& g) {
  std::size_t nn = s.ambient();
  Matrix m(nn, s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k)
    m.set_column(k, section_formula(s.kind(), g, unit_vector(nn, s.free_columns()[k])));
  return m;
}

Report check_section(const BalancedSpace& s, const QuantumGraphPair& g) {
  const std::string p = "balanced." + kind_name(s.kind()) + ".";
  std::size_t nn = s.ambient();
  Report r;

  std::string wd;
  auto rels = relators(s.kind(), g);
  for (std::size_t k = 0; k < rels.size() && wd.empty(); ++k)
    if (!is_zero(section_formula(s.kind(), g, rels[k])))
      wd = "section formula does not vanish on relator " + std::to_string(k);
  r.check(p + "section_well_defined", "section formula vanishes on the relations", wd.empty(), wd);

  Matrix theta = section_matrix(s, g);
  std::string ws;
  for (std::size_t k = 0; k < s.dim() && ws.empty(); ++k)
    if (s.project(theta.column(k)) != unit_vector(s.dim(), k))
      ws = "pi(theta(q)) != q at quotient basis " + std::to_string(k);
  r.check(p + "projection_after_section", "pi o theta = id", ws.empty(), ws);

  std::string wi;
  for (std::size_t k = 0; k < s.dim() && wi.empty(); ++k)
    if (theta.apply(s.project(theta.column(k))) != theta.column(k))
      wi = "theta pi not idempotent on column " + std::to_string(k);
  r.check(p + "section_projection_idempotent", "theta o pi is idempotent", wi.empty(), wi);

  std::size_t rk = rank(theta);
  r.check(p + "section_kernel", "ker(theta o pi) = relation space",
          rk == s.dim() && s.dim() + s.relation_dim() == nn,
          "rank theta = " + std::to_string(rk) + ", quotient dimension = " + std::to_string(s.dim()));

  Subspace range(nn), formula(nn);
  for (std::size_t k = 0; k < s.dim(); ++k) range.add(theta.column(k));
  for (std::size_t k = 0; k < nn; ++k) formula.add(section_formula(s.kind(), g, unit_vector(nn, k)));
  r.check(p + "section_range", "range of theta equals the range of the section formula", range == formula,
          "dim range theta = " + std::to_string(range.dim()) + ", dim formula range = " +
              std::to_string(formula.dim()));
  return r;
}

}  // namespace wmha
