#include "wmha/examples.hpp"

#include <stdexcept>

#include "wmha/tensor.hpp"

namespace wmha {

namespace {

FiniteAlgebra product_algebra(const FiniteAlgebra& c, const FiniteAlgebra& b) {
  FiniteAlgebra t = tensor_algebra(c, b);
  std::vector<std::string> labels;
  for (const auto& lc : c.labels())
    for (const auto& lb : b.labels()) labels.push_back(lc + "." + lb);
  std::vector<SparseVec> table;
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) table.push_back(t.product(i, j));
  return FiniteAlgebra::trusted(std::move(labels), std::move(table), std::optional<std::optional<Vector>>(t.unit()));
}

Vector algebra_inverse(const FiniteAlgebra& a, const Vector& u) {
  auto sol = solve(a.left_mult(u), a.one());
  if (!sol || !sol->kernel_basis.empty()) throw TwistConditionFailed("element is not invertible");
  Vector inv = sol->particular;
  if (a.mul(inv, u) != a.one()) throw TwistConditionFailed("element is not invertible");
  return inv;
}

Matrix embedding_of(std::size_t outer, std::size_t inner, bool c_leg, const FiniteAlgebra& other) {
  Vector one = other.one();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < (c_leg ? outer : inner); ++k)
    cols.push_back(c_leg ? tensor(unit_vector(outer, k), one) : tensor(one, unit_vector(inner, k)));
  return Matrix::from_columns(outer * inner, cols);
}

}  // namespace

Matrix separability_wmha_B_embedding(const SeparabilityIdempotent& sep) {
  return embedding_of(sep.C.dim(), sep.B.dim(), false, sep.C);
}

Matrix separability_wmha_C_embedding(const SeparabilityIdempotent& sep) {
  return embedding_of(sep.C.dim(), sep.B.dim(), true, sep.B);
}

Wmha separability_wmha(const SeparabilityIdempotent& sep) {
  const FiniteAlgebra& B = sep.B;
  const FiniteAlgebra& C = sep.C;
  std::size_t db = B.dim(), dc = C.dim(), n = db * dc;
  Wmha w;
  w.algebra = product_algebra(C, B);
  w.delta = Matrix(n * n, n);
  w.antipode = Matrix(n, n);
  w.counit = Vector(n);
  for (std::size_t c = 0; c < dc; ++c)
    for (std::size_t b = 0; b < db; ++b) {
      std::size_t col = c * db + b;
      for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < dc; ++j) {
          const Rational& e = sep.E[i * dc + j];
          if (is_zero(e)) continue;
          w.delta(((c * db + i) * n) + (j * db + b), col) += e;
        }
      w.antipode.set_column(col, tensor(sep.S_B.column(b), sep.S_C.column(c)));
      w.counit[col] = dot(sep.phi_C, C.mul(C.basis_vector(c), sep.S_B.column(b)));
    }
  Vector e(n * n);
  Vector one_b = B.one(), one_c = C.one();
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < dc; ++j)
      if (!is_zero(sep.E[i * dc + j]))
        axpy(e, sep.E[i * dc + j], tensor(tensor(one_c, B.basis_vector(i)), tensor(C.basis_vector(j), one_b)));
  w.idempotent = e;
  return w;
}

Algebroid base_twisted_algebroid(const FiniteAlgebra& b, const Matrix& sigma) {
  FiniteAlgebra c = opposite_algebra(b);
  std::size_t d = b.dim(), n = d * d;
  auto sigma_inv = inverse(sigma);
  if (!sigma_inv) throw std::invalid_argument("sigma is not invertible");
  Algebroid alg;
  QuantumGraphPair& g = alg.graphs;
  g.A = product_algebra(c, b);
  g.B = b;
  g.C = c;
  g.B_emb = embedding_of(d, d, false, c);
  g.C_emb = embedding_of(d, d, true, b);
  g.S_B = Matrix::identity(d);
  g.S_C = *sigma_inv;
  Matrix s_b_inv = Matrix::identity(d);
  Matrix s_c_inv = sigma;
  alg.delta_B = Matrix(n * n, n);
  alg.delta_C = Matrix(n * n, n);
  alg.eps_B = Matrix(d, n);
  alg.eps_C = Matrix(d, n);
  alg.antipode = Matrix(n, n);
  Vector one_b = b.one(), one_c = c.one();
  for (std::size_t yc = 0; yc < d; ++yc)
    for (std::size_t xb = 0; xb < d; ++xb) {
      std::size_t col = yc * d + xb;
      Vector rep = tensor(tensor(c.basis_vector(yc), one_b), tensor(one_c, b.basis_vector(xb)));
      alg.delta_B.set_column(col, rep);
      alg.delta_C.set_column(col, rep);
      alg.eps_B.set_column(col, b.mul(b.basis_vector(xb), s_b_inv.column(yc)));
      alg.eps_C.set_column(col, c.mul(s_c_inv.column(xb), c.basis_vector(yc)));
      alg.antipode.set_column(col, tensor(g.S_B.column(xb), g.S_C.column(yc)));
    }
  return alg;
}

std::string expected_stage_name(ExpectedStage s) {
  switch (s) {
    case ExpectedStage::Success: return "success";
    case ExpectedStage::NotSeparableFrobenius: return "NotSeparableFrobenius";
    case ExpectedStage::ModularAutomorphismMismatch: return "ModularAutomorphismMismatch";
    case ExpectedStage::CounitsDiffer: return "CounitsDiffer";
  }
  return "?";
}

Matrix inner_automorphism(const FiniteAlgebra& b, const Vector& g) {
  Vector g_inv = algebra_inverse(b, g);
  Matrix m(b.dim(), b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) m.set_column(i, b.mul(b.mul(g, b.basis_vector(i)), g_inv));
  return m;
}

ObstructionScenario obstruction_scenario(char which) {
  switch (which) {
    case '1':
      return {"i", base_twisted_algebroid(dual_numbers(), Matrix::identity(2)), ExpectedStage::NotSeparableFrobenius};
    case '2': {
      Matrix s = Matrix::identity(2);
      s(1, 1) = 2;
      return {"ii", base_twisted_algebroid(dual_numbers(), s), ExpectedStage::NotSeparableFrobenius};
    }
    case '3': {
      Matrix swap(2, 2);
      swap(0, 1) = 1;
      swap(1, 0) = 1;
      return {"iii", base_twisted_algebroid(function_algebra(2), swap), ExpectedStage::ModularAutomorphismMismatch};
    }
    case '4': {
      FiniteAlgebra m2 = matrix_algebra(2);
      return {"iv", base_twisted_algebroid(m2, inner_automorphism(m2, Vector{1, 0, 0, 2})), ExpectedStage::Success};
    }
  }
  throw std::invalid_argument(std::string("unknown scenario ") + which);
}

Wmha twist_wmha(const Wmha& w, const Matrix& B_emb, const TwistData& t) {
  const FiniteAlgebra& A = w.algebra;
  Vector U = B_emb.apply(t.u), V = B_emb.apply(t.v);
  Vector U_inv = algebra_inverse(A, U), V_inv = algebra_inverse(A, V);
  Vector one = A.one();
  Vector E = compute_E(w);
  if (tmul(A, tmul(A, E, tensor(A.mul(V, U), one)), E) != E)
    throw TwistConditionFailed("E(vu(x)1)E != E");
  std::size_t n = A.dim();
  Vector u1 = tensor(U, one), v1 = tensor(V, one);
  Wmha out;
  out.algebra = A;
  out.delta = Matrix(n * n, n);
  out.antipode = Matrix(n, n);
  out.counit = Vector(n);
  for (std::size_t a = 0; a < n; ++a) {
    Vector ea = A.basis_vector(a);
    out.delta.set_column(a, tmul(A, tmul(A, u1, w.delta.column(a)), v1));
    out.counit[a] = dot(w.counit, A.mul(A.mul(U_inv, ea), V_inv));
    out.antipode.set_column(a, A.mul(A.mul(U, w.antipode.apply(A.mul(A.mul(V, ea), V_inv))), U_inv));
  }
  return out;
}

std::optional<TwistData> search_twist(const Wmha& w, const Matrix& B_emb, int bound) {
  const FiniteAlgebra& A = w.algebra;
  std::size_t d = B_emb.cols(), n = A.dim();
  Vector one = A.one();
  Vector E = compute_E(w);
  std::vector<Rational> values;
  for (int k = -bound; k <= bound; ++k) values.emplace_back(k);
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= values.size();
  for (std::size_t code = 0; code < total; ++code) {
    Vector u(d);
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i) {
      u[i] = values[c % values.size()];
      c /= values.size();
    }
    Vector U = B_emb.apply(u);
    try {
      algebra_inverse(A, U);
    } catch (const TwistConditionFailed&) {
      continue;
    }
    // E(vu(x)1)E = E is linear in v.
    Matrix m(n * n, d);
    for (std::size_t i = 0; i < d; ++i)
      m.set_column(i, tmul(A, tmul(A, E, tensor(A.mul(B_emb.column(i), U), one)), E));
    auto sol = solve(m, E);
    if (!sol) continue;
    std::vector<Vector> candidates{sol->particular};
    for (const auto& k : sol->kernel_basis) {
      candidates.push_back(sol->particular + k);
      candidates.push_back(sol->particular - k);
    }
    for (const auto& v : candidates) {
      if (A.mul(B_emb.apply(v), U) == one) continue;
      TwistData t{u, v};
      try {
        Wmha tw = twist_wmha(w, B_emb, t);
        if (tw.delta != w.delta) return t;
      } catch (const TwistConditionFailed&) {
      }
    }
  }
  return std::nullopt;
}

Algebroid mixed_algebroid(const Wmha& w, const Matrix& B_emb, const TwistData& t) {
  Wmha tw = twist_wmha(w, B_emb, t);
  BaseAlgebraData d = compute_base_algebras(w);
  BaseAlgebraData dt = compute_base_algebras(tw);
  if (!(dt.B_emb == d.B_emb) || !(dt.C_emb == d.C_emb))
    throw std::runtime_error("twist changed the base algebras");
  Algebroid alg;
  alg.graphs = QuantumGraphPair{w.algebra, d.B, d.C, d.B_emb, d.C_emb, d.S_B, dt.S_C, std::nullopt};
  const FiniteAlgebra& A = w.algebra;
  std::size_t n = A.dim();
  BalancedSpace l(BalancedKind::Left, alg.graphs), r(BalancedKind::Right, alg.graphs);
  alg.delta_B = Matrix(n * n, n);
  alg.delta_C = Matrix(n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    alg.delta_B.set_column(a, l.canonical(w.delta.column(a)));
    alg.delta_C.set_column(a, r.canonical(tw.delta.column(a)));
  }
  Matrix s_inv = *inverse(w.antipode), st_inv = *inverse(tw.antipode);
  alg.eps_B = Matrix(d.B.dim(), n);
  alg.eps_C = Matrix(d.C.dim(), n);
  for (std::size_t a = 0; a < n; ++a) {
    auto b = coordinates(d.B_emb, s_inv.apply(d.eps_t.column(a)));
    auto c = coordinates(d.C_emb, st_inv.apply(dt.eps_s.column(a)));
    if (!b || !c) throw std::runtime_error("counital map leaves the base algebra");
    alg.eps_B.set_column(a, *b);
    alg.eps_C.set_column(a, *c);
  }
  Vector U = B_emb.apply(t.u), U_inv = algebra_inverse(A, U);
  alg.antipode = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    alg.antipode.set_column(a, A.mul(A.mul(U, w.antipode.apply(A.basis_vector(a))), U_inv));
  return alg;
}

Vector weighted_trace(std::size_t n, const std::vector<Rational>& diag) {
  Vector phi(n * n);
  for (std::size_t i = 0; i < n; ++i) phi[i * n + i] = diag[i];
  return phi;
}

namespace {
SeparabilityIdempotent m2_separability(const Vector& phi) {
  FiniteAlgebra m2 = matrix_algebra(2);
  auto res = build_E_from_functional(m2, phi, opposite_algebra(m2), Matrix::identity(4));
  auto* sep = std::get_if<SeparabilityIdempotent>(&res);
  if (!sep) throw std::logic_error("functional on M_2 does not give an idempotent");
  return *sep;
}
}  // namespace

SeparabilityIdempotent trace_separability_M2() { return m2_separability(weighted_trace(2, {2, 2})); }

SeparabilityIdempotent weighted_separability_M2() {
  return m2_separability(weighted_trace(2, {Rational(3, 2), 3}));
}

TwistData unit_weight_twist(std::size_t units) {
  TwistData t{Vector(units), Vector(units)};
  for (std::size_t k = 0; k < units; ++k) {
    t.u[k] = Rational(static_cast<long>(k + 1));
    t.v[k] = Rational(1, static_cast<long>(k + 1));
  }
  return t;
}

TwistData frozen_twist_M2() { return {Vector{1, 1, 0, 1}, Vector{1, Rational(-1, 2), 0, 1}}; }

}  // namespace wmha
