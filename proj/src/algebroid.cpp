#include "wmha/algebroid.hpp"

#include <functional>
#include <stdexcept>

#include "wmha/tensor.hpp"

namespace wmha {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

using PairMap = std::function<Vector(std::size_t, std::size_t)>;

// Quotient of A(x)A(x)A by (Rel_12 (x) A) + (A (x) Rel_23) where Rel_12 and
// Rel_23 are balanced relation spaces.
Echelon triple_relations(const BalancedSpace& first_pair, const BalancedSpace& second_pair,
                         std::size_t n) {
  Echelon e(n * n * n);
  for (const auto& rel : first_pair.relations().basis()) {
    SparseVec rs = to_sparse(rel);
    for (std::size_t r = 0; r < n; ++r) {
      SparseVec v;
      for (const auto& [pq, c] : rs) v.emplace_back(pq * n + r, c);
      e.insert(v);
    }
  }
  for (const auto& rel : second_pair.relations().basis()) {
    SparseVec rs = to_sparse(rel);
    for (std::size_t p = 0; p < n; ++p) {
      SparseVec v;
      for (const auto& [qr, c] : rs) v.emplace_back(p * n * n + qr, c);
      e.insert(v);
    }
  }
  return e;
}

// Matrix of the quotient map X -> Y induced by f on basis pairs, with the
// defect witness when f does not vanish on the relations of X.
struct InducedMap {
  Matrix matrix;
  std::string defect;
};

InducedMap induced_map(const BalancedSpace& from, const BalancedSpace& to, const PairMap& f,
                       std::size_t n) {
  std::vector<Vector> images(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) images[a * n + b] = f(a, b);
  auto apply_pre = [&](const Vector& v) {
    Vector out(n * n);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!is_zero(v[k])) axpy(out, v[k], images[k]);
    return out;
  };
  InducedMap m;
  for (const auto& rel : from.relations().basis())
    if (!is_zero(to.project(apply_pre(rel)))) {
      m.defect = "does not vanish on relator " + format_vector(rel);
      break;
    }
  m.matrix = Matrix(to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k)
    m.matrix.set_column(k, to.project(images[from.free_columns()[k]]));
  return m;
}

Vector right_one(const FiniteAlgebra& A, std::size_t b) { return tensor(A.one(), A.basis_vector(b)); }
Vector left_one(const FiniteAlgebra& A, std::size_t a) { return tensor(A.basis_vector(a), A.one()); }

std::string bijectivity_witness(const Matrix& m) {
  if (m.rows() != m.cols())
    return "not square: " + idx(m.rows()) + " x " + idx(m.cols());
  Subspace k = kernel(m);
  if (k.dim() > 0) return "kernel vector " + format_vector(k.basis().front());
  return {};
}

}  // namespace

Vector embed_B(const Algebroid& alg, const Vector& x) { return alg.graphs.B_emb.apply(x); }
Vector embed_C(const Algebroid& alg, const Vector& y) { return alg.graphs.C_emb.apply(y); }

BalancedSpaces::BalancedSpaces(const QuantumGraphPair& g)
    : l(BalancedKind::Left, g),
      r(BalancedKind::Right, g),
      s(BalancedKind::Source, g),
      t(BalancedKind::Target, g),
      s_up(BalancedKind::SourceUp, g),
      t_up(BalancedKind::TargetUp, g) {}

const BalancedSpace& BalancedSpaces::get(BalancedKind k) const {
  switch (k) {
    case BalancedKind::Left: return l;
    case BalancedKind::Right: return r;
    case BalancedKind::Source: return s;
    case BalancedKind::Target: return t;
    case BalancedKind::SourceUp: return s_up;
    case BalancedKind::TargetUp: return t_up;
  }
  return l;
}

Report check_quantum_graphs(const Algebroid& alg) {
  const QuantumGraphPair& g = alg.graphs;
  const FiniteAlgebra& A = g.A;
  std::size_t n = A.dim(), db = g.B.dim(), dc = g.C.dim();
  Report r;
  r.check("graph.A_unital", "A has a unit", A.unit().has_value(), "no two-sided unit");
  r.check("graph.B_subalgebra", "B embeds as a subalgebra", is_homomorphism(g.B, A, g.B_emb) && rank(g.B_emb) == db,
          "embedding of B is not an injective homomorphism");
  r.check("graph.C_subalgebra", "C embeds as a subalgebra", is_homomorphism(g.C, A, g.C_emb) && rank(g.C_emb) == dc,
          "embedding of C is not an injective homomorphism");

  std::string wc;
  for (std::size_t i = 0; i < db && wc.empty(); ++i)
    for (std::size_t j = 0; j < dc && wc.empty(); ++j)
      if (A.mul(g.x(i), g.y(j)) != A.mul(g.y(j), g.x(i))) wc = "b" + idx(i) + " and c" + idx(j) + " do not commute";
  r.check("graph.commute", "B and C commute", wc.empty(), wc);

  auto span_dim = [&](const Matrix& emb, bool left) {
    Subspace s(n);
    for (std::size_t i = 0; i < emb.cols(); ++i)
      for (std::size_t k = 0; k < n; ++k)
        s.add(left ? A.mul(emb.column(i), A.basis_vector(k)) : A.mul(A.basis_vector(k), emb.column(i)));
    return s.dim();
  };
  r.check("graph.B_nondegenerate_in_A", "BA = AB = A", span_dim(g.B_emb, true) == n && span_dim(g.B_emb, false) == n,
          "products with B do not span A");
  r.check("graph.C_nondegenerate_in_A", "CA = AC = A", span_dim(g.C_emb, true) == n && span_dim(g.C_emb, false) == n,
          "products with C do not span A");

  r.check("graph.S_B_anti_isomorphism", "S_B: B -> C is an anti-isomorphism",
          is_anti_homomorphism(g.B, g.C, g.S_B) && inverse(g.S_B).has_value(), "S_B is not a bijective anti-homomorphism");
  r.check("graph.S_C_anti_isomorphism", "S_C: C -> B is an anti-isomorphism",
          is_anti_homomorphism(g.C, g.B, g.S_C) && inverse(g.S_C).has_value(), "S_C is not a bijective anti-homomorphism");

  bool sb = true, sc = true;
  if (alg.antipode.rows() == n && alg.antipode.cols() == n) {
    for (std::size_t i = 0; i < db; ++i) sb = sb && alg.antipode.apply(g.x(i)) == g.S_B_of(i);
    for (std::size_t j = 0; j < dc; ++j) sc = sc && alg.antipode.apply(g.y(j)) == g.S_C_of(j);
  } else {
    sb = sc = false;
  }
  r.check("graph.antipode_restricts_to_S_B", "S = S_B on B", sb, "antipode differs from S_B on B");
  r.check("graph.antipode_restricts_to_S_C", "S = S_C on C", sc, "antipode differs from S_C on C");
  bool bij = alg.antipode.rows() == n && inverse(alg.antipode).has_value();
  r.check("graph.antipode_bijective_anti_homomorphism", "S is a bijective anti-homomorphism",
          bij && is_anti_homomorphism(A, A, alg.antipode), "antipode is not a bijective anti-homomorphism");
  return r;
}

Report check_coproducts(const Algebroid& alg, const BalancedSpaces& sp) {
  const QuantumGraphPair& g = alg.graphs;
  const FiniteAlgebra& A = g.A;
  std::size_t n = A.dim(), db = g.B.dim(), dc = g.C.dim();
  Vector one = A.one();
  Report r;

  std::string wl, wr;
  for (std::size_t a = 0; a < n && wl.empty(); ++a)
    for (std::size_t i = 0; i < db && wl.empty(); ++i)
      if (!sp.l.equivalent(tmul(A, alg.delta_B.column(a), tensor(g.x(i), one)),
                           tmul(A, alg.delta_B.column(a), tensor(one, g.S_B_of(i)))))
        wl = "Delta_B(a)(x(x)1) != Delta_B(a)(1(x)S_B(x)) at a=" + idx(a) + ", x=b" + idx(i);
  for (std::size_t a = 0; a < n && wr.empty(); ++a)
    for (std::size_t j = 0; j < dc && wr.empty(); ++j)
      if (!sp.r.equivalent(tmul(A, tensor(one, g.y(j)), alg.delta_C.column(a)),
                           tmul(A, tensor(g.S_C_of(j), one), alg.delta_C.column(a))))
        wr = "(1(x)y)Delta_C(a) != (S_C(y)(x)1)Delta_C(a) at a=" + idx(a) + ", y=c" + idx(j);
  r.check("algebroid.left_regular_membership", "Delta_B(a)(x(x)1) = Delta_B(a)(1(x)S_B(x))", wl.empty(), wl);
  r.check("algebroid.right_regular_membership", "(1(x)y)Delta_C(a) = (S_C(y)(x)1)Delta_C(a)", wr.empty(), wr);

  std::string hl, hr;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector ab = A.mul(A.basis_vector(a), A.basis_vector(b));
      if (hl.empty() && !sp.l.equivalent(alg.delta_B.apply(ab), tmul(A, alg.delta_B.column(a), alg.delta_B.column(b))))
        hl = "Delta_B(ab) != Delta_B(a)Delta_B(b) at a=" + idx(a) + ", b=" + idx(b);
      if (hr.empty() && !sp.r.equivalent(alg.delta_C.apply(ab), tmul(A, alg.delta_C.column(a), alg.delta_C.column(b))))
        hr = "Delta_C(ab) != Delta_C(a)Delta_C(b) at a=" + idx(a) + ", b=" + idx(b);
    }
  r.check("algebroid.left_homomorphism", "Delta_B is multiplicative", hl.empty(), hl);
  r.check("algebroid.right_homomorphism", "Delta_C is multiplicative", hr.empty(), hr);

  // Behaviour on B and C, for both coproducts.
  auto base_behaviour = [&](const Matrix& delta, const BalancedSpace& q) {
    for (std::size_t a = 0; a < n; ++a) {
      Vector ea = A.basis_vector(a), da = delta.column(a);
      for (std::size_t i = 0; i < db; ++i) {
        Vector x = g.x(i);
        if (!q.equivalent(delta.apply(A.mul(x, ea)), tmul(A, tensor(one, x), da)))
          return "Delta(xa) != (1(x)x)Delta(a) at a=" + idx(a) + ", x=b" + idx(i);
        if (!q.equivalent(delta.apply(A.mul(ea, x)), tmul(A, da, tensor(one, x))))
          return "Delta(ax) != Delta(a)(1(x)x) at a=" + idx(a) + ", x=b" + idx(i);
      }
      for (std::size_t j = 0; j < dc; ++j) {
        Vector y = g.y(j);
        if (!q.equivalent(delta.apply(A.mul(y, ea)), tmul(A, tensor(y, one), da)))
          return "Delta(ya) != (y(x)1)Delta(a) at a=" + idx(a) + ", y=c" + idx(j);
        if (!q.equivalent(delta.apply(A.mul(ea, y)), tmul(A, da, tensor(y, one))))
          return "Delta(ay) != Delta(a)(y(x)1) at a=" + idx(a) + ", y=c" + idx(j);
      }
    }
    return std::string();
  };
  std::string bl = base_behaviour(alg.delta_B, sp.l), br = base_behaviour(alg.delta_C, sp.r);
  r.check("algebroid.left_base_behaviour", "Delta_B on products with B and C", bl.empty(), bl);
  r.check("algebroid.right_base_behaviour", "Delta_C on products with B and C", br.empty(), br);
  return r;
}

Report check_coassociativity(const Algebroid& alg) {
  const QuantumGraphPair& g = alg.graphs;
  std::size_t n = g.A.dim();
  BalancedSpace l(BalancedKind::Left, g), rr(BalancedKind::Right, g);
  Report r;
  auto run = [&](const std::string& name, const std::string& anchor, const BalancedSpace& p12,
                 const BalancedSpace& p23, const Matrix& outer_first, const Matrix& src_first,
                 const Matrix& outer_second, const Matrix& src_second) {
    Echelon rel = triple_relations(p12, p23, n);
    std::string w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      SparseVec lhs = apply_first_leg(outer_first, src_first.column(a), n);
      SparseVec rhs = apply_second_leg(outer_second, src_second.column(a), n);
      if (!rel.contains(sparse_sub(lhs, rhs))) w = "differs at a=" + idx(a);
    }
    r.check(name, anchor, w.empty(), w);
  };
  run("algebroid.left_coassociative", "(Delta_B(x)id)Delta_B = (id(x)Delta_B)Delta_B in A(x)_l A(x)_l A", l, l,
      alg.delta_B, alg.delta_B, alg.delta_B, alg.delta_B);
  run("algebroid.right_coassociative", "(Delta_C(x)id)Delta_C = (id(x)Delta_C)Delta_C in A(x)_r A(x)_r A", rr, rr,
      alg.delta_C, alg.delta_C, alg.delta_C, alg.delta_C);
  run("algebroid.joint_coassociative_rl", "(Delta_C(x)id)Delta_B = (id(x)Delta_B)Delta_C in A(x)_r A(x)_l A", rr, l,
      alg.delta_C, alg.delta_B, alg.delta_B, alg.delta_C);
  run("algebroid.joint_coassociative_lr", "(Delta_B(x)id)Delta_C = (id(x)Delta_C)Delta_B in A(x)_l A(x)_r A", l, rr,
      alg.delta_B, alg.delta_C, alg.delta_C, alg.delta_B);
  return r;
}

AlgebroidCanonicalMaps algebroid_canonical_maps(const Algebroid& alg, const BalancedSpaces& sp) {
  const FiniteAlgebra& A = alg.graphs.A;
  std::size_t n = A.dim();
  AlgebroidCanonicalMaps m;
  m.T_rho = induced_map(sp.s, sp.l, [&](std::size_t a, std::size_t b) {
              return tmul(A, alg.delta_B.column(a), right_one(A, b)); }, n).matrix;
  m.T_lambda = induced_map(sp.t_up, sp.l, [&](std::size_t a, std::size_t b) {
                 return tmul(A, alg.delta_B.column(b), left_one(A, a)); }, n).matrix;
  m.lambda_T = induced_map(sp.t, sp.r, [&](std::size_t a, std::size_t b) {
                 return tmul(A, left_one(A, a), alg.delta_C.column(b)); }, n).matrix;
  m.rho_T = induced_map(sp.s_up, sp.r, [&](std::size_t a, std::size_t b) {
              return tmul(A, right_one(A, b), alg.delta_C.column(a)); }, n).matrix;
  return m;
}

Report check_canonical_bijections(const Algebroid& alg, const BalancedSpaces& sp,
                                  const AlgebroidCanonicalMaps& m) {
  const FiniteAlgebra& A = alg.graphs.A;
  std::size_t n = A.dim();
  Report r;
  struct Item {
    std::string name, anchor;
    const BalancedSpace& from;
    const BalancedSpace& to;
    PairMap f;
    const Matrix& mat;
  };
  std::vector<Item> items{
      {"T_rho", "a(x)b -> Delta_B(a)(1(x)b) is well defined and bijective from A(x)_s A", sp.s, sp.l,
       [&](std::size_t a, std::size_t b) { return tmul(A, alg.delta_B.column(a), right_one(A, b)); }, m.T_rho},
      {"T_lambda", "a(x)b -> Delta_B(b)(a(x)1) is well defined and bijective from A(x)^t A", sp.t_up, sp.l,
       [&](std::size_t a, std::size_t b) { return tmul(A, alg.delta_B.column(b), left_one(A, a)); }, m.T_lambda},
      {"lambda_T", "a(x)b -> (a(x)1)Delta_C(b) is well defined and bijective from A(x)_t A", sp.t, sp.r,
       [&](std::size_t a, std::size_t b) { return tmul(A, left_one(A, a), alg.delta_C.column(b)); }, m.lambda_T},
      {"rho_T", "a(x)b -> (1(x)b)Delta_C(a) is well defined and bijective from A(x)^s A", sp.s_up, sp.r,
       [&](std::size_t a, std::size_t b) { return tmul(A, right_one(A, b), alg.delta_C.column(a)); }, m.rho_T},
  };
  for (const auto& it : items) {
    InducedMap im = induced_map(it.from, it.to, it.f, n);
    r.check("algebroid." + it.name + "_well_defined", it.anchor, im.defect.empty(), im.defect);
    std::string w = bijectivity_witness(it.mat);
    r.check("algebroid." + it.name + "_bijective", it.anchor, w.empty(), w);
  }
  return r;
}

Report check_counital_maps(const Algebroid& alg, const BalancedSpaces& sp) {
  (void)sp;
  const QuantumGraphPair& g = alg.graphs;
  const FiniteAlgebra& A = g.A;
  std::size_t n = A.dim(), db = g.B.dim(), dc = g.C.dim();
  Report r;
  std::vector<Vector> eb(n), sbeb(n), ec(n), sced(n);
  for (std::size_t p = 0; p < n; ++p) {
    eb[p] = g.B_emb.apply(alg.eps_B.column(p));
    sbeb[p] = g.C_emb.apply(g.S_B.apply(alg.eps_B.column(p)));
    ec[p] = g.C_emb.apply(alg.eps_C.column(p));
    sced[p] = g.B_emb.apply(g.S_C.apply(alg.eps_C.column(p)));
  }
  auto contract = [&](const Vector& t, const std::function<Vector(std::size_t, std::size_t)>& f) {
    Vector out(n);
    for (std::size_t k = 0; k < t.size(); ++k)
      if (!is_zero(t[k])) axpy(out, t[k], f(k / n, k % n));
    return out;
  };
  std::string w1, w2, w3, w4;
  for (std::size_t a = 0; a < n; ++a) {
    Vector ea = A.basis_vector(a);
    Vector v = alg.delta_B.column(a), w = alg.delta_C.column(a);
    if (w1.empty() && contract(v, [&](std::size_t p, std::size_t q) { return A.mul(sbeb[p], A.basis_vector(q)); }) != ea)
      w1 = "sum S_B(eps_B(a_1))a_2 != a at a=" + idx(a);
    if (w2.empty() && contract(v, [&](std::size_t p, std::size_t q) { return A.mul(eb[q], A.basis_vector(p)); }) != ea)
      w2 = "sum eps_B(a_2)a_1 != a at a=" + idx(a);
    if (w3.empty() && contract(w, [&](std::size_t p, std::size_t q) { return A.mul(A.basis_vector(q), ec[p]); }) != ea)
      w3 = "sum a_2 eps_C(a_1) != a at a=" + idx(a);
    if (w4.empty() && contract(w, [&](std::size_t p, std::size_t q) { return A.mul(A.basis_vector(p), sced[q]); }) != ea)
      w4 = "sum a_1 S_C(eps_C(a_2)) != a at a=" + idx(a);
  }
  r.check("algebroid.left_counit_first", "sum S_B(eps_B(p))q = ab for Delta_B(a)(1(x)b)", w1.empty(), w1);
  r.check("algebroid.left_counit_second", "sum eps_B(q)p = ac for Delta_B(a)(c(x)1)", w2.empty(), w2);
  r.check("algebroid.right_counit_first", "sum q eps_C(p) = ba for (1(x)b)Delta_C(a)", w3.empty(), w3);
  r.check("algebroid.right_counit_second", "sum p S_C(eps_C(q)) = ca for (c(x)1)Delta_C(a)", w4.empty(), w4);

  std::string mb, mc;
  for (std::size_t a = 0; a < n; ++a) {
    Vector ea = A.basis_vector(a);
    for (std::size_t i = 0; i < db && mb.empty(); ++i) {
      Vector x = g.x(i);
      if (g.B_emb.apply(alg.eps_B.apply(A.mul(x, ea))) != A.mul(x, eb[a]))
        mb = "eps_B(xa) != x eps_B(a) at a=" + idx(a) + ", x=b" + idx(i);
      else if (g.B_emb.apply(alg.eps_B.apply(A.mul(g.S_B_of(i), ea))) != A.mul(eb[a], x))
        mb = "eps_B(S_B(x)a) != eps_B(a)x at a=" + idx(a) + ", x=b" + idx(i);
    }
    for (std::size_t j = 0; j < dc && mc.empty(); ++j) {
      Vector y = g.y(j);
      if (g.C_emb.apply(alg.eps_C.apply(A.mul(ea, y))) != A.mul(ec[a], y))
        mc = "eps_C(ay) != eps_C(a)y at a=" + idx(a) + ", y=c" + idx(j);
      else if (g.C_emb.apply(alg.eps_C.apply(A.mul(ea, g.S_C_of(j)))) != A.mul(y, ec[a]))
        mc = "eps_C(aS_C(y)) != y eps_C(a) at a=" + idx(a) + ", y=c" + idx(j);
    }
  }
  r.check("algebroid.left_counit_module", "eps_B(xa) = x eps_B(a) and eps_B(S_B(x)a) = eps_B(a)x", mb.empty(), mb);
  r.check("algebroid.right_counit_module", "eps_C(ay) = eps_C(a)y and eps_C(aS_C(y)) = y eps_C(a)", mc.empty(), mc);

  std::size_t rb = rank(alg.eps_B), rc = rank(alg.eps_C);
  r.check("algebroid.left_counit_onto_B", "eps_B(A) = B", rb == db, "rank " + idx(rb) + " of " + idx(db));
  r.check("algebroid.right_counit_onto_C", "eps_C(A) = C", rc == dc, "rank " + idx(rc) + " of " + idx(dc));
  return r;
}

Report check_antipode_diagrams(const Algebroid& alg, const BalancedSpaces& sp) {
  (void)sp;
  const QuantumGraphPair& g = alg.graphs;
  const FiniteAlgebra& A = g.A;
  const Matrix& S = alg.antipode;
  std::size_t n = A.dim();
  Matrix id = Matrix::identity(n);
  std::string w1, w2;
  for (std::size_t a = 0; a < n; ++a) {
    Vector lhs1 = mu(A, apply_legs(S, id, alg.delta_B.column(a)));
    Vector rhs1 = g.B_emb.apply(g.S_C.apply(alg.eps_C.column(a)));
    if (w1.empty() && lhs1 != rhs1) w1 = "mu(S(x)id)T_rho(a(x)1) != S_C(eps_C(a)) at a=" + idx(a);
    Vector lhs2 = mu(A, apply_legs(id, S, alg.delta_C.column(a)));
    Vector rhs2 = g.C_emb.apply(g.S_B.apply(alg.eps_B.column(a)));
    if (w2.empty() && lhs2 != rhs2) w2 = "mu(id(x)S)lambda_T(1(x)a) != S_B(eps_B(a)) at a=" + idx(a);
  }
  Report r;
  r.check("algebroid.antipode_left_diagram", "mu(S(x)id)T_rho(a(x)b) = S_C(eps_C(a))b", w1.empty(), w1);
  r.check("algebroid.antipode_right_diagram", "mu(id(x)S)lambda_T(a(x)b) = aS_B(eps_B(b))", w2.empty(), w2);
  return r;
}

Report check_algebroid_axioms(const Algebroid& alg, const BalancedSpaces& sp) {
  Report r = check_quantum_graphs(alg);
  r.append(check_coproducts(alg, sp));
  r.append(check_coassociativity(alg));
  r.append(check_canonical_bijections(alg, sp, algebroid_canonical_maps(alg, sp)));
  r.append(check_counital_maps(alg, sp));
  r.append(check_antipode_diagrams(alg, sp));
  return r;
}

Report check_algebroid_axioms(const Algebroid& alg) {
  BalancedSpaces sp(alg.graphs);
  return check_algebroid_axioms(alg, sp);
}

Algebroid forward_algebroid(const Wmha& w, const BaseAlgebraData& d) {
  Algebroid alg;
  alg.graphs = graph_pair_from_wmha(w, d);
  std::size_t n = w.dim();
  BalancedSpace l(BalancedKind::Left, alg.graphs), r(BalancedKind::Right, alg.graphs);
  alg.delta_B = Matrix(n * n, n);
  alg.delta_C = Matrix(n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    alg.delta_B.set_column(a, l.canonical(w.delta.column(a)));
    alg.delta_C.set_column(a, r.canonical(w.delta.column(a)));
  }
  auto s_inv = inverse(w.antipode);
  if (!s_inv) throw AntipodeNotBijective("antipode matrix is singular");
  alg.eps_B = Matrix(d.B.dim(), n);
  alg.eps_C = Matrix(d.C.dim(), n);
  for (std::size_t a = 0; a < n; ++a) {
    auto b = coordinates(d.B_emb, s_inv->apply(d.eps_t.column(a)));
    auto c = coordinates(d.C_emb, s_inv->apply(d.eps_s.column(a)));
    if (!b || !c) throw std::runtime_error("counital map leaves the base algebra");
    alg.eps_B.set_column(a, *b);
    alg.eps_C.set_column(a, *c);
  }
  alg.antipode = w.antipode;
  return alg;
}

ForwardResult forward_construct(const Wmha& w) {
  BaseAlgebraData d = compute_base_algebras(w);
  ForwardResult out{forward_algebroid(w, d), Report()};
  const Algebroid& alg = out.algebroid;
  const FiniteAlgebra& A = w.algebra;
  std::size_t n = w.dim();
  BalancedSpaces sp(alg.graphs);
  Report& r = out.report;
  r.append(check_algebroid_axioms(alg, sp));

  // Counital maps against the coproduct formulas.
  Matrix s_inv = *inverse(w.antipode);
  Matrix id = Matrix::identity(n);
  std::string wb, wc;
  for (std::size_t a = 0; a < n; ++a) {
    Vector d1 = w.delta.column(a);
    Vector fb = mu(A, flip(apply_legs(s_inv, id, d1), n, n));
    Vector fc = mu(A, flip(apply_legs(id, s_inv, d1), n, n));
    if (wb.empty() && fb != embed_B(alg, alg.eps_B.column(a))) wb = "sum a_2 S^-1(a_1) != S^-1(eps_t(a)) at a=" + idx(a);
    if (wc.empty() && fc != embed_C(alg, alg.eps_C.column(a))) wc = "sum S^-1(a_2)a_1 != S^-1(eps_s(a)) at a=" + idx(a);
  }
  r.check("forward.left_counit_formula", "eps_B(a) = sum a_2 S^-1(a_1) = S^-1(eps_t(a))", wb.empty(), wb);
  r.check("forward.right_counit_formula", "eps_C(a) = sum S^-1(a_2)a_1 = S^-1(eps_s(a))", wc.empty(), wc);

  // Each algebroid canonical map is the quotient of one of T_1..T_4.
  AlgebroidCanonicalMaps m = algebroid_canonical_maps(alg, sp);
  Vector one = A.one();
  struct Square {
    std::string name, anchor;
    const BalancedSpace& from;
    const BalancedSpace& to;
    const Matrix& mat;
    std::function<Vector(std::size_t, std::size_t)> t;
  };
  std::vector<Square> squares{
      {"forward.T1_square", "pi_l T_1 = T_rho pi_s", sp.s, sp.l, m.T_rho,
       [&](std::size_t a, std::size_t b) { return tmul(A, w.delta.column(a), tensor(one, A.basis_vector(b))); }},
      {"forward.T2_square", "pi_r T_2 = lambda_T pi_t", sp.t, sp.r, m.lambda_T,
       [&](std::size_t a, std::size_t b) { return tmul(A, tensor(A.basis_vector(a), one), w.delta.column(b)); }},
      {"forward.T3_square", "pi_r T_3 = rho_T pi^s", sp.s_up, sp.r, m.rho_T,
       [&](std::size_t a, std::size_t b) { return tmul(A, tensor(one, A.basis_vector(b)), w.delta.column(a)); }},
      {"forward.T4_square", "pi_l T_4 = T_lambda pi^t", sp.t_up, sp.l, m.T_lambda,
       [&](std::size_t a, std::size_t b) { return tmul(A, w.delta.column(b), tensor(A.basis_vector(a), one)); }},
  };
  for (const auto& sq : squares) {
    std::string wit;
    for (std::size_t a = 0; a < n && wit.empty(); ++a)
      for (std::size_t b = 0; b < n && wit.empty(); ++b) {
        Vector lhs = sq.to.project(sq.t(a, b));
        Vector rhs = sq.mat.apply(sq.from.project(tensor(A.basis_vector(a), A.basis_vector(b))));
        if (lhs != rhs) wit = "square fails at a=" + idx(a) + ", b=" + idx(b);
      }
    r.check(sq.name, sq.anchor, wit.empty(), wit);
  }
  return out;
}

}  // namespace wmha
