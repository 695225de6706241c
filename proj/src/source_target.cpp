#include "wmha/source_target.hpp"

#include <stdexcept>

#include "wmha/separability.hpp"
#include "wmha/tensor.hpp"

namespace wmha {

namespace {

Matrix leg_antipode_map(const Wmha& w, bool antipode_first) {
  std::size_t n = w.dim();
  Matrix id = Matrix::identity(n);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector d = w.delta.column(i);
    m.set_column(i, mu(w.algebra, antipode_first ? apply_legs(w.antipode, id, d)
                                                 : apply_legs(id, w.antipode, d)));
  }
  return m;
}

std::string idx(std::size_t i) { return std::to_string(i); }

// Span of all products u v with u a column of left and v a column of right.
std::size_t product_span_dim(const FiniteAlgebra& a, const Matrix& left, const Matrix& right) {
  Subspace s(a.dim());
  for (std::size_t i = 0; i < left.cols(); ++i)
    for (std::size_t j = 0; j < right.cols(); ++j) s.add(a.mul(left.column(i), right.column(j)));
  return s.dim();
}

Subspace columns_span(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.rows(), cols);
}

}  // namespace

Matrix source_map(const Wmha& w) { return leg_antipode_map(w, true); }
Matrix target_map(const Wmha& w) { return leg_antipode_map(w, false); }

Matrix column_basis(const Matrix& m) {
  Subspace s = columns_span(m);
  return Matrix::from_columns(m.rows(), s.basis());
}

BaseAlgebraData compute_base_algebras(const Wmha& w) {
  const FiniteAlgebra& A = w.algebra;
  std::size_t n = A.dim();
  BaseAlgebraData d;
  d.eps_s = source_map(w);
  d.eps_t = target_map(w);
  d.B_emb = column_basis(d.eps_s);
  d.C_emb = column_basis(d.eps_t);
  d.B = induced_subalgebra(A, d.B_emb);
  d.C = induced_subalgebra(A, d.C_emb);
  std::size_t db = d.B.dim(), dc = d.C.dim();
  d.S_B = Matrix(dc, db);
  d.S_C = Matrix(db, dc);
  for (std::size_t i = 0; i < db; ++i) {
    auto c = coordinates(d.C_emb, w.antipode.apply(d.B_emb.column(i)));
    if (!c) throw std::runtime_error("antipode does not map the source algebra into the target algebra");
    d.S_B.set_column(i, *c);
  }
  for (std::size_t j = 0; j < dc; ++j) {
    auto c = coordinates(d.B_emb, w.antipode.apply(d.C_emb.column(j)));
    if (!c) throw std::runtime_error("antipode does not map the target algebra into the source algebra");
    d.S_C.set_column(j, *c);
  }
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < dc; ++j) cols.push_back(tensor(d.B_emb.column(i), d.C_emb.column(j)));
  auto e = coordinates(Matrix::from_columns(n * n, cols), compute_E(w));
  if (e) {
    d.E = *e;
    if (auto f = functional_from_E(d.B, d.C, d.E)) {
      d.phi_B = f->phi_B;
      d.phi_C = f->phi_C;
    }
  }
  return d;
}

Report check_base_algebras(const Wmha& w, const BaseAlgebraData& d) {
  const FiniteAlgebra& A = w.algebra;
  const Matrix& S = w.antipode;
  std::size_t n = A.dim(), db = d.B.dim(), dc = d.C.dim();
  Vector one = A.one();
  Report r;

  std::string ws, wt;
  for (std::size_t a = 0; a < n; ++a) {
    Vector ea = A.basis_vector(a);
    Vector es = d.eps_s.column(a), et = d.eps_t.column(a);
    for (std::size_t i = 0; i < db && ws.empty() && wt.empty(); ++i) {
      Vector x = d.B_emb.column(i);
      if (d.eps_s.apply(A.mul(ea, x)) != A.mul(es, x))
        ws = "eps_s(ax) != eps_s(a)x at a=" + idx(a) + ", x=b" + idx(i);
      else if (d.eps_t.apply(A.mul(x, ea)) != A.mul(et, S.apply(x)))
        wt = "eps_t(xa) != eps_t(a)S(x) at a=" + idx(a) + ", x=b" + idx(i);
    }
    for (std::size_t j = 0; j < dc && ws.empty() && wt.empty(); ++j) {
      Vector y = d.C_emb.column(j);
      if (d.eps_s.apply(A.mul(ea, y)) != A.mul(S.apply(y), es))
        ws = "eps_s(ay) != S(y)eps_s(a) at a=" + idx(a) + ", y=c" + idx(j);
      else if (d.eps_t.apply(A.mul(y, ea)) != A.mul(y, et))
        wt = "eps_t(ya) != y eps_t(a) at a=" + idx(a) + ", y=c" + idx(j);
    }
  }
  r.check("base.source_module_relations", "eps_s(ax) = eps_s(a)x and eps_s(ay) = S(y)eps_s(a)",
          ws.empty(), ws);
  r.check("base.target_module_relations", "eps_t(ya) = y eps_t(a) and eps_t(xa) = eps_t(a)S(x)",
          wt.empty(), wt);

  std::string wc;
  for (std::size_t i = 0; i < db && wc.empty(); ++i)
    for (std::size_t j = 0; j < dc && wc.empty(); ++j) {
      Vector x = d.B_emb.column(i), y = d.C_emb.column(j);
      if (A.mul(x, y) != A.mul(y, x)) wc = "b" + idx(i) + " c" + idx(j) + " do not commute";
    }
  r.check("base.commute", "B and C commute", wc.empty(), wc);

  Matrix id = Matrix::identity(n);
  std::size_t ba = product_span_dim(A, d.B_emb, id), ab = product_span_dim(A, id, d.B_emb);
  std::size_t ca = product_span_dim(A, d.C_emb, id), ac = product_span_dim(A, id, d.C_emb);
  r.check("base.B_nondegenerate_in_A", "BA = AB = A", ba == n && ab == n,
          "dim BA = " + idx(ba) + ", dim AB = " + idx(ab) + ", dim A = " + idx(n));
  r.check("base.C_nondegenerate_in_A", "CA = AC = A", ca == n && ac == n,
          "dim CA = " + idx(ca) + ", dim AC = " + idx(ac) + ", dim A = " + idx(n));

  bool sb = db == dc && is_anti_homomorphism(d.B, d.C, d.S_B) && inverse(d.S_B).has_value();
  bool sc = db == dc && is_anti_homomorphism(d.C, d.B, d.S_C) && inverse(d.S_C).has_value();
  r.check("base.S_B_anti_isomorphism", "S restricts to an anti-isomorphism B -> C", sb,
          "restriction of S to B is not a bijective anti-homomorphism");
  r.check("base.S_C_anti_isomorphism", "S restricts to an anti-isomorphism C -> B", sc,
          "restriction of S to C is not a bijective anti-homomorphism");

  Vector E = compute_E(w);
  r.check("base.E_in_B_tensor_C", "E lies in B(x)C", !d.E.empty(), "E has no coordinates in B(x)C");

  std::string wl, wr;
  for (std::size_t i = 0; i < db && wl.empty(); ++i) {
    Vector x = d.B_emb.column(i);
    if (tmul(A, E, tensor(x, one)) != tmul(A, E, tensor(one, S.apply(x))))
      wl = "E(x(x)1) != E(1(x)S(x)) at x=b" + idx(i);
  }
  for (std::size_t j = 0; j < dc && wr.empty(); ++j) {
    Vector y = d.C_emb.column(j);
    if (tmul(A, tensor(one, y), E) != tmul(A, tensor(S.apply(y), one), E))
      wr = "(1(x)y)E != (S(y)(x)1)E at y=c" + idx(j);
  }
  r.check("base.E_left_antipodal", "E(x(x)1) = E(1(x)S(x)) for x in B", wl.empty(), wl);
  r.check("base.E_right_antipodal", "(1(x)y)E = (S(y)(x)1)E for y in C", wr.empty(), wr);

  Vector s1 = mu(A, apply_legs(S, id, E));
  Vector s2 = mu(A, apply_legs(id, S, E));
  r.check("base.E_antipode_first_leg", "S(E_1)E_2 = 1", s1 == one, "got " + format_element(A, s1));
  r.check("base.E_antipode_second_leg", "E_1 S(E_2) = 1", s2 == one, "got " + format_element(A, s2));

  // Legs of E: images of the slices against all functionals on the other leg.
  Subspace first(n), second(n);
  for (std::size_t k = 0; k < n; ++k) {
    first.add(slice_second(unit_vector(n, k), E, n, n));
    second.add(slice_first(unit_vector(n, k), E, n, n));
  }
  r.check("base.first_leg_of_E", "first leg of E spans B", first == columns_span(d.B_emb),
          "dim first leg = " + idx(first.dim()) + ", dim B = " + idx(db));
  r.check("base.second_leg_of_E", "second leg of E spans C", second == columns_span(d.C_emb),
          "dim second leg = " + idx(second.dim()) + ", dim C = " + idx(dc));

  bool have_phi = d.phi_B && d.phi_C && !d.E.empty();
  r.check("base.integrals", "unique phi_B, phi_C with (phi_B(x)id)E = 1 and (id(x)phi_C)E = 1",
          have_phi, "no unique solution for the integrals");
  if (have_phi && sb && sc) {
    SeparabilityIdempotent sep{d.B, d.C, d.E, d.S_B, d.S_C, *d.phi_B, *d.phi_C, Matrix(), Matrix()};
    try {
      sep.sigma_B = modular_automorphism(d.B, *d.phi_B);
      sep.sigma_C = modular_automorphism(d.C, *d.phi_C);
      r.append(check_separability_idempotent(sep), "base.");
    } catch (const std::exception& e) {
      r.check("base.modular_automorphism", "phi_B and phi_C have modular automorphisms", false, e.what());
    }
  } else {
    r.add("base.separability", "E is a separability idempotent for B and C", Status::SkippedNotApplicable,
          "integrals or antipodal maps unavailable");
  }
  return r;
}

Report check_characterizations(const Wmha& w, const BaseAlgebraData& d) {
  const FiniteAlgebra& A = w.algebra;
  std::size_t n = A.dim();
  Vector one = A.one();
  Vector E = compute_E(w);
  Matrix ms(n * n, n), mt(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = A.basis_vector(i);
    Vector de = w.delta.column(i);
    ms.set_column(i, de - tmul(A, E, tensor(one, e)));
    mt.set_column(i, de - tmul(A, tensor(e, one), E));
  }
  Subspace as = kernel(ms), at = kernel(mt);
  Report r;
  r.check("base.source_algebra_characterization", "{x : Delta(x) = E(1(x)x)} = B",
          as == columns_span(d.B_emb),
          "solution space has dimension " + idx(as.dim()) + ", dim B = " + idx(d.B.dim()));
  r.check("base.target_algebra_characterization", "{y : Delta(y) = (y(x)1)E} = C",
          at == columns_span(d.C_emb),
          "solution space has dimension " + idx(at.dim()) + ", dim C = " + idx(d.C.dim()));
  return r;
}

Report check_source_target(const Wmha& w) {
  Report r;
  try {
    BaseAlgebraData d = compute_base_algebras(w);
    r.append(check_base_algebras(w, d));
    r.append(check_characterizations(w, d));
  } catch (const std::exception& e) {
    r.check("base.extraction", "S maps B onto C and C onto B", false, e.what());
  }
  return r;
}

}  // namespace wmha
