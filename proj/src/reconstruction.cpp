#include "wmha/reconstruction.hpp"

#include <exception>
#include <sstream>

#include "wmha/tensor.hpp"

namespace wmha {

std::string stage_name(ObstructionStage s) {
  switch (s) {
    case ObstructionStage::NotSeparableFrobenius: return "NotSeparableFrobenius";
    case ObstructionStage::ModularAutomorphismMismatch: return "ModularAutomorphismMismatch";
    case ObstructionStage::CounitsDiffer: return "CounitsDiffer";
    case ObstructionStage::RangeConditionFailed: return "RangeConditionFailed";
    case ObstructionStage::KernelConditionFailed: return "KernelConditionFailed";
    case ObstructionStage::ConditionFailed: return "ConditionFailed";
  }
  return "?";
}

Matrix required_modular_automorphism(const QuantumGraphPair& g) {
  auto inv = inverse(g.S_C * g.S_B);
  if (!inv) throw std::invalid_argument("S_C S_B is not invertible");
  return *inv;
}

std::vector<Vector> center_basis(const FiniteAlgebra& a) {
  std::size_t d = a.dim();
  Matrix m(d * d, d);
  for (std::size_t k = 0; k < d; ++k) {
    Vector col(d * d);
    for (std::size_t j = 0; j < d; ++j) {
      Vector c = a.mul(a.basis_vector(k), a.basis_vector(j)) - a.mul(a.basis_vector(j), a.basis_vector(k));
      for (std::size_t i = 0; i < d; ++i) col[j * d + i] = c[i];
    }
    m.set_column(k, col);
  }
  return kernel(m).basis();
}

namespace {

ObstructionReport make_obstruction(ObstructionStage stage, ObstructionWitness w, std::string narrative) {
  return ObstructionReport{stage, std::move(w), std::move(narrative), std::nullopt, std::nullopt};
}

std::optional<SeparabilityIdempotent> try_functional(const QuantumGraphPair& g, const Vector& phi,
                                                     const Matrix& sigma_star) {
  if (phi.size() != g.B.dim() || !is_faithful(g.B, phi)) return std::nullopt;
  try {
    if (!(modular_automorphism(g.B, phi) == sigma_star)) return std::nullopt;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  auto res = build_E_from_functional(g.B, phi, g.C, g.S_B);
  auto* sep = std::get_if<SeparabilityIdempotent>(&res);
  if (!sep || !(sep->S_C == g.S_C)) return std::nullopt;
  if (!check_separability_idempotent(*sep).ok()) return std::nullopt;
  return *sep;
}

// E(cphi) = E(phi)/c, so E(phi)^2 = c E(phi) picks the idempotent multiple.
std::optional<Vector> rescaled_generator(const QuantumGraphPair& g, const Vector& phi0) {
  if (!is_faithful(g.B, phi0)) return std::nullopt;
  Vector e0 = dual_basis_element(g.B, phi0, g.S_B);
  Vector sq = tmul2(g.B, g.C, e0, e0);
  std::size_t k = leading_index(e0);
  if (k == e0.size()) return std::nullopt;
  Rational c = sq[k] / e0[k];
  if (is_zero(c) || !(sq == c * e0)) return std::nullopt;
  return c * phi0;
}

// E in B(x)C with E(x(x)1) = E(1(x)S_B x), (1(x)y)E = (S_C y(x)1)E and
// mu(S_B (x) id)E = 1, all linear in E.
std::optional<Vector> solve_for_E(const QuantumGraphPair& g) {
  const FiniteAlgebra& B = g.B;
  const FiniteAlgebra& C = g.C;
  std::size_t db = B.dim(), dc = C.dim(), m = db * dc;
  Vector one_b = B.one(), one_c = C.one();
  std::vector<Vector> cols(m);
  for (std::size_t p = 0; p < db; ++p)
    for (std::size_t q = 0; q < dc; ++q) {
      Vector u = tensor(B.basis_vector(p), C.basis_vector(q));
      Vector col;
      for (std::size_t i = 0; i < db; ++i) {
        Vector r = tmul2(B, C, u, tensor(B.basis_vector(i), one_c)) -
                   tmul2(B, C, u, tensor(one_b, g.S_B.column(i)));
        col.insert(col.end(), r.begin(), r.end());
      }
      for (std::size_t j = 0; j < dc; ++j) {
        Vector r = tmul2(B, C, tensor(one_b, C.basis_vector(j)), u) -
                   tmul2(B, C, tensor(g.S_C.column(j), one_c), u);
        col.insert(col.end(), r.begin(), r.end());
      }
      Vector r = C.mul(g.S_B.column(p), C.basis_vector(q));
      col.insert(col.end(), r.begin(), r.end());
      cols[p * dc + q] = col;
    }
  Matrix sys = Matrix::from_columns(cols[0].size(), cols);
  Vector rhs(sys.rows());
  for (std::size_t i = 0; i < dc; ++i) rhs[rhs.size() - dc + i] = one_c[i];
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::string first_failure_text(const Report& r) {
  const CheckResult* f = r.first_failure();
  return f ? f->name + ": " + f->witness : std::string();
}

}  // namespace

std::variant<SeparabilityIdempotent, ObstructionReport> find_separable_frobenius_base(
    const QuantumGraphPair& g, const std::vector<Vector>& candidates) {
  const FiniteAlgebra& B = g.B;
  Subspace rad = trace_form_radical(B);
  if (rad.dim() > 0) {
    ObstructionWitness w{"radical element", {rad.basis().front()}, {}, std::nullopt,
                         "nonzero element of the Jacobson radical of B"};
    return make_obstruction(ObstructionStage::NotSeparableFrobenius, std::move(w),
                            "B has a nonzero radical, so no faithful functional on B induces an "
                            "idempotent E; B is not separable Frobenius");
  }
  Matrix sigma_star = required_modular_automorphism(g);
  Matrix sigma_trace = modular_automorphism(B, regular_trace(B));
  for (const auto& z : center_basis(B)) {
    if (sigma_star.apply(z) != z) {
      ObstructionWitness w{"central element moved by (S_C S_B)^-1", {z}, {sigma_star, sigma_trace},
                           std::nullopt, "sigma*(z) = " + format_vector(sigma_star.apply(z)) +
                                             " differs from z = " + format_vector(z)};
      return make_obstruction(ObstructionStage::ModularAutomorphismMismatch, std::move(w),
                              "every modular automorphism fixes the center of B pointwise, but "
                              "(S_C S_B)^-1 moves a central element");
    }
  }
  std::vector<Vector> order = candidates;
  order.push_back(regular_trace(B));
  auto fs = functionals_with_modular_automorphism(B, sigma_star);
  if (fs.size() == 1)
    if (auto phi = rescaled_generator(g, fs.front())) order.push_back(*phi);
  for (const auto& phi : order)
    if (auto sep = try_functional(g, phi, sigma_star)) return *sep;
  if (auto e = solve_for_E(g))
    if (auto fp = functional_from_E(B, g.C, *e))
      if (auto sep = try_functional(g, fp->phi_B, sigma_star)) return *sep;
  ObstructionWitness w{"no separating functional", {}, {sigma_star, sigma_trace}, std::nullopt,
                       "no functional on B has modular automorphism (S_C S_B)^-1 and an "
                       "idempotent E with antipodal maps S_B, S_C"};
  return make_obstruction(ObstructionStage::ModularAutomorphismMismatch, std::move(w),
                          "no separating functional on B has modular automorphism (S_C S_B)^-1");
}

BuiltCoproducts build_delta(const Algebroid& alg, const SeparabilityIdempotent& sep) {
  QuantumGraphPair g = alg.graphs;
  g.E = sep.E;
  const FiniteAlgebra& A = g.A;
  std::size_t n = A.dim();
  BuiltCoproducts c;
  c.E = g.E_in_A();
  c.delta = Matrix(n * n, n);
  c.delta_prime = Matrix(n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    c.delta.set_column(a, tmul(A, c.E, alg.delta_B.column(a)));
    c.delta_prime.set_column(a, tmul(A, alg.delta_C.column(a), c.E));
  }
  return c;
}

Report check_built_coproducts(const Algebroid& alg, const BuiltCoproducts& c) {
  const FiniteAlgebra& A = alg.graphs.A;
  std::size_t n = A.dim();
  Report r;
  BalancedSpace l(BalancedKind::Left, alg.graphs), rt(BalancedKind::Right, alg.graphs);
  std::string wl, wr;
  for (const auto& v : l.relations().basis())
    if (wl.empty() && !is_zero(tmul(A, c.E, v))) wl = "E kills no l-relation " + format_tensor(A, v);
  for (const auto& v : rt.relations().basis())
    if (wr.empty() && !is_zero(tmul(A, v, c.E))) wr = "E kills no r-relation " + format_tensor(A, v);
  r.check("reconstruction.delta_well_defined", "E rep(Delta_B(a)) is independent of the representative",
          wl.empty(), wl);
  r.check("reconstruction.delta_prime_well_defined",
          "rep(Delta_C(a)) E is independent of the representative", wr.empty(), wr);
  const Matrix* ds[2] = {&c.delta, &c.delta_prime};
  const char* names[2] = {"delta", "delta_prime"};
  for (int k = 0; k < 2; ++k) {
    const Matrix& d = *ds[k];
    std::string hom, absorb, coassoc;
    for (std::size_t i = 0; i < n && hom.empty(); ++i)
      for (std::size_t j = 0; j < n && hom.empty(); ++j) {
        Vector lhs = d.apply(to_dense(A.product(i, j), n));
        Vector rhs = tmul(A, d.column(i), d.column(j));
        if (lhs != rhs) hom = "on basis pair (" + A.labels()[i] + ", " + A.labels()[j] + ")";
      }
    for (std::size_t a = 0; a < n; ++a) {
      Vector x = d.column(a);
      if (absorb.empty() && (tmul(A, c.E, x) != x || tmul(A, x, c.E) != x))
        absorb = "on basis element " + A.labels()[a];
      if (coassoc.empty() && apply_first_leg(d, x, n) != apply_second_leg(d, x, n))
        coassoc = "on basis element " + A.labels()[a];
    }
    std::string p = std::string("reconstruction.") + names[k];
    r.check(p + "_homomorphism", "the coproduct is multiplicative", hom.empty(), hom);
    r.check(p + "_absorbs_E", "E Delta(a) = Delta(a) = Delta(a) E", absorb.empty(), absorb);
    r.check(p + "_coassociative", "(Delta (x) id)Delta = (id (x) Delta)Delta", coassoc.empty(), coassoc);
  }
  return r;
}

Counits build_counits(const Algebroid& alg, const SeparabilityIdempotent& sep) {
  std::size_t n = alg.dim();
  Counits k{Vector(n), Vector(n)};
  for (std::size_t a = 0; a < n; ++a) {
    k.eps[a] = dot(sep.phi_B, alg.eps_B.column(a));
    k.eps_prime[a] = dot(sep.phi_C, alg.eps_C.column(a));
  }
  return k;
}

Report check_counit_laws(const FiniteAlgebra& A, const BuiltCoproducts& c, const Counits& k) {
  std::size_t n = A.dim();
  Report r;
  const Matrix* ds[2] = {&c.delta, &c.delta_prime};
  const Vector* es[2] = {&k.eps, &k.eps_prime};
  const char* names[2] = {"counit", "counit_prime"};
  for (int i = 0; i < 2; ++i) {
    std::string w1, w2;
    for (std::size_t a = 0; a < n; ++a) {
      Vector x = ds[i]->column(a), e = A.basis_vector(a);
      if (w1.empty() && slice_first(*es[i], x, n, n) != e) w1 = "on basis element " + A.labels()[a];
      if (w2.empty() && slice_second(*es[i], x, n, n) != e) w2 = "on basis element " + A.labels()[a];
    }
    std::string p = std::string("reconstruction.") + names[i];
    r.check(p + "_left_law", "(eps (x) id)Delta(a) = a", w1.empty(), w1);
    r.check(p + "_right_law", "(id (x) eps)Delta(a) = a", w2.empty(), w2);
  }
  return r;
}

CanonicalMaps mixed_canonical_maps(const Algebroid& alg, const BuiltCoproducts& c) {
  Wmha left{alg.graphs.A, c.delta, Vector(alg.dim()), alg.antipode, std::nullopt};
  Wmha right{alg.graphs.A, c.delta_prime, Vector(alg.dim()), alg.antipode, std::nullopt};
  CanonicalMaps m = build_canonical_maps(left);
  CanonicalMaps mr = build_canonical_maps(right);
  m.T[1] = mr.T[1];
  m.T[2] = mr.T[2];
  m.R[1] = mr.R[1];
  m.R[2] = mr.R[2];
  m.E = c.E;
  Matrix I = Matrix::identity(alg.dim());
  m.F[0] = apply_legs(I, alg.antipode, c.E);
  m.F[1] = apply_legs(alg.antipode, I, c.E);
  m.F[2] = apply_legs(I, m.S_inv, c.E);
  m.F[3] = apply_legs(m.S_inv, I, c.E);
  return m;
}

namespace {

std::optional<Vector> separating_vector(const Subspace& x, const Subspace& y) {
  for (const auto& v : x.basis())
    if (!y.contains(v)) return v;
  for (const auto& v : y.basis())
    if (!x.contains(v)) return v;
  return std::nullopt;
}

Subspace kernel_generators(const FiniteAlgebra& A, const CanonicalMaps& m, int i) {
  std::size_t n = A.dim();
  Vector one = A.one();
  Vector g = tensor(one, one) - m.F[i];
  Subspace s(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      s.add(i < 2 ? sandwich_left_right(A, g, A.basis_vector(a), A.basis_vector(b))
                  : sandwich_right_left(A, g, A.basis_vector(a), A.basis_vector(b)));
  return s;
}

Subspace leg_span(const Subspace& s, std::size_t n, bool first) {
  Subspace legs(n);
  for (const auto& v : s.basis())
    for (std::size_t k = 0; k < n; ++k) {
      Vector leg(n);
      for (std::size_t i = 0; i < n; ++i) leg[i] = first ? v[i * n + k] : v[k * n + i];
      legs.add(leg);
    }
  return legs;
}

}  // namespace

Report check_ranges_and_fullness(const FiniteAlgebra& A, const CanonicalMaps& m,
                                 std::optional<ObstructionWitness>* witness) {
  std::size_t n = A.dim();
  Subspace e_left = image(tensor_left_mult(A, m.E));
  Subspace e_right = image(tensor_right_mult(A, m.E));
  const Subspace* targets[4] = {&e_left, &e_right, &e_right, &e_left};
  const char* anchors[4] = {"Delta(A)(1(x)A) = E(A(x)A)", "(A(x)1)Delta'(A) = (A(x)A)E",
                            "(1(x)A)Delta'(A) = (A(x)A)E", "Delta(A)(A(x)1) = E(A(x)A)"};
  Report r;
  for (int i = 0; i < 4; ++i) {
    Subspace img = image(m.T[i]);
    auto v = separating_vector(img, *targets[i]);
    std::string label = "T" + std::to_string(i + 1);
    r.check("reconstruction.range_" + label, anchors[i], !v, v ? format_tensor(A, *v) : "");
    if (v && witness && !*witness)
      *witness = ObstructionWitness{label, {*v, m.E}, {}, std::nullopt,
                                    "lies in exactly one of the two sides of " + std::string(anchors[i])};
    bool full = leg_span(img, n, true).dim() == n && leg_span(img, n, false).dim() == n;
    r.check("reconstruction.full_" + label, "the legs of the range span A", full,
            full ? "" : "legs of the range of " + label + " span a proper subspace");
  }
  return r;
}

Report check_mixed_kernels(const FiniteAlgebra& A, const CanonicalMaps& m,
                           std::optional<ObstructionWitness>* witness) {
  const char* anchors[4] = {"Ker T1 = (A(x)1)(1-F1)(1(x)A)", "Ker T2 = (A(x)1)(1-F2)(1(x)A)",
                            "Ker T3 = (1(x)A)(1-F3)(A(x)1)", "Ker T4 = (1(x)A)(1-F4)(A(x)1)"};
  Report r;
  for (int i = 0; i < 4; ++i) {
    Subspace k = kernel(m.T[i]);
    Subspace s = kernel_generators(A, m, i);
    auto v = separating_vector(k, s);
    std::string label = "T" + std::to_string(i + 1);
    r.check("reconstruction.kernel_" + label, anchors[i], !v, v ? format_tensor(A, *v) : "");
    if (v && witness && !*witness)
      *witness = ObstructionWitness{label, {*v, m.E}, {}, std::nullopt,
                                    "lies in exactly one of the two sides of " + std::string(anchors[i])};
  }
  return r;
}

Report check_E_comultiplicativity(const FiniteAlgebra& A, const BuiltCoproducts& c) {
  std::size_t n = A.dim();
  Vector one = A.one();
  SparseVec e1 = tensor_then_one(c.E, one), one_e = one_then_tensor(one, c.E);
  SparseVec p12 = tmul3(A, e1, one_e), p21 = tmul3(A, one_e, e1);
  Report r;
  r.check("reconstruction.E_legs_commute", "(E(x)1)(1(x)E) = (1(x)E)(E(x)1)", p12 == p21);
  const Matrix* ds[2] = {&c.delta, &c.delta_prime};
  const char* names[2] = {"delta", "delta_prime"};
  for (int k = 0; k < 2; ++k) {
    std::string p = std::string("reconstruction.E_comultiplicative_") + names[k];
    r.check(p + "_second_leg", "(id (x) Delta)E = (E(x)1)(1(x)E)",
            apply_second_leg(*ds[k], c.E, n) == p12);
    r.check(p + "_first_leg", "(Delta (x) id)E = (E(x)1)(1(x)E)",
            apply_first_leg(*ds[k], c.E, n) == p12);
  }
  return r;
}

Report check_mixed_coassociativity(const FiniteAlgebra& A, const BuiltCoproducts& c) {
  std::size_t n = A.dim();
  std::string w1, w2;
  for (std::size_t a = 0; a < n; ++a) {
    Vector d = c.delta.column(a), dp = c.delta_prime.column(a);
    if (w1.empty() && apply_first_leg(c.delta_prime, d, n) != apply_second_leg(c.delta, dp, n))
      w1 = "on basis element " + A.labels()[a];
    if (w2.empty() && apply_first_leg(c.delta, dp, n) != apply_second_leg(c.delta_prime, d, n))
      w2 = "on basis element " + A.labels()[a];
  }
  Report r;
  r.check("reconstruction.mixed_coassociative_left", "(Delta' (x) id)Delta = (id (x) Delta)Delta'",
          w1.empty(), w1);
  r.check("reconstruction.mixed_coassociative_right", "(Delta (x) id)Delta' = (id (x) Delta')Delta",
          w2.empty(), w2);
  return r;
}

PipelineResult reconstruct_wmha(const Algebroid& alg, const std::vector<Vector>& candidates) {
  PipelineResult res;
  Report& rep = res.report;
  const FiniteAlgebra& A = alg.graphs.A;
  std::size_t n = A.dim();
  auto fail = [&](ObstructionStage stage, ObstructionWitness w, std::string narrative) {
    ObstructionReport o = make_obstruction(stage, std::move(w), std::move(narrative));
    o.counit = res.counit;
    o.counit_prime = res.counit_prime;
    res.obstruction = std::move(o);
    return res;
  };
  auto fail_report = [&](const Report& r, const std::string& narrative) {
    return fail(ObstructionStage::ConditionFailed,
                ObstructionWitness{r.first_failure()->name, {}, {}, std::nullopt, first_failure_text(r)},
                narrative);
  };
  try {
    auto base_data = find_separable_frobenius_base(alg.graphs, candidates);
    if (auto* o = std::get_if<ObstructionReport>(&base_data)) {
      rep.check("reconstruction.assumption", "B separable Frobenius with modular automorphism (S_C S_B)^-1",
                false, o->witness.text);
      res.obstruction = *o;
      return res;
    }
    const SeparabilityIdempotent& sep = std::get<SeparabilityIdempotent>(base_data);
    rep.check("reconstruction.assumption", "B separable Frobenius with modular automorphism (S_C S_B)^-1",
              true);
    rep.append(check_separability_idempotent(sep), "reconstruction.");

    BuiltCoproducts c = build_delta(alg, sep);
    Report rc = check_built_coproducts(alg, c);
    rep.append(rc);
    if (!rc.ok()) return fail_report(rc, "the coproducts built from E and the algebroid are not valid");

    Counits k = build_counits(alg, sep);
    res.counit = k.eps;
    res.counit_prime = k.eps_prime;
    Report rk = check_counit_laws(A, c, k);
    rep.append(rk);
    if (!rk.ok()) return fail_report(rk, "phi_B o eps_B or phi_C o eps_C is not a counit");

    Vector eps_s(n);
    for (std::size_t a = 0; a < n; ++a) eps_s[a] = dot(k.eps, alg.antipode.column(a));
    res.counits_equal = k.eps == k.eps_prime;
    res.counit_antipode_invariant = eps_s == k.eps;
    rep.check("reconstruction.counit_antipode_formula", "eps o S = eps'", eps_s == k.eps_prime,
              "eps o S = " + format_vector(eps_s) + " but eps' = " + format_vector(k.eps_prime));
    rep.check("reconstruction.meta_identity", "eps = eps' iff eps o S = eps",
              *res.counits_equal == *res.counit_antipode_invariant,
              "eps = eps' is " + std::string(*res.counits_equal ? "true" : "false") +
                  " while eps o S = eps is " + (*res.counit_antipode_invariant ? "true" : "false"));

    CanonicalMaps m = mixed_canonical_maps(alg, c);
    std::optional<ObstructionWitness> w;
    Report rr = check_ranges_and_fullness(A, m, &w);
    rep.append(rr);
    if (!rr.ok())
      return w ? fail(ObstructionStage::RangeConditionFailed, *w,
                      "a range of the canonical maps differs from E(A(x)A) or (A(x)A)E")
               : fail_report(rr, "the coproducts are not full");
    Report re = check_E_comultiplicativity(A, c);
    rep.append(re);
    if (!re.ok()) return fail_report(re, "E is not comultiplicative");
    Report rker = check_mixed_kernels(A, m, &w);
    rep.append(rker);
    if (!rker.ok())
      return fail(ObstructionStage::KernelConditionFailed, *w,
                  "a kernel of the canonical maps differs from its F-description");
    Report rm = check_mixed_coassociativity(A, c);
    rep.append(rm);
    if (!rm.ok()) return fail_report(rm, "Delta and Delta' are not jointly coassociative");

    if (!*res.counits_equal) {
      std::size_t a = 0;
      while (k.eps[a] == k.eps_prime[a]) ++a;
      rep.check("reconstruction.counits_equal", "eps = eps'", false,
                "on basis element " + A.labels()[a] + ": " + to_string(k.eps[a]) + " vs " +
                    to_string(k.eps_prime[a]));
      return fail(ObstructionStage::CounitsDiffer,
                  ObstructionWitness{"basis element", {c.E, sep.phi_B, sep.phi_C}, {}, a,
                                     "eps(" + A.labels()[a] + ") = " + to_string(k.eps[a]) +
                                         " but eps'(" + A.labels()[a] + ") = " + to_string(k.eps_prime[a])},
                  "the counits of Delta and Delta' differ, so the two coproducts cannot come from "
                  "one weak multiplier Hopf algebra");
    }
    rep.check("reconstruction.counits_equal", "eps = eps'", true);
    std::string dd;
    for (std::size_t a = 0; a < n && dd.empty(); ++a)
      if (c.delta.column(a) != c.delta_prime.column(a)) dd = "on basis element " + A.labels()[a];
    rep.check("reconstruction.coproducts_agree", "Delta = Delta' once eps = eps'", dd.empty(), dd);
    if (!dd.empty()) return fail_report(rep, "equal counits did not force Delta = Delta'");

    Wmha out{A, c.delta, k.eps, alg.antipode, c.E};
    Report rw = check_wmha(out);
    rep.append(rw, "reconstruction.");
    if (!rw.ok()) return fail_report(rw, "the assembled bundle fails the weak multiplier Hopf algebra suite");
    res.wmha = std::move(out);
  } catch (const std::exception& e) {
    rep.check("reconstruction.exception", "the pipeline runs to completion", false, e.what());
    return fail(ObstructionStage::ConditionFailed,
                ObstructionWitness{"exception", {}, {}, std::nullopt, e.what()},
                "the pipeline could not evaluate a stage");
  }
  return res;
}

namespace {

// Delta(e_a) and Delta'(e_a) straight from the stored representatives.
Vector delta_at(const Algebroid& alg, const Vector& e, std::size_t a) {
  return tmul(alg.graphs.A, e, alg.delta_B.column(a));
}
Vector delta_prime_at(const Algebroid& alg, const Vector& e, std::size_t a) {
  return tmul(alg.graphs.A, alg.delta_C.column(a), e);
}

bool in_span(const std::vector<Vector>& gens, const Vector& v) {
  return solve(Matrix::from_columns(v.size(), gens), v).has_value();
}

// Generators of both sides of a range or kernel equality, labelled T1..T4.
std::string validate_subspace_witness(const Algebroid& alg, const ObstructionWitness& w, bool range) {
  if (w.elements.size() < 2 || w.label.size() != 2) return "malformed witness";
  const FiniteAlgebra& A = alg.graphs.A;
  std::size_t n = A.dim();
  int i = w.label[1] - '1';
  if (i < 0 || i > 3) return "malformed witness";
  const Vector& v = w.elements[0];
  const Vector& e = w.elements[1];
  Vector one = A.one();
  auto T = [&](std::size_t a, std::size_t b) {
    Vector ea = tensor(A.basis_vector(a), one), eb = tensor(one, A.basis_vector(b));
    switch (i) {
      case 0: return tmul(A, delta_at(alg, e, a), eb);
      case 1: return tmul(A, ea, delta_prime_at(alg, e, b));
      case 2: return tmul(A, eb, delta_prime_at(alg, e, a));
      default: return tmul(A, delta_at(alg, e, b), ea);
    }
  };
  if (range) {
    std::vector<Vector> lhs, rhs;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        lhs.push_back(T(a, b));
        Vector ab = tensor(A.basis_vector(a), A.basis_vector(b));
        rhs.push_back(i == 0 || i == 3 ? tmul(A, e, ab) : tmul(A, ab, e));
      }
    return in_span(lhs, v) != in_span(rhs, v) ? "" : "witness lies on both or neither side";
  }
  Vector tv(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!is_zero(v[a * n + b])) axpy(tv, v[a * n + b], T(a, b));
  auto s_inv = inverse(alg.antipode);
  if (!s_inv) return "antipode is singular";
  const Matrix& S = alg.antipode;
  Matrix I = Matrix::identity(n);
  Vector f = i == 0 ? apply_legs(I, S, e) : i == 1 ? apply_legs(S, I, e)
           : i == 2 ? apply_legs(I, *s_inv, e) : apply_legs(*s_inv, I, e);
  Vector g = tensor(one, one) - f;
  std::vector<Vector> gens;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector a1 = tensor(A.basis_vector(a), one), b1 = tensor(one, A.basis_vector(b));
      gens.push_back(i < 2 ? tmul(A, tmul(A, a1, g), b1) : tmul(A, tmul(A, b1, g), a1));
    }
  return is_zero(tv) != in_span(gens, v) ? "" : "witness lies on both or neither side";
}

}  // namespace

std::string validate_obstruction(const Algebroid& alg, const ObstructionReport& r) {
  const QuantumGraphPair& g = alg.graphs;
  const FiniteAlgebra& B = g.B;
  const ObstructionWitness& w = r.witness;
  switch (r.stage) {
    case ObstructionStage::NotSeparableFrobenius: {
      if (w.elements.empty() || is_zero(w.elements[0])) return "no nonzero radical element";
      return radical_witness_valid(B, w.elements[0]) ? "" : "element is not in the radical";
    }
    case ObstructionStage::ModularAutomorphismMismatch: {
      if (w.elements.empty()) return "no central element to re-check";
      const Vector& z = w.elements[0];
      for (std::size_t j = 0; j < B.dim(); ++j)
        if (B.mul(z, B.basis_vector(j)) != B.mul(B.basis_vector(j), z)) return "element is not central";
      // (S_C S_B)^-1 z != z iff z != S_C S_B z.
      Vector moved = g.S_C.apply(g.S_B.apply(z));
      return moved != z ? "" : "(S_C S_B)^-1 fixes the element";
    }
    case ObstructionStage::CounitsDiffer: {
      if (w.elements.size() < 3 || !w.index) return "malformed witness";
      const FiniteAlgebra& A = g.A;
      std::size_t n = A.dim();
      const Vector& e = w.elements[0];
      Vector eps(n), eps_prime(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < B.dim(); ++i) eps[a] += w.elements[1][i] * alg.eps_B(i, a);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < g.C.dim(); ++j) eps_prime[a] += w.elements[2][j] * alg.eps_C(j, a);
      // A counit of Delta is unique, so eps' must break a counit law of Delta.
      bool breaks = false;
      for (std::size_t a = 0; a < n && !breaks; ++a) {
        Vector d = delta_at(alg, e, a);
        Vector left(n), right(n);
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            const Rational& x = d[p * n + q];
            if (is_zero(x)) continue;
            left[q] += eps_prime[p] * x;
            right[p] += eps_prime[q] * x;
          }
        breaks = left != A.basis_vector(a) || right != A.basis_vector(a);
      }
      std::size_t a = *w.index;
      bool differ = a < n && eps[a] != eps_prime[a];
      return breaks && differ ? "" : "counits agree with the laws of Delta";
    }
    case ObstructionStage::RangeConditionFailed: return validate_subspace_witness(alg, w, true);
    case ObstructionStage::KernelConditionFailed: return validate_subspace_witness(alg, w, false);
    case ObstructionStage::ConditionFailed: return w.text.empty() ? "no failure recorded" : "";
  }
  return "unknown stage";
}

}  // namespace wmha
