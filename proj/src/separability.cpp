#include "wmha/separability.hpp"

#include "wmha/tensor.hpp"
#include "wmha/wmha.hpp"

namespace wmha {

Matrix gram_matrix(const FiniteAlgebra& b, const Vector& phi) {
  std::size_t d = b.dim();
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, q] : b.product(i, j)) g(i, j) += phi[k] * q;
  return g;
}

bool is_faithful(const FiniteAlgebra& b, const Vector& phi) {
  return rank(gram_matrix(b, phi)) == b.dim();
}

Matrix modular_automorphism(const FiniteAlgebra& b, const Vector& phi) {
  Matrix g = gram_matrix(b, phi);
  auto g_inv = inverse(g);
  if (!g_inv) throw NotFaithful("functional is not faithful: Gram matrix is singular");
  // G[i][j] = phi(b_j sigma(b_i)) = (G sigma)[j][i].
  Matrix sigma = *g_inv * g.transpose();
  if (!is_homomorphism(b, b, sigma) || !inverse(sigma))
    throw NoModularAutomorphism("solution of the modular equation is not an automorphism");
  Vector phi_sigma(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) phi_sigma[i] = dot(phi, sigma.column(i));
  if (phi_sigma != phi) throw NoModularAutomorphism("functional is not invariant under sigma");
  return sigma;
}

Vector dual_basis_element(const FiniteAlgebra& b, const Vector& phi, const Matrix& s_b) {
  auto d = inverse(gram_matrix(b, phi));
  if (!d) throw NotFaithful("functional is not faithful: Gram matrix is singular");
  std::size_t db = b.dim(), dc = s_b.rows();
  Vector e(db * dc);
  // b^i = sum_m D[m][i] b_m, so E = sum_i b_i (x) sum_m D[m][i] S_B(b_m).
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t m = 0; m < db; ++m) {
      if (is_zero((*d)(m, i))) continue;
      for (std::size_t c = 0; c < dc; ++c) e[i * dc + c] += (*d)(m, i) * s_b(c, m);
    }
  return e;
}

void derive_antipodal_data(SeparabilityIdempotent& sep) {
  auto s_b_inv = inverse(sep.S_B);
  auto sigma_inv = inverse(sep.sigma_B);
  if (!s_b_inv || !sigma_inv) throw std::invalid_argument("S_B or sigma_B is not invertible");
  sep.S_C = *sigma_inv * *s_b_inv;
  std::size_t dc = sep.C.dim();
  sep.phi_C = Vector(dc);
  for (std::size_t c = 0; c < dc; ++c) sep.phi_C[c] = dot(sep.phi_B, s_b_inv->column(c));
  sep.sigma_C = sep.S_B * sep.S_C;
}

std::variant<SeparabilityIdempotent, NotIdempotentResult> build_E_from_functional(
    const FiniteAlgebra& b, const Vector& phi, const FiniteAlgebra& c, const Matrix& s_b) {
  Matrix sigma = modular_automorphism(b, phi);
  Vector e = dual_basis_element(b, phi, s_b);
  Vector e2 = tmul2(b, c, e, e);
  if (e2 != e) return NotIdempotentResult{e, e2 - e};
  SeparabilityIdempotent sep{b, c, e, s_b, Matrix(), phi, Vector(), sigma, Matrix()};
  derive_antipodal_data(sep);
  return sep;
}

std::optional<FunctionalPair> functional_from_E(const FiniteAlgebra& b, const FiniteAlgebra& c,
                                                const Vector& e) {
  std::size_t db = b.dim(), dc = c.dim();
  if (!b.unit() || !c.unit()) return std::nullopt;
  Matrix mb(dc, db), mc(db, dc);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < dc; ++j) {
      mb(j, i) = e[i * dc + j];
      mc(i, j) = e[i * dc + j];
    }
  auto sb = solve(mb, *c.unit());
  auto sc = solve(mc, *b.unit());
  if (!sb || !sc || !sb->kernel_basis.empty() || !sc->kernel_basis.empty()) return std::nullopt;
  return FunctionalPair{sb->particular, sc->particular};
}

Report check_separability_idempotent(const SeparabilityIdempotent& sep) {
  const FiniteAlgebra& B = sep.B;
  const FiniteAlgebra& C = sep.C;
  std::size_t db = B.dim(), dc = C.dim();
  Vector one_b = B.one(), one_c = C.one();
  Report r;
  Vector e2 = tmul2(B, C, sep.E, sep.E);
  r.check("separability.idempotent", "E^2 = E", e2 == sep.E, "E^2 - E = " + format_vector(e2 - sep.E));

  std::string wit;
  for (std::size_t x = 0; x < db && wit.empty(); ++x) {
    Vector lhs = tmul2(B, C, sep.E, tensor(B.basis_vector(x), one_c));
    Vector rhs = tmul2(B, C, sep.E, tensor(one_b, sep.S_B.column(x)));
    if (lhs != rhs) wit = "E(x(x)1) != E(1(x)S_B(x)) at basis " + std::to_string(x);
  }
  r.check("separability.left_antipodal", "E(x(x)1) = E(1(x)S_B(x))", wit.empty(), wit);

  wit.clear();
  for (std::size_t y = 0; y < dc && wit.empty(); ++y) {
    Vector lhs = tmul2(B, C, tensor(one_b, C.basis_vector(y)), sep.E);
    Vector rhs = tmul2(B, C, tensor(sep.S_C.column(y), one_c), sep.E);
    if (lhs != rhs) wit = "(1(x)y)E != (S_C(y)(x)1)E at basis " + std::to_string(y);
  }
  r.check("separability.right_antipodal", "(1(x)y)E = (S_C(y)(x)1)E", wit.empty(), wit);

  Vector sl = slice_first(sep.phi_B, sep.E, db, dc);
  r.check("separability.left_integral", "(phi_B(x)id)E = 1", sl == one_c, "got " + format_vector(sl));
  Vector sr = slice_second(sep.phi_C, sep.E, db, dc);
  r.check("separability.right_integral", "(id(x)phi_C)E = 1", sr == one_b, "got " + format_vector(sr));

  wit.clear();
  for (std::size_t x = 0; x < db && wit.empty(); ++x) {
    Vector phx(db);
    for (std::size_t i = 0; i < db; ++i) phx[i] = dot(sep.phi_B, B.mul(B.basis_vector(i), B.basis_vector(x)));
    if (slice_first(phx, sep.E, db, dc) != sep.S_B.column(x))
      wit = "(phi_B(.x)(x)id)E != S_B(x) at basis " + std::to_string(x);
  }
  r.check("separability.defining_equation", "(phi_B(.x)(x)id)E = S_B(x)", wit.empty(), wit);

  wit.clear();
  for (std::size_t y = 0; y < dc && wit.empty(); ++y) {
    Vector phy(dc);
    for (std::size_t j = 0; j < dc; ++j) phy[j] = dot(sep.phi_C, C.mul(C.basis_vector(y), C.basis_vector(j)));
    if (slice_second(phy, sep.E, db, dc) != sep.S_C.column(y))
      wit = "(id(x)phi_C(y.))E != S_C(y) at basis " + std::to_string(y);
  }
  r.check("separability.right_defining_equation", "(id(x)phi_C(y.))E = S_C(y)", wit.empty(), wit);

  auto s_b_inv = inverse(sep.S_B);
  auto sigma_inv = inverse(sep.sigma_B);
  bool sc_ok = s_b_inv && sigma_inv && sep.S_C == *sigma_inv * *s_b_inv;
  r.check("separability.S_C_formula", "S_C = sigma_B^-1 S_B^-1", sc_ok, "S_C differs");

  std::string sig_wit;
  bool sig_ok = false;
  try {
    Matrix sigma_c = modular_automorphism(C, sep.phi_C);
    sig_ok = sigma_c == sep.S_B * sep.S_C && sigma_c == sep.sigma_C;
    if (!sig_ok) sig_wit = "modular automorphism of phi_C differs from S_B S_C";
  } catch (const std::exception& e) {
    sig_wit = e.what();
  }
  r.check("separability.sigma_C_formula", "sigma_C = S_B S_C", sig_ok, sig_wit);
  return r;
}

Vector regular_trace(const FiniteAlgebra& b) {
  std::size_t d = b.dim();
  Vector t(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, q] : b.product(i, j))
        if (k == j) t[i] += q;
  return t;
}

Subspace trace_form_radical(const FiniteAlgebra& b) {
  return kernel(gram_matrix(b, regular_trace(b)));
}

bool radical_witness_valid(const FiniteAlgebra& b, const Vector& x) {
  if (is_zero(x)) return false;
  std::size_t d = b.dim();
  for (std::size_t j = 0; j < d; ++j) {
    Matrix l = b.left_mult(b.mul(x, b.basis_vector(j)));
    Matrix p = l;
    for (std::size_t k = 1; k < d; ++k) p = p * l;
    if (!p.is_zero()) return false;
  }
  return true;
}

FrobeniusVerdict certify_separable_frobenius(const FiniteAlgebra& b,
                                             const std::vector<Vector>& candidates) {
  Subspace rad = trace_form_radical(b);
  if (rad.dim() > 0) return FrobeniusRefutation{rad.basis().front()};
  FiniteAlgebra op = opposite_algebra(b);
  Matrix id = Matrix::identity(b.dim());
  std::vector<Vector> all = candidates;
  all.push_back(regular_trace(b));
  for (const auto& phi : all) {
    if (phi.size() != b.dim() || !is_faithful(b, phi)) continue;
    try {
      auto res = build_E_from_functional(b, phi, op, id);
      if (auto* sep = std::get_if<SeparabilityIdempotent>(&res))
        return FrobeniusCertificate{phi, sep->sigma_B, sep->E};
    } catch (const std::invalid_argument&) {
    }
  }
  return Inconclusive{};
}

std::vector<Vector> functionals_with_modular_automorphism(const FiniteAlgebra& b,
                                                          const Matrix& sigma) {
  std::size_t d = b.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      rows.push_back(b.mul(b.basis_vector(i), b.basis_vector(j)) - b.mul(b.basis_vector(j), sigma.column(i)));
  return kernel(Matrix::from_rows(d, rows)).basis();
}

}  // namespace wmha
