#include "corpus.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "wmha/groupoid.hpp"
#include "wmha/separability.hpp"
#include "wmha/source_target.hpp"

using namespace wmha;

namespace {

Vector to_vector(const oracle::Vec& v) { return Vector(v.begin(), v.end()); }

// Indicator of the arrows with source (or target) equal to the unit u.
Vector chi(const Groupoid& g, std::size_t u, bool by_source) {
  Vector v(g.size());
  for (std::size_t p = 0; p < g.size(); ++p)
    if ((by_source ? g.source[p] : g.target[p]) == u) v[p] = 1;
  return v;
}

}  // namespace

TEST_SUITE("source-target") {
  TEST_CASE("source and target maps agree with pointwise evaluation") {
    for (const auto& c : corpus::groupoids()) {
      CAPTURE(c.name);
      Wmha w = groupoid_wmha(c.g);
      Matrix es = source_map(w), et = target_map(w);
      for (std::size_t r = 0; r < c.g.size(); ++r) {
        CHECK(es.column(r) == to_vector(oracle::source_map(c.raw, r)));
        CHECK(et.column(r) == to_vector(oracle::target_map(c.raw, r)));
      }
    }
    Wmha p2 = groupoid_wmha(pair_groupoid(2));
    CHECK(source_map(p2).column(0) == Vector{1, 0, 1, 0});
    CHECK(target_map(p2).column(0) == Vector{1, 1, 0, 0});
  }

  TEST_CASE("Hopf case: eps_s(a) = eps(a) 1 and the bases are scalars") {
    Wmha h = groupoid_convolution_wmha(group_as_groupoid(cyclic_group(2)));
    Matrix es = source_map(h);
    for (std::size_t a = 0; a < 2; ++a) CHECK(es.column(a) == h.counit[a] * h.algebra.one());
    BaseAlgebraData d = compute_base_algebras(h);
    CHECK(d.B.dim() == 1);
    CHECK(d.C.dim() == 1);
  }

  TEST_CASE("base algebras of K(P2)") {
    Groupoid g = pair_groupoid(2);
    Wmha w = groupoid_wmha(g);
    BaseAlgebraData d = compute_base_algebras(w);
    REQUIRE(d.B.dim() == 2);
    REQUIRE(d.C.dim() == 2);
    std::vector<std::size_t> units = g.units();
    Subspace b = image(d.B_emb), want_b(4), want_c(4);
    for (std::size_t u : units) {
      want_b.add(chi(g, u, true));
      want_c.add(chi(g, u, false));
      // S_B(chi_source=u) = chi_target=u.
      CHECK(w.antipode.apply(chi(g, u, true)) == chi(g, u, false));
    }
    CHECK(b == want_b);
    CHECK(image(d.C_emb) == want_c);
    // B is unital, so A_s = B.
    CHECK(check_characterizations(w, d).ok());
    // phi_B(chi_source=u) = 1.
    REQUIRE(d.phi_B.has_value());
    for (std::size_t u : units) {
      auto x = coordinates(d.B_emb, chi(g, u, true));
      REQUIRE(x.has_value());
      CHECK(dot(*d.phi_B, *x) == 1);
    }
  }

  TEST_CASE("integrals recovered from E satisfy both slice equations") {
    for (const auto& e : corpus::wmhas()) {
      CAPTURE(e.name);
      BaseAlgebraData d = compute_base_algebras(e.w);
      REQUIRE_FALSE(d.E.empty());
      auto f = functional_from_E(d.B, d.C, d.E);
      REQUIRE(f.has_value());
      std::size_t dc = d.C.dim(), db = d.B.dim();
      // (phi_B (x) id)E = 1 and (id (x) phi_C)E = 1 in coordinates.
      Vector left(dc), right(db);
      for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < dc; ++j) {
          left[j] += f->phi_B[i] * d.E[i * dc + j];
          right[i] += f->phi_C[j] * d.E[i * dc + j];
        }
      CHECK(left == d.C.one());
      CHECK(right == d.B.one());
    }
  }

  TEST_CASE("corpus bundles pass the source-target suite") {
    for (const auto& e : corpus::wmhas()) {
      CAPTURE(e.name);
      Report r = check_source_target(e.w);
      if (!r.ok()) FAIL_CHECK(r.first_failure()->name << ": " << r.first_failure()->witness);
    }
  }

  TEST_CASE("corrupted coproduct breaks the characterization") {
    Wmha w = groupoid_wmha(pair_groupoid(2));
    w.delta(0, 1) += 1;
    w.idempotent.reset();
    Report r = check_source_target(w);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.first_failure()->witness.empty());
  }
}
