#include "doctest.h"
#include "oracle.hpp"
#include "wmha/algebroid.hpp"
#include "wmha/examples.hpp"
#include "wmha/groupoid.hpp"
#include "wmha/tensor.hpp"

using namespace wmha;

namespace {

void require_ok(const Report& r) {
  if (!r.ok()) FAIL_CHECK(r.first_failure()->name << ": " << r.first_failure()->witness);
}

}  // namespace

TEST_SUITE("algebroid-core") {
  TEST_CASE("K(P2) forward construction") {
    Groupoid p2 = pair_groupoid(2);
    ForwardResult f = forward_construct(groupoid_wmha(p2));
    require_ok(f.report);
    const Algebroid& alg = f.algebroid;
    CHECK(alg.graphs.B.dim() == p2.units().size());
    CHECK(alg.graphs.C.dim() == p2.units().size());
    BalancedSpaces sp(alg.graphs);
    AlgebroidCanonicalMaps m = algebroid_canonical_maps(alg, sp);
    for (const Matrix* t : {&m.T_rho, &m.T_lambda, &m.lambda_T, &m.rho_T}) {
      CHECK(t->rows() == 8);
      CHECK(t->cols() == 8);
      CHECK(rank(*t) == 8);
    }
  }

  TEST_CASE("Hopf case: Delta_B = Delta and eps_B = eps(.)1") {
    Wmha h = groupoid_convolution_wmha(group_as_groupoid(cyclic_group(3)));
    ForwardResult f = forward_construct(h);
    require_ok(f.report);
    const Algebroid& alg = f.algebroid;
    CHECK(alg.delta_B == h.delta);
    CHECK(alg.delta_C == h.delta);
    for (std::size_t a = 0; a < h.dim(); ++a)
      CHECK(embed_B(alg, alg.eps_B.column(a)) == h.counit[a] * h.algebra.one());
  }

  TEST_CASE("separability bundle: Delta_B(yx) = y (x) x and eps_B(xy) = x S_B^-1(y)") {
    SeparabilityIdempotent sep = weighted_separability_M2();
    Wmha w = separability_wmha(sep);
    Matrix bemb = separability_wmha_B_embedding(sep);
    Matrix cemb = separability_wmha_C_embedding(sep);
    ForwardResult f = forward_construct(w);
    require_ok(f.report);
    const Algebroid& alg = f.algebroid;
    const FiniteAlgebra& A = w.algebra;
    BalancedSpace l(BalancedKind::Left, alg.graphs);
    BalancedSpace r(BalancedKind::Right, alg.graphs);
    Matrix s_inv = *inverse(w.antipode);
    std::size_t db = sep.B.dim();
    for (std::size_t c = 0; c < sep.C.dim(); ++c)
      for (std::size_t b = 0; b < db; ++b) {
        std::size_t a = c * db + b;  // basis element y_c x_b
        Vector y = cemb.column(c), x = bemb.column(b);
        CHECK(A.mul(y, x) == A.basis_vector(a));
        CHECK(l.equivalent(alg.delta_B.column(a), tensor(y, x)));
        CHECK(r.equivalent(alg.delta_C.column(a), tensor(y, x)));
        CHECK(embed_B(alg, alg.eps_B.column(a)) == A.mul(x, s_inv.apply(y)));
      }
  }

  TEST_CASE("every forward algebroid of a corpus bundle passes") {
    std::vector<std::pair<std::string, Wmha>> bundles{
        {"K(P1)", groupoid_wmha(pair_groupoid(1))},
        {"K(P3)", groupoid_wmha(pair_groupoid(3))},
        {"K(Z/2)", groupoid_wmha(group_as_groupoid(cyclic_group(2)))},
        {"Q[P3]", groupoid_convolution_wmha(pair_groupoid(3))},
        {"M2 trace", separability_wmha(trace_separability_M2())}};
    for (const auto& [name, w] : bundles) {
      CAPTURE(name);
      ForwardResult f = forward_construct(w);
      require_ok(f.report);
      // eps_B(A) = B and eps_C(A) = C.
      CHECK(rank(f.algebroid.eps_B) == f.algebroid.graphs.B.dim());
      CHECK(rank(f.algebroid.eps_C) == f.algebroid.graphs.C.dim());
    }
  }

  TEST_CASE("constructed twisted algebroids pass the axioms") {
    SeparabilityIdempotent sep = weighted_separability_M2();
    require_ok(check_algebroid_axioms(
        mixed_algebroid(separability_wmha(sep), separability_wmha_B_embedding(sep), frozen_twist_M2())));
    Groupoid p2 = pair_groupoid(2);
    require_ok(check_algebroid_axioms(
        mixed_algebroid(groupoid_convolution_wmha(p2), unit_embedding(p2), unit_weight_twist(2))));
    for (char c : {'1', '2', '3', '4'}) {
      CAPTURE(c);
      require_ok(check_algebroid_axioms(obstruction_scenario(c).algebroid));
    }
  }

  TEST_CASE("mutations of the algebroid data are detected") {
    Algebroid alg = forward_construct(groupoid_wmha(pair_groupoid(2))).algebroid;
    // delta_12 (x) delta_12 lies in the left relations, so adding it leaves
    // Delta_B unchanged in the quotient.
    Algebroid same = alg;
    same.delta_B(1 * 4 + 1, 1) += 1;
    CHECK(check_algebroid_axioms(same).ok());
    // delta_12 (x) delta_21 is composable and survives.
    Algebroid bad_delta = alg;
    bad_delta.delta_B(1 * 4 + 2, 1) += 1;
    Report r1 = check_algebroid_axioms(bad_delta);
    REQUIRE_FALSE(r1.ok());
    CHECK_FALSE(r1.first_failure()->witness.empty());

    Algebroid bad_eps = alg;
    bad_eps.eps_C(0, 1) += 1;
    Report r2 = check_algebroid_axioms(bad_eps);
    REQUIRE_FALSE(r2.ok());
    CHECK_FALSE(r2.first_failure()->witness.empty());

    Algebroid bad_s = alg;
    bad_s.antipode(0, 1) += 1;
    CHECK_FALSE(check_algebroid_axioms(bad_s).ok());
  }

  TEST_CASE("a base that does not cover A fails the quantum graph precondition") {
    Groupoid p2 = pair_groupoid(2);
    Algebroid alg = forward_construct(groupoid_wmha(p2)).algebroid;
    // B = span{chi_source=1}, C = span{chi_target=1}: subalgebras with BA != A.
    Vector chi_s{1, 0, 1, 0}, chi_t{1, 1, 0, 0};
    QuantumGraphPair& g = alg.graphs;
    g.B = scalar_algebra();
    g.C = scalar_algebra();
    g.B_emb = Matrix::from_columns(4, {chi_s});
    g.C_emb = Matrix::from_columns(4, {chi_t});
    g.S_B = Matrix::identity(1);
    g.S_C = Matrix::identity(1);
    g.E.reset();
    Report r = check_quantum_graphs(alg);
    CHECK(r.find("graph.B_subalgebra")->status == Status::Pass);
    CHECK(r.find("graph.B_nondegenerate_in_A")->status == Status::Fail);
    CHECK_FALSE(r.find("graph.B_nondegenerate_in_A")->witness.empty());
  }
}
