#include "doctest.h"
#include "wmha/algebroid.hpp"
#include "wmha/examples.hpp"
#include "wmha/groupoid.hpp"
#include "wmha/reconstruction.hpp"

using namespace wmha;

namespace {

// eps = eps' iff eps o S = eps, and eps o S = eps' whenever both exist.
void check_meta_identity(const PipelineResult& p) {
  REQUIRE(p.counit.has_value());
  REQUIRE(p.counit_prime.has_value());
  REQUIRE(p.counits_equal.has_value());
  REQUIRE(p.counit_antipode_invariant.has_value());
  CHECK(*p.counits_equal == (*p.counit == *p.counit_prime));
  CHECK(*p.counits_equal == *p.counit_antipode_invariant);
}

}  // namespace

TEST_SUITE("reconstruction") {
  TEST_CASE("K(P2) round trip is exact") {
    Wmha w = groupoid_wmha(pair_groupoid(2));
    ForwardResult f = forward_construct(w);
    PipelineResult p = reconstruct_wmha(f.algebroid);
    REQUIRE(p.ok());
    CHECK(p.wmha->delta == w.delta);
    CHECK(p.wmha->counit == w.counit);
    CHECK(p.wmha->antipode == w.antipode);
    CHECK(p.wmha->idempotent == w.idempotent);
    CHECK(p.report.ok());
    check_meta_identity(p);
  }

  TEST_CASE("center and required modular automorphism") {
    CHECK(center_basis(matrix_algebra(2)).size() == 1);
    CHECK(center_basis(function_algebra(2)).size() == 2);
    CHECK(center_basis(direct_sum(matrix_algebra(2), scalar_algebra())).size() == 2);
    // Scenario iv: sigma = Ad diag(1,2), S_B = id, S_C = sigma^-1, so
    // (S_C S_B)^-1 = sigma.
    ObstructionScenario iv = obstruction_scenario('4');
    CHECK(required_modular_automorphism(iv.algebroid.graphs) ==
          inner_automorphism(matrix_algebra(2), Vector{1, 0, 0, 2}));
  }

  TEST_CASE("obstruction scenarios reach their stage with valid witnesses") {
    struct Case {
      char code;
      std::optional<ObstructionStage> stage;
    };
    for (Case c : {Case{'1', ObstructionStage::NotSeparableFrobenius},
                   Case{'2', ObstructionStage::NotSeparableFrobenius},
                   Case{'3', ObstructionStage::ModularAutomorphismMismatch}, Case{'4', std::nullopt}}) {
      CAPTURE(c.code);
      ObstructionScenario sc = obstruction_scenario(c.code);
      PipelineResult p = reconstruct_wmha(sc.algebroid);
      if (!c.stage) {
        REQUIRE(p.ok());
        CHECK(check_wmha(*p.wmha).ok());
        check_meta_identity(p);
        continue;
      }
      REQUIRE(p.obstruction.has_value());
      CHECK(p.obstruction->stage == *c.stage);
      CHECK(validate_obstruction(sc.algebroid, *p.obstruction) == "");
    }
  }

  TEST_CASE("tampered witnesses are rejected") {
    ObstructionScenario i = obstruction_scenario('1');
    PipelineResult p = reconstruct_wmha(i.algebroid);
    REQUIRE(p.obstruction.has_value());
    ObstructionReport bad = *p.obstruction;
    bad.witness.elements = {Vector{1, 0}};  // the unit is not in the radical
    CHECK(validate_obstruction(i.algebroid, bad) != "");

    ObstructionScenario iii = obstruction_scenario('3');
    PipelineResult q = reconstruct_wmha(iii.algebroid);
    REQUIRE(q.obstruction.has_value());
    ObstructionReport bad_z = *q.obstruction;
    bad_z.witness.elements = {Vector{1, 1}};  // the unit is fixed by every automorphism
    CHECK(validate_obstruction(iii.algebroid, bad_z) != "");
  }

  TEST_CASE("convolution twist: counits differ on a non-unit arrow") {
    Groupoid p2 = pair_groupoid(2);
    Wmha w = groupoid_convolution_wmha(p2);
    Algebroid alg = mixed_algebroid(w, unit_embedding(p2), unit_weight_twist(2));
    PipelineResult p = reconstruct_wmha(alg);
    REQUIRE(p.obstruction.has_value());
    CHECK(p.obstruction->stage == ObstructionStage::CounitsDiffer);
    REQUIRE(p.obstruction->witness.index.has_value());
    std::size_t a = *p.obstruction->witness.index;
    CHECK_FALSE(p2.is_unit(a));
    CHECK((*p.counit)[a] != (*p.counit_prime)[a]);
    CHECK(validate_obstruction(alg, *p.obstruction) == "");
    check_meta_identity(p);
    CHECK_FALSE(*p.counits_equal);

    // A forged index where the counits agree is rejected.
    ObstructionReport forged = *p.obstruction;
    forged.witness.index = p2.units()[0];
    CHECK(validate_obstruction(alg, forged) != "");
  }

  TEST_CASE("M_2 twist: the mixed algebroid reconstructs to a third bundle") {
    SeparabilityIdempotent sep = weighted_separability_M2();
    Wmha w = separability_wmha(sep);
    Algebroid alg = mixed_algebroid(w, separability_wmha_B_embedding(sep), frozen_twist_M2());
    PipelineResult p = reconstruct_wmha(alg);
    REQUIRE(p.ok());
    CHECK_FALSE(p.wmha->delta == w.delta);
    check_meta_identity(p);
    // Its forward algebroid is the mixed algebroid again.
    Algebroid back = forward_construct(*p.wmha).algebroid;
    BalancedSpaces sp(alg.graphs);
    for (std::size_t a = 0; a < alg.dim(); ++a) {
      CHECK(sp.l.equivalent(back.delta_B.column(a), alg.delta_B.column(a)));
      CHECK(sp.r.equivalent(back.delta_C.column(a), alg.delta_C.column(a)));
    }
  }

  TEST_CASE("a malformed algebroid is reported, not thrown") {
    Algebroid alg = forward_construct(groupoid_wmha(pair_groupoid(2))).algebroid;
    alg.eps_B(0, 0) += 1;
    PipelineResult p;
    CHECK_NOTHROW(p = reconstruct_wmha(alg));
    REQUIRE(p.obstruction.has_value());
    CHECK_FALSE(p.ok());
    CHECK_FALSE(p.report.ok());
  }

  TEST_CASE("caller candidates are honoured and bad ones skipped") {
    Wmha w = separability_wmha(weighted_separability_M2());
    Algebroid alg = forward_construct(w).algebroid;
    auto found = find_separable_frobenius_base(alg.graphs);
    REQUIRE(std::holds_alternative<SeparabilityIdempotent>(found));
    Vector phi = std::get<SeparabilityIdempotent>(found).phi_B;
    auto again = find_separable_frobenius_base(alg.graphs, {zero_vector(phi.size()), phi});
    REQUIRE(std::holds_alternative<SeparabilityIdempotent>(again));
    CHECK(std::get<SeparabilityIdempotent>(again).phi_B == phi);
    PipelineResult p = reconstruct_wmha(alg, {phi});
    REQUIRE(p.ok());
    CHECK(p.wmha->delta == w.delta);
  }
}
