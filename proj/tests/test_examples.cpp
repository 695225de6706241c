#include "doctest.h"
#include "wmha/examples.hpp"
#include "wmha/groupoid.hpp"
#include "wmha/source_target.hpp"
#include "wmha/tensor.hpp"

using namespace wmha;

TEST_SUITE("examples-gen") {
  TEST_CASE("separability bundles on M_2") {
    for (const SeparabilityIdempotent& sep : {trace_separability_M2(), weighted_separability_M2()}) {
      Wmha w = separability_wmha(sep);
      CHECK(w.dim() == 16);
      CHECK(check_wmha(w).ok());
      CHECK(check_source_target(w).ok());
      CHECK(is_homomorphism(sep.B, w.algebra, separability_wmha_B_embedding(sep)));
      CHECK(is_homomorphism(sep.C, w.algebra, separability_wmha_C_embedding(sep)));
    }
    CHECK(weighted_trace(2, {1, 3}) == Vector{1, 0, 0, 3});
  }

  TEST_CASE("base-twisted algebroids are well formed for any automorphism") {
    FiniteAlgebra m2 = matrix_algebra(2);
    Matrix sigma = inner_automorphism(m2, Vector{1, 1, 0, 1});
    Algebroid alg = base_twisted_algebroid(m2, sigma);
    CHECK(alg.dim() == 16);
    CHECK(check_algebroid_axioms(alg).ok());
    CHECK(inner_automorphism(m2, Vector{1, 0, 0, 1}) == Matrix::identity(4));
    CHECK_THROWS_AS(inner_automorphism(m2, Vector{1, 0, 0, 0}), TwistConditionFailed);
  }

  TEST_CASE("scenario table") {
    CHECK(obstruction_scenario('1').name == "i");
    CHECK(obstruction_scenario('3').expected == ExpectedStage::ModularAutomorphismMismatch);
    CHECK(obstruction_scenario('4').expected == ExpectedStage::Success);
    CHECK(expected_stage_name(ExpectedStage::CounitsDiffer) == "CounitsDiffer");
    CHECK(expected_stage_name(ExpectedStage::Success) == "success");
  }

  TEST_CASE("twists") {
    Groupoid p3 = pair_groupoid(3);
    Wmha q = groupoid_convolution_wmha(p3);
    Matrix units = unit_embedding(p3);
    TwistData t = unit_weight_twist(3);
    CHECK(t.u == Vector{1, 2, 3});
    CHECK(t.v == Vector{1, Rational(1, 2), Rational(1, 3)});
    Wmha tw = twist_wmha(q, units, t);
    CHECK_FALSE(tw.delta == q.delta);
    Report r = check_wmha(tw);
    if (!r.ok()) FAIL_CHECK(r.first_failure()->name << ": " << r.first_failure()->witness);

    // u not invertible.
    CHECK_THROWS_AS(twist_wmha(q, units, TwistData{Vector{1, 0, 1}, Vector{1, 1, 1}}), TwistConditionFailed);

    SeparabilityIdempotent sep = weighted_separability_M2();
    Wmha w = separability_wmha(sep);
    Matrix bemb = separability_wmha_B_embedding(sep);
    CHECK_NOTHROW(twist_wmha(w, bemb, frozen_twist_M2()));
    // v u = [[1,1/2],[0,1]] is fine; a scalar multiple breaks E(vu (x) 1)E = E.
    CHECK_THROWS_AS(twist_wmha(w, bemb, TwistData{Vector{2, 0, 0, 2}, Vector{1, 0, 0, 1}}), TwistConditionFailed);

    auto found = search_twist(w, bemb, 1);
    REQUIRE(found.has_value());
    Wmha tf = twist_wmha(w, bemb, *found);
    CHECK_FALSE(tf.delta == w.delta);
    CHECK_FALSE(sep.B.mul(found->v, found->u) == sep.B.one());
  }
}
