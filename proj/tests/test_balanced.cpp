#include "doctest.h"
#include "oracle.hpp"
#include "wmha/balanced.hpp"
#include "wmha/examples.hpp"
#include "wmha/groupoid.hpp"
#include "wmha/tensor.hpp"

using namespace wmha;

namespace {

constexpr BalancedKind kAllKinds[] = {BalancedKind::Left,   BalancedKind::Right,    BalancedKind::Source,
                                      BalancedKind::Target, BalancedKind::SourceUp, BalancedKind::TargetUp};

QuantumGraphPair graphs_of(const Wmha& w) { return graph_pair_from_wmha(w, compute_base_algebras(w)); }

}  // namespace

TEST_SUITE("balanced-tensor") {
  TEST_CASE("Hopf case: relations are vacuous and theta is the identity") {
    Wmha h = groupoid_convolution_wmha(group_as_groupoid(cyclic_group(2)));
    QuantumGraphPair g = graphs_of(h);
    for (BalancedKind k : kAllKinds) {
      CAPTURE(kind_name(k));
      BalancedSpace s(k, g);
      CHECK(s.dim() == 4);
      CHECK(section_matrix(s, g) == Matrix::identity(4));
    }
  }

  TEST_CASE("K(P2) quotients have the dimension of E(A (x) A)") {
    Groupoid p2 = pair_groupoid(2);
    Wmha w = groupoid_wmha(p2);
    QuantumGraphPair g = graphs_of(w);
    std::size_t pairs = oracle::composable_pairs(oracle::pair(2));
    REQUIRE(pairs == 8);
    for (BalancedKind k : kAllKinds) {
      CAPTURE(kind_name(k));
      BalancedSpace s(k, g);
      CHECK(s.dim() == pairs);
      CHECK(s.dim() + s.relation_dim() == 16);
      CHECK(rank(section_matrix(s, g)) == pairs);
    }
    // E(A (x) A) and (A (x) A)E.
    Vector E = *w.idempotent;
    CHECK(rank(tensor_left_mult(w.algebra, E)) == 8);
    CHECK(rank(tensor_right_mult(w.algebra, E)) == 8);
  }

  TEST_CASE("theta fixes a composable pair in the left quotient") {
    Wmha w = groupoid_wmha(pair_groupoid(2));
    QuantumGraphPair g = graphs_of(w);
    BalancedSpace l(BalancedKind::Left, g);
    Vector v = tensor(unit_vector(4, 1), unit_vector(4, 2));  // delta_12 (x) delta_21
    CHECK(section_matrix(l, g).apply(l.project(v)) == v);
  }

  TEST_CASE("image of theta_s is (A (x) 1)F1(1 (x) A)") {
    Wmha w = groupoid_wmha(pair_groupoid(2));
    QuantumGraphPair g = graphs_of(w);
    BalancedSpace s(BalancedKind::Source, g);
    Vector f1 = section_idempotent(BalancedKind::Source, g);
    oracle::Vec want_f1 = oracle::F1(oracle::pair(2));
    CHECK(f1 == Vector(want_f1.begin(), want_f1.end()));
    Subspace sandwiches(16);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        sandwiches.add(sandwich_left_right(w.algebra, f1, unit_vector(4, a), unit_vector(4, b)));
    CHECK(image(section_matrix(s, g)) == sandwiches);
  }

  TEST_CASE("section invariants on commutative and noncommutative bundles") {
    std::vector<std::pair<std::string, Wmha>> bundles{
        {"K(P2)", groupoid_wmha(pair_groupoid(2))},
        {"Q[P2]", groupoid_convolution_wmha(pair_groupoid(2))},
        {"M2 weighted", separability_wmha(weighted_separability_M2())}};
    for (const auto& [name, w] : bundles) {
      QuantumGraphPair g = graphs_of(w);
      for (BalancedKind k : kAllKinds) {
        CAPTURE(name);
        CAPTURE(kind_name(k));
        BalancedSpace s(k, g);
        Report r = check_section(s, g);
        if (!r.ok()) FAIL_CHECK(r.first_failure()->name << ": " << r.first_failure()->witness);
        // pi o theta = id on quotient coordinates.
        Matrix theta = section_matrix(s, g);
        for (std::size_t q = 0; q < s.dim(); ++q) CHECK(s.project(theta.column(q)) == unit_vector(s.dim(), q));
        // The relators are exactly the kernel of theta o pi.
        for (const Vector& rel : relators(k, g)) CHECK(is_zero(theta.apply(s.project(rel))));
      }
    }
  }

  TEST_CASE("left relation is respected by theta on basis triples") {
    Wmha w = separability_wmha(weighted_separability_M2());
    QuantumGraphPair g = graphs_of(w);
    BalancedSpace l(BalancedKind::Left, g);
    Matrix theta = section_matrix(l, g);
    const FiniteAlgebra& A = g.A;
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < g.B.dim(); ++i)
      for (std::size_t a = 0; a < n; a += 3)
        for (std::size_t b = 0; b < n; b += 5) {
          Vector lhs = tensor(A.mul(g.x(i), A.basis_vector(a)), A.basis_vector(b));
          Vector rhs = tensor(A.basis_vector(a), A.mul(g.S_B_of(i), A.basis_vector(b)));
          CHECK(theta.apply(l.project(lhs)) == theta.apply(l.project(rhs)));
          CHECK(l.equivalent(lhs, rhs));
        }
  }
}
