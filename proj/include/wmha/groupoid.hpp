#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wmha/algebra.hpp"
#include "wmha/verdict.hpp"
#include "wmha/wmha.hpp"

namespace wmha {

class InvalidGroupoid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidAction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite groupoid. p*q is defined iff source(p) == target(q); units are
// arrows, and source/target return the index of a unit arrow.
struct Groupoid {
  std::vector<std::string> labels;
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;
  std::vector<std::size_t> inverse;
  // compose[p * N + q] is p*q, or -1 when undefined.
  std::vector<long> compose;

  std::size_t size() const { return labels.size(); }
  bool is_unit(std::size_t p) const { return source[p] == p; }
  std::optional<std::size_t> product(std::size_t p, std::size_t q) const;
  std::vector<std::size_t> units() const;
};

// Throws InvalidGroupoid naming the violated invariant.
void validate_groupoid(const Groupoid& g);

Groupoid pair_groupoid(std::size_t n);
// group[g][h] is the index of g*h.
using GroupTable = std::vector<std::vector<std::size_t>>;
GroupTable cyclic_group(std::size_t n);
Groupoid group_as_groupoid(const GroupTable& group);
// action[h][x] is h.x. Arrows (h.x, h, x) are indexed h * |X| + x.
Groupoid action_groupoid(const GroupTable& group, std::size_t set_size,
                         const std::vector<std::vector<std::size_t>>& action);

// Convolution algebra QG: p q is the composite when defined and 0 otherwise,
// Delta(p) = p(x)p, eps(p) = 1, S(p) = p^-1.
Wmha groupoid_convolution_wmha(const Groupoid& g);
// Unit arrows as columns in the arrow basis; spans the base algebra of QG.
Matrix unit_embedding(const Groupoid& g);

// Point-mass basis of the function algebra K(G).
FiniteAlgebra groupoid_algebra(const Groupoid& g);
// Columns Delta(delta_r) = sum over p*q = r of delta_p (x) delta_q.
Matrix groupoid_coproduct(const Groupoid& g);
// Composability indicator.
Vector groupoid_E(const Groupoid& g);
Matrix groupoid_antipode(const Groupoid& g);
Vector groupoid_counit(const Groupoid& g);
Wmha groupoid_wmha(const Groupoid& g);

// Pair groupoid on the natural numbers, presented by its arrow oracle.
// Arrow (i, j) has target i and source j; (i, j)(j, k) = (i, k).
class LazyPairGroupoid {
 public:
  using Arrow = std::pair<std::uint64_t, std::uint64_t>;
  using Elem = std::map<Arrow, Rational>;
  using Elem2 = std::map<std::pair<Arrow, Arrow>, Rational>;
  using Elem3 = std::map<std::tuple<Arrow, Arrow, Arrow>, Rational>;

  static std::optional<Arrow> compose(const Arrow& p, const Arrow& q);
  static Arrow inverse(const Arrow& p) { return {p.second, p.first}; }
  static bool is_unit(const Arrow& p) { return p.first == p.second; }

  static Elem mul(const Elem& a, const Elem& b);
  static Elem antipode(const Elem& a);
  static Rational counit(const Elem& a);
  // The four covered slices of the coproduct; each is finitely supported.
  static Elem2 delta_times_one_b(const Elem& a, const Elem& b);  // Delta(a)(1(x)b)
  static Elem2 a_one_times_delta(const Elem& a, const Elem& b);  // (a(x)1)Delta(b)
  static Elem2 one_b_times_delta(const Elem& a, const Elem& b);  // (1(x)b)Delta(a)
  static Elem2 delta_times_a_one(const Elem& a, const Elem& b);  // Delta(b)(a(x)1)
};

// Runs the element-level checks exactly on finitely supported probes and the
// multiplier-level checks on the probe set of the first `probe_units` units.
Report check_lazy_pair_groupoid(std::size_t probe_units);

}  // namespace wmha
