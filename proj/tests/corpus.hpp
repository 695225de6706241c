#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "wmha/examples.hpp"
#include "wmha/groupoid.hpp"

namespace corpus {

struct Entry {
  std::string name;
  wmha::Wmha w;
};

// Every bundle the acceptance suite iterates over.
inline std::vector<Entry> wmhas() {
  using namespace wmha;
  std::vector<Entry> out;
  for (std::size_t n = 1; n <= 4; ++n)
    out.push_back({"K(P" + std::to_string(n) + ")", groupoid_wmha(pair_groupoid(n))});
  out.push_back({"K(Z/2)", groupoid_wmha(group_as_groupoid(cyclic_group(2)))});
  out.push_back({"K(Z/2 x {1,2})", groupoid_wmha(action_groupoid(cyclic_group(2), 2, {{0, 1}, {1, 0}}))});
  out.push_back({"Q[P2]", groupoid_convolution_wmha(pair_groupoid(2))});
  out.push_back({"Q[P3]", groupoid_convolution_wmha(pair_groupoid(3))});
  out.push_back({"M2 trace", separability_wmha(trace_separability_M2())});
  out.push_back({"M2 weighted", separability_wmha(weighted_separability_M2())});
  return out;
}

struct GroupoidEntry {
  std::string name;
  wmha::Groupoid g;
  oracle::RawGroupoid raw;
};

inline std::vector<GroupoidEntry> groupoids() {
  using namespace wmha;
  std::vector<GroupoidEntry> out;
  for (std::size_t n = 1; n <= 4; ++n)
    out.push_back({"P" + std::to_string(n), pair_groupoid(n), oracle::pair(n)});
  out.push_back({"Z/2", group_as_groupoid(cyclic_group(2)), oracle::group({{0, 1}, {1, 0}})});
  out.push_back({"Z/2 x {1,2}", action_groupoid(cyclic_group(2), 2, {{0, 1}, {1, 0}}),
                 oracle::swap_action()});
  return out;
}

}  // namespace corpus
