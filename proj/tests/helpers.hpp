#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ultratree/labeling.hpp"
#include "ultratree/tree.hpp"

namespace testing {

using namespace ultratree;

inline Tree make_tree(std::vector<std::string> vertices, std::vector<std::pair<std::string, std::string>> edges) {
  return validate_tree(std::move(vertices), edges);
}

/// v1 - v2 - ... - vn
inline Tree make_path(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    names.push_back("v" + std::to_string(i));
    if (i > 1) edges.emplace_back("v" + std::to_string(i - 1), "v" + std::to_string(i));
  }
  return validate_tree(names, edges);
}

/// centre "c" plus leaves x1..xk
inline Tree make_star(int leaves) {
  std::vector<std::string> names{"c"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= leaves; ++i) {
    names.push_back("x" + std::to_string(i));
    edges.emplace_back("c", names.back());
  }
  return validate_tree(names, edges);
}

/// adjacent centres "u" and "v" with leaves a1..ap on u and b1..bq on v
inline Tree make_double_star(int p, int q) {
  std::vector<std::string> names{"u", "v"};
  std::vector<std::pair<std::string, std::string>> edges{{"u", "v"}};
  for (int i = 1; i <= p; ++i) {
    names.push_back("a" + std::to_string(i));
    edges.emplace_back("u", names.back());
  }
  for (int i = 1; i <= q; ++i) {
    names.push_back("b" + std::to_string(i));
    edges.emplace_back("v", names.back());
  }
  return validate_tree(names, edges);
}

inline LabeledTree with_labels(const Tree& tree, std::vector<Rational> labels) {
  return LabeledTree(tree, Labeling(std::move(labels)));
}

inline Tree random_tree(std::mt19937_64& rng, int order) {
  TreeEnumeration trees(order);
  return trees.at(std::uniform_int_distribution<std::uint64_t>(0, trees.size() - 1)(rng));
}

/// Labels p/q with p in [0, 12], q in [1, 4].
inline std::vector<Rational> random_labels(std::mt19937_64& rng, std::size_t n, bool allow_zero = true) {
  std::uniform_int_distribution<std::uint64_t> num(allow_zero ? 0 : 1, 12), den(1, 4);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(num(rng), den(rng));
  return out;
}

}  // namespace testing
