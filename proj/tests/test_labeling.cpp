#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "ultratree/error.hpp"
#include "ultratree/ultrametric.hpp"

using namespace testing;

namespace {

const std::vector<Rational> kFigureOne{2, 2, 3, 2, 2};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE_BEGIN("labeling");

TEST_CASE("is_nondegenerate") {
  CHECK(is_nondegenerate(with_labels(make_path(5), kFigureOne)));
  CHECK_FALSE(is_nondegenerate(with_labels(make_path(2), {0, 0})));
  CHECK(is_nondegenerate(with_labels(make_star(4), {1, 0, 0, 0, 0})));
  CHECK(is_nondegenerate(with_labels(make_path(1), {0})));
}

TEST_CASE("labeling must cover the vertex set") {
  CHECK(code_of([] { with_labels(make_path(3), {1, 1}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("build_ultrametric on the five-vertex path") {
  const Tree p5 = make_path(5);
  const auto space = build_ultrametric(with_labels(p5, kFigureOne));
  CHECK(space(0, 1) == Rational(2));
  CHECK(space(3, 4) == Rational(2));
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(space(i, i) == Rational{});
    for (std::size_t j = 0; j < 5; ++j) {
      const bool through_middle = std::min(i, j) <= 2 && std::max(i, j) >= 2 && i != j;
      if (through_middle) CHECK(space(i, j) == Rational(3));
    }
  }
  CHECK(space.dist() == oracle::path_max_distances(p5, kFigureOne));
}

TEST_CASE("build_ultrametric small cases") {
  const auto edge = build_ultrametric(with_labels(make_path(2), {0, 5}));
  CHECK(edge(0, 1) == Rational(5));
  CHECK(edge(1, 0) == Rational(5));
  CHECK(edge(0, 0) == Rational{});
  CHECK(code_of([] { build_ultrametric(with_labels(make_path(2), {0, 0})); }) == ErrorCode::DegenerateLabeling);
  const auto single = build_ultrametric(with_labels(make_path(1), {0}));
  CHECK(single.size() == 1);
}

TEST_CASE("non-degenerate labelings give ultrametrics, degenerate ones break positivity") {
  // the independent path-search evaluation, orders up to 5
  for (int n = 1; n <= 5; ++n) {
    for (const Tree& t : TreeEnumeration(n)) {
      LabelingEnumeration(t, {0, 1, 2}).for_each(false, [&](std::uint64_t, std::span<const Rational> labels) {
        const auto d = oracle::path_max_distances(t, labels);
        REQUIRE(d == raw_distance_matrix(LabeledTree(t, Labeling({labels.begin(), labels.end()}))));
        bool zero_off_diagonal = false;
        for (std::size_t i = 0; i < d.size(); ++i)
          for (std::size_t j = 0; j < d.size(); ++j) zero_off_diagonal |= i != j && d(i, j).is_zero();
        REQUIRE(oracle::strong_triangle_holds(d));
        REQUIRE(zero_off_diagonal == !is_nondegenerate(t, labels));
      });
    }
  }
  // the library route on order 6
  for (const Tree& t : TreeEnumeration(6)) {
    const PathTable paths(t);
    LabelingEnumeration(t, {0, 1, 2}).for_each(false, [&](std::uint64_t, std::span<const Rational> labels) {
      const auto violation = find_axiom_violation(path_max_matrix(paths, labels));
      REQUIRE(violation.has_value() == !is_nondegenerate(t, labels));
      if (violation) REQUIRE(violation->kind == AxiomKind::Positivity);
    });
  }
}

TEST_CASE("distance bounds the endpoint labels and is monotone in the labeling") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    const Tree t = random_tree(rng, n);
    const auto labels = random_labels(rng, t.order(), false);
    const auto d = raw_distance_matrix(with_labels(t, labels));
    auto raised = labels;
    for (auto& r : raised)
      if (rng() % 2) r = Rational(r.numerator() + r.denominator(), r.denominator());
    const auto d2 = raw_distance_matrix(with_labels(t, raised));
    for (std::size_t u = 0; u < t.order(); ++u)
      for (std::size_t v = 0; v < t.order(); ++v) {
        if (u != v) CHECK(d(u, v) >= std::max(labels[u], labels[v]));
        CHECK(d2(u, v) >= d(u, v));
      }
  }
}

TEST_CASE("distances along a sub-path do not depend on the rest of the tree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = random_tree(rng, 7);
    const auto labels = random_labels(rng, t.order(), false);
    const auto full = raw_distance_matrix(with_labels(t, labels));
    const VertexIndex a = static_cast<VertexIndex>(rng() % 7);
    VertexIndex b = static_cast<VertexIndex>(rng() % 7);
    if (a == b) b = (b + 1) % 7;
    const auto path = unique_path(t, a, b);

    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<Rational> restricted;
    for (std::size_t i = 0; i < path.size(); ++i) {
      names.push_back(t.name(path[i]));
      restricted.push_back(labels[path[i]]);
      if (i) edges.emplace_back(names[i - 1], names[i]);
    }
    const auto sub = raw_distance_matrix(with_labels(validate_tree(names, edges), restricted));
    for (std::size_t i = 0; i < path.size(); ++i)
      for (std::size_t j = 0; j < path.size(); ++j) CHECK(sub(i, j) == full(path[i], path[j]));
  }
}

TEST_CASE("extend_labeling") {
  const Tree p5 = make_path(5);
  SUBCASE("empty partial gives the constant labeling") {
    const auto l = extend_labeling(p5, {}, 1);
    for (VertexIndex v = 0; v < 5; ++v) CHECK(l[v] == Rational(1));
  }
  SUBCASE("figure pattern inside a larger tree") {
    const Tree t = make_tree({"v1", "v2", "v3", "v4", "v5", "w"},
                             {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v3", "w"}});
    const auto l = extend_labeling(t, {{"v1", 2}, {"v2", 2}, {"v3", 3}, {"v4", 2}, {"v5", 2}}, 2);
    CHECK(is_nondegenerate(t, l.values()));
    CHECK(l[t.index_of("w")] == Rational(2));
    CHECK(l[t.index_of("v3")] == Rational(3));
  }
  SUBCASE("errors") {
    CHECK(code_of([&] { extend_labeling(p5, {{"v1", 0}, {"v2", 0}}, 4); }) == ErrorCode::DegenerateResult);
    CHECK(code_of([&] { extend_labeling(p5, {{"zz", 1}}, 4); }) == ErrorCode::UnknownVertex);
    CHECK(code_of([&] { extend_labeling(p5, {}, 0); }) == ErrorCode::InvalidArgument);
    CHECK_NOTHROW(extend_labeling(p5, {{"v1", 0}, {"v3", 0}}, 4));
  }
}

TEST_CASE("counterexample_labeling") {
  SUBCASE("five-vertex path reproduces the pattern exactly") {
    const Tree p5 = make_path(5);
    const auto lt = counterexample_labeling(p5);
    CHECK(lt.labeling() == Labeling(kFigureOne));
    CHECK_FALSE(us_witness(build_ultrametric(lt)).present());
    CHECK_FALSE(oracle::star_witness(raw_distance_matrix(lt)).has_value());
  }
  SUBCASE("six-vertex path") {
    const auto lt = counterexample_labeling(make_path(6));
    CHECK(lt.labeling() == Labeling({2, 2, 3, 2, 2, 2}));
    const auto d = raw_distance_matrix(lt);
    CHECK_FALSE(oracle::star_witness(d).has_value());
    CHECK_FALSE(oracle::generated_by_some_star(d));
    CHECK_FALSE(us_witness(build_ultrametric(lt)).present());
  }
  SUBCASE("short trees are rejected") {
    CHECK(code_of([] { counterexample_labeling(make_star(4)); }) == ErrorCode::NoLongPath);
    CHECK(code_of([] { counterexample_labeling(make_path(4)); }) == ErrorCode::NoLongPath);
    CHECK(code_of([] { counterexample_labeling(make_path(1)); }) == ErrorCode::NoLongPath);
  }
  SUBCASE("path choice is the least diametral pair") {
    // diameter 4 realised by (a,e) and (a,f); (a,e) wins
    const Tree t = make_tree({"a", "b", "c", "d", "e", "f"},
                             {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"d", "f"}});
    const auto path = counterexample_path(t);
    std::vector<std::string> names;
    for (auto v : path) names.push_back(t.name(v));
    CHECK(names == std::vector<std::string>{"a", "b", "c", "d", "e"});
  }
}

TEST_CASE("counterexample spaces are never US for trees up to order 7") {
  for (int n = 5; n <= 7; ++n) {
    for (const Tree& t : TreeEnumeration(n)) {
      if (longest_path_length(t) < 4) continue;
      const auto lt = counterexample_labeling(t);
      REQUIRE(is_nondegenerate(lt));
      const auto d = raw_distance_matrix(lt);
      REQUIRE_FALSE(us_witness_index(d).has_value());
      REQUIRE_FALSE(oracle::star_witness(d).has_value());
    }
  }
}

TEST_CASE("enumerate_labelings") {
  SUBCASE("single edge") {
    const LabelingEnumeration e(make_path(2), {0, 1});
    CHECK(e.size() == 4);
    CHECK(e.all(false).size() == 4);
    CHECK(e.all(true).size() == 3);
  }
  SUBCASE("order one") {
    const LabelingEnumeration e(make_path(1), {0});
    CHECK(e.size() == 1);
    CHECK(e.all(true).size() == 1);
  }
  SUBCASE("three-vertex path") {
    const Tree p3 = make_path(3);
    const LabelingEnumeration e(p3, {1, 0, 1});
    CHECK(e.size() == 8);
    const auto nondeg = e.all(true);
    CHECK(nondeg.size() == 5);
    for (const auto& degenerate : {std::vector<Rational>{0, 0, 0}, {0, 0, 1}, {1, 0, 0}})
      CHECK(std::find(nondeg.begin(), nondeg.end(), Labeling(degenerate)) == nondeg.end());
  }
  SUBCASE("rank order and random access agree") {
    const LabelingEnumeration e(make_star(3), {0, Rational(1, 2), 2});
    const auto all = e.all(false);
    REQUIRE(all.size() == e.size());
    for (std::uint64_t i = 0; i < e.size(); ++i) CHECK(all[i] == e.at(i));
    CHECK(all.front() == Labeling({0, 0, 0, 0}));
    CHECK(all[1] == Labeling({0, 0, 0, Rational(1, 2)}));
  }
  SUBCASE("budget") {
    CHECK(code_of([] { LabelingEnumeration(make_path(8), {0, 1, 2}, 1000); }) == ErrorCode::BudgetExceeded);
    CHECK(code_of([] { LabelingEnumeration(make_path(3), {}); }) == ErrorCode::InvalidArgument);
  }
}

TEST_SUITE_END();
