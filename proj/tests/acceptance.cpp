// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. `acceptance --with-order-7` adds the optional order-7 main run.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ultratree/labeling.hpp"
#include "ultratree/tree.hpp"
#include "ultratree/ultrametric.hpp"
#include "ultratree/verify.hpp"

using namespace ultratree;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  const char* name;
  double time_limit_s;  // <= 0: no limit stated
  std::function<Outcome()> run;
};

std::uint64_t cayley_times_grid(int max_order, std::uint64_t k) {
  std::uint64_t total = 0;
  for (int n = 1; n <= max_order; ++n) {
    std::uint64_t trees = 1, grid = 1;
    for (int i = 0; i < n - 2; ++i) trees *= static_cast<std::uint64_t>(n);
    for (int i = 0; i < n; ++i) grid *= k;
    total += trees * grid;
  }
  return total;
}

VerifyOptions grid(int max_order) {
  VerifyOptions o;
  o.max_order = max_order;
  o.values = {0, 1, 2};
  return o;
}

std::string report_detail(const VerificationReport& r) {
  std::string s = "cases=" + std::to_string(r.cases_checked) + " failures=" + std::to_string(r.failures.size());
  for (const auto& sc : r.subchecks) s += " " + sc.name + "[" + sc.mode + "]=" + std::to_string(sc.cases);
  return s;
}

/// Visits every US space generated by a non-degenerate {0,1,2} labeling of a
/// labeled tree of order <= max_order. Membership is decided by the literal
/// brute-force criterion so the pool does not depend on us_witness_index.
void for_each_us_space(int max_order, const std::function<void(const FiniteUltrametricSpace&)>& fn) {
  for (int n = 1; n <= max_order; ++n) {
    for (const Tree& t : TreeEnumeration(n)) {
      const PathTable paths(t);
      DistanceMatrix d;
      LabelingEnumeration(t, {0, 1, 2}).for_each(true, [&](std::uint64_t, std::span<const Rational> labels) {
        path_max_matrix(paths, labels, d);
        if (!oracle::star_witness(d)) return;
        fn(validate_ultrametric(t.names(), d));
      });
    }
  }
}

bool is_star_graph(const Tree& t) {
  for (VertexIndex c = 0; c < t.order(); ++c) {
    bool all = true;
    for (VertexIndex v = 0; v < t.order() && all; ++v) all = v == c || t.adjacent(c, v);
    if (all && t.size() == t.order() - 1) return true;
  }
  return false;
}

Outcome figure_one() {
  std::vector<std::string> names{"v1", "v2", "v3", "v4", "v5"};
  std::vector<std::pair<std::string, std::string>> edges{{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}};
  const LabeledTree lt(validate_tree(names, edges), Labeling({2, 2, 3, 2, 2}));
  const auto s = build_ultrametric(lt);
  bool ok = s(0, 1) == Rational(2) && s(3, 4) == Rational(2);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (i <= 2 && j >= 2) ok = ok && s(i, j) == Rational(3);
  const bool absent = !us_witness(s).present();
  return {ok && absent, std::string("distances ") + (ok ? "exact" : "WRONG") + ", witness " + (absent ? "absent" : "PRESENT")};
}

Outcome nondegeneracy() {
  const auto r = verify_theorem_nondegeneracy(grid(5));
  const auto expected = cayley_times_grid(5, 3);
  return {r.passed() && r.cases_checked == expected,
          report_detail(r) + " expected_cases=" + std::to_string(expected)};
}

Outcome main_theorem(int max_order) {
  auto options = grid(max_order);
  options.allow_large = max_order > 6;
  const auto r = verify_main_theorem(options);
  std::uint64_t trees = 0, long_trees = 0;
  for (int n = 1; n <= max_order; ++n)
    for (const Tree& t : TreeEnumeration(n)) {
      ++trees;
      long_trees += oracle::longest_path(t) >= 4;
    }
  const bool counts = r.cases_checked == cayley_times_grid(max_order, 3) &&
                      r.subcheck("longest-path-iff-high-degree")->cases == trees &&
                      r.subcheck("long-tree-counterexample-not-us")->cases == long_trees &&
                      r.subcheck("long-tree-grid-has-non-us")->cases == long_trees;
  return {r.passed() && counts, report_detail(r) + " trees=" + std::to_string(trees) +
                                    " long_trees=" + std::to_string(long_trees)};
}

Outcome lemmas() {
  const auto r = verify_structure_lemmas(grid(7));
  return {r.passed() && r.cases_checked == cayley_times_grid(7, 1), report_detail(r)};
}

Outcome realization() {
  std::uint64_t checked = 0, bad = 0;
  for_each_us_space(6, [&](const FiniteUltrametricSpace& s) {
    ++checked;
    const auto star = realize_as_star(s);
    if (!is_star_graph(star.tree()) || !(build_ultrametric(star) == s)) ++bad;
  });
  return {bad == 0 && checked > 0, "us_spaces=" + std::to_string(checked) + " mismatches=" + std::to_string(bad)};
}

Outcome isometry() {
  std::vector<DistanceMatrix> corpus;
  for (int n = 1; n <= 5; ++n) {
    std::map<std::string, bool> seen;
    for (const Tree& t : TreeEnumeration(n)) {
      const PathTable paths(t);
      LabelingEnumeration(t, {0, 1, 2}).for_each(true, [&](std::uint64_t, std::span<const Rational> labels) {
        auto d = path_max_matrix(paths, labels);
        std::string key;
        for (std::size_t i = 0; i < d.size(); ++i)
          for (std::size_t j = i + 1; j < d.size(); ++j) key += d(i, j).str() + ",";
        if (seen.emplace(std::to_string(n) + ":" + key, true).second) corpus.push_back(std::move(d));
      });
    }
  }
  std::uint64_t pairs = 0, disagreements = 0, isometric = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      ++pairs;
      const bool fast = check_isometric(corpus[i], corpus[j]);
      isometric += fast;
      if (fast != oracle::isometric_by_permutation(corpus[i], corpus[j])) ++disagreements;
    }
  }
  return {disagreements == 0, "spaces=" + std::to_string(corpus.size()) + " pairs=" + std::to_string(pairs) +
                                  " isometric_pairs=" + std::to_string(isometric) +
                                  " disagreements=" + std::to_string(disagreements)};
}

Outcome subspace_closure() {
  std::vector<FiniteUltrametricSpace> us_spaces;
  for_each_us_space(6, [&](const FiniteUltrametricSpace& s) { us_spaces.push_back(s); });
  std::mt19937_64 rng(20251018);
  std::uniform_int_distribution<std::size_t> pick(0, us_spaces.size() - 1);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& s = us_spaces[pick(rng)];
    std::vector<std::size_t> subset;
    while (subset.empty()) {
      for (std::size_t p = 0; p < s.size(); ++p)
        if (rng() & 1) subset.push_back(p);
    }
    if (!us_witness(restrict(s, subset)).present()) ++failures;
  }
  return {failures == 0, "samples=1000 pool=" + std::to_string(us_spaces.size()) +
                             " failures=" + std::to_string(failures)};
}

Outcome longest_path_oracle() {
  std::uint64_t trees = 0, mismatches = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Tree& t : TreeEnumeration(n)) {
      ++trees;
      mismatches += longest_path_length(t) != oracle::longest_path(t);
    }
  return {mismatches == 0 && trees == cayley_times_grid(7, 1),
          "trees=" + std::to_string(trees) + " mismatches=" + std::to_string(mismatches)};
}

}  // namespace

int main(int argc, char** argv) {
  const bool with_order_7 = argc > 1 && std::string(argv[1]) == "--with-order-7";

  std::vector<Criterion> criteria{
      {"1 figure-one reproduction", 1.0, figure_one},
      {"2 non-degeneracy theorem, order <= 5", 30.0, nondegeneracy},
      {"3 main theorem, order <= 6", 300.0, [] { return main_theorem(6); }},
      {"4 structure lemmas, order <= 7", 60.0, lemmas},
      {"5 star realization round trip", 0.0, realization},
      {"6 isometry vs brute force, order <= 5", 120.0, isometry},
      {"7 US subspace closure, 1000 samples", 0.0, subspace_closure},
      {"8 longest path vs brute force, order <= 7", 0.0, longest_path_oracle},
  };
  if (with_order_7) criteria.push_back({"3b main theorem, order <= 7", 0.0, [] { return main_theorem(7); }});

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.time_limit_s <= 0 || seconds < c.time_limit_s;
    const bool ok = outcome.ok && in_time;
    failed += !ok;
    std::printf("[%s] %-44s %8.3fs%s  %s\n", ok ? "PASS" : "FAIL", c.name, seconds,
                in_time ? "" : " (over time limit)", outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
