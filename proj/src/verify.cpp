#include "ultratree/verify.hpp"

#include <algorithm>

#include "ultratree/error.hpp"
#include "ultratree/json_io.hpp"
#include "ultratree/ultrametric.hpp"
#include "verify_kernels.hpp"

namespace ultratree {

std::string_view theorem_id(Theorem theorem) noexcept {
  switch (theorem) {
    case Theorem::Nondegeneracy: return "nondeg";
    case Theorem::Main: return "main";
    case Theorem::Lemmas: return "lemmas";
    case Theorem::Classification: return "classify";
  }
  return "";
}

std::optional<Theorem> parse_theorem(std::string_view id) noexcept {
  for (Theorem t : {Theorem::Nondegeneracy, Theorem::Main, Theorem::Lemmas, Theorem::Classification})
    if (theorem_id(t) == id) return t;
  return std::nullopt;
}

std::string_view claim_id(Claim claim) noexcept {
  switch (claim) {
    case Claim::NondegenerateIffUltrametric: return "nondegenerate-iff-ultrametric";
    case Claim::LongestPathIffFewHighDegree: return "longest-path-iff-high-degree";
    case Claim::ShortTreeLabelingIsUS: return "short-tree-implies-us";
    case Claim::CounterexampleIsNotUS: return "long-tree-counterexample-not-us";
    case Claim::LongTreeHasNonUSLabeling: return "long-tree-grid-has-non-us";
    case Claim::HighDegreeVerticesAdjacent: return "high-degree-adjacent";
    case Claim::AtMostTwoHighDegree: return "at-most-two-high-degree";
    case Claim::ClassificationMatchesUS: return "classification-matches-us";
  }
  return "";
}

std::string_view claim_text(Claim claim) noexcept {
  switch (claim) {
    case Claim::NondegenerateIffUltrametric:
      return "the path-max matrix is an ultrametric iff the labeling is non-degenerate";
    case Claim::LongestPathIffFewHighDegree:
      return "longest path <= 3 iff at most two vertices have degree >= 2";
    case Claim::ShortTreeLabelingIsUS:
      return "a non-degenerate labeling of a tree with longest path <= 3 generates a US space";
    case Claim::CounterexampleIsNotUS:
      return "the long-path counterexample labeling generates a space outside US";
    case Claim::LongTreeHasNonUSLabeling:
      return "a tree with longest path >= 4 has a grid labeling generating a space outside US";
    case Claim::HighDegreeVerticesAdjacent:
      return "vertices of degree >= 2 are adjacent when the longest path is <= 3";
    case Claim::AtMostTwoHighDegree:
      return "at most two vertices have degree >= 2 when the longest path is <= 3";
    case Claim::ClassificationMatchesUS:
      return "star and double-star trees are exactly the trees whose spaces are all US";
  }
  return "";
}

const SubCheck* VerificationReport::subcheck(std::string_view name) const {
  auto it = std::ranges::find(subchecks, name, &SubCheck::name);
  return it == subchecks.end() ? nullptr : &*it;
}

std::uint64_t expected_case_count(Theorem theorem, int max_order, std::size_t value_count) {
  std::uint64_t total = 0;
  for (int n = 1; n <= max_order; ++n) {
    std::uint64_t per_tree = 1;
    if (theorem != Theorem::Lemmas) {
      auto p = checked_power(value_count, static_cast<std::size_t>(n), UINT64_MAX / 1024);
      if (!p) return UINT64_MAX;
      per_tree = *p;
    }
    total += labeled_tree_count(n) * per_tree;
  }
  return total;
}

namespace {

bool has_witness(const Tree& tree, std::span<const Rational> labels) {
  return us_witness_index(path_max_matrix(PathTable(tree), labels)).has_value();
}

bool all_grid_labelings_us(const Tree& tree, const std::vector<Rational>& values) {
  const PathTable paths(tree);
  DistanceMatrix dist;
  bool all_us = true;
  LabelingEnumeration(tree, values).for_each(true, [&](std::uint64_t, std::span<const Rational> labels) {
    if (!all_us) return;
    path_max_matrix(paths, labels, dist);
    all_us = us_witness_index(dist).has_value();
  });
  return all_us;
}

VerificationReport run(Theorem theorem, const VerifyOptions& options) {
  if (options.max_order < 1) throw Error(ErrorCode::InvalidArgument, "max order must be at least 1");
  if (options.max_order > kDefaultOrderCap)
    throw Error(ErrorCode::CapExceeded, "max order " + std::to_string(options.max_order) +
                                            " exceeds the enumeration cap " + std::to_string(kDefaultOrderCap));
  const auto values = normalize_values(options.values);
  if (theorem != Theorem::Lemmas && values.empty())
    throw Error(ErrorCode::InvalidArgument, "label value set is empty");
  if (theorem == Theorem::Main && options.max_order >= 5 &&
      std::ranges::count_if(values, [](const Rational& r) { return !r.is_zero(); }) < 2)
    throw Error(ErrorCode::InvalidArgument,
                "the main theorem check needs at least two positive label values for orders >= 5");

  const std::uint64_t expected = expected_case_count(theorem, options.max_order, values.size());
  if (!options.allow_large && expected > options.case_budget)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(expected) + " cases exceed the budget of " +
                                               std::to_string(options.case_budget) +
                                               "; pass allow_large to run anyway");

  const auto start = std::chrono::steady_clock::now();
  std::vector<detail::WorkItem> items;
  for (int n = 1; n <= options.max_order; ++n)
    for (std::uint64_t r = 0; r < labeled_tree_count(n); ++r) items.push_back({n, r});

  const auto outcomes = options.execution == Execution::Serial
                            ? detail::run_serial(theorem, items, values)
                            : detail::run_parallel(theorem, items, values, options.jobs);

  VerificationReport report;
  report.theorem = theorem;
  report.max_order = options.max_order;
  if (theorem != Theorem::Lemmas) report.values = values;
  report.cases_by_order.assign(static_cast<std::size_t>(options.max_order) + 1, 0);
  report.subchecks = detail::subcheck_layout(theorem, values);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& outcome = outcomes[i];
    report.cases_checked += outcome.cases;
    report.cases_by_order[static_cast<std::size_t>(items[i].order)] += outcome.cases;
    for (std::size_t s = 0; s < outcome.subcheck_cases.size(); ++s)
      report.subchecks[s].cases += outcome.subcheck_cases[s];
    report.failures.insert(report.failures.end(), outcome.failures.begin(), outcome.failures.end());
  }
  std::ranges::stable_sort(report.failures, [](const Certificate& a, const Certificate& b) {
    return std::tie(a.order, a.tree_rank, a.labeling_rank) < std::tie(b.order, b.tree_rank, b.labeling_rank);
  });
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace

bool replay(const Certificate& cert) {
  const Tree& tree = cert.tree;
  const auto labels = [&] {
    if (!cert.labeling) throw Error(ErrorCode::InvalidArgument, "certificate has no labeling");
    return cert.labeling->values();
  };
  switch (cert.claim) {
    case Claim::NondegenerateIffUltrametric: {
      const bool nondegenerate = is_nondegenerate(tree, labels());
      const bool valid = !find_axiom_violation(path_max_matrix(PathTable(tree), labels())).has_value();
      return nondegenerate != valid;
    }
    case Claim::LongestPathIffFewHighDegree:
      return (longest_path_length(tree) <= 3) != (high_degree_vertices(tree).size() <= 2);
    case Claim::ShortTreeLabelingIsUS:
      return longest_path_length(tree) <= 3 && is_nondegenerate(tree, labels()) && !has_witness(tree, labels());
    case Claim::CounterexampleIsNotUS:
      return has_witness(tree, counterexample_labeling(tree).labeling().values());
    case Claim::LongTreeHasNonUSLabeling:
      return longest_path_length(tree) >= 4 && all_grid_labelings_us(tree, cert.values);
    case Claim::HighDegreeVerticesAdjacent: {
      if (longest_path_length(tree) > 3) return false;
      const auto high = high_degree_vertices(tree);
      for (std::size_t i = 0; i < high.size(); ++i)
        for (std::size_t j = i + 1; j < high.size(); ++j)
          if (!tree.adjacent(high[i], high[j])) return true;
      return false;
    }
    case Claim::AtMostTwoHighDegree:
      return longest_path_length(tree) <= 3 && high_degree_vertices(tree).size() > 2;
    case Claim::ClassificationMatchesUS: {
      const bool star_like = classify(tree).tag != TreeTag::Other;
      const bool applicable = longest_path_length(tree) >= 4;
      const bool cx_non_us = applicable && !has_witness(tree, counterexample_labeling(tree).labeling().values());
      const bool all_us = all_grid_labelings_us(tree, cert.values);
      return star_like != (all_us && !applicable) || !star_like != (applicable && cx_non_us);
    }
  }
  return false;
}

VerificationReport verify_theorem_nondegeneracy(const VerifyOptions& options) {
  return run(Theorem::Nondegeneracy, options);
}
VerificationReport verify_main_theorem(const VerifyOptions& options) { return run(Theorem::Main, options); }
VerificationReport verify_structure_lemmas(const VerifyOptions& options) { return run(Theorem::Lemmas, options); }
VerificationReport verify_classification(const VerifyOptions& options) {
  return run(Theorem::Classification, options);
}
VerificationReport verify(Theorem theorem, const VerifyOptions& options) { return run(theorem, options); }

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json out;
  out["claim"] = claim_id(cert.claim);
  out["claim_text"] = claim_text(cert.claim);
  out["evidence"] = cert.evidence;
  out["tree"] = io::to_json(cert.tree);
  if (cert.labeling) {
    out["labeling"] = io::to_json(LabeledTree(cert.tree, *cert.labeling));
  } else {
    out["labeling"] = nullptr;
  }
  if (!cert.values.empty()) {
    out["values"] = nlohmann::json::array();
    for (const auto& v : cert.values) out["values"].push_back(v.str());
  }
  return out;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json out;
  out["theorem"] = theorem_id(report.theorem);
  out["parameters"]["max_order"] = report.max_order;
  out["parameters"]["values"] = nlohmann::json::array();
  for (const auto& v : report.values) out["parameters"]["values"].push_back(v.str());
  out["cases_checked"] = report.cases_checked;
  out["cases_by_order"] = nlohmann::json::object();
  for (std::size_t n = 1; n < report.cases_by_order.size(); ++n)
    out["cases_by_order"][std::to_string(n)] = report.cases_by_order[n];
  out["subchecks"] = nlohmann::json::array();
  for (const auto& s : report.subchecks) out["subchecks"].push_back({{"name", s.name}, {"mode", s.mode}, {"cases", s.cases}});
  out["elapsed_ms"] = report.elapsed.count();
  out["status"] = report.passed() ? "pass" : "fail";
  out["failures"] = nlohmann::json::array();
  for (const auto& cert : report.failures) out["failures"].push_back(to_json(cert));
  return out;
}

}  // namespace ultratree
