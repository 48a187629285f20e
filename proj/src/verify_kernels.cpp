#include "verify_kernels.hpp"

#include <algorithm>

#include "ultratree/ultrametric.hpp"

namespace ultratree::detail {

namespace {

std::size_t positive_levels(const std::vector<Rational>& values) {
  return static_cast<std::size_t>(std::ranges::count_if(values, [](const Rational& r) { return !r.is_zero(); }));
}

std::string axiom_evidence(const Tree& tree, const std::optional<AxiomViolation>& v) {
  if (!v) return "raw matrix satisfies all axioms";
  const auto& a = tree.name(static_cast<VertexIndex>(v->i));
  const auto& b = tree.name(static_cast<VertexIndex>(v->j));
  switch (v->kind) {
    case AxiomKind::Symmetry: return "symmetry fails at (" + a + "," + b + ")";
    case AxiomKind::Positivity: return "positivity fails at (" + a + "," + b + ")";
    case AxiomKind::StrongTriangle:
      return "strong triangle fails at (" + a + "," + b + "," + tree.name(static_cast<VertexIndex>(v->k)) + ")";
  }
  return {};
}

Certificate make_certificate(const Tree& tree, const WorkItem& item, Claim claim, std::string evidence) {
  Certificate cert{tree, std::nullopt, {}, claim, std::move(evidence)};
  cert.order = item.order;
  cert.tree_rank = item.rank;
  return cert;
}

Certificate labeled_certificate(const Tree& tree, const WorkItem& item, std::uint64_t rank,
                                std::span<const Rational> labels, Claim claim, std::string evidence) {
  Certificate cert = make_certificate(tree, item, claim, std::move(evidence));
  cert.labeling = Labeling(std::vector<Rational>(labels.begin(), labels.end()));
  cert.labeling_rank = rank;
  return cert;
}

TreeOutcome check_nondegeneracy(const Tree& tree, const WorkItem& item, const std::vector<Rational>& values) {
  TreeOutcome out;
  out.subcheck_cases.assign(1, 0);
  const PathTable paths(tree);
  const LabelingEnumeration labelings(tree, values);
  DistanceMatrix dist;
  labelings.for_each(false, [&](std::uint64_t rank, std::span<const Rational> labels) {
    ++out.cases;
    ++out.subcheck_cases[0];
    path_max_matrix(paths, labels, dist);
    const auto violation = find_axiom_violation(dist);
    const bool nondegenerate = is_nondegenerate(tree, labels);
    if (nondegenerate == !violation.has_value()) return;
    out.failures.push_back(labeled_certificate(
        tree, item, rank, labels, Claim::NondegenerateIffUltrametric,
        std::string("nondegenerate=") + (nondegenerate ? "true" : "false") + "; " + axiom_evidence(tree, violation)));
  });
  return out;
}

TreeOutcome check_main(const Tree& tree, const WorkItem& item, const std::vector<Rational>& values) {
  TreeOutcome out;
  out.subcheck_cases.assign(4, 0);
  const std::size_t longest = longest_path_length(tree);
  const std::size_t high = high_degree_vertices(tree).size();

  ++out.subcheck_cases[0];
  if ((longest <= 3) != (high <= 2)) {
    out.failures.push_back(make_certificate(tree, item, Claim::LongestPathIffFewHighDegree,
                                            "longest path " + std::to_string(longest) + ", " +
                                                std::to_string(high) + " vertices of degree >= 2"));
  }

  const PathTable paths(tree);
  const LabelingEnumeration labelings(tree, values);
  DistanceMatrix dist;

  if (longest <= 3) {
    labelings.for_each(false, [&](std::uint64_t rank, std::span<const Rational> labels) {
      ++out.cases;
      if (!is_nondegenerate(tree, labels)) return;
      ++out.subcheck_cases[1];
      path_max_matrix(paths, labels, dist);
      if (us_witness_index(dist)) return;
      out.failures.push_back(labeled_certificate(tree, item, rank, labels, Claim::ShortTreeLabelingIsUS,
                                                 "no point is a nearest neighbour of all others"));
    });
    return out;
  }

  ++out.subcheck_cases[2];
  const LabeledTree counterexample = counterexample_labeling(tree);
  path_max_matrix(paths, counterexample.labeling().values(), dist);
  if (auto witness = us_witness_index(dist)) {
    Certificate cert = make_certificate(tree, item, Claim::CounterexampleIsNotUS,
                                        "witness " + tree.name(static_cast<VertexIndex>(*witness)));
    cert.labeling = counterexample.labeling();
    out.failures.push_back(std::move(cert));
  }

  const bool grid_has_pattern = positive_levels(values) >= 2;
  bool found_non_us = false;
  labelings.for_each(false, [&](std::uint64_t, std::span<const Rational> labels) {
    ++out.cases;
    if (found_non_us || !grid_has_pattern || !is_nondegenerate(tree, labels)) return;
    path_max_matrix(paths, labels, dist);
    found_non_us = !us_witness_index(dist).has_value();
  });
  if (grid_has_pattern) {
    ++out.subcheck_cases[3];
    if (!found_non_us) {
      Certificate cert = make_certificate(tree, item, Claim::LongTreeHasNonUSLabeling,
                                          "every non-degenerate grid labeling gives a US space");
      cert.values = values;
      out.failures.push_back(std::move(cert));
    }
  }
  return out;
}

TreeOutcome check_lemmas(const Tree& tree, const WorkItem& item) {
  TreeOutcome out;
  out.subcheck_cases.assign(2, 0);
  out.cases = 1;
  if (longest_path_length(tree) > 3) return out;
  const auto high = high_degree_vertices(tree);
  ++out.subcheck_cases[0];
  for (std::size_t i = 0; i < high.size(); ++i) {
    for (std::size_t j = i + 1; j < high.size(); ++j) {
      if (tree.adjacent(high[i], high[j])) continue;
      out.failures.push_back(make_certificate(tree, item, Claim::HighDegreeVerticesAdjacent,
                                              tree.name(high[i]) + " and " + tree.name(high[j]) +
                                                  " are not adjacent"));
    }
  }
  ++out.subcheck_cases[1];
  if (high.size() > 2) {
    out.failures.push_back(make_certificate(tree, item, Claim::AtMostTwoHighDegree,
                                            std::to_string(high.size()) + " vertices of degree >= 2"));
  }
  return out;
}

TreeOutcome check_classification(const Tree& tree, const WorkItem& item, const std::vector<Rational>& values) {
  TreeOutcome out;
  out.subcheck_cases.assign(1, 1);
  const TreeTag tag = classify(tree).tag;
  const PathTable paths(tree);
  const LabelingEnumeration labelings(tree, values);
  DistanceMatrix dist;

  bool all_us = true;
  labelings.for_each(false, [&](std::uint64_t, std::span<const Rational> labels) {
    ++out.cases;
    if (!all_us || !is_nondegenerate(tree, labels)) return;
    path_max_matrix(paths, labels, dist);
    all_us = us_witness_index(dist).has_value();
  });

  const bool applicable = longest_path_length(tree) >= 4;
  bool counterexample_non_us = false;
  if (applicable) {
    const LabeledTree cx = counterexample_labeling(tree);
    path_max_matrix(paths, cx.labeling().values(), dist);
    counterexample_non_us = !us_witness_index(dist).has_value();
  }

  const bool star_like = tag != TreeTag::Other;
  if (star_like != (all_us && !applicable) || !star_like != (applicable && counterexample_non_us)) {
    Certificate cert = make_certificate(
        tree, item, Claim::ClassificationMatchesUS,
        std::string("tag ") + std::string(tree_tag_name(tag)) + ", all grid labelings US: " +
            (all_us ? "yes" : "no") + ", counterexample applicable: " + (applicable ? "yes" : "no") +
            ", counterexample non-US: " + (counterexample_non_us ? "yes" : "no"));
    cert.values = values;
    out.failures.push_back(std::move(cert));
  }
  return out;
}

}  // namespace

std::vector<SubCheck> subcheck_layout(Theorem theorem, const std::vector<Rational>& values) {
  switch (theorem) {
    case Theorem::Nondegeneracy:
      return {{"nondegenerate-iff-ultrametric", "exact"}};
    case Theorem::Main:
      return {{"longest-path-iff-high-degree", "exact"},
              {"short-tree-implies-us", "sampled"},
              {"long-tree-counterexample-not-us", "certified"},
              {"long-tree-grid-has-non-us", positive_levels(values) >= 2 ? "sampled" : "skipped"}};
    case Theorem::Lemmas:
      return {{"high-degree-adjacent", "exact"}, {"at-most-two-high-degree", "exact"}};
    case Theorem::Classification:
      return {{"classification-matches-us", "sampled"}};
  }
  return {};
}

TreeOutcome check_tree(Theorem theorem, const Tree& tree, const WorkItem& item,
                       const std::vector<Rational>& values) {
  switch (theorem) {
    case Theorem::Nondegeneracy: return check_nondegeneracy(tree, item, values);
    case Theorem::Main: return check_main(tree, item, values);
    case Theorem::Lemmas: return check_lemmas(tree, item);
    case Theorem::Classification: return check_classification(tree, item, values);
  }
  return {};
}

}  // namespace ultratree::detail
