#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ultratree/labeling.hpp"
#include "ultratree/rational.hpp"
#include "ultratree/tree.hpp"

namespace ultratree {

enum class Theorem { Nondegeneracy, Main, Lemmas, Classification };

/// "nondeg", "main", "lemmas", "classify".
std::string_view theorem_id(Theorem theorem) noexcept;
std::optional<Theorem> parse_theorem(std::string_view id) noexcept;

enum class Claim {
  NondegenerateIffUltrametric,
  LongestPathIffFewHighDegree,
  ShortTreeLabelingIsUS,
  CounterexampleIsNotUS,
  LongTreeHasNonUSLabeling,
  HighDegreeVerticesAdjacent,
  AtMostTwoHighDegree,
  ClassificationMatchesUS,
};

std::string_view claim_id(Claim claim) noexcept;
std::string_view claim_text(Claim claim) noexcept;

/// One failed check, with enough data to re-run it in isolation.
struct Certificate {
  Tree tree;
  std::optional<Labeling> labeling;
  /// Label grid, for the claims that quantify over every labeling.
  std::vector<Rational> values;
  Claim claim;
  std::string evidence;

  int order = 0;
  std::uint64_t tree_rank = 0;
  std::uint64_t labeling_rank = 0;
};

/// Re-evaluates the certificate's claim on its stored data. True when the
/// recorded violation reproduces.
bool replay(const Certificate& cert);

enum class Execution { Serial, Parallel };

inline constexpr std::uint64_t kDefaultCaseBudget = 5'000'000;

struct VerifyOptions {
  int max_order = 6;
  std::vector<Rational> values{0, 1, 2};
  Execution execution = Execution::Parallel;
  int jobs = 0;  // 0 = OpenMP default
  bool allow_large = false;
  std::uint64_t case_budget = kDefaultCaseBudget;
};

struct SubCheck {
  std::string name;
  std::string mode;  // "exact", "sampled", "certified" or "skipped"
  std::uint64_t cases = 0;

  friend bool operator==(const SubCheck&, const SubCheck&) = default;
};

struct VerificationReport {
  Theorem theorem = Theorem::Nondegeneracy;
  int max_order = 0;
  std::vector<Rational> values;
  std::uint64_t cases_checked = 0;
  std::vector<std::uint64_t> cases_by_order;  // index = order; entry 0 unused
  std::vector<SubCheck> subchecks;
  std::vector<Certificate> failures;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept { return failures.empty(); }
  const SubCheck* subcheck(std::string_view name) const;
};

/// Σ_{n ≤ max_order} n^{max(n-2,0)} · |values|^n, or the plain tree count for
/// the lemmas run (which enumerates trees only).
std::uint64_t expected_case_count(Theorem theorem, int max_order, std::size_t value_count);

/// Raw path-max matrix passes the axioms exactly when the labeling is
/// non-degenerate, on every labeled tree in the grid.
VerificationReport verify_theorem_nondegeneracy(const VerifyOptions& options);
/// Longest path <= 3 iff at most two high-degree vertices; short trees give US
/// spaces on every non-degenerate grid labeling; long trees get a certified
/// non-US counterexample and a non-US labeling inside the grid.
VerificationReport verify_main_theorem(const VerifyOptions& options);
/// High-degree vertices of a tree with longest path <= 3 are pairwise
/// adjacent and at most two. `values` is ignored.
VerificationReport verify_structure_lemmas(const VerifyOptions& options);
/// Star / double-star classification agrees with US behaviour.
VerificationReport verify_classification(const VerifyOptions& options);

VerificationReport verify(Theorem theorem, const VerifyOptions& options);

nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const VerificationReport& report);

}  // namespace ultratree
