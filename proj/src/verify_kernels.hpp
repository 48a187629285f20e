#pragma once

#include <cstdint>
#include <vector>

#include "ultratree/verify.hpp"

namespace ultratree::detail {

struct WorkItem {
  int order;
  std::uint64_t rank;
};

/// Everything one tree contributes to a report. Sub-check counts line up
/// with the theorem's sub-check list.
struct TreeOutcome {
  std::uint64_t cases = 0;
  std::vector<std::uint64_t> subcheck_cases;
  std::vector<Certificate> failures;
};

std::vector<SubCheck> subcheck_layout(Theorem theorem, const std::vector<Rational>& values);

TreeOutcome check_tree(Theorem theorem, const Tree& tree, const WorkItem& item,
                       const std::vector<Rational>& values);

/// Serial reference driver: visits items in order.
std::vector<TreeOutcome> run_serial(Theorem theorem, const std::vector<WorkItem>& items,
                                    const std::vector<Rational>& values);
/// OpenMP driver over the same kernel; outcome i always belongs to item i.
std::vector<TreeOutcome> run_parallel(Theorem theorem, const std::vector<WorkItem>& items,
                                      const std::vector<Rational>& values, int jobs);

}  // namespace ultratree::detail
