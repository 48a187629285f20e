#include <map>

#include "verify_kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ultratree::detail {

namespace {

// One decoder per order so that items only pay for the Prüfer decode.
std::map<int, TreeEnumeration> enumerations_for(const std::vector<WorkItem>& items) {
  std::map<int, TreeEnumeration> out;
  for (const auto& item : items) out.try_emplace(item.order, item.order);
  return out;
}

}  // namespace

std::vector<TreeOutcome> run_serial(Theorem theorem, const std::vector<WorkItem>& items,
                                    const std::vector<Rational>& values) {
  const auto trees = enumerations_for(items);
  std::vector<TreeOutcome> outcomes;
  outcomes.reserve(items.size());
  for (const auto& item : items) {
    outcomes.push_back(check_tree(theorem, trees.at(item.order).at(item.rank), item, values));
  }
  return outcomes;
}

std::vector<TreeOutcome> run_parallel(Theorem theorem, const std::vector<WorkItem>& items,
                                      const std::vector<Rational>& values, int jobs) {
  const auto trees = enumerations_for(items);
  std::vector<TreeOutcome> outcomes(items.size());
  const auto count = static_cast<std::ptrdiff_t>(items.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#else
  (void)jobs;
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& item = items[static_cast<std::size_t>(i)];
    outcomes[static_cast<std::size_t>(i)] = check_tree(theorem, trees.at(item.order).at(item.rank), item, values);
  }
  return outcomes;
}

}  // namespace ultratree::detail
