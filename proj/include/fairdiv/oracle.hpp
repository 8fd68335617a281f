#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "fairdiv/fairness.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv::oracle {

/// Hard cap on exhaustive enumeration. Exceeding it is an error, never a
/// silent sample.
struct EnumerationBudget {
  std::uint64_t max_assignments = std::uint64_t{1} << 22;
};

/// n^m, or an error when it exceeds the budget.
std::uint64_t assignment_count(int n, int m, const EnumerationBudget& budget = {});

/// Visits every item-to-agent assignment function exactly once, in
/// lexicographic order of (owner(item 1), ..., owner(item m)). The visitor
/// returns false to stop early.
void enumerate_allocations(int n, int m, const std::function<bool(const Allocation&)>& visit,
                           const EnumerationBudget& budget = {});

struct MaximinResult {
  Int value = 0;
  std::vector<std::vector<int>> bundles;  // an optimal n-partition, labeled
};

/// Exact MMS^n of one utility row by partition enumeration.
MaximinResult exact_mms(const std::vector<Int>& values, int n, const EnumerationBudget& budget = {});

/// Pareto optimality by enumerating all candidate dominators.
fairness::FairnessReport is_po_bruteforce(const Instance& inst, const Allocation& alloc,
                                          const EnumerationBudget& budget = {});

/// First allocation in enumeration order that is both EF1 and PO.
std::optional<Allocation> exists_ef1_po(const Instance& inst, const EnumerationBudget& budget = {});

}  // namespace fairdiv::oracle
