#pragma once

#include <optional>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/oracle.hpp"

namespace fairdiv::pareto {

/// A cycle in the item digraph: holder(items[t]) weakly prefers items[t+1]
/// (cyclically), strictly at strict_edge. Rotating every item to the previous
/// holder is a Pareto improvement. Items are distinct; holders may repeat.
struct ImprovementCycle {
  std::vector<int> items;
  std::vector<int> holders;  // holders[t] owns items[t] before the rotation
  int strict_edge = 0;       // index t of a strict edge (items[t] -> items[t+1])
};

struct Improvement {
  ImprovementCycle cycle;
  Allocation improved;
};

/// Cycle search of the item digraph. Returns nothing iff alloc is Pareto
/// optimal (valid for weakly lexicographic and bivalued instances).
std::optional<Improvement> find_pareto_improvement(const Instance& inst, const Allocation& alloc);

struct ChainResult {
  Allocation alloc;
  int steps = 0;
};

/// Applies improvements until none remain. Asserts the class potential is
/// strictly monotone each step and that the step count respects its bound
/// (m for bivalued, m^2 for weakly lexicographic).
ChainResult pareto_chain(const Instance& inst, const Allocation& start);

/// MMS allocation post-processed to Pareto optimality; requires weakly
/// lexicographic or factored (non-personalized) bivalued utilities.
Allocation solve_mms_po(const Instance& inst);

struct PoFpoReport {
  long long checked = 0;
  bool agree = true;
  std::optional<Allocation> disagreement;
};

/// Integral-side equivalence harness: the cycle search's verdict must match
/// the brute-force PO oracle on every sampled allocation of a bivalued
/// instance.
PoFpoReport check_po_fpo_equivalence(const Instance& inst, const std::vector<Allocation>& sample,
                                     const oracle::EnumerationBudget& budget = {});

}  // namespace fairdiv::pareto
