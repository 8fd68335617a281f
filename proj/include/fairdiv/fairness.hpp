#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv::fairness {

enum class Property { EF, EF1, PEF1, MMS, PO };

const char* property_name(Property p);

/// Outcome of a fairness/efficiency check. When holds is false the witness
/// identifies the lexicographically smallest violating pair (or, for PO, a
/// dominating allocation is attached by the oracle).
struct FairnessReport {
  Property property;
  bool holds = false;
  std::optional<std::pair<int, int>> witness;
  std::optional<Allocation> dominator;
  std::string detail;
};

/// Envy-freeness up to one item, unified goods/chores form: some removable
/// item from either bundle kills the envy. Pairs with both bundles empty pass
/// vacuously.
FairnessReport is_ef1(const Instance& inst, const Allocation& alloc);

FairnessReport is_ef(const Instance& inst, const Allocation& alloc);

/// Price envy-freeness up to one item over exact integer prices.
FairnessReport is_pef1(const Allocation& alloc, const std::vector<Int>& prices);

FairnessReport is_mms_alloc(const Instance& inst, const Allocation& alloc,
                            const std::vector<Int>& mms_values);

// Kind-specialized EF1 forms (goods: remove from the envied bundle; chores:
// remove from own bundle). The unified check must agree with these on
// instances of the matching kind.
bool ef1_goods_form(const Instance& inst, const Allocation& alloc);
bool ef1_chores_form(const Instance& inst, const Allocation& alloc);

}  // namespace fairdiv::fairness
