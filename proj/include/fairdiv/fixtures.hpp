#pragma once

#include <string>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv::fixtures {

// Built-in benchmark instances.
Instance four_agent_counterexample();          // 4 agents, 8 chores, values {-1,-4}
Allocation four_agent_counterexample_alloc();  // the product-rule allocation that fails EF1
Instance tiered_nine_items(Kind kind);         // 3 agents, 9 items, tiers 729/81/9/1
Instance two_speed_nine_items(Kind kind);      // 3 agents, 9 items, ratios 2/5/4
std::vector<Int> staircase_row();              // (12,6,6,3,3,3,3,1,1)
std::vector<Int> non_factored_row();           // (3,3,2,2,2)

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the whole built-in corpus; each entry is independently checkable.
std::vector<FixtureResult> run_all();

}  // namespace fairdiv::fixtures
