#pragma once

#include <string>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv::fisher {

struct TraceEvent {
  std::string event;  // phase | transfer | price | hset | assert | result
  int k = 0;
  std::string phase;
  int chore = -1;
  int from = -1;
  int to = -1;
  Int price_old = -1;
  Int price_new = -1;
  std::vector<int> agents;
  std::string name;
  bool ok = true;
  std::string least_spend;  // decimal, scaled by small_abs^2
};

using Trace = std::vector<TraceEvent>;

/// Market state for the bivalued-chores solver. Prices are integers scaled by
/// small_abs^2: the conceptual price levels {1, p, p^2} appear as
/// {A^2, A*B, B^2} with A = small_abs, B = big_abs. Utilities are those of the
/// normalized instance (values in {-A, -B}, every agent using -A somewhere).
struct MarketState {
  Instance instance;  // normalized bivalued chores
  Int small_abs = 1;  // A
  Int big_abs = 2;    // B; p = B/A > 1
  Allocation alloc;
  std::vector<Int> prices;
  int iteration = 1;                       // k
  std::vector<std::vector<int>> h_sets;    // H_1 .. H_{k-1}
  std::vector<int> h_index;                // agent -> 0-based H set, or -1
  std::vector<std::vector<bool>> entitled; // epsilon(i)
  Trace trace;
  // Per-agent minimum pain-per-buck. Depends on prices only, so it is
  // refreshed after every price change and otherwise read as-is.
  std::vector<Ratio> mpb_cache;

  Wide bundle_price(int agent) const;
  Wide price_up_to_one(int agent) const;
  Wide least_spending() const;
  int least_spender() const;  // lowest index among the minima
  bool pef1() const;

  /// Pain-per-buck of the chore for the agent, on the {1/p, 1, p} scale.
  Ratio pain_per_buck(int agent, int chore) const;
  Ratio min_pain_per_buck(int agent) const;
  bool is_mpb_chore(int agent, int chore) const;
  void refresh_mpb();
};

MarketState phase1_initialize(const NormalizedBivalued& normalized);

/// Rebalances earlier H sets top-down (no-op before iteration 3).
void phase2a(MarketState& state);

/// Shortens MPB alternating paths from the least spender until no reachable
/// violator remains. Returns whether the state is pEF1.
bool phase2b(MarketState& state);

/// Computes H_k, freezes entitlements, divides the H_k prices by alpha = p.
void phase3(MarketState& state);

struct SolveResult {
  Allocation alloc;
  Trace trace;
  int phase3_count = 0;
  MarketState state;  // terminal pEF1 equilibrium
};

/// Algorithm: welfare-maximizing equilibrium, then per iteration Phase 2a,
/// Phase 2b (return when pEF1), Phase 3. At most n price reductions.
SolveResult solve_ef1_po(const Instance& inst);

}  // namespace fairdiv::fisher
