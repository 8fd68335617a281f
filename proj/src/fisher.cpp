#include "fairdiv/fisher.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace fairdiv::fisher {

namespace {

TraceEvent phase_event(const MarketState& state, const std::string& phase) {
  TraceEvent e;
  e.event = "phase";
  e.k = state.iteration;
  e.phase = phase;
  e.least_spend = wide_to_string(state.least_spending());
  return e;
}

void record_assert(MarketState& state, const std::string& name, bool ok,
                   const std::string& detail = "") {
  TraceEvent e;
  e.event = "assert";
  e.k = state.iteration;
  e.name = name;
  e.ok = ok;
  state.trace.push_back(e);
  check_invariant(ok, "fisher invariant " + name + (detail.empty() ? "" : ": " + detail));
}

// Owned chores must all be MPB chores for their owner (Fisher equilibrium).
void assert_equilibrium(MarketState& state, const std::string& where) {
  for (int i = 0; i < state.instance.n(); ++i) {
    Ratio mpb = state.min_pain_per_buck(i);
    for (int c = 0; c < state.instance.m(); ++c) {
      if (state.alloc.owner(c) != i) continue;
      if (!(state.pain_per_buck(i, c) == mpb)) {
        record_assert(state, "equilibrium", false, where);
      }
    }
  }
}

void transfer(MarketState& state, const std::string& phase, int chore, int from, int to) {
  check_invariant(state.alloc.owner(chore) == from, "transfer from non-owner");
  state.alloc.assign(chore, to);
  TraceEvent e;
  e.event = "transfer";
  e.k = state.iteration;
  e.phase = phase;
  e.chore = chore;
  e.from = from;
  e.to = to;
  e.least_spend = wide_to_string(state.least_spending());
  state.trace.push_back(e);
  assert_equilibrium(state, "after transfer in phase " + phase);
}

// BFS over MPB alternating edges: u -> w when some chore of x_w is an MPB
// chore for u. Agents explored in index order; dist[source] = 0.
struct Reachability {
  std::vector<int> dist;
  std::vector<int> parent;
};

Reachability mpb_reachability(const MarketState& state, const std::vector<int>& sources) {
  const int n = state.instance.n();
  Reachability out{std::vector<int>(n, -1), std::vector<int>(n, -1)};
  std::vector<int> frontier;
  for (int s : sources) {
    out.dist[s] = 0;
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int u : frontier) {
      for (int w = 0; w < n; ++w) {
        if (out.dist[w] != -1 || w == u) continue;
        bool linked = false;
        for (int c = 0; c < state.instance.m() && !linked; ++c)
          if (state.alloc.owner(c) == w && state.is_mpb_chore(u, c)) linked = true;
        if (linked) {
          out.dist[w] = out.dist[u] + 1;
          out.parent[w] = u;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

Wide MarketState::bundle_price(int agent) const {
  Wide total = 0;
  for (int c = 0; c < instance.m(); ++c)
    if (alloc.owner(c) == agent) total += prices[c];
  return total;
}

Wide MarketState::price_up_to_one(int agent) const {
  Wide total = 0;
  Int max_price = 0;
  for (int c = 0; c < instance.m(); ++c)
    if (alloc.owner(c) == agent) {
      total += prices[c];
      max_price = std::max(max_price, prices[c]);
    }
  return total == 0 ? 0 : total - max_price;
}

Wide MarketState::least_spending() const {
  Wide least = bundle_price(0);
  for (int i = 1; i < instance.n(); ++i) least = std::min(least, bundle_price(i));
  return least;
}

int MarketState::least_spender() const {
  int best = 0;
  Wide least = bundle_price(0);
  for (int i = 1; i < instance.n(); ++i) {
    Wide s = bundle_price(i);
    if (s < least) {
      least = s;
      best = i;
    }
  }
  return best;
}

bool MarketState::pef1() const {
  Wide least = least_spending();
  for (int i = 0; i < instance.n(); ++i)
    if (price_up_to_one(i) > least) return false;
  return true;
}

Ratio MarketState::pain_per_buck(int agent, int chore) const {
  return Ratio(small_abs * std::llabs(instance.value(agent, chore)), prices[chore]);
}

Ratio MarketState::min_pain_per_buck(int agent) const {
  if (static_cast<int>(mpb_cache.size()) == instance.n()) return mpb_cache[agent];
  Ratio best = pain_per_buck(agent, 0);
  for (int c = 1; c < instance.m(); ++c) {
    Ratio pb = pain_per_buck(agent, c);
    if (pb < best) best = pb;
  }
  return best;
}

bool MarketState::is_mpb_chore(int agent, int chore) const {
  return pain_per_buck(agent, chore) == min_pain_per_buck(agent);
}

void MarketState::refresh_mpb() {
  mpb_cache.clear();
  mpb_cache.reserve(instance.n());
  for (int i = 0; i < instance.n(); ++i) {
    Ratio best = pain_per_buck(i, 0);
    for (int c = 1; c < instance.m(); ++c) {
      Ratio pb = pain_per_buck(i, c);
      if (pb < best) best = pb;
    }
    mpb_cache.push_back(best);
  }
}

MarketState phase1_initialize(const NormalizedBivalued& normalized) {
  const Instance& inst = normalized.instance;
  require(inst.m() >= 1, Errc::BadArgument, "market needs at least one chore");

  MarketState state{inst,
                    normalized.small_abs,
                    normalized.big_abs,
                    Allocation(inst.n(), inst.m()),
                    std::vector<Int>(inst.m(), 0),
                    1,
                    {},
                    std::vector<int>(inst.n(), -1),
                    std::vector<std::vector<bool>>(inst.n(), std::vector<bool>(inst.m(), false)),
                    {},
                    {}};

  const Int A = state.small_abs, B = state.big_abs;
  for (int c = 0; c < inst.m(); ++c) {
    int best = 0;
    for (int i = 1; i < inst.n(); ++i)
      if (inst.value(i, c) > inst.value(best, c)) best = i;
    state.alloc.assign(c, best);
    // p * |max_i v_i(c)| in A^2-scaled units: AB for ordinary chores, B^2 for
    // very difficult ones (every agent at -B).
    state.prices[c] = std::llabs(inst.value(best, c)) == A ? A * B : B * B;
  }
  state.refresh_mpb();
  state.trace.push_back(phase_event(state, "1"));
  assert_equilibrium(state, "after phase 1");
  for (int i = 0; i < inst.n(); ++i)
    if (!(state.min_pain_per_buck(i) == Ratio(A, B)))
      record_assert(state, "init-mpb", false, "MPB != 1/p after initialization");
  return state;
}

void phase2a(MarketState& state) {
  state.trace.push_back(phase_event(state, "2a"));
  const int k = state.iteration;
  for (int level = k - 2; level >= 1; --level) {
    const std::vector<int>& lower = state.h_sets[level - 1];
    std::vector<int> upper;  // H_{level+1} .. H_{k-1}
    for (int h = level; h <= k - 2; ++h)
      upper.insert(upper.end(), state.h_sets[h].begin(), state.h_sets[h].end());
    std::sort(upper.begin(), upper.end());

    int moved = 0;
    for (;;) {
      int donor = lower[0];
      for (int i : lower)
        if (state.price_up_to_one(i) > state.price_up_to_one(donor)) donor = i;
      int taker = upper[0];
      for (int j : upper)
        if (state.bundle_price(j) < state.bundle_price(taker)) taker = j;
      if (state.price_up_to_one(donor) <= state.bundle_price(taker)) break;

      // (H2): a non-entitled chore exists, and every such chore is priced p
      // and is an MPB chore for the taker.
      int chore = -1;
      bool all_transferable = true;
      for (int c = 0; c < state.instance.m(); ++c) {
        if (state.alloc.owner(c) != donor || state.entitled[donor][c]) continue;
        all_transferable = all_transferable &&
                           state.prices[c] == state.small_abs * state.big_abs &&
                           state.is_mpb_chore(taker, c);
        if (chore == -1) chore = c;
      }
      record_assert(state, "H2", chore != -1 && all_transferable,
                    "phase 2a lacks a transferable non-entitled chore");
      transfer(state, "2a", chore, donor, taker);
      ++moved;
      check_invariant(moved <= state.instance.m(), "phase 2a moved more than m chores");
    }
  }
}

bool phase2b(MarketState& state) {
  state.trace.push_back(phase_event(state, "2b"));
  const int n = state.instance.n(), m = state.instance.m();
  const std::uint64_t bound =
      (static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(m) * m + 1) + 1) *
          (static_cast<std::uint64_t>(m) * n * n + m + 1) +
      16;

  Wide floor_spend = state.least_spending();
  std::uint64_t steps = 0;
  for (;;) {
    const Wide ls_spend = state.least_spending();
    // Least spending never decreases within a Phase 2b run.
    record_assert(state, "ls-monotone", ls_spend >= floor_spend,
                  "least spending decreased during phase 2b");
    floor_spend = ls_spend;

    // Paths may start at any least spender; the loop only ends when none of
    // them reaches a violator (phase 3 builds H_k from all of them, so
    // stopping earlier would sweep a violator into H_k).
    std::vector<int> sources;
    for (int i = 0; i < n; ++i)
      if (state.bundle_price(i) == ls_spend) sources.push_back(i);
    Reachability reach = mpb_reachability(state, sources);
    int violator = -1;
    for (int i = 0; i < n; ++i) {
      if (reach.dist[i] <= 0) continue;
      if (state.price_up_to_one(i) <= ls_spend) continue;
      if (violator == -1 || reach.dist[i] < reach.dist[violator]) violator = i;
    }
    if (violator == -1) break;

    const int receiver = reach.parent[violator];
    int chore = -1;
    for (int c = 0; c < m; ++c)
      if (state.alloc.owner(c) == violator && state.is_mpb_chore(receiver, c)) {
        chore = c;
        break;
      }
    check_invariant(chore != -1, "BFS edge without an MPB chore");
    transfer(state, "2b", chore, violator, receiver);

    ++steps;
    check_invariant(steps <= bound, "phase 2b exceeded its polynomial step bound");
  }
  return state.pef1();
}

void phase3(MarketState& state) {
  state.trace.push_back(phase_event(state, "3"));
  const int n = state.instance.n(), m = state.instance.m();
  const Int A = state.small_abs, B = state.big_abs;

  // H_k: agents reachable by MPB alternating paths from any least spender.
  std::vector<int> sources;
  const Wide least = state.least_spending();
  for (int i = 0; i < n; ++i)
    if (state.bundle_price(i) == least) sources.push_back(i);
  Reachability reach = mpb_reachability(state, sources);
  std::vector<int> h_k;
  for (int i = 0; i < n; ++i)
    if (reach.dist[i] >= 0) h_k.push_back(i);

  {
    TraceEvent e;
    e.event = "hset";
    e.k = state.iteration;
    e.agents = h_k;
    state.trace.push_back(e);
  }

  bool disjoint = true;
  for (int i : h_k) disjoint = disjoint && state.h_index[i] == -1;
  record_assert(state, "H1", disjoint, "H_k intersects an earlier H set");

  // Timestamp t_{k,b}. (H3): nobody who went through a price reduction, nor
  // anybody in the new H_k, is a violator.
  bool no_violators = true;
  for (int i = 0; i < n; ++i)
    if ((state.h_index[i] != -1 || reach.dist[i] >= 0) &&
        state.price_up_to_one(i) > least)
      no_violators = false;
  record_assert(state, "H3", no_violators, "H member is a violator at t_{k,b}");

  std::vector<bool> in_h_k(n, false);
  for (int i : h_k) in_h_k[i] = true;
  bool have_alpha = false;
  Ratio alpha(1, 1);
  for (int i : h_k) {
    const Ratio mpb = state.min_pain_per_buck(i);
    for (int c = 0; c < m; ++c) {
      if (in_h_k[state.alloc.owner(c)]) continue;
      const Ratio pb = state.pain_per_buck(i, c);
      const Ratio candidate(pb.num * mpb.den, pb.den * mpb.num);
      if (!have_alpha || candidate < alpha) {
        alpha = candidate;
        have_alpha = true;
      }
    }
  }
  record_assert(state, "H5", have_alpha && alpha == Ratio(B, A), "alpha != p");

  for (int i : h_k) {
    for (int c = 0; c < m; ++c)
      if (state.alloc.owner(c) == i) state.entitled[i][c] = true;
    state.h_index[i] = static_cast<int>(state.h_sets.size());
  }
  state.h_sets.push_back(h_k);

  for (int c = 0; c < m; ++c) {
    if (!in_h_k[state.alloc.owner(c)]) continue;
    const Int old_price = state.prices[c];
    check_invariant(old_price % B == 0, "price not divisible by alpha");
    const Int new_price = old_price / B * A;
    state.prices[c] = new_price;
    TraceEvent e;
    e.event = "price";
    e.k = state.iteration;
    e.chore = c;
    e.price_old = old_price;
    e.price_new = new_price;
    state.trace.push_back(e);
  }
  state.refresh_mpb();
  assert_equilibrium(state, "after phase 3 price reduction");

  // Timestamp t_{k,a}: (H4), (H6), (H7).
  bool h4 = true;
  for (int i = 0; i < n; ++i) {
    if (state.h_index[i] == -1) continue;
    for (int c = 0; c < m; ++c)
      if (state.entitled[i][c] && state.alloc.owner(c) != i) h4 = false;
  }
  record_assert(state, "H4", h4, "entitled chore left its owner");

  bool h6 = true;
  for (int c = 0; c < m; ++c) {
    if (state.prices[c] == A * A) {
      int owner = state.alloc.owner(c);
      if (state.h_index[owner] == -1 || !state.entitled[owner][c]) h6 = false;
    } else if (state.prices[c] != A * B) {
      h6 = false;
    }
  }
  record_assert(state, "H6", h6, "prices left {1, p} or a unit-price chore is unentitled");

  bool h7 = true;
  for (int i = 0; i < n; ++i) {
    const Ratio expect = state.h_index[i] != -1 ? Ratio(1, 1) : Ratio(A, B);
    if (!(state.min_pain_per_buck(i) == expect)) h7 = false;
  }
  record_assert(state, "H7", h7, "MPB values off their {1, 1/p} split");

  ++state.iteration;
}

SolveResult solve_ef1_po(const Instance& inst) {
  require(inst.kind() == Kind::Chores, Errc::KindMismatch,
          "the EF1+PO solver handles chore division instances");
  NormalizedBivalued normalized = normalize_bivalued_chores(inst);
  if (inst.m() == 0) {
    MarketState idle{normalized.instance,
                     normalized.small_abs,
                     normalized.big_abs,
                     Allocation(inst.n(), 0),
                     {},
                     1,
                     {},
                     std::vector<int>(inst.n(), -1),
                     std::vector<std::vector<bool>>(inst.n()),
                     {},
                     {}};
    return SolveResult{idle.alloc, {}, 0, std::move(idle)};
  }

  MarketState state = phase1_initialize(normalized);
  int reductions = 0;
  for (;;) {
    phase2a(state);
    if (phase2b(state)) break;
    check_invariant(reductions < inst.n(), "more than n price-reduction iterations");
    phase3(state);
    ++reductions;
  }

  TraceEvent done;
  done.event = "result";
  done.k = state.iteration;
  done.name = "pef1";
  done.ok = true;
  done.least_spend = wide_to_string(state.least_spending());
  state.trace.push_back(done);

  SolveResult result{state.alloc, state.trace, reductions, std::move(state)};
  return result;
}

}  // namespace fairdiv::fisher
