#include "fairdiv/pareto.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

#include "fairdiv/mms.hpp"

namespace fairdiv::pareto {

namespace {

void require_supported(const Classification& cls) {
  require(cls.has(UtilityClass::WeaklyLexicographic) || cls.has(UtilityClass::Bivalued),
          Errc::UnsupportedClass,
          "Pareto machinery supports weakly lexicographic and bivalued instances");
}

// Count of items sitting with an agent who values them at the large magnitude.
int big_assignment_count(const Instance& inst, const Allocation& alloc, Int big) {
  int count = 0;
  for (int r = 0; r < inst.m(); ++r)
    if (std::llabs(inst.value(alloc.owner(r), r)) == big) ++count;
  return count;
}

// Tier rank of item r for agent i: 1 for the most significant tier.
int tier_rank(const std::vector<Int>& row, int r) {
  const Int mag = std::llabs(row[r]);
  int rank = 1;
  std::vector<Int> seen;
  for (Int v : row) {
    Int a = std::llabs(v);
    if (a > mag && std::find(seen.begin(), seen.end(), a) == seen.end()) {
      seen.push_back(a);
      ++rank;
    }
  }
  return rank;
}

Int wolex_potential(const Instance& inst, const Allocation& alloc) {
  Int phi = 0;
  for (int r = 0; r < inst.m(); ++r) phi += tier_rank(inst.row(alloc.owner(r)), r);
  return phi;
}

}  // namespace

std::optional<Improvement> find_pareto_improvement(const Instance& inst,
                                                   const Allocation& alloc) {
  require(alloc.agents() == inst.n() && alloc.items() == inst.m() && alloc.complete(),
          Errc::BadArgument, "allocation does not match the instance");
  require_supported(classify(inst));

  const int m = inst.m();
  // edge r -> r' when the holder of r weakly prefers r'; strict edges tried as
  // cycle anchors in (r, r') order, closed by a BFS path r' -> r.
  auto edge = [&](int r, int s) {
    int holder = alloc.owner(r);
    return inst.value(holder, s) >= inst.value(holder, r);
  };
  auto strict_edge = [&](int r, int s) {
    int holder = alloc.owner(r);
    return inst.value(holder, s) > inst.value(holder, r);
  };

  for (int r = 0; r < m; ++r) {
    for (int s = 0; s < m; ++s) {
      if (r == s || !strict_edge(r, s)) continue;
      // BFS path from s back to r.
      std::vector<int> parent(m, -2);
      parent[s] = -1;
      std::queue<int> frontier;
      frontier.push(s);
      while (!frontier.empty() && parent[r] == -2) {
        int u = frontier.front();
        frontier.pop();
        for (int w = 0; w < m; ++w) {
          if (w == u || parent[w] != -2 || !edge(u, w)) continue;
          parent[w] = u;
          frontier.push(w);
        }
      }
      if (parent[r] == -2) continue;

      ImprovementCycle cycle;
      std::vector<int> path;  // r ... s reversed
      for (int u = r; u != -1; u = parent[u]) path.push_back(u);
      // path = r, ..., s walking parents; cycle order is r -> s -> ... -> r.
      cycle.items.push_back(r);
      for (auto it = path.rbegin(); it != path.rend() - 1; ++it) cycle.items.push_back(*it);
      cycle.strict_edge = 0;
      for (int item : cycle.items) cycle.holders.push_back(alloc.owner(item));

      Allocation improved = alloc;
      const int len = static_cast<int>(cycle.items.size());
      for (int t = 0; t < len; ++t)
        improved.assign(cycle.items[(t + 1) % len], cycle.holders[t]);

      // The rotation must weakly improve everyone and strictly improve someone.
      bool strict = false;
      for (int i = 0; i < inst.n(); ++i) {
        Int before = inst.bundle_value(i, alloc.bundle(i));
        Int after = inst.bundle_value(i, improved.bundle(i));
        check_invariant(after >= before, "improvement cycle hurt an agent");
        if (after > before) strict = true;
      }
      check_invariant(strict, "improvement cycle helped nobody");
      return Improvement{std::move(cycle), std::move(improved)};
    }
  }
  return std::nullopt;
}

ChainResult pareto_chain(const Instance& inst, const Allocation& start) {
  const Classification cls = classify(inst);
  require_supported(cls);
  const bool bivalued = cls.has(UtilityClass::Bivalued);
  const int m = inst.m();
  const Int step_bound = bivalued ? m : static_cast<Int>(m) * m;

  ChainResult result{start, 0};
  Int potential = bivalued ? big_assignment_count(inst, result.alloc, cls.bivalued_ab->second)
                           : wolex_potential(inst, result.alloc);
  while (auto improvement = find_pareto_improvement(inst, result.alloc)) {
    result.alloc = improvement->improved;
    ++result.steps;
    check_invariant(result.steps <= step_bound, "Pareto chain exceeded its step bound");
    Int next = bivalued ? big_assignment_count(inst, result.alloc, cls.bivalued_ab->second)
                        : wolex_potential(inst, result.alloc);
    // Goods: b-count strictly up, tier potential strictly down. Chores: the
    // opposite directions.
    if (bivalued) {
      if (inst.kind() == Kind::Goods)
        check_invariant(next > potential, "bivalued potential must increase for goods");
      else
        check_invariant(next < potential, "bivalued potential must decrease for chores");
    } else {
      if (inst.kind() == Kind::Goods)
        check_invariant(next < potential, "tier potential must decrease for goods");
      else
        check_invariant(next > potential, "tier potential must increase for chores");
    }
    potential = next;
  }
  return result;
}

Allocation solve_mms_po(const Instance& inst) {
  const Classification cls = classify(inst);
  if (!cls.has(UtilityClass::WeaklyLexicographic) && !cls.has(UtilityClass::FactoredBivalued)) {
    if (cls.has(UtilityClass::PersonalizedBivalued))
      fail(Errc::UnsupportedClass,
           "MMS+PO for personalized bivalued utilities is an open problem; refusing");
    fail(Errc::UnsupportedClass,
         "MMS+PO supports weakly lexicographic and factored bivalued instances");
  }
  Allocation mms_alloc = mms::solve_mms(inst);
  return pareto_chain(inst, mms_alloc).alloc;
}

PoFpoReport check_po_fpo_equivalence(const Instance& inst, const std::vector<Allocation>& sample,
                                     const oracle::EnumerationBudget& budget) {
  require(classify(inst).has(UtilityClass::Bivalued), Errc::UnsupportedClass,
          "PO/fPO equivalence holds for bivalued instances only");
  PoFpoReport report;
  for (const Allocation& alloc : sample) {
    bool cycle_po = !find_pareto_improvement(inst, alloc).has_value();
    bool oracle_po = oracle::is_po_bruteforce(inst, alloc, budget).holds;
    ++report.checked;
    if (cycle_po != oracle_po) {
      report.agree = false;
      report.disagreement = alloc;
      return report;
    }
  }
  return report;
}

}  // namespace fairdiv::pareto
