#include "fairdiv/oracle.hpp"

#include <algorithm>

namespace fairdiv::oracle {

std::uint64_t assignment_count(int n, int m, const EnumerationBudget& budget) {
  require(n >= 1 && m >= 0, Errc::BadArgument, "need n >= 1, m >= 0");
  require(budget.max_assignments > 0, Errc::BadArgument, "budget must be positive");
  std::uint64_t total = 1;
  for (int r = 0; r < m; ++r) {
    require(total <= budget.max_assignments / static_cast<std::uint64_t>(n), Errc::BudgetExceeded,
            "n^m exceeds the enumeration budget");
    total *= static_cast<std::uint64_t>(n);
  }
  require(total <= budget.max_assignments, Errc::BudgetExceeded,
          "n^m exceeds the enumeration budget");
  return total;
}

void enumerate_allocations(int n, int m, const std::function<bool(const Allocation&)>& visit,
                           const EnumerationBudget& budget) {
  assignment_count(n, m, budget);
  Allocation alloc(n, m);
  std::vector<int> owner(m, 0);
  for (int r = 0; r < m; ++r) alloc.assign(r, 0);
  for (;;) {
    if (!visit(alloc)) return;
    int r = m - 1;
    while (r >= 0 && owner[r] == n - 1) {
      owner[r] = 0;
      alloc.assign(r, 0);
      --r;
    }
    if (r < 0) return;
    ++owner[r];
    alloc.assign(r, owner[r]);
  }
}

namespace {

struct MmsSearch {
  const std::vector<Int>* values;
  int n;
  std::vector<Wide> sums;
  std::vector<int> owner;
  std::vector<int> best_owner;
  Wide best_min;
  bool found = false;

  void run(int item) {
    const auto& v = *values;
    if (item == static_cast<int>(v.size())) {
      Wide worst = sums[0];
      for (int k = 1; k < n; ++k) worst = std::min(worst, sums[k]);
      if (!found || worst > best_min) {
        found = true;
        best_min = worst;
        best_owner = owner;
      }
      return;
    }
    // Item 0 stays in bundle 0: bundle labels are symmetric for the maximin.
    const int limit = item == 0 ? 1 : n;
    for (int k = 0; k < limit; ++k) {
      sums[k] += v[item];
      owner[item] = k;
      run(item + 1);
      sums[k] -= v[item];
    }
  }
};

}  // namespace

MaximinResult exact_mms(const std::vector<Int>& values, int n, const EnumerationBudget& budget) {
  const int m = static_cast<int>(values.size());
  assignment_count(n, m, budget);

  MmsSearch search;
  search.values = &values;
  search.n = n;
  search.sums.assign(n, 0);
  search.owner.assign(m, 0);
  search.best_min = 0;
  search.run(0);

  MaximinResult out;
  out.bundles.assign(n, {});
  if (m == 0) {
    out.value = 0;
    return out;
  }
  out.value = static_cast<Int>(search.best_min);
  for (int r = 0; r < m; ++r) out.bundles[search.best_owner[r]].push_back(r);
  return out;
}

fairness::FairnessReport is_po_bruteforce(const Instance& inst, const Allocation& alloc,
                                          const EnumerationBudget& budget) {
  require(alloc.agents() == inst.n() && alloc.items() == inst.m() && alloc.complete(),
          Errc::BadArgument, "allocation does not match the instance");
  std::vector<Int> target(inst.n());
  for (int i = 0; i < inst.n(); ++i) target[i] = inst.bundle_value(i, alloc.bundle(i));

  fairness::FairnessReport report{fairness::Property::PO, true, std::nullopt, std::nullopt, ""};
  std::vector<Int> sums(inst.n(), 0);
  enumerate_allocations(
      inst.n(), inst.m(),
      [&](const Allocation& candidate) {
        std::fill(sums.begin(), sums.end(), 0);
        for (int r = 0; r < inst.m(); ++r) sums[candidate.owner(r)] += inst.value(candidate.owner(r), r);
        bool weak = true, strict = false;
        for (int i = 0; i < inst.n(); ++i) {
          if (sums[i] < target[i]) {
            weak = false;
            break;
          }
          if (sums[i] > target[i]) strict = true;
        }
        if (weak && strict) {
          report.holds = false;
          report.dominator = candidate;
          report.detail = "Pareto dominated by an enumerated allocation";
          return false;
        }
        return true;
      },
      budget);
  return report;
}

std::optional<Allocation> exists_ef1_po(const Instance& inst, const EnumerationBudget& budget) {
  std::optional<Allocation> found;
  enumerate_allocations(
      inst.n(), inst.m(),
      [&](const Allocation& candidate) {
        if (!fairness::is_ef1(inst, candidate).holds) return true;
        if (!is_po_bruteforce(inst, candidate, budget).holds) return true;
        found = candidate;
        return false;
      },
      budget);
  return found;
}

}  // namespace fairdiv::oracle
