#include "fairdiv/mms.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace fairdiv::mms {

MaximinPartition greedy_partition(const std::vector<Int>& values, int n) {
  require(n >= 1, Errc::BadArgument, "need at least one bundle");
  const int m = static_cast<int>(values.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::llabs(values[a]) > std::llabs(values[b]);
  });

  MaximinPartition out;
  out.bundles.assign(n, {});
  std::vector<Wide> load(n, 0);  // |total| per bundle
  for (int r : order) {
    int k = 0;
    for (int j = 1; j < n; ++j)
      if (load[j] < load[k]) k = j;
    out.bundles[k].push_back(r);
    load[k] += std::llabs(values[r]);
    out.placements.push_back(k);
  }

  Wide min_value = 0;
  for (int k = 0; k < n; ++k) {
    Wide sum = 0;
    for (int r : out.bundles[k]) sum += values[r];
    if (k == 0 || sum < min_value) min_value = sum;
  }
  out.min_value = static_cast<Int>(min_value);
  return out;
}

MaximinPartition mms_partition_factored(const std::vector<Int>& values, int n) {
  require(detail::row_is_factored(values), Errc::NotFactored,
          "greedy maximin partition requires a factored row");
  return greedy_partition(values, n);
}

Int mms_value_factored(const std::vector<Int>& values, int n) {
  return mms_partition_factored(values, n).min_value;
}

Int mms_value_for_row(const std::vector<Int>& row, int n) {
  if (detail::row_is_factored(row)) return mms_value_factored(row, n);
  if (detail::row_is_weakly_lexicographic(row)) {
    // The canonical power-of-m row shares every maximin partition with the
    // original; only the value must be read off the original row.
    const auto canonical = canonicalize_wolex_row(row, static_cast<int>(row.size()));
    const auto partition = greedy_partition(canonical, n);
    Int value = 0;
    bool first = true;
    for (const auto& bundle : partition.bundles) {
      Int sum = 0;
      for (int r : bundle) sum += row[r];
      if (first || sum < value) value = sum;
      first = false;
    }
    return value;
  }
  fail(Errc::UnsupportedClass, "row is neither factored nor weakly lexicographic");
}

static void require_ordered(const std::vector<Int>& row) {
  for (std::size_t t = 1; t < row.size(); ++t)
    require(std::llabs(row[t - 1]) >= std::llabs(row[t]), Errc::BadArgument,
            "row is not ordered by nonincreasing |value|");
}

int first_bad_cut(const std::vector<Int>& ordered_row, int n) {
  require_ordered(ordered_row);
  require(n >= 1, Errc::BadArgument, "need n >= 1");
  const int m = static_cast<int>(ordered_row.size());
  for (int k = 1; k < m; ++k)
    if (ordered_row[k - 1] != ordered_row[k] && k % n != 0) return k;
  return m;
}

CutProfile cut_profile_pbv(const std::vector<Int>& ordered_row, int n) {
  require_ordered(ordered_row);
  const int m = static_cast<int>(ordered_row.size());
  CutProfile profile;
  Int small = 0, big = 0;
  for (Int v : ordered_row) {
    require(v != 0, Errc::ZeroValuation, "personalized bivalued rows exclude zero");
    Int a = std::llabs(v);
    if (small == 0 || a < small) small = a;
    if (a > big) big = a;
  }
  if (m == 0) {
    profile.cut = 0;
    return profile;
  }
  require(big % small == 0, Errc::NotFactored,
          "personalized bivalued ratio p is not an integer");
  for (Int v : ordered_row)
    require(std::llabs(v) == small || std::llabs(v) == big, Errc::BadArgument,
            "row uses more than two magnitudes");
  profile.big = big / small;
  profile.cut = first_bad_cut(ordered_row, n);
  profile.active = profile.cut == m ? 0 : n - profile.cut % n;
  profile.idle = std::min<Int>(profile.big * profile.active, m - profile.cut);
  return profile;
}

std::vector<int> wolex_reduction_bundle(int cut, int n) {
  require(cut >= 1 && n >= 1, Errc::BadArgument, "need cut >= 1 and n >= 1");
  const int k = (cut - 1) / n;
  std::vector<int> bundle;
  for (int j = 0; j <= k; ++j) bundle.push_back(j * n);  // positions 1, n+1, ..., kn+1
  return bundle;
}

std::vector<int> pbv_reduction_bundle(const CutProfile& profile, int n, int m) {
  require(m >= 1 && n >= 1, Errc::BadArgument, "need m >= 1 and n >= 1");
  const Int gap = std::max<Int>(profile.idle - profile.active, 0);
  const int k = static_cast<int>((m - gap - 1) / n);
  std::vector<int> bundle;
  for (int j = 0; j <= k; ++j) bundle.push_back(j * n);
  return bundle;
}

Reduction select_reduction(const std::vector<std::vector<Int>>& rows, Kind kind,
                           UtilityClass cls) {
  require(!rows.empty(), Errc::BadArgument, "no agents left");
  const int n = static_cast<int>(rows.size());
  const int m = static_cast<int>(rows[0].size());
  require(n >= 2, Errc::BadArgument, "reductions need at least two agents");
  require(m >= 1, Errc::BadArgument, "reductions need at least one item");

  if (cls == UtilityClass::WeaklyLexicographic) {
    int chosen = 0, chosen_cut = first_bad_cut(rows[0], n);
    for (int i = 1; i < n; ++i) {
      int cut = first_bad_cut(rows[i], n);
      const bool better = kind == Kind::Goods ? cut < chosen_cut : cut > chosen_cut;
      if (better) {
        chosen = i;
        chosen_cut = cut;
      }
    }
    return {chosen, wolex_reduction_bundle(chosen_cut, n), ReductionRule::WolexCut};
  }

  require(cls == UtilityClass::FactoredPersonalizedBivalued, Errc::UnsupportedClass,
          "select_reduction handles wolex and factored personalized bivalued only");
  // Agents whose bundle index k ties share the identical bundle {1,n+1,...},
  // so selection compares k directly: the smallest bundle for goods (contained
  // in everyone else's), the largest for chores (containing them).
  int chosen = 0;
  std::vector<int> chosen_bundle = pbv_reduction_bundle(cut_profile_pbv(rows[0], n), n, m);
  for (int i = 1; i < n; ++i) {
    auto bundle = pbv_reduction_bundle(cut_profile_pbv(rows[i], n), n, m);
    const bool better = kind == Kind::Goods ? bundle.size() < chosen_bundle.size()
                                            : bundle.size() > chosen_bundle.size();
    if (better) {
      chosen = i;
      chosen_bundle = std::move(bundle);
    }
  }
  return {chosen, std::move(chosen_bundle), ReductionRule::PbvIdleTime};
}

MmsSolve solve_mms_traced(const Instance& inst) {
  if (inst.n() == 1) {
    // The whole set is the one-bundle maximin partition for any utility.
    Allocation everything(1, inst.m());
    for (int r = 0; r < inst.m(); ++r) everything.assign(r, 0);
    return {everything, {}, UtilityClass::GeneralAdditive};
  }
  const Classification cls = classify(inst);
  UtilityClass route;
  if (cls.has(UtilityClass::FactoredPersonalizedBivalued)) {
    route = UtilityClass::FactoredPersonalizedBivalued;
  } else if (cls.has(UtilityClass::WeaklyLexicographic)) {
    route = UtilityClass::WeaklyLexicographic;
  } else if (cls.has(UtilityClass::PersonalizedBivalued)) {
    fail(Errc::NotFactored,
         "personalized bivalued instance with non-integer p_i: MMS existence is open, refusing");
  } else {
    fail(Errc::UnsupportedClass,
         "MMS solver supports weakly lexicographic and factored personalized bivalued instances");
  }

  const OrderedView view = order_instance(inst);
  MmsSolve solve{Allocation(inst.n(), inst.m()), {}, route};

  std::vector<int> agents(inst.n());
  std::iota(agents.begin(), agents.end(), 0);
  std::vector<int> positions(inst.m());
  std::iota(positions.begin(), positions.end(), 0);

  Allocation ordered_alloc(inst.n(), inst.m());
  while (agents.size() > 1) {
    const int n_cur = static_cast<int>(agents.size());
    const int m_cur = static_cast<int>(positions.size());

    if (m_cur == 0) {
      // Nothing left to hand out: empty bundles satisfy MMS of the empty set.
      agents.erase(agents.begin());
      continue;
    }

    std::vector<std::vector<Int>> rows(n_cur);
    for (int i = 0; i < n_cur; ++i) {
      rows[i].reserve(m_cur);
      for (int pos : positions) rows[i].push_back(view.ordered_value(agents[i], pos));
      require_ordered(rows[i]);  // removals keep each row sorted
    }

    Reduction red = select_reduction(rows, inst.kind(), route);
    solve.steps.push_back({agents, rows, red});

    const int global_agent = agents[red.agent];
    for (auto it = red.bundle.rbegin(); it != red.bundle.rend(); ++it) {
      ordered_alloc.assign(positions[*it], global_agent);
      positions.erase(positions.begin() + *it);
    }
    agents.erase(agents.begin() + red.agent);
  }
  for (int pos : positions) ordered_alloc.assign(pos, agents[0]);

  solve.alloc = lift_allocation(view, ordered_alloc);
  return solve;
}

Allocation solve_mms(const Instance& inst) { return solve_mms_traced(inst).alloc; }

std::vector<Int> mms_values(const Instance& inst) {
  std::vector<Int> out(inst.n());
  for (int i = 0; i < inst.n(); ++i) out[i] = mms_value_for_row(inst.row(i), inst.n());
  return out;
}

}  // namespace fairdiv::mms
