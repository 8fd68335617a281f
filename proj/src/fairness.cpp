#include "fairdiv/fairness.hpp"

#include <algorithm>

namespace fairdiv::fairness {

const char* property_name(Property p) {
  switch (p) {
    case Property::EF: return "ef";
    case Property::EF1: return "ef1";
    case Property::PEF1: return "pef1";
    case Property::MMS: return "mms";
    case Property::PO: return "po";
  }
  return "unknown";
}

static void require_match(const Instance& inst, const Allocation& alloc) {
  require(alloc.agents() == inst.n() && alloc.items() == inst.m() && alloc.complete(),
          Errc::BadArgument, "allocation does not match the instance");
}

// Does some single removal from x_i or x_j make i stop envying j?
static bool pair_ef1(const Instance& inst, const std::vector<std::vector<int>>& bundles, int i,
                     int j) {
  const auto& own = bundles[i];
  const auto& other = bundles[j];
  if (own.empty() && other.empty()) return true;
  const Int vi_own = inst.bundle_value(i, own);
  const Int vi_other = inst.bundle_value(i, other);
  if (vi_own >= vi_other) return true;
  // Remove i's worst item from her own bundle.
  if (!own.empty()) {
    Int worst = inst.value(i, own[0]);
    for (int r : own) worst = std::min(worst, inst.value(i, r));
    if (vi_own - worst >= vi_other) return true;
  }
  // Remove the item of j's bundle that i values most.
  if (!other.empty()) {
    Int best = inst.value(i, other[0]);
    for (int r : other) best = std::max(best, inst.value(i, r));
    if (vi_own >= vi_other - best) return true;
  }
  return false;
}

FairnessReport is_ef1(const Instance& inst, const Allocation& alloc) {
  require_match(inst, alloc);
  FairnessReport report{Property::EF1, true, std::nullopt, std::nullopt, ""};
  const auto bundles = alloc.bundles();
  for (int i = 0; i < inst.n(); ++i) {
    for (int j = 0; j < inst.n(); ++j) {
      if (i == j) continue;
      if (!pair_ef1(inst, bundles, i, j)) {
        report.holds = false;
        report.witness = {i, j};
        report.detail = "no single removal stops " + inst.agent_name(i) + " envying " +
                        inst.agent_name(j);
        return report;
      }
    }
  }
  return report;
}

FairnessReport is_ef(const Instance& inst, const Allocation& alloc) {
  require_match(inst, alloc);
  FairnessReport report{Property::EF, true, std::nullopt, std::nullopt, ""};
  const auto bundles = alloc.bundles();
  for (int i = 0; i < inst.n(); ++i) {
    const Int own = inst.bundle_value(i, bundles[i]);
    for (int j = 0; j < inst.n(); ++j) {
      if (i == j) continue;
      if (own < inst.bundle_value(i, bundles[j])) {
        report.holds = false;
        report.witness = {i, j};
        report.detail = inst.agent_name(i) + " envies " + inst.agent_name(j);
        return report;
      }
    }
  }
  return report;
}

FairnessReport is_pef1(const Allocation& alloc, const std::vector<Int>& prices) {
  require(static_cast<int>(prices.size()) == alloc.items(), Errc::BadArgument,
          "price vector size mismatch");
  for (Int p : prices) require(p > 0, Errc::BadArgument, "prices must be strictly positive");

  std::vector<Wide> spend(alloc.agents(), 0);
  std::vector<Int> max_price(alloc.agents(), 0);
  for (int r = 0; r < alloc.items(); ++r) {
    int o = alloc.owner(r);
    require(o >= 0, Errc::BadArgument, "pEF1 needs a complete allocation");
    spend[o] += prices[r];
    max_price[o] = std::max(max_price[o], prices[r]);
  }
  Wide least = spend.empty() ? 0 : *std::min_element(spend.begin(), spend.end());

  FairnessReport report{Property::PEF1, true, std::nullopt, std::nullopt, ""};
  for (int i = 0; i < alloc.agents(); ++i) {
    Wide upto1 = spend[i] == 0 ? 0 : spend[i] - max_price[i];
    if (upto1 > least) {
      report.holds = false;
      for (int j = 0; j < alloc.agents(); ++j)
        if (spend[j] == least) {
          report.witness = {i, j};
          break;
        }
      report.detail = "price-up-to-one " + wide_to_string(upto1) + " exceeds least spending " +
                      wide_to_string(least);
      return report;
    }
  }
  return report;
}

FairnessReport is_mms_alloc(const Instance& inst, const Allocation& alloc,
                            const std::vector<Int>& mms_values) {
  require_match(inst, alloc);
  require(static_cast<int>(mms_values.size()) == inst.n(), Errc::BadArgument,
          "need one MMS value per agent");
  FairnessReport report{Property::MMS, true, std::nullopt, std::nullopt, ""};
  for (int i = 0; i < inst.n(); ++i) {
    if (inst.bundle_value(i, alloc.bundle(i)) < mms_values[i]) {
      report.holds = false;
      report.witness = {i, i};
      report.detail = inst.agent_name(i) + " falls below her maximin share " +
                      std::to_string(mms_values[i]);
      return report;
    }
  }
  return report;
}

bool ef1_goods_form(const Instance& inst, const Allocation& alloc) {
  require_match(inst, alloc);
  const auto bundles = alloc.bundles();
  for (int i = 0; i < inst.n(); ++i) {
    const Int own = inst.bundle_value(i, bundles[i]);
    for (int j = 0; j < inst.n(); ++j) {
      if (i == j) continue;
      Int other = inst.bundle_value(i, bundles[j]);
      Int best = 0;
      for (int r : bundles[j]) best = std::max(best, inst.value(i, r));
      if (own < other - best) return false;
    }
  }
  return true;
}

bool ef1_chores_form(const Instance& inst, const Allocation& alloc) {
  require_match(inst, alloc);
  const auto bundles = alloc.bundles();
  for (int i = 0; i < inst.n(); ++i) {
    const Int own = inst.bundle_value(i, bundles[i]);
    Int worst = 0;
    for (int r : bundles[i]) worst = std::min(worst, inst.value(i, r));
    for (int j = 0; j < inst.n(); ++j) {
      if (i == j) continue;
      if (own - worst < inst.bundle_value(i, bundles[j])) return false;
    }
  }
  return true;
}

}  // namespace fairdiv::fairness
