#include "fairdiv/instance.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace fairdiv {

Instance::Instance(Kind kind, std::vector<std::vector<Int>> values,
                   std::vector<std::string> agent_names, std::vector<std::string> item_names)
    : kind_(kind), values_(std::move(values)) {
  require(!values_.empty(), Errc::EmptyAgents, "instance needs at least one agent");
  const std::size_t m = values_[0].size();
  for (const auto& row : values_) {
    require(row.size() == m, Errc::RaggedRows, "valuation rows have unequal lengths");
    for (Int v : row) {
      require(std::llabs(v) <= kMaxValueMagnitude, Errc::MagnitudeExceeded,
              "valuation magnitude exceeds 1e9");
      if (kind_ == Kind::Goods)
        require(v >= 0, Errc::MixedSigns, "goods instance with a negative valuation");
      else
        require(v <= 0, Errc::MixedSigns, "chores instance with a positive valuation");
    }
  }
  if (agent_names.empty()) {
    for (int i = 0; i < n(); ++i) agent_names.push_back("a" + std::to_string(i + 1));
  }
  if (item_names.empty()) {
    for (int r = 0; r < static_cast<int>(m); ++r) item_names.push_back("c" + std::to_string(r + 1));
  }
  require(agent_names.size() == values_.size(), Errc::InvalidDocument,
          "agent name count does not match row count");
  require(item_names.size() == m, Errc::InvalidDocument,
          "item name count does not match column count");
  agent_names_ = std::move(agent_names);
  item_names_ = std::move(item_names);
}

Int Instance::bundle_value(int agent, const std::vector<int>& items) const {
  Int total = 0;
  for (int r : items) total += values_[agent][r];
  return total;
}

Allocation Allocation::from_bundles(int n_agents, int m_items,
                                    const std::vector<std::vector<int>>& bundles) {
  require(static_cast<int>(bundles.size()) == n_agents, Errc::BadArgument,
          "bundle count does not match agent count");
  Allocation alloc(n_agents, m_items);
  for (int i = 0; i < n_agents; ++i) {
    for (int r : bundles[i]) {
      require(r >= 0 && r < m_items, Errc::BadArgument, "item index out of range");
      require(alloc.owner_[r] == -1, Errc::BadArgument, "item assigned twice");
      alloc.owner_[r] = i;
    }
  }
  return alloc;
}

void Allocation::assign(int item, int agent) {
  check_invariant(item >= 0 && item < items(), "assign: item out of range");
  check_invariant(agent >= -1 && agent < n_, "assign: agent out of range");
  owner_[item] = agent;
}

bool Allocation::complete() const {
  return std::all_of(owner_.begin(), owner_.end(), [](int o) { return o >= 0; });
}

std::vector<int> Allocation::bundle(int agent) const {
  std::vector<int> out;
  for (int r = 0; r < items(); ++r)
    if (owner_[r] == agent) out.push_back(r);
  return out;
}

std::vector<std::vector<int>> Allocation::bundles() const {
  std::vector<std::vector<int>> out(n_);
  for (int r = 0; r < items(); ++r)
    if (owner_[r] >= 0) out[owner_[r]].push_back(r);
  return out;
}

const char* utility_class_name(UtilityClass c) {
  switch (c) {
    case UtilityClass::Binary: return "binary";
    case UtilityClass::Bivalued: return "bivalued";
    case UtilityClass::FactoredBivalued: return "factored-bivalued";
    case UtilityClass::PersonalizedBivalued: return "personalized-bivalued";
    case UtilityClass::FactoredPersonalizedBivalued: return "factored-personalized-bivalued";
    case UtilityClass::Factored: return "factored";
    case UtilityClass::WeaklyLexicographic: return "weakly-lexicographic";
    case UtilityClass::GeneralAdditive: return "general-additive";
  }
  return "unknown";
}

namespace detail {

// Distinct nonzero magnitudes, ascending.
static std::vector<Int> magnitudes(const std::vector<Int>& row) {
  std::vector<Int> mags;
  for (Int v : row)
    if (v != 0) mags.push_back(std::llabs(v));
  std::sort(mags.begin(), mags.end());
  mags.erase(std::unique(mags.begin(), mags.end()), mags.end());
  return mags;
}

bool row_is_factored(const std::vector<Int>& row) {
  const std::vector<Int> mags = magnitudes(row);
  for (std::size_t j = 1; j < mags.size(); ++j)
    if (mags[j] % mags[j - 1] != 0) return false;
  return true;
}

bool row_is_weakly_lexicographic(const std::vector<Int>& row) {
  for (Int v : row)
    if (v == 0) return false;
  const std::vector<Int> mags = magnitudes(row);  // ascending tiers
  // Each tier value must exceed the total magnitude of all strictly lower tiers.
  Int below = 0;
  for (Int tier : mags) {
    if (tier <= below) return false;
    Int count = 0;
    for (Int v : row)
      if (std::llabs(v) == tier) ++count;
    below += count * tier;
  }
  return true;
}

std::optional<std::pair<Int, Int>> row_bivalued_pair(const std::vector<Int>& row) {
  for (Int v : row)
    if (v == 0) return std::nullopt;
  const std::vector<Int> mags = magnitudes(row);
  if (mags.empty()) return std::nullopt;  // no items: treat as not bivalued-parameterized
  if (mags.size() == 1) return std::make_pair(mags[0], mags[0]);
  if (mags.size() == 2) return std::make_pair(mags[0], mags[1]);
  return std::nullopt;
}

}  // namespace detail

Classification classify(const Instance& inst) {
  Classification out;
  out.tags.insert(UtilityClass::GeneralAdditive);
  if (inst.m() == 0) {
    // Vacuously every class.
    out.tags = {UtilityClass::Binary,
                UtilityClass::Bivalued,
                UtilityClass::FactoredBivalued,
                UtilityClass::PersonalizedBivalued,
                UtilityClass::FactoredPersonalizedBivalued,
                UtilityClass::Factored,
                UtilityClass::WeaklyLexicographic,
                UtilityClass::GeneralAdditive};
    out.bivalued_ab = std::make_pair(1, 1);
    out.agent_ab.assign(inst.n(), {1, 1});
    return out;
  }

  bool binary = true, factored = true, wolex = true;
  for (int i = 0; i < inst.n(); ++i) {
    for (Int v : inst.row(i))
      if (std::llabs(v) > 1) binary = false;
    if (!detail::row_is_factored(inst.row(i))) factored = false;
    if (!detail::row_is_weakly_lexicographic(inst.row(i))) wolex = false;
  }
  if (binary) out.tags.insert(UtilityClass::Binary);
  if (factored) out.tags.insert(UtilityClass::Factored);
  if (wolex) out.tags.insert(UtilityClass::WeaklyLexicographic);

  // Common bivalued pair over the whole matrix.
  {
    std::vector<Int> all;
    bool zero = false;
    for (int i = 0; i < inst.n(); ++i)
      for (Int v : inst.row(i)) {
        if (v == 0) zero = true;
        all.push_back(v);
      }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (!zero && all.size() <= 2) {
      Int a = std::llabs(all.front()), b = std::llabs(all.back());
      if (a > b) std::swap(a, b);
      out.bivalued_ab = std::make_pair(a, b);
      out.tags.insert(UtilityClass::Bivalued);
      if (b % a == 0) out.tags.insert(UtilityClass::FactoredBivalued);
    }
  }

  // Personalized bivalued: each row on its own.
  {
    bool pbv = true, factored_pbv = true;
    std::vector<std::pair<Int, Int>> ab;
    for (int i = 0; i < inst.n(); ++i) {
      auto pair = detail::row_bivalued_pair(inst.row(i));
      if (!pair) {
        pbv = false;
        break;
      }
      if (pair->second % pair->first != 0) factored_pbv = false;
      ab.push_back(*pair);
    }
    if (pbv) {
      out.tags.insert(UtilityClass::PersonalizedBivalued);
      out.agent_ab = std::move(ab);
      if (factored_pbv) out.tags.insert(UtilityClass::FactoredPersonalizedBivalued);
    }
  }
  return out;
}

NormalizedBivalued normalize_bivalued_chores(const Instance& inst) {
  require(inst.kind() == Kind::Chores, Errc::KindMismatch,
          "normalize_bivalued_chores requires a chores instance");
  for (int i = 0; i < inst.n(); ++i)
    for (Int v : inst.row(i))
      require(v != 0, Errc::ZeroValuation, "bivalued utilities exclude zero valuations");

  Classification cls = classify(inst);
  require(cls.has(UtilityClass::Bivalued), Errc::NotBivalued,
          "instance does not use a common two-value set");
  auto [small, big] = *cls.bivalued_ab;

  NormalizedBivalued out{inst, small, big == small ? 2 * small : big, {}, {}};
  if (inst.m() == 0 || big == small) {
    out.scale_num.assign(inst.n(), 1);
    out.scale_den.assign(inst.n(), 1);
    return out;
  }

  std::vector<std::vector<Int>> values = inst.matrix();
  out.scale_num.assign(inst.n(), 1);
  out.scale_den.assign(inst.n(), 1);
  for (int i = 0; i < inst.n(); ++i) {
    bool all_big = std::all_of(values[i].begin(), values[i].end(),
                               [&](Int v) { return std::llabs(v) == big; });
    if (all_big) {
      for (Int& v : values[i]) v = -small;
      out.scale_num[i] = small;
      out.scale_den[i] = big;
    }
  }
  out.instance = Instance(Kind::Chores, std::move(values), inst.agent_names(), inst.item_names());
  return out;
}

OrderedView::OrderedView(Instance base, std::vector<std::vector<int>> perm)
    : base_(std::move(base)), perm_(std::move(perm)) {
  check_invariant(static_cast<int>(perm_.size()) == base_.n(), "OrderedView: bad perm shape");
  for (int i = 0; i < base_.n(); ++i) {
    check_invariant(static_cast<int>(perm_[i].size()) == base_.m(), "OrderedView: bad perm row");
    for (int t = 1; t < base_.m(); ++t)
      check_invariant(std::llabs(ordered_value(i, t - 1)) >= std::llabs(ordered_value(i, t)),
                      "OrderedView: row not sorted by |value|");
  }
}

std::vector<Int> OrderedView::ordered_row(int agent) const {
  std::vector<Int> row(base_.m());
  for (int t = 0; t < base_.m(); ++t) row[t] = ordered_value(agent, t);
  return row;
}

OrderedView order_instance(const Instance& inst) {
  std::vector<std::vector<int>> perm(inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    perm[i].resize(inst.m());
    std::iota(perm[i].begin(), perm[i].end(), 0);
    std::stable_sort(perm[i].begin(), perm[i].end(), [&](int a, int b) {
      return std::llabs(inst.value(i, a)) > std::llabs(inst.value(i, b));
    });
  }
  return OrderedView(inst, std::move(perm));
}

Allocation lift_allocation(const OrderedView& view, const Allocation& ordered_alloc) {
  const Instance& inst = view.base();
  require(ordered_alloc.agents() == inst.n() && ordered_alloc.items() == inst.m() &&
              ordered_alloc.complete(),
          Errc::BadArgument, "ordered allocation does not match the instance");

  Allocation lifted(inst.n(), inst.m());
  std::vector<bool> taken(inst.m(), false);
  // Goods walk positions from the most valuable down; chores from the least
  // costly up. Either way the holder of the position being processed can
  // always find a remaining item at least as good as her ordered one.
  for (int step = 0; step < inst.m(); ++step) {
    int pos = inst.kind() == Kind::Goods ? step : inst.m() - 1 - step;
    int agent = ordered_alloc.owner(pos);
    int best = -1;
    for (int r = 0; r < inst.m(); ++r) {
      if (taken[r]) continue;
      if (best == -1 || inst.value(agent, r) > inst.value(agent, best)) best = r;
    }
    check_invariant(best >= 0, "lift_allocation: ran out of items");
    taken[best] = true;
    lifted.assign(best, agent);
  }
  return lifted;
}

std::vector<Int> canonicalize_wolex_row(const std::vector<Int>& row, int m) {
  require(detail::row_is_weakly_lexicographic(row), Errc::UnsupportedClass,
          "row is not weakly lexicographic");
  std::vector<Int> mags;  // ascending tiers
  for (Int v : row) mags.push_back(std::llabs(v));
  std::sort(mags.begin(), mags.end());
  mags.erase(std::unique(mags.begin(), mags.end()), mags.end());

  std::map<Int, Int> tier_value;  // magnitude -> m^rank, rank 0 = lowest tier
  Int power = 1;
  for (std::size_t j = 0; j < mags.size(); ++j) {
    tier_value[mags[j]] = power;
    if (j + 1 < mags.size()) {
      require(power <= (1'000'000'000'000'000'000LL) / std::max<Int>(m, 1), Errc::Overflow,
              "canonical tier value exceeds the 64-bit range");
      power *= m;
    }
  }
  std::vector<Int> out(row.size());
  for (std::size_t r = 0; r < row.size(); ++r)
    out[r] = row[r] < 0 ? -tier_value[std::llabs(row[r])] : tier_value[std::llabs(row[r])];
  return out;
}

Instance canonicalize_wolex(const Instance& inst) {
  std::vector<std::vector<Int>> values;
  values.reserve(inst.n());
  for (int i = 0; i < inst.n(); ++i) values.push_back(canonicalize_wolex_row(inst.row(i), inst.m()));
  return Instance(inst.kind(), std::move(values), inst.agent_names(), inst.item_names());
}

}  // namespace fairdiv
