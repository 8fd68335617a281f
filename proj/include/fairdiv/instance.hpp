#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/types.hpp"

namespace fairdiv {

// Largest valuation magnitude accepted by validation. Keeps every sum and
// cross-multiplied ratio in the library inside __int128 without checks.
inline constexpr Int kMaxValueMagnitude = 1'000'000'000;

/// A goods or chore division instance: n agents, m items, integer valuations.
/// Immutable after construction; all operations are pure functions over it.
class Instance {
 public:
  Instance(Kind kind, std::vector<std::vector<Int>> values,
           std::vector<std::string> agent_names = {}, std::vector<std::string> item_names = {});

  Kind kind() const { return kind_; }
  int n() const { return static_cast<int>(values_.size()); }
  int m() const { return static_cast<int>(values_.empty() ? 0 : values_[0].size()); }
  Int value(int agent, int item) const { return values_[agent][item]; }
  const std::vector<Int>& row(int agent) const { return values_[agent]; }
  const std::vector<std::vector<Int>>& matrix() const { return values_; }

  Int bundle_value(int agent, const std::vector<int>& items) const;

  const std::string& agent_name(int i) const { return agent_names_[i]; }
  const std::string& item_name(int r) const { return item_names_[r]; }
  const std::vector<std::string>& agent_names() const { return agent_names_; }
  const std::vector<std::string>& item_names() const { return item_names_; }

 private:
  Kind kind_;
  std::vector<std::vector<Int>> values_;
  std::vector<std::string> agent_names_;
  std::vector<std::string> item_names_;
};

/// A (possibly partial) assignment of items to agents. owner(r) == -1 means
/// unassigned; a full allocation has every item owned.
class Allocation {
 public:
  Allocation() = default;
  Allocation(int n_agents, int m_items) : n_(n_agents), owner_(m_items, -1) {}
  static Allocation from_bundles(int n_agents, int m_items,
                                 const std::vector<std::vector<int>>& bundles);

  int agents() const { return n_; }
  int items() const { return static_cast<int>(owner_.size()); }
  int owner(int item) const { return owner_[item]; }
  void assign(int item, int agent);

  bool complete() const;
  std::vector<int> bundle(int agent) const;           // sorted item indices
  std::vector<std::vector<int>> bundles() const;

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.n_ == b.n_ && a.owner_ == b.owner_;
  }

 private:
  int n_ = 0;
  std::vector<int> owner_;
};

enum class UtilityClass {
  Binary,
  Bivalued,
  FactoredBivalued,
  PersonalizedBivalued,
  FactoredPersonalizedBivalued,
  Factored,
  WeaklyLexicographic,
  GeneralAdditive,
};

const char* utility_class_name(UtilityClass c);

/// The set of utility classes an instance satisfies, plus detected parameters.
struct Classification {
  std::set<UtilityClass> tags;
  // Common bivalued pair by magnitude, small first (equal when one value used).
  std::optional<std::pair<Int, Int>> bivalued_ab;
  // Per-agent (|a_i|, |b_i|), valid when PersonalizedBivalued holds.
  std::vector<std::pair<Int, Int>> agent_ab;

  bool has(UtilityClass c) const { return tags.count(c) > 0; }
};

Classification classify(const Instance& inst);

/// Result of scaling a bivalued chores instance so each agent's values lie in
/// the common pair {-small_abs, -big_abs} and every agent uses -small_abs at
/// least once. big_abs is a synthetic 2*small_abs when only one value occurs.
struct NormalizedBivalued {
  Instance instance;
  Int small_abs = 1;  // unit magnitude; values are {-1,-p} times this
  Int big_abs = 2;    // small_abs * p
  // v_norm[i][r] = v_orig[i][r] * scale_num[i] / scale_den[i]
  std::vector<Int> scale_num;
  std::vector<Int> scale_den;
};

NormalizedBivalued normalize_bivalued_chores(const Instance& inst);

/// Per-agent reindexing of one instance so |v'_i(1)| >= ... >= |v'_i(m)|,
/// ties broken by original item index.
class OrderedView {
 public:
  OrderedView(Instance base, std::vector<std::vector<int>> perm);

  const Instance& base() const { return base_; }
  // Original item sitting at ordered position pos (0-based) for this agent.
  int item_at(int agent, int pos) const { return perm_[agent][pos]; }
  Int ordered_value(int agent, int pos) const { return base_.value(agent, perm_[agent][pos]); }
  std::vector<Int> ordered_row(int agent) const;

 private:
  Instance base_;
  std::vector<std::vector<int>> perm_;
};

OrderedView order_instance(const Instance& inst);

/// Maps an allocation of ordered positions back to original items so that
/// every agent weakly prefers her lifted bundle to her ordered one.
Allocation lift_allocation(const OrderedView& view, const Allocation& ordered_alloc);

/// Replaces each tier value with a signed power of m (lowest tier gets m^0)
/// preserving all ordinal bundle comparisons.
Instance canonicalize_wolex(const Instance& inst);
std::vector<Int> canonicalize_wolex_row(const std::vector<Int>& row, int m);

namespace detail {
bool row_is_factored(const std::vector<Int>& row);
bool row_is_weakly_lexicographic(const std::vector<Int>& row);
std::optional<std::pair<Int, Int>> row_bivalued_pair(const std::vector<Int>& row);
}  // namespace detail

}  // namespace fairdiv
