#include "fairdiv/fixtures.hpp"

#include "fairdiv/fairness.hpp"
#include "fairdiv/fisher.hpp"
#include "fairdiv/mms.hpp"
#include "fairdiv/oracle.hpp"

namespace fairdiv::fixtures {

Instance four_agent_counterexample() {
  return Instance(Kind::Chores, {{-4, -4, -1, -1, -1, -1, -1, -1},
                                 {-4, -4, -1, -1, -4, -4, -4, -4},
                                 {-4, -4, -4, -4, -1, -1, -4, -4},
                                 {-4, -4, -4, -4, -4, -4, -1, -1}});
}

Allocation four_agent_counterexample_alloc() {
  return Allocation::from_bundles(4, 8, {{4, 5, 6, 7}, {2, 3}, {1}, {0}});
}

static std::vector<std::vector<Int>> signed_matrix(std::vector<std::vector<Int>> rows, Kind kind) {
  if (kind == Kind::Chores)
    for (auto& row : rows)
      for (Int& v : row) v = -v;
  return rows;
}

Instance tiered_nine_items(Kind kind) {
  return Instance(kind, signed_matrix({{81, 81, 81, 81, 9, 9, 9, 1, 1},
                                       {81, 81, 81, 9, 9, 9, 1, 1, 1},
                                       {729, 81, 81, 81, 9, 9, 9, 1, 1}},
                                      kind));
}

Instance two_speed_nine_items(Kind kind) {
  return Instance(kind, signed_matrix({{2, 2, 2, 2, 1, 1, 1, 1, 1},
                                       {5, 1, 1, 1, 1, 1, 1, 1, 1},
                                       {4, 4, 4, 4, 4, 4, 4, 4, 1}},
                                      kind));
}

std::vector<Int> staircase_row() { return {12, 6, 6, 3, 3, 3, 3, 1, 1}; }
std::vector<Int> non_factored_row() { return {3, 3, 2, 2, 2}; }

namespace {

void expect(std::vector<FixtureResult>& out, const std::string& name, bool pass,
            const std::string& detail = "") {
  out.push_back({name, pass, pass ? "" : detail});
}

template <typename Fn>
void guarded(std::vector<FixtureResult>& out, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    out.push_back({name, false, e.what()});
  }
}

}  // namespace

std::vector<FixtureResult> run_all() {
  std::vector<FixtureResult> out;

  guarded(out, "staircase-greedy", [&] {
    auto part = mms::mms_partition_factored(staircase_row(), 4);
    expect(out, "staircase-greedy-value", part.min_value == 8,
           "expected 8, got " + std::to_string(part.min_value));
    const std::vector<int> want{0, 1, 2, 3, 3, 1, 2, 3, 3};
    expect(out, "staircase-greedy-trace", part.placements == want, "placement order differs");
  });

  guarded(out, "nonfactored-row", [&] {
    auto exact = oracle::exact_mms(non_factored_row(), 2);
    expect(out, "nonfactored-exact-mms", exact.value == 6,
           "expected 6, got " + std::to_string(exact.value));
    bool rejected = false;
    try {
      mms::mms_partition_factored(non_factored_row(), 2);
    } catch (const Error& e) {
      rejected = e.code() == Errc::NotFactored;
    }
    expect(out, "nonfactored-rejected", rejected, "greedy accepted a non-factored row");
    auto greedy = mms::greedy_partition(non_factored_row(), 2);
    expect(out, "nonfactored-greedy-underestimates", greedy.min_value == 5,
           "expected 5, got " + std::to_string(greedy.min_value));
  });

  guarded(out, "tiered-cuts", [&] {
    const Instance goods = tiered_nine_items(Kind::Goods);
    const std::vector<int> want{4, 9, 1};
    for (int i = 0; i < 3; ++i) {
      int cut = mms::first_bad_cut(goods.row(i), 3);
      expect(out, "tiered-cut-agent" + std::to_string(i + 1), cut == want[i],
             "expected " + std::to_string(want[i]) + ", got " + std::to_string(cut));
    }
    auto red_goods = mms::select_reduction(goods.matrix(), Kind::Goods,
                                           UtilityClass::WeaklyLexicographic);
    expect(out, "tiered-select-goods",
           red_goods.agent == 2 && red_goods.bundle == std::vector<int>{0},
           "expected agent 3 with {1}");
    const Instance chores = tiered_nine_items(Kind::Chores);
    auto red_chores = mms::select_reduction(chores.matrix(), Kind::Chores,
                                            UtilityClass::WeaklyLexicographic);
    expect(out, "tiered-select-chores",
           red_chores.agent == 1 && red_chores.bundle == (std::vector<int>{0, 3, 6}),
           "expected agent 2 with {1,4,7}");
  });

  guarded(out, "two-speed-profiles", [&] {
    const Instance goods = two_speed_nine_items(Kind::Goods);
    struct Want {
      int cut, active;
      Int idle;
    };
    const std::vector<Want> want{{4, 2, 4}, {1, 2, 8}, {8, 1, 1}};
    for (int i = 0; i < 3; ++i) {
      auto profile = mms::cut_profile_pbv(goods.row(i), 3);
      bool ok = profile.cut == want[i].cut && profile.active == want[i].active &&
                profile.idle == want[i].idle;
      expect(out, "two-speed-profile-agent" + std::to_string(i + 1), ok,
             "cut/active/idle mismatch");
    }
    auto red_goods = mms::select_reduction(goods.matrix(), Kind::Goods,
                                           UtilityClass::FactoredPersonalizedBivalued);
    expect(out, "two-speed-select-goods",
           red_goods.agent == 1 && red_goods.bundle == std::vector<int>{0},
           "expected agent 2 with {1}");
    const Instance chores = two_speed_nine_items(Kind::Chores);
    auto red_chores = mms::select_reduction(chores.matrix(), Kind::Chores,
                                            UtilityClass::FactoredPersonalizedBivalued);
    expect(out, "two-speed-select-chores",
           red_chores.agent == 0 && red_chores.bundle == (std::vector<int>{0, 3, 6}),
           "expected agent 1 with {1,4,7}");
  });

  guarded(out, "four-agent-counterexample", [&] {
    const Instance inst = four_agent_counterexample();
    auto report = fairness::is_ef1(inst, four_agent_counterexample_alloc());
    expect(out, "counterexample-fails-ef1",
           !report.holds && report.witness == std::make_pair(0, 1),
           "expected witness (a1, a2)");
    auto solved = fisher::solve_ef1_po(inst);
    expect(out, "market-output-ef1", fairness::is_ef1(inst, solved.alloc).holds,
           "market output not EF1");
    expect(out, "market-output-po", oracle::is_po_bruteforce(inst, solved.alloc).holds,
           "market output not PO");
  });

  return out;
}

}  // namespace fairdiv::fixtures
