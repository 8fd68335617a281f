#include <doctest.h>

#include <random>

#include "fairdiv/fairness.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/gen.hpp"
#include "fairdiv/mms.hpp"
#include "fairdiv/oracle.hpp"
#include "test_helpers.hpp"

using namespace fairdiv;
using testutil::chores;
using testutil::goods;

TEST_CASE("greedy partition follows the staircase placements") {
  auto part = mms::mms_partition_factored(fixtures::staircase_row(), 4);
  CHECK(part.min_value == 8);
  CHECK(part.placements == std::vector<int>{0, 1, 2, 3, 3, 1, 2, 3, 3});
  CHECK(part.bundles == std::vector<std::vector<int>>{{0}, {1, 5}, {2, 6}, {3, 4, 7, 8}});

  CHECK(mms::mms_value_factored(fixtures::staircase_row(), 4) == 8);
  CHECK(mms::mms_value_factored({-1, -4, -4}, 2) == -5);
  CHECK(oracle::exact_mms({-1, -4, -4}, 2).value == -5);
  CHECK(mms::mms_value_factored({7, 7, 7, 7}, 2) == 14);
  CHECK(mms::mms_value_factored({5}, 1) == 5);

  CHECK_THROWS_WITH_AS(mms::mms_partition_factored(fixtures::non_factored_row(), 2),
                       doctest::Contains("NotFactored"), Error);
  CHECK(mms::greedy_partition(fixtures::non_factored_row(), 2).min_value == 5);
}

TEST_CASE("greedy equals the oracle on factored rows") {
  std::mt19937_64 rng(53);
  int checked = 0;
  while (checked < 250) {
    gen::GenSpec spec;
    spec.cls = UtilityClass::Factored;
    spec.kind = checked % 2 == 0 ? Kind::Goods : Kind::Chores;
    spec.n = 1;
    spec.m = 1 + static_cast<int>(rng() % 9);
    spec.seed = rng();
    spec.zero_percent = 12;
    const auto row = gen::generate(spec).row(0);
    const int bundles = 1 + static_cast<int>(rng() % 4);
    CHECK(mms::mms_value_factored(row, bundles) == oracle::exact_mms(row, bundles).value);
    ++checked;
  }
}

TEST_CASE("greedy equals the oracle on every small chain row") {
  // Exhaustive sweep: all rows over {1,2,4} up to four items, both signs,
  // every bundle count up to four.
  for (int m = 1; m <= 4; ++m) {
    int total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<Int> row(m);
      int rest = code;
      for (int i = 0; i < m; ++i) {
        row[i] = Int{1} << (rest % 3);
        rest /= 3;
      }
      for (int sign = 0; sign < 2; ++sign) {
        if (sign == 1)
          for (Int& v : row) v = -v;
        for (int bundles = 1; bundles <= 4; ++bundles)
          CHECK(mms::mms_value_factored(row, bundles) ==
                oracle::exact_mms(row, bundles).value);
      }
    }
  }
}

TEST_CASE("wolex rows go through the canonical form") {
  std::mt19937_64 rng(59);
  for (int rep = 0; rep < 150; ++rep) {
    gen::GenSpec spec;
    spec.cls = UtilityClass::WeaklyLexicographic;
    spec.kind = rep % 2 == 0 ? Kind::Goods : Kind::Chores;
    spec.n = 1;
    spec.m = 1 + static_cast<int>(rng() % 8);
    spec.seed = rng();
    const auto row = gen::generate(spec).row(0);
    const int bundles = 1 + static_cast<int>(rng() % 4);
    CHECK(mms::mms_value_for_row(row, bundles) == oracle::exact_mms(row, bundles).value);
  }
  CHECK_THROWS_WITH_AS(mms::mms_value_for_row({3, 3, 2, 2, 2}, 2),
                       doctest::Contains("UnsupportedClass"), Error);
}

TEST_CASE("first_bad_cut on the tiered table") {
  const Instance table = fixtures::tiered_nine_items(Kind::Goods);
  CHECK(mms::first_bad_cut(table.row(0), 3) == 4);
  CHECK(mms::first_bad_cut(table.row(1), 3) == 9);
  CHECK(mms::first_bad_cut(table.row(2), 3) == 1);
  CHECK(mms::first_bad_cut({5, 5}, 2) == 2);  // no cuts at all
}

TEST_CASE("cut profiles on the two-speed table") {
  const Instance table = fixtures::two_speed_nine_items(Kind::Goods);
  auto p1 = mms::cut_profile_pbv(table.row(0), 3);
  CHECK(p1.cut == 4);
  CHECK(p1.active == 2);
  CHECK(p1.idle == 4);
  auto p2 = mms::cut_profile_pbv(table.row(1), 3);
  CHECK(p2.cut == 1);
  CHECK(p2.active == 2);
  CHECK(p2.idle == 8);
  auto p3 = mms::cut_profile_pbv(table.row(2), 3);
  CHECK(p3.cut == 8);
  CHECK(p3.active == 1);
  CHECK(p3.idle == 1);

  CHECK_THROWS_WITH_AS(mms::cut_profile_pbv({3, 3, 2}, 2), doctest::Contains("NotFactored"),
                       Error);
}

TEST_CASE("reduction bundles") {
  CHECK(mms::wolex_reduction_bundle(4, 3) == std::vector<int>{0, 3});
  CHECK(mms::wolex_reduction_bundle(1, 3) == std::vector<int>{0});
  CHECK(mms::wolex_reduction_bundle(9, 3) == std::vector<int>{0, 3, 6});

  const Instance table = fixtures::two_speed_nine_items(Kind::Goods);
  CHECK(mms::pbv_reduction_bundle(mms::cut_profile_pbv(table.row(0), 3), 3, 9) ==
        std::vector<int>{0, 3, 6});
  CHECK(mms::pbv_reduction_bundle(mms::cut_profile_pbv(table.row(1), 3), 3, 9) ==
        std::vector<int>{0});
  CHECK(mms::pbv_reduction_bundle(mms::cut_profile_pbv(table.row(2), 3), 3, 9) ==
        std::vector<int>{0, 3, 6});
}

TEST_CASE("select_reduction matches the worked examples") {
  auto tiered_goods = mms::select_reduction(fixtures::tiered_nine_items(Kind::Goods).matrix(),
                                            Kind::Goods, UtilityClass::WeaklyLexicographic);
  CHECK(tiered_goods.agent == 2);
  CHECK(tiered_goods.bundle == std::vector<int>{0});

  auto tiered_chores = mms::select_reduction(fixtures::tiered_nine_items(Kind::Chores).matrix(),
                                             Kind::Chores, UtilityClass::WeaklyLexicographic);
  CHECK(tiered_chores.agent == 1);
  CHECK(tiered_chores.bundle == std::vector<int>{0, 3, 6});

  auto speed_goods = mms::select_reduction(fixtures::two_speed_nine_items(Kind::Goods).matrix(),
                                           Kind::Goods,
                                           UtilityClass::FactoredPersonalizedBivalued);
  CHECK(speed_goods.agent == 1);
  CHECK(speed_goods.bundle == std::vector<int>{0});

  auto speed_chores = mms::select_reduction(fixtures::two_speed_nine_items(Kind::Chores).matrix(),
                                            Kind::Chores,
                                            UtilityClass::FactoredPersonalizedBivalued);
  CHECK(speed_chores.agent == 0);
  CHECK(speed_chores.bundle == std::vector<int>{0, 3, 6});
}

TEST_CASE("solve_mms single agent and routing errors") {
  Instance solo = goods({{3, 1, 2}});
  auto alloc = mms::solve_mms(solo);
  CHECK(alloc.bundle(0) == std::vector<int>{0, 1, 2});

  // Non-integer personalized ratio is refused with a distinct error. The 2s
  // must outnumber the 3 so the rows are not weakly lexicographic.
  Instance ragged_ratio(Kind::Goods, {{3, 2, 2, 2, 2}, {5, 5, 5, 5, 5}});
  CHECK_THROWS_WITH_AS(mms::solve_mms(ragged_ratio), doctest::Contains("NotFactored"), Error);

  Instance unsupported = goods({{12, 6, 6, 3, 3, 3, 3, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1}});
  CHECK_THROWS_WITH_AS(mms::solve_mms(unsupported), doctest::Contains("UnsupportedClass"), Error);
}

TEST_CASE("solve_mms beats the oracle values on random supported instances") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 120; ++rep) {
    gen::GenSpec spec;
    spec.cls = rep % 2 == 0 ? UtilityClass::WeaklyLexicographic
                            : UtilityClass::FactoredPersonalizedBivalued;
    spec.kind = (rep / 2) % 2 == 0 ? Kind::Goods : Kind::Chores;
    spec.n = 2 + static_cast<int>(rng() % 3);
    spec.m = 1 + static_cast<int>(rng() % 8);
    spec.seed = rng();
    Instance inst = gen::generate(spec);

    Allocation alloc = mms::solve_mms(inst);
    REQUIRE(alloc.complete());
    std::vector<Int> values(inst.n());
    for (int i = 0; i < inst.n(); ++i)
      values[i] = oracle::exact_mms(inst.row(i), inst.n()).value;
    CHECK(fairness::is_mms_alloc(inst, alloc, values).holds);
  }
}

TEST_CASE("tiered table instances solve to MMS allocations") {
  for (Kind kind : {Kind::Goods, Kind::Chores}) {
    for (const Instance& inst :
         {fixtures::tiered_nine_items(kind), fixtures::two_speed_nine_items(kind)}) {
      Allocation alloc = mms::solve_mms(inst);
      std::vector<Int> values(inst.n());
      for (int i = 0; i < inst.n(); ++i)
        values[i] = oracle::exact_mms(inst.row(i), inst.n()).value;
      CHECK(fairness::is_mms_alloc(inst, alloc, values).holds);
    }
  }
}
