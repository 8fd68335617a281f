#include "fairdiv/gen.hpp"

#include <algorithm>
#include <random>

namespace fairdiv::gen {

namespace {

Int draw(std::mt19937_64& rng, Int lo, Int hi) {
  check_invariant(lo <= hi, "draw with empty range");
  return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool chance(std::mt19937_64& rng, int percent) {
  return percent > 0 && draw(rng, 0, 99) < percent;
}

}  // namespace

Instance generate(const GenSpec& spec) {
  require(spec.n >= 1 && spec.m >= 0, Errc::BadArgument, "need n >= 1, m >= 0");
  std::mt19937_64 rng(spec.seed);
  const Int sign = spec.kind == Kind::Goods ? 1 : -1;
  std::vector<std::vector<Int>> values(spec.n, std::vector<Int>(spec.m, 0));

  switch (spec.cls) {
    case UtilityClass::Binary:
      for (auto& row : values)
        for (Int& v : row) v = chance(rng, std::max(spec.zero_percent, 25)) ? 0 : sign;
      break;

    case UtilityClass::Bivalued:
    case UtilityClass::FactoredBivalued: {
      require(spec.small >= 1 && spec.big > spec.small, Errc::BadArgument,
              "bivalued generation needs 1 <= small < big");
      if (spec.cls == UtilityClass::FactoredBivalued)
        require(spec.big % spec.small == 0, Errc::BadArgument,
                "factored bivalued generation needs small | big");
      for (auto& row : values)
        for (Int& v : row) v = sign * (chance(rng, spec.big_percent) ? spec.big : spec.small);
      break;
    }

    case UtilityClass::PersonalizedBivalued:
    case UtilityClass::FactoredPersonalizedBivalued: {
      require(spec.p_min >= 2 && spec.p_max >= spec.p_min, Errc::BadArgument,
              "personalized generation needs 2 <= p_min <= p_max");
      for (auto& row : values) {
        const Int p = draw(rng, spec.p_min, spec.p_max);
        for (Int& v : row) v = sign * (chance(rng, spec.big_percent) ? p : 1);
      }
      break;
    }

    case UtilityClass::Factored:
      for (auto& row : values) {
        // Divisibility chain built by stacked small multipliers.
        std::vector<Int> chain{draw(rng, 1, 3)};
        for (int t = 1; t < spec.max_tiers; ++t) chain.push_back(chain.back() * draw(rng, 2, 3));
        for (Int& v : row)
          v = chance(rng, spec.zero_percent)
                  ? 0
                  : sign * chain[static_cast<std::size_t>(
                        draw(rng, 0, static_cast<Int>(chain.size()) - 1))];
      }
      break;

    case UtilityClass::WeaklyLexicographic:
      for (auto& row : values) {
        const int tiers = static_cast<int>(draw(rng, 1, std::max(1, std::min(spec.max_tiers,
                                                                             std::max(spec.m, 1)))));
        std::vector<int> tier_of(spec.m);
        for (int r = 0; r < spec.m; ++r) tier_of[r] = static_cast<int>(draw(rng, 0, tiers - 1));
        // Tier magnitudes bottom-up: each exceeds the total below it.
        std::vector<Int> magnitude(tiers, 0);
        Int below = 0;
        for (int t = tiers - 1; t >= 0; --t) {
          magnitude[t] = below + draw(rng, 1, 3);
          Int count = 0;
          for (int r = 0; r < spec.m; ++r)
            if (tier_of[r] == t) ++count;
          below += count * magnitude[t];
        }
        for (int r = 0; r < spec.m; ++r) row[r] = sign * magnitude[tier_of[r]];
      }
      break;

    case UtilityClass::GeneralAdditive:
      for (auto& row : values)
        for (Int& v : row)
          v = chance(rng, spec.zero_percent) ? 0 : sign * draw(rng, 1, std::max<Int>(spec.max_value, 1));
      break;
  }

  Instance inst(spec.kind, std::move(values));
  check_invariant(classify(inst).has(spec.cls),
                  std::string("generated instance missed its class ") + utility_class_name(spec.cls));
  return inst;
}

}  // namespace fairdiv::gen
