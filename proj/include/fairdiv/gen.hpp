#pragma once

#include <cstdint>

#include "fairdiv/instance.hpp"

namespace fairdiv::gen {

/// Seeded description of a random instance. Generation is deterministic: the
/// random source is std::mt19937_64 (fully specified by the standard) with
/// modulo draws, so a GenSpec replays byte-identically anywhere.
struct GenSpec {
  UtilityClass cls = UtilityClass::GeneralAdditive;
  Kind kind = Kind::Goods;
  int n = 2;
  int m = 4;
  std::uint64_t seed = 0;
  Int small = 1;      // |a| for bivalued classes
  Int big = 2;        // |b| for the common bivalued classes
  Int p_min = 2;      // per-agent ratio range for personalized bivalued
  Int p_max = 5;
  int max_tiers = 3;  // wolex / factored chain depth
  Int max_value = 9;  // general additive magnitude bound
  int zero_percent = 0;  // chance of a zero entry where the class allows it
  int big_percent = 50;  // chance of the large magnitude in bivalued classes
};

/// Deterministic instance whose classification contains spec.cls
/// (post-asserted).
Instance generate(const GenSpec& spec);

}  // namespace fairdiv::gen
