#pragma once

#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv::mms {

/// An n-partition of one agent's items together with its minimum bundle value.
struct MaximinPartition {
  std::vector<std::vector<int>> bundles;  // original item indices
  Int min_value = 0;
  std::vector<int> placements;  // bundle chosen for each item in greedy order
};

/// Greedy balancing pass: items in nonincreasing |value| (stable), each to the
/// bundle with the smallest |total|, lowest index on ties. Only guaranteed to
/// return a maximin partition on factored rows; exposed unchecked so callers
/// can demonstrate where it goes wrong.
MaximinPartition greedy_partition(const std::vector<Int>& values, int n);

/// Checked entry point: rejects rows that are not factored.
MaximinPartition mms_partition_factored(const std::vector<Int>& values, int n);
Int mms_value_factored(const std::vector<Int>& values, int n);

/// Exact MMS^n for any factored or weakly lexicographic row (the latter via
/// the power-of-m canonical form, evaluating the result on the original row).
Int mms_value_for_row(const std::vector<Int>& row, int n);

/// Smallest index k in [1, m-1] with v(k) != v(k+1) and n not dividing k; m if
/// none. Row must be ordered by nonincreasing |value|. 1-based.
int first_bad_cut(const std::vector<Int>& ordered_row, int n);

struct CutProfile {
  int cut = 0;       // C_i
  int active = 0;    // AC_i
  Int idle = 0;      // T_idle
  Int big = 1;       // p_i
};

CutProfile cut_profile_pbv(const std::vector<Int>& ordered_row, int n);

/// Bundle {1, n+1, ..., kn+1} with k = floor((C-1)/n), as 0-based positions.
std::vector<int> wolex_reduction_bundle(int cut, int n);
/// Bundle {1, n+1, ..., kn+1} with k = floor((m - max{T-AC,0} - 1)/n).
std::vector<int> pbv_reduction_bundle(const CutProfile& profile, int n, int m);

enum class ReductionRule { WolexCut, PbvIdleTime, BaseCase };

/// A certified (agent, bundle) pair on the current ordered sub-instance.
struct Reduction {
  int agent = 0;              // row index within the sub-instance
  std::vector<int> bundle;    // 0-based positions within the sub-instance
  ReductionRule rule = ReductionRule::BaseCase;
};

/// Picks the reduction for the current ordered sub-instance. rows[i] must be
/// nonincreasing in |value|; cls selects the wolex or the personalized
/// bivalued machinery.
Reduction select_reduction(const std::vector<std::vector<Int>>& rows, Kind kind,
                           UtilityClass cls);

/// One round of the recursion, kept for oracle-side verification of both
/// valid-reduction conditions.
struct ReductionStep {
  std::vector<int> agents;               // global agent ids, row order
  std::vector<std::vector<Int>> rows;    // the ordered sub-instance
  Reduction reduction;
};

struct MmsSolve {
  Allocation alloc;
  std::vector<ReductionStep> steps;
  UtilityClass route;  // WeaklyLexicographic or FactoredPersonalizedBivalued
};

MmsSolve solve_mms_traced(const Instance& inst);
Allocation solve_mms(const Instance& inst);

/// Exact per-agent MMS values for a supported instance (factored rows via the
/// greedy, weakly lexicographic rows via the canonical form).
std::vector<Int> mms_values(const Instance& inst);

}  // namespace fairdiv::mms
