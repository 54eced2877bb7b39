#pragma once

#include <span>
#include <vector>

#include "lcprof/sequence.hpp"

namespace lcprof::oracle {

/// Default cap on brute-force pattern enumeration.
inline constexpr long long kDefaultBudget = 10'000'000;

struct SpectrumPoint {
    int k = 0;
    int lc = 0;
};

/// LFSR length of a finite term stream by Berlekamp-Massey synthesis.
int berlekamp_massey_span(const Field& field, std::span<const Elem> terms);

/// Linear complexity of a periodic sequence: synthesis over two periods,
/// which pins the recurrence since LC <= N for an N-periodic sequence.
int berlekamp_massey(const Sequence& s);

/// sum_{j<=k} C(N, j) (q-1)^j, saturating at LLONG_MAX.
long long pattern_count(int period, int q, int k);

/// Minimum Berlekamp-Massey complexity over every error pattern of Hamming
/// weight <= k. Throws BudgetExceeded when the pattern count tops the budget.
int brute_force_klc(const Sequence& s, int k, long long budget = kDefaultBudget);

/// Jump points of k -> brute_force_klc(s, k), sweeping error weights upward
/// until the complexity reaches 0. Budget covers the total patterns visited.
std::vector<SpectrumPoint> brute_force_profile(const Sequence& s, long long budget = kDefaultBudget);

/// Berlekamp-Massey complexity of every length-p^n sequence over the field,
/// indexed by the base-q integer code of the period (element 0 is the least
/// significant digit). Throws BudgetExceeded when q^N exceeds the budget.
std::vector<int> exhaustive_lc_table(const Field& field, int n, long long budget = kDefaultBudget);

}  // namespace lcprof::oracle
