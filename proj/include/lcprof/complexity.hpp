#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lcprof/sequence.hpp"

namespace lcprof {

/// One reduction level of a budgeted analysis: output block length M, the
/// change-cost totals TB(0..p-2), and the branch w selected there.
struct LevelTrace {
    int m = 0;
    std::vector<int> tb;
    int w = 0;
};

/// Result of one budgeted run: the k-error linear complexity together with
/// the cheapest change count that would push the complexity lower still.
struct AnalysisResult {
    int k = 0;
    int klc = 0;
    std::optional<int> tmin;  ///< absent when klc == 0; otherwise > k
    std::vector<LevelTrace> trace;
};

struct TightPoint {
    int k = 0;
    int c = 0;
};

/// Jump points (k_i, C_i) of the k-error linear complexity profile,
/// starting at (0, LC) and ending at (hamming weight, 0).
struct TightProfile {
    std::vector<TightPoint> points;
};

/// Working state of one reduction level: output block length, the current
/// sequence of length p*m, and the change-cost table cost_a laid out as
/// cost_a[i*q + h] = A(h, i), the minimum number of changes in the original
/// period that shift the current element at position i by element h.
struct LevelState {
    int m = 0;
    std::vector<Elem> current;
    std::vector<int> cost_a;
};

/// First-level state for a sequence: m = N/p, current = the period, and
/// A(h, i) = 0 for h = 0, else 1.
LevelState initial_level(const Sequence& s);

/// Block map F_u on p equal-length blocks:
/// F_u(a(0), ..., a(p-1)) = sum_{j=0}^{p-u-1} C(p-j-1, u) a(j),
/// binomials taken mod p and acting through the prime subfield.
std::vector<Elem> map_fu(const Field& field, const std::vector<std::vector<Elem>>& blocks, int u);

/// B(u, i): minimum number of original-period changes that zero the block
/// images b_{0,i}, ..., b_{u,i} at column i of the given level.
int compute_B(const Field& field, const LevelState& level, int u, int i);

/// Linear complexity by the generalized Games-Chan reduction.
int linear_complexity_gc(const Sequence& s);

/// k-error linear complexity via per-level change-cost matrices, with the
/// per-level trace and the minimum decline cost tmin. Requires 0 <= k <= N.
AnalysisResult k_error_lc(const Sequence& s, int k);

/// Jump points of the k-error linear complexity profile, found by re-running
/// the budgeted analysis with each returned tmin as the next budget. Stops
/// after max_points points when given.
TightProfile tight_profile(const Sequence& s, std::optional<int> max_points = std::nullopt);

/// Smallest k whose k-error linear complexity falls below the linear
/// complexity; throws AllZeroSequence when no decline exists.
int minerror(const Sequence& s);

namespace detail {

/// Minimum of sum_j cost[j*cost_stride + e_j] over all e in GF(q)^p with
/// F_j(e) = rhs[j] for j = 0..rhs.size()-1. Row j has unit leading
/// coefficient on e_{p-j-1}, so e_0..e_{p-R-1} sweep freely and the rest
/// back-substitute; exactly q^(p-R) vectors are visited.
int min_cost_over_solutions(const Field& field, std::span<const Elem> rhs, const int* cost,
                            std::size_t cost_stride);

/// Visits every solution of the same system once (test hook).
void for_each_solution(const Field& field, std::span<const Elem> rhs,
                       const std::function<void(std::span<const Elem>)>& visit);

}  // namespace detail

}  // namespace lcprof
