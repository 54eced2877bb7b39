#include "lcprof/complexity.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lcprof {

namespace {

// Coefficients of the block maps: coeff[u*p + j] = C(p-j-1, u) mod p, the
// weight of block j inside F_u. Blocks j > p-u-1 do not occur.
std::vector<int> fu_coefficients(int p) {
    std::vector<int> coeff(static_cast<std::size_t>(p) * p, 0);
    for (int u = 0; u < p; ++u)
        for (int j = 0; j + u < p; ++j)
            coeff[static_cast<std::size_t>(u) * p + j] = binom_mod_p(p - j - 1, u, p);
    return coeff;
}

// F_u applied to the p blocks of a flat length-p*M sequence.
std::vector<Elem> apply_fu(const Field& f, std::span<const Elem> cur, int M, int u,
                           const std::vector<int>& coeff) {
    const int p = f.p();
    std::vector<Elem> out(M, 0);
    for (int j = 0; j + u < p; ++j) {
        const int c = coeff[static_cast<std::size_t>(u) * p + j];
        if (c == 0) continue;
        for (int i = 0; i < M; ++i)
            out[i] = f.add(out[i], f.scalar(c, cur[static_cast<std::size_t>(j) * M + i]));
    }
    return out;
}

bool all_zero(const std::vector<Elem>& v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

// Shared sweep over the solution set of the triangular system
// F_j(e) = rhs[j], j = 0..R-1: free components e_0..e_{p-R-1} run through
// GF(q)^(p-R); row j then determines e_{p-j-1} for j = R-1 down to 0.
template <typename Visit>
void sweep_solutions(const Field& f, std::span<const Elem> rhs, const std::vector<int>& coeff,
                     Visit&& visit) {
    const int p = f.p();
    const int q = f.q();
    const int rows = static_cast<int>(rhs.size());
    const int nfree = p - rows;
    std::vector<Elem> e(p, 0);
    for (;;) {
        for (int j = rows - 1; j >= 0; --j) {
            Elem acc = 0;
            for (int t = 0; t < p - j - 1; ++t) {
                const int c = coeff[static_cast<std::size_t>(j) * p + t];
                if (c != 0) acc = f.add(acc, f.scalar(c, e[t]));
            }
            e[p - j - 1] = f.sub(rhs[j], acc);
        }
        visit(std::span<const Elem>(e.data(), p));
        int slot = 0;
        while (slot < nfree && ++e[slot] == q) {
            e[slot] = 0;
            ++slot;
        }
        if (slot == nfree) break;
    }
}

int select_w(const std::vector<int>& tb, int p, int k) {
    if (tb[p - 2] <= k) return 1;
    if (k < tb[0]) return p;
    for (int w1 = 2; w1 <= p - 1; ++w1)
        if (tb[p - w1 - 1] <= k && k < tb[p - w1]) return w1;
    // unreachable: TB is nondecreasing in u
    throw Error("internal: no branch covers the budget");
}

int min_cost_impl(const Field& f, std::span<const Elem> rhs, const std::vector<int>& coeff,
                  const int* cost, std::size_t cost_stride) {
    int best = std::numeric_limits<int>::max();
    sweep_solutions(f, rhs, coeff, [&](std::span<const Elem> e) {
        int total = 0;
        for (std::size_t j = 0; j < e.size(); ++j) total += cost[j * cost_stride + e[j]];
        best = std::min(best, total);
    });
    return best;
}

}  // namespace

namespace detail {

int min_cost_over_solutions(const Field& field, std::span<const Elem> rhs, const int* cost,
                            std::size_t cost_stride) {
    return min_cost_impl(field, rhs, fu_coefficients(field.p()), cost, cost_stride);
}

void for_each_solution(const Field& field, std::span<const Elem> rhs,
                       const std::function<void(std::span<const Elem>)>& visit) {
    const auto coeff = fu_coefficients(field.p());
    sweep_solutions(field, rhs, coeff, visit);
}

}  // namespace detail

LevelState initial_level(const Sequence& s) {
    const int N = s.period();
    const int q = s.field.q();
    LevelState level;
    level.m = N / s.field.p();
    level.current = s.elems;
    level.cost_a.assign(static_cast<std::size_t>(N) * q, 1);
    for (int i = 0; i < N; ++i) level.cost_a[static_cast<std::size_t>(i) * q] = 0;
    return level;
}

std::vector<Elem> map_fu(const Field& field, const std::vector<std::vector<Elem>>& blocks, int u) {
    const int p = field.p();
    if (static_cast<int>(blocks.size()) != p)
        throw BlockLengthMismatch("expected " + std::to_string(p) + " blocks, got " +
                                  std::to_string(blocks.size()));
    const std::size_t M = blocks[0].size();
    for (const auto& b : blocks)
        if (b.size() != M) throw BlockLengthMismatch("blocks differ in length");
    if (u < 0 || u >= p) throw Error("u must lie in [0, p)");

    std::vector<Elem> flat;
    flat.reserve(p * M);
    for (const auto& b : blocks) flat.insert(flat.end(), b.begin(), b.end());
    return apply_fu(field, flat, static_cast<int>(M), u, fu_coefficients(p));
}

int compute_B(const Field& field, const LevelState& level, int u, int i) {
    const int p = field.p();
    const int q = field.q();
    if (u < 0 || u > p - 2) throw Error("u must lie in [0, p-2]");
    if (i < 0 || i >= level.m) throw Error("column index out of range");

    const auto coeff = fu_coefficients(p);
    std::vector<Elem> rhs(u + 1);
    for (int j = 0; j <= u; ++j) {
        Elem b = 0;
        for (int t = 0; t + j < p; ++t) {
            const int c = coeff[static_cast<std::size_t>(j) * p + t];
            if (c != 0)
                b = field.add(b, field.scalar(c, level.current[static_cast<std::size_t>(t) * level.m + i]));
        }
        rhs[j] = field.neg(b);
    }
    return min_cost_impl(field, rhs, coeff, level.cost_a.data() + static_cast<std::size_t>(i) * q,
                         static_cast<std::size_t>(level.m) * q);
}

int linear_complexity_gc(const Sequence& s) {
    const Field& f = s.field;
    const int p = f.p();
    const auto coeff = fu_coefficients(p);

    std::vector<Elem> cur = s.elems;
    int lc = 0;
    while (static_cast<int>(cur.size()) > 1) {
        const int M = static_cast<int>(cur.size()) / p;
        std::vector<std::vector<Elem>> b(p);
        for (int u = 0; u < p; ++u) b[u] = apply_fu(f, cur, M, u, coeff);

        int first_nonzero = -1;
        for (int u = 0; u <= p - 2; ++u)
            if (!all_zero(b[u])) {
                first_nonzero = u;
                break;
            }
        const int w = first_nonzero < 0 ? 1 : (first_nonzero == 0 ? p : p - first_nonzero);
        lc += (w - 1) * M;
        cur = std::move(b[p - w]);
    }
    if (cur[0] != 0) ++lc;
    return lc;
}

AnalysisResult k_error_lc(const Sequence& s, int k) {
    const Field& f = s.field;
    const int p = f.p();
    const int q = f.q();
    const int N = s.period();
    if (k < 0 || k > N)
        throw BudgetOutOfRange("k = " + std::to_string(k) + " outside [0, " + std::to_string(N) + "]");

    const auto coeff = fu_coefficients(p);

    std::vector<Elem> cur = s.elems;
    std::vector<int> cost(static_cast<std::size_t>(N) * q, 1);
    for (int i = 0; i < N; ++i) cost[static_cast<std::size_t>(i) * q] = 0;

    AnalysisResult res;
    res.k = k;
    int tmin = N;
    std::vector<Elem> rhs(p);

    while (static_cast<int>(cur.size()) > 1) {
        const int M = static_cast<int>(cur.size()) / p;
        const std::size_t stride = static_cast<std::size_t>(M) * q;

        // block images b_{j,i}, flat as b[j*M + i]
        std::vector<Elem> b(static_cast<std::size_t>(p) * M);
        for (int j = 0; j < p; ++j) {
            const auto img = apply_fu(f, cur, M, j, coeff);
            std::copy(img.begin(), img.end(), b.begin() + static_cast<std::size_t>(j) * M);
        }

        std::vector<int> tb(p - 1, 0);
        for (int u = 0; u <= p - 2; ++u) {
            int total = 0;
            for (int i = 0; i < M; ++i) {
                for (int j = 0; j <= u; ++j) rhs[j] = f.neg(b[static_cast<std::size_t>(j) * M + i]);
                total += min_cost_impl(f, std::span<const Elem>(rhs.data(), u + 1), coeff,
                                       cost.data() + static_cast<std::size_t>(i) * q, stride);
            }
            tb[u] = total;
        }

        const int w = select_w(tb, p, k);
        if (tb[p - 2] > k && tb[p - w] < tmin) tmin = tb[p - w];
        res.klc += (w - 1) * M;
        res.trace.push_back({M, tb, w});

        // cost table for the carried block F_{p-w}: keep rows 0..p-w-1 zeroed
        // and shift the carried image by element h
        const int rows = p - w + 1;
        std::vector<int> next_cost(static_cast<std::size_t>(M) * q);
        for (int i = 0; i < M; ++i) {
            for (int j = 0; j <= p - w - 1; ++j) rhs[j] = f.neg(b[static_cast<std::size_t>(j) * M + i]);
            for (Elem h = 0; h < q; ++h) {
                rhs[p - w] = h;
                next_cost[static_cast<std::size_t>(i) * q + h] =
                    min_cost_impl(f, std::span<const Elem>(rhs.data(), rows), coeff,
                                  cost.data() + static_cast<std::size_t>(i) * q, stride);
            }
        }
        cost = std::move(next_cost);
        cur.assign(b.begin() + static_cast<std::size_t>(p - w) * M,
                   b.begin() + static_cast<std::size_t>(p - w + 1) * M);
    }

    const int final_cost = cost[f.neg(cur[0])];
    if (final_cost > k) {
        if (final_cost < tmin) tmin = final_cost;
        ++res.klc;
    }
    if (res.klc > 0) res.tmin = tmin;
    return res;
}

TightProfile tight_profile(const Sequence& s, std::optional<int> max_points) {
    TightProfile prof;
    int k = 0;
    while (!max_points || static_cast<int>(prof.points.size()) < *max_points) {
        const AnalysisResult r = k_error_lc(s, k);
        prof.points.push_back({k, r.klc});
        if (r.klc == 0) break;
        if (*r.tmin <= k) throw Error("internal: profile made no progress");
        k = *r.tmin;
    }
    return prof;
}

int minerror(const Sequence& s) {
    if (hamming_weight(s) == 0)
        throw AllZeroSequence("the all-zero sequence has no complexity decline");
    return *k_error_lc(s, 0).tmin;
}

}  // namespace lcprof
