#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "golden_example.hpp"
#include "kernel_oracle.hpp"
#include "lcprof/complexity.hpp"
#include "lcprof/oracle.hpp"

using namespace lcprof;

namespace {

Sequence reference_sequence() {
    return parse_sequence(golden::kSequenceText, make_field(3, 1), 3);
}

Sequence single_one(const Field& f, int n) {
    Sequence s{f, n, std::vector<Elem>(period_length(f, n), 0)};
    s.elems.back() = 1;
    return s;
}

// F_j evaluated directly from its definition; used to double-check the
// back-substitution enumerator against a full GF(q)^p filter.
Elem eval_fj(const Field& f, std::span<const Elem> e, int j) {
    const int p = f.p();
    Elem acc = 0;
    for (int t = 0; t + j < p; ++t)
        acc = f.add(acc, f.scalar(binom_mod_p(p - t - 1, j, f.p()), e[t]));
    return acc;
}

}  // namespace

TEST_CASE("block maps F_u") {
    const Field gf3 = make_field(3, 1);
    CHECK(map_fu(gf3, {{1}, {2}, {0}}, 0) == std::vector<Elem>{0});
    CHECK(map_fu(gf3, {{1}, {2}, {0}}, 1) == std::vector<Elem>{1});

    const Field gf2 = make_field(2, 1);
    // F_1 keeps the left half: C(1,1) = 1, C(0,1) = 0
    CHECK(map_fu(gf2, {{1, 0}, {1, 1}}, 1) == std::vector<Elem>{1, 0});
    CHECK(map_fu(gf2, {{1, 0}, {1, 1}}, 0) == std::vector<Elem>{0, 1});

    CHECK_THROWS_AS(map_fu(gf3, {{1}, {2}}, 0), BlockLengthMismatch);
    CHECK_THROWS_AS(map_fu(gf3, {{1}, {2}, {0, 1}}, 0), BlockLengthMismatch);
}

TEST_CASE("linear complexity by Games-Chan reduction") {
    CHECK(linear_complexity_gc(reference_sequence()) == 27);

    const Field gf2 = make_field(2, 1);
    const Field gf3 = make_field(3, 1);
    const Field gf4 = make_field(2, 2, {1, 1, 1});

    Sequence zero{gf3, 2, std::vector<Elem>(9, 0)};
    CHECK(linear_complexity_gc(zero) == 0);

    // a single nonzero symbol per period has full complexity N
    CHECK(linear_complexity_gc(single_one(gf2, 3)) == 8);
    CHECK(linear_complexity_gc(single_one(gf3, 2)) == 9);
    CHECK(linear_complexity_gc(single_one(gf4, 2)) == 4);

    Sequence constant{gf4, 2, std::vector<Elem>(4, 3)};
    CHECK(linear_complexity_gc(constant) == 1);
}

TEST_CASE("per-column change costs at the first level") {
    const Sequence s = reference_sequence();
    const LevelState level = initial_level(s);
    CHECK(level.m == 9);
    CHECK(level.current == s.elems);
    for (int i = 0; i < s.period(); ++i)
        for (int h = 0; h < 3; ++h)
            CHECK(level.cost_a[static_cast<std::size_t>(i) * 3 + h] == (h == 0 ? 0 : 1));

    int tb0 = 0, tb1 = 0;
    for (int i = 0; i < 9; ++i) {
        tb0 += compute_B(s.field, level, 0, i);
        tb1 += compute_B(s.field, level, 1, i);
    }
    CHECK(tb0 == 1);
    CHECK(tb1 == 3);
}

TEST_CASE("zero-cost and one-change columns") {
    const Field f = make_field(3, 1);
    // all block images already zero at every column: free
    Sequence zero{f, 2, std::vector<Elem>(9, 0)};
    const LevelState lz = initial_level(zero);
    for (int u = 0; u <= 1; ++u)
        for (int i = 0; i < 3; ++i) CHECK(compute_B(f, lz, u, i) == 0);

    // b_{0,0} = 1 with initial costs: one symbol change suffices
    Sequence s{f, 1, {1, 0, 0}};
    const LevelState ls = initial_level(s);
    CHECK(compute_B(f, ls, 0, 0) == 1);
}

TEST_CASE("budgeted analyses of the reference example") {
    const Sequence s = reference_sequence();

    // Expected (k, klc, tmin) verified through two independent routes:
    // brute-force Berlekamp-Massey minima for small k and kernel distances
    // (checked below) for the rest.
    struct Expected {
        int k;
        int klc;
        std::optional<int> tmin;
    };
    const std::vector<Expected> expected = {
        {0, 27, 1}, {1, 15, 3},  {3, 7, 9},   {9, 4, 11},  {10, 4, 11},
        {11, 3, 12}, {12, 2, 16}, {16, 1, 17}, {17, 0, std::nullopt},
    };
    for (const auto& e : expected) {
        const AnalysisResult r = k_error_lc(s, e.k);
        CAPTURE(e.k);
        CHECK(r.k == e.k);
        CHECK(r.klc == e.klc);
        CHECK(r.tmin == e.tmin);
        if (r.tmin) CHECK(*r.tmin > e.k);
    }

    // brute-force route for small budgets
    CHECK(oracle::brute_force_klc(s, 0) == 27);
    CHECK(oracle::brute_force_klc(s, 1) == 15);
    CHECK(oracle::brute_force_klc(s, 2) == 15);

    // kernel route: cheapest change counts reaching LC <= L
    const std::vector<int> expected_dist = {17, 16, 12, 11, 9, 9, 9};
    for (int L = 0; L <= 6; ++L)
        CHECK(kernel_oracle::min_distance_to_lc_at_most(s, L) == expected_dist[L]);
}

TEST_CASE("reference trace, budget 0") {
    const AnalysisResult r = k_error_lc(reference_sequence(), 0);
    REQUIRE(r.trace.size() == 3);
    CHECK(r.trace[0].m == 9);
    CHECK(r.trace[0].tb == std::vector<int>{1, 3});
    CHECK(r.trace[0].w == 3);
    CHECK(r.trace[1].m == 3);
    CHECK(r.trace[1].tb == std::vector<int>{1, 1});
    CHECK(r.trace[1].w == 3);
    CHECK(r.trace[2].m == 1);
    CHECK(r.trace[2].tb == std::vector<int>{1, 1});
    CHECK(r.trace[2].w == 3);
    CHECK(r.klc == 27);
}

TEST_CASE("reference trace, budget 1") {
    const AnalysisResult r = k_error_lc(reference_sequence(), 1);
    REQUIRE(r.trace.size() == 3);
    CHECK(r.trace[0].m == 9);
    CHECK(r.trace[0].tb == std::vector<int>{1, 3});
    CHECK(r.trace[0].w == 2);
    CHECK(r.trace[1].w == 2);
    CHECK(r.trace[2].w == 3);
    CHECK(r.klc == 15);
    CHECK(r.tmin == 3);
}

TEST_CASE("budget bounds") {
    const Sequence s = reference_sequence();
    CHECK_THROWS_AS(k_error_lc(s, -1), BudgetOutOfRange);
    CHECK_THROWS_AS(k_error_lc(s, 28), BudgetOutOfRange);
    CHECK(k_error_lc(s, 27).klc == 0);
}

TEST_CASE("budget 0 equals plain linear complexity, exhaustively") {
    const Field gf2 = make_field(2, 1);
    for (int code = 0; code < 256; ++code) {
        Sequence s{gf2, 3, std::vector<Elem>(8)};
        for (int i = 0; i < 8; ++i) s.elems[i] = (code >> i) & 1;
        CHECK(k_error_lc(s, 0).klc == linear_complexity_gc(s));
    }
    const Field gf3 = make_field(3, 1);
    for (int code = 0; code < 19683; ++code) {
        Sequence s{gf3, 2, std::vector<Elem>(9)};
        int c = code;
        for (int i = 0; i < 9; ++i) {
            s.elems[i] = c % 3;
            c /= 3;
        }
        CHECK(k_error_lc(s, 0).klc == linear_complexity_gc(s));
    }
}

TEST_CASE("brute-force equivalence on small exhaustive corpora") {
    struct Config {
        Field f;
        int n;
    };
    const Config configs[] = {
        {make_field(2, 1), 1}, {make_field(2, 1), 2}, {make_field(3, 1), 1},
        {make_field(2, 2, {1, 1, 1}), 1}, {make_field(2, 2, {1, 1, 1}), 2},
    };
    for (const auto& cfg : configs) {
        const int N = period_length(cfg.f, cfg.n);
        const int q = cfg.f.q();
        long long total = 1;
        for (int i = 0; i < N; ++i) total *= q;
        for (long long code = 0; code < total; ++code) {
            Sequence s{cfg.f, cfg.n, std::vector<Elem>(N)};
            long long c = code;
            for (int i = 0; i < N; ++i) {
                s.elems[i] = static_cast<Elem>(c % q);
                c /= q;
            }
            std::vector<int> brute(N + 1);
            for (int k = 0; k <= N; ++k) brute[k] = oracle::brute_force_klc(s, k);
            for (int k = 0; k <= N; ++k) {
                const AnalysisResult r = k_error_lc(s, k);
                CAPTURE(code);
                CAPTURE(k);
                CHECK(r.klc == brute[k]);
                // tmin = smallest budget whose brute complexity drops further
                if (r.klc == 0) {
                    CHECK(!r.tmin);
                } else {
                    int want = -1;
                    for (int kp = k + 1; kp <= N; ++kp)
                        if (brute[kp] < r.klc) {
                            want = kp;
                            break;
                        }
                    REQUIRE(r.tmin);
                    CHECK(*r.tmin == want);
                }
            }
        }
    }
}

TEST_CASE("tight profile of the reference example") {
    const TightProfile prof = tight_profile(reference_sequence());
    std::vector<std::pair<int, int>> got;
    for (const auto& pt : prof.points) got.emplace_back(pt.k, pt.c);
    const std::vector<std::pair<int, int>> want = {
        {0, 27}, {1, 15}, {3, 7}, {9, 4}, {11, 3}, {12, 2}, {16, 1}, {17, 0}};
    CHECK(got == want);

    const TightProfile two = tight_profile(reference_sequence(), 2);
    REQUIRE(two.points.size() == 2);
    CHECK(two.points[0].k == 0);
    CHECK(two.points[0].c == 27);
    CHECK(two.points[1].k == 1);
    CHECK(two.points[1].c == 15);
}

TEST_CASE("tight profile edge cases") {
    const Field gf2 = make_field(2, 1);
    Sequence zero{gf2, 2, {0, 0, 0, 0}};
    const TightProfile pz = tight_profile(zero);
    REQUIRE(pz.points.size() == 1);
    CHECK(pz.points[0].k == 0);
    CHECK(pz.points[0].c == 0);

    const TightProfile p1 = tight_profile(single_one(gf2, 2));
    REQUIRE(p1.points.size() == 2);
    CHECK(p1.points[0].k == 0);
    CHECK(p1.points[0].c == 4);
    CHECK(p1.points[1].k == 1);
    CHECK(p1.points[1].c == 0);
    // same points from the brute-force spectrum
    const auto brute = oracle::brute_force_profile(single_one(gf2, 2));
    REQUIRE(brute.size() == 2);
    CHECK(brute[0].lc == 4);
    CHECK(brute[1].k == 1);
    CHECK(brute[1].lc == 0);
}

TEST_CASE("minerror") {
    CHECK(minerror(reference_sequence()) == 1);

    const Field gf2 = make_field(2, 1);
    CHECK(minerror(single_one(gf2, 2)) == 1);

    // constant-1 with period 2: one flip raises the complexity (LC 1 -> 2),
    // only flipping both declines it; brute force agrees
    Sequence ones{gf2, 1, {1, 1}};
    CHECK(oracle::brute_force_klc(ones, 1) == 1);
    CHECK(oracle::brute_force_klc(ones, 2) == 0);
    CHECK(minerror(ones) == 2);

    Sequence zero{gf2, 1, {0, 0}};
    CHECK_THROWS_AS(minerror(zero), AllZeroSequence);
}

TEST_CASE("profile and trace properties on random sequences") {
    const Field fields[] = {make_field(2, 1), make_field(3, 1), make_field(2, 2, {1, 1, 1})};
    std::mt19937 pick(2024);
    for (int trial = 0; trial < 120; ++trial) {
        const Field& f = fields[pick() % 3];
        const int n = 1 + static_cast<int>(pick() % 3);
        const Sequence s = random_sequence(f, n, pick());
        const int N = s.period();

        const TightProfile prof = tight_profile(s);
        REQUIRE(!prof.points.empty());
        CHECK(prof.points.front().k == 0);
        CHECK(prof.points.front().c == linear_complexity_gc(s));
        CHECK(prof.points.back().k == hamming_weight(s));
        CHECK(prof.points.back().c == 0);
        for (std::size_t i = 1; i < prof.points.size(); ++i) {
            CHECK(prof.points[i].k > prof.points[i - 1].k);
            CHECK(prof.points[i].c < prof.points[i - 1].c);
        }

        int prev = N + 1;
        for (int k = 0; k <= N; ++k) {
            const AnalysisResult r = k_error_lc(s, k);
            CHECK(r.klc <= prev);
            prev = r.klc;
            if (k >= hamming_weight(s)) CHECK(r.klc == 0);
            for (const auto& level : r.trace) {
                for (std::size_t u = 1; u < level.tb.size(); ++u)
                    CHECK(level.tb[u] >= level.tb[u - 1]);
                for (int tb : level.tb) {
                    CHECK(tb >= 0);
                    CHECK(tb <= N);
                }
            }
        }
    }
}

TEST_CASE("constraint systems: solution count and minimum vs full enumeration") {
    const Field fields[] = {make_field(3, 1), make_field(2, 2, {1, 1, 1}),
                            make_field(3, 2, {1, 0, 1})};
    std::mt19937 pick(7);
    for (const Field& f : fields) {
        const int p = f.p();
        const int q = f.q();
        for (int rows = 1; rows <= p; ++rows) {
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<Elem> rhs(rows);
                for (auto& r : rhs) r = static_cast<Elem>(pick() % q);
                std::vector<int> cost(static_cast<std::size_t>(p) * q);
                for (auto& c : cost) c = static_cast<int>(pick() % 5);

                long long count = 0;
                detail::for_each_solution(f, rhs, [&](std::span<const Elem>) { ++count; });
                long long want_count = 1;
                for (int i = 0; i < p - rows; ++i) want_count *= q;
                CHECK(count == want_count);

                // full filter over GF(q)^p with direct F_j evaluation
                int best = 1 << 30;
                std::vector<Elem> e(p, 0);
                for (;;) {
                    bool ok = true;
                    for (int j = 0; j < rows && ok; ++j) ok = eval_fj(f, e, j) == rhs[j];
                    if (ok) {
                        int total = 0;
                        for (int j = 0; j < p; ++j) total += cost[static_cast<std::size_t>(j) * q + e[j]];
                        best = std::min(best, total);
                    }
                    int slot = 0;
                    while (slot < p && ++e[slot] == q) {
                        e[slot] = 0;
                        ++slot;
                    }
                    if (slot == p) break;
                }
                CHECK(detail::min_cost_over_solutions(f, rhs, cost.data(), q) == best);
            }
        }
    }
}
