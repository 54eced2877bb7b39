#include "lcprof/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lcprof::oracle {

namespace {

constexpr long long kSat = std::numeric_limits<long long>::max();

// Minimum complexity over error patterns of Hamming weight exactly `weight`,
// floored at `stop` (no pattern can go below 0, so the sweep may stop early).
// `doubled` holds two periods of the unmodified sequence and is restored on
// return.
int sweep_weight(const Sequence& s, int weight, std::vector<Elem>& doubled, int stop) {
    const Field& f = s.field;
    const int N = s.period();
    const int q = f.q();
    int best = std::numeric_limits<int>::max();

    std::vector<int> pos(weight);
    for (int t = 0; t < weight; ++t) pos[t] = t;
    std::vector<Elem> val(weight, 1);

    for (;;) {
        // all (q-1)^weight nonzero value assignments at these positions
        std::fill(val.begin(), val.end(), 1);
        for (;;) {
            for (int t = 0; t < weight; ++t) {
                const Elem e = f.add(s.elems[pos[t]], val[t]);
                doubled[pos[t]] = e;
                doubled[pos[t] + N] = e;
            }
            best = std::min(best, berlekamp_massey_span(f, doubled));
            if (best <= stop) break;
            int slot = 0;
            while (slot < weight && ++val[slot] == q) {
                val[slot] = 1;
                ++slot;
            }
            if (slot == weight) break;
        }
        for (int t = 0; t < weight; ++t) {
            doubled[pos[t]] = s.elems[pos[t]];
            doubled[pos[t] + N] = s.elems[pos[t]];
        }
        if (best <= stop) break;
        // next position combination, lexicographic
        int t = weight - 1;
        while (t >= 0 && pos[t] == N - weight + t) --t;
        if (t < 0) break;
        ++pos[t];
        for (int r = t + 1; r < weight; ++r) pos[r] = pos[r - 1] + 1;
    }
    return best;
}

}  // namespace

int berlekamp_massey_span(const Field& field, std::span<const Elem> terms) {
    const int n = static_cast<int>(terms.size());
    std::vector<Elem> conn(n + 1, 0), prev(n + 1, 0), saved;
    conn[0] = 1;
    prev[0] = 1;
    int L = 0;
    int shift = 1;
    Elem last_d = 1;

    for (int i = 0; i < n; ++i) {
        Elem d = terms[i];
        for (int t = 1; t <= L; ++t)
            if (conn[t] != 0 && terms[i - t] != 0) d = field.add(d, field.mul(conn[t], terms[i - t]));
        if (d == 0) {
            ++shift;
            continue;
        }
        const Elem factor = field.mul(d, field.inv(last_d));
        if (2 * L <= i) {
            saved = conn;
            for (int t = 0; t + shift <= n; ++t)
                if (prev[t] != 0)
                    conn[t + shift] = field.sub(conn[t + shift], field.mul(factor, prev[t]));
            L = i + 1 - L;
            prev = std::move(saved);
            last_d = d;
            shift = 1;
        } else {
            for (int t = 0; t + shift <= n; ++t)
                if (prev[t] != 0)
                    conn[t + shift] = field.sub(conn[t + shift], field.mul(factor, prev[t]));
            ++shift;
        }
    }
    return L;
}

int berlekamp_massey(const Sequence& s) {
    std::vector<Elem> doubled(s.elems);
    doubled.insert(doubled.end(), s.elems.begin(), s.elems.end());
    return berlekamp_massey_span(s.field, doubled);
}

long long pattern_count(int period, int q, int k) {
    long long total = 1;  // the empty pattern
    long long comb = 1;
    long long pw = 1;
    const int kmax = std::min(k, period);
    for (int j = 1; j <= kmax; ++j) {
        if (comb > kSat / (period - j + 1)) return kSat;
        comb = comb * (period - j + 1) / j;
        if (pw > kSat / (q - 1)) return kSat;
        pw *= q - 1;
        if (comb > kSat / pw) return kSat;
        const long long term = comb * pw;
        if (total > kSat - term) return kSat;
        total += term;
    }
    return total;
}

int brute_force_klc(const Sequence& s, int k, long long budget) {
    if (k < 0) throw BudgetOutOfRange("k must be nonnegative");
    const int N = s.period();
    const long long count = pattern_count(N, s.field.q(), k);
    if (count > budget)
        throw BudgetExceeded("weight <= " + std::to_string(k) + " needs " +
                             (count == kSat ? std::string(">10^18") : std::to_string(count)) +
                             " patterns, budget is " + std::to_string(budget));

    std::vector<Elem> doubled(s.elems);
    doubled.insert(doubled.end(), s.elems.begin(), s.elems.end());
    int best = berlekamp_massey_span(s.field, doubled);
    for (int weight = 1; weight <= std::min(k, N) && best > 0; ++weight)
        best = std::min(best, sweep_weight(s, weight, doubled, 0));
    return best;
}

std::vector<SpectrumPoint> brute_force_profile(const Sequence& s, long long budget) {
    const int N = s.period();
    const int q = s.field.q();

    // The sweep must reach complexity 0, which happens exactly at weight
    // hamming_weight(s) (the only pattern reaching the all-zero sequence is
    // -s), so the total pattern count is known upfront.
    const long long needed = pattern_count(N, q, hamming_weight(s));
    if (needed > budget)
        throw BudgetExceeded("full profile needs " +
                             (needed == kSat ? std::string(">10^18") : std::to_string(needed)) +
                             " patterns, budget is " + std::to_string(budget));

    std::vector<Elem> doubled(s.elems);
    doubled.insert(doubled.end(), s.elems.begin(), s.elems.end());

    std::vector<SpectrumPoint> points;
    int current = berlekamp_massey_span(s.field, doubled);
    points.push_back({0, current});
    long long spent = 1;

    for (int weight = 1; current > 0; ++weight) {
        const long long upto = pattern_count(N, q, weight);
        const long long level = upto == kSat ? kSat : upto - pattern_count(N, q, weight - 1);
        if (level > budget - spent)
            throw BudgetExceeded("profile sweep at weight " + std::to_string(weight) +
                                 " would exceed the budget of " + std::to_string(budget));
        spent += level;
        const int level_min = sweep_weight(s, weight, doubled, 0);
        if (level_min < current) {
            current = level_min;
            points.push_back({weight, current});
        }
    }
    return points;
}

std::vector<int> exhaustive_lc_table(const Field& field, int n, long long budget) {
    const int N = period_length(field, n);
    const int q = field.q();
    long long total = 1;
    for (int i = 0; i < N; ++i) {
        if (total > budget / q)
            throw BudgetExceeded("q^N sequences exceed the budget of " + std::to_string(budget));
        total *= q;
    }

    std::vector<int> table(static_cast<std::size_t>(total));
    std::vector<Elem> doubled(2 * N, 0);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < N; ++i) {
            const Elem e = static_cast<Elem>(c % q);
            doubled[i] = e;
            doubled[i + N] = e;
            c /= q;
        }
        table[static_cast<std::size_t>(code)] = berlekamp_massey_span(field, doubled);
    }
    return table;
}

}  // namespace lcprof::oracle
