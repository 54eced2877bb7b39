#include "lcprof/finite_field.hpp"

#include <string>

namespace lcprof {

namespace {

constexpr int kMaxOrder = 4096;  // table-backed arithmetic only

bool is_prime(int v) {
    if (v < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, low degree first.
int poly_degree(const std::vector<int>& f) {
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
        if (f[d] != 0) return d;
    return -1;
}

// In-place remainder of f by a monic divisor g.
void poly_mod(std::vector<int>& f, const std::vector<int>& g, int p) {
    const int dg = poly_degree(g);
    for (int d = poly_degree(f); d >= dg; d = poly_degree(f)) {
        const int c = f[d];
        for (int t = 0; t <= dg; ++t) {
            int& coef = f[d - dg + t];
            coef = (coef - c * g[t]) % p;
            if (coef < 0) coef += p;
        }
    }
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    poly_mod(prod, modulus, p);
    return prod;
}

bool is_irreducible(const std::vector<int>& modulus, int p, int m) {
    // Trial division by every monic polynomial of degree 1..m/2.
    for (int d = 1; 2 * d <= m; ++d) {
        long long combos = 1;
        for (int i = 0; i < d; ++i) combos *= p;
        std::vector<int> g(d + 1, 0);
        g[d] = 1;
        for (long long code = 0; code < combos; ++code) {
            long long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            std::vector<int> rem = modulus;
            poly_mod(rem, g, p);
            if (poly_degree(rem) < 0) return false;
        }
    }
    return true;
}

std::vector<int> digits_of(int h, int p, int m) {
    std::vector<int> d(m);
    for (int i = 0; i < m; ++i) {
        d[i] = h % p;
        h /= p;
    }
    return d;
}

int index_of(const std::vector<int>& digits, int p, int m) {
    int h = 0;
    for (int i = m - 1; i >= 0; --i) h = h * p + (i < static_cast<int>(digits.size()) ? digits[i] : 0);
    return h;
}

long long mod_pow(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// C(n, r) mod p for 0 <= n, r < p.
int binom_below_p(long long n, long long r, int p) {
    if (r > n) return 0;
    long long num = 1, den = 1;
    for (long long i = 1; i <= r; ++i) {
        num = num * ((n - r + i) % p) % p;
        den = den * (i % p) % p;
    }
    return static_cast<int>(num * mod_pow(den, p - 2, p) % p);
}

}  // namespace

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of the zero element");
    return inv_[a];
}

Field make_field(int p, int m, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw Error("extension degree must be at least 1");

    long long order = 1;
    for (int i = 0; i < m; ++i) {
        order *= p;
        if (order > kMaxOrder)
            throw Error("field order " + std::to_string(p) + "^" + std::to_string(m) +
                        " exceeds the supported table size");
    }

    Field f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = static_cast<int>(order);

    if (m == 1) {
        if (!modulus.empty())
            throw BadModulus("prime field GF(p) takes no modulus");
    } else {
        if (modulus.empty()) throw MissingModulus("GF(p^m) with m > 1 needs a modulus");
        if (static_cast<int>(modulus.size()) != m + 1)
            throw BadModulus("modulus must have degree exactly " + std::to_string(m));
        for (int c : modulus)
            if (c < 0 || c >= p) throw BadModulus("modulus coefficients must lie in [0, p)");
        if (modulus[m] != 1) throw BadModulus("modulus must be monic");
        if (!is_irreducible(modulus, p, m)) throw BadModulus("modulus is reducible over GF(p)");
        f.modulus_ = modulus;
    }

    const int q = f.q_;
    f.add_.resize(static_cast<std::size_t>(q) * q);
    f.mul_.resize(static_cast<std::size_t>(q) * q);
    f.neg_.resize(q);
    f.inv_.assign(q, -1);

    for (int a = 0; a < q; ++a) {
        const auto da = digits_of(a, p, m);
        std::vector<int> dn(m);
        for (int i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
        f.neg_[a] = index_of(dn, p, m);
        for (int b = 0; b < q; ++b) {
            const auto db = digits_of(b, p, m);
            std::vector<int> ds(m);
            for (int i = 0; i < m; ++i) ds[i] = (da[i] + db[i]) % p;
            f.add_[static_cast<std::size_t>(a) * q + b] = index_of(ds, p, m);
            if (m == 1) {
                f.mul_[static_cast<std::size_t>(a) * q + b] = a * b % p;
            } else {
                const auto prod = poly_mul_mod(da, db, f.modulus_, p);
                f.mul_[static_cast<std::size_t>(a) * q + b] = index_of(prod, p, m);
            }
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (f.mul_[static_cast<std::size_t>(a) * q + b] == 1) {
                f.inv_[a] = b;
                break;
            }
    return f;
}

int binom_mod_p(std::uint64_t a, std::uint64_t b, int p) {
    if (b > a) return 0;
    long long res = 1;
    while (a > 0 || b > 0) {
        const long long ai = static_cast<long long>(a % p);
        const long long bi = static_cast<long long>(b % p);
        if (bi > ai) return 0;
        res = res * binom_below_p(ai, bi, p) % p;
        a /= p;
        b /= p;
    }
    return static_cast<int>(res);
}

}  // namespace lcprof
