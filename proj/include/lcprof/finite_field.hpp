#pragma once

#include <cstdint>
#include <vector>

#include "lcprof/errors.hpp"

namespace lcprof {

/// Field element, stored as its index h in [0, q). The index packs the
/// coefficients of the polynomial c_0 + c_1 x + ... + c_{m-1} x^{m-1} as
/// base-p digits of h, low digit first. Index 0 is the additive identity.
using Elem = int;

/// Arithmetic in GF(p^m) with fully precomputed tables. Immutable after
/// construction; all operations are pure and safe to use from any thread.
class Field {
public:
    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }

    /// Modulus coefficients, low degree first (empty when m == 1).
    const std::vector<int>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * q_ + neg_[b]]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * q_ + b]; }

    /// Multiplicative inverse; throws DivisionByZero for a == 0.
    Elem inv(Elem a) const;

    /// Scalar action of c in GF(p) through the prime subfield: c embeds as
    /// the constant polynomial with index c, so this is repeated addition.
    Elem scalar(int c, Elem a) const {
        c %= p_;
        if (c < 0) c += p_;
        return mul_[static_cast<std::size_t>(c) * q_ + a];
    }

private:
    friend Field make_field(int p, int m, const std::vector<int>& modulus);

    int p_ = 0;
    int m_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    std::vector<Elem> add_;  // q x q
    std::vector<Elem> mul_;  // q x q
    std::vector<Elem> neg_;  // q
    std::vector<Elem> inv_;  // q, inv_[0] = -1
};

/// Builds a validated GF(p^m). The modulus must be supplied exactly when
/// m > 1, as a monic irreducible degree-m coefficient list over GF(p),
/// low degree first. Irreducibility is checked by trial division.
Field make_field(int p, int m, const std::vector<int>& modulus = {});

/// C(a, b) mod p by Lucas' theorem; returns 0 when b > a. p must be prime.
int binom_mod_p(std::uint64_t a, std::uint64_t b, int p);

}  // namespace lcprof
