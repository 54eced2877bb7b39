#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcprof/finite_field.hpp"

namespace lcprof {

/// One full period (length N = p^n) of a sequence over a Field.
struct Sequence {
    Field field;
    int n = 0;  ///< level exponent, N = p^n
    std::vector<Elem> elems;

    int period() const { return static_cast<int>(elems.size()); }
};

/// p^n with a desk-scale overflow guard; n must be >= 1.
int period_length(const Field& field, int n);

/// Parses one period from decimal element indices separated by commas or
/// whitespace. Lines may carry `#` comments. Requires exactly p^n tokens,
/// each in [0, q).
Sequence parse_sequence(std::string_view text, const Field& field, int n);

/// Comma-separated element indices; inverse of parse_sequence.
std::string serialize_sequence(const Sequence& s);

/// Number of nonzero elements in the period.
int hamming_weight(const Sequence& s);

/// Deterministic pseudorandom period: mt19937_64 seeded with `seed`,
/// elements drawn uniformly from [0, q) by unbiased rejection. The same
/// (field, n, seed) always yields the same sequence on every platform.
Sequence random_sequence(const Field& field, int n, std::uint64_t seed);

}  // namespace lcprof
