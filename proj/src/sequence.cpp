#include "lcprof/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <random>

namespace lcprof {

namespace {
constexpr long long kMaxPeriod = 1 << 26;
}

int period_length(const Field& field, int n) {
    if (n < 1) throw Error("level exponent n must be at least 1");
    long long len = 1;
    for (int i = 0; i < n; ++i) {
        len *= field.p();
        if (len > kMaxPeriod) throw Error("period p^n is too large");
    }
    return static_cast<int>(len);
}

Sequence parse_sequence(std::string_view text, const Field& field, int n) {
    const int expected = period_length(field, n);
    Sequence s{field, n, {}};
    s.elems.reserve(expected);

    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c >= '0' && c <= '9') {
            std::size_t end = i;
            while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
            int value = 0;
            const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + end, value);
            (void)ptr;
            if (ec == std::errc::result_out_of_range || (ec == std::errc{} && value >= field.q()))
                throw TokenOutOfRange("element '" + std::string(text.substr(i, end - i)) +
                                      "' is outside [0, " + std::to_string(field.q()) + ")");
            if (ec != std::errc{})
                throw MalformedToken("cannot parse token '" + std::string(text.substr(i, end - i)) + "'");
            s.elems.push_back(value);
            i = end;
        } else {
            throw MalformedToken(std::string("unexpected character '") + c + "' in sequence");
        }
    }

    if (static_cast<int>(s.elems.size()) != expected)
        throw LengthMismatch("got " + std::to_string(s.elems.size()) + " elements, period p^n needs " +
                             std::to_string(expected));
    return s;
}

std::string serialize_sequence(const Sequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.elems.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s.elems[i]);
    }
    return out;
}

int hamming_weight(const Sequence& s) {
    return static_cast<int>(std::count_if(s.elems.begin(), s.elems.end(), [](Elem e) { return e != 0; }));
}

Sequence random_sequence(const Field& field, int n, std::uint64_t seed) {
    const int len = period_length(field, n);
    std::mt19937_64 gen(seed);
    const std::uint64_t q = static_cast<std::uint64_t>(field.q());
    // std::uniform_int_distribution is implementation-defined; rejection
    // sampling keeps the output identical across standard libraries.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % q;
    Sequence s{field, n, {}};
    s.elems.reserve(len);
    for (int i = 0; i < len; ++i) {
        std::uint64_t x;
        do {
            x = gen();
        } while (x >= limit);
        s.elems.push_back(static_cast<Elem>(x % q));
    }
    return s;
}

}  // namespace lcprof
