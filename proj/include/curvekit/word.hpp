#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace curvekit {

// Signed generator index: +i is the i-th generator (a1=1, b1=2, a2=3, ...),
// -i its inverse. Zero never appears in a valid word.
struct Letter {
    std::int8_t code = 0;

    constexpr Letter() = default;
    constexpr explicit Letter(int c) : code(static_cast<std::int8_t>(c)) {}

    constexpr Letter inv() const { return Letter(-code); }
    constexpr int index() const { return code < 0 ? -code : code; }
    constexpr bool positive() const { return code > 0; }
    // Dense slot in [0, 4g): generator i -> 2(i-1), inverse -> 2(i-1)+1.
    constexpr int slot() const { return 2 * (index() - 1) + (code < 0 ? 1 : 0); }
    static constexpr Letter from_slot(int s) { return Letter((s % 2 == 0) ? (s / 2 + 1) : -(s / 2 + 1)); }

    friend constexpr bool operator==(Letter, Letter) = default;
    // Canonical letter order: a1 < A1 < b1 < B1 < a2 < ...
    friend constexpr auto operator<=>(Letter x, Letter y) { return x.slot() <=> y.slot(); }
};

using Word = std::vector<Letter>;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Word parse_word(std::string_view text, int genus);
std::string format_word(std::span<const Letter> w);
std::string format_letter(Letter x);

Word inverse(std::span<const Letter> w);
Word concat(std::span<const Letter> a, std::span<const Letter> b);
Word power(std::span<const Letter> w, int n);

// (length, then letter order) comparison used for all canonical choices.
bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b);

}  // namespace curvekit
