#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvekit/surface.hpp"

namespace curvekit {

class InvalidAutomorphism : public std::invalid_argument {
public:
    InvalidAutomorphism(const std::string& twist, const std::string& check)
        : std::invalid_argument("twist " + twist + " fails " + check), twist_(twist), check_(check) {}
    const std::string& twist() const { return twist_; }
    const std::string& check() const { return check_; }

private:
    std::string twist_, check_;
};

// A mapping class given by where it sends each generator, with the table of
// its inverse. Tables are indexed by generator (a1, b1, a2, b2, ...).
struct TwistAutomorphism {
    std::string name;
    Word along;
    std::vector<Word> images;
    std::vector<Word> inverse_images;

    // Image of a word under the power-th iterate; negative powers use the
    // inverse table. Output is Dehn-reduced.
    Word map(const Surface& s, std::span<const Letter> w, int power = 1) const;
};

// Checks the relator goes to a conjugate of itself or its inverse in the
// free group (both tables), that the tables compose to the identity, and
// that the core curve is simple. Throws InvalidAutomorphism.
void validate(const Surface& s, const TwistAutomorphism& t);

// Parses the plain-text block format and validates every block.
std::vector<TwistAutomorphism> parse_twists(const Surface& s, std::string_view text);
std::vector<TwistAutomorphism> load_twists(const Surface& s, const std::filesystem::path& file);

TwistAutomorphism identity_twist(const Surface& s, Word along);

CurveClass apply(const Surface& s, const TwistAutomorphism& t, const CurveClass& c, int power = 1);

// A composition of twist powers, applied left to right.
using TwistWord = std::vector<std::pair<TwistAutomorphism, int>>;
CurveClass apply(const Surface& s, const TwistWord& phi, const CurveClass& c);

const TwistAutomorphism& find_twist(const std::vector<TwistAutomorphism>& twists, std::string_view name);

}  // namespace curvekit
