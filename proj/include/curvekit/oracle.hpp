#pragma once

// Floating-point cross-check for the combinatorial intersection engine.
// Closed geodesics are traced through a slightly perturbed fundamental
// polygon; crossings are interleaved chord pairs.

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "curvekit/surface.hpp"

namespace curvekit {

// Points on the polygon boundary are coded as side + fraction in [0, 4g).
struct ChordSet {
    std::vector<std::pair<long double, long double>> chords;
    Word cutting;        // sides crossed over one period
    long double drift{};  // mismatch after one period
    int tier = 0;         // precision tier that produced it
    int sides = 0;
};

class NumericOracle {
public:
    explicit NumericOracle(const Surface& s);
    ~NumericOracle();
    NumericOracle(NumericOracle&&) noexcept;

    const Surface& surface() const { return *surface_; }

    // Chords of the closed geodesic of cyclic word w, traced at the given
    // precision tier (0 = long double, higher = more mpfr digits).
    ChordSet chords(std::span<const Letter> w, int tier = 0) const;
    // Lowest tier whose trace closes up.
    ChordSet trace(std::span<const Letter> w) const;

    // Interleaved pairs between two chord sets, or nullopt when two
    // endpoints are too close to order at the sets' precision.
    static std::optional<long long> crossings(const ChordSet& a, const ChordSet& b);
    static std::optional<long long> self_crossings(const ChordSet& a);

    // Escalating versions: retrace at higher tiers on ambiguity.
    int geom_int(std::span<const Letter> w1, std::span<const Letter> w2) const;
    int self_int(std::span<const Letter> w) const;
    int geom_int(const ChordSet& a, std::span<const Letter> w1, const ChordSet& b,
                 std::span<const Letter> w2) const;
    int self_int(const ChordSet& a, std::span<const Letter> w) const;

    // +1 counterclockwise, -1 clockwise, 0 when the points agree to the
    // working precision.
    int orientation(std::span<const Letter> p1, std::span<const Letter> q1, std::span<const Letter> p2,
                    std::span<const Letter> q2, std::span<const Letter> p3, std::span<const Letter> q3,
                    int tier) const;

    static constexpr int max_tier = 3;

private:
    struct Models;
    std::optional<long long> escalate(std::span<const Letter> w1, std::span<const Letter> w2, bool same) const;
    const Surface* surface_;
    std::unique_ptr<Models> models_;
};

}  // namespace curvekit
