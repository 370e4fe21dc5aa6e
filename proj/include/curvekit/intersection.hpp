#pragma once

#include <span>
#include <stdexcept>

#include "curvekit/surface.hpp"

namespace curvekit {

class EqualClasses : public std::invalid_argument {
public:
    EqualClasses() : std::invalid_argument("classes are equal; use self_int") {}
};

class NonPrimitive : public std::invalid_argument {
public:
    NonPrimitive() : std::invalid_argument("class is a proper power") {}
};

class SharedEndpoint : public std::invalid_argument {
public:
    SharedEndpoint() : std::invalid_argument("axes share an endpoint") {}
};

class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Engine { combinatorial, numeric };

// Result of a linked-lift count. `walk_bound` is the fellow-travel bound at
// which the count became final.
struct LinkCount {
    long long linked = 0;
    int walk_bound = 0;
};

// A cyclic word with the relator-run lengths of its infinite power.
struct LiftWord {
    Word letters;
    std::array<std::vector<int>, 2> run;

    LiftWord(const Surface& s, std::span<const Letter> w);
};

// Both orientations of a curve, ready for repeated counting.
struct PreparedCurve {
    LiftWord forward, backward;

    PreparedCurve(const Surface& s, std::span<const Letter> w) : forward(s, w), backward(s, inverse(w)) {}
};

// Counts pairs of lifts (modulo the deck group) whose axes cross, for two
// cyclic words whose infinite powers are geodesic. Pairs are ordered, so a
// word against itself sees every crossing twice.
LinkCount count_linked_lifts(const Surface& s, const PreparedCurve& a, const PreparedCurve& b);
LinkCount count_linked_lifts(const Surface& s, std::span<const Letter> u, std::span<const Letter> v);

int geom_int(const Surface& s, const CurveClass& c1, const CurveClass& c2, Engine engine = Engine::combinatorial);
int self_int(const Surface& s, const CurveClass& c, Engine engine = Engine::combinatorial);

// Double sum over components weighted by multiplicities; a component met
// with itself contributes its self-intersection.
long long multicurve_int(const Surface& s, const Multicurve& m1, const Multicurve& m2,
                         Engine engine = Engine::combinatorial);

// The boundary point prefix * period^inf of the universal cover.
struct PeriodicRay {
    Word prefix;
    Word period;
};

// One axis of a conjugate of a class: translate * period^(+-inf).
struct Lift {
    Word translate;
    Word period;

    PeriodicRay forward() const { return {translate, period}; }
    PeriodicRay backward() const { return {translate, inverse(period)}; }
};

enum class Turn { counterclockwise, clockwise, degenerate };

// True if both rays end at the same boundary point (decided in the group).
bool same_endpoint(const Surface& s, const PeriodicRay& r1, const PeriodicRay& r2);

Turn boundary_order(const Surface& s, const PeriodicRay& r1, const PeriodicRay& r2, const PeriodicRay& r3,
                    Engine engine = Engine::combinatorial);

// True if the endpoint pairs of the two axes interleave.
bool links(const Surface& s, const Lift& l1, const Lift& l2, Engine engine = Engine::combinatorial);

}  // namespace curvekit
