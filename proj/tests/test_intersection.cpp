#include <doctest.h>

#include "curvekit/intersection.hpp"
#include "fixtures.hpp"

using namespace curvekit;
using fixtures::cls;
using fixtures::genus2;

namespace {
Word W(const char* t) { return genus2().parse(t); }
PeriodicRay ray(const char* prefix, const char* period) { return {W(prefix), W(period)}; }
Turn flip(Turn t) {
    return t == Turn::clockwise ? Turn::counterclockwise : t == Turn::counterclockwise ? Turn::clockwise : t;
}
}  // namespace

TEST_SUITE("intersection") {

TEST_CASE("small intersection numbers") {
    const Surface& s = genus2();
    CHECK(geom_int(s, cls("a1"), cls("a2")) == 0);
    CHECK(geom_int(s, cls("a1"), cls("b1")) == 1);
    CHECK(self_int(s, cls("a1")) == 0);
    // Separating commutator: simple and disjoint from a1 (both engines).
    for (Engine e : {Engine::combinatorial, Engine::numeric}) {
        CHECK(geom_int(s, cls("a1b1A1B1"), cls("a1"), e) == 0);
        CHECK(self_int(s, cls("a1b1A1B1"), e) == 0);
    }
}

TEST_CASE("one-curves") {
    const Surface& s = genus2();
    // Both engines agree that a1A2 crosses itself once; a1a2 is simple in
    // this presentation (it bounds a pair of pants with a1 and a2).
    for (Engine e : {Engine::combinatorial, Engine::numeric}) {
        CHECK(self_int(s, cls("a1A2"), e) == 2);
        CHECK(self_int(s, cls("a1a2"), e) == 0);
        CHECK(self_int(s, cls("a1a1b1"), e) == 0);
        CHECK(self_int(s, cls("a1a1B1B1"), e) == 2);
    }
}

TEST_CASE("errors") {
    const Surface& s = genus2();
    CHECK_THROWS_AS(geom_int(s, cls("a1"), cls("A1")), EqualClasses);
    CHECK_THROWS_AS(geom_int(s, cls("a1a1"), cls("b1")), NonPrimitive);
    CHECK_THROWS_AS(self_int(s, cls("b2b2")), NonPrimitive);
}

TEST_CASE("multicurve double sum") {
    const Surface& s = genus2();
    const CurveClass g = cls("a1A2");
    for (int m : {1, 2, 3}) {
        Multicurve mg = Multicurve::from({{g, m}});
        CHECK(multicurve_int(s, mg, mg) == 2LL * m * m * 1);
    }
    CHECK(multicurve_int(s, Multicurve::from({{cls("a1"), 1}}), Multicurve::from({{cls("a2"), 1}})) == 0);
    Multicurve ab = Multicurve::from({{cls("a1"), 1}, {cls("b1"), 1}});
    CHECK(multicurve_int(s, ab, ab) == 2);
}

TEST_CASE("boundary order axioms") {
    const Surface& s = genus2();
    const PeriodicRay a = ray("", "a1"), b = ray("", "b1"), c = ray("", "A1"), d = ray("b2", "a2B1");
    const std::vector<std::array<PeriodicRay, 3>> triples{{a, b, c}, {a, b, d}, {b, c, d}, {ray("a1", "b2"), b, a}};
    for (const auto& t : triples) {
        const Turn o = boundary_order(s, t[0], t[1], t[2]);
        CHECK(o != Turn::degenerate);
        CHECK(boundary_order(s, t[1], t[2], t[0]) == o);
        CHECK(boundary_order(s, t[2], t[0], t[1]) == o);
        CHECK(boundary_order(s, t[1], t[0], t[2]) == flip(o));
        CHECK(boundary_order(s, t[0], t[2], t[1]) == flip(o));
        CHECK(boundary_order(s, t[0], t[1], t[2], Engine::numeric) == o);
    }
    CHECK(boundary_order(s, a, a, b) == Turn::degenerate);
    // Same point written two ways: a1^inf from a1^3.
    CHECK(boundary_order(s, a, ray("a1a1a1", "a1"), b) == Turn::degenerate);
    CHECK(same_endpoint(s, ray("", "a1a1"), a));
    CHECK_FALSE(same_endpoint(s, a, c));
}

TEST_CASE("boundary order is stable when periods are unrolled") {
    const Surface& s = genus2();
    const PeriodicRay x = ray("", "a1b2"), y = ray("b1", "A2"), z = ray("B2", "b1a2");
    const Turn o = boundary_order(s, x, y, z);
    CHECK(boundary_order(s, ray("a1b2a1b2", "a1b2"), ray("b1A2", "A2A2"), z) == o);
}

TEST_CASE("links") {
    const Surface& s = genus2();
    CHECK(links(s, {W(""), W("a1")}, {W(""), W("b1")}));
    CHECK(links(s, {W(""), W("a1")}, {W(""), W("b1")}, Engine::numeric));
    // a1 and a2 are disjoint, so no pair of their lifts is linked.
    for (const char* t : {"", "b1", "B2", "b1b2", "a2b1", "B1a2"}) CHECK_FALSE(links(s, {W(""), W("a1")}, {W(t), W("a2")}));
    CHECK_THROWS_AS(links(s, {W(""), W("a1")}, {W("a1"), W("a1")}), SharedEndpoint);
}

TEST_CASE("symmetry, inversion and homology bound on short classes") {
    const Surface& s = genus2();
    std::vector<CurveClass> cs;
    for (const auto& e : fixtures::census6().entries())
        if (e.curve.length() <= 4) cs.push_back(e.curve);
    REQUIRE(cs.size() > 100);
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            const int x = geom_int(s, cs[i], cs[j]);
            REQUIRE(x == geom_int(s, cs[j], cs[i]));
            REQUIRE(std::abs(s.algebraic_intersection(cs[i].word, cs[j].word)) <= x);
            REQUIRE(x % 2 == std::abs(s.algebraic_intersection(cs[i].word, cs[j].word)) % 2);
        }
}

TEST_CASE("self-intersection is even and matches the census") {
    const Surface& s = genus2();
    for (const auto& e : fixtures::census6().entries()) {
        if (e.curve.length() > 5) break;
        REQUIRE(e.self_int % 2 == 0);
        REQUIRE(self_int(s, CurveClass{inverse(e.curve.word), 1}) == e.self_int);
    }
}

TEST_CASE("engines agree on a sample of longer classes") {
    const Surface& s = genus2();
    const auto& entries = fixtures::census6().entries();
    for (std::size_t i = 0; i < entries.size(); i += 97) {
        REQUIRE(self_int(s, entries[i].curve, Engine::numeric) == entries[i].self_int);
        const auto& other = entries[(i * 31 + 5) % entries.size()];
        if (other.curve == entries[i].curve) continue;
        REQUIRE(geom_int(s, entries[i].curve, other.curve) == geom_int(s, entries[i].curve, other.curve, Engine::numeric));
    }
}

}
