#include <doctest.h>

#include "curvekit/constructions.hpp"
#include "curvekit/intersection.hpp"
#include "fixtures.hpp"

using namespace curvekit;
using fixtures::cls;
using fixtures::genus2;

namespace {
Word W(const char* t) { return genus2().parse(t); }

std::vector<int> doubled(std::vector<int> h) {
    for (int& x : h) x *= 2;
    return h;
}
}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("degenerate inputs") {
    const Surface& s = genus2();
    CHECK_THROWS_AS(build_keq_pair(s, W("a1A2"), W("a1b1"), 0), DegeneratePair);
    CHECK_THROWS_AS(build_keq_pair(s, W("a1A2"), W("A2a1"), 1), DegeneratePair);
    CHECK_THROWS_AS(build_keq_pair_multi(s, {}, W("a1b1"), 1), DegeneratePair);
}

TEST_CASE("pair shape and homology") {
    const Surface& s = genus2();
    for (int m : {1, 2, 3}) {
        const Word u = W("a1A2"), v = W("a1b1");
        KeqPair p = build_keq_pair(s, u, v, m);
        CAPTURE(m);
        CHECK(p.alpha != p.beta);
        CHECK(p.beta_gamma - p.alpha_gamma == 2);
        const CurveClass gamma = s.canonical_class(u);
        CHECK(geom_int(s, p.alpha, gamma) == p.alpha_gamma);
        CHECK(geom_int(s, p.beta, gamma) == p.beta_gamma);
        // One side is a commutator, the other carries twice the class of v.
        const auto ha = s.homology(p.alpha_word), hb = s.homology(p.beta_word);
        const auto zero = std::vector<int>(4, 0), twice = doubled(s.homology(v));
        CHECK(((ha == zero && hb == twice) || (hb == zero && ha == twice)));
        CHECK(p.swapped == (ha == twice));
    }
}

TEST_CASE("pair agrees with the single-loop case of the multi version") {
    const Surface& s = genus2();
    KeqPair one = build_keq_pair(s, W("a1A2"), W("a1b1"), 2);
    KeqPair multi = build_keq_pair_multi(s, {W("a1A2")}, W("a1b1"), 1);
    CHECK(one.alpha == multi.alpha);
    CHECK(one.beta == multi.beta);
}

TEST_CASE("pair is 1-equivalent below the witness stratum") {
    const Surface& s = genus2();
    const auto& c = fixtures::census6();
    KeqPair p = build_keq_pair(s, W("a1A2"), W("a1b1"), 2);
    CHECK(test_k_equiv(s, p.alpha, p.beta, 0, c).agree());
    CHECK_FALSE(test_k_equiv(s, p.alpha, p.beta, 1, c).agree());
}

TEST_CASE("join") {
    const Surface& s = genus2();
    CHECK(join(s, W("a1"), W("b1"), W("")) == cls("a1b1"));
    CHECK(join(s, W("a1"), W("a2"), W("b1")) == cls("a1b1a2B1"));
    CHECK_THROWS_AS(join(s, W("a1"), W("A1"), W("")), TrivialResult);
    CHECK_THROWS_AS(join(s, W("a1"), W("a1"), W("")), TrivialResult);
}

TEST_CASE("non-injectivity pair") {
    const Surface& s = genus2();
    const Cor5Data data = load_cor5_data(s, fixtures::data("genus2_cor5.txt"));
    const ReferenceSystem& r = fixtures::refsys();
    for (int k : {1, 2}) {
        CAPTURE(k);
        Cor5Pair p = build_cor5_pair(s, k, r, data, fixtures::twists());
        CHECK_FALSE(p.vacuous);
        CHECK(p.gamma != p.gamma_prime);
        CHECK(self_int(s, p.gamma) == p.self_int);
        CHECK(self_int(s, p.gamma_prime) == p.self_int);
        CHECK(p.self_int >= 2 * k);
        CHECK(phi(s, p.gamma, r) == phi(s, p.gamma_prime, r));
        CHECK(p.vector == phi(s, p.gamma, r));
    }
    Cor5Pair empty = build_cor5_pair(s, 1, ReferenceSystem{}, data, fixtures::twists());
    CHECK(empty.vacuous);
    CHECK(empty.vector.empty());
}

TEST_CASE("cor5 data parsing") {
    const Surface& s = genus2();
    CHECK_THROWS(parse_cor5_data(s, "genus=2\nzeta=b1\n"));
    CHECK_THROWS(parse_cor5_data(s, "genus=2\nzeta=q7\nzeta_twisted=b1\ntwist_plus=twist_a1\ntwist_minus=twist_c\n"));
}

}
