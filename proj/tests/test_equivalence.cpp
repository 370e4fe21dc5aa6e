#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "curvekit/constructions.hpp"
#include "curvekit/equivalence.hpp"
#include "curvekit/intersection.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace curvekit;
using fixtures::cls;
using fixtures::genus2;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const char* tag) {
    fs::path p = fs::temp_directory_path() / ("curvekit-test-" + std::string(tag) + "-" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("equivalence") {

TEST_CASE("length one and two") {
    const Surface& s = genus2();
    CurveCensus c1 = enumerate(s, 1);
    CHECK(c1.size() == 4);
    for (const auto& e : c1.entries()) CHECK(e.self_int == 0);
    // Length two: x y with y != x, x^-1, up to rotation and inversion,
    // counted by hand: (C(8,2) - 4) / 2 = 12, plus the 4 generators.
    CHECK(enumerate(s, 2).size() == 16);
}

TEST_CASE("census matches a brute-force canonicalisation up to length 4") {
    const Surface& s = genus2();
    std::set<CurveClass> brute;
    oracle::for_each_reduced(2, 4, [&](const oracle::Code& c) {
        const Word w = oracle::word_of(c);
        if (s.is_trivial(w)) return;
        CurveClass k = s.canonical_class(w);
        if (k.primitive() && k.length() <= 4) brute.insert(k);
    });
    CurveCensus c = enumerate(s, 4);
    std::set<CurveClass> got;
    for (const auto& e : c.entries()) got.insert(e.curve);
    CHECK(got == brute);
}

TEST_CASE("census grows monotonically and keeps its values") {
    const Surface& s = genus2();
    CurveCensus prev = enumerate(s, 1);
    for (int L = 2; L <= 5; ++L) {
        CurveCensus next = enumerate(s, L);
        for (const auto& e : prev.entries()) REQUIRE(next.self_int_of(e.curve) == e.self_int);
        prev = std::move(next);
    }
}

TEST_CASE("strata are consistent") {
    const auto& c = fixtures::census6();
    std::size_t total = 0;
    for (int k : c.strata()) {
        for (const auto& x : c.stratum(k)) REQUIRE(c.self_int_of(x) == 2 * k);
        total += c.stratum(k).size();
    }
    CHECK(total == c.size());
    CHECK(c.stratum(999).empty());
    CHECK_FALSE(c.self_int_of(cls("a1b1a2b2a1b1a2")).has_value());
}

TEST_CASE("cache files round-trip and are deterministic") {
    const Surface& s = genus2();
    fs::path d1 = temp_dir("a"), d2 = temp_dir("b");
    CurveCensus a = cached_census(s, 5, d1);
    CurveCensus b = cached_census(s, 5, d2, 2);
    const std::string fa = slurp(d1 / "census-g2-L5.txt"), fb = slurp(d2 / "census-g2-L5.txt");
    CHECK(fa == fb);
    CHECK(fa.rfind("genus=2 L=5 version=1\n", 0) == 0);
    CHECK(fa.find("#sha256=") != std::string::npos);
    CurveCensus again = cached_census(s, 5, d1);
    CHECK(serialize(again) == serialize(a));
    CurveCensus checked = load_census(s, d1 / "census-g2-L5.txt", true);
    CHECK(checked.size() == a.size());

    // Any edit to the body breaks the checksum.
    std::string bad = fa;
    bad[bad.find('\t') + 1] = bad[bad.find('\t') + 1] == '0' ? '2' : '0';
    CHECK_THROWS_AS(parse_census(s, bad), CacheError);
    // A wrong value with a fixed-up checksum is caught by the recheck.
    const std::string body = bad.substr(0, bad.find("#sha256="));
    const std::string forged = body + "#sha256=" + sha256_hex(body) + "\n";
    CHECK_NOTHROW(parse_census(s, forged));
    CHECK_THROWS_AS(parse_census(s, forged, true), CacheError);
    // Truncated file: no checksum line.
    CHECK_THROWS_AS(parse_census(s, body), CacheError);
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST_CASE("sha256") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("k-equivalence verdicts") {
    const Surface& s = genus2();
    const auto& c = fixtures::census6();
    CHECK_THROWS_AS(test_k_equiv(s, cls("a1"), cls("A1"), 0, c), EqualInputs);

    KeqPair p = build_keq_pair(s, s.parse("a1A2"), s.parse("a1b1"), 2);
    EquivVerdict v = test_k_equiv(s, p.alpha, p.beta, 1, c);
    REQUIRE(v.witness);
    CHECK(v.witness->curve == cls("a1A2"));
    CHECK(v.witness->with_beta - v.witness->with_alpha == 2);
    for (int k : {0, 2}) {
        EquivVerdict w = test_k_equiv(s, p.alpha, p.beta, k, c);
        CHECK(w.agree());
        CHECK(w.checked == static_cast<long long>(c.stratum(k).size()));
        CHECK(w.census_length == 6);
    }
}

TEST_CASE("witness is the first in census order and independent of jobs") {
    const Surface& s = genus2();
    const auto& c = fixtures::census6();
    const CurveClass a = cls("a1"), b = cls("a2");
    EquivVerdict v1 = test_k_equiv(s, a, b, 0, c, 1), v3 = test_k_equiv(s, a, b, 0, c, 3);
    REQUIRE(v1.witness);
    REQUIRE(v3.witness);
    CHECK(v1.witness->curve == v3.witness->curve);
    for (const auto& x : c.stratum(0)) {
        if (x == v1.witness->curve) break;
        REQUIRE(intersection_with(s, a, x) == intersection_with(s, b, x));
    }
}

TEST_CASE("distinguisher") {
    const Surface& s = genus2();
    const auto& c = fixtures::census6();
    DistinguisherReport r = find_distinguisher(s, cls("a1"), cls("a2"), c);
    REQUIRE(r.verdict.witness);
    CHECK(r.verdict.witness->k == 0);
    CHECK_FALSE(r.bounded);
    CHECK(r.default_cap == 0);
    // Capped below the only strata where the pair differs.
    KeqPair p = build_keq_pair(s, s.parse("a1A2"), s.parse("a1b1"), 2);
    DistinguisherReport capped = find_distinguisher(s, p.alpha, p.beta, c, 0);
    CHECK(capped.bounded);
    CHECK(capped.verdict.agree());
    CHECK(capped.cap == 0);
    CHECK_THROWS_AS(find_distinguisher(s, cls("a1"), cls("a1"), c), EqualInputs);
}

}
