#include <doctest.h>

#include <fstream>
#include <sstream>

#include "curvekit/constructions.hpp"
#include "curvekit/equivalence.hpp"
#include "curvekit/intersection.hpp"
#include "curvekit/refsys.hpp"
#include "fixtures.hpp"

using namespace curvekit;
using fixtures::cls;
using fixtures::genus2;

namespace {
std::string bundled_text() {
    std::ifstream in(fixtures::data("genus2_refsys.txt"));
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}
}  // namespace

TEST_SUITE("refsys") {

TEST_CASE("bundled system") {
    const Surface& s = genus2();
    const ReferenceSystem& r = fixtures::refsys();
    REQUIRE(r.curves.size() == 9);
    CHECK_FALSE(r.missing_twisted_duals);
    for (const auto& c : r.curves) CHECK(self_int(s, c.curve) == 0);
    // Pants curves are pairwise disjoint.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(geom_int(s, r.curves[i].curve, r.curves[j].curve) == 0);
    CHECK(provenance_name(Provenance::twisted_dual) == "twisted-dual");
}

TEST_CASE("rejections") {
    const Surface& s = genus2();
    const std::string text = bundled_text();
    CHECK_THROWS_AS(parse_refsys(s, text + "pants bad=a1A2\n", fixtures::twists()), NotSimple);
    std::string wrong = text;
    auto pos = wrong.find("tdual1=a1b1a1a2A1B1a2");
    REQUIRE(pos != std::string::npos);
    wrong.replace(pos, 21, "tdual1=b1");
    CHECK_THROWS_AS(parse_refsys(s, wrong, fixtures::twists()), TwistMismatch);

    std::string no_twisted;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (line.rfind("twisted-dual", 0) != 0) no_twisted += line + "\n";
    ReferenceSystem r = parse_refsys(s, no_twisted, fixtures::twists());
    CHECK(r.missing_twisted_duals);
    CHECK(r.curves.size() == 6);
}

TEST_CASE("intersection vectors") {
    const Surface& s = genus2();
    const ReferenceSystem& r = fixtures::refsys();
    const auto v = phi(s, cls("a1"), r);
    REQUIRE(v.size() == 9);
    CHECK(v[0] == 0);
    CHECK(v[1] == 0);
    CHECK(v[2] == 0);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == intersection_with(s, cls("a1"), r.curves[i].curve));
    // phi of a reference curve itself has a zero in its own slot.
    CHECK(phi(s, r.curves[3].curve, r)[3] == 0);
    CHECK(phi(s, cls("a1b1"), ReferenceSystem{}).empty());
}

TEST_CASE("simple classes are told apart by the system") {
    const Surface& s = genus2();
    const auto& c = fixtures::census6();
    auto pairs = injectivity_scan(s, c.stratum(0), fixtures::refsys());
    CHECK(pairs.empty());
    CHECK(injectivity_scan(s, {}, fixtures::refsys()).empty());
}

TEST_CASE("scan finds the constructed collision and is job independent") {
    const Surface& s = genus2();
    const Cor5Data data = load_cor5_data(s, fixtures::data("genus2_cor5.txt"));
    Cor5Pair p = build_cor5_pair(s, 1, fixtures::refsys(), data, fixtures::twists());
    std::vector<CurveClass> list;
    for (const auto& e : fixtures::census6().entries())
        if (e.self_int == p.self_int && e.curve.length() <= 5) list.push_back(e.curve);
    list.push_back(p.gamma);
    list.push_back(p.gamma_prime);
    auto one = injectivity_scan(s, list, fixtures::refsys(), 1);
    auto three = injectivity_scan(s, list, fixtures::refsys(), 3);
    CHECK(one == three);
    bool found = false;
    for (const auto& [x, y] : one)
        if ((x == p.gamma && y == p.gamma_prime) || (x == p.gamma_prime && y == p.gamma)) found = true;
    CHECK(found);
}

}
