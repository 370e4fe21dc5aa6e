#include "curvekit/constructions.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "curvekit/equivalence.hpp"
#include "curvekit/intersection.hpp"

namespace curvekit {

namespace {

CurveClass class_or_degenerate(const Surface& s, const Word& w, int stage) {
    if (s.is_trivial(w)) throw DegeneratePair("constructed word is trivial", stage);
    CurveClass c = s.canonical_class(w);
    if (!c.primitive()) throw DegeneratePair("constructed class is a proper power", stage);
    return c;
}

void check_loops(const Surface& s, const Word& u, const Word& v, int m, int stage) {
    if (m < 1) throw DegeneratePair("exponent must be positive", stage);
    if (u.empty() || s.is_trivial(u)) throw DegeneratePair("u is trivial", stage);
    if (v.empty() || s.is_trivial(v)) throw DegeneratePair("v is trivial", stage);
    CurveClass cu = s.canonical_class(u), cv = s.canonical_class(v);
    if (!cu.primitive()) throw DegeneratePair("u is a proper power", stage);
    if (cv.word == cu.word) throw DegeneratePair("v is a power of u", stage);
}

struct Forms {
    Word first, second;
};

Forms forms(const Word& u, const Word& v, int m) {
    Word um = power(u, m), uinv = power(inverse(u), m);
    return {concat(concat(concat(v, um), inverse(v)), uinv), concat(concat(concat(v, um), v), uinv)};
}

}  // namespace

KeqPair build_keq_pair(const Surface& s, const Word& u, const Word& v, int m) {
    check_loops(s, u, v, m, -1);
    const CurveClass gamma = s.canonical_class(u);
    Forms f = forms(u, v, m);
    CurveClass c1 = class_or_degenerate(s, f.first, -1), c2 = class_or_degenerate(s, f.second, -1);
    if (c1 == c2) throw DegeneratePair("both forms give the same class");
    int i1 = intersection_with(s, c1, gamma), i2 = intersection_with(s, c2, gamma);
    KeqPair p;
    if (i2 - i1 == 2) {
        p = {c1, c2, f.first, f.second, false, i1, i2};
    } else if (i1 - i2 == 2) {
        p = {c2, c1, f.second, f.first, true, i2, i1};
    } else {
        throw DegeneratePair("forms meet u " + std::to_string(i1) + " and " + std::to_string(i2) +
                             " times; the gap must be 2");
    }
    return p;
}

KeqPair build_keq_pair_multi(const Surface& s, const std::vector<Word>& gammas, const Word& v, int m) {
    if (gammas.empty()) throw DegeneratePair("no loops given");
    if (m < 1) throw DegeneratePair("exponent must be positive", 0);
    KeqPair first;
    try {
        check_loops(s, gammas[0], v, 2 * m, 0);
        first = build_keq_pair(s, gammas[0], v, 2 * m);
    } catch (const DegeneratePair& e) {
        if (e.stage() >= 0) throw;
        throw DegeneratePair(e.what(), 0);
    }
    Word wa = first.alpha_word, wb = first.beta_word;
    for (std::size_t i = 1; i < gammas.size(); ++i) {
        const int stage = static_cast<int>(i);
        check_loops(s, gammas[i], wa, 2 * m, stage);
        check_loops(s, gammas[i], wb, 2 * m, stage);
        // Keep the same form on each side as in the first stage.
        Forms fa = forms(gammas[i], wa, 2 * m), fb = forms(gammas[i], wb, 2 * m);
        wa = first.swapped ? fa.second : fa.first;
        wb = first.swapped ? fb.first : fb.second;
        class_or_degenerate(s, wa, stage);
        class_or_degenerate(s, wb, stage);
    }
    KeqPair out = first;
    out.alpha_word = s.dehn_reduce(wa);
    out.beta_word = s.dehn_reduce(wb);
    out.alpha = class_or_degenerate(s, wa, static_cast<int>(gammas.size()) - 1);
    out.beta = class_or_degenerate(s, wb, static_cast<int>(gammas.size()) - 1);
    if (out.alpha == out.beta) throw DegeneratePair("sides coincide", static_cast<int>(gammas.size()) - 1);
    if (gammas.size() > 1) {
        const CurveClass last = s.canonical_class(gammas.back());
        out.alpha_gamma = intersection_with(s, out.alpha, last);
        out.beta_gamma = intersection_with(s, out.beta, last);
    }
    return out;
}

CurveClass join(const Surface& s, const Word& u, const Word& v, const Word& connector) {
    Word w = concat(concat(concat(u, connector), v), inverse(connector));
    if (s.is_trivial(w)) throw TrivialResult();
    CurveClass c = s.canonical_class(w);
    if (!c.primitive()) throw TrivialResult();
    return c;
}

Cor5Data parse_cor5_data(const Surface& s, std::string_view text) {
    std::map<std::string, std::string> kv;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        raw = raw.substr(0, raw.find('#'));
        auto eq = raw.find('=');
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos) throw ParseError("construction data: expected key=value");
        auto strip = [](std::string x) {
            auto b = x.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            return x.substr(b, x.find_last_not_of(" \t\r") - b + 1);
        };
        kv[strip(raw.substr(0, eq))] = strip(raw.substr(eq + 1));
    }
    auto need = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParseError("construction data: missing " + key);
        return it->second;
    };
    if (kv.count("genus") && std::stoi(kv["genus"]) != s.genus()) throw ParseError("construction data: genus mismatch");
    Cor5Data d;
    d.zeta = s.parse(need("zeta"));
    d.zeta_twisted = s.parse(need("zeta_twisted"));
    d.twist_plus = need("twist_plus");
    d.twist_minus = need("twist_minus");
    d.connector1 = s.parse(need("connector1"));
    d.connector2 = s.parse(need("connector2"));
    if (kv.count("adjust_plus")) d.adjust_plus = std::stoi(kv["adjust_plus"]);
    if (kv.count("adjust_minus")) d.adjust_minus = std::stoi(kv["adjust_minus"]);
    return d;
}

Cor5Data load_cor5_data(const Surface& s, const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_cor5_data(s, buf.str());
}

Cor5Pair build_cor5_pair(const Surface& s, int k, const ReferenceSystem& r, const Cor5Data& data,
                         const std::vector<TwistAutomorphism>& twists) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const TwistAutomorphism& plus = find_twist(twists, data.twist_plus);
    const TwistAutomorphism& minus = find_twist(twists, data.twist_minus);

    // Re-check the bundled claims before using them.
    if (data.zeta.empty() || s.is_trivial(data.zeta)) throw ConstructionFailed("zeta is trivial");
    if (data.zeta_twisted.empty() || s.is_trivial(data.zeta_twisted)) throw ConstructionFailed("twisted zeta is trivial");
    const CurveClass zeta = s.canonical_class(data.zeta), zeta2 = s.canonical_class(data.zeta_twisted);
    if (!zeta.primitive() || self_int(s, zeta) != 0) throw ConstructionFailed("zeta is simple");
    if (!zeta2.primitive() || self_int(s, zeta2) != 0) throw ConstructionFailed("twisted zeta is simple");
    const CurveClass core_plus = s.canonical_class(plus.along), core_minus = s.canonical_class(minus.along);
    if (intersection_with(s, zeta, core_plus) == 0 || intersection_with(s, zeta, core_minus) == 0)
        throw ConstructionFailed("zeta crosses both twist curves");
    if (apply(s, minus, apply(s, plus, zeta, 1), -1) != zeta2) throw ConstructionFailed("twisted zeta is the twist image");
    if (zeta == zeta2 || geom_int(s, zeta, zeta2) != 0) throw ConstructionFailed("zeta and twisted zeta are disjoint");

    const Word zk = power(data.zeta, k);
    const CurveClass base1 = join(s, zk, data.zeta_twisted, data.connector1);
    const CurveClass base2 = join(s, zk, data.zeta_twisted, data.connector2);

    auto adjusted = [&](const CurveClass& c, int t) {
        TwistWord w{{plus, t * data.adjust_plus}, {minus, t * data.adjust_minus}};
        return std::pair{apply(s, w, c), w};
    };
    const int max_steps = 8;
    for (int t = 0; t <= max_steps; ++t) {
        auto [g1, w] = adjusted(base1, t);
        auto [g2, _] = adjusted(base2, t);
        auto v1 = phi(s, g1, r);
        if (v1 != phi(s, g2, r)) continue;
        auto [h1, w1] = adjusted(base1, t + 1);
        auto [h2, w2] = adjusted(base2, t + 1);
        if (phi(s, h1, r) != phi(s, h2, r)) continue;

        Cor5Pair out{g1, g2, w, t, 0, v1, r.curves.empty()};
        if (g1 == g2) throw ConstructionFailed("the two joins are distinct");
        const int s1 = self_int(s, g1), s2 = self_int(s, g2);
        if (s1 != s2) throw ConstructionFailed("equal self-intersection");
        if (s1 != 2 * k) throw ConstructionFailed("both curves are k-curves");
        out.self_int = s1;
        return out;
    }
    throw ConstructionFailed("intersection vectors agree after twist adjustment");
}

}  // namespace curvekit
