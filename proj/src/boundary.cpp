#include <array>
#include <optional>

#include "curvekit/intersection.hpp"
#include "curvekit/oracle.hpp"

namespace curvekit {

namespace {

// head * cycle^inf, geodesic as a path from the identity.
struct NormalRay {
    Word head;
    Word cycle;

    Word segment(int length) const {
        Word out(head.begin(), head.begin() + std::min<std::size_t>(head.size(), length));
        while (static_cast<int>(out.size()) < length) out.push_back(cycle[(out.size() - head.size()) % cycle.size()]);
        return out;
    }
};

Word conjugate(std::span<const Letter> p, std::span<const Letter> q) { return concat(concat(p, q), inverse(p)); }

std::size_t translation_length(const Surface& s, std::span<const Letter> g) {
    auto forms = s.cyclic_geodesics(g);
    return forms.empty() ? 0 : forms.begin()->size();
}

// Finds a geodesic of the form head * cycle^inf by reading off a periodic
// stretch of a shortest word for prefix * period^reps.
NormalRay normalize(const Surface& s, const PeriodicRay& r) {
    if (r.period.empty() || s.is_trivial(r.period)) throw TrivialWord();
    const int ell = static_cast<int>(translation_length(s, r.period));
    const Word axis = conjugate(r.prefix, r.period);
    int reps = (static_cast<int>(r.prefix.size()) + 2 * s.relator_length()) / ell + 4;
    for (; reps <= 512; reps *= 2) {
        Word w = r.prefix;
        for (int k = 0; k < reps; ++k) w.insert(w.end(), r.period.begin(), r.period.end());
        const Word g = s.geodesic(w);
        const int n = static_cast<int>(g.size());
        for (int j = 0; j + 3 * ell <= n; ++j) {
            bool periodic = true;
            for (int t = 0; t < 2 * ell && periodic; ++t) periodic = g[j + t] == g[j + t + ell];
            if (!periodic) continue;
            Word head(g.begin(), g.begin() + j);
            Word cycle(g.begin() + j, g.begin() + j + ell);
            if (!s.equal(conjugate(head, cycle), axis)) continue;
            Word probe = head;
            for (int k = 0; k < 3; ++k) probe.insert(probe.end(), cycle.begin(), cycle.end());
            if (s.geodesic(probe).size() != probe.size()) continue;
            return {std::move(head), std::move(cycle)};
        }
    }
    throw ResourceCap("no periodic geodesic found for ray");
}

// meets[k]: the length-k prefixes of a and b end at the same vertex.
std::vector<char> meetings(const Surface& s, const Word& a, const Word& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<char> out(n + 1, 0);
    out[0] = 1;
    Word diff;
    for (std::size_t k = 0; k < n; ++k) {
        Word next;
        next.reserve(diff.size() + 2);
        next.push_back(a[k].inv());
        next.insert(next.end(), diff.begin(), diff.end());
        next.push_back(b[k]);
        diff = s.dehn_reduce(next);
        out[k + 1] = diff.empty();
    }
    return out;
}

bool left_of(int e, int out, int in, int n) { return ((e - out + n) % n) < ((in - out + n) % n); }

// Side of the third ray relative to the path from the first endpoint to the
// second, read on segments of the given length. Empty when a contact sits
// at the cut-off.
std::optional<bool> left_at(const Surface& s, const std::array<NormalRay, 3>& rays, int length) {
    const Word g1 = rays[0].segment(length), g2 = rays[1].segment(length), g3 = rays[2].segment(length);
    const auto m12 = meetings(s, g1, g2);
    int k = length;
    while (!m12[k]) --k;
    if (k >= length) return std::nullopt;
    const auto m31 = meetings(s, g3, g1), m32 = meetings(s, g3, g2);
    int m = length;
    while (m >= k && !(m32[m] || (m > k && m31[m]))) --m;
    if (m >= length) return std::nullopt;

    const int n = s.relator_length();
    auto pos = [&](Letter x) { return s.link_position(x); };
    int e, in, out;
    if (m < k) {
        // The third ray never touches the path; the base point decides.
        e = pos(g2[k - 1].inv());
        in = pos(g1[k]);
        out = pos(g2[k]);
    } else {
        e = pos(g3[m]);
        if (m == k) {
            in = pos(g1[k]);
            out = pos(g2[k]);
        } else if (m32[m]) {
            in = pos(g2[m - 1].inv());
            out = pos(g2[m]);
        } else {
            in = pos(g1[m]);
            out = pos(g1[m - 1].inv());
        }
    }
    return left_of(e, out, in, n);
}

}  // namespace

bool same_endpoint(const Surface& s, const PeriodicRay& r1, const PeriodicRay& r2) {
    const Word g1 = conjugate(r1.prefix, r1.period), g2 = conjugate(r2.prefix, r2.period);
    if (s.is_trivial(g1) || s.is_trivial(g2)) throw TrivialWord();
    if (!s.is_trivial(concat(concat(g1, g2), inverse(concat(g2, g1))))) return false;
    // Commuting elements share an axis; the endpoints agree when they
    // translate the same way along it.
    return translation_length(s, concat(g1, g2)) == translation_length(s, g1) + translation_length(s, g2);
}

Turn boundary_order(const Surface& s, const PeriodicRay& r1, const PeriodicRay& r2, const PeriodicRay& r3,
                    Engine engine) {
    if (same_endpoint(s, r1, r2) || same_endpoint(s, r2, r3) || same_endpoint(s, r1, r3)) return Turn::degenerate;
    if (engine == Engine::numeric) {
        NumericOracle oracle(s);
        for (int tier = 0; tier <= NumericOracle::max_tier; ++tier) {
            int o = oracle.orientation(r1.prefix, r1.period, r2.prefix, r2.period, r3.prefix, r3.period, tier);
            if (o != 0) return o > 0 ? Turn::counterclockwise : Turn::clockwise;
        }
        throw PrecisionExhausted("cannot order boundary points");
    }
    const std::array<NormalRay, 3> rays{normalize(s, r1), normalize(s, r2), normalize(s, r3)};
    std::size_t longest = 0;
    for (const auto& r : rays) longest = std::max(longest, r.head.size() + r.cycle.size());
    int length = static_cast<int>(2 * longest) + 2 * s.relator_length();
    auto prev = left_at(s, rays, length);
    // Accept once two successive cut-offs agree.
    for (;;) {
        length *= 2;
        if (length > (1 << 14)) throw ResourceCap("boundary order did not stabilise");
        auto cur = left_at(s, rays, length);
        if (cur && prev && *cur == *prev) return *cur ? Turn::counterclockwise : Turn::clockwise;
        prev = cur;
    }
}

bool links(const Surface& s, const Lift& l1, const Lift& l2, Engine engine) {
    const PeriodicRay a1 = l1.forward(), a2 = l1.backward(), b1 = l2.forward(), b2 = l2.backward();
    for (const auto* a : {&a1, &a2})
        for (const auto* b : {&b1, &b2})
            if (same_endpoint(s, *a, *b)) throw SharedEndpoint();
    return boundary_order(s, a1, a2, b1, engine) != boundary_order(s, a1, a2, b2, engine);
}

long long multicurve_int(const Surface& s, const Multicurve& m1, const Multicurve& m2, Engine engine) {
    long long total = 0;
    for (const auto& [c1, n1] : m1.components)
        for (const auto& [c2, n2] : m2.components) {
            long long weight = static_cast<long long>(n1) * n2;
            total += weight * (c1 == c2 ? self_int(s, c1, engine) : geom_int(s, c1, c2, engine));
        }
    return total;
}

}  // namespace curvekit
