#include "curvekit/oracle.hpp"

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <mutex>

#include "curvekit/hyperbolic.hpp"
#include "curvekit/intersection.hpp"

namespace curvekit {

using namespace hyp;

namespace {

using Mp40 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>>;
using Mp100 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>>;
using Mp250 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<250>>;

// Base point offset from corner 0; any small generic vector will do.
constexpr double shift_x = 0.0137;
constexpr double shift_y = -0.0213;

template <class Real>
Real tier_tolerance();
template <>
long double tier_tolerance<long double>() { return 1e-10L; }
template <>
Mp40 tier_tolerance<Mp40>() { return Mp40("1e-25"); }
template <>
Mp100 tier_tolerance<Mp100>() { return Mp100("1e-60"); }
template <>
Mp250 tier_tolerance<Mp250>() { return Mp250("1e-150"); }

template <class Real>
Real abs_of(const Real& x) {
    return x < 0 ? Real(-x) : x;
}

template <class Real>
Vec3<Real> attracting_point(Mat3<Real> m) {
    Vec3<Real> v = normalize_t(m * Vec3<Real>{Real(1), Real(0), Real(0)});
    for (int it = 0; it < 40; ++it) {
        m = m * m;
        Real scale = m(0, 0);
        for (auto& x : m.a) x /= scale;
        Vec3<Real> nv = normalize_t(m * Vec3<Real>{Real(1), Real(0), Real(0)});
        Real change = abs_of(Real(nv.x - v.x)) + abs_of(Real(nv.y - v.y));
        v = nv;
        if (change == 0) break;
    }
    return v;
}

template <class Real>
struct Trace {
    std::vector<std::pair<Real, Real>> chords;
    Word cutting;
    Real drift{};
    bool ok = false;
};

template <class Real>
Real circle_gap(const Real& a, const Real& b, int n) {
    Real d = abs_of(Real(a - b));
    Real wrap = Real(n) - d;
    return d < wrap ? d : wrap;
}

template <class Real>
Trace<Real> trace_geodesic(const Surface& s, const FuchsianModel<Real>& model, std::span<const Letter> w) {
    Trace<Real> out;
    const int n = s.relator_length();
    const Real tol = tier_tolerance<Real>();
    Mat3<Real> m = model.element(w);
    Vec3<Real> plus = attracting_point(m);
    Vec3<Real> minus = attracting_point(lorentz_inverse(m));
    auto move = [&](Letter x) {
        const Mat3<Real>& g = model.gen_inv(x);
        plus = normalize_t(g * plus);
        minus = normalize_t(g * minus);
    };
    // Pull a point of the axis into the polygon.
    for (int it = 0;; ++it) {
        if (it > 10000) return out;
        Vec3<Real> p{plus.t + minus.t, plus.x + minus.x, plus.y + minus.y};
        int worst = -1;
        Real worst_val = 0;
        for (int k = 0; k < n; ++k) {
            const auto& side = model.sides()[k];
            using std::sqrt;
            Real val = mink(p, side) / sqrt(Real(-mink(side, side))) / p.t;
            if (val < worst_val) {
                worst_val = val;
                worst = k;
            }
        }
        if (worst < 0) break;
        move(s.vertex_link()[worst]);
    }
    const auto& verts = model.vertices();
    Real first_entry{};
    const int max_steps = 64 * static_cast<int>(w.size()) + 64;
    for (int step = 0; step < max_steps; ++step) {
        Vec3<Real> normal = mcross(minus, plus);
        using std::sqrt;
        Real scale = sqrt(Real(-mink(normal, normal)));
        std::vector<Real> val(n);
        for (int k = 0; k < n; ++k) {
            val[k] = mink(verts[k], normal) / scale;
            if (abs_of(val[k]) < tol) return out;  // passes too close to a vertex
        }
        int found = 0;
        int side_of[2] = {0, 0};
        Real frac_of[2];
        Real ratio_of[2];
        for (int k = 0; k < n && found < 3; ++k) {
            const Real& a = val[k];
            const Real& b = val[(k + 1) % n];
            if ((a < 0) == (b < 0)) continue;
            if (found == 2) {
                ++found;
                break;
            }
            Real f = a / (a - b);
            const auto& v0 = verts[k];
            const auto& v1 = verts[(k + 1) % n];
            Vec3<Real> pt{Real(1), v0.x + f * (v1.x - v0.x), v0.y + f * (v1.y - v0.y)};
            side_of[found] = k;
            frac_of[found] = f;
            ratio_of[found] = mink(pt, minus) / mink(pt, plus);
            ++found;
        }
        if (found != 2) return out;
        int exit = ratio_of[1] > ratio_of[0] ? 1 : 0;
        int entry = 1 - exit;
        Real in = Real(side_of[entry]) + frac_of[entry];
        Real outc = Real(side_of[exit]) + frac_of[exit];
        if (step == 0) {
            first_entry = in;
        } else {
            Real gap = circle_gap(in, first_entry, n);
            if (gap < Real(1e-6) && s.conjugate_eq(out.cutting, w)) {
                out.drift = gap;
                out.ok = true;
                return out;
            }
        }
        out.chords.emplace_back(in, outc);
        Letter x = s.vertex_link()[side_of[exit]];
        out.cutting.push_back(x);
        move(x);
    }
    return out;
}

// Interleaved pairs; nullopt if some endpoints cannot be separated.
template <class Real>
std::optional<long long> count_interleaved(const std::vector<std::pair<Real, Real>>& a,
                                           const std::vector<std::pair<Real, Real>>& b, bool same, int n,
                                           const Real& tol) {
    long long total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Real lo = a[i].first, hi = a[i].second;
        if (hi < lo) std::swap(lo, hi);
        for (std::size_t j = same ? i + 1 : 0; j < b.size(); ++j) {
            const Real& p = b[j].first;
            const Real& q = b[j].second;
            if (circle_gap(p, lo, n) < tol || circle_gap(p, hi, n) < tol || circle_gap(q, lo, n) < tol ||
                circle_gap(q, hi, n) < tol)
                return std::nullopt;
            bool pin = lo < p && p < hi;
            bool qin = lo < q && q < hi;
            total += pin != qin;
        }
    }
    return total;
}

}  // namespace

struct NumericOracle::Models {
    const Surface* surface;
    FuchsianModel<long double> base;
    std::once_flag f40, f100, f250;
    std::unique_ptr<FuchsianModel<Mp40>> m40;
    std::unique_ptr<FuchsianModel<Mp100>> m100;
    std::unique_ptr<FuchsianModel<Mp250>> m250;

    explicit Models(const Surface& s) : surface(&s), base(s, shift_x, shift_y) {}

    const FuchsianModel<Mp40>& get40() {
        std::call_once(f40, [&] { m40 = std::make_unique<FuchsianModel<Mp40>>(*surface, shift_x, shift_y); });
        return *m40;
    }
    const FuchsianModel<Mp100>& get100() {
        std::call_once(f100, [&] { m100 = std::make_unique<FuchsianModel<Mp100>>(*surface, shift_x, shift_y); });
        return *m100;
    }
    const FuchsianModel<Mp250>& get250() {
        std::call_once(f250, [&] { m250 = std::make_unique<FuchsianModel<Mp250>>(*surface, shift_x, shift_y); });
        return *m250;
    }
};

NumericOracle::NumericOracle(const Surface& s) : surface_(&s), models_(std::make_unique<Models>(s)) {}
NumericOracle::~NumericOracle() = default;
NumericOracle::NumericOracle(NumericOracle&&) noexcept = default;

namespace {

template <class Real>
ChordSet to_chord_set(const Trace<Real>& t, int tier, int sides) {
    ChordSet c;
    c.sides = sides;
    for (const auto& [a, b] : t.chords) c.chords.emplace_back(static_cast<long double>(a), static_cast<long double>(b));
    c.cutting = t.cutting;
    c.drift = static_cast<long double>(t.drift);
    c.tier = tier;
    return c;
}

template <class Real>
std::optional<long long> exact_tier_count(const Surface& s, const FuchsianModel<Real>& model,
                                          std::span<const Letter> w1, std::span<const Letter> w2, bool same) {
    Trace<Real> t1 = trace_geodesic(s, model, w1);
    if (!t1.ok) return std::nullopt;
    Trace<Real> t2 = same ? t1 : trace_geodesic(s, model, w2);
    if (!t2.ok) return std::nullopt;
    Real tol = tier_tolerance<Real>();
    Real drift = t1.drift > t2.drift ? t1.drift : t2.drift;
    if (Real(drift * 1000) > tol) tol = drift * 1000;
    return count_interleaved(t1.chords, t2.chords, same, s.relator_length(), tol);
}

}  // namespace

ChordSet NumericOracle::chords(std::span<const Letter> w, int tier) const {
    const Surface& s = *surface_;
    switch (tier) {
        case 0: {
            auto t = trace_geodesic(s, models_->base, w);
            if (!t.ok) throw PrecisionExhausted("trace did not close at tier 0");
            return to_chord_set(t, 0, s.relator_length());
        }
        case 1: {
            auto t = trace_geodesic(s, models_->get40(), w);
            if (!t.ok) throw PrecisionExhausted("trace did not close at tier 1");
            return to_chord_set(t, 1, s.relator_length());
        }
        case 2: {
            auto t = trace_geodesic(s, models_->get100(), w);
            if (!t.ok) throw PrecisionExhausted("trace did not close at tier 2");
            return to_chord_set(t, 2, s.relator_length());
        }
        default: {
            auto t = trace_geodesic(s, models_->get250(), w);
            if (!t.ok) throw PrecisionExhausted("trace did not close at tier 3");
            return to_chord_set(t, 3, s.relator_length());
        }
    }
}

ChordSet NumericOracle::trace(std::span<const Letter> w) const {
    for (int tier = 0; tier < max_tier; ++tier) {
        try {
            return chords(w, tier);
        } catch (const PrecisionExhausted&) {
        }
    }
    return chords(w, max_tier);
}

std::optional<long long> NumericOracle::crossings(const ChordSet& a, const ChordSet& b) {
    long double tol = std::max(1e-10L, 1000 * std::max(a.drift, b.drift));
    return count_interleaved(a.chords, b.chords, false, a.sides, tol);
}

std::optional<long long> NumericOracle::self_crossings(const ChordSet& a) {
    long double tol = std::max(1e-10L, 1000 * a.drift);
    return count_interleaved(a.chords, a.chords, true, a.sides, tol);
}

std::optional<long long> NumericOracle::escalate(std::span<const Letter> w1, std::span<const Letter> w2,
                                                 bool same) const {
    const Surface& s = *surface_;
    for (int tier = 1; tier <= max_tier; ++tier) {
        std::optional<long long> r;
        if (tier == 1) r = exact_tier_count(s, models_->get40(), w1, w2, same);
        if (tier == 2) r = exact_tier_count(s, models_->get100(), w1, w2, same);
        if (tier == 3) r = exact_tier_count(s, models_->get250(), w1, w2, same);
        if (r) return r;
    }
    return std::nullopt;
}

int NumericOracle::geom_int(std::span<const Letter> w1, std::span<const Letter> w2) const {
    auto r = exact_tier_count(*surface_, models_->base, w1, w2, false);
    if (!r) r = escalate(w1, w2, false);
    if (!r) throw PrecisionExhausted("cannot separate chord endpoints");
    return static_cast<int>(*r);
}

int NumericOracle::self_int(std::span<const Letter> w) const {
    auto r = exact_tier_count(*surface_, models_->base, w, w, true);
    if (!r) r = escalate(w, w, true);
    if (!r) throw PrecisionExhausted("cannot separate chord endpoints");
    return static_cast<int>(2 * *r);
}

int NumericOracle::geom_int(const ChordSet& a, std::span<const Letter> w1, const ChordSet& b,
                            std::span<const Letter> w2) const {
    if (auto r = crossings(a, b)) return static_cast<int>(*r);
    auto r = escalate(w1, w2, false);
    if (!r) throw PrecisionExhausted("cannot separate chord endpoints");
    return static_cast<int>(*r);
}

int NumericOracle::self_int(const ChordSet& a, std::span<const Letter> w) const {
    if (auto r = self_crossings(a)) return static_cast<int>(2 * *r);
    auto r = escalate(w, w, true);
    if (!r) throw PrecisionExhausted("cannot separate chord endpoints");
    return static_cast<int>(2 * *r);
}

namespace {

template <class Real>
int orientation_at(const FuchsianModel<Real>& model, std::span<const Letter> p1, std::span<const Letter> q1,
                   std::span<const Letter> p2, std::span<const Letter> q2, std::span<const Letter> p3,
                   std::span<const Letter> q3) {
    auto endpoint = [&](std::span<const Letter> p, std::span<const Letter> q) {
        return normalize_t(model.element(p) * attracting_point(model.element(q)));
    };
    Vec3<Real> a = endpoint(p1, q1), b = endpoint(p2, q2), c = endpoint(p3, q3);
    Real det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    Real tol = tier_tolerance<Real>();
    if (abs_of(det) < tol) return 0;
    return det > 0 ? 1 : -1;
}

}  // namespace

int NumericOracle::orientation(std::span<const Letter> p1, std::span<const Letter> q1, std::span<const Letter> p2,
                               std::span<const Letter> q2, std::span<const Letter> p3, std::span<const Letter> q3,
                               int tier) const {
    switch (tier) {
        case 0: return orientation_at(models_->base, p1, q1, p2, q2, p3, q3);
        case 1: return orientation_at(models_->get40(), p1, q1, p2, q2, p3, q3);
        case 2: return orientation_at(models_->get100(), p1, q1, p2, q2, p3, q3);
        default: return orientation_at(models_->get250(), p1, q1, p2, q2, p3, q3);
    }
}

}  // namespace curvekit
