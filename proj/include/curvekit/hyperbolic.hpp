#pragma once

// Hyperboloid-model geometry for the genus-g surface group acting on the
// hyperbolic plane. Points are unit timelike vectors (t, x, y), geodesic
// lines are spacelike normals, ideal points are null vectors with t = 1.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "curvekit/surface.hpp"

namespace curvekit::hyp {

template <class Real>
struct Vec3 {
    Real t{}, x{}, y{};
};

template <class Real>
struct Mat3 {
    std::array<Real, 9> a{};

    static Mat3 identity() {
        Mat3 m;
        m.a[0] = 1;
        m.a[4] = 1;
        m.a[8] = 1;
        return m;
    }
    Real& operator()(int r, int c) { return a[3 * r + c]; }
    const Real& operator()(int r, int c) const { return a[3 * r + c]; }
};

template <class Real>
Mat3<Real> operator*(const Mat3<Real>& p, const Mat3<Real>& q) {
    Mat3<Real> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = p(i, 0) * q(0, j) + p(i, 1) * q(1, j) + p(i, 2) * q(2, j);
    return r;
}

template <class Real>
Vec3<Real> operator*(const Mat3<Real>& m, const Vec3<Real>& v) {
    return {m(0, 0) * v.t + m(0, 1) * v.x + m(0, 2) * v.y, m(1, 0) * v.t + m(1, 1) * v.x + m(1, 2) * v.y,
            m(2, 0) * v.t + m(2, 1) * v.x + m(2, 2) * v.y};
}

// Minkowski form of signature (+, -, -).
template <class Real>
Real mink(const Vec3<Real>& u, const Vec3<Real>& v) {
    return u.t * v.t - u.x * v.x - u.y * v.y;
}

// Vector orthogonal to u and v in the Minkowski form.
template <class Real>
Vec3<Real> mcross(const Vec3<Real>& u, const Vec3<Real>& v) {
    return {u.x * v.y - u.y * v.x, -(u.y * v.t - u.t * v.y), -(u.t * v.x - u.x * v.t)};
}

template <class Real>
Vec3<Real> normalize_t(const Vec3<Real>& v) {
    return {Real(1), v.x / v.t, v.y / v.t};
}

template <class Real>
Mat3<Real> rotation(const Real& theta) {
    using std::cos;
    using std::sin;
    Mat3<Real> m = Mat3<Real>::identity();
    m(1, 1) = cos(theta);
    m(1, 2) = -sin(theta);
    m(2, 1) = sin(theta);
    m(2, 2) = cos(theta);
    return m;
}

template <class Real>
Mat3<Real> boost_x(const Real& d) {
    using std::cosh;
    using std::sinh;
    Mat3<Real> m = Mat3<Real>::identity();
    m(0, 0) = cosh(d);
    m(0, 1) = sinh(d);
    m(1, 0) = sinh(d);
    m(1, 1) = cosh(d);
    return m;
}

// Inverse of a Lorentz matrix: J M^T J.
template <class Real>
Mat3<Real> lorentz_inverse(const Mat3<Real>& m) {
    Mat3<Real> r;
    const int sgn[3] = {1, -1, -1};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = m(j, i) * Real(sgn[i] * sgn[j]);
    return r;
}

template <class Real>
Vec3<Real> point_at(const Real& r, const Real& theta) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {cosh(r), sinh(r) * cos(theta), sinh(r) * sin(theta)};
}

template <class Real>
Real pi_value() {
    using std::acos;
    return acos(Real(-1));
}

// The surface group realised by side pairings of a regular 4g-gon, with a
// fundamental polygon whose vertices are the orbit of a point q near one
// corner. Moving q off the corner keeps the side pairings but puts the
// polygon boundary in general position with respect to closed geodesics.
template <class Real>
class FuchsianModel {
public:
    FuchsianModel(const Surface& s, double shift_x, double shift_y) : surface_(&s) {
        using std::acosh;
        const int n = s.relator_length();
        const Real pi = pi_value<Real>();
        const Real step = Real(2) * pi / Real(n);
        const Real half_angle = pi / Real(n);
        using std::cos;
        using std::sin;
        const Real cot = cos(half_angle) / sin(half_angle);
        const Real d = acosh(cot);
        const Real rv = acosh(cot * cot);
        gens_.resize(n);
        gens_inv_.resize(n);
        const auto& link = s.vertex_link();
        for (int k = 0; k < n; ++k) {
            Letter x = link[k];
            int kinv = s.link_position(x.inv());
            Mat3<Real> m = rotation<Real>(step * Real(k)) * boost_x<Real>(Real(2) * d) *
                           rotation<Real>(pi - step * Real(kinv));
            gens_[x.slot()] = m;
            gens_inv_[x.slot()] = lorentz_inverse(m);
        }
        std::vector<Vec3<Real>> corners(n);
        for (int k = 0; k < n; ++k) corners[k] = point_at<Real>(rv, step * (Real(k) - Real(1) / Real(2)));
        // Group elements carrying corner 0 to corner k.
        std::vector<Word> carry = corner_words(corners);
        // The shift is a tangent vector at corner 0, in hyperbolic length.
        using std::atan2;
        using std::hypot;
        const Real to_corner = -step / Real(2);
        Vec3<Real> offset = point_at<Real>(Real(hypot(shift_x, shift_y)), Real(atan2(shift_y, shift_x)));
        Vec3<Real> q = rotation<Real>(to_corner) * boost_x<Real>(rv) * rotation<Real>(-to_corner) * offset;
        verts_.resize(n);
        for (int k = 0; k < n; ++k) verts_[k] = normalize_t(element(carry[k]) * q);
        sides_.resize(n);
        for (int k = 0; k < n; ++k) {
            Vec3<Real> m = mcross(verts_[k], verts_[(k + 1) % n]);
            if (mink(Vec3<Real>{Real(1), Real(0), Real(0)}, m) < 0) m = {-m.t, -m.x, -m.y};
            sides_[k] = m;
        }
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                if (j != k && j != (k + 1) % n && mink(verts_[j], sides_[k]) <= 0)
                    throw std::logic_error("perturbed fundamental polygon is not convex");
    }

    const Surface& surface() const { return *surface_; }
    const Mat3<Real>& gen(Letter x) const { return gens_[x.slot()]; }
    const Mat3<Real>& gen_inv(Letter x) const { return gens_inv_[x.slot()]; }
    const std::vector<Vec3<Real>>& vertices() const { return verts_; }
    // Side k runs from vertex k to vertex k+1; interior satisfies <p, side> > 0.
    const std::vector<Vec3<Real>>& sides() const { return sides_; }

    Mat3<Real> element(std::span<const Letter> w) const {
        Mat3<Real> m = Mat3<Real>::identity();
        for (Letter x : w) m = m * gen(x);
        return m;
    }

private:
    std::vector<Word> corner_words(const std::vector<Vec3<Real>>& corners) const {
        const int n = static_cast<int>(corners.size());
        std::vector<Word> found(n);
        std::vector<bool> have(n, false);
        have[0] = true;
        int missing = n - 1;
        std::vector<std::pair<Word, Mat3<Real>>> layer{{Word{}, Mat3<Real>::identity()}};
        auto letters = surface_->all_letters();
        for (int depth = 1; depth <= n && missing > 0; ++depth) {
            std::vector<std::pair<Word, Mat3<Real>>> next;
            for (auto& [w, m] : layer) {
                for (Letter x : letters) {
                    if (!w.empty() && w.back() == x.inv()) continue;
                    Word w2 = w;
                    w2.push_back(x);
                    Mat3<Real> m2 = m * gen(x);
                    Vec3<Real> img = m2 * corners[0];
                    for (int k = 1; k < n; ++k) {
                        if (have[k]) continue;
                        Real dist = mink(img, corners[k]);
                        using std::abs;
                        if (abs(dist - Real(1)) < Real(1e-12)) {
                            have[k] = true;
                            found[k] = w2;
                            --missing;
                        }
                    }
                    next.emplace_back(std::move(w2), m2);
                }
            }
            layer = std::move(next);
        }
        if (missing > 0) throw std::logic_error("polygon corners are not a single orbit");
        return found;
    }

    const Surface* surface_;
    std::vector<Mat3<Real>> gens_, gens_inv_;
    std::vector<Vec3<Real>> verts_, sides_;
};

}  // namespace curvekit::hyp
