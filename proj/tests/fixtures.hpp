#pragma once

#include <filesystem>

#include "curvekit/equivalence.hpp"
#include "curvekit/mcg.hpp"
#include "curvekit/refsys.hpp"
#include "curvekit/surface.hpp"

#ifndef CURVEKIT_DATA_DIR
#define CURVEKIT_DATA_DIR "data"
#endif

namespace fixtures {

inline const curvekit::Surface& genus2() {
    static const curvekit::Surface s(2);
    return s;
}

inline curvekit::CurveClass cls(const char* text) { return genus2().canonical_class(genus2().parse(text)); }

inline std::filesystem::path data(const char* name) { return std::filesystem::path(CURVEKIT_DATA_DIR) / name; }

inline const std::vector<curvekit::TwistAutomorphism>& twists() {
    static const auto t = curvekit::load_twists(genus2(), data("genus2_twists.txt"));
    return t;
}

inline const curvekit::ReferenceSystem& refsys() {
    static const auto r = curvekit::load_refsys(genus2(), data("genus2_refsys.txt"), twists());
    return r;
}

// Small census shared by the unit tests.
inline const curvekit::CurveCensus& census6() {
    static const auto c = curvekit::enumerate(genus2(), 6);
    return c;
}

}  // namespace fixtures
