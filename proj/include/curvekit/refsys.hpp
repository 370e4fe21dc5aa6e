#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvekit/mcg.hpp"
#include "curvekit/surface.hpp"

namespace curvekit {

class NotSimple : public std::invalid_argument {
public:
    explicit NotSimple(const std::string& name) : std::invalid_argument("reference curve " + name + " is not simple") {}
};

class TwistMismatch : public std::invalid_argument {
public:
    explicit TwistMismatch(const std::string& name)
        : std::invalid_argument("reference curve " + name + " is not the stated twist image") {}
};

enum class Provenance { pants, dual, twisted_dual };

std::string_view provenance_name(Provenance p);

struct ReferenceCurve {
    std::string name;
    CurveClass curve;
    Provenance provenance = Provenance::pants;
};

struct ReferenceSystem {
    std::vector<ReferenceCurve> curves;
    // Set when the config has no twisted duals; injectivity may then fail.
    bool missing_twisted_duals = false;

    std::vector<CurveClass> classes() const;
};

// Line format: `<tag> <name>=<word>` with tag pants, dual-almost-embedded or
// twisted-dual; twisted duals also carry `from=<dual> twist=<twist>`.
ReferenceSystem parse_refsys(const Surface& s, std::string_view text, const std::vector<TwistAutomorphism>& twists);
ReferenceSystem load_refsys(const Surface& s, const std::filesystem::path& file,
                            const std::vector<TwistAutomorphism>& twists);

// Intersection vector against the reference curves (0 where c is one of them).
std::vector<int> phi(const Surface& s, const CurveClass& c, const ReferenceSystem& r);

// All unordered pairs in the list with equal vectors, in list order.
std::vector<std::pair<CurveClass, CurveClass>> injectivity_scan(const Surface& s, const std::vector<CurveClass>& stratum,
                                                                const ReferenceSystem& r, int jobs = 1);

}  // namespace curvekit
