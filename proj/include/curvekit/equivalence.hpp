#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvekit/surface.hpp"

namespace curvekit {

class EqualInputs : public std::invalid_argument {
public:
    EqualInputs() : std::invalid_argument("the two classes are equal") {}
};

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CensusEntry {
    CurveClass curve;
    int self_int = 0;
};

// All primitive unoriented classes up to a canonical length, sorted by
// (length, letters), with their self-intersection numbers.
class CurveCensus {
public:
    CurveCensus() = default;
    CurveCensus(int genus, int max_length, std::vector<CensusEntry> entries);

    int genus() const { return genus_; }
    int max_length() const { return max_length_; }
    const std::vector<CensusEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    // Classes with self-intersection 2k, in census order.
    std::vector<CurveClass> stratum(int k) const;
    std::vector<int> strata() const;
    std::optional<int> self_int_of(const CurveClass& c) const;

private:
    int genus_ = 0;
    int max_length_ = 0;
    std::vector<CensusEntry> entries_;
    std::map<int, std::vector<std::size_t>> index_;
};

CurveCensus enumerate(const Surface& s, int max_length, int jobs = 1);

// Cache text: header, one `word<TAB>self_int` line per class, checksum line.
std::string serialize(const CurveCensus& census);
// Verifies the checksum; with `recheck` recomputes every self-intersection.
CurveCensus parse_census(const Surface& s, std::string_view text, bool recheck = false);
void save_census(const CurveCensus& census, const std::filesystem::path& file);
CurveCensus load_census(const Surface& s, const std::filesystem::path& file, bool recheck = false);
// Loads <dir>/census-g<g>-L<L>.txt or enumerates and writes it.
CurveCensus cached_census(const Surface& s, int max_length, const std::filesystem::path& dir, int jobs = 1);

std::string sha256_hex(std::string_view data);

struct Witness {
    CurveClass curve;
    int k = 0;
    int with_alpha = 0;
    int with_beta = 0;
};

struct EquivVerdict {
    // Empty witness: the classes agree on every census class checked.
    std::optional<Witness> witness;
    long long checked = 0;
    int census_length = 0;
    int k_low = 0, k_high = 0;

    bool agree() const { return !witness; }
};

// Intersection with c, where c may equal x (then the self-intersection).
int intersection_with(const Surface& s, const CurveClass& x, const CurveClass& c);

EquivVerdict test_k_equiv(const Surface& s, const CurveClass& alpha, const CurveClass& beta, int k,
                          const CurveCensus& census, int jobs = 1);

struct DistinguisherReport {
    EquivVerdict verdict;
    int cap = 0;          // largest stratum searched
    int default_cap = 0;  // 17 * max k of the inputs
    bool bounded = true;  // true when nothing was found: no conclusion
};

DistinguisherReport find_distinguisher(const Surface& s, const CurveClass& alpha, const CurveClass& beta,
                                       const CurveCensus& census, std::optional<int> cap = std::nullopt,
                                       int jobs = 1);

}  // namespace curvekit
