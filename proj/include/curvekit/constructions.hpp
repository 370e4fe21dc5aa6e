#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "curvekit/mcg.hpp"
#include "curvekit/refsys.hpp"
#include "curvekit/surface.hpp"

namespace curvekit {

class DegeneratePair : public std::invalid_argument {
public:
    explicit DegeneratePair(const std::string& why, int stage = -1)
        : std::invalid_argument(stage >= 0 ? "stage " + std::to_string(stage) + ": " + why : why), stage_(stage) {}
    int stage() const { return stage_; }

private:
    int stage_;
};

class TrivialResult : public std::invalid_argument {
public:
    TrivialResult() : std::invalid_argument("joined curve is trivial or a proper power") {}
};

class ConstructionFailed : public std::runtime_error {
public:
    explicit ConstructionFailed(const std::string& check) : std::runtime_error("construction check failed: " + check) {}
};

// Two ways of running m times around u at a crossing with v:
//   v u^m v^-1 u^-m   and   v u^m v u^-m.
// `alpha` is whichever meets class(u) two times fewer than `beta`.
struct KeqPair {
    CurveClass alpha, beta;
    Word alpha_word, beta_word;
    // True when alpha is the second (non-commutator) form.
    bool swapped = false;
    int alpha_gamma = 0, beta_gamma = 0;
};

KeqPair build_keq_pair(const Surface& s, const Word& u, const Word& v, int m);

// Iterates the construction against each loop in turn with exponent 2m, the
// alpha and beta sides each threading their own previous output.
KeqPair build_keq_pair_multi(const Surface& s, const std::vector<Word>& gammas, const Word& v, int m);

CurveClass join(const Surface& s, const Word& u, const Word& v, const Word& connector);

struct Cor5Data {
    Word zeta, zeta_twisted;
    std::string twist_plus, twist_minus;
    Word connector1, connector2;
    int adjust_plus = 1, adjust_minus = -1;
};

Cor5Data parse_cor5_data(const Surface& s, std::string_view text);
Cor5Data load_cor5_data(const Surface& s, const std::filesystem::path& file);

struct Cor5Pair {
    CurveClass gamma, gamma_prime;
    TwistWord phi_used;
    int adjust_steps = 0;
    int self_int = 0;
    std::vector<int> vector;
    bool vacuous = false;  // empty reference system
};

// Builds the pair for zeta^k and checks its own postconditions.
Cor5Pair build_cor5_pair(const Surface& s, int k, const ReferenceSystem& r, const Cor5Data& data,
                         const std::vector<TwistAutomorphism>& twists);

}  // namespace curvekit
