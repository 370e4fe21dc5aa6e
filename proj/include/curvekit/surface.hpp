#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvekit/word.hpp"

namespace curvekit {

class TrivialWord : public std::domain_error {
public:
    TrivialWord() : std::domain_error("word is trivial in the surface group") {}
};

class ResourceCap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unoriented free homotopy class of a closed curve. `word` is the canonical
// cyclic word of the primitive root; `exponent` > 1 marks a proper power.
struct CurveClass {
    Word word;
    int exponent = 1;

    bool primitive() const { return exponent == 1; }
    std::size_t length() const { return word.size(); }

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
    friend std::strong_ordering operator<=>(const CurveClass& x, const CurveClass& y) {
        if (x.word.size() != y.word.size()) return x.word.size() <=> y.word.size();
        if (auto c = x.word <=> y.word; c != 0) return c;
        return x.exponent <=> y.exponent;
    }
};

std::string format_class(const CurveClass& c);

// Closed orientable surface of genus g with the one-relator presentation
// prod [a_i, b_i]. All operations are pure.
class Surface {
public:
    explicit Surface(int genus);

    int genus() const { return genus_; }
    int rank() const { return 2 * genus_; }
    int relator_length() const { return 4 * genus_; }
    int half() const { return 2 * genus_; }
    const Word& relator() const { return relator_; }
    // Cyclic order of the 4g signed letters around a vertex of the Cayley
    // graph, read counterclockwise.
    const std::vector<Letter>& vertex_link() const { return link_; }
    int link_position(Letter x) const { return link_pos_[x.slot()]; }
    // Letter following x in the cyclic relator (dir 0) or its inverse (dir 1).
    Letter successor(Letter x, int dir) const { return succ_[dir][x.slot()]; }
    std::vector<Letter> all_letters() const;

    Word parse(std::string_view text) const { return parse_word(text, genus_); }

    Word free_reduce(std::span<const Letter> w) const;
    Word dehn_reduce(std::span<const Letter> w) const;
    // Dehn reduction followed by a search through half-relator exchanges
    // for further shortenings; returns a shortest word for the element.
    Word geodesic(std::span<const Letter> w) const;
    bool is_trivial(std::span<const Letter> w) const { return dehn_reduce(w).empty(); }
    bool equal(std::span<const Letter> a, std::span<const Letter> b) const;

    // Cyclic reductions. Results are cyclic words stored linearly.
    Word cyclic_free_reduce(std::span<const Letter> w) const;
    Word cyclic_dehn_reduce(std::span<const Letter> w) const;
    // All shortest cyclic words conjugate to w, each stored as its least
    // rotation. Empty set iff w is trivial.
    std::set<Word> cyclic_geodesics(std::span<const Letter> w) const;

    bool conjugate_eq(std::span<const Letter> w1, std::span<const Letter> w2) const;
    CurveClass canonical_class(std::span<const Letter> w) const;
    std::pair<Word, int> primitive_root(std::span<const Letter> cyclic) const;

    // Sum of exponents per generator (abelianization).
    std::vector<int> homology(std::span<const Letter> w) const;
    // Algebraic intersection of homology classes with the symplectic form
    // a_i . b_i = 1.
    int algebraic_intersection(std::span<const Letter> x, std::span<const Letter> y) const;

    // True if the cyclic word has a run of more than half a relator, or a
    // cancelling pair across the seam.
    bool cyclically_reducible(std::span<const Letter> c) const;
    // Maximal cyclic runs along relator direction dir: (start, letters).
    std::vector<std::pair<int, int>> cyclic_runs(std::span<const Letter> c, int dir) const;
    // Complement of a run: the word v with run*v a rotation of the relator.
    Word run_complement(std::span<const Letter> run, int dir) const;
    // If c runs once around a ring of relator faces, each face contributing
    // 2g-1 letters, the word along the other side of the ring.
    std::optional<Word> ring_partner(std::span<const Letter> c, int dir) const;

    std::size_t closure_cap = 200000;

private:
    int genus_;
    Word relator_;
    std::vector<Letter> link_;
    std::vector<int> link_pos_;
    std::array<std::vector<Letter>, 2> succ_;
};

Word least_rotation(std::span<const Letter> c);
// Smallest period p with c = (c[0..p))^(n/p) as cyclic word.
int cyclic_period(std::span<const Letter> c);

struct Multicurve {
    std::vector<std::pair<CurveClass, int>> components;

    static Multicurve from(std::vector<std::pair<CurveClass, int>> parts);
};

}  // namespace curvekit
