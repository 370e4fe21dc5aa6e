#include "curvekit/intersection.hpp"

#include <vector>

#include "curvekit/oracle.hpp"

namespace curvekit {

LiftWord::LiftWord(const Surface& s, std::span<const Letter> w) : letters(w.begin(), w.end()) {
    const int n = static_cast<int>(w.size());
    if (n == 0) throw TrivialWord();
    for (int dir = 0; dir < 2; ++dir) {
        run[dir].assign(n, 1);
        // run[dir][k]: letters in the longest relator run starting at k in w^inf.
        std::vector<char> link(n);
        bool all = true;
        for (int k = 0; k < n; ++k) {
            link[k] = s.successor(w[k], dir) == w[(k + 1) % n];
            all = all && link[k];
        }
        if (all) {
            for (auto& r : run[dir]) r = 1 << 20;
            continue;
        }
        int start = 0;
        while (link[(start + n - 1) % n]) ++start;  // a position that begins a run
        for (int step = n - 1; step >= 0; --step) {
            int k = (start + step) % n;
            run[dir][k] = link[k] ? run[dir][(k + 1) % n] + 1 : 1;
        }
    }
}

namespace {

// A maximal common subpath of one lift of u^inf and one lift of v^inf,
// traversed in the same direction. Starts at vertex i of u and j of v and
// runs for len edges; len == 0 is a single shared vertex.
struct Piece {
    int i = 0, j = 0, len = 0;
    bool crossing = false;
    bool isolated = false;
    int next = -1;
    bool has_prev = false;
};

class PassCounter {
public:
    PassCounter(const Surface& s, const LiftWord& u, const LiftWord& v, int bound)
        : s_(s),
          u_(u),
          v_(v),
          n1_(static_cast<int>(u.letters.size())),
          n2_(static_cast<int>(v.letters.size())),
          links_(s.relator_length()),
          bound_(bound) {}

    void run() {
        pieces_.clear();
        start_index_.assign(static_cast<std::size_t>(n1_) * n2_, -1);
        for (int i = 0; i < n1_; ++i) {
            Letter b1 = at_u(i - 1).inv();
            Letter f1 = u_.letters[i];
            for (int j = 0; j < n2_; ++j) {
                Letter b2 = at_v(j - 1).inv();
                if (b1 == b2) continue;
                Letter f2 = v_.letters[j];
                int len = 0;
                if (f1 == f2) {
                    len = 1;
                    while (at_u(i + len) == at_v(j + len)) {
                        if (++len > n1_ + n2_) throw std::logic_error("lifts share an axis");
                    }
                }
                Piece p{i, j, len};
                const int in1 = s_.link_position(b1);
                const int out1 = s_.link_position(f1);
                if (len == 0) {
                    // Sharing an edge in the opposite direction: the other pass owns it.
                    if (f1 == b2 || b1 == f2) continue;
                    p.isolated = true;
                    p.crossing = left_of(s_.link_position(b2), out1, in1) != left_of(s_.link_position(f2), out1, in1);
                } else {
                    int ie = i + len, je = j + len;
                    bool start_left = left_of(s_.link_position(b2), out1, in1);
                    bool end_left = left_of(s_.link_position(at_v(je)), s_.link_position(at_u(ie)),
                                            s_.link_position(at_u(ie - 1).inv()));
                    p.crossing = start_left != end_left;
                }
                start_index_[static_cast<std::size_t>(i) * n2_ + j] = static_cast<int>(pieces_.size());
                pieces_.push_back(p);
            }
        }
        for (auto& p : pieces_) {
            int target = follow(p.i + p.len, p.j + p.len);
            if (target >= 0) {
                p.next = target;
                pieces_[target].has_prev = true;
            }
        }
    }

    // Parity sum over chains, leaving out chains made of one lone shared vertex.
    long long chain_count() const {
        long long total = 0;
        for (std::size_t h = 0; h < pieces_.size(); ++h) {
            const Piece& p = pieces_[h];
            if (p.has_prev || lone(p)) continue;
            bool odd = false;
            for (int k = static_cast<int>(h); k >= 0; k = pieces_[k].next) odd ^= pieces_[k].crossing;
            total += odd;
        }
        return total;
    }

    static bool lone(const Piece& p) { return p.isolated && p.next < 0 && !p.has_prev; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    int piece_at(int i, int j) const { return start_index_[static_cast<std::size_t>(i) * n2_ + j]; }
    bool unresolved() const { return unresolved_; }
    int longest_walk() const { return longest_; }

private:
    Letter at_u(int k) const { return u_.letters[((k % n1_) + n1_) % n1_]; }
    Letter at_v(int k) const { return v_.letters[((k % n2_) + n2_) % n2_]; }

    // Edge at link position e leaves on the left of a path arriving along
    // position `in` and departing along `out`.
    bool left_of(int e, int out, int in) const { return ((e - out + links_) % links_) < ((in - out + links_) % links_); }

    // Walk both lifts forward from a divergence at vertex (i, j) until they
    // meet again; returns the piece starting there, or -1.
    int follow(int i, int j) {
        i %= n1_;
        j %= n2_;
        Letter e1 = u_.letters[i], e2 = v_.letters[j];
        // A geodesic bigon opens with a face whose boundary both paths follow
        // for at least 2g-1 edges, in opposite senses.
        const int need = s_.half() - 1;
        bool ladder = false;
        for (int dir = 0; dir < 2 && !ladder; ++dir)
            ladder = s_.successor(e2.inv(), dir) == e1 && u_.run[dir][i] >= need && v_.run[1 - dir][j] >= need;
        if (!ladder) return -1;
        const int cap = 2 * s_.relator_length();
        Word diff;
        for (int t = 0; t < bound_; ++t) {
            Word next;
            next.reserve(diff.size() + 2);
            next.push_back(at_u(i + t).inv());
            next.insert(next.end(), diff.begin(), diff.end());
            next.push_back(at_v(j + t));
            diff = s_.dehn_reduce(next);
            if (diff.empty()) {
                if (t + 1 > longest_) longest_ = t + 1;
                int k = piece_at((i + t + 1) % n1_, (j + t + 1) % n2_);
                if (k < 0) throw std::logic_error("lifts met again away from a piece start");
                return k;
            }
            if (static_cast<int>(diff.size()) > cap) return -1;
        }
        unresolved_ = true;
        return -1;
    }

    const Surface& s_;
    const LiftWord& u_;
    const LiftWord& v_;
    int n1_, n2_, links_, bound_;
    std::vector<Piece> pieces_;
    std::vector<int> start_index_;
    bool unresolved_ = false;
    int longest_ = 0;
};

}  // namespace

LinkCount count_linked_lifts(const Surface& s, const PreparedCurve& a, const PreparedCurve& b) {
    const LiftWord& u = a.forward;
    const LiftWord& v = b.forward;
    const LiftWord& vinv = b.backward;
    const int n1 = static_cast<int>(u.letters.size()), n2 = static_cast<int>(v.letters.size());
    int bound = 2 * (n1 + n2) + s.relator_length();
    for (;;) {
        PassCounter along(s, u, v, bound), against(s, u, vinv, bound);
        along.run();
        against.run();
        if (along.unresolved() || against.unresolved()) {
            bound *= 2;
            if (bound > (1 << 20)) throw ResourceCap("fellow-travel walk did not terminate");
            continue;
        }
        long long total = along.chain_count() + against.chain_count();
        // A shared vertex with no other contact is seen by both passes; count it once.
        for (const auto& p : along.pieces()) {
            if (!PassCounter::lone(p)) continue;
            int k = against.piece_at(p.i, (n2 - p.j) % n2);
            if (k >= 0 && PassCounter::lone(against.pieces()[k])) total += p.crossing;
        }
        return {total, bound};
    }
}

LinkCount count_linked_lifts(const Surface& s, std::span<const Letter> u, std::span<const Letter> v) {
    return count_linked_lifts(s, PreparedCurve(s, u), PreparedCurve(s, v));
}

namespace {

void require_primitive(const CurveClass& c) {
    if (c.word.empty()) throw TrivialWord();
    if (!c.primitive()) throw NonPrimitive();
}

}  // namespace

int geom_int(const Surface& s, const CurveClass& c1, const CurveClass& c2, Engine engine) {
    require_primitive(c1);
    require_primitive(c2);
    if (c1 == c2) throw EqualClasses();
    if (engine == Engine::numeric) return NumericOracle(s).geom_int(c1.word, c2.word);
    return static_cast<int>(count_linked_lifts(s, c1.word, c2.word).linked);
}

int self_int(const Surface& s, const CurveClass& c, Engine engine) {
    require_primitive(c);
    if (engine == Engine::numeric) return NumericOracle(s).self_int(c.word);
    return static_cast<int>(count_linked_lifts(s, c.word, c.word).linked);
}

}  // namespace curvekit
