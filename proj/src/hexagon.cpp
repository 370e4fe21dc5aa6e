#include "curvekit/hexagon.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "curvekit/parallel.hpp"
#include "curvekit/word.hpp"

namespace curvekit::hex {

RibbonGraph::RibbonGraph(std::vector<int> sigma, std::vector<int> iota) : sigma_(std::move(sigma)), iota_(std::move(iota)) {
    const int n = static_cast<int>(sigma_.size());
    if (n == 0) throw InvalidGraph("graph has no darts");
    if (static_cast<int>(iota_.size()) != n) throw InvalidGraph("sigma and iota have different sizes");
    auto is_perm = [n](const std::vector<int>& p) {
        std::vector<char> seen(n, 0);
        for (int x : p) {
            if (x < 0 || x >= n || seen[x]) return false;
            seen[x] = 1;
        }
        return true;
    };
    if (!is_perm(sigma_)) throw InvalidGraph("sigma is not a permutation");
    if (!is_perm(iota_)) throw InvalidGraph("iota is not a permutation");
    for (int d = 0; d < n; ++d)
        if (iota_[d] == d || iota_[iota_[d]] != d) throw InvalidGraph("iota is not a fixed-point-free involution");

    vertex_.assign(n, -1);
    for (int d = 0; d < n; ++d) {
        if (vertex_[d] >= 0) continue;
        int len = 0;
        for (int x = d; vertex_[x] < 0; x = sigma_[x], ++len) vertex_[x] = vertex_count_;
        if (len != 3) throw InvalidGraph("vertex of degree " + std::to_string(len) + "; the graph must be trivalent");
        ++vertex_count_;
    }
    edge_.assign(n, -1);
    for (int d = 0; d < n; ++d) {
        if (edge_[d] >= 0) continue;
        edge_[d] = edge_[iota_[d]] = static_cast<int>(edge_darts_.size());
        edge_darts_.push_back(d);
    }

    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int x : {sigma_[d], iota_[d]})
            if (!seen[x]) {
                seen[x] = 1;
                ++reached;
                stack.push_back(x);
            }
    }
    if (reached != n) throw InvalidGraph("graph is disconnected");
}

int RibbonGraph::boundary_components() const {
    std::vector<char> seen(darts(), 0);
    int faces = 0;
    for (int d = 0; d < darts(); ++d) {
        if (seen[d]) continue;
        ++faces;
        for (int x = d; !seen[x]; x = sigma_[iota_[x]]) seen[x] = 1;
    }
    return faces;
}

RibbonGraph RibbonGraph::random(std::mt19937_64& rng, int vertex_count) {
    if (vertex_count < 2 || vertex_count % 2) throw InvalidGraph("a trivalent graph needs an even number of vertices");
    const int n = 3 * vertex_count;
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        std::vector<int> sigma(n), iota(n), order(n);
        for (int v = 0; v < vertex_count; ++v) {
            int a = 3 * v, b = a + 1, c = a + 2;
            if (coin(rng)) std::swap(b, c);
            sigma[a] = b;
            sigma[b] = c;
            sigma[c] = a;
        }
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int i = 0; i < n; i += 2) {
            iota[order[i]] = order[i + 1];
            iota[order[i + 1]] = order[i];
        }
        try {
            return RibbonGraph(std::move(sigma), std::move(iota));
        } catch (const InvalidGraph&) {
            // disconnected; draw again
        }
    }
}

void check_walk(const RibbonGraph& g, const GraphWalk& w) {
    const auto& d = w.darts;
    if (d.empty()) throw InvalidWalk("empty walk");
    for (int x : d)
        if (x < 0 || x >= g.darts()) throw InvalidWalk("dart " + std::to_string(x) + " out of range");
    for (std::size_t k = 0; k < d.size(); ++k) {
        int next = d[(k + 1) % d.size()];
        if (g.vertex_of(next) != g.vertex_of(g.iota(d[k]))) throw InvalidWalk("walk is not closed or not connected");
    }
}

bool is_reduced(const RibbonGraph& g, const GraphWalk& w) {
    check_walk(g, w);
    const auto& d = w.darts;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[(k + 1) % d.size()] == g.iota(d[k])) return false;
    return true;
}

GraphWalk cyclic_reduce(const RibbonGraph& g, std::vector<int> darts) {
    std::vector<int> st;
    for (int d : darts) {
        if (!st.empty() && st.back() == g.iota(d)) st.pop_back();
        else st.push_back(d);
    }
    std::size_t lo = 0, hi = st.size();
    while (hi - lo >= 2 && st[hi - 1] == g.iota(st[lo])) {
        ++lo;
        --hi;
    }
    return {std::vector<int>(st.begin() + lo, st.begin() + hi)};
}

GraphWalk reverse(const RibbonGraph& g, const GraphWalk& w) {
    GraphWalk r;
    r.darts.reserve(w.darts.size());
    for (auto it = w.darts.rbegin(); it != w.darts.rend(); ++it) r.darts.push_back(g.iota(*it));
    return r;
}

namespace {

std::vector<int> least_rotation(const std::vector<int>& d) {
    std::vector<int> best = d, cur = d;
    for (std::size_t k = 1; k < d.size(); ++k) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

int at(const std::vector<int>& d, long long i) {
    const long long n = static_cast<long long>(d.size());
    return d[((i % n) + n) % n];
}

}  // namespace

GraphWalk canonical(const RibbonGraph& g, const GraphWalk& w) {
    auto a = least_rotation(w.darts), b = least_rotation(reverse(g, w).darts);
    return {std::min(a, b)};
}

bool is_primitive(const GraphWalk& w) {
    const auto& d = w.darts;
    const std::size_t n = d.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + p < n && periodic; ++i) periodic = d[i] == d[i + p];
        if (periodic) return false;
    }
    return n > 0;
}

std::vector<int> traversals(const RibbonGraph& g, const GraphWalk& w) {
    std::vector<int> out(g.edges(), 0);
    for (int d : w.darts) ++out[g.edge_of(d)];
    return out;
}

std::vector<int> traversals(const RibbonGraph& g, const MultiWalk& m) {
    std::vector<int> out(g.edges(), 0);
    for (const auto& w : m)
        for (int d : w.darts) ++out[g.edge_of(d)];
    return out;
}

Rational f_length(const RibbonGraph& g, const GraphWalk& w, const std::vector<Rational>& f) {
    if (static_cast<int>(f.size()) != g.edges()) throw std::invalid_argument("need one weight per edge");
    if (!is_reduced(g, w)) throw NotReduced();
    Rational total = 0;
    for (int d : w.darts) total += f[g.edge_of(d)];
    return total;
}

Rational f_length(const GraphWalk& w, const MeasuredHexDecomp& m) { return f_length(m.graph, w, m.f); }

std::string_view shape_name(Shape s) {
    switch (s) {
        case Shape::theta: return "theta";
        case Shape::dumbbell: return "dumbbell";
        case Shape::loop: return "loop";
    }
    return "?";
}

namespace {

// Shortest non-backtracking dart path that starts with `from`, ends with
// `to`, and never uses edge `avoid`. Neighbours are tried in dart order, so
// ties go to the lexicographically least path.
std::optional<std::vector<int>> path(const RibbonGraph& g, int from, int to, int avoid) {
    if (g.edge_of(from) == avoid || g.edge_of(to) == avoid) return std::nullopt;
    std::vector<int> parent(g.darts(), -2);
    std::deque<int> queue{from};
    parent[from] = -1;
    while (!queue.empty()) {
        int d = queue.front();
        queue.pop_front();
        if (d == to) {
            std::vector<int> out;
            for (int x = d; x >= 0; x = parent[x]) out.push_back(x);
            std::reverse(out.begin(), out.end());
            return out;
        }
        int back = g.iota(d);
        int nb[2] = {g.sigma(back), g.sigma(g.sigma(back))};
        if (nb[1] < nb[0]) std::swap(nb[0], nb[1]);
        for (int x : nb) {
            if (g.edge_of(x) == avoid || parent[x] != -2) continue;
            parent[x] = d;
            queue.push_back(x);
        }
    }
    return std::nullopt;
}

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

EdgeLoops theta_dumbbell(const RibbonGraph& g, int edge) {
    if (edge < 0 || edge >= g.edges()) throw std::out_of_range("no such edge");
    const int d = g.edge_dart(edge), d2 = g.iota(d);
    EdgeLoops out;
    out.edge = edge;
    if (g.vertex_of(d) == g.vertex_of(d2)) {
        out.shape = Shape::loop;
        out.loops.push_back({{d}});
        return out;
    }
    // Half-edges next to the edge at each end; a path "arriving via h" ends
    // with the dart iota(h).
    const int a1 = g.sigma(d), a2 = g.sigma(a1), a3 = g.sigma(d2), a4 = g.sigma(a3);

    std::optional<std::pair<std::vector<int>, std::vector<int>>> theta;
    for (auto [x, y] : {std::pair{a3, a4}, std::pair{a4, a3}}) {
        auto p1 = path(g, a1, g.iota(x), edge), p2 = path(g, a2, g.iota(y), edge);
        if (!p1 || !p2) continue;
        if (!theta || p1->size() + p2->size() < theta->first.size() + theta->second.size()) theta.emplace(*p1, *p2);
    }
    if (theta) {
        const auto& [p1, p2] = *theta;
        out.shape = Shape::theta;
        out.loops.push_back({cat(p1, {d2})});
        out.loops.push_back({cat(p2, {d2})});
        out.loops.push_back({cat(p1, reverse(g, {p2}).darts)});
        return out;
    }
    auto c1 = path(g, a1, g.iota(a2), edge), c2 = path(g, a3, g.iota(a4), edge);
    if (!c1 || !c2) throw InvalidGraph("edge " + std::to_string(edge) + " has no theta or dumbbell neighbourhood");
    out.shape = Shape::dumbbell;
    out.loops.push_back({*c1});
    out.loops.push_back({*c2});
    out.loops.push_back({cat(cat(cat(*c1, {d}), *c2), {d2})});
    return out;
}

std::vector<EdgeLoops> all_edge_loops(const RibbonGraph& g) {
    std::vector<EdgeLoops> out;
    for (int e = 0; e < g.edges(); ++e) out.push_back(theta_dumbbell(g, e));
    return out;
}

std::vector<Rational> recover_f(const RibbonGraph& g, const std::vector<std::vector<Rational>>& lengths) {
    if (static_cast<int>(lengths.size()) != g.edges()) throw Inconsistent("need loop lengths for every edge");
    const auto loops = all_edge_loops(g);
    std::vector<Rational> f(g.edges());
    for (int e = 0; e < g.edges(); ++e) {
        const auto& L = lengths[e];
        if (L.size() != loops[e].loops.size()) throw Inconsistent("wrong number of loop lengths for edge " + std::to_string(e));
        switch (loops[e].shape) {
            case Shape::loop: f[e] = L[0]; break;
            case Shape::theta: f[e] = (L[0] + L[1] - L[2]) / 2; break;
            case Shape::dumbbell: f[e] = (L[2] - L[0] - L[1]) / 2; break;
        }
    }
    // Every given length has to come back out of the recovered weights.
    for (int e = 0; e < g.edges(); ++e)
        for (std::size_t k = 0; k < loops[e].loops.size(); ++k)
            if (f_length(g, loops[e].loops[k], f) != lengths[e][k])
                throw Inconsistent("loop lengths around edge " + std::to_string(e) + " do not fit any weighting");
    return f;
}

namespace {

// Maximal common stretches of lifts of two walks traversed in the same
// direction, reported as (start in a, start in b, length). Identical axes
// are skipped.
struct Piece {
    int i, j, len;
    bool crossing;
};

std::vector<Piece> pieces(const RibbonGraph& g, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<Piece> out;
    const long long cap = static_cast<long long>(a.size()) * static_cast<long long>(b.size()) + 1;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        for (int j = 0; j < static_cast<int>(b.size()); ++j) {
            if (a[i] != b[j] || at(a, i - 1) == at(b, j - 1)) continue;
            long long len = 1;
            while (len <= cap && at(a, i + len) == at(b, j + len)) ++len;
            if (len > cap) continue;
            // Which side of the common stretch a lies on, at each end.
            const int s = a[i];
            const bool left_start = g.iota(at(a, i - 1)) == g.sigma(s);
            const int s_end = g.iota(at(a, i + len - 1));
            const bool left_end = at(a, i + len) == g.sigma(g.sigma(s_end));
            out.push_back({i, j, static_cast<int>(len), left_start != left_end});
        }
    return out;
}

void require_reduced(const RibbonGraph& g, const GraphWalk& w) {
    if (!is_reduced(g, w)) throw NotReduced();
}

}  // namespace

std::vector<Crossing> self_crossings(const RibbonGraph& g, const GraphWalk& w) {
    require_reduced(g, w);
    const auto& d = w.darts;
    const int n = static_cast<int>(d.size());
    std::vector<Crossing> out;
    for (const auto& p : pieces(g, d, d))
        if (p.crossing && p.i < p.j) out.push_back({p.i, p.j, p.len, false});
    const auto rev = reverse(g, w).darts;
    for (const auto& p : pieces(g, d, rev)) {
        if (!p.crossing) continue;
        const int q = ((n - p.j - p.len) % n + n) % n;
        if (p.i < q) out.push_back({p.i, q, p.len, true});
    }
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
        return std::tie(x.first, x.second, x.opposite) < std::tie(y.first, y.second, y.opposite);
    });
    return out;
}

int walk_int(const RibbonGraph& g, const GraphWalk& w1, const GraphWalk& w2) {
    require_reduced(g, w1);
    require_reduced(g, w2);
    int count = 0;
    for (const auto& p : pieces(g, w1.darts, w2.darts)) count += p.crossing;
    for (const auto& p : pieces(g, w1.darts, reverse(g, w2).darts)) count += p.crossing;
    return count;
}

int walk_self_int(const RibbonGraph& g, const GraphWalk& w) {
    return 2 * static_cast<int>(self_crossings(g, w).size());
}

std::pair<MultiWalk, MultiWalk> smooth(const RibbonGraph& g, const GraphWalk& w, int crossing) {
    const auto crossings = self_crossings(g, w);
    if (crossing < 0 || crossing >= static_cast<int>(crossings.size())) throw InvalidCrossing();
    const Crossing& c = crossings[crossing];
    const int n = static_cast<int>(w.darts.size());
    std::vector<int> rot(n);
    for (int k = 0; k < n; ++k) rot[k] = at(w.darts, c.first + k);
    // Cut where the second passage leaves the crossing point, taken at the
    // start of the common stretch.
    const int r = c.second - c.first + (c.opposite ? c.length : 0);
    std::vector<int> first(rot.begin(), rot.begin() + r), second(rot.begin() + r, rot.end());

    MultiWalk split, joined;
    for (auto part : {first, second}) {
        GraphWalk x = cyclic_reduce(g, part);
        if (!x.darts.empty()) split.push_back(std::move(x));
    }
    GraphWalk j = cyclic_reduce(g, cat(first, reverse(g, {second}).darts));
    if (!j.darts.empty()) joined.push_back(std::move(j));
    return {split, joined};
}

std::vector<GraphWalk> reduced_walks(const RibbonGraph& g, int max_length) {
    std::vector<GraphWalk> out;
    std::vector<int> cur;
    auto dfs = [&](auto&& self) -> void {
        const int last = cur.back();
        const int back = g.iota(last);
        if (g.vertex_of(cur.front()) == g.vertex_of(back) && cur.front() != back) {
            GraphWalk w{cur};
            if (is_primitive(w) && canonical(g, w) == w) out.push_back(w);
        }
        if (static_cast<int>(cur.size()) == max_length) return;
        for (int x : {g.sigma(back), g.sigma(g.sigma(back))}) {
            if (x < cur.front()) continue;  // the least dart leads in canonical form
            cur.push_back(x);
            self(self);
            cur.pop_back();
        }
    };
    for (int d = 0; d < g.darts(); ++d) {
        cur = {d};
        dfs(dfs);
    }
    std::sort(out.begin(), out.end(), [](const GraphWalk& a, const GraphWalk& b) {
        return std::pair(a.darts.size(), a.darts) < std::pair(b.darts.size(), b.darts);
    });
    return out;
}

MultiWalk simple_refinement(const RibbonGraph& g, const GraphWalk& w) {
    MultiWalk done, todo{w};
    int steps = 0;
    while (!todo.empty()) {
        GraphWalk cur = std::move(todo.back());
        todo.pop_back();
        if (self_crossings(g, cur).empty()) {
            done.push_back(std::move(cur));
            continue;
        }
        if (++steps > 100000) throw std::runtime_error("smoothing did not terminate");
        auto [split, joined] = smooth(g, cur, 0);
        auto total = [&](const MultiWalk& m) {
            auto t = traversals(g, m);
            return std::accumulate(t.begin(), t.end(), 0);
        };
        const MultiWalk& keep = total(joined) > total(split) ? joined : split;
        for (const auto& x : keep) todo.push_back(x);
    }
    return done;
}

int traversal_rank(const RibbonGraph& g, const std::vector<GraphWalk>& walks) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& w : walks) {
        auto t = traversals(g, w);
        rows.emplace_back(t.begin(), t.end());
    }
    int rank = 0;
    for (int col = 0; col < g.edges() && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != Rational(0)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == Rational(0)) continue;
            Rational k = rows[r][col] / rows[rank][col];
            for (int c = col; c < g.edges(); ++c) rows[r][c] -= k * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<Rational> random_weights(std::mt19937_64& rng, int edges) {
    std::uniform_int_distribution<long long> num(1, 30), den(1, 8);
    std::vector<Rational> f;
    for (int e = 0; e < edges; ++e) f.emplace_back(num(rng), den(rng));
    return f;
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

Rational parse_rational(const std::string& s) {
    try {
        std::size_t used = 0;
        auto slash = s.find('/');
        long long p = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash)) throw ParseError("");
        long long q = 1;
        if (slash != std::string::npos) {
            q = std::stoll(s.substr(slash + 1), &used);
            if (used != s.size() - slash - 1) throw ParseError("");
        }
        if (q == 0) throw ParseError("");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

// "(0 1 2)(3 4 5)" -> cycles
std::vector<std::vector<int>> parse_cycles(const std::string& s) {
    std::vector<std::vector<int>> out;
    std::size_t pos = 0;
    while ((pos = s.find_first_not_of(" \t", pos)) != std::string::npos) {
        if (s[pos] != '(') throw ParseError("expected '(' in cycle list");
        auto close = s.find(')', pos);
        if (close == std::string::npos) throw ParseError("unclosed cycle");
        std::istringstream in(s.substr(pos + 1, close - pos - 1));
        std::vector<int> cyc;
        for (std::string tok; in >> tok;) {
            try {
                cyc.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("bad dart '" + tok + "'");
            }
        }
        out.push_back(std::move(cyc));
        pos = close + 1;
    }
    return out;
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
    std::istringstream lines{std::string(text)};
    int n = -1;
    std::vector<std::vector<int>> sigma_cycles, iota_pairs;
    bool have_sigma = false, have_iota = false;
    std::map<int, Rational> weights;
    for (std::string raw; std::getline(lines, raw);) {
        raw = raw.substr(0, raw.find('#'));
        auto b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        raw = raw.substr(b, raw.find_last_not_of(" \t\r") - b + 1);
        if (raw.rfind("darts=", 0) == 0) {
            try {
                n = std::stoi(raw.substr(6));
            } catch (const std::exception&) {
                throw ParseError("bad dart count");
            }
        } else if (raw.rfind("sigma=", 0) == 0) {
            sigma_cycles = parse_cycles(raw.substr(6));
            have_sigma = true;
        } else if (raw.rfind("iota=", 0) == 0) {
            iota_pairs = parse_cycles(raw.substr(5));
            have_iota = true;
        } else if (raw.rfind("f ", 0) == 0) {
            auto eq = raw.find('=');
            if (eq == std::string::npos) throw ParseError("expected f <edge>=<weight>");
            int e;
            try {
                e = std::stoi(raw.substr(2, eq - 2));
            } catch (const std::exception&) {
                throw ParseError("bad edge index");
            }
            if (weights.count(e)) throw ParseError("edge " + std::to_string(e) + " weighted twice");
            weights[e] = parse_rational(raw.substr(eq + 1));
        } else {
            throw ParseError("unrecognised line: " + raw);
        }
    }
    if (n <= 0 || !have_sigma || !have_iota) throw ParseError("graph needs darts=, sigma= and iota=");
    std::vector<int> sigma(n, -1), iota(n, -1);
    auto check = [n](int d) {
        if (d < 0 || d >= n) throw InvalidGraph("dart " + std::to_string(d) + " out of range");
    };
    for (const auto& c : sigma_cycles)
        for (std::size_t k = 0; k < c.size(); ++k) {
            check(c[k]);
            if (sigma[c[k]] >= 0) throw InvalidGraph("dart repeated in sigma");
            sigma[c[k]] = c[(k + 1) % c.size()];
        }
    for (const auto& p : iota_pairs) {
        if (p.size() != 2) throw InvalidGraph("iota cycles must be pairs");
        check(p[0]);
        check(p[1]);
        if (iota[p[0]] >= 0 || iota[p[1]] >= 0) throw InvalidGraph("dart repeated in iota");
        iota[p[0]] = p[1];
        iota[p[1]] = p[0];
    }
    if (std::count(sigma.begin(), sigma.end(), -1)) throw InvalidGraph("sigma misses a dart");
    if (std::count(iota.begin(), iota.end(), -1)) throw InvalidGraph("iota misses a dart");
    GraphFile out{RibbonGraph(std::move(sigma), std::move(iota)), std::nullopt};
    if (!weights.empty()) {
        std::vector<Rational> f(out.graph.edges());
        for (int e = 0; e < out.graph.edges(); ++e) {
            auto it = weights.find(e);
            if (it == weights.end()) throw ParseError("no weight for edge " + std::to_string(e));
            f[e] = it->second;
        }
        if (static_cast<int>(weights.size()) != out.graph.edges()) throw ParseError("weight for a nonexistent edge");
        out.f = std::move(f);
    }
    return out;
}

std::string format_graph(const RibbonGraph& g, const std::vector<Rational>* f) {
    std::ostringstream out;
    out << "darts=" << g.darts() << "\nsigma=";
    std::vector<char> seen(g.darts(), 0);
    for (int d = 0; d < g.darts(); ++d) {
        if (seen[d]) continue;
        out << '(';
        for (int x = d; !seen[x]; x = g.sigma(x)) {
            seen[x] = 1;
            out << (x == d ? "" : " ") << x;
        }
        out << ')';
    }
    out << "\niota=";
    for (int e = 0; e < g.edges(); ++e) out << '(' << g.edge_dart(e) << ' ' << g.iota(g.edge_dart(e)) << ')';
    out << '\n';
    if (f)
        for (int e = 0; e < g.edges(); ++e) out << "f " << e << '=' << format_rational((*f)[e]) << '\n';
    return out.str();
}

}  // namespace curvekit::hex

namespace curvekit::hex {

int SuiteReport::failures() const {
    return static_cast<int>(std::count_if(graphs.begin(), graphs.end(), [](const SuiteGraph& g) { return !g.ok(); }));
}

SuiteGraph run_suite_graph(std::uint64_t seed, std::uint64_t index, int max_walk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    // 3 or 6 edges: every connected trivalent graph with at most 8.
    const int vertices = std::uniform_int_distribution<int>(1, 2)(rng) * 2;
    const RibbonGraph g = RibbonGraph::random(rng, vertices);
    const auto f1 = random_weights(rng, g.edges());
    auto f2 = random_weights(rng, g.edges());
    if (f2 == f1) f2[0] += 1;

    SuiteGraph out;
    out.index = index;
    out.vertices = g.vertices();
    out.edges = g.edges();
    out.genus = g.genus();
    out.boundary = g.boundary_components();
    out.text = format_graph(g, &f1);

    const auto loops = all_edge_loops(g);
    std::vector<std::vector<Rational>> lengths;
    std::vector<GraphWalk> simple;
    for (const auto& el : loops) {
        ++(el.shape == Shape::theta ? out.theta : el.shape == Shape::dumbbell ? out.dumbbell : out.loop);
        std::vector<Rational> row;
        for (const auto& w : el.loops) {
            row.push_back(f_length(g, w, f1));
            if (f_length(g, w, f2) != row.back()) out.separated = true;
            for (auto& c : simple_refinement(g, w)) simple.push_back(std::move(c));
        }
        lengths.push_back(std::move(row));
    }
    try {
        out.round_trip = recover_f(g, lengths) == f1;
    } catch (const Inconsistent&) {
        out.round_trip = false;
    }
    out.simple_rank = traversal_rank(g, simple);
    for (const auto& w : simple)
        if (walk_self_int(g, w) == 0 && f_length(g, w, f1) != f_length(g, w, f2)) out.simple_separated = true;

    for (const auto& w : reduced_walks(g, max_walk)) {
        ++out.walks;
        const auto t = traversals(g, w);
        const int n = static_cast<int>(self_crossings(g, w).size());
        for (int c = 0; c < n; ++c) {
            ++out.crossings;
            auto [r1, r2] = smooth(g, w, c);
            const auto t1 = traversals(g, r1), t2 = traversals(g, r2);
            for (int e = 0; e < g.edges(); ++e)
                if (t[e] != std::max(t1[e], t2[e])) {
                    ++out.smoothing_failures;
                    break;
                }
        }
    }
    return out;
}

SuiteReport rigidity_suite(std::uint64_t seed, int graphs, int max_walk, int jobs) {
    SuiteReport r;
    r.seed = seed;
    r.max_walk = max_walk;
    r.graphs.resize(graphs);
    parallel_for(static_cast<std::size_t>(graphs), jobs,
                 [&](std::size_t i) { r.graphs[i] = run_suite_graph(seed, i, max_walk); });
    return r;
}

}  // namespace curvekit::hex
