#pragma once

// Trivalent ribbon graphs as spines of bordered surfaces, with rational
// edge weights. Closed walks on the graph stand for curves on the surface;
// the arc dual to an edge meets a reduced walk once per traversal.

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace curvekit::hex {

using Rational = boost::rational<long long>;

class InvalidGraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class InvalidWalk : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotReduced : public std::invalid_argument {
public:
    NotReduced() : std::invalid_argument("walk backtracks") {}
};
class Inconsistent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class InvalidCrossing : public std::out_of_range {
public:
    InvalidCrossing() : std::out_of_range("no such crossing") {}
};

// Darts 0..n-1; `sigma` rotates darts around their vertex (every cycle has
// length 3), `iota` swaps the two darts of an edge.
class RibbonGraph {
public:
    RibbonGraph(std::vector<int> sigma, std::vector<int> iota);

    int darts() const { return static_cast<int>(sigma_.size()); }
    int edges() const { return darts() / 2; }
    int vertices() const { return vertex_count_; }
    int sigma(int d) const { return sigma_[d]; }
    int iota(int d) const { return iota_[d]; }
    int vertex_of(int d) const { return vertex_[d]; }
    int edge_of(int d) const { return edge_[d]; }
    // The lower-numbered dart of edge e.
    int edge_dart(int e) const { return edge_darts_[e]; }

    int boundary_components() const;
    int euler_characteristic() const { return vertices() - edges(); }
    int genus() const { return (2 - euler_characteristic() - boundary_components()) / 2; }

    const std::vector<int>& sigma_table() const { return sigma_; }
    const std::vector<int>& iota_table() const { return iota_; }

    // Uniform rotation systems and matchings, rejected until connected.
    static RibbonGraph random(std::mt19937_64& rng, int vertex_count);

private:
    std::vector<int> sigma_, iota_, vertex_, edge_, edge_darts_;
    int vertex_count_ = 0;
};

// Cyclic sequence of darts, each leaving the vertex the previous one enters.
struct GraphWalk {
    std::vector<int> darts;

    friend bool operator==(const GraphWalk&, const GraphWalk&) = default;
};
using MultiWalk = std::vector<GraphWalk>;

void check_walk(const RibbonGraph& g, const GraphWalk& w);
bool is_reduced(const RibbonGraph& g, const GraphWalk& w);
// Removes backtracks, cyclically; may return the empty walk.
GraphWalk cyclic_reduce(const RibbonGraph& g, std::vector<int> darts);
GraphWalk reverse(const RibbonGraph& g, const GraphWalk& w);
// Least rotation over both orientations.
GraphWalk canonical(const RibbonGraph& g, const GraphWalk& w);
bool is_primitive(const GraphWalk& w);

// Times the walk crosses the arc dual to each edge.
std::vector<int> traversals(const RibbonGraph& g, const GraphWalk& w);
std::vector<int> traversals(const RibbonGraph& g, const MultiWalk& m);

struct MeasuredHexDecomp {
    RibbonGraph graph;
    std::vector<Rational> f;  // one weight per edge
};

Rational f_length(const GraphWalk& w, const MeasuredHexDecomp& m);
Rational f_length(const RibbonGraph& g, const GraphWalk& w, const std::vector<Rational>& f);

enum class Shape { theta, dumbbell, loop };
std::string_view shape_name(Shape s);

// The loops whose lengths pin down the weight of one edge:
// theta: e+P1, e+P2, P1+P2; dumbbell: c1, c2, the loop crossing e twice;
// loop edge: the edge itself.
struct EdgeLoops {
    int edge = 0;
    Shape shape = Shape::theta;
    std::vector<GraphWalk> loops;
};

EdgeLoops theta_dumbbell(const RibbonGraph& g, int edge);
std::vector<EdgeLoops> all_edge_loops(const RibbonGraph& g);

// lengths[e] lists the lengths of all_edge_loops(g)[e].loops in order.
std::vector<Rational> recover_f(const RibbonGraph& g, const std::vector<std::vector<Rational>>& lengths);

// A self-crossing: the walk runs along a common stretch of `length` darts
// starting at `first`, and again starting at `second` (reversed if
// `opposite`, in which case `second` is where the reversed copy begins).
struct Crossing {
    int first = 0, second = 0, length = 0;
    bool opposite = false;
};

std::vector<Crossing> self_crossings(const RibbonGraph& g, const GraphWalk& w);
int walk_int(const RibbonGraph& g, const GraphWalk& w1, const GraphWalk& w2);
// Twice the number of double points, matching self_int on closed surfaces.
int walk_self_int(const RibbonGraph& g, const GraphWalk& w);

// The two resolutions of a crossing: the orientation-respecting one splits
// the walk in two, the other reverses one of the two loops.
std::pair<MultiWalk, MultiWalk> smooth(const RibbonGraph& g, const GraphWalk& w, int crossing);

// Reduced primitive closed walks with at most max_length darts, one per
// unoriented cyclic class.
std::vector<GraphWalk> reduced_walks(const RibbonGraph& g, int max_length);

// Smooths repeatedly, keeping the resolution with more arc crossings,
// until every component is simple.
MultiWalk simple_refinement(const RibbonGraph& g, const GraphWalk& w);

// Rank of the traversal-count matrix; equal to edges() exactly when the
// lengths of these walks determine every edge weight.
int traversal_rank(const RibbonGraph& g, const std::vector<GraphWalk>& walks);

// Positive weights with small numerators and denominators.
std::vector<Rational> random_weights(std::mt19937_64& rng, int edges);

// One random graph of the rigidity suite. Graph i is drawn from
// seed_seq{seed, i}, so results do not depend on the job count.
struct SuiteGraph {
    std::uint64_t index = 0;
    int vertices = 0, edges = 0, genus = 0, boundary = 0;
    int theta = 0, dumbbell = 0, loop = 0;
    bool round_trip = false;      // recover_f gives back f1 exactly
    bool separated = false;       // some edge loop tells f1 from f2
    bool simple_separated = false;  // same, using only refined simple walks
    int simple_rank = 0;          // rank of the refined simple walks
    int walks = 0, crossings = 0;
    int smoothing_failures = 0;   // crossings where traversal != max over resolutions
    std::string text;             // graph and f1 in file format

    bool ok() const {
        return round_trip && separated && simple_separated && simple_rank == edges && smoothing_failures == 0;
    }
};

struct SuiteReport {
    std::uint64_t seed = 0;
    int max_walk = 0;
    std::vector<SuiteGraph> graphs;

    int failures() const;
};

SuiteGraph run_suite_graph(std::uint64_t seed, std::uint64_t index, int max_walk);
SuiteReport rigidity_suite(std::uint64_t seed, int graphs, int max_walk = 8, int jobs = 1);

// Text format: darts=<n>, sigma=(..)(..), iota=(a b)(c d), f <edge>=p/q.
struct GraphFile {
    RibbonGraph graph;
    std::optional<std::vector<Rational>> f;
};
GraphFile parse_graph(std::string_view text);
std::string format_graph(const RibbonGraph& g, const std::vector<Rational>* f = nullptr);

std::string format_rational(const Rational& r);

}  // namespace curvekit::hex
