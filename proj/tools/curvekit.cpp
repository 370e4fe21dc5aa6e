// Command-line front end. Every command prints one JSON report (or TSV with
// --tsv). Exit codes: 0 ok, 2 bad input, 3 a check failed, 4 resource cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "curvekit/constructions.hpp"
#include "curvekit/equivalence.hpp"
#include "curvekit/hexagon.hpp"
#include "curvekit/intersection.hpp"
#include "curvekit/mcg.hpp"
#include "curvekit/refsys.hpp"
#include "curvekit/surface.hpp"

#ifndef CURVEKIT_DATA_DIR
#define CURVEKIT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace curvekit;

namespace {

struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int genus = 2;
    int jobs = 1;
    bool tsv = false;
    bool timings = false;
    std::string data;
};

fs::path cache_dir() {
    if (const char* env = std::getenv("CURVEKIT_CACHE"); env && *env) return env;
    return "cache";
}

fs::path data_dir(const Options& o) {
    if (!o.data.empty()) return o.data;
    if (const char* env = std::getenv("CURVEKIT_DATA"); env && *env) return env;
    return CURVEKIT_DATA_DIR;
}

CurveClass curve(const Surface& s, const std::string& text) {
    Word w = s.parse(text);
    if (w.empty() || s.is_trivial(w)) throw TrivialWord();
    return s.canonical_class(w);
}

json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    return {{"curve", format_class(w->curve)},
            {"k", w->k},
            {"with_alpha", w->with_alpha},
            {"with_beta", w->with_beta},
            {"difference", w->with_beta - w->with_alpha}};
}

json verdict_json(const EquivVerdict& v) {
    return {{"agree", v.agree()},
            {"witness", witness_json(v.witness)},
            {"checked", v.checked},
            {"k_range", {v.k_low, v.k_high}},
            {"bound", "census classes of length <= " + std::to_string(v.census_length)}};
}

CurveCensus census_for(const Surface& s, int max_len, const std::string& file, int jobs, json& report) {
    if (!file.empty()) {
        CurveCensus c = load_census(s, file);
        report["census"] = {{"file", file}, {"L", c.max_length()}};
        report["census_length"] = c.max_length();
        return c;
    }
    CurveCensus c = cached_census(s, max_len, cache_dir(), jobs);
    report["census"] = {{"file", (cache_dir() / ("census-g" + std::to_string(s.genus()) + "-L" +
                                                 std::to_string(max_len) + ".txt")).string()},
                        {"L", max_len}};
    report["census_length"] = max_len;
    return c;
}

// Both engines, flagged when they disagree.
json engines(int combinatorial, int numeric) {
    return {{"combinatorial", combinatorial}, {"numeric", numeric}, {"agree", combinatorial == numeric}};
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
        out << prefix << '\t';
        for (std::size_t i = 0; i < j.size(); ++i) out << (i ? "," : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
        out << '\n';
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    } else {
        out << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void emit(const json& report, const Options& o) {
    if (o.tsv) flatten(report, "", std::cout);
    else std::cout << report.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvekit: curves on closed surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--genus", opt.genus, "surface genus")->check(CLI::Range(2, 12));
    app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1, 256));
    app.add_flag("--tsv", opt.tsv, "tab-separated output");
    app.add_flag("--timings", opt.timings, "add wall-clock timings to the report");
    app.add_option("--data", opt.data, "directory with twist, reference and construction data");

    json report;
    std::function<void()> action;

    int max_len = 8;
    std::string census_file;

    auto* census = app.add_subcommand("census", "enumerate and cache classes up to a length");
    census->add_option("--max-len", max_len, "largest word length")->required()->check(CLI::Range(1, 12));
    census->callback([&] {
        action = [&] {
            Surface s(opt.genus);
            fs::path file = cache_dir() / ("census-g" + std::to_string(s.genus()) + "-L" + std::to_string(max_len) + ".txt");
            const bool existed = fs::exists(file);
            CurveCensus c = cached_census(s, max_len, cache_dir(), opt.jobs);
            std::ifstream in(file, std::ios::binary);
            std::stringstream buf;
            buf << in.rdbuf();
            json strata = json::array();
            for (int k : c.strata()) strata.push_back({{"k", k}, {"classes", c.stratum(k).size()}});
            report["census_length"] = max_len;
            report["result"] = {{"classes", c.size()},
                                {"strata", strata},
                                {"file", file.string()},
                                {"from_cache", existed},
                                {"file_sha256", sha256_hex(buf.str())}};
        };
    });

    std::string word1, word2;
    auto* selfint = app.add_subcommand("selfint", "self-intersection number i(c,c)");
    selfint->add_option("word", word1)->required();
    selfint->callback([&] {
        action = [&] {
            Surface s(opt.genus);
            CurveClass c = curve(s, word1);
            const int a = self_int(s, c), b = self_int(s, c, Engine::numeric);
            report["inputs"] = {{"word", word1}};
            report["result"] = {{"class", format_class(c)}, {"selfint", a}, {"k", a / 2}, {"engines", engines(a, b)}};
            if (a != b) throw CheckFailed("engines disagree");
        };
    });

    auto* intersect = app.add_subcommand("intersect", "geometric intersection number of two classes");
    intersect->add_option("first", word1)->required();
    intersect->add_option("second", word2)->required();
    intersect->callback([&] {
        action = [&] {
            Surface s(opt.genus);
            CurveClass c1 = curve(s, word1), c2 = curve(s, word2);
            const int a = geom_int(s, c1, c2), b = geom_int(s, c1, c2, Engine::numeric);
            report["inputs"] = {{"first", word1}, {"second", word2}};
            report["result"] = {{"first", format_class(c1)}, {"second", format_class(c2)}, {"i", a}, {"engines", engines(a, b)}};
            if (a != b) throw CheckFailed("engines disagree");
        };
    });

    std::string gamma_text, eta_text, alpha_text, beta_text;
    int m = 2, k = 1;
    auto* pair = app.add_subcommand("pair", "build a pair that agrees on k'-curves but not on gamma");
    pair->add_option("--gamma", gamma_text)->required();
    pair->add_option("--eta", eta_text)->required();
    pair->add_option("-m", m)->required()->check(CLI::Range(1, 64));
    pair->callback([&] {
        action = [&] {
            Surface s(opt.genus);
            Word g = s.parse(gamma_text), e = s.parse(eta_text);
            KeqPair p = build_keq_pair(s, g, e, m);
            const CurveClass gamma = s.canonical_class(g);
            const int gk = self_int(s, gamma);
            const int na = intersection_with(s, p.alpha, gamma), nb = intersection_with(s, p.beta, gamma);
            const int oa = p.alpha == gamma ? na : geom_int(s, p.alpha, gamma, Engine::numeric);
            const int ob = p.beta == gamma ? nb : geom_int(s, p.beta, gamma, Engine::numeric);
            report["inputs"] = {{"gamma", gamma_text}, {"eta", eta_text}, {"m", m}};
            report["result"] = {{"gamma", format_class(gamma)},
                                {"gamma_selfint", gk},
                                {"k", gk / 2},
                                {"alpha", format_class(p.alpha)},
                                {"beta", format_class(p.beta)},
                                {"alpha_form", p.swapped ? "v u^m v u^-m" : "v u^m v^-1 u^-m"},
                                {"i_alpha_gamma", engines(na, oa)},
                                {"i_beta_gamma", engines(nb, ob)},
                                {"difference", nb - na}};
            if (na != oa || nb != ob) throw CheckFailed("engines disagree");
            if (nb - na != 2) throw CheckFailed("difference is not 2");
        };
    });

    auto* equiv = app.add_subcommand("equiv", "test k-equivalence against the census");
    equiv->add_option("--alpha", alpha_text)->required();
    equiv->add_option("--beta", beta_text)->required();
    equiv->add_option("-k", k)->required()->check(CLI::NonNegativeNumber);
    equiv->add_option("--census", census_file, "census file instead of the cache");
    equiv->add_option("--max-len", max_len, "census length when using the cache")->check(CLI::Range(1, 12));
    equiv->callback([&] {
        action = [&] {
            Surface s(opt.genus);
            CurveClass a = curve(s, alpha_text), b = curve(s, beta_text);
            report["inputs"] = {{"alpha", alpha_text}, {"beta", beta_text}, {"k", k}};
            CurveCensus c = census_for(s, max_len, census_file, opt.jobs, report);
            report["result"] = verdict_json(test_k_equiv(s, a, b, k, c, opt.jobs));
        };
    });

    std::optional<int> cap;
    auto* distinguish = app.add_subcommand("distinguish", "search strata upward for a distinguishing curve");
    distinguish->add_option("--alpha", alpha_text)->required();
    distinguish->add_option("--beta", beta_text)->required();
    distinguish->add_option("--cap", cap, "largest k to search")->check(CLI::NonNegativeNumber);
    distinguish->add_option("--census", census_file, "census file instead of the cache");
    distinguish->add_option("--max-len", max_len, "census length when using the cache")->check(CLI::Range(1, 12));
    distinguish->callback([&] {
        action = [&] {
            Surface s(opt.genus);
            CurveClass a = curve(s, alpha_text), b = curve(s, beta_text);
            report["inputs"] = {{"alpha", alpha_text}, {"beta", beta_text}};
            if (cap) report["inputs"]["cap"] = *cap;
            CurveCensus c = census_for(s, max_len, census_file, opt.jobs, report);
            DistinguisherReport d = find_distinguisher(s, a, b, c, cap, opt.jobs);
            json r = verdict_json(d.verdict);
            r["found"] = !d.bounded;
            r["cap"] = d.cap;
            r["default_cap"] = d.default_cap;
            if (d.verdict.witness) r["within_default_cap"] = d.verdict.witness->k <= d.default_cap;
            report["result"] = r;
        };
    });

    int stratum = 0;
    std::string refsys_file;
    auto* refsys = app.add_subcommand("refsys", "reference-system experiments");
    auto* scan = refsys->add_subcommand("scan", "look for two classes in a stratum with the same vector");
    refsys->require_subcommand(1);
    scan->add_option("--stratum", stratum)->required()->check(CLI::NonNegativeNumber);
    scan->add_option("--max-len", max_len, "census length")->check(CLI::Range(1, 12));
    scan->add_option("--census", census_file, "census file instead of the cache");
    scan->add_option("--refsys", refsys_file, "reference system file");
    scan->callback([&] {
        action = [&] {
            Surface s(opt.genus);
            auto twists = load_twists(s, data_dir(opt) / ("genus" + std::to_string(s.genus()) + "_twists.txt"));
            fs::path rf = refsys_file.empty() ? data_dir(opt) / ("genus" + std::to_string(s.genus()) + "_refsys.txt")
                                              : fs::path(refsys_file);
            ReferenceSystem r = load_refsys(s, rf, twists);
            report["inputs"] = {{"stratum", stratum}, {"refsys", rf.string()}};
            CurveCensus c = census_for(s, max_len, census_file, opt.jobs, report);
            auto members = c.stratum(stratum);
            auto collisions = injectivity_scan(s, members, r, opt.jobs);
            json curves = json::array(), pairs = json::array();
            for (const auto& rc : r.curves)
                curves.push_back({{"name", rc.name}, {"curve", format_class(rc.curve)},
                                  {"provenance", provenance_name(rc.provenance)}});
            for (std::size_t i = 0; i < collisions.size() && i < 50; ++i)
                pairs.push_back({format_class(collisions[i].first), format_class(collisions[i].second)});
            report["result"] = {{"stratum_size", members.size()},
                                {"reference_curves", curves},
                                {"missing_twisted_duals", r.missing_twisted_duals},
                                {"collisions", collisions.size()},
                                {"collision_pairs", pairs},
                                {"bound", "census classes of length <= " + std::to_string(c.max_length())}};
        };
    });

    auto* cor5 = app.add_subcommand("cor5", "two k-curves with equal reference vectors");
    cor5->add_option("-k", k)->required()->check(CLI::PositiveNumber);
    cor5->add_option("--refsys", refsys_file, "reference system file");
    cor5->callback([&] {
        action = [&] {
            Surface s(opt.genus);
            const std::string g = "genus" + std::to_string(s.genus());
            auto twists = load_twists(s, data_dir(opt) / (g + "_twists.txt"));
            fs::path rf = refsys_file.empty() ? data_dir(opt) / (g + "_refsys.txt") : fs::path(refsys_file);
            ReferenceSystem r = load_refsys(s, rf, twists);
            Cor5Data d = load_cor5_data(s, data_dir(opt) / (g + "_cor5.txt"));
            Cor5Pair p = build_cor5_pair(s, k, r, d, twists);
            json used = json::array();
            for (const auto& [t, power] : p.phi_used) used.push_back({{"twist", t.name}, {"power", power}});
            report["inputs"] = {{"k", k}, {"refsys", rf.string()}};
            report["result"] = {{"gamma", format_class(p.gamma)},
                                {"gamma_prime", format_class(p.gamma_prime)},
                                {"selfint", p.self_int},
                                {"phi", p.vector},
                                {"twists_applied", used},
                                {"adjust_steps", p.adjust_steps},
                                {"vacuous", p.vacuous},
                                {"verified", true}};
        };
    });

    int graphs = 100, max_walk = 8;
    std::uint64_t seed = 1;
    std::string graph_file;
    auto* hexagon = app.add_subcommand("hexagon", "measured hexagon decompositions");
    hexagon->require_subcommand(1);
    auto* rigidity = hexagon->add_subcommand("rigidity", "random-graph rigidity and smoothing suite");
    rigidity->add_option("--graphs", graphs)->check(CLI::Range(1, 100000));
    rigidity->add_option("--seed", seed);
    rigidity->add_option("--max-walk", max_walk, "longest walk for the smoothing check")->check(CLI::Range(1, 12));
    rigidity->callback([&] {
        action = [&] {
            auto r = hex::rigidity_suite(seed, graphs, max_walk, opt.jobs);
            long long walks = 0, crossings = 0, smoothing = 0;
            int theta = 0, dumbbell = 0, loop = 0, round_trip = 0, separated = 0, simple_sep = 0, full_rank = 0;
            json failed = json::array();
            for (const auto& g : r.graphs) {
                walks += g.walks;
                crossings += g.crossings;
                smoothing += g.smoothing_failures;
                theta += g.theta;
                dumbbell += g.dumbbell;
                loop += g.loop;
                round_trip += g.round_trip;
                separated += g.separated;
                simple_sep += g.simple_separated;
                full_rank += g.simple_rank == g.edges;
                if (!g.ok()) failed.push_back({{"index", g.index}, {"graph", g.text}});
            }
            report["seed"] = seed;
            report["inputs"] = {{"graphs", graphs}, {"seed", seed}, {"max_walk", max_walk}};
            report["result"] = {{"graphs", graphs},
                                {"round_trip", round_trip},
                                {"separated", separated},
                                {"simple_separated", simple_sep},
                                {"simple_full_rank", full_rank},
                                {"edge_shapes", {{"theta", theta}, {"dumbbell", dumbbell}, {"loop", loop}}},
                                {"walks", walks},
                                {"crossings", crossings},
                                {"smoothing_failures", smoothing},
                                {"failed_graphs", failed}};
            if (r.failures()) throw CheckFailed(std::to_string(r.failures()) + " graphs failed");
        };
    });
    auto* loops = hexagon->add_subcommand("loops", "edge loops, their lengths and the recovered weights");
    loops->add_option("graph", graph_file, "ribbon graph file with weights")->required()->check(CLI::ExistingFile);
    loops->callback([&] {
        action = [&] {
            std::ifstream in(graph_file);
            std::stringstream buf;
            buf << in.rdbuf();
            hex::GraphFile gf = hex::parse_graph(buf.str());
            if (!gf.f) throw ParseError("graph file has no weights");
            const auto& g = gf.graph;
            json edges = json::array();
            std::vector<std::vector<hex::Rational>> lengths;
            for (const auto& el : hex::all_edge_loops(g)) {
                json ls = json::array();
                std::vector<hex::Rational> row;
                for (const auto& w : el.loops) {
                    row.push_back(hex::f_length(g, w, *gf.f));
                    ls.push_back({{"darts", w.darts}, {"length", hex::format_rational(row.back())}});
                }
                lengths.push_back(row);
                edges.push_back({{"edge", el.edge}, {"shape", hex::shape_name(el.shape)}, {"loops", ls}});
            }
            auto f = hex::recover_f(g, lengths);
            json fj = json::array();
            for (const auto& x : f) fj.push_back(hex::format_rational(x));
            report["inputs"] = {{"graph", graph_file}};
            report["result"] = {{"darts", g.darts()},
                                {"genus", g.genus()},
                                {"boundary", g.boundary_components()},
                                {"edges", edges},
                                {"recovered_f", fj},
                                {"round_trip", f == *gf.f}};
            if (f != *gf.f) throw CheckFailed("recovered weights differ");
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // Subcommand path, e.g. "refsys scan".
    std::string command;
    for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
        sub = sub->get_subcommands().front();
        command += (command.empty() ? "" : " ") + sub->get_name();
    }
    report["command"] = command;
    report["genus"] = opt.genus;

    auto fail = [&](int code, std::string_view kind, const std::exception& e) {
        report["error"] = {{"kind", kind}, {"message", e.what()}};
        emit(report, opt);
        std::cerr << "curvekit: " << e.what() << '\n';
        return code;
    };
    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const ParseError& e) {
        return fail(2, "invalid input", e);
    } catch (const TrivialWord& e) {
        return fail(2, "invalid input", e);
    } catch (const std::invalid_argument& e) {
        return fail(2, "invalid input", e);
    } catch (const CheckFailed& e) {
        return fail(3, "verification failed", e);
    } catch (const ConstructionFailed& e) {
        return fail(3, "verification failed", e);
    } catch (const CacheError& e) {
        return fail(3, "verification failed", e);
    } catch (const hex::Inconsistent& e) {
        return fail(3, "verification failed", e);
    } catch (const ResourceCap& e) {
        return fail(4, "resource cap", e);
    } catch (const PrecisionExhausted& e) {
        return fail(4, "resource cap", e);
    } catch (const std::exception& e) {
        return fail(1, "internal error", e);
    }
    if (opt.timings)
        report["timings"] = {{"total_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()}};
    emit(report, opt);
    return 0;
}
