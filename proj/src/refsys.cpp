#include "curvekit/refsys.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "curvekit/intersection.hpp"
#include "curvekit/parallel.hpp"

namespace curvekit {

std::string_view provenance_name(Provenance p) {
    switch (p) {
        case Provenance::pants: return "pants";
        case Provenance::dual: return "dual-almost-embedded";
        case Provenance::twisted_dual: return "twisted-dual";
    }
    return "?";
}

std::vector<CurveClass> ReferenceSystem::classes() const {
    std::vector<CurveClass> out;
    for (const auto& c : curves) out.push_back(c.curve);
    return out;
}

namespace {

std::map<std::string, std::string> fields(std::istringstream& in) {
    std::map<std::string, std::string> out;
    for (std::string f; in >> f;) {
        auto eq = f.find('=');
        if (eq == std::string::npos) throw ParseError("refsys: expected key=value, got " + f);
        out[f.substr(0, eq)] = f.substr(eq + 1);
    }
    return out;
}

}  // namespace

ReferenceSystem parse_refsys(const Surface& s, std::string_view text, const std::vector<TwistAutomorphism>& twists) {
    ReferenceSystem r;
    std::istringstream lines{std::string(text)};
    std::string raw;
    struct Pending {
        std::string name, from, twist;
    };
    std::vector<Pending> pending;
    while (std::getline(lines, raw)) {
        raw = raw.substr(0, raw.find('#'));
        std::istringstream in(raw);
        std::string tag;
        if (!(in >> tag)) continue;
        auto kv = fields(in);
        if (tag == "genus") continue;
        if (tag.rfind("genus=", 0) == 0) {
            if (std::stoi(tag.substr(6)) != s.genus()) throw ParseError("refsys: genus mismatch");
            continue;
        }
        Provenance p;
        if (tag == "pants") p = Provenance::pants;
        else if (tag == "dual-almost-embedded") p = Provenance::dual;
        else if (tag == "twisted-dual") p = Provenance::twisted_dual;
        else throw ParseError("refsys: unknown tag " + tag);
        // The first key=value pair names the curve.
        std::istringstream again(raw);
        again >> tag;
        std::string first;
        again >> first;
        auto eq = first.find('=');
        if (eq == std::string::npos) throw ParseError("refsys: missing name=word");
        std::string name = first.substr(0, eq);
        Word w = s.parse(first.substr(eq + 1));
        if (w.empty() || s.is_trivial(w)) throw NotSimple(name);
        CurveClass c = s.canonical_class(w);
        if (!c.primitive() || self_int(s, c) != 0) throw NotSimple(name);
        for (const auto& prev : r.curves)
            if (prev.curve == c) throw std::invalid_argument("reference curve " + name + " duplicates " + prev.name);
        r.curves.push_back({name, c, p});
        if (p == Provenance::twisted_dual) {
            if (!kv.count("from") || !kv.count("twist")) throw ParseError("refsys: " + name + " needs from= and twist=");
            pending.push_back({name, kv["from"], kv["twist"]});
        }
    }
    if (r.curves.empty()) throw std::invalid_argument("reference system is empty");
    for (const auto& p : pending) {
        const ReferenceCurve* from = nullptr;
        const ReferenceCurve* self = nullptr;
        for (const auto& c : r.curves) {
            if (c.name == p.from) from = &c;
            if (c.name == p.name) self = &c;
        }
        if (!from) throw TwistMismatch(p.name);
        const TwistAutomorphism& t = find_twist(twists, p.twist);
        if (apply(s, t, from->curve, 1) != self->curve) throw TwistMismatch(p.name);
    }
    r.missing_twisted_duals = pending.empty();
    return r;
}

ReferenceSystem load_refsys(const Surface& s, const std::filesystem::path& file,
                            const std::vector<TwistAutomorphism>& twists) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_refsys(s, buf.str(), twists);
}

std::vector<int> phi(const Surface& s, const CurveClass& c, const ReferenceSystem& r) {
    std::vector<int> v;
    v.reserve(r.curves.size());
    for (const auto& ref : r.curves) v.push_back(c == ref.curve ? 0 : geom_int(s, c, ref.curve));
    return v;
}

std::vector<std::pair<CurveClass, CurveClass>> injectivity_scan(const Surface& s, const std::vector<CurveClass>& stratum,
                                                                const ReferenceSystem& r, int jobs) {
    std::vector<std::vector<int>> vectors(stratum.size());
    parallel_for(stratum.size(), jobs, [&](std::size_t i) { vectors[i] = phi(s, stratum[i], r); });
    std::map<std::vector<int>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < stratum.size(); ++i) groups[vectors[i]].push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (const auto& [_, members] : groups)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) idx.emplace_back(members[a], members[b]);
    std::sort(idx.begin(), idx.end());
    std::vector<std::pair<CurveClass, CurveClass>> out;
    for (auto [a, b] : idx) out.emplace_back(stratum[a], stratum[b]);
    return out;
}

}  // namespace curvekit
