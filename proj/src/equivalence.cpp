#include "curvekit/equivalence.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "curvekit/intersection.hpp"
#include "curvekit/parallel.hpp"

namespace curvekit {

CurveCensus::CurveCensus(int genus, int max_length, std::vector<CensusEntry> entries)
    : genus_(genus), max_length_(max_length), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const CensusEntry& x, const CensusEntry& y) { return x.curve < y.curve; });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].self_int % 2 != 0) throw CacheError("odd self-intersection in census");
        index_[entries_[i].self_int / 2].push_back(i);
    }
}

std::vector<CurveClass> CurveCensus::stratum(int k) const {
    std::vector<CurveClass> out;
    auto it = index_.find(k);
    if (it == index_.end()) return out;
    out.reserve(it->second.size());
    for (std::size_t i : it->second) out.push_back(entries_[i].curve);
    return out;
}

std::vector<int> CurveCensus::strata() const {
    std::vector<int> out;
    for (const auto& [k, _] : index_) out.push_back(k);
    return out;
}

std::optional<int> CurveCensus::self_int_of(const CurveClass& c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                               [](const CensusEntry& e, const CurveClass& x) { return e.curve < x; });
    if (it == entries_.end() || it->curve != c) return std::nullopt;
    return it->self_int;
}

namespace {

bool ends_in_long_run(const Surface& s, const Word& w) {
    for (int dir = 0; dir < 2; ++dir) {
        int len = 1;
        for (std::size_t k = w.size() - 1; k > 0 && s.successor(w[k - 1], dir) == w[k]; --k) ++len;
        if (len > s.half()) return true;
    }
    return false;
}

// Depth-first over freely and Dehn-reduced words; a word is kept when it is
// its own canonical form.
void grow(const Surface& s, Word& w, int max_length, std::vector<CensusEntry>& out) {
    if (!w.empty() && !s.cyclically_reducible(w) && least_rotation(w) == w) {
        CurveClass c = s.canonical_class(w);
        if (c.word == w && c.primitive()) {
            auto linked = count_linked_lifts(s, w, w).linked;
            out.push_back({std::move(c), static_cast<int>(linked)});
        }
    }
    if (static_cast<int>(w.size()) == max_length) return;
    for (Letter x : s.all_letters()) {
        if (!w.empty() && w.back() == x.inv()) continue;
        w.push_back(x);
        if (!ends_in_long_run(s, w)) grow(s, w, max_length, out);
        w.pop_back();
    }
}

}  // namespace

CurveCensus enumerate(const Surface& s, int max_length, int jobs) {
    if (max_length < 1) throw std::invalid_argument("census length must be positive");
    // One task per two-letter start keeps the work split reasonably even.
    std::vector<Word> starts;
    for (Letter x : s.all_letters()) {
        starts.push_back({x});
        if (max_length >= 2)
            for (Letter y : s.all_letters())
                if (y != x.inv()) starts.push_back({x, y});
    }
    std::vector<std::vector<CensusEntry>> parts(starts.size());
    parallel_for(starts.size(), jobs, [&](std::size_t t) {
        Word w = starts[t];
        if (w.size() == 1) {
            // Only the word itself; longer words belong to two-letter tasks.
            if (least_rotation(w) == w) {
                CurveClass c = s.canonical_class(w);
                if (c.word == w) parts[t].push_back({c, 0});
            }
            return;
        }
        if (!ends_in_long_run(s, w)) grow(s, w, max_length, parts[t]);
    });
    std::vector<CensusEntry> all;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
    return CurveCensus(s.genus(), max_length, std::move(all));
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

namespace {

std::string census_body(const CurveCensus& census) {
    std::string body = "genus=" + std::to_string(census.genus()) + " L=" + std::to_string(census.max_length()) +
                       " version=1\n";
    for (const auto& e : census.entries()) {
        body += format_word(e.curve.word);
        body += '\t';
        body += std::to_string(e.self_int);
        body += '\n';
    }
    return body;
}

int parse_int(std::string_view v) {
    int out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) throw CacheError("bad integer '" + std::string(v) + "'");
    return out;
}

}  // namespace

std::string serialize(const CurveCensus& census) {
    std::string body = census_body(census);
    return body + "#sha256=" + sha256_hex(body) + "\n";
}

CurveCensus parse_census(const Surface& s, std::string_view text, bool recheck) {
    auto mark = text.rfind("#sha256=");
    if (mark == std::string_view::npos) throw CacheError("census file has no checksum line (incomplete?)");
    std::string_view body = text.substr(0, mark);
    std::string_view sum = text.substr(mark + 8);
    while (!sum.empty() && (sum.back() == '\n' || sum.back() == '\r')) sum.remove_suffix(1);
    if (sha256_hex(body) != sum) throw CacheError("census checksum mismatch");

    auto eol = body.find('\n');
    if (eol == std::string_view::npos) throw CacheError("census file has no header");
    std::string_view header = body.substr(0, eol);
    int genus = -1, length = -1, version = -1;
    std::istringstream hs{std::string(header)};
    for (std::string field; hs >> field;) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw CacheError("bad header field " + field);
        std::string key = field.substr(0, eq);
        int value = parse_int(std::string_view(field).substr(eq + 1));
        if (key == "genus") genus = value;
        else if (key == "L") length = value;
        else if (key == "version") version = value;
    }
    if (version != 1) throw CacheError("unsupported census version");
    if (genus != s.genus()) throw CacheError("census genus does not match");
    if (length < 1) throw CacheError("census header lacks L");

    std::vector<CensusEntry> entries;
    std::size_t pos = eol + 1;
    while (pos < body.size()) {
        auto end = body.find('\n', pos);
        if (end == std::string_view::npos) end = body.size();
        std::string_view line = body.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string_view::npos) throw CacheError("census line without tab");
        CensusEntry e{CurveClass{s.parse(line.substr(0, tab)), 1}, parse_int(line.substr(tab + 1))};
        if (recheck) {
            if (s.canonical_class(e.curve.word) != e.curve) throw CacheError("non-canonical census word");
            if (count_linked_lifts(s, e.curve.word, e.curve.word).linked != e.self_int)
                throw CacheError("census self-intersection mismatch for " + format_word(e.curve.word));
        }
        entries.push_back(std::move(e));
    }
    return CurveCensus(genus, length, std::move(entries));
}

void save_census(const CurveCensus& census, const std::filesystem::path& file) {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    // Write to a temporary name first so readers only ever see whole files.
    auto tmp = file;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw CacheError("cannot write " + tmp.string());
        out << serialize(census);
    }
    std::filesystem::rename(tmp, file);
}

CurveCensus load_census(const Surface& s, const std::filesystem::path& file, bool recheck) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw CacheError("cannot open " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_census(s, buf.str(), recheck);
}

CurveCensus cached_census(const Surface& s, int max_length, const std::filesystem::path& dir, int jobs) {
    auto file = dir / ("census-g" + std::to_string(s.genus()) + "-L" + std::to_string(max_length) + ".txt");
    if (std::filesystem::exists(file)) {
        try {
            return load_census(s, file);
        } catch (const CacheError&) {
            // fall through and rebuild
        }
    }
    CurveCensus census = enumerate(s, max_length, jobs);
    save_census(census, file);
    return census;
}

int intersection_with(const Surface& s, const CurveClass& x, const CurveClass& c) {
    return x == c ? self_int(s, c) : geom_int(s, x, c);
}

namespace {

// First class (in the given order) that meets alpha and beta differently.
std::optional<Witness> scan(const Surface& s, const CurveClass& alpha, const CurveClass& beta,
                            const std::vector<CurveClass>& classes, int k, int jobs) {
    const PreparedCurve pa(s, alpha.word), pb(s, beta.word);
    const std::size_t chunk = 2048;
    for (std::size_t start = 0; start < classes.size(); start += chunk) {
        const std::size_t n = std::min(chunk, classes.size() - start);
        std::vector<std::pair<int, int>> values(n);
        parallel_for(n, jobs, [&](std::size_t i) {
            const CurveClass& c = classes[start + i];
            PreparedCurve pc(s, c.word);
            values[i] = {static_cast<int>(count_linked_lifts(s, pa, pc).linked),
                         static_cast<int>(count_linked_lifts(s, pb, pc).linked)};
        });
        for (std::size_t i = 0; i < n; ++i)
            if (values[i].first != values[i].second)
                return Witness{classes[start + i], k, values[i].first, values[i].second};
    }
    return std::nullopt;
}

void require_distinct(const CurveClass& alpha, const CurveClass& beta) {
    if (alpha == beta) throw EqualInputs();
    if (!alpha.primitive() || !beta.primitive()) throw NonPrimitive();
}

}  // namespace

EquivVerdict test_k_equiv(const Surface& s, const CurveClass& alpha, const CurveClass& beta, int k,
                          const CurveCensus& census, int jobs) {
    require_distinct(alpha, beta);
    EquivVerdict v;
    v.census_length = census.max_length();
    v.k_low = v.k_high = k;
    auto classes = census.stratum(k);
    v.witness = scan(s, alpha, beta, classes, k, jobs);
    v.checked = static_cast<long long>(classes.size());
    return v;
}

DistinguisherReport find_distinguisher(const Surface& s, const CurveClass& alpha, const CurveClass& beta,
                                       const CurveCensus& census, std::optional<int> cap, int jobs) {
    require_distinct(alpha, beta);
    const int ka = self_int(s, alpha) / 2, kb = self_int(s, beta) / 2;
    DistinguisherReport r;
    r.default_cap = 17 * std::max(ka, kb);
    r.cap = cap.value_or(r.default_cap);
    r.verdict.census_length = census.max_length();
    r.verdict.k_low = 0;
    for (int k = 0; k <= r.cap; ++k) {
        auto classes = census.stratum(k);
        r.verdict.k_high = k;
        r.verdict.witness = scan(s, alpha, beta, classes, k, jobs);
        r.verdict.checked += static_cast<long long>(classes.size());
        if (r.verdict.witness) {
            r.bounded = false;
            break;
        }
    }
    return r;
}

}  // namespace curvekit
