#include "curvekit/mcg.hpp"

#include <fstream>
#include <sstream>

#include "curvekit/intersection.hpp"

namespace curvekit {

namespace {

Word substitute(const Surface& s, std::span<const Letter> w, const std::vector<Word>& table) {
    Word out;
    for (Letter x : w) {
        const Word& g = table[x.index() - 1];
        if (x.positive()) {
            out.insert(out.end(), g.begin(), g.end());
        } else {
            Word gi = inverse(g);
            out.insert(out.end(), gi.begin(), gi.end());
        }
    }
    return s.dehn_reduce(out);
}

bool is_rotation(std::span<const Letter> a, std::span<const Letter> b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
        bool same = true;
        for (std::size_t k = 0; k < n && same; ++k) same = a[(r + k) % n] == b[k];
        if (same) return true;
    }
    return false;
}

// Free-group check: the image of the relator, cyclically reduced, is a
// rotation of the relator or of its inverse.
bool preserves_relator(const Surface& s, const std::vector<Word>& table) {
    Word img;
    for (Letter x : s.relator()) {
        const Word& g = table[x.index() - 1];
        Word piece = x.positive() ? g : inverse(g);
        img.insert(img.end(), piece.begin(), piece.end());
    }
    img = s.cyclic_free_reduce(img);
    return is_rotation(img, s.relator()) || is_rotation(img, inverse(s.relator()));
}

std::string trim(std::string_view v) {
    auto b = v.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = v.find_last_not_of(" \t\r");
    return std::string(v.substr(b, e - b + 1));
}

}  // namespace

Word TwistAutomorphism::map(const Surface& s, std::span<const Letter> w, int power) const {
    const auto& table = power >= 0 ? images : inverse_images;
    Word out = s.dehn_reduce(w);
    for (int k = 0; k < std::abs(power); ++k) out = substitute(s, out, table);
    return out;
}

void validate(const Surface& s, const TwistAutomorphism& t) {
    const auto gens = static_cast<std::size_t>(s.rank());
    if (t.images.size() != gens) throw InvalidAutomorphism(t.name, "image table size");
    if (t.inverse_images.size() != gens) throw InvalidAutomorphism(t.name, "inverse table size");
    if (!preserves_relator(s, t.images)) throw InvalidAutomorphism(t.name, "relator conjugacy");
    if (!preserves_relator(s, t.inverse_images)) throw InvalidAutomorphism(t.name, "inverse relator conjugacy");
    for (std::size_t i = 0; i < gens; ++i) {
        Word x{Letter(static_cast<int>(i) + 1)};
        if (!s.equal(substitute(s, substitute(s, x, t.images), t.inverse_images), x) ||
            !s.equal(substitute(s, substitute(s, x, t.inverse_images), t.images), x))
            throw InvalidAutomorphism(t.name, "invertibility");
    }
    if (t.along.empty() || s.is_trivial(t.along)) throw InvalidAutomorphism(t.name, "core curve is trivial");
    CurveClass core = s.canonical_class(t.along);
    if (!core.primitive() || self_int(s, core) != 0) throw InvalidAutomorphism(t.name, "core curve simplicity");
}

std::vector<TwistAutomorphism> parse_twists(const Surface& s, std::string_view text) {
    std::vector<TwistAutomorphism> out;
    std::vector<std::vector<bool>> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("twist config line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected key=value");
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key == "genus") {
            if (std::stoi(value) != s.genus()) fail("genus mismatch");
            continue;
        }
        if (key == "name") {
            TwistAutomorphism t;
            t.name = value;
            t.images.assign(s.rank(), Word{});
            t.inverse_images.assign(s.rank(), Word{});
            out.push_back(std::move(t));
            seen.emplace_back(2 * s.rank(), false);
            continue;
        }
        if (out.empty()) fail("entry before any name");
        auto& t = out.back();
        if (key == "along") {
            t.along = s.parse(value);
            continue;
        }
        auto space = key.find(' ');
        if (space == std::string::npos) fail("unknown key " + key);
        std::string kind = key.substr(0, space);
        Word gen = s.parse(trim(std::string_view(key).substr(space + 1)));
        if (gen.size() != 1 || !gen[0].positive()) fail("image key must name a generator");
        int idx = gen[0].index() - 1;
        if (kind == "image") {
            t.images[idx] = s.parse(value);
            seen.back()[idx] = true;
        } else if (kind == "inv_image") {
            t.inverse_images[idx] = s.parse(value);
            seen.back()[s.rank() + idx] = true;
        } else {
            fail("unknown key " + kind);
        }
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int i = 0; i < 2 * s.rank(); ++i)
            if (!seen[k][i]) throw InvalidAutomorphism(out[k].name, "complete tables");
        validate(s, out[k]);
    }
    return out;
}

std::vector<TwistAutomorphism> load_twists(const Surface& s, const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_twists(s, buf.str());
}

TwistAutomorphism identity_twist(const Surface& s, Word along) {
    TwistAutomorphism t;
    t.name = "identity";
    t.along = std::move(along);
    for (int i = 1; i <= s.rank(); ++i) {
        t.images.push_back(Word{Letter(i)});
        t.inverse_images.push_back(Word{Letter(i)});
    }
    return t;
}

CurveClass apply(const Surface& s, const TwistAutomorphism& t, const CurveClass& c, int power) {
    Word w = s.cyclic_dehn_reduce(t.map(s, c.word, power));
    CurveClass out = s.canonical_class(w);
    out.exponent *= c.exponent;
    return out;
}

CurveClass apply(const Surface& s, const TwistWord& phi, const CurveClass& c) {
    CurveClass out = c;
    for (const auto& [t, n] : phi) out = apply(s, t, out, n);
    return out;
}

const TwistAutomorphism& find_twist(const std::vector<TwistAutomorphism>& twists, std::string_view name) {
    for (const auto& t : twists)
        if (t.name == name) return t;
    throw std::invalid_argument("no twist named " + std::string(name));
}

}  // namespace curvekit
