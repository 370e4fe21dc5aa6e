#include "curvekit/word.hpp"

#include <algorithm>
#include <cctype>

namespace curvekit {

Word parse_word(std::string_view text, int genus) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == '*') {
            ++i;
            continue;
        }
        bool inv = false;
        int offset = 0;
        switch (c) {
            case 'a': offset = 1; break;
            case 'b': offset = 2; break;
            case 'A': offset = 1; inv = true; break;
            case 'B': offset = 2; inv = true; break;
            default: throw ParseError("unexpected character '" + std::string(1, c) + "' in word");
        }
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw ParseError("generator without handle index in '" + std::string(text) + "'");
        int handle = std::stoi(std::string(text.substr(start, i - start)));
        if (handle < 1 || handle > genus)
            throw ParseError("handle index " + std::to_string(handle) + " outside genus " + std::to_string(genus));
        int code = 2 * (handle - 1) + offset;
        w.push_back(Letter(inv ? -code : code));
    }
    return w;
}

std::string format_letter(Letter x) {
    int i = x.index();
    char base = (i % 2 == 1) ? 'a' : 'b';
    if (!x.positive()) base = static_cast<char>(std::toupper(base));
    return std::string(1, base) + std::to_string((i + 1) / 2);
}

std::string format_word(std::span<const Letter> w) {
    std::string s;
    for (Letter x : w) s += format_letter(x);
    return s;
}

Word inverse(std::span<const Letter> w) {
    Word r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[w.size() - 1 - i] = w[i].inv();
    return r;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
    Word r(a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word power(std::span<const Letter> w, int n) {
    Word base = n < 0 ? inverse(w) : Word(w.begin(), w.end());
    Word r;
    for (int k = 0; k < std::abs(n); ++k) r.insert(r.end(), base.begin(), base.end());
    return r;
}

bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace curvekit
