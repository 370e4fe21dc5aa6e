#include "curvekit/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace curvekit {

std::string format_class(const CurveClass& c) {
    std::string s = format_word(c.word);
    if (c.exponent != 1) s = "(" + s + ")^" + std::to_string(c.exponent);
    return s;
}

Surface::Surface(int genus) : genus_(genus) {
    if (genus < 2) throw std::invalid_argument("genus must be at least 2");
    for (int i = 1; i <= genus; ++i) {
        int a = 2 * i - 1, b = 2 * i;
        relator_.insert(relator_.end(), {Letter(a), Letter(b), Letter(-a), Letter(-b)});
    }
    const int n = relator_length();
    for (int dir = 0; dir < 2; ++dir) succ_[dir].assign(n, Letter());
    Word rinv = inverse(relator_);
    for (int k = 0; k < n; ++k) {
        succ_[0][relator_[k].slot()] = relator_[(k + 1) % n];
        succ_[1][rinv[k].slot()] = rinv[(k + 1) % n];
    }
    // Each relator corner x_k x_{k+1} makes the directions x_k^-1 and
    // x_{k+1} neighbours around a vertex.
    std::vector<Letter> turn(n);
    for (int k = 0; k < n; ++k) turn[relator_[k].inv().slot()] = relator_[(k + 1) % n];
    link_pos_.assign(n, -1);
    Letter x(1);
    for (int k = 0; k < n; ++k) {
        link_pos_[x.slot()] = k;
        link_.push_back(x);
        x = turn[x.slot()];
    }
    if (x != Letter(1) || std::find(link_pos_.begin(), link_pos_.end(), -1) != link_pos_.end())
        throw std::logic_error("relator corners do not close up into a single vertex link");
}

std::vector<Letter> Surface::all_letters() const {
    std::vector<Letter> out;
    for (int s = 0; s < relator_length(); ++s) out.push_back(Letter::from_slot(s));
    return out;
}

Word Surface::free_reduce(std::span<const Letter> w) const {
    Word out;
    for (Letter x : w) {
        if (!out.empty() && out.back() == x.inv())
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word Surface::run_complement(std::span<const Letter> run, int dir) const {
    Word v;
    Letter x = run.back();
    for (int k = 0; k < relator_length() - static_cast<int>(run.size()); ++k) {
        x = successor(x, dir);
        v.push_back(x);
    }
    return v;
}

Word Surface::dehn_reduce(std::span<const Letter> w) const {
    const int limit = half() + 1;
    Word out;
    std::array<std::vector<int>, 2> run;
    std::vector<Letter> pending(w.rbegin(), w.rend());
    while (!pending.empty()) {
        Letter x = pending.back();
        pending.pop_back();
        if (!out.empty() && out.back() == x.inv()) {
            out.pop_back();
            run[0].pop_back();
            run[1].pop_back();
            continue;
        }
        out.push_back(x);
        for (int dir = 0; dir < 2; ++dir) {
            int len = 1;
            if (out.size() > 1 && successor(out[out.size() - 2], dir) == x) len = run[dir].back() + 1;
            run[dir].push_back(len);
        }
        for (int dir = 0; dir < 2; ++dir) {
            if (run[dir].back() < limit) continue;
            std::span<const Letter> u(out.end() - limit, out.end());
            Word repl = inverse(run_complement(u, dir));
            out.resize(out.size() - limit);
            run[0].resize(out.size());
            run[1].resize(out.size());
            pending.insert(pending.end(), repl.rbegin(), repl.rend());
            break;
        }
    }
    return out;
}

bool Surface::equal(std::span<const Letter> a, std::span<const Letter> b) const {
    Word ab = concat(a, inverse(b));
    return is_trivial(ab);
}

Word Surface::cyclic_free_reduce(std::span<const Letter> w) const {
    Word r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == r[j - 1].inv()) {
        ++i;
        --j;
    }
    return Word(r.begin() + i, r.begin() + j);
}

std::vector<std::pair<int, int>> Surface::cyclic_runs(std::span<const Letter> c, int dir) const {
    std::vector<std::pair<int, int>> runs;
    const int n = static_cast<int>(c.size());
    if (n == 0) return runs;
    std::vector<char> link(n);
    bool all = true;
    for (int p = 0; p < n; ++p) {
        link[p] = successor(c[p], dir) == c[(p + 1) % n];
        all = all && link[p];
    }
    if (all) {
        runs.emplace_back(0, n + 1);  // closed run: a power of a relator rotation
        return runs;
    }
    for (int p = 0; p < n; ++p) {
        if (link[(p + n - 1) % n]) continue;
        int len = 1;
        while (link[(p + len - 1) % n]) ++len;
        runs.emplace_back(p, len);
    }
    return runs;
}

bool Surface::cyclically_reducible(std::span<const Letter> c) const {
    const int n = static_cast<int>(c.size());
    if (n == 0) return false;
    if (n >= 2 && c.front() == c.back().inv()) return true;
    for (int p = 0; p + 1 < n; ++p)
        if (c[p] == c[p + 1].inv()) return true;
    for (int dir = 0; dir < 2; ++dir)
        for (auto [p, len] : cyclic_runs(c, dir))
            if (len > half()) return true;
    return false;
}

namespace {

Word rotate(std::span<const Letter> c, int p) {
    Word r(c.begin() + p, c.end());
    r.insert(r.end(), c.begin(), c.begin() + p);
    return r;
}

}  // namespace

Word Surface::cyclic_dehn_reduce(std::span<const Letter> w) const {
    Word c = cyclic_free_reduce(dehn_reduce(w));
    for (;;) {
        bool changed = false;
        for (int dir = 0; dir < 2 && !changed; ++dir) {
            for (auto [p, len] : cyclic_runs(c, dir)) {
                if (len <= half()) continue;
                if (len > static_cast<int>(c.size())) return {};  // power of a relator
                Word r = rotate(c, p);
                std::span<const Letter> u(r.begin(), r.begin() + len);
                Word repl = inverse(run_complement(u, dir));
                repl.insert(repl.end(), r.begin() + len, r.end());
                c = cyclic_free_reduce(dehn_reduce(repl));
                changed = true;
                break;
            }
        }
        if (!changed) return c;
    }
}

Word least_rotation(std::span<const Letter> c) {
    const std::size_t n = c.size();
    if (n == 0) return {};
    // Booth-style two-candidate scan.
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        Letter x = c[(i + k) % n], y = c[(j + k) % n];
        if (x == y) {
            ++k;
            continue;
        }
        if (y < x)
            i = i + k + 1;
        else
            j = j + k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return rotate(c, static_cast<int>(std::min(i, j)));
}

int cyclic_period(std::span<const Letter> c) {
    const int n = static_cast<int>(c.size());
    for (int p = 1; p <= n; ++p) {
        if (n % p) continue;
        bool ok = true;
        for (int k = p; k < n && ok; ++k) ok = c[k] == c[k - p];
        if (ok) return p;
    }
    return n;
}

std::optional<Word> Surface::ring_partner(std::span<const Letter> c, int dir) const {
    const int n = static_cast<int>(c.size());
    const int block = half() - 1;
    if (n == 0 || n % block) return std::nullopt;
    // c must split into runs of 2g-1 letters, each on its own relator face,
    // with consecutive faces sharing the edge between them. The other side
    // of that ring of faces is a conjugate of the same length.
    for (int p = 0; p < block; ++p) {
        bool ok = true;
        for (int b = 0; b < n / block && ok; ++b) {
            int s0 = p + b * block;
            for (int k = 1; k < block && ok; ++k) ok = successor(c[(s0 + k - 1) % n], dir) == c[(s0 + k) % n];
            if (!ok) break;
            Letter rung = successor(c[(s0 + block - 1) % n], dir);
            ok = successor(rung.inv(), dir) == c[(s0 + block) % n];
        }
        if (!ok) continue;
        Word other;
        for (int b = 0; b < n / block; ++b) {
            Letter x = successor(c[(p + b * block + block - 1) % n], dir);
            Word inner;
            for (int k = 0; k < block; ++k) {
                x = successor(x, dir);
                inner.push_back(x);
            }
            Word back = inverse(inner);
            other.insert(other.end(), back.begin(), back.end());
        }
        return other;
    }
    return std::nullopt;
}

std::set<Word> Surface::cyclic_geodesics(std::span<const Letter> w) const {
    Word start = cyclic_dehn_reduce(w);
restart:
    if (start.empty()) return {};
    std::set<Word> seen;
    std::deque<Word> queue;
    Word key = least_rotation(start);
    seen.insert(key);
    queue.push_back(key);
    while (!queue.empty()) {
        Word c = std::move(queue.front());
        queue.pop_front();
        std::vector<Word> moves;
        for (int dir = 0; dir < 2; ++dir) {
            for (auto [p, len] : cyclic_runs(c, dir)) {
                if (len != half()) continue;
                Word r = rotate(c, p);
                std::span<const Letter> u(r.begin(), r.begin() + len);
                Word swapped = inverse(run_complement(u, dir));
                swapped.insert(swapped.end(), r.begin() + len, r.end());
                moves.push_back(std::move(swapped));
            }
            if (auto other = ring_partner(c, dir)) moves.push_back(std::move(*other));
        }
        for (Word& m : moves) {
            if (cyclically_reducible(m)) {
                start = cyclic_dehn_reduce(m);
                goto restart;
            }
            Word k2 = least_rotation(m);
            if (seen.insert(k2).second) {
                if (seen.size() > closure_cap) throw ResourceCap("half-relator closure exceeded cap");
                queue.push_back(std::move(k2));
            }
        }
    }
    return seen;
}

Word Surface::geodesic(std::span<const Letter> w) const {
    Word start = dehn_reduce(w);
restart:
    if (start.empty()) return start;
    std::set<Word> seen{start};
    std::deque<Word> queue{start};
    while (!queue.empty()) {
        Word c = std::move(queue.front());
        queue.pop_front();
        const int n = static_cast<int>(c.size());
        for (int dir = 0; dir < 2; ++dir) {
            int p = 0;
            while (p < n) {
                int len = 1;
                while (p + len < n && successor(c[p + len - 1], dir) == c[p + len]) ++len;
                if (len == half()) {
                    Word u(c.begin() + p, c.begin() + p + len);
                    Word next(c.begin(), c.begin() + p);
                    Word repl = inverse(run_complement(u, dir));
                    next.insert(next.end(), repl.begin(), repl.end());
                    next.insert(next.end(), c.begin() + p + len, c.end());
                    Word red = dehn_reduce(next);
                    if (red.size() < next.size()) {
                        start = red;
                        goto restart;
                    }
                    if (seen.insert(next).second) {
                        if (seen.size() > closure_cap) throw ResourceCap("half-relator closure exceeded cap");
                        queue.push_back(std::move(next));
                    }
                }
                p += len;
            }
        }
    }
    return *seen.begin();
}

bool Surface::conjugate_eq(std::span<const Letter> w1, std::span<const Letter> w2) const {
    auto s1 = cyclic_geodesics(w1);
    auto s2 = cyclic_geodesics(w2);
    if (s1.empty() || s2.empty()) return s1.empty() && s2.empty();
    return *s1.begin() == *s2.begin();
}

std::pair<Word, int> Surface::primitive_root(std::span<const Letter> cyclic) const {
    auto forms = cyclic_geodesics(cyclic);
    if (forms.empty()) throw TrivialWord();
    int best_exp = 1;
    Word root = *forms.begin();
    for (const Word& f : forms) {
        int p = cyclic_period(f);
        int e = static_cast<int>(f.size()) / p;
        if (e > best_exp) {
            best_exp = e;
            root.assign(f.begin(), f.begin() + p);
        }
    }
    if (best_exp > 1) root = *cyclic_geodesics(root).begin();
    return {root, best_exp};
}

CurveClass Surface::canonical_class(std::span<const Letter> w) const {
    auto [root, exp] = primitive_root(w);
    auto forms = cyclic_geodesics(root);
    Word best = *forms.begin();
    for (const Word& f : forms) {
        Word fi = least_rotation(inverse(f));
        if (shortlex_less(fi, best)) best = fi;
    }
    return CurveClass{best, exp};
}

std::vector<int> Surface::homology(std::span<const Letter> w) const {
    std::vector<int> h(rank(), 0);
    for (Letter x : w) h[x.index() - 1] += x.positive() ? 1 : -1;
    return h;
}

int Surface::algebraic_intersection(std::span<const Letter> x, std::span<const Letter> y) const {
    auto hx = homology(x), hy = homology(y);
    int s = 0;
    for (int i = 0; i < genus_; ++i) s += hx[2 * i] * hy[2 * i + 1] - hx[2 * i + 1] * hy[2 * i];
    return s;
}

Multicurve Multicurve::from(std::vector<std::pair<CurveClass, int>> parts) {
    std::map<CurveClass, int> merged;
    for (auto& [c, m] : parts) {
        if (m < 1) throw std::invalid_argument("multiplicity must be positive");
        CurveClass root = c;
        int mult = m * root.exponent;
        root.exponent = 1;
        merged[root] += mult;
    }
    Multicurve out;
    for (auto& [c, m] : merged) out.components.emplace_back(c, m);
    return out;
}

}  // namespace curvekit
