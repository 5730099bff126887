#include "h2/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>

namespace h2 {

Permutation::Permutation(int degree) {
    if (degree < 1) throw Error("permutation degree must be >= 1");
    img_.resize(degree);
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1) throw Error("permutation degree must be >= 1");
    std::vector<char> seen(n + 1, 0);
    for (int x : images) {
        if (x < 1 || x > n) throw PointOutOfRange("image " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
        if (seen[x]) throw Error("image sequence is not a bijection: " + std::to_string(x) + " repeats");
        seen[x] = 1;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

Permutation parse_cycles(const std::string& text, int degree) {
    if (degree < 1) throw MalformedCycle("degree must be >= 1");
    Permutation result(degree);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto col = [&](size_t at) { return "column " + std::to_string(at + 1) + ": "; };

    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw MalformedCycle(col(i) + "expected '('");
        ++i;
        skip_ws();
        std::vector<int> cycle;
        if (i < text.size() && text[i] == ')') {
            ++i;          // "()": empty cycle, identity contribution
            skip_ws();
            continue;
        }
        while (true) {
            skip_ws();
            size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            size_t digits = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == digits) throw MalformedCycle(col(start) + "expected integer");
            long val = std::stol(text.substr(start, i - start));
            if (val < 1 || val > degree)
                throw PointOutOfRange(col(start) + "point " + std::to_string(val) +
                                      " outside [1, " + std::to_string(degree) + "]");
            if (std::find(cycle.begin(), cycle.end(), static_cast<int>(val)) != cycle.end())
                throw RepeatedPointInCycle(col(start) + "point " + std::to_string(val) +
                                           " appears twice in one cycle");
            cycle.push_back(static_cast<int>(val));
            skip_ws();
            if (i >= text.size()) throw MalformedCycle(col(i) + "unbalanced parentheses");
            if (text[i] == ',') { ++i; continue; }
            if (text[i] == ')') { ++i; break; }
            throw MalformedCycle(col(i) + "expected ',' or ')'");
        }
        if (cycle.size() >= 2) {
            std::vector<int> img(degree);
            std::iota(img.begin(), img.end(), 1);
            for (size_t k = 0; k < cycle.size(); ++k)
                img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
            // cycles listed left to right; the rightmost acts first
            result = compose(result, Permutation::from_images(std::move(img)));
        }
        skip_ws();
    }
    return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " vs " +
                             std::to_string(q.degree()));
    const int n = p.degree();
    std::vector<int> img(n);
    for (int x = 1; x <= n; ++x) img[x - 1] = p(q(x));
    return Permutation::from_images(std::move(img));
}

Permutation inverse(const Permutation& p) {
    const int n = p.degree();
    std::vector<int> img(n);
    for (int x = 1; x <= n; ++x) img[p(x) - 1] = x;
    return Permutation::from_images(std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
    return compose(g, compose(p, inverse(g)));
}

Permutation power(const Permutation& p, long long k) {
    const int n = p.degree();
    Permutation base = k < 0 ? inverse(p) : p;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
                                 : static_cast<unsigned long long>(k);
    Permutation acc(n);
    while (e > 0) {
        if (e & 1ull) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<std::vector<int>> disjoint_cycles(const Permutation& p) {
    const int n = p.degree();
    std::vector<char> seen(n + 1, 0);
    std::vector<std::vector<int>> cycles;
    for (int x = 1; x <= n; ++x) {
        if (seen[x] || p(x) == x) continue;
        std::vector<int> c;
        int y = x;
        do {
            c.push_back(y);
            seen[y] = 1;
            y = p(y);
        } while (y != x);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

std::vector<int> cycle_type(const Permutation& p) {
    std::vector<int> lens;
    for (const auto& c : disjoint_cycles(p)) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

int sign(const Permutation& p) {
    int moved_minus_cycles = 0;   // sum over nontrivial cycles of (len - 1)
    for (const auto& c : disjoint_cycles(p)) moved_minus_cycles += static_cast<int>(c.size()) - 1;
    return moved_minus_cycles % 2 == 0 ? 1 : -1;
}

std::string format_cycles(const Permutation& p) {
    auto cycles = disjoint_cycles(p);
    if (cycles.empty()) return "()";
    std::string out;
    for (const auto& c : cycles) {
        out += '(';
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(c[k]);
        }
        out += ')';
    }
    return out;
}

} // namespace h2
