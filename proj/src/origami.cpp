#include "h2/origami.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>

namespace h2 {

bool transitive_pair(const Permutation& h, const Permutation& v) {
    const int n = h.degree();
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int found = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {h(x), v(x)}) {
            if (!seen[y]) {
                seen[y] = 1;
                ++found;
                stack.push_back(y);
            }
        }
    }
    return found == n;
}

Origami make_origami(Permutation h, Permutation v) {
    if (h.degree() != v.degree())
        throw DegreeMismatch("origami: h has degree " + std::to_string(h.degree()) +
                             ", v has degree " + std::to_string(v.degree()));
    if (!transitive_pair(h, v))
        throw NotConnected("origami: <h,v> is not transitive on {1.." +
                           std::to_string(h.degree()) + "}");
    return Origami{std::move(h), std::move(v)};
}

Permutation commutator(const Origami& o) {
    return compose(o.h, compose(o.v, compose(inverse(o.h), inverse(o.v))));
}

int StratumSignature::genus() const {
    if (zero_orders.empty()) return 1;
    int sum = 0;
    for (int k : zero_orders) sum += k;
    return (sum + 2) / 2;
}

std::string StratumSignature::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < zero_orders.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(zero_orders[i]);
    }
    out += ')';
    return out;
}

StratumSignature stratum(const Origami& o) {
    StratumSignature sig;
    for (int len : cycle_type(commutator(o))) sig.zero_orders.push_back(len - 1);
    return sig;   // cycle_type is already sorted descending
}

bool is_primitive(const Origami& o) {
    const int n = o.degree();
    if (n <= 2) return true;   // degree 1, and transitive degree 2
    std::vector<int> parent(n + 1);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int p = 2; p <= n; ++p) {
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<std::pair<int, int>> work;
        parent[find(1)] = find(p);
        work.emplace_back(1, p);
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            for (const Permutation* g : {&o.h, &o.v}) {
                int x = (*g)(a), y = (*g)(b);
                int rx = find(x), ry = find(y);
                if (rx != ry) {
                    parent[rx] = ry;
                    work.emplace_back(x, y);
                }
            }
        }
        int block = 0;
        int root = find(1);
        for (int x = 1; x <= n; ++x)
            if (find(x) == root) ++block;
        if (block != n) return false;   // proper block containing {1,p}
    }
    return true;
}

const char* to_string(MonodromyLabel label) {
    switch (label) {
        case MonodromyLabel::SymmetricFull: return "SymmetricFull";
        case MonodromyLabel::AlternatingContained: return "AlternatingContained";
        default: return "Other";
    }
}

MonodromyClass monodromy_class(const Origami& o) {
    MonodromyClass mc;
    mc.is_transitive = transitive_pair(o.h, o.v);
    mc.is_primitive = mc.is_transitive && is_primitive(o);
    mc.h_even = sign(o.h) == 1;
    mc.v_even = sign(o.v) == 1;
    if (mc.h_even && mc.v_even)
        mc.label = MonodromyLabel::AlternatingContained;
    else if (mc.is_transitive && mc.is_primitive)
        mc.label = MonodromyLabel::SymmetricFull;
    else
        mc.label = MonodromyLabel::Other;
    return mc;
}

Origami CanonicalOrigami::representative() const {
    std::vector<int> h_img(encoding.begin(), encoding.begin() + n);
    std::vector<int> v_img(encoding.begin() + n, encoding.end());
    return Origami{Permutation::from_images(std::move(h_img)),
                   Permutation::from_images(std::move(v_img))};
}

std::string CanonicalOrigami::to_string() const {
    std::string out;
    for (size_t i = 0; i < encoding.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(encoding[i]);
    }
    return out;
}

CanonicalOrigami CanonicalOrigami::from_string(const std::string& text) {
    CanonicalOrigami c;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) c.encoding.push_back(std::stoi(tok));
    if (c.encoding.empty() || c.encoding.size() % 2 != 0)
        throw ParseError("canonical encoding must hold 2n integers");
    c.n = static_cast<int>(c.encoding.size()) / 2;
    c.representative();   // validates both halves
    return c;
}

size_t CanonicalHash::operator()(const CanonicalOrigami& c) const {
    size_t hash = 1469598103934665603ull;
    for (int x : c.encoding) {
        hash ^= static_cast<size_t>(x);
        hash *= 1099511628211ull;
    }
    return hash;
}

CanonicalOrigami canonical_form(const Origami& o) {
    const int n = o.degree();
    const Permutation hinv = inverse(o.h);
    const Permutation vinv = inverse(o.v);

    std::vector<int> best;
    std::vector<int> label(n + 1);
    std::vector<int> order(n);
    std::vector<int> enc(2 * n);

    for (int s = 1; s <= n; ++s) {
        std::fill(label.begin(), label.end(), 0);
        int found = 0;
        order[found++] = s;
        label[s] = 1;
        for (int q = 0; q < found; ++q) {
            int x = order[q];
            for (int y : {o.h(x), o.v(x), hinv(x), vinv(x)}) {
                if (!label[y]) {
                    label[y] = ++found;
                    order[found - 1] = y;
                }
            }
        }
        assert(found == n && "canonical_form needs a connected origami");
        for (int k = 0; k < n; ++k) {
            int x = order[k];
            enc[k] = label[o.h(x)];
            enc[n + k] = label[o.v(x)];
        }
        if (best.empty() || enc < best) best = enc;
    }
    return CanonicalOrigami{n, std::move(best)};
}

std::string format_origami(const Origami& o) {
    return "h=" + format_cycles(o.h) + "; v=" + format_cycles(o.v) +
           "; n=" + std::to_string(o.degree());
}

namespace {

// Splits "key=value" segments on ';' and records the value offset for error
// reporting.
struct LiteralField {
    std::string value;
    size_t offset = 0;
    bool present = false;
};

} // namespace

Origami parse_origami(const std::string& text) {
    LiteralField fields[3];   // h, v, n
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        size_t a = pos;
        while (a < end && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        if (a == end) { pos = end + 1; continue; }
        size_t eq = text.find('=', a);
        if (eq == std::string::npos || eq >= end)
            throw ParseError("line 1, column " + std::to_string(a + 1) +
                             ": expected '<key>=<value>'");
        std::string key = text.substr(a, eq - a);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        int slot;
        if (key == "h") slot = 0;
        else if (key == "v") slot = 1;
        else if (key == "n") slot = 2;
        else
            throw ParseError("line 1, column " + std::to_string(a + 1) + ": unknown key '" +
                             key + "' (expected h, v or n)");
        if (fields[slot].present)
            throw ParseError("line 1, column " + std::to_string(a + 1) + ": duplicate key '" +
                             key + "'");
        fields[slot] = {text.substr(eq + 1, end - eq - 1), eq + 1, true};
        pos = end + 1;
    }
    for (int slot = 0; slot < 3; ++slot)
        if (!fields[slot].present)
            throw ParseError("line 1: missing field '" + std::string(slot == 0 ? "h" : slot == 1 ? "v" : "n") + "'");

    int n;
    try {
        size_t used = 0;
        n = std::stoi(fields[2].value, &used);
        while (used < fields[2].value.size()) {
            if (!std::isspace(static_cast<unsigned char>(fields[2].value[used])))
                throw std::invalid_argument("trailing");
            ++used;
        }
    } catch (const std::exception&) {
        throw ParseError("line 1, column " + std::to_string(fields[2].offset + 1) +
                         ": n must be an integer");
    }
    if (n < 1)
        throw ParseError("line 1, column " + std::to_string(fields[2].offset + 1) +
                         ": n must be >= 1");

    auto parse_part = [&](int slot, const char* name) {
        try {
            return parse_cycles(fields[slot].value, n);
        } catch (const Error& e) {
            throw ParseError("line 1, in " + std::string(name) + " (value starts at column " +
                             std::to_string(fields[slot].offset + 1) + "): " + e.what());
        }
    };
    Permutation h = parse_part(0, "h");
    Permutation v = parse_part(1, "v");
    return make_origami(std::move(h), std::move(v));
}

} // namespace h2
