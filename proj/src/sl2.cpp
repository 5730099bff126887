#include "h2/sl2.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

namespace h2 {

namespace {

#ifndef NDEBUG
// Debug-only revalidation: every generator application must preserve the
// stratum and connectedness.
void check_invariants(const Origami& before, const Origami& after) {
    assert(transitive_pair(after.h, after.v));
    assert(stratum(before) == stratum(after));
}
#define H2_CHECK_ACTION(before, after) check_invariants(before, after)
#else
#define H2_CHECK_ACTION(before, after) ((void)0)
#endif

} // namespace

Origami apply_T(const Origami& o) {
    Origami r{o.h, compose(o.v, inverse(o.h))};
    H2_CHECK_ACTION(o, r);
    return r;
}

Origami apply_Tinv(const Origami& o) {
    Origami r{o.h, compose(o.v, o.h)};
    H2_CHECK_ACTION(o, r);
    return r;
}

Origami apply_S(const Origami& o) {
    Origami r{compose(o.h, inverse(o.v)), o.v};
    H2_CHECK_ACTION(o, r);
    return r;
}

Origami apply_Sinv(const Origami& o) {
    Origami r{compose(o.h, o.v), o.v};
    H2_CHECK_ACTION(o, r);
    return r;
}

Origami apply_gen(Gen g, const Origami& o) {
    switch (g) {
        case Gen::T: return apply_T(o);
        case Gen::Tinv: return apply_Tinv(o);
        case Gen::S: return apply_S(o);
        default: return apply_Sinv(o);
    }
}

Origami apply_word(const GroupWord& w, const Origami& o) {
    Origami cur = o;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply_gen(*it, cur);
    return cur;
}

GroupWord word_P() { return {Gen::T, Gen::Sinv}; }
GroupWord word_R() { return {Gen::Tinv, Gen::S, Gen::Tinv}; }

GroupWord inverse_word(const GroupWord& w) {
    GroupWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (*it) {
            case Gen::T: out.push_back(Gen::Tinv); break;
            case Gen::Tinv: out.push_back(Gen::T); break;
            case Gen::S: out.push_back(Gen::Sinv); break;
            default: out.push_back(Gen::S); break;
        }
    }
    return out;
}

IntMatrix2 matrix_of(Gen g) {
    switch (g) {
        case Gen::T: return {1, 1, 0, 1};
        case Gen::Tinv: return {1, -1, 0, 1};
        case Gen::S: return {1, 0, 1, 1};
        default: return {1, 0, -1, 1};
    }
}

IntMatrix2 matrix_of(const GroupWord& w) {
    IntMatrix2 m;   // identity
    for (Gen g : w) m = m * matrix_of(g);
    return m;
}

GroupWord parse_word(const std::string& text) {
    GroupWord out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        GroupWord base;
        switch (tok[0]) {
            case 'T': base = {Gen::T}; break;
            case 'S': base = {Gen::S}; break;
            case 'P': base = word_P(); break;
            case 'R': base = word_R(); break;
            default: throw ParseError("word token '" + tok + "': unknown generator");
        }
        long long exp = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^')
                throw ParseError("word token '" + tok + "': expected '^' after generator");
            try {
                size_t used = 0;
                exp = std::stoll(tok.substr(2), &used);
                if (used != tok.size() - 2) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError("word token '" + tok + "': bad exponent");
            }
        }
        if (exp < 0) {
            base = inverse_word(base);
            exp = -exp;
        }
        for (long long k = 0; k < exp; ++k) out.insert(out.end(), base.begin(), base.end());
    }
    return out;
}

std::string format_word(const GroupWord& w) {
    if (w.empty()) return "";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        switch (w[i]) {
            case Gen::T: out += "T"; break;
            case Gen::Tinv: out += "T^-1"; break;
            case Gen::S: out += "S"; break;
            default: out += "S^-1"; break;
        }
    }
    return out;
}

} // namespace h2
