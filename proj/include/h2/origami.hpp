#pragma once

// Origamis as pairs of permutations: connectedness validation, stratum from
// the commutator, primitivity and monodromy classification, and a canonical
// form for equivalence under simultaneous conjugation.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "h2/perm.hpp"

namespace h2 {

struct Origami {
    Permutation h;   // horizontal gluing
    Permutation v;   // vertical gluing
    int degree() const { return h.degree(); }
    friend bool operator==(const Origami&, const Origami&) = default;
};

// Validating constructor: equal degrees and <h,v> transitive on {1..n}.
Origami make_origami(Permutation h, Permutation v);

bool transitive_pair(const Permutation& h, const Permutation& v);

// [h,v] = h v h^-1 v^-1
Permutation commutator(const Origami& o);

struct StratumSignature {
    std::vector<int> zero_orders;   // non-increasing; empty for torus covers
    int genus() const;
    bool is_h2() const { return zero_orders.size() == 1 && zero_orders[0] == 2; }
    std::string to_string() const;  // "(2)", "()", "(1,1)", ...
    friend bool operator==(const StratumSignature&, const StratumSignature&) = default;
};

StratumSignature stratum(const Origami& o);

// Minimal-block refinement: for each p, close {1,p} under the generators and
// test whether the closure is all of {1..n}. Assumes a connected origami.
bool is_primitive(const Origami& o);

enum class MonodromyLabel { SymmetricFull, AlternatingContained, Other };

struct MonodromyClass {
    MonodromyLabel label = MonodromyLabel::Other;
    bool is_transitive = false;
    bool is_primitive = false;
    bool h_even = false;
    bool v_even = false;
};

const char* to_string(MonodromyLabel label);

// SymmetricFull is applied under the sufficient evidence transitive +
// primitive + an odd generator; the flags carry the evidence.
MonodromyClass monodromy_class(const Origami& o);

// Conjugation-invariant key: the lexicographically least relabeling over all
// BFS starts, encoded as the 2n-sequence (h' images, v' images).
struct CanonicalOrigami {
    int n = 0;
    std::vector<int> encoding;   // 2n entries, 1-based images

    Origami representative() const;
    std::string to_string() const;                       // comma-separated ints
    static CanonicalOrigami from_string(const std::string& text);

    friend bool operator==(const CanonicalOrigami&, const CanonicalOrigami&) = default;
    friend auto operator<=>(const CanonicalOrigami&, const CanonicalOrigami&) = default;
};

struct CanonicalHash {
    size_t operator()(const CanonicalOrigami& c) const;
};

CanonicalOrigami canonical_form(const Origami& o);

// Textual origami literal: "h=<cycles>; v=<cycles>; n=<int>".
std::string format_origami(const Origami& o);
Origami parse_origami(const std::string& text);

} // namespace h2
