#pragma once

// Orbit enumeration: BFS closure of a seed origami under a generating pair
// ({T,S} or {P,R}), producing a labeled 4-valent multigraph on canonical
// forms, plus the standard seeds and an exhaustive small-n oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "h2/origami.hpp"
#include "h2/sl2.hpp"

namespace h2 {

enum class OrbitKind { Unique, A, B };
enum class GenSet { TS, PR };

const char* to_string(OrbitKind kind);      // "unique" | "A" | "B"
const char* to_string(GenSet gens);         // "TS" | "PR"
OrbitKind orbit_kind_from_string(const std::string& s);
GenSet gen_set_from_string(const std::string& s);

// H(2) orbits existing at a given degree: {Unique} for n = 3 and even n >= 4,
// {A, B} for odd n >= 5.
std::vector<OrbitKind> orbits_for_degree(int n);

struct Budget {
    uint64_t max_vertices = 0;   // 0 = unlimited
    double max_seconds = 0.0;    // 0 = unlimited
};

struct LabeledEdge {
    int src = 0;
    int dst = 0;
    char label = 'T';   // 'T','S' or 'P','R'
    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

struct OrbitGraph {
    int n = 0;
    GenSet gens = GenSet::TS;
    std::string orbit_label;     // "unique", "A", "B" ("" for ad-hoc seeds)
    std::string seed_literal;
    std::vector<CanonicalOrigami> vertices;
    std::vector<LabeledEdge> edges;   // one per (vertex, generator)

    int loop_count() const;
    friend bool operator==(const OrbitGraph&, const OrbitGraph&) = default;
};

// The O_1 seeds of the minor constructions; (B, 5) uses the validated seed
// ((1,2,3,4,5),(1,2,3)) since the n >= 7 formula does not apply there.
// Every seed is checked: stratum (2), primitive, parity matching the orbit.
Origami standard_seed(int n, OrbitKind kind);

// BFS from canonical_form(seed); both generators and both inverses are
// applied to every dequeued vertex; vertices are numbered in discovery order.
OrbitGraph enumerate_orbit(const Origami& seed, GenSet gens, const Budget& budget = {});

// standard_seed + enumerate_orbit, with the orbit label stamped on the graph.
OrbitGraph build_orbit_graph(int n, OrbitKind kind, GenSet gens, const Budget& budget = {});

// Exhaustive oracle (3 <= n <= 7): all pairs in Sym(n)^2 that are connected,
// lie in stratum (2) and are primitive, as distinct canonical forms (sorted).
std::vector<CanonicalOrigami> enumerate_all_h2(int n, const Budget& budget = {});

// Least k >= 1 with T^k(O) equivalent to O.
int t_orbit_length(const Origami& o, int cap = 1000000);

} // namespace h2
