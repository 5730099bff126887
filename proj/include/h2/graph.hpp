#pragma once

// Undirected-multigraph analysis for orbit graphs: simplification, left-right
// planarity testing with a verified rotation system, a brute-force
// rotation-system genus oracle, K_{3,3}-subdivision certificate checking, a
// spectral-gap probe, and DOT/JSON export.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "h2/orbit.hpp"

namespace h2 {

struct MultiGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;   // unordered pairs; loops allowed
    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;
};

// Drops loops and collapses parallel edges; neither affects planarity or
// K_{3,3}/K_5 minors.
MultiGraph simplify(const MultiGraph& g);

// Undirected shadow of an orbit graph: one edge per directed labeled edge,
// so every vertex has degree 4 counting a loop as 2.
MultiGraph undirected_shadow(const OrbitGraph& g);

std::vector<int> degrees(const MultiGraph& g);   // loops count twice
bool is_connected(const MultiGraph& g);

struct PlanarityResult {
    bool planar = false;
    // Rotation system of simplify(input) when planar: cyclic neighbor order
    // per vertex. Empty when non-planar.
    std::vector<std::vector<int>> embedding;
    int faces = 0;          // with one shared outer face across components
    bool euler_ok = false;  // v - e + f == 2 verified per component
};

// Left-right (DFS-based) planarity test; runs on simplify(g). A planar
// verdict always carries an embedding verified by Euler's formula.
PlanarityResult is_planar(const MultiGraph& g);

// Independent oracle: minimum genus over all rotation systems of simplify(g),
// summed over connected components. Requires prod_v (deg(v)-1)! <= budget.
int genus_by_rotation_systems(const MultiGraph& g, uint64_t budget = 20000000ull);

struct MinorCertificate {
    std::array<int, 6> branch{};   // a1,a2,a3,b1,b2,b3 as vertex indices
    // paths[i][j] runs from branch[i] to branch[3+j] as a vertex sequence
    std::array<std::array<std::vector<int>, 3>, 3> paths;
};

struct CertificateCheck {
    bool ok = false;
    std::string diagnostic;   // first failure, empty when ok
};

// True result = machine-checked K_{3,3} subdivision = proof of non-planarity.
CertificateCheck verify_k33_certificate(const MultiGraph& g, const MinorCertificate& cert);

struct SpectralReport {
    double gap = 0.0;          // clamp(1 - lambda2/4, 0, 1)
    double lambda2 = 0.0;      // second-largest adjacency eigenvalue by value
    double lambda_min = 0.0;   // smallest adjacency eigenvalue
    const char* convention = "second_largest_by_value";
};

// Spectral gap of a connected 4-regular multigraph (loops contribute 2 to the
// adjacency diagonal); eigenvalues computed iteratively to |error| <= 1e-9.
SpectralReport spectral_gap(const MultiGraph& g);

// DOT with directed generator-labeled edges; byte-stable.
std::string export_dot(const OrbitGraph& g);

// Orbit report JSON extended with vertices and the full edge list;
// export/import round-trips to an identical OrbitGraph.
std::string export_json(const OrbitGraph& g);
OrbitGraph import_json(const std::string& text);

} // namespace h2
