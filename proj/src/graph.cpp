#include "h2/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_set>

namespace h2 {

namespace {

void check_edges(const MultiGraph& g) {
    for (auto [u, v] : g.edges)
        if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count)
            throw Error("multigraph edge endpoint out of range");
}

std::vector<int> component_ids(const MultiGraph& g, int& count) {
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [u, v] : g.edges) {
        int ru = find(u), rv = find(v);
        if (ru != rv) parent[ru] = rv;
    }
    std::vector<int> id(g.vertex_count, -1);
    count = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        int r = find(v);
        if (id[r] == -1) id[r] = count++;
        id[v] = id[r];
    }
    return id;
}

} // namespace

MultiGraph simplify(const MultiGraph& g) {
    check_edges(g);
    MultiGraph out;
    out.vertex_count = g.vertex_count;
    std::unordered_set<uint64_t> seen;
    for (auto [u, v] : g.edges) {
        if (u == v) continue;
        int a = std::min(u, v), b = std::max(u, v);
        uint64_t key = static_cast<uint64_t>(a) * static_cast<uint64_t>(g.vertex_count) + b;
        if (seen.insert(key).second) out.edges.emplace_back(a, b);
    }
    return out;
}

MultiGraph undirected_shadow(const OrbitGraph& g) {
    MultiGraph out;
    out.vertex_count = static_cast<int>(g.vertices.size());
    for (const auto& e : g.edges) out.edges.emplace_back(e.src, e.dst);
    return out;
}

std::vector<int> degrees(const MultiGraph& g) {
    std::vector<int> deg(g.vertex_count, 0);
    for (auto [u, v] : g.edges) {
        deg[u] += 1;
        deg[v] += 1;   // a loop contributes 2 in total
    }
    return deg;
}

bool is_connected(const MultiGraph& g) {
    if (g.vertex_count <= 1) return true;
    int comps = 0;
    component_ids(g, comps);
    return comps == 1;
}

// ---------------------------------------------------------------------------
// Rotation-system genus oracle
// ---------------------------------------------------------------------------

namespace {

// Minimum genus of one connected component, given local vertex/edge ids.
// rot[v] lists incident edge ids; the first entry stays fixed and the tail is
// run through all permutations, which enumerates the (deg-1)! distinct cyclic
// orders at v.
int component_min_genus(int nv, const std::vector<std::pair<int, int>>& edges) {
    const int m = static_cast<int>(edges.size());
    if (m == 0) return 0;
    std::vector<std::vector<int>> rot(nv);
    for (int e = 0; e < m; ++e) {
        rot[edges[e].first].push_back(e);
        rot[edges[e].second].push_back(e);
    }
    for (auto& r : rot) std::sort(r.begin() + 1, r.end());

    std::vector<int> pos(static_cast<size_t>(nv) * m);   // pos[v*m+e] = index of e at v
    std::vector<int> succ(2 * m);                         // dart 2e: u->v, 2e+1: v->u
    std::vector<char> visited(2 * m);

    int best = INT_MAX;
    while (true) {
        for (int v = 0; v < nv; ++v)
            for (size_t k = 0; k < rot[v].size(); ++k) pos[static_cast<size_t>(v) * m + rot[v][k]] = static_cast<int>(k);
        for (int d = 0; d < 2 * m; ++d) {
            int e = d >> 1;
            int head = (d & 1) ? edges[e].first : edges[e].second;
            const auto& r = rot[head];
            int e2 = r[(pos[static_cast<size_t>(head) * m + e] + 1) % r.size()];
            succ[d] = (edges[e2].first == head) ? 2 * e2 : 2 * e2 + 1;
        }
        std::fill(visited.begin(), visited.end(), 0);
        int faces = 0;
        for (int d = 0; d < 2 * m; ++d) {
            if (visited[d]) continue;
            ++faces;
            int cur = d;
            do {
                visited[cur] = 1;
                cur = succ[cur];
            } while (cur != d);
        }
        int genus = (2 - nv + m - faces) / 2;
        best = std::min(best, genus);
        if (best == 0) return 0;

        // odometer over per-vertex rotations
        int v = 0;
        for (; v < nv; ++v) {
            if (rot[v].size() <= 2) continue;
            if (std::next_permutation(rot[v].begin() + 1, rot[v].end())) break;
        }
        if (v == nv) break;
    }
    return best;
}

} // namespace

int genus_by_rotation_systems(const MultiGraph& g0, uint64_t budget) {
    MultiGraph g = simplify(g0);
    auto deg = degrees(g);
    long double systems = 1;
    for (int d : deg)
        for (int k = 2; k < d; ++k) {
            systems *= k;
            if (systems > static_cast<long double>(budget))
                throw BudgetExceeded("genus oracle: rotation-system count exceeds budget of " +
                                     std::to_string(budget));
        }

    int comps = 0;
    std::vector<int> comp = component_ids(g, comps);
    std::vector<int> local(g.vertex_count, -1);
    int total = 0;
    for (int c = 0; c < comps; ++c) {
        int nv = 0;
        for (int v = 0; v < g.vertex_count; ++v)
            if (comp[v] == c) local[v] = nv++;
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges)
            if (comp[u] == c) edges.emplace_back(local[u], local[v]);
        total += component_min_genus(nv, edges);
    }
    return total;
}

// ---------------------------------------------------------------------------
// K_{3,3} subdivision certificate
// ---------------------------------------------------------------------------

CertificateCheck verify_k33_certificate(const MultiGraph& g, const MinorCertificate& cert) {
    check_edges(g);
    auto path_name = [](int i, int j) {
        return std::to_string(i + 1) + std::to_string(j + 4);
    };

    for (int k = 0; k < 6; ++k) {
        if (cert.branch[k] < 0 || cert.branch[k] >= g.vertex_count)
            return {false, "branch vertex #" + std::to_string(k + 1) + " out of range"};
        for (int l = 0; l < k; ++l)
            if (cert.branch[k] == cert.branch[l])
                return {false, "branch vertices #" + std::to_string(l + 1) + " and #" +
                                   std::to_string(k + 1) + " coincide (vertex " +
                                   std::to_string(cert.branch[k]) + ")"};
    }

    std::unordered_set<uint64_t> adjacent;
    for (auto [u, v] : g.edges) {
        if (u == v) continue;
        int a = std::min(u, v), b = std::max(u, v);
        adjacent.insert(static_cast<uint64_t>(a) * static_cast<uint64_t>(g.vertex_count) + b);
    }
    auto has_edge = [&](int u, int v) {
        int a = std::min(u, v), b = std::max(u, v);
        return adjacent.count(static_cast<uint64_t>(a) * static_cast<uint64_t>(g.vertex_count) + b) > 0;
    };

    std::unordered_set<int> branch_set(cert.branch.begin(), cert.branch.end());
    std::unordered_set<int> interior_seen;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const auto& path = cert.paths[i][j];
            const std::string name = "path " + path_name(i, j);
            if (path.size() < 2) return {false, name + " has fewer than two vertices"};
            if (path.front() != cert.branch[i])
                return {false, name + " does not start at its branch vertex"};
            if (path.back() != cert.branch[3 + j])
                return {false, name + " does not end at its branch vertex"};
            for (size_t k = 0; k + 1 < path.size(); ++k) {
                if (path[k] == path[k + 1])
                    return {false, name + " repeats vertex " + std::to_string(path[k]) +
                                       " consecutively"};
                if (!has_edge(path[k], path[k + 1]))
                    return {false, name + " step " + std::to_string(k) + ": vertices " +
                                       std::to_string(path[k]) + " and " +
                                       std::to_string(path[k + 1]) + " are not adjacent"};
            }
            for (size_t k = 1; k + 1 < path.size(); ++k) {
                int x = path[k];
                if (branch_set.count(x))
                    return {false, name + " passes through branch vertex " + std::to_string(x)};
                if (!interior_seen.insert(x).second)
                    return {false, name + " shares interior vertex " + std::to_string(x) +
                                       " with another path"};
            }
        }
    }
    return {true, ""};
}

} // namespace h2
