// Left-right planarity test with embedding extraction (the DFS-based
// algorithm of de Fraysseix-Rosenstiehl-Ossona de Mendez in Brandes'
// formulation). Phase 1 orients the graph by DFS and computes lowpoints and
// nesting depths; phase 2 maintains a stack of conflict pairs of return-edge
// intervals; phase 3 resolves edge sides and sorts the adjacency lists into a
// rotation system. Every planar verdict is verified against Euler's formula
// by tracing the faces of the produced embedding.
//
// All DFS passes are iterative: orbit graphs can be deep.

#include "h2/graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace h2 {

namespace {

constexpr int NONE = -1;

struct LRPlanarity {
    int n = 0;
    int m = 0;
    std::vector<int> eu, ev;   // oriented endpoints after phase 1
    std::vector<std::vector<std::pair<int, int>>> adj;   // (neighbor, edge)

    std::vector<int> height, parent_edge;   // per vertex
    std::vector<int> roots;
    std::vector<char> oriented;                            // per edge
    std::vector<int> lowpt, lowpt2, nesting, ref, lowpt_edge, stack_bottom;
    std::vector<int8_t> side;
    std::vector<std::vector<int>> ordered_out;             // oriented out-edges per vertex

    struct Interval {
        int lo = NONE, hi = NONE;
        bool empty() const { return lo == NONE && hi == NONE; }
    };
    struct ConflictPair {
        Interval L, R;
    };
    std::vector<ConflictPair> S;

    // embedding state: half-edge 2e is e's end at eu[e], 2e+1 its end at ev[e];
    // each vertex keeps a circular list of its half-edges in clockwise order
    std::vector<int> nxt, prv, head;
    std::vector<int> left_ref, right_ref;   // anchor half-edges per vertex

    std::vector<std::vector<int>> rotation;

    explicit LRPlanarity(const MultiGraph& simple) {
        n = simple.vertex_count;
        m = static_cast<int>(simple.edges.size());
        eu.resize(m);
        ev.resize(m);
        adj.assign(n, {});
        for (int e = 0; e < m; ++e) {
            auto [u, v] = simple.edges[e];
            eu[e] = u;
            ev[e] = v;
            adj[u].emplace_back(v, e);
            adj[v].emplace_back(u, e);
        }
    }

    bool run() {
        if (n > 2 && m > 3 * n - 6) return false;
        height.assign(n, NONE);
        parent_edge.assign(n, NONE);
        oriented.assign(m, 0);
        lowpt.assign(m, 0);
        lowpt2.assign(m, 0);
        nesting.assign(m, 0);
        ref.assign(m, NONE);
        side.assign(m, 1);
        lowpt_edge.assign(m, NONE);
        stack_bottom.assign(m, 0);

        for (int v = 0; v < n; ++v) {
            if (height[v] != NONE) continue;
            height[v] = 0;
            roots.push_back(v);
            orient_dfs(v);
        }

        ordered_out.assign(n, {});
        for (int e = 0; e < m; ++e) ordered_out[eu[e]].push_back(e);
        sort_ordered_out();

        for (int r : roots)
            if (!test_dfs(r)) return false;

        embed();
        return true;
    }

    void sort_ordered_out() {
        for (auto& out : ordered_out)
            std::stable_sort(out.begin(), out.end(),
                             [&](int a, int b) { return nesting[a] < nesting[b]; });
    }

    void finish_edge(int e) {
        int u = eu[e];
        nesting[e] = 2 * lowpt[e] + (lowpt2[e] < height[u] ? 1 : 0);
        int pe = parent_edge[u];
        if (pe == NONE) return;
        if (lowpt[e] < lowpt[pe]) {
            lowpt2[pe] = std::min(lowpt[pe], lowpt2[e]);
            lowpt[pe] = lowpt[e];
        } else if (lowpt[e] > lowpt[pe]) {
            lowpt2[pe] = std::min(lowpt2[pe], lowpt[e]);
        } else {
            lowpt2[pe] = std::min(lowpt2[pe], lowpt2[e]);
        }
    }

    void orient_dfs(int r) {
        struct Frame {
            int v;
            size_t i;
        };
        std::vector<Frame> stack{{r, 0}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            bool descended = false;
            while (f.i < adj[v].size()) {
                auto [w, e] = adj[v][f.i];
                ++f.i;
                if (oriented[e]) continue;
                oriented[e] = 1;
                eu[e] = v;
                ev[e] = w;
                lowpt[e] = height[v];
                lowpt2[e] = height[v];
                if (height[w] == NONE) {   // tree edge
                    parent_edge[w] = e;
                    height[w] = height[v] + 1;
                    stack.push_back({w, 0});
                    descended = true;
                    break;
                }
                lowpt[e] = height[w];      // back edge
                finish_edge(e);
            }
            if (descended) continue;
            stack.pop_back();
            int pe = parent_edge[v];
            if (pe != NONE) finish_edge(pe);
        }
    }

    static bool conflicting(const Interval& i, int b, const std::vector<int>& lowpt) {
        return !i.empty() && lowpt[i.hi] > lowpt[b];
    }

    int lowest(const ConflictPair& p) const {
        if (p.L.empty()) return lowpt[p.R.lo];
        if (p.R.empty()) return lowpt[p.L.lo];
        return std::min(lowpt[p.L.lo], lowpt[p.R.lo]);
    }

    bool add_constraints(int ei, int pe) {
        ConflictPair P;
        // merge return edges of ei into P.R
        do {
            assert(static_cast<int>(S.size()) > stack_bottom[ei]);
            ConflictPair Q = S.back();
            S.pop_back();
            if (!Q.L.empty()) std::swap(Q.L, Q.R);
            if (!Q.L.empty()) return false;   // not planar
            if (lowpt[Q.R.lo] > lowpt[pe]) {
                if (P.R.empty())
                    P.R.hi = Q.R.hi;
                else
                    ref[P.R.lo] = Q.R.hi;
                P.R.lo = Q.R.lo;
            } else {
                ref[Q.R.lo] = lowpt_edge[pe];   // align
            }
        } while (static_cast<int>(S.size()) > stack_bottom[ei]);

        // merge conflicting return edges of earlier siblings into P.L
        while (!S.empty() && (conflicting(S.back().L, ei, lowpt) ||
                              conflicting(S.back().R, ei, lowpt))) {
            ConflictPair Q = S.back();
            S.pop_back();
            if (conflicting(Q.R, ei, lowpt)) std::swap(Q.L, Q.R);
            if (conflicting(Q.R, ei, lowpt)) return false;   // not planar
            if (P.R.lo != NONE) ref[P.R.lo] = Q.R.hi;        // merge below lowpt(ei) into P.R
            if (Q.R.lo != NONE) P.R.lo = Q.R.lo;
            if (P.L.empty())
                P.L.hi = Q.L.hi;
            else
                ref[P.L.lo] = Q.L.hi;
            P.L.lo = Q.L.lo;
        }
        if (!(P.L.empty() && P.R.empty())) S.push_back(P);
        return true;
    }

    void remove_back_edges(int e) {
        int u = eu[e];
        // drop entire conflict pairs returning exactly to u
        while (!S.empty() && lowest(S.back()) == height[u]) {
            ConflictPair P = S.back();
            S.pop_back();
            if (P.L.lo != NONE) side[P.L.lo] = -1;
        }
        if (!S.empty()) {   // one more pair: trim its intervals
            ConflictPair P = S.back();
            S.pop_back();
            while (P.L.hi != NONE && ev[P.L.hi] == u) P.L.hi = ref[P.L.hi];
            if (P.L.hi == NONE && P.L.lo != NONE) {
                ref[P.L.lo] = P.R.lo;
                side[P.L.lo] = -1;
                P.L.lo = NONE;
            }
            while (P.R.hi != NONE && ev[P.R.hi] == u) P.R.hi = ref[P.R.hi];
            if (P.R.hi == NONE && P.R.lo != NONE) {
                ref[P.R.lo] = P.L.lo;
                side[P.R.lo] = -1;
                P.R.lo = NONE;
            }
            S.push_back(P);
        }
        if (lowpt[e] < height[u]) {   // e has a return edge; take the highest
            int hl = S.empty() ? NONE : S.back().L.hi;
            int hr = S.empty() ? NONE : S.back().R.hi;
            if (hl != NONE && (hr == NONE || lowpt[hl] > lowpt[hr]))
                ref[e] = hl;
            else
                ref[e] = hr;
        }
    }

    // post-processing of out-edge e at vertex v once its subtree (or the back
    // edge itself) is complete
    bool finish_out_edge(int v, int e) {
        if (lowpt[e] < height[v]) {   // e has a return edge
            int pe = parent_edge[v];
            if (e == ordered_out[v][0]) {
                assert(pe != NONE);
                lowpt_edge[pe] = lowpt_edge[e];
            } else if (!add_constraints(e, pe)) {
                return false;
            }
        }
        return true;
    }

    bool test_dfs(int r) {
        struct Frame {
            int v;
            size_t i;
        };
        std::vector<Frame> stack{{r, 0}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            bool descended = false;
            while (f.i < ordered_out[v].size()) {
                int e = ordered_out[v][f.i];
                ++f.i;
                stack_bottom[e] = static_cast<int>(S.size());
                int w = ev[e];
                if (e == parent_edge[w]) {   // tree edge
                    stack.push_back({w, 0});
                    descended = true;
                    break;
                }
                lowpt_edge[e] = e;           // back edge
                S.push_back({Interval{}, Interval{e, e}});
                if (!finish_out_edge(v, e)) return false;
            }
            if (descended) continue;
            stack.pop_back();
            int pe = parent_edge[v];
            if (pe != NONE) {
                remove_back_edges(pe);
                // complete the tree edge pe from its tail's perspective
                if (!finish_out_edge(eu[pe], pe)) return false;
            }
        }
        return true;
    }

    int resolve_side(int e) {
        // follow the ref chain, then fold the signs back
        std::vector<int> chain;
        int x = e;
        while (x != NONE && ref[x] != NONE) {
            chain.push_back(x);
            x = ref[x];
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            side[*it] = static_cast<int8_t>(side[*it] * side[ref[*it]]);
            ref[*it] = NONE;
        }
        return side[e];
    }

    void list_push_back(int v, int he) {
        if (head[v] == NONE) {
            head[v] = he;
            nxt[he] = prv[he] = he;
            return;
        }
        int h = head[v], t = prv[h];
        nxt[t] = he;
        prv[he] = t;
        nxt[he] = h;
        prv[h] = he;
    }

    void list_push_front(int v, int he) {
        list_push_back(v, he);
        head[v] = he;
    }

    void list_insert_after(int anchor, int he) {
        int a = anchor, b = nxt[anchor];
        nxt[a] = he;
        prv[he] = a;
        nxt[he] = b;
        prv[b] = he;
    }

    void list_insert_before(int anchor, int he) { list_insert_after(prv[anchor], he); }

    void embed() {
        for (int e = 0; e < m; ++e) nesting[e] *= resolve_side(e);
        sort_ordered_out();

        nxt.assign(2 * m, NONE);
        prv.assign(2 * m, NONE);
        head.assign(n, NONE);
        left_ref.assign(n, NONE);
        right_ref.assign(n, NONE);

        for (int v = 0; v < n; ++v)
            for (int e : ordered_out[v]) list_push_back(v, 2 * e);

        struct Frame {
            int v;
            size_t i;
        };
        for (int r : roots) {
            std::vector<Frame> stack{{r, 0}};
            while (!stack.empty()) {
                Frame& f = stack.back();
                int v = f.v;
                bool descended = false;
                while (f.i < ordered_out[v].size()) {
                    int e = ordered_out[v][f.i];
                    ++f.i;
                    int w = ev[e];
                    if (e == parent_edge[w]) {   // tree edge
                        list_push_front(w, 2 * e + 1);
                        left_ref[v] = right_ref[v] = 2 * e;
                        stack.push_back({w, 0});
                        descended = true;
                        break;
                    }
                    // back edge: insert at the ancestor w next to the anchors
                    if (side[e] == 1) {
                        list_insert_after(right_ref[w], 2 * e + 1);
                    } else {
                        list_insert_before(left_ref[w], 2 * e + 1);
                        if (left_ref[w] == head[w]) head[w] = 2 * e + 1;
                        left_ref[w] = 2 * e + 1;
                    }
                }
                if (descended) continue;
                stack.pop_back();
            }
        }

        rotation.assign(n, {});
        for (int v = 0; v < n; ++v) {
            if (head[v] == NONE) continue;
            int he = head[v];
            do {
                int e = he >> 1;
                rotation[v].push_back((he & 1) ? eu[e] : ev[e]);
                he = nxt[he];
            } while (he != head[v]);
        }
    }
};

// Traces the faces of a rotation system and checks Euler's formula per
// connected component. Returns the total face count with one shared outer
// face, or -1 when some component violates v - e + f == 2.
int euler_faces(const MultiGraph& simple, const std::vector<std::vector<int>>& rotation) {
    const int n = simple.vertex_count;
    const int m = static_cast<int>(simple.edges.size());

    // dart (v, k) = k-th rotation slot at v; index darts contiguously
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<int>(rotation[v].size());
    if (offset[n] != 2 * m) return -1;

    // position of neighbor u in rotation[v] (simple graph: unique)
    auto slot_of = [&](int v, int u) {
        const auto& r = rotation[v];
        for (size_t k = 0; k < r.size(); ++k)
            if (r[k] == u) return static_cast<int>(k);
        return -1;
    };

    std::vector<char> visited(2 * m, 0);
    std::vector<int> faces_per_vertex_comp;   // face count charged to components

    // component ids
    MultiGraph g = simple;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
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

    std::vector<int> comp_v(n, 0), comp_e(n, 0), comp_f(n, 0);
    for (int v = 0; v < n; ++v) comp_v[find(v)] += 1;
    for (auto [u, v] : g.edges) comp_e[find(u)] += 1;

    for (int v = 0; v < n; ++v) {
        for (size_t k = 0; k < rotation[v].size(); ++k) {
            int d = offset[v] + static_cast<int>(k);
            if (visited[d]) continue;
            comp_f[find(v)] += 1;
            int cv = v, ck = static_cast<int>(k);
            while (true) {
                int dd = offset[cv] + ck;
                if (visited[dd]) break;
                visited[dd] = 1;
                int w = rotation[cv][ck];          // dart cv -> w
                int back = slot_of(w, cv);         // reverse dart at w
                if (back < 0) return -1;
                ck = (back + 1) % static_cast<int>(rotation[w].size());
                cv = w;
            }
        }
    }

    int total_faces = 0, comps = 0;
    for (int r = 0; r < n; ++r) {
        if (find(r) != r) continue;
        ++comps;
        int f = comp_e[r] == 0 ? 1 : comp_f[r];
        if (comp_v[r] - comp_e[r] + f != 2) return -1;
        total_faces += f;
    }
    if (n == 0) return 1;
    return total_faces - (comps - 1);
}

} // namespace

PlanarityResult is_planar(const MultiGraph& g0) {
    MultiGraph g = simplify(g0);
    PlanarityResult result;
    if (g.vertex_count == 0) {
        result.planar = true;
        result.faces = 1;
        result.euler_ok = true;
        return result;
    }

    LRPlanarity lr(g);
    if (!lr.run()) {
        result.planar = false;
        return result;
    }
    result.planar = true;
    result.embedding = std::move(lr.rotation);
    int faces = euler_faces(g, result.embedding);
    if (faces < 0)
        throw Error("is_planar: produced embedding failed Euler verification");
    result.faces = faces;
    result.euler_ok = true;
    return result;
}

} // namespace h2
