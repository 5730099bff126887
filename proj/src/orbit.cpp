#include "h2/orbit.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace h2 {

const char* to_string(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::Unique: return "unique";
        case OrbitKind::A: return "A";
        default: return "B";
    }
}

const char* to_string(GenSet gens) { return gens == GenSet::TS ? "TS" : "PR"; }

OrbitKind orbit_kind_from_string(const std::string& s) {
    if (s == "unique") return OrbitKind::Unique;
    if (s == "A") return OrbitKind::A;
    if (s == "B") return OrbitKind::B;
    throw ParseError("unknown orbit '" + s + "' (expected unique, A or B)");
}

GenSet gen_set_from_string(const std::string& s) {
    if (s == "TS") return GenSet::TS;
    if (s == "PR") return GenSet::PR;
    throw ParseError("unknown generator set '" + s + "' (expected TS or PR)");
}

std::vector<OrbitKind> orbits_for_degree(int n) {
    if (n == 3 || (n >= 4 && n % 2 == 0)) return {OrbitKind::Unique};
    if (n >= 5 && n % 2 == 1) return {OrbitKind::A, OrbitKind::B};
    throw InvalidCombination("no primitive H(2) origami has " + std::to_string(n) + " squares");
}

int OrbitGraph::loop_count() const {
    int loops = 0;
    for (const auto& e : edges)
        if (e.src == e.dst) ++loops;
    return loops;
}

namespace {

Permutation make_cycle(int degree, const std::vector<int>& pts) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    for (size_t k = 0; k < pts.size(); ++k) img[pts[k] - 1] = pts[(k + 1) % pts.size()];
    return Permutation::from_images(std::move(img));
}

std::vector<int> up_range(int from, int to) {
    std::vector<int> out;
    for (int x = from; x <= to; ++x) out.push_back(x);
    return out;
}

struct BudgetClock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    const Budget* budget;

    explicit BudgetClock(const Budget& b) : budget(&b) {}

    void check(uint64_t vertices, const char* what) const {
        if (budget->max_vertices && vertices > budget->max_vertices)
            throw BudgetExceeded(std::string(what) + ": vertex budget of " +
                                 std::to_string(budget->max_vertices) + " exceeded");
        if (budget->max_seconds > 0) {
            double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (elapsed > budget->max_seconds)
                throw BudgetExceeded(std::string(what) + ": time budget of " +
                                     std::to_string(budget->max_seconds) + " s exceeded");
        }
    }
};

} // namespace

Origami standard_seed(int n, OrbitKind kind) {
    Origami seed;
    switch (kind) {
        case OrbitKind::Unique:
            if (!(n == 3 || (n >= 4 && n % 2 == 0)))
                throw InvalidCombination("unique orbit needs n = 3 or even n >= 4, got n = " +
                                         std::to_string(n));
            if (n == 3)
                seed = make_origami(make_cycle(3, {1, 2, 3}), make_cycle(3, {1, 3}));
            else
                seed = make_origami(make_cycle(n, {n - 1, n}), make_cycle(n, up_range(1, n - 1)));
            break;
        case OrbitKind::A:
            if (!(n >= 5 && n % 2 == 1))
                throw InvalidCombination("A orbit needs odd n >= 5, got n = " + std::to_string(n));
            seed = make_origami(make_cycle(n, {n - 1, n}), make_cycle(n, up_range(1, n - 1)));
            break;
        default:
            if (!(n >= 5 && n % 2 == 1))
                throw InvalidCombination("B orbit needs odd n >= 5, got n = " + std::to_string(n));
            if (n == 5)
                seed = make_origami(make_cycle(5, {1, 2, 3, 4, 5}), make_cycle(5, {1, 2, 3}));
            else
                seed = make_origami(make_cycle(n, {n - 2, n - 1, n}), make_cycle(n, up_range(1, n - 2)));
            break;
    }

    if (!stratum(seed).is_h2())
        throw SeedValidationFailed("seed " + format_origami(seed) + " is not in H(2)");
    if (!is_primitive(seed))
        throw SeedValidationFailed("seed " + format_origami(seed) + " is not primitive");
    bool both_even = sign(seed.h) == 1 && sign(seed.v) == 1;
    if (kind == OrbitKind::B ? !both_even : both_even)
        throw SeedValidationFailed("seed " + format_origami(seed) +
                                   " has the wrong generator parity for orbit " +
                                   to_string(kind));
    return seed;
}

OrbitGraph enumerate_orbit(const Origami& seed, GenSet gens, const Budget& budget) {
    BudgetClock clock(budget);

    OrbitGraph graph;
    graph.n = seed.degree();
    graph.gens = gens;
    graph.seed_literal = format_origami(seed);

    const char label1 = gens == GenSet::TS ? 'T' : 'P';
    const char label2 = gens == GenSet::TS ? 'S' : 'R';
    const GroupWord p = word_P(), pinv = inverse_word(p);
    const GroupWord r = word_R(), rinv = inverse_word(r);

    auto step = [&](int which, const Origami& o) {
        if (gens == GenSet::TS) {
            switch (which) {
                case 0: return apply_T(o);
                case 1: return apply_S(o);
                case 2: return apply_Tinv(o);
                default: return apply_Sinv(o);
            }
        }
        switch (which) {
            case 0: return apply_word(p, o);
            case 1: return apply_word(r, o);
            case 2: return apply_word(pinv, o);
            default: return apply_word(rinv, o);
        }
    };

    std::unordered_map<CanonicalOrigami, int, CanonicalHash> index;
    CanonicalOrigami c0 = canonical_form(seed);
    graph.vertices.push_back(c0);
    index.emplace(std::move(c0), 0);

    auto intern = [&](CanonicalOrigami c) {
        auto it = index.find(c);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(graph.vertices.size());
        graph.vertices.push_back(c);
        index.emplace(std::move(c), id);
        return id;
    };

    for (size_t i = 0; i < graph.vertices.size(); ++i) {
        if ((i & 0xff) == 0) clock.check(graph.vertices.size(), "enumerate_orbit");
        Origami rep = graph.vertices[i].representative();
        for (int which = 0; which < 4; ++which) {
            int target = intern(canonical_form(step(which, rep)));
            if (which < 2)
                graph.edges.push_back({static_cast<int>(i), target, which == 0 ? label1 : label2});
        }
    }
    return graph;
}

OrbitGraph build_orbit_graph(int n, OrbitKind kind, GenSet gens, const Budget& budget) {
    OrbitGraph graph = enumerate_orbit(standard_seed(n, kind), gens, budget);
    graph.orbit_label = to_string(kind);
    return graph;
}

std::vector<CanonicalOrigami> enumerate_all_h2(int n, const Budget& budget) {
    if (n < 3 || n > 7)
        throw BudgetExceeded("enumerate_all_h2 is brute force; supported range is 3 <= n <= 7");
    BudgetClock clock(budget);

    std::unordered_set<CanonicalOrigami, CanonicalHash> classes;
    std::vector<int> h_img(n), v_img(n), hinv(n + 1), vinv(n + 1), comm(n + 1);
    std::iota(h_img.begin(), h_img.end(), 1);

    uint64_t pairs = 0;
    do {
        for (int x = 1; x <= n; ++x) hinv[h_img[x - 1]] = x;
        std::iota(v_img.begin(), v_img.end(), 1);
        do {
            if ((++pairs & 0xffff) == 0) clock.check(classes.size(), "enumerate_all_h2");
            for (int x = 1; x <= n; ++x) vinv[v_img[x - 1]] = x;
            // commutator h v h^-1 v^-1, then count moved points: a single
            // 3-cycle moves exactly three
            int moved = 0;
            for (int x = 1; x <= n; ++x) {
                comm[x] = h_img[v_img[hinv[vinv[x]] - 1] - 1];
                if (comm[x] != x) ++moved;
            }
            if (moved != 3) continue;
            Origami o{Permutation::from_images(h_img), Permutation::from_images(v_img)};
            if (!transitive_pair(o.h, o.v)) continue;
            if (!is_primitive(o)) continue;
            classes.insert(canonical_form(o));
        } while (std::next_permutation(v_img.begin(), v_img.end()));
    } while (std::next_permutation(h_img.begin(), h_img.end()));

    std::vector<CanonicalOrigami> out(classes.begin(), classes.end());
    std::sort(out.begin(), out.end());
    return out;
}

int t_orbit_length(const Origami& o, int cap) {
    const CanonicalOrigami start = canonical_form(o);
    Origami cur = o;
    for (int k = 1; k <= cap; ++k) {
        cur = apply_T(cur);
        if (canonical_form(cur) == start) return k;
    }
    throw BudgetExceeded("t_orbit_length: no return within " + std::to_string(cap) + " steps");
}

} // namespace h2
