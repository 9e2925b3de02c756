#pragma once

// Shared graph builders for the test suite, plus seeded random generators
// for graphs and vanishing subgroups.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "crystal/graph.hpp"
#include "crystal/invariants.hpp"
#include "crystal/linalg.hpp"

namespace crystal::testing {

using EdgeSpec = std::tuple<std::string, std::string, std::string>;

// one vertex, two loops: the square lattice
inline Graph square_graph() { return Graph({"o"}, {{"e1", "o", "o"}, {"e2", "o", "o"}}); }

// two vertices, three parallel edges: the honeycomb
inline Graph theta_graph() {
    return Graph({"x", "y"}, {{"e1", "x", "y"}, {"e2", "x", "y"}, {"e3", "x", "y"}});
}

// one vertex, three loops
inline Graph b3_graph() {
    return Graph({"o"}, {{"e1", "o", "o"}, {"e2", "o", "o"}, {"e3", "o", "o"}});
}

inline Graph kagome_graph() {
    return Graph({"P", "Q", "R"}, {{"e1", "Q", "P"},
                                   {"e2", "R", "Q"},
                                   {"e3", "P", "R"},
                                   {"e4", "P", "Q"},
                                   {"e5", "Q", "R"},
                                   {"e6", "R", "P"}});
}

inline Graph dice_graph() {
    return Graph({"x", "y", "u"}, {{"e1", "x", "u"},
                                   {"e2", "x", "u"},
                                   {"e3", "x", "u"},
                                   {"e4", "y", "u"},
                                   {"e5", "y", "u"},
                                   {"e6", "y", "u"}});
}

// the 8-4 pattern: squares and octagons
inline Graph e84_graph() {
    return Graph({"a", "b", "c", "d"}, {{"e1", "a", "c"},
                                        {"e2", "a", "d"},
                                        {"e3", "a", "b"},
                                        {"e4", "d", "b"},
                                        {"e5", "b", "c"},
                                        {"e6", "c", "d"}});
}

inline Graph cairo_graph() {
    return Graph({"a", "b", "c", "d", "e", "f"}, {{"e1", "c", "a"},
                                                  {"e2", "c", "b"},
                                                  {"e3", "c", "e"},
                                                  {"e4", "c", "d"},
                                                  {"e5", "a", "e"},
                                                  {"e6", "b", "d"},
                                                  {"e7", "f", "d"},
                                                  {"e8", "f", "e"},
                                                  {"e9", "a", "f"},
                                                  {"e10", "b", "f"}});
}

inline Graph complete_graph(int n) {
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<EdgeSpec> es;
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({"e" + std::to_string(++k), vs[i], vs[j]});
    return Graph(vs, es);
}

inline OneChain chain(const Graph& g, const std::map<std::string, long>& coeffs) {
    std::map<std::string, Int> m;
    for (const auto& [id, c] : coeffs) m[id] = Int(c);
    return chain_from_map(g, m);
}

inline VanishingSubgroup subgroup(const Graph& g,
                                  const std::vector<std::map<std::string, long>>& gens) {
    HomologyBasis hb = homology_basis(g);
    std::vector<OneChain> cs;
    for (const auto& m : gens) cs.push_back(chain(g, m));
    return make_vanishing_subgroup(g, hb, cs);
}

inline VanishingSubgroup triangular_h(const Graph& b3) {
    return subgroup(b3, {{{"e1", 1}, {"e2", 1}, {"e3", 1}}});
}

inline VanishingSubgroup b3_sqrt6_h(const Graph& b3) {
    return subgroup(b3, {{{"e1", 1}, {"e2", 1}, {"e3", 2}}});
}

inline VanishingSubgroup kagome_h(const Graph& kag) {
    return subgroup(kag, {{{"e1", 1}, {"e2", 1}, {"e3", 1}}, {{"e4", 1}, {"e5", 1}, {"e6", 1}}});
}

inline VanishingSubgroup dice_h(const Graph& dice) {
    return subgroup(dice, {{{"e1", 1}, {"e3", -1}, {"e4", 1}, {"e5", -1}},
                           {{"e2", -1}, {"e3", 1}, {"e5", 1}, {"e6", -1}}});
}

inline VanishingSubgroup e84_h(const Graph& e84) {
    return subgroup(e84, {{{"e2", -1}, {"e3", 1}, {"e5", 1}, {"e6", 1}}});
}

inline VanishingSubgroup cairo_h(const Graph& cairo) {
    return subgroup(cairo, {{{"e3", 1}, {"e4", -1}, {"e5", -1}, {"e7", 1}, {"e9", 1}},
                            {{"e2", 1}, {"e4", -1}, {"e5", -1}, {"e6", 1}, {"e8", 1}, {"e9", 1}},
                            {{"e1", -1}, {"e2", 1}, {"e5", -1}, {"e8", 1}, {"e10", 1}}});
}

/* Random connected multigraph with at most 8 edges, 1 to 4 vertices, every
   degree >= 3 and b1 >= 2: spanning tree first, then random edges (loops
   allowed) until the degree condition holds. Rejected draws retry. */
inline Graph random_graph(std::mt19937_64& rng) {
    for (;;) {
        int nv = static_cast<int>(rng() % 4) + 1;
        std::vector<std::pair<int, int>> es;
        std::vector<int> deg(nv, 0);
        for (int i = 1; i < nv; ++i) {
            int p = static_cast<int>(rng() % i);
            if (rng() % 2) es.emplace_back(p, i);
            else es.emplace_back(i, p);
            ++deg[p], ++deg[i];
        }
        int extra = static_cast<int>(rng() % 3);
        bool ok = true;
        for (;;) {
            bool low = false;
            for (int v = 0; v < nv; ++v) low |= deg[v] < 3;
            bool need_b1 = static_cast<int>(es.size()) < nv + 1;
            if (!low && !need_b1 && extra <= 0) break;
            if (es.size() >= 8) { ok = !low && !need_b1; break; }
            int a = static_cast<int>(rng() % nv);
            int b = static_cast<int>(rng() % nv);
            es.emplace_back(a, b);
            if (a == b) deg[a] += 2;
            else ++deg[a], ++deg[b];
            --extra;
        }
        if (!ok) continue;
        std::vector<std::string> vids;
        for (int v = 0; v < nv; ++v) vids.push_back("v" + std::to_string(v));
        std::vector<EdgeSpec> specs;
        for (size_t i = 0; i < es.size(); ++i)
            specs.push_back({"e" + std::to_string(i + 1), vids[es[i].first], vids[es[i].second]});
        Graph g(std::move(vids), std::move(specs));
        g.validate();
        return g;
    }
}

// Random corank-2 direct summand: random homology rows, saturated, checked.
// Returns nothing when the draw keeps failing (caller skips that graph).
inline std::optional<VanishingSubgroup> random_subgroup(const Graph& g, const HomologyBasis& hb,
                                                        std::mt19937_64& rng) {
    int b1 = g.betti();
    int r = b1 - 2;
    if (r < 0) return std::nullopt;
    if (r == 0) return make_vanishing_subgroup(g, hb, std::vector<OneChain>{});
    for (int attempt = 0; attempt < 50; ++attempt) {
        IntMatrix rows(r, b1);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < b1; ++j)
                rows.at(i, j) = Int(static_cast<long>(rng() % 5) - 2);
        if (rank_int(rows) != r) continue;
        IntMatrix sat = saturate_rows(rows);
        std::vector<OneChain> gens;
        for (int i = 0; i < r; ++i) {
            OneChain x = zero_chain(g);
            for (int j = 0; j < b1; ++j) x = chain_add(x, chain_scale(sat.at(i, j), hb.cycles[j]));
            gens.push_back(x);
        }
        std::string err;
        if (!is_vanishing_subgroup(g, hb, gens, &err)) continue;
        return make_vanishing_subgroup(g, hb, gens);
    }
    return std::nullopt;
}

/* The same graph under new vertex and edge names, with the edge list read
   in a rotated order. Orientations are kept, so a chain transfers by
   renaming its ids. */
struct RelabeledGraph {
    Graph graph;
    std::map<std::string, std::string> edge_ids; // old id -> new id
};

inline RelabeledGraph relabel_graph(const Graph& g, std::mt19937_64& rng) {
    int nv = g.vertex_count(), ne = g.edge_count();
    std::vector<int> vperm(nv), eperm(ne);
    for (int i = 0; i < nv; ++i) vperm[i] = i;
    for (int i = 0; i < ne; ++i) eperm[i] = i;
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::shuffle(eperm.begin(), eperm.end(), rng);
    auto vname = [&](int v) { return "p" + std::to_string(vperm[v]); };
    std::map<std::string, std::string> emap;
    std::vector<EdgeSpec> specs;
    for (int k = 0; k < ne; ++k) {
        const auto& e = g.edge(eperm[k]);
        std::string nid = "q" + std::to_string(k + 1);
        emap[e.id] = nid;
        specs.push_back({nid, vname(e.origin), vname(e.terminus)});
    }
    std::vector<std::string> order;
    for (int i = 0; i < nv; ++i) order.push_back("p" + std::to_string(i));
    std::shuffle(order.begin(), order.end(), rng);
    return {Graph(order, specs), emap};
}

inline OneChain transfer_chain(const Graph& from, const Graph& to,
                               const std::map<std::string, std::string>& edge_ids,
                               const OneChain& x) {
    std::map<std::string, Int> m;
    for (int i = 0; i < from.edge_count(); ++i)
        if (sign(x.c[i]) != 0) m[edge_ids.at(from.edge(i).id)] = x.c[i];
    return chain_from_map(to, m);
}

} // namespace crystal::testing
