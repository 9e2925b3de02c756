#include "crystal/graph.hpp"

#include <algorithm>
#include <deque>

#include "crystal/error.hpp"

namespace crystal {

Graph::Graph(std::vector<std::string> vertex_ids,
             std::vector<std::tuple<std::string, std::string, std::string>> edges) {
    require(!vertex_ids.empty(), "ParseError", "graph needs at least one vertex");
    vertex_ids_ = std::move(vertex_ids);
    for (int i = 0; i < static_cast<int>(vertex_ids_.size()); ++i) {
        require(!vertex_ids_[i].empty(), "ParseError", "empty vertex id");
        auto [it, fresh] = vertex_lookup_.emplace(vertex_ids_[i], i);
        require(fresh, "ParseError", "duplicate vertex id '" + vertex_ids_[i] + "'");
    }
    degrees_.assign(vertex_ids_.size(), 0);
    for (auto& [id, from, to] : edges) {
        require(!id.empty(), "ParseError", "empty edge id");
        Edge e{id, vertex_index(from), vertex_index(to)};
        auto [it, fresh] = edge_lookup_.emplace(id, static_cast<int>(edges_.size()));
        require(fresh, "ParseError", "duplicate edge id '" + id + "'");
        degrees_[e.origin] += 1;
        degrees_[e.terminus] += 1; // a loop hits both branches, degree +2
        edges_.push_back(std::move(e));
    }
}

int Graph::vertex_index(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    require(it != vertex_lookup_.end(), "UnknownVertex", "no vertex '" + id + "'");
    return it->second;
}

int Graph::edge_index(const std::string& id) const {
    auto it = edge_lookup_.find(id);
    require(it != edge_lookup_.end(), "UnknownEdge", "no edge '" + id + "'");
    return it->second;
}

bool Graph::connected() const {
    std::vector<bool> seen(vertex_count(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    int visited = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (const Edge& e : edges_) {
            for (int y : {e.origin == x ? e.terminus : -1, e.terminus == x ? e.origin : -1}) {
                if (y >= 0 && !seen[y]) {
                    seen[y] = true;
                    ++visited;
                    queue.push_back(y);
                }
            }
        }
    }
    return visited == vertex_count();
}

void Graph::validate() const {
    require(connected(), "Disconnected", "the graph is not connected");
    for (int x = 0; x < vertex_count(); ++x)
        require(degrees_[x] >= 3, "DegreeTooLow",
                "vertex '" + vertex_ids_[x] + "' has degree " + std::to_string(degrees_[x]) + " < 3");
}

bool OneChain::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Int& v) { return sgn(v) == 0; });
}

OneChain zero_chain(const Graph& g) { return OneChain{std::vector<Int>(g.edge_count())}; }

OneChain chain_add(const OneChain& x, const OneChain& y) {
    check_internal(x.c.size() == y.c.size(), "chain_add size mismatch");
    OneChain r = x;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
    return r;
}

OneChain chain_sub(const OneChain& x, const OneChain& y) {
    check_internal(x.c.size() == y.c.size(), "chain_sub size mismatch");
    OneChain r = x;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= y.c[i];
    return r;
}

OneChain chain_scale(const Int& k, const OneChain& x) {
    OneChain r = x;
    for (Int& v : r.c) v *= k;
    return r;
}

OneChain chain_from_map(const Graph& g, const std::map<std::string, Int>& coeffs) {
    OneChain x = zero_chain(g);
    for (auto& [id, coeff] : coeffs) x.c[g.edge_index(id)] = coeff;
    return x;
}

std::map<std::string, Int> chain_to_map(const Graph& g, const OneChain& x) {
    std::map<std::string, Int> m;
    for (int i = 0; i < g.edge_count(); ++i)
        if (sgn(x.c[i]) != 0) m[g.edge(i).id] = x.c[i];
    return m;
}

std::string chain_to_string(const Graph& g, const OneChain& x) {
    std::string s;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (sgn(x.c[i]) == 0) continue;
        Int a = abs_int(x.c[i]);
        if (s.empty()) {
            if (sgn(x.c[i]) < 0) s += "-";
        } else {
            s += sgn(x.c[i]) < 0 ? " - " : " + ";
        }
        if (a != 1) s += int_to_string(a) + "*";
        s += g.edge(i).id;
    }
    return s.empty() ? "0" : s;
}

Int chain_norm_l1(const OneChain& x) {
    Int n = 0;
    for (const Int& v : x.c) n += abs_int(v);
    return n;
}

std::vector<Int> boundary(const Graph& g, const OneChain& x) {
    check_internal(static_cast<int>(x.c.size()) == g.edge_count(), "boundary size mismatch");
    std::vector<Int> b(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        b[e.terminus] += x.c[i];
        b[e.origin] -= x.c[i];
    }
    return b;
}

bool is_cycle(const Graph& g, const OneChain& x) {
    for (const Int& v : boundary(g, x))
        if (sgn(v) != 0) return false;
    return true;
}

std::vector<int> spanning_tree(const Graph& g) {
    int root = 0;
    for (int i = 1; i < g.vertex_count(); ++i)
        if (g.vertex_id(i) < g.vertex_id(root)) root = i;

    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<int> tree;
    std::deque<int> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int i = 0; i < g.edge_count(); ++i) {
            const auto& e = g.edge(i);
            int y = -1;
            if (e.origin == x && !seen[e.terminus]) y = e.terminus;
            else if (e.terminus == x && !seen[e.origin]) y = e.origin;
            if (y < 0) continue;
            seen[y] = true;
            tree.push_back(i);
            queue.push_back(y);
        }
    }
    require(static_cast<int>(tree.size()) == g.vertex_count() - 1, "Disconnected",
            "spanning tree does not reach every vertex");
    return tree;
}

namespace {

// Signed tree path from vertex s to vertex t: +1 when a tree edge is walked
// along its orientation, -1 against it.
OneChain tree_path(const Graph& g, const std::vector<int>& tree, int s, int t) {
    // parent search by BFS over tree edges from s
    std::vector<int> parent_edge(g.vertex_count(), -1);
    std::vector<int> parent(g.vertex_count(), -1);
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int i : tree) {
            const auto& e = g.edge(i);
            int y = -1;
            if (e.origin == x && !seen[e.terminus]) y = e.terminus;
            else if (e.terminus == x && !seen[e.origin]) y = e.origin;
            if (y < 0) continue;
            seen[y] = true;
            parent[y] = x;
            parent_edge[y] = i;
            queue.push_back(y);
        }
    }
    OneChain path = zero_chain(g);
    int cur = t;
    while (cur != s) {
        check_internal(parent_edge[cur] >= 0, "tree_path: disconnected tree");
        int i = parent_edge[cur];
        const auto& e = g.edge(i);
        // walking parent[cur] -> cur; orientation sign depends on the edge
        path.c[i] += (e.terminus == cur) ? 1 : -1;
        cur = parent[cur];
    }
    return path;
}

} // namespace

HomologyBasis homology_basis(const Graph& g) {
    HomologyBasis hb;
    hb.tree_edges = spanning_tree(g);
    std::vector<bool> in_tree(g.edge_count(), false);
    for (int i : hb.tree_edges) in_tree[i] = true;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!in_tree[i]) hb.nontree_edges.push_back(i);

    for (int i : hb.nontree_edges) {
        const auto& e = g.edge(i);
        OneChain cyc = tree_path(g, hb.tree_edges, e.terminus, e.origin);
        cyc.c[i] += 1;
        check_internal(is_cycle(g, cyc), "fundamental cycle has nonzero boundary");
        hb.cycles.push_back(std::move(cyc));
    }
    return hb;
}

std::vector<Int> homology_coordinates(const Graph& g, const HomologyBasis& hb, const OneChain& x) {
    require(is_cycle(g, x), "NotACycle", "chain " + chain_to_string(g, x) + " has nonzero boundary");
    std::vector<Int> coords;
    coords.reserve(hb.nontree_edges.size());
    for (int i : hb.nontree_edges) coords.push_back(x.c[i]);
    return coords;
}

} // namespace crystal
