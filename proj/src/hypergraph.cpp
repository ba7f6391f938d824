#include "hstar/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "hstar/errors.hpp"

namespace hstar {

Graph bip_graph(const Hypergraph& h) {
    const int m = h.num_vertices;
    const int n = static_cast<int>(h.hyperedges.size());
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (int j = 0; j < n; ++j) {
        if (h.hyperedges[j].empty()) throw invalid_argument_error("bip_graph: empty hyperedge");
        for (int v : h.hyperedges[j]) {
            if (v < 1 || v > m) throw invalid_argument_error("bip_graph: vertex out of range");
            if (seen.insert({v, m + 1 + j}).second) edges.emplace_back(v, m + 1 + j);
        }
    }
    return Graph(m + n, std::move(edges));
}

namespace {

// Enumerates all spanning trees of g by include/exclude recursion over the
// edge list, pruning branches that can no longer connect the graph.
void spanning_trees(const Graph& g, const std::function<void(const std::vector<int>&)>& visit) {
    const int n = g.n();
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());

    std::vector<int> chosen;
    std::vector<int> parent(n + 1);

    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    // connectivity check using chosen edges plus all edges from index `from`
    auto can_connect = [&](int from) {
        for (int v = 1; v <= n; ++v) parent[v] = v;
        int comps = n;
        for (int k : chosen) {
            int a = find(edges[k].first), b = find(edges[k].second);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        for (int k = from; k < m && comps > 1; ++k) {
            int a = find(edges[k].first), b = find(edges[k].second);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        return comps == 1;
    };

    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(chosen.size()) == n - 1) {
            visit(chosen);
            return;
        }
        if (from == m) return;
        if (!can_connect(from)) return;
        // include edges[from] unless it closes a cycle
        for (int v = 1; v <= n; ++v) parent[v] = v;
        for (int k : chosen) parent[find(edges[k].first)] = find(edges[k].second);
        if (find(edges[from].first) != find(edges[from].second)) {
            chosen.push_back(from);
            rec(from + 1);
            chosen.pop_back();
        }
        rec(from + 1);
    };
    if (n >= 1) rec(0);
}

}  // namespace

std::vector<Hypertree> hypertrees(const Hypergraph& h) {
    Graph bip = bip_graph(h);
    if (!is_connected(bip)) throw invalid_argument_error("hypertrees: Bip H is disconnected");
    const int m = h.num_vertices;
    const int n = static_cast<int>(h.hyperedges.size());

    std::set<Hypertree> found;
    const auto& edges = bip.edges();
    spanning_trees(bip, [&](const std::vector<int>& chosen) {
        Hypertree f(n, 0);
        for (int k : chosen) {
            int hi = std::max(edges[k].first, edges[k].second);
            f[hi - m - 1] += 1;  // hyperedge vertices have the larger labels
        }
        int sum = 0;
        for (int j = 0; j < n; ++j) {
            f[j] -= 1;
            sum += f[j];
        }
        if (sum != m - 1) throw internal_error("hypertrees: degree sum != |V|-1");
        found.insert(std::move(f));
    });
    return std::vector<Hypertree>(found.begin(), found.end());
}

IntPolynomial interior_polynomial(const Hypergraph& h) {
    std::vector<Hypertree> trees = hypertrees(h);
    std::set<Hypertree> lookup(trees.begin(), trees.end());
    const int n = static_cast<int>(h.hyperedges.size());

    std::vector<Int> coeffs(std::max(1, n), Int(0));
    for (const Hypertree& f : trees) {
        int inactive = 0;
        for (int j = 1; j < n; ++j) {
            if (f[j] == 0) continue;
            bool transferable = false;
            Hypertree g = f;
            g[j] -= 1;
            for (int jp = 0; jp < j && !transferable; ++jp) {
                g[jp] += 1;
                if (lookup.count(g)) transferable = true;
                g[jp] -= 1;
            }
            if (transferable) ++inactive;
        }
        coeffs[inactive] += 1;
    }
    IntPolynomial result{std::move(coeffs)};
    if (n >= 1 && h.num_vertices >= 1) {
        const int bound = std::min(h.num_vertices, n) - 1;
        if (result.degree() > bound)
            throw internal_error("interior_polynomial: degree exceeds min(|V|,|E|)-1");
    }
    return result;
}

Hypergraph hypergraph_from_bipartite(const Graph& g, const std::vector<int>& edge_side) {
    std::vector<int> is_edge(g.n() + 1, 0);
    for (size_t k = 0; k < edge_side.size(); ++k) {
        int v = edge_side[k];
        if (v < 1 || v > g.n() || (k > 0 && edge_side[k] <= edge_side[k - 1]))
            throw invalid_argument_error("hypergraph_from_bipartite: bad edge side");
        is_edge[v] = 1;
    }
    for (auto [i, j] : g.edges()) {
        if (is_edge[i] + is_edge[j] != 1)
            throw invalid_argument_error("hypergraph_from_bipartite: side is not one side of a bipartition");
    }
    std::vector<int> ground, newlabel(g.n() + 1, 0);
    for (int v = 1; v <= g.n(); ++v) {
        if (!is_edge[v]) {
            ground.push_back(v);
            newlabel[v] = static_cast<int>(ground.size());
        }
    }
    Hypergraph h;
    h.num_vertices = static_cast<int>(ground.size());
    auto adj = g.adjacency_lists();
    for (int e : edge_side) {
        std::vector<int> members;
        for (int v : adj[e]) members.push_back(newlabel[v]);
        std::sort(members.begin(), members.end());
        h.hyperedges.push_back(std::move(members));
    }
    return h;
}

IntPolynomial interior_polynomial(const Graph& g) {
    auto parts = bipartition(g);
    if (!parts || !is_connected(g))
        throw invalid_argument_error("interior_polynomial: graph must be connected bipartite");
    const auto& [v1, v2] = *parts;
    const std::vector<int>& edge_side = v1.size() <= v2.size() ? v1 : v2;
    return interior_polynomial(hypergraph_from_bipartite(g, edge_side));
}

}  // namespace hstar
