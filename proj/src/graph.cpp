#include "hstar/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hstar/errors.hpp"

namespace hstar {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw invalid_argument_error("Graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i < 1 || i > n || j < 1 || j > n) throw invalid_argument_error("Graph: vertex out of range");
        if (i == j) throw invalid_argument_error("Graph: loop edge");
        if (i > j) std::swap(i, j);
        if (!seen.insert({i, j}).second) throw invalid_argument_error("Graph: duplicate edge");
        edges_.emplace_back(i, j);
    }
}

bool Graph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::find(edges_.begin(), edges_.end(), std::make_pair(i, j)) != edges_.end();
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_ + 1);
    for (auto [i, j] : edges_) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

namespace {

std::vector<int> component_ids(const Graph& g) {
    auto adj = g.adjacency_lists();
    std::vector<int> comp(g.n() + 1, 0);
    int next = 0;
    for (int s = 1; s <= g.n(); ++s) {
        if (comp[s]) continue;
        ++next;
        std::vector<int> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!comp[w]) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
    }
    return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<int> comp = component_ids(g);
    for (int v = 1; v <= g.n(); ++v)
        if (comp[v] != 1) return false;
    return true;
}

int component_count(const Graph& g) {
    if (g.n() == 0) return 0;
    std::vector<int> comp = component_ids(g);
    return *std::max_element(comp.begin() + 1, comp.end());
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    auto adj = g.adjacency_lists();
    std::vector<int> color(g.n() + 1, 0);
    for (int s = 1; s <= g.n(); ++s) {
        if (color[s]) continue;
        color[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!color[w]) {
                    color[w] = 3 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> v1, v2;
    for (int v = 1; v <= g.n(); ++v) (color[v] == 1 ? v1 : v2).push_back(v);
    return std::make_pair(std::move(v1), std::move(v2));
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j)
            if (!g.has_edge(i, j)) edges.emplace_back(i, j);
    return Graph(g.n(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> newlabel(g.n() + 1, 0);
    for (size_t k = 0; k < verts.size(); ++k) {
        int v = verts[k];
        if (v < 1 || v > g.n() || (k > 0 && verts[k] <= verts[k - 1]))
            throw invalid_argument_error("induced_subgraph: vertex set must be sorted and in range");
        newlabel[v] = static_cast<int>(k) + 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : g.edges()) {
        if (newlabel[i] && newlabel[j]) edges.emplace_back(newlabel[i], newlabel[j]);
    }
    return Graph(static_cast<int>(verts.size()), std::move(edges));
}

Graph suspension(const Graph& g) {
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int v = 1; v <= g.n(); ++v) edges.emplace_back(v, g.n() + 1);
    return Graph(g.n() + 1, std::move(edges));
}

Graph tilde_extend(const Graph& g, const std::vector<int>& v1, const std::vector<int>& v2) {
    std::vector<int> side(g.n() + 1, 0);
    for (int v : v1) {
        if (v < 1 || v > g.n() || side[v]) throw invalid_argument_error("tilde_extend: invalid bipartition");
        side[v] = 1;
    }
    for (int v : v2) {
        if (v < 1 || v > g.n() || side[v]) throw invalid_argument_error("tilde_extend: invalid bipartition");
        side[v] = 2;
    }
    for (int v = 1; v <= g.n(); ++v)
        if (!side[v]) throw invalid_argument_error("tilde_extend: bipartition must cover all vertices");
    for (auto [i, j] : g.edges())
        if (side[i] == side[j]) throw invalid_argument_error("tilde_extend: edge inside one side");

    const int d = g.n();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int i : v1) edges.emplace_back(i, d + 1);
    for (int j : v2) edges.emplace_back(j, d + 2);
    edges.emplace_back(d + 1, d + 2);
    return Graph(d + 2, std::move(edges));
}

Graph contract(const Graph& g, std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw invalid_argument_error("contract: not an edge");
    const int keep = e.first, gone = e.second;
    auto relabel = [&](int v) {
        if (v == gone) return keep;
        return v > gone ? v - 1 : v;
    };
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : g.edges()) {
        int a = relabel(i), b = relabel(j);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (seen.insert({a, b}).second) edges.emplace_back(a, b);
    }
    return Graph(g.n() - 1, std::move(edges));
}

Graph delete_edge(const Graph& g, std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw invalid_argument_error("delete_edge: not an edge");
    std::vector<std::pair<int, int>> edges;
    for (auto edge : g.edges())
        if (edge != e) edges.push_back(edge);
    return Graph(g.n(), std::move(edges));
}

bool is_bridge(const Graph& g, std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw invalid_argument_error("is_bridge: not an edge");
    Graph h = delete_edge(g, e);
    std::vector<int> comp = component_ids(h);
    return comp[e.first] != comp[e.second];
}

std::vector<Graph> two_connected_components(const Graph& g) {
    // Hopcroft–Tarjan block decomposition with an explicit edge stack.
    auto adj = g.adjacency_lists();
    std::vector<int> num(g.n() + 1, 0), low(g.n() + 1, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent) {
        num[v] = low[v] = ++timer;
        for (int w : adj[v]) {
            if (!num[w]) {
                estack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    std::vector<std::pair<int, int>> block;
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        block.push_back(e);
                        if (e == std::make_pair(v, w)) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (w != parent && num[w] < num[v]) {
                estack.push_back({v, w});
                low[v] = std::min(low[v], num[w]);
            }
        }
    };
    for (int v = 1; v <= g.n(); ++v)
        if (!num[v] && !adj[v].empty()) dfs(v, 0);

    std::vector<Graph> out;
    for (const auto& block : blocks) {
        std::set<int> verts;
        for (auto [i, j] : block) {
            verts.insert(i);
            verts.insert(j);
        }
        std::vector<int> vlist(verts.begin(), verts.end());
        std::vector<int> newlabel(g.n() + 1, 0);
        for (size_t k = 0; k < vlist.size(); ++k) newlabel[vlist[k]] = static_cast<int>(k) + 1;
        std::vector<std::pair<int, int>> edges;
        for (auto [i, j] : block) edges.emplace_back(newlabel[i], newlabel[j]);
        std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
            if (a.first > a.second) std::swap(a.first, a.second);
            if (b.first > b.second) std::swap(b.first, b.second);
            return a < b;
        });
        out.push_back(Graph(static_cast<int>(vlist.size()), std::move(edges)));
    }
    return out;
}

std::vector<Cut> cuts(const Graph& g) {
    if (g.n() < 1) throw invalid_argument_error("cuts: graph must have at least one vertex");
    std::vector<Cut> out;
    const int n = g.n();
    const size_t half = size_t(1) << (n - 1);
    for (size_t mask = 0; mask < half; ++mask) {
        // Vertex 1 always on the S side; bits choose sides for 2..n.
        std::vector<bool> in_s(n + 1, false);
        in_s[1] = true;
        for (int v = 2; v <= n; ++v)
            if (mask & (size_t(1) << (v - 2))) in_s[v] = true;
        std::vector<std::pair<int, int>> cut_edges;
        for (auto [i, j] : g.edges())
            if (in_s[i] != in_s[j]) cut_edges.emplace_back(i, j);
        Cut c;
        for (int v = 1; v <= n; ++v)
            if (in_s[v]) c.s.push_back(v);
        c.edge_graph = Graph(n, std::move(cut_edges));
        out.push_back(std::move(c));
    }
    return out;
}

bool is_cycle_graph(const Graph& g) {
    if (g.n() < 3 || g.edge_count() != g.n()) return false;
    auto adj = g.adjacency_lists();
    for (int v = 1; v <= g.n(); ++v)
        if (adj[v].size() != 2) return false;
    return is_connected(g);
}

bool is_complete_graph(const Graph& g) {
    return g.edge_count() == g.n() * (g.n() - 1) / 2;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> complete_bipartite_parts(const Graph& g) {
    auto parts = bipartition(g);
    if (!parts) return std::nullopt;
    auto& [v1, v2] = *parts;
    if (v1.empty() || v2.empty()) return std::nullopt;
    if (g.edge_count() != static_cast<int>(v1.size() * v2.size())) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;
    return parts;
}

std::optional<int> dominating_vertex(const Graph& g) {
    auto adj = g.adjacency_lists();
    for (int v = 1; v <= g.n(); ++v)
        if (static_cast<int>(adj[v].size()) == g.n() - 1) return v;
    return std::nullopt;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw invalid_argument_error("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j) edges.emplace_back(i, j);
    return Graph(a + b, std::move(edges));
}

Graph edgeless_graph(int n) { return Graph(n, {}); }

std::string canonical_code(const Graph& g) {
    const int n = g.n();
    if (n > 10) throw resource_error("canonical_code: vertex count above cap");
    auto eidx = [n](int a, int b) {
        if (a > b) std::swap(a, b);
        return (a - 1) * n - a * (a - 1) / 2 + (b - a - 1);
    };
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    uint64_t best = ~uint64_t(0);
    do {
        uint64_t code = 0;
        for (auto [i, j] : g.edges()) code |= uint64_t(1) << eidx(perm[i - 1], perm[j - 1]);
        if (code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + std::to_string(best);
}

std::vector<Graph> graphs_up_to_iso(int n, const std::function<bool(const Graph&)>& keep) {
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) all_edges.emplace_back(i, j);
    const size_t m = all_edges.size();
    if (m > 20) throw resource_error("graphs_up_to_iso: too many vertices");

    std::set<std::string> seen;
    std::vector<Graph> out;
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t k = 0; k < m; ++k)
            if (mask & (size_t(1) << k)) edges.push_back(all_edges[k]);
        Graph g(n, std::move(edges));
        if (keep && !keep(g)) continue;
        if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace hstar
