#pragma once

// Undirected and oriented simple graphs over sparse non-negative integer
// vertex ids, plus the primitive queries everything else is built on.
// Vertex and neighbor iteration is always in ascending id order, so every
// algorithm downstream is deterministic.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ktp {

using Vertex = int;
using VertexSet = std::set<Vertex>;

namespace detail {
inline void require_vertex_id(Vertex v) {
    if (v < 0)
        throw std::invalid_argument("vertex id must be non-negative, got " + std::to_string(v));
}
} // namespace detail

/// Simple undirected graph: no loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    void add_vertex(Vertex v) {
        detail::require_vertex_id(v);
        adj_.try_emplace(v);
    }

    void add_edge(Vertex u, Vertex v) {
        if (u == v)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        auto iu = adj_.find(u);
        auto iv = adj_.find(v);
        if (iu == adj_.end() || iv == adj_.end())
            throw std::invalid_argument("edge endpoint is not a vertex of the graph");
        iu->second.insert(v);
        iv->second.insert(u);
    }

    void remove_vertex(Vertex v) {
        auto it = adj_.find(v);
        if (it == adj_.end())
            throw std::invalid_argument("cannot remove unknown vertex " + std::to_string(v));
        for (Vertex u : it->second)
            adj_.at(u).erase(v);
        adj_.erase(it);
    }

    void remove_edge(Vertex u, Vertex v) {
        if (!has_edge(u, v))
            throw std::invalid_argument("cannot remove missing edge {" + std::to_string(u) +
                                        "," + std::to_string(v) + "}");
        adj_.at(u).erase(v);
        adj_.at(v).erase(u);
    }

    bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }

    bool has_edge(Vertex u, Vertex v) const {
        auto it = adj_.find(u);
        return it != adj_.end() && it->second.count(v) != 0;
    }

    const VertexSet& neighbors(Vertex v) const {
        auto it = adj_.find(v);
        if (it == adj_.end())
            throw std::invalid_argument("unknown vertex " + std::to_string(v));
        return it->second;
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    std::size_t max_degree() const {
        std::size_t best = 0;
        for (const auto& [v, nbrs] : adj_)
            best = std::max(best, nbrs.size());
        return best;
    }

    std::size_t vertex_count() const { return adj_.size(); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& [v, nbrs] : adj_)
            twice += nbrs.size();
        return twice / 2;
    }

    std::vector<Vertex> vertex_list() const {
        std::vector<Vertex> out;
        out.reserve(adj_.size());
        for (const auto& [v, nbrs] : adj_)
            out.push_back(v);
        return out;
    }

    VertexSet vertex_set() const {
        VertexSet out;
        for (const auto& [v, nbrs] : adj_)
            out.insert(v);
        return out;
    }

    /// Edges as (u, v) pairs with u < v, ascending.
    std::vector<std::pair<Vertex, Vertex>> edge_list() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const auto& [v, nbrs] : adj_)
            for (Vertex u : nbrs)
                if (v < u)
                    out.emplace_back(v, u);
        return out;
    }

    const std::map<Vertex, VertexSet>& adjacency() const { return adj_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::map<Vertex, VertexSet> adj_;
};

/// K_n on vertex ids 0..n-1.
inline Graph complete_graph(int n) {
    Graph g;
    for (Vertex v = 0; v < n; ++v)
        g.add_vertex(v);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

/// True iff every unordered pair of s is an edge; |s| <= 1 is vacuously a clique.
inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (!g.has_vertex(v))
            throw std::invalid_argument("is_clique: unknown vertex " + std::to_string(v));
    for (auto i = s.begin(); i != s.end(); ++i) {
        auto j = i;
        for (++j; j != s.end(); ++j)
            if (!g.has_edge(*i, *j))
                return false;
    }
    return true;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    Graph out;
    for (Vertex v : s) {
        if (!g.has_vertex(v))
            throw std::invalid_argument("induced_subgraph: unknown vertex " + std::to_string(v));
        out.add_vertex(v);
    }
    for (Vertex v : s)
        for (Vertex u : g.neighbors(v))
            if (u > v && s.count(u))
                out.add_edge(v, u);
    return out;
}

/// At most one connected component; the empty graph counts as connected.
inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        return true;
    VertexSet seen;
    std::vector<Vertex> stack{g.adjacency().begin()->first};
    seen.insert(stack.back());
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (seen.insert(u).second)
                stack.push_back(u);
    }
    return seen.size() == g.vertex_count();
}

/// Connected components, each a vertex set, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (const auto& [start, nbrs] : g.adjacency()) {
        if (seen.count(start))
            continue;
        VertexSet comp{start};
        seen.insert(start);
        std::vector<Vertex> stack{start};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v))
                if (seen.insert(u).second) {
                    comp.insert(u);
                    stack.push_back(u);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

/// Simple oriented graph: no loops, no parallel arcs, and at most one arc
/// per unordered pair (no digons).
class OrientedGraph {
public:
    OrientedGraph() = default;

    void add_vertex(Vertex v) {
        detail::require_vertex_id(v);
        out_.try_emplace(v);
        in_.try_emplace(v);
    }

    void add_arc(Vertex u, Vertex v) {
        if (u == v)
            throw std::invalid_argument("loop arc at vertex " + std::to_string(u));
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("arc endpoint is not a vertex of the graph");
        if (out_.at(v).count(u))
            throw std::invalid_argument("digon: arcs in both directions between " +
                                        std::to_string(u) + " and " + std::to_string(v));
        out_.at(u).insert(v);
        in_.at(v).insert(u);
    }

    void remove_vertex(Vertex v) {
        if (!has_vertex(v))
            throw std::invalid_argument("cannot remove unknown vertex " + std::to_string(v));
        for (Vertex w : out_.at(v))
            in_.at(w).erase(v);
        for (Vertex u : in_.at(v))
            out_.at(u).erase(v);
        out_.erase(v);
        in_.erase(v);
    }

    bool has_vertex(Vertex v) const { return out_.count(v) != 0; }

    bool has_arc(Vertex u, Vertex v) const {
        auto it = out_.find(u);
        return it != out_.end() && it->second.count(v) != 0;
    }

    const VertexSet& out_neighbors(Vertex v) const {
        auto it = out_.find(v);
        if (it == out_.end())
            throw std::invalid_argument("unknown vertex " + std::to_string(v));
        return it->second;
    }

    const VertexSet& in_neighbors(Vertex v) const {
        auto it = in_.find(v);
        if (it == in_.end())
            throw std::invalid_argument("unknown vertex " + std::to_string(v));
        return it->second;
    }

    std::size_t vertex_count() const { return out_.size(); }

    std::size_t arc_count() const {
        std::size_t total = 0;
        for (const auto& [v, succ] : out_)
            total += succ.size();
        return total;
    }

    std::vector<Vertex> vertex_list() const {
        std::vector<Vertex> out;
        out.reserve(out_.size());
        for (const auto& [v, succ] : out_)
            out.push_back(v);
        return out;
    }

    /// Arcs as (tail, head), ascending by tail then head.
    std::vector<std::pair<Vertex, Vertex>> arc_list() const {
        std::vector<std::pair<Vertex, Vertex>> arcs;
        for (const auto& [v, succ] : out_)
            for (Vertex w : succ)
                arcs.emplace_back(v, w);
        return arcs;
    }

    const std::map<Vertex, VertexSet>& out_adjacency() const { return out_; }

    friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

private:
    std::map<Vertex, VertexSet> out_;
    std::map<Vertex, VertexSet> in_;
};

/// Forget orientations: uv is an edge iff u->v or v->u is an arc.
inline Graph underlying_graph(const OrientedGraph& d) {
    Graph g;
    for (Vertex v : d.vertex_list())
        g.add_vertex(v);
    for (const auto& [u, w] : d.arc_list())
        g.add_edge(u, w);
    return g;
}

inline OrientedGraph induced_subdigraph(const OrientedGraph& d, const VertexSet& s) {
    OrientedGraph out;
    for (Vertex v : s) {
        if (!d.has_vertex(v))
            throw std::invalid_argument("induced_subdigraph: unknown vertex " + std::to_string(v));
        out.add_vertex(v);
    }
    for (Vertex v : s)
        for (Vertex w : d.out_neighbors(v))
            if (s.count(w))
                out.add_arc(v, w);
    return out;
}

/// Some directed cycle as a vertex sequence (first vertex not repeated),
/// or nullopt when the digraph is acyclic.
inline std::optional<std::vector<Vertex>> find_directed_cycle(const OrientedGraph& d) {
    enum class Color { White, Grey, Black };
    std::map<Vertex, Color> color;
    for (Vertex v : d.vertex_list())
        color[v] = Color::White;
    std::vector<Vertex> path; // grey stack in visit order

    // Iterative DFS; frame = (vertex, iterator position into out-neighbors).
    for (Vertex root : d.vertex_list()) {
        if (color[root] != Color::White)
            continue;
        std::vector<std::pair<Vertex, VertexSet::const_iterator>> frames;
        color[root] = Color::Grey;
        path.push_back(root);
        frames.emplace_back(root, d.out_neighbors(root).begin());
        while (!frames.empty()) {
            auto& [v, it] = frames.back();
            if (it == d.out_neighbors(v).end()) {
                color[v] = Color::Black;
                path.pop_back();
                frames.pop_back();
                continue;
            }
            Vertex w = *it++;
            if (color[w] == Color::Grey) {
                auto start = std::find(path.begin(), path.end(), w);
                return std::vector<Vertex>(start, path.end());
            }
            if (color[w] == Color::White) {
                color[w] = Color::Grey;
                path.push_back(w);
                frames.emplace_back(w, d.out_neighbors(w).begin());
            }
        }
    }
    return std::nullopt;
}

/// True iff the digraph has no directed cycle.
inline bool is_acyclic(const OrientedGraph& d) { return !find_directed_cycle(d).has_value(); }

} // namespace ktp
