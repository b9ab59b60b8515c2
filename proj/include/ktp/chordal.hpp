#pragma once

// Chordality testing and k-tree recognition. A k-tree here is a chordal
// graph with no (k+2)-clique; equivalently a graph buildable by repeatedly
// attaching a new vertex to a clique of size <= k. recognize_ktree extracts
// that construction order, which the partition builders replay.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktp/graph.hpp"

namespace ktp {

struct BuildStep {
    Vertex vertex = 0;
    VertexSet attachment;

    friend bool operator==(const BuildStep&, const BuildStep&) = default;
};

/// Witness that a graph is a k-tree: adding the vertices in step order,
/// each joined to every vertex of its attachment clique, reproduces the
/// graph exactly.
struct BuildOrder {
    int k = 0;
    std::vector<BuildStep> steps;

    friend bool operator==(const BuildOrder&, const BuildOrder&) = default;
};

/// Rebuild the graph a BuildOrder describes, checking every step. Throws
/// std::invalid_argument on a malformed order (repeated vertex, attachment
/// not a clique of the graph so far, attachment larger than k).
inline Graph replay(const BuildOrder& order) {
    if (order.k < 0)
        throw std::invalid_argument("build order parameter k must be non-negative");
    Graph g;
    for (const BuildStep& step : order.steps) {
        if (g.has_vertex(step.vertex))
            throw std::invalid_argument("build order adds vertex " +
                                        std::to_string(step.vertex) + " twice");
        if (step.attachment.size() > static_cast<std::size_t>(order.k))
            throw std::invalid_argument("attachment of vertex " + std::to_string(step.vertex) +
                                        " is larger than k");
        for (Vertex a : step.attachment)
            if (!g.has_vertex(a))
                throw std::invalid_argument("attachment of vertex " +
                                            std::to_string(step.vertex) +
                                            " references vertex " + std::to_string(a) +
                                            " that is not added yet");
        if (!is_clique(g, step.attachment))
            throw std::invalid_argument("attachment of vertex " + std::to_string(step.vertex) +
                                        " is not a clique");
        g.add_vertex(step.vertex);
        for (Vertex a : step.attachment)
            g.add_edge(a, step.vertex);
    }
    return g;
}

/// Maximum cardinality search: repeatedly visit an unvisited vertex with the
/// most visited neighbors, ties broken by ascending id.
inline std::vector<Vertex> mcs_order(const Graph& g) {
    std::map<Vertex, std::size_t> weight;
    VertexSet pending;
    for (Vertex v : g.vertex_list()) {
        weight[v] = 0;
        pending.insert(v);
    }
    std::vector<Vertex> order;
    order.reserve(pending.size());
    while (!pending.empty()) {
        Vertex best = *pending.begin();
        for (Vertex v : pending)
            if (weight[v] > weight[best])
                best = v;
        order.push_back(best);
        pending.erase(best);
        for (Vertex u : g.neighbors(best))
            if (pending.count(u))
                ++weight[u];
    }
    return order;
}

/// True iff reversing mcs_order yields a perfect elimination ordering, i.e.
/// each vertex's neighbors earlier in the MCS order form a clique.
inline bool is_chordal(const Graph& g) {
    auto order = mcs_order(g);
    std::map<Vertex, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = i;
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexSet earlier;
        for (Vertex u : g.neighbors(order[i]))
            if (pos.at(u) < i)
                earlier.insert(u);
        if (!is_clique(g, earlier))
            return false;
    }
    return true;
}

/// Some chordless cycle on >= 4 vertices, in cycle order, or nullopt when
/// the graph is chordal. Independent of the MCS route: looks for a vertex v
/// with non-adjacent neighbors a, b and an induced a-b path avoiding N[v].
inline std::optional<std::vector<Vertex>> find_chordless_cycle(const Graph& g) {
    for (const auto& [v, nbrs] : g.adjacency()) {
        for (auto ia = nbrs.begin(); ia != nbrs.end(); ++ia) {
            auto ib = ia;
            for (++ib; ib != nbrs.end(); ++ib) {
                Vertex a = *ia, b = *ib;
                if (g.has_edge(a, b))
                    continue;
                // BFS from a to b avoiding N[v] \ {a, b}; a shortest path in
                // that subgraph is induced, so v + path is a chordless cycle.
                VertexSet blocked = nbrs;
                blocked.insert(v);
                blocked.erase(a);
                blocked.erase(b);
                std::map<Vertex, Vertex> parent;
                std::vector<Vertex> queue{a};
                parent[a] = a;
                bool reached = false;
                for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
                    for (Vertex w : g.neighbors(queue[qi])) {
                        if (blocked.count(w) || parent.count(w))
                            continue;
                        parent[w] = queue[qi];
                        if (w == b) {
                            reached = true;
                            break;
                        }
                        queue.push_back(w);
                    }
                }
                if (!reached)
                    continue;
                std::vector<Vertex> path;
                for (Vertex w = b; w != a; w = parent.at(w))
                    path.push_back(w);
                path.push_back(a);
                // path is b..a; cycle reads v, a, ..., b.
                std::vector<Vertex> cycle{v};
                cycle.insert(cycle.end(), path.rbegin(), path.rend());
                return cycle;
            }
        }
    }
    return std::nullopt;
}

/// Maximum clique of a chordal graph, read off a perfect elimination ordering.
inline VertexSet chordal_max_clique(const Graph& g) {
    auto order = mcs_order(g);
    std::map<Vertex, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = i;
    VertexSet best;
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexSet clique;
        for (Vertex u : g.neighbors(order[i]))
            if (pos.at(u) < i)
                clique.insert(u);
        clique.insert(order[i]);
        if (clique.size() > best.size())
            best = clique;
    }
    return best;
}

struct KtreeWitness {
    enum class Kind {
        ChordlessCycle, // vertices: the cycle in order
        BigClique,      // vertices: a (k+2)-clique
        DeadEnd,        // vertices: remaining vertices; cannot occur for genuine inputs
    };
    Kind kind = Kind::DeadEnd;
    std::vector<Vertex> vertices;
    std::string detail;
};

struct KtreeRecognition {
    std::optional<BuildOrder> order;
    std::optional<KtreeWitness> witness;

    bool ok() const { return order.has_value(); }
};

/// Repeatedly delete the lowest-id vertex whose neighborhood is a clique of
/// size <= k; the deletions reversed are the construction order. On failure
/// the result carries a certificate instead.
///
/// A vertex that fails the test cannot start passing until one of its
/// neighbors is deleted, so candidates are kept in a worklist and only
/// re-entered on neighbor deletion; the pick is still the lowest qualifying
/// id overall, because every qualifying vertex is in the worklist.
inline KtreeRecognition recognize_ktree(const Graph& g, int k) {
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");
    Graph rest = g;
    VertexSet maybe = g.vertex_set();
    std::vector<BuildStep> peeled;
    peeled.reserve(g.vertex_count());
    while (rest.vertex_count() > 0) {
        Vertex pick = -1;
        for (auto it = maybe.begin(); it != maybe.end();) {
            const VertexSet& nbrs = rest.neighbors(*it);
            if (nbrs.size() <= static_cast<std::size_t>(k) && is_clique(rest, nbrs)) {
                pick = *it;
                break;
            }
            it = maybe.erase(it);
        }
        if (pick < 0)
            break;
        VertexSet nbrs = rest.neighbors(pick);
        peeled.push_back({pick, nbrs});
        rest.remove_vertex(pick);
        maybe.erase(pick);
        maybe.insert(nbrs.begin(), nbrs.end());
    }

    if (rest.vertex_count() == 0) {
        std::reverse(peeled.begin(), peeled.end());
        return {BuildOrder{k, std::move(peeled)}, std::nullopt};
    }

    if (auto cycle = find_chordless_cycle(rest)) {
        KtreeWitness w;
        w.kind = KtreeWitness::Kind::ChordlessCycle;
        w.vertices = *cycle;
        w.detail = "chordless cycle on " + std::to_string(cycle->size()) + " vertices";
        return {std::nullopt, std::move(w)};
    }

    // Chordal remainder that still has no qualifying vertex must contain a
    // clique of more than k+1 vertices.
    VertexSet clique = chordal_max_clique(rest);
    if (clique.size() >= static_cast<std::size_t>(k) + 2) {
        KtreeWitness w;
        w.kind = KtreeWitness::Kind::BigClique;
        w.vertices.assign(clique.begin(), clique.end());
        w.vertices.resize(static_cast<std::size_t>(k) + 2);
        w.detail = "clique on " + std::to_string(k + 2) + " vertices";
        return {std::nullopt, std::move(w)};
    }

    KtreeWitness w;
    w.kind = KtreeWitness::Kind::DeadEnd;
    w.vertices = rest.vertex_list();
    w.detail = "no vertex with a clique neighborhood of size <= k remains";
    return {std::nullopt, std::move(w)};
}

/// Thrown by treewidth_chordal on non-chordal input; carries a certificate.
struct NotChordalError : std::invalid_argument {
    std::vector<Vertex> cycle;

    explicit NotChordalError(std::vector<Vertex> c)
        : std::invalid_argument("graph is not chordal"), cycle(std::move(c)) {}
};

/// Treewidth of a chordal graph: max clique size minus one, read off the
/// elimination ordering. The empty graph has treewidth -1 by convention.
inline int treewidth_chordal(const Graph& g) {
    auto order = mcs_order(g);
    std::map<Vertex, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = i;
    if (order.empty())
        return -1;
    std::size_t widest = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexSet earlier;
        for (Vertex u : g.neighbors(order[i]))
            if (pos.at(u) < i)
                earlier.insert(u);
        if (!is_clique(g, earlier))
            throw NotChordalError(find_chordless_cycle(g).value());
        widest = std::max(widest, earlier.size());
    }
    return static_cast<int>(widest);
}

} // namespace ktp
