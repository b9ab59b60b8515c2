#pragma once

// Oriented k-trees: acyclic orientations in which every in-neighborhood is
// a clique of size <= k. oriented_ltree_partition builds, for l <= k, an
// oriented l-tree partition whose bags induce weakly connected oriented
// (k-l)-trees and whose every node x has Q(x) — the in-neighbors of the bag
// from outside it — a clique of size <= k.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktp/chordal.hpp"
#include "ktp/graph.hpp"
#include "ktp/partition.hpp"

namespace ktp {

struct OrientedBuildStep {
    Vertex vertex = 0;
    VertexSet in_attachment; // arcs run from each member to the new vertex

    friend bool operator==(const OrientedBuildStep&, const OrientedBuildStep&) = default;
};

struct OrientedBuildOrder {
    int k = 0;
    std::vector<OrientedBuildStep> steps;

    friend bool operator==(const OrientedBuildOrder&, const OrientedBuildOrder&) = default;
};

/// Rebuild the digraph an OrientedBuildOrder describes, checking every step.
inline OrientedGraph replay(const OrientedBuildOrder& order) {
    if (order.k < 0)
        throw std::invalid_argument("build order parameter k must be non-negative");
    OrientedGraph d;
    Graph shadow; // underlying graph so far, for the clique checks
    for (const OrientedBuildStep& step : order.steps) {
        if (d.has_vertex(step.vertex))
            throw std::invalid_argument("build order adds vertex " +
                                        std::to_string(step.vertex) + " twice");
        if (step.in_attachment.size() > static_cast<std::size_t>(order.k))
            throw std::invalid_argument("in-attachment of vertex " +
                                        std::to_string(step.vertex) + " is larger than k");
        for (Vertex a : step.in_attachment)
            if (!d.has_vertex(a))
                throw std::invalid_argument("in-attachment of vertex " +
                                            std::to_string(step.vertex) +
                                            " references vertex " + std::to_string(a) +
                                            " that is not added yet");
        if (!is_clique(shadow, step.in_attachment))
            throw std::invalid_argument("in-attachment of vertex " +
                                        std::to_string(step.vertex) +
                                        " is not a clique of the underlying graph");
        d.add_vertex(step.vertex);
        shadow.add_vertex(step.vertex);
        for (Vertex a : step.in_attachment) {
            d.add_arc(a, step.vertex);
            shadow.add_edge(a, step.vertex);
        }
    }
    return d;
}

struct OrientedWitness {
    enum class Kind {
        DirectedCycle, // vertices: the cycle in order
        BadSink,       // vertices: the sink, then the offending in-neighbors
    };
    Kind kind = Kind::BadSink;
    std::vector<Vertex> vertices;
    std::string detail;
};

struct OrientedRecognition {
    std::optional<OrientedBuildOrder> order;
    std::optional<OrientedWitness> witness;

    bool ok() const { return order.has_value(); }
};

/// Repeatedly remove the lowest-id vertex with no out-arcs whose
/// in-neighborhood is a clique (in the underlying graph) of size <= k; the
/// removals reversed are the construction order. Removing such a sink never
/// changes anyone else's in-neighborhood, so the choice order is immaterial.
inline OrientedRecognition recognize_oriented_ktree(const OrientedGraph& d, int k) {
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");

    auto in_clique = [](const OrientedGraph& rest, const VertexSet& s) {
        for (auto i = s.begin(); i != s.end(); ++i) {
            auto j = i;
            for (++j; j != s.end(); ++j)
                if (!rest.has_arc(*i, *j) && !rest.has_arc(*j, *i))
                    return false;
        }
        return true;
    };

    // A vertex can only start qualifying when an out-neighbor is deleted
    // (its in-neighborhood is fixed while it is alive), so candidates are
    // re-entered into the worklist only on those deletions.
    OrientedGraph rest = d;
    VertexSet maybe;
    for (Vertex v : d.vertex_list())
        maybe.insert(v);
    std::vector<OrientedBuildStep> peeled;
    peeled.reserve(d.vertex_count());
    while (rest.vertex_count() > 0) {
        Vertex pick = -1;
        for (auto it = maybe.begin(); it != maybe.end();) {
            Vertex v = *it;
            if (rest.out_neighbors(v).empty()) {
                const VertexSet& preds = rest.in_neighbors(v);
                if (preds.size() <= static_cast<std::size_t>(k) && in_clique(rest, preds)) {
                    pick = v;
                    break;
                }
            }
            it = maybe.erase(it);
        }
        if (pick < 0)
            break;
        VertexSet preds = rest.in_neighbors(pick);
        peeled.push_back({pick, preds});
        rest.remove_vertex(pick);
        maybe.erase(pick);
        maybe.insert(preds.begin(), preds.end());
    }

    if (rest.vertex_count() == 0) {
        std::reverse(peeled.begin(), peeled.end());
        return {OrientedBuildOrder{k, std::move(peeled)}, std::nullopt};
    }

    if (auto cycle = find_directed_cycle(rest)) {
        OrientedWitness w;
        w.kind = OrientedWitness::Kind::DirectedCycle;
        w.vertices = *cycle;
        w.detail = "directed cycle on " + std::to_string(cycle->size()) + " vertices";
        return {std::nullopt, std::move(w)};
    }

    // Acyclic but stuck: the lowest-id sink has a bad in-neighborhood.
    for (const auto& [v, succ] : rest.out_adjacency()) {
        if (!succ.empty())
            continue;
        const VertexSet& preds = rest.in_neighbors(v);
        OrientedWitness w;
        w.kind = OrientedWitness::Kind::BadSink;
        w.vertices.push_back(v);
        w.vertices.insert(w.vertices.end(), preds.begin(), preds.end());
        w.detail = preds.size() > static_cast<std::size_t>(k)
                       ? "sink " + std::to_string(v) + " has in-degree " +
                             std::to_string(preds.size()) + " > k"
                       : "sink " + std::to_string(v) +
                             " has a non-clique in-neighborhood";
        return {std::nullopt, std::move(w)};
    }
    throw std::logic_error("internal: acyclic nonempty digraph with no sink");
}

/// Orient every edge of a k-tree from the earlier-added endpoint to the
/// later-added one. The result is an oriented k-tree whose in-attachments
/// equal the BuildOrder attachments.
inline OrientedGraph orient_from_buildorder(const BuildOrder& order) {
    replay(order); // validates; throws on a malformed order
    OrientedGraph d;
    for (const BuildStep& step : order.steps) {
        d.add_vertex(step.vertex);
        for (Vertex a : step.attachment)
            d.add_arc(a, step.vertex);
    }
    return d;
}

struct OrientedHPartition {
    OrientedGraph host;
    std::map<Vertex, VertexSet> bags;

    friend bool operator==(const OrientedHPartition&, const OrientedHPartition&) = default;
};

/// Q(x): in-neighbors of bag members from outside the bag.
inline VertexSet q_set(const OrientedGraph& d, const VertexSet& bag) {
    VertexSet q;
    for (Vertex v : bag)
        for (Vertex u : d.in_neighbors(v))
            if (!bag.count(u))
                q.insert(u);
    return q;
}

/// Build an oriented l-tree partition of the oriented k-tree described by
/// `order`, with t = k - l. Like ltree_partition, but Case 2 has no freedom:
/// the touched nodes induce an acyclic tournament in the host and the new
/// vertex joins the bag of its unique sink, which meets the in-attachment in
/// at most t vertices (every other touched bag meets it in at least one).
/// Q is maintained incrementally and checked against a from-scratch
/// recomputation at every step.
inline OrientedHPartition oriented_ltree_partition(const OrientedGraph& d,
                                                   const OrientedBuildOrder& order, int l) {
    if (l < 0 || l > order.k)
        throw std::invalid_argument("require 0 <= l <= k");
    if (replay(order) != d)
        throw std::invalid_argument("build order does not reproduce the digraph");
    const std::size_t t = static_cast<std::size_t>(order.k - l);

    OrientedHPartition p;
    std::map<Vertex, Vertex> node_of;
    std::map<Vertex, VertexSet> q; // incrementally maintained Q per node
    Vertex next_node = 0;

    for (const OrientedBuildStep& step : order.steps) {
        VertexSet touched;
        for (Vertex a : step.in_attachment)
            touched.insert(node_of.at(a));
        if (touched.size() > static_cast<std::size_t>(l) + 1)
            throw std::logic_error("internal: more than l+1 touched nodes");
        for (auto i = touched.begin(); i != touched.end(); ++i) {
            auto j = i;
            for (++j; j != touched.end(); ++j)
                if (!p.host.has_arc(*i, *j) && !p.host.has_arc(*j, *i))
                    throw std::logic_error("internal: touched nodes do not form a host clique");
        }

        Vertex y;
        if (touched.size() <= static_cast<std::size_t>(l)) {
            y = next_node++;
            p.host.add_vertex(y);
            for (Vertex x : touched)
                p.host.add_arc(x, y);
            p.bags[y] = {step.vertex};
            q[y] = step.in_attachment;
        } else {
            // Unique sink of the tournament the touched nodes induce.
            Vertex sink = -1;
            for (Vertex x : touched) {
                bool out = false;
                for (Vertex z : touched)
                    if (z != x && p.host.has_arc(x, z))
                        out = true;
                if (!out) {
                    if (sink >= 0)
                        throw std::logic_error("internal: tournament has two sinks");
                    sink = x;
                }
            }
            if (sink < 0)
                throw std::logic_error("internal: tournament has no sink");
            y = sink;
            std::size_t meet = 0;
            for (Vertex a : step.in_attachment)
                if (p.bags.at(y).count(a))
                    ++meet;
            if (meet > t)
                throw std::logic_error("internal: sink bag meets the in-attachment in more "
                                       "than t vertices");
            p.bags.at(y).insert(step.vertex);
        }
        node_of[step.vertex] = y;

        // Adding the vertex must leave Q(y) unchanged (Case 2) or equal to
        // the in-attachment (Case 1); d can stand in for the graph built so
        // far because in-neighborhoods never change after insertion.
        if (q.at(y) != q_set(d, p.bags.at(y)))
            throw std::logic_error("internal: Q changed when vertex " +
                                   std::to_string(step.vertex) + " joined node " +
                                   std::to_string(y));
    }
    return p;
}

/// Full check of an oriented l-tree partition: the underlying H-partition
/// definition, arc consistency, the host an oriented l-tree, every bag a
/// weakly connected oriented (k-l)-tree, and every Q(x) a clique of size
/// <= k in the underlying graph.
inline ValidationReport validate_oriented_partition(const OrientedGraph& d,
                                                    const OrientedHPartition& p,
                                                    int k, int l) {
    if (l < 0 || l > k)
        throw std::invalid_argument("require 0 <= l <= k");
    const Graph underlying = underlying_graph(d);
    const Graph host_underlying = underlying_graph(p.host);
    ValidationReport r = validate_hpartition(underlying, HPartition{host_underlying, p.bags});

    std::map<Vertex, Vertex> owner;
    for (const auto& [x, bag] : p.bags)
        for (Vertex v : bag)
            owner.try_emplace(v, x);

    // Arc consistency: an edge between bags joined by host arc x->y must be
    // oriented from the x side to the y side.
    for (const auto& [u, w] : d.arc_list()) {
        auto iu = owner.find(u);
        auto iw = owner.find(w);
        if (iu == owner.end() || iw == owner.end())
            continue;
        Vertex x = iu->second, y = iw->second;
        if (x != y && p.host.has_arc(y, x))
            r.violations.push_back({Cond::ArcInconsistent,
                                    "edge {" + std::to_string(u) + "," + std::to_string(w) +
                                        "} is oriented " + std::to_string(u) + "->" +
                                        std::to_string(w) + " against host arc " +
                                        std::to_string(y) + "->" + std::to_string(x),
                                    {u, w}});
    }

    if (!recognize_oriented_ktree(p.host, l).ok())
        r.violations.push_back({Cond::HostNotLTree,
                                "host is not an oriented " + std::to_string(l) + "-tree",
                                p.host.vertex_list()});

    const int t = k - l;
    for (const auto& [x, bag] : p.bags) {
        bool known = !bag.empty();
        for (Vertex v : bag)
            if (!d.has_vertex(v))
                known = false;
        if (!known)
            continue; // already reported
        OrientedGraph sub = induced_subdigraph(d, bag);
        if (!is_connected(underlying_graph(sub)) || !recognize_oriented_ktree(sub, t).ok())
            r.violations.push_back({Cond::BagNotTTree,
                                    "bag " + std::to_string(x) +
                                        " does not induce a weakly connected oriented " +
                                        std::to_string(t) + "-tree",
                                    std::vector<Vertex>(bag.begin(), bag.end())});
        VertexSet qx = q_set(d, bag);
        if (qx.size() > static_cast<std::size_t>(k) || !is_clique(underlying, qx))
            r.violations.push_back({Cond::QNotClique,
                                    "Q(" + std::to_string(x) + ") is not a clique of size <= " +
                                        std::to_string(k),
                                    std::vector<Vertex>(qx.begin(), qx.end())});
    }
    return r;
}

} // namespace ktp
