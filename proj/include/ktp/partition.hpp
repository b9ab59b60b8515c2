#pragma once

// H-partitions: a host graph H plus one bag of G-vertices per host node,
// such that bags partition V(G) and every cross-bag edge of G is mirrored
// by a host edge. ltree_partition builds, for any k-tree given by a
// BuildOrder and any l <= k, an H-partition whose host is an l-tree and
// whose every bag induces a connected floor(k/(l+1))-tree.

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ktp/chordal.hpp"
#include "ktp/graph.hpp"

namespace ktp {

struct HPartition {
    Graph host;                        // nodes of H
    std::map<Vertex, VertexSet> bags;  // host node -> vertices of G

    friend bool operator==(const HPartition&, const HPartition&) = default;
};

enum class Cond {
    Coverage,        // vertex of G in no bag
    Disjointness,    // vertex of G in two bags
    EdgeUncovered,   // edge of G joins bags whose nodes are not adjacent in H
    EmptyBag,
    UnknownVertex,   // bag refers to a vertex G does not have
    UnknownNode,     // bag key is not a host node
    HostNotLTree,
    BagNotTTree,     // bag fails connected-t-tree (weakly connected oriented, when oriented)
    ArcInconsistent, // edge oriented against its host arc
    QNotClique,      // union of outside in-neighbors of a bag is not a small clique
    Parameters,      // declared parameters are inconsistent
};

inline const char* cond_name(Cond c) {
    switch (c) {
    case Cond::Coverage: return "coverage";
    case Cond::Disjointness: return "disjointness";
    case Cond::EdgeUncovered: return "edge-uncovered";
    case Cond::EmptyBag: return "empty-bag";
    case Cond::UnknownVertex: return "unknown-vertex";
    case Cond::UnknownNode: return "unknown-node";
    case Cond::HostNotLTree: return "host-not-l-tree";
    case Cond::BagNotTTree: return "bag-not-t-tree";
    case Cond::ArcInconsistent: return "arc-inconsistent";
    case Cond::QNotClique: return "q-not-clique";
    case Cond::Parameters: return "parameters";
    }
    return "?";
}

struct Violation {
    Cond cond;
    std::string detail;
    std::vector<Vertex> witness; // vertices, edge endpoints, or host nodes, per cond
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Check the H-partition definition: coverage, disjointness, the edge
/// condition, and the no-empty-bag convention. Structural defects (bag keys
/// that are not host nodes, bag vertices G does not have) are reported too
/// rather than thrown, so arbitrary documents can be checked.
inline ValidationReport validate_hpartition(const Graph& g, const HPartition& p) {
    ValidationReport r;

    for (const auto& [x, bag] : p.bags)
        if (!p.host.has_vertex(x))
            r.violations.push_back({Cond::UnknownNode,
                                    "bag key " + std::to_string(x) + " is not a host node",
                                    {x}});
    for (Vertex x : p.host.vertex_list()) {
        auto it = p.bags.find(x);
        if (it == p.bags.end() || it->second.empty())
            r.violations.push_back({Cond::EmptyBag,
                                    "host node " + std::to_string(x) + " has an empty bag",
                                    {x}});
    }

    std::map<Vertex, Vertex> owner; // G vertex -> host node
    for (const auto& [x, bag] : p.bags) {
        for (Vertex v : bag) {
            if (!g.has_vertex(v)) {
                r.violations.push_back({Cond::UnknownVertex,
                                        "bag " + std::to_string(x) + " contains vertex " +
                                            std::to_string(v) + " which is not in the graph",
                                        {v}});
                continue;
            }
            auto [it, inserted] = owner.try_emplace(v, x);
            if (!inserted)
                r.violations.push_back({Cond::Disjointness,
                                        "vertex " + std::to_string(v) + " lies in bags " +
                                            std::to_string(it->second) + " and " +
                                            std::to_string(x),
                                        {v}});
        }
    }
    for (Vertex v : g.vertex_list())
        if (!owner.count(v))
            r.violations.push_back({Cond::Coverage,
                                    "vertex " + std::to_string(v) + " lies in no bag",
                                    {v}});

    for (const auto& [u, w] : g.edge_list()) {
        auto iu = owner.find(u);
        auto iw = owner.find(w);
        if (iu == owner.end() || iw == owner.end())
            continue; // already reported as a coverage violation
        Vertex x = iu->second, y = iw->second;
        if (x != y && !(p.host.has_vertex(x) && p.host.has_vertex(y) && p.host.has_edge(x, y)))
            r.violations.push_back({Cond::EdgeUncovered,
                                    "edge {" + std::to_string(u) + "," + std::to_string(w) +
                                        "} joins bags " + std::to_string(x) + " and " +
                                        std::to_string(y) + " with no host edge",
                                    {u, w}});
    }
    return r;
}

/// Contract each bag to a single node; nodes keep the bag keys, and two
/// nodes are adjacent iff some edge of g crosses their bags. The bags must
/// partition V(g) with no empty bag.
inline Graph quotient_graph(const Graph& g, const std::map<Vertex, VertexSet>& bags) {
    std::map<Vertex, Vertex> owner;
    for (const auto& [x, bag] : bags) {
        if (bag.empty())
            throw std::invalid_argument("quotient_graph: bag " + std::to_string(x) +
                                        " is empty");
        for (Vertex v : bag) {
            if (!g.has_vertex(v))
                throw std::invalid_argument("quotient_graph: vertex " + std::to_string(v) +
                                            " is not in the graph");
            if (!owner.try_emplace(v, x).second)
                throw std::invalid_argument("quotient_graph: vertex " + std::to_string(v) +
                                            " lies in two bags");
        }
    }
    if (owner.size() != g.vertex_count()) {
        for (Vertex v : g.vertex_list())
            if (!owner.count(v))
                throw std::invalid_argument("quotient_graph: vertex " + std::to_string(v) +
                                            " lies in no bag");
    }
    Graph q;
    for (const auto& [x, bag] : bags)
        q.add_vertex(x);
    for (const auto& [u, w] : g.edge_list()) {
        Vertex x = owner.at(u), y = owner.at(w);
        if (x != y)
            q.add_edge(x, y);
    }
    return q;
}

inline bool is_ltree(const Graph& g, int l) { return recognize_ktree(g, l).ok(); }

/// True iff the bag induces a connected subgraph that is a t-tree.
inline bool bag_is_connected_ttree(const Graph& g, const VertexSet& bag, int t) {
    Graph sub = induced_subgraph(g, bag);
    return is_connected(sub) && recognize_ktree(sub, t).ok();
}

/// Build an l-tree partition of the k-tree described by `order`, replaying
/// the construction order forward. With t = floor(k/(l+1)), the result's
/// host is an l-tree and every bag induces a connected t-tree in g. Each
/// vertex v with attachment A either opens a new host node adjacent to the
/// nodes its attachment touches (when they number at most l), or joins the
/// touched bag meeting A in at most t vertices (one always exists: the
/// touched nodes form a host clique of size l+1, and if every such bag met
/// A in more than t vertices then |A| >= (t+1)(l+1) > k).
inline HPartition ltree_partition(const Graph& g, const BuildOrder& order, int l) {
    if (l < 0 || l > order.k)
        throw std::invalid_argument("require 0 <= l <= k");
    if (replay(order) != g)
        throw std::invalid_argument("build order does not reproduce the graph");
    const std::size_t t = static_cast<std::size_t>(order.k / (l + 1));

    HPartition p;
    std::map<Vertex, Vertex> node_of; // G vertex -> host node
    Vertex next_node = 0;

    for (const BuildStep& step : order.steps) {
        VertexSet touched;
        for (Vertex a : step.attachment)
            touched.insert(node_of.at(a));
        if (!is_clique(p.host, touched))
            throw std::logic_error("internal: touched nodes do not form a host clique");
        if (touched.size() > static_cast<std::size_t>(l) + 1)
            throw std::logic_error("internal: more than l+1 touched nodes");

        if (touched.size() <= static_cast<std::size_t>(l)) {
            Vertex y = next_node++;
            p.host.add_vertex(y);
            for (Vertex x : touched)
                p.host.add_edge(x, y);
            p.bags[y] = {step.vertex};
            node_of[step.vertex] = y;
        } else {
            Vertex best = -1;
            std::size_t best_meet = std::numeric_limits<std::size_t>::max();
            for (Vertex x : touched) { // ascending ids, so ties keep the lowest
                std::size_t meet = 0;
                for (Vertex a : step.attachment)
                    if (p.bags.at(x).count(a))
                        ++meet;
                if (meet < best_meet) {
                    best = x;
                    best_meet = meet;
                }
            }
            if (best_meet > t)
                throw std::logic_error("internal: every touched bag meets the attachment "
                                       "in more than t vertices");
            p.bags.at(best).insert(step.vertex);
            node_of[step.vertex] = best;
        }
    }
    return p;
}

inline std::size_t partition_width(const HPartition& p) {
    std::size_t widest = 0;
    for (const auto& [x, bag] : p.bags)
        widest = std::max(widest, bag.size());
    return widest;
}

/// Full check of an l-tree partition with connected-t-tree bags,
/// t = floor(k/(l+1)): the H-partition definition plus the host and bag
/// conditions.
inline ValidationReport validate_ltree_partition(const Graph& g, const HPartition& p,
                                                 int k, int l) {
    if (l < 0 || l > k)
        throw std::invalid_argument("require 0 <= l <= k");
    ValidationReport r = validate_hpartition(g, p);
    if (!is_ltree(p.host, l))
        r.violations.push_back({Cond::HostNotLTree,
                                "host is not a " + std::to_string(l) + "-tree",
                                p.host.vertex_list()});
    const int t = k / (l + 1);
    for (const auto& [x, bag] : p.bags) {
        bool known = true;
        for (Vertex v : bag)
            if (!g.has_vertex(v))
                known = false; // already reported by validate_hpartition
        if (!known || bag.empty())
            continue;
        if (!bag_is_connected_ttree(g, bag, t))
            r.violations.push_back({Cond::BagNotTTree,
                                    "bag " + std::to_string(x) +
                                        " does not induce a connected " + std::to_string(t) +
                                        "-tree",
                                    std::vector<Vertex>(bag.begin(), bag.end())});
    }
    return r;
}

} // namespace ktp
