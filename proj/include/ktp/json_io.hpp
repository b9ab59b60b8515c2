#pragma once

// JSON document schemas for the CLI: GraphDocument and PartitionDocument.
// Parsing is strict — unknown fields are rejected so typos in fixtures
// surface immediately. Structural defects (bad types, duplicate ids, loops)
// throw DocumentError; semantic defects (a partition that does not satisfy
// the definition) are left to the validators so they can be reported with
// witnesses.

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ktp/chordal.hpp"
#include "ktp/graph.hpp"
#include "ktp/oriented.hpp"
#include "ktp/partition.hpp"

namespace ktp {

struct DocumentError : std::runtime_error {
    explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require_fields(const nlohmann::json& j, const std::set<std::string>& known,
                           const std::string& where) {
    if (!j.is_object())
        throw DocumentError(where + " must be a JSON object");
    for (const auto& item : j.items())
        if (!known.count(item.key()))
            throw DocumentError(where + " has unknown field '" + item.key() + "'");
}

inline const nlohmann::json& require_present(const nlohmann::json& j, const std::string& key,
                                             const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw DocumentError(where + " is missing field '" + key + "'");
    return *it;
}

inline int require_id(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw DocumentError(where + " must be an integer");
    auto v = j.get<std::int64_t>();
    if (v < 0 || v > std::numeric_limits<int>::max())
        throw DocumentError(where + " must be a non-negative 32-bit integer");
    return static_cast<int>(v);
}

inline int require_int(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw DocumentError(where + " must be an integer");
    return j.get<int>();
}

} // namespace detail

struct GraphDocument {
    bool directed = false;
    std::vector<Vertex> vertices;                 // unique, ascending not required
    std::vector<std::pair<Vertex, Vertex>> edges; // arcs when directed
    std::optional<BuildOrder> build_order;        // sidecar written by `gen`

    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

inline nlohmann::json to_json(const BuildOrder& order) {
    nlohmann::json steps = nlohmann::json::array();
    for (const BuildStep& s : order.steps)
        steps.push_back({s.vertex, std::vector<Vertex>(s.attachment.begin(),
                                                       s.attachment.end())});
    return {{"k", order.k}, {"steps", std::move(steps)}};
}

inline nlohmann::json to_json(const OrientedBuildOrder& order) {
    nlohmann::json steps = nlohmann::json::array();
    for (const OrientedBuildStep& s : order.steps)
        steps.push_back({s.vertex, std::vector<Vertex>(s.in_attachment.begin(),
                                                       s.in_attachment.end())});
    return {{"k", order.k}, {"steps", std::move(steps)}};
}

inline BuildOrder build_order_from_json(const nlohmann::json& j) {
    detail::require_fields(j, {"k", "steps"}, "build order");
    BuildOrder order;
    order.k = detail::require_id(detail::require_present(j, "k", "build order"),
                                 "build order field 'k'");
    const auto& steps = detail::require_present(j, "steps", "build order");
    if (!steps.is_array())
        throw DocumentError("build order field 'steps' must be an array");
    for (const auto& entry : steps) {
        if (!entry.is_array() || entry.size() != 2 || !entry[1].is_array())
            throw DocumentError("each build order step must be [vertex, [attachment...]]");
        BuildStep step;
        step.vertex = detail::require_id(entry[0], "step vertex");
        for (const auto& a : entry[1])
            if (!step.attachment.insert(detail::require_id(a, "attachment vertex")).second)
                throw DocumentError("step attachment repeats a vertex");
        order.steps.push_back(std::move(step));
    }
    return order;
}

inline OrientedBuildOrder oriented_build_order_from_json(const nlohmann::json& j) {
    BuildOrder plain = build_order_from_json(j);
    OrientedBuildOrder order;
    order.k = plain.k;
    for (BuildStep& s : plain.steps)
        order.steps.push_back({s.vertex, std::move(s.attachment)});
    return order;
}

inline nlohmann::json to_json(const GraphDocument& doc) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : doc.edges)
        edges.push_back({u, v});
    nlohmann::json j{{"directed", doc.directed},
                     {"vertices", doc.vertices},
                     {"edges", std::move(edges)}};
    if (doc.build_order)
        j["build_order"] = to_json(*doc.build_order);
    return j;
}

inline GraphDocument graph_document_from_json(const nlohmann::json& j) {
    detail::require_fields(j, {"directed", "vertices", "edges", "build_order"},
                           "graph document");
    GraphDocument doc;
    const auto& directed = detail::require_present(j, "directed", "graph document");
    if (!directed.is_boolean())
        throw DocumentError("field 'directed' must be a boolean");
    doc.directed = directed.get<bool>();

    const auto& vertices = detail::require_present(j, "vertices", "graph document");
    if (!vertices.is_array())
        throw DocumentError("field 'vertices' must be an array");
    std::set<Vertex> seen;
    for (const auto& v : vertices) {
        Vertex id = detail::require_id(v, "vertex id");
        if (!seen.insert(id).second)
            throw DocumentError("duplicate vertex id " + std::to_string(id));
        doc.vertices.push_back(id);
    }

    const auto& edges = detail::require_present(j, "edges", "graph document");
    if (!edges.is_array())
        throw DocumentError("field 'edges' must be an array");
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw DocumentError("each edge must be a [u, v] pair");
        Vertex u = detail::require_id(e[0], "edge endpoint");
        Vertex v = detail::require_id(e[1], "edge endpoint");
        if (u == v)
            throw DocumentError("loop at vertex " + std::to_string(u));
        if (!seen.count(u) || !seen.count(v))
            throw DocumentError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} references an undeclared vertex");
        std::pair<Vertex, Vertex> normalized =
            doc.directed ? std::pair(u, v) : std::pair(std::min(u, v), std::max(u, v));
        if (!pairs.insert(normalized).second)
            throw DocumentError("duplicate edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
        if (doc.directed && pairs.count({v, u}))
            throw DocumentError("arcs in both directions between " + std::to_string(u) +
                                " and " + std::to_string(v));
        doc.edges.emplace_back(u, v);
    }

    if (auto it = j.find("build_order"); it != j.end()) {
        if (doc.directed)
            throw DocumentError("'build_order' is only valid on undirected documents");
        doc.build_order = build_order_from_json(*it);
    }
    return doc;
}

inline Graph to_graph(const GraphDocument& doc) {
    if (doc.directed)
        throw DocumentError("expected an undirected graph document");
    Graph g;
    for (Vertex v : doc.vertices)
        g.add_vertex(v);
    for (const auto& [u, v] : doc.edges)
        g.add_edge(u, v);
    return g;
}

inline OrientedGraph to_oriented_graph(const GraphDocument& doc) {
    if (!doc.directed)
        throw DocumentError("expected a directed graph document");
    OrientedGraph d;
    for (Vertex v : doc.vertices)
        d.add_vertex(v);
    for (const auto& [u, v] : doc.edges)
        d.add_arc(u, v);
    return d;
}

inline GraphDocument make_document(const Graph& g) {
    GraphDocument doc;
    doc.directed = false;
    doc.vertices = g.vertex_list();
    doc.edges = g.edge_list();
    return doc;
}

inline GraphDocument make_document(const OrientedGraph& d) {
    GraphDocument doc;
    doc.directed = true;
    doc.vertices = d.vertex_list();
    doc.edges = d.arc_list();
    return doc;
}

struct PartitionDocument {
    GraphDocument host; // directed iff the partition is oriented
    std::vector<std::pair<Vertex, std::vector<Vertex>>> bags; // (node, vertices), by node
    int k = 0;
    int l = 0;
    int t = 0;

    friend bool operator==(const PartitionDocument&, const PartitionDocument&) = default;
};

inline nlohmann::json to_json(const PartitionDocument& doc) {
    nlohmann::json bags = nlohmann::json::array();
    for (const auto& [node, verts] : doc.bags)
        bags.push_back({node, verts});
    return {{"host", to_json(doc.host)},
            {"bags", std::move(bags)},
            {"parameters", {{"k", doc.k}, {"l", doc.l}, {"t", doc.t}}}};
}

inline PartitionDocument partition_document_from_json(const nlohmann::json& j) {
    detail::require_fields(j, {"host", "bags", "parameters"}, "partition document");
    PartitionDocument doc;
    doc.host = graph_document_from_json(detail::require_present(j, "host",
                                                                "partition document"));

    const auto& bags = detail::require_present(j, "bags", "partition document");
    if (!bags.is_array())
        throw DocumentError("field 'bags' must be an array");
    std::set<Vertex> nodes;
    for (const auto& entry : bags) {
        if (!entry.is_array() || entry.size() != 2 || !entry[1].is_array())
            throw DocumentError("each bag must be [node, [vertices...]]");
        Vertex node = detail::require_id(entry[0], "bag node id");
        if (!nodes.insert(node).second)
            throw DocumentError("duplicate bag node id " + std::to_string(node));
        std::vector<Vertex> verts;
        std::set<Vertex> unique;
        for (const auto& v : entry[1]) {
            Vertex id = detail::require_id(v, "bag vertex");
            if (!unique.insert(id).second)
                throw DocumentError("bag " + std::to_string(node) + " repeats vertex " +
                                    std::to_string(id));
            verts.push_back(id);
        }
        doc.bags.emplace_back(node, std::move(verts));
    }

    const auto& params = detail::require_present(j, "parameters", "partition document");
    detail::require_fields(params, {"k", "l", "t"}, "parameters");
    doc.k = detail::require_int(detail::require_present(params, "k", "parameters"), "k");
    doc.l = detail::require_int(detail::require_present(params, "l", "parameters"), "l");
    doc.t = detail::require_int(detail::require_present(params, "t", "parameters"), "t");
    return doc;
}

inline PartitionDocument make_document(const HPartition& p, int k, int l, int t) {
    PartitionDocument doc;
    doc.host = make_document(p.host);
    for (const auto& [node, bag] : p.bags)
        doc.bags.emplace_back(node, std::vector<Vertex>(bag.begin(), bag.end()));
    doc.k = k;
    doc.l = l;
    doc.t = t;
    return doc;
}

inline PartitionDocument make_document(const OrientedHPartition& p, int k, int l, int t) {
    PartitionDocument doc;
    doc.host = make_document(p.host);
    for (const auto& [node, bag] : p.bags)
        doc.bags.emplace_back(node, std::vector<Vertex>(bag.begin(), bag.end()));
    doc.k = k;
    doc.l = l;
    doc.t = t;
    return doc;
}

inline HPartition to_hpartition(const PartitionDocument& doc) {
    HPartition p;
    p.host = to_graph(doc.host);
    for (const auto& [node, verts] : doc.bags)
        p.bags[node] = VertexSet(verts.begin(), verts.end());
    return p;
}

inline OrientedHPartition to_oriented_hpartition(const PartitionDocument& doc) {
    OrientedHPartition p;
    p.host = to_oriented_graph(doc.host);
    for (const auto& [node, verts] : doc.bags)
        p.bags[node] = VertexSet(verts.begin(), verts.end());
    return p;
}

inline nlohmann::json to_json(const KtreeWitness& w) {
    const char* kind = nullptr;
    switch (w.kind) {
    case KtreeWitness::Kind::ChordlessCycle: kind = "chordless-cycle"; break;
    case KtreeWitness::Kind::BigClique: kind = "clique-too-large"; break;
    case KtreeWitness::Kind::DeadEnd: kind = "dead-end"; break;
    }
    return {{"kind", kind}, {"vertices", w.vertices}, {"detail", w.detail}};
}

inline nlohmann::json to_json(const OrientedWitness& w) {
    const char* kind = w.kind == OrientedWitness::Kind::DirectedCycle ? "directed-cycle"
                                                                      : "bad-sink";
    return {{"kind", kind}, {"vertices", w.vertices}, {"detail", w.detail}};
}

inline nlohmann::json to_json(const ValidationReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const Violation& v : r.violations)
        violations.push_back({{"condition", cond_name(v.cond)},
                              {"detail", v.detail},
                              {"witness", v.witness}});
    return {{"ok", r.ok()}, {"violations", std::move(violations)}};
}

/// Serialize with a stable layout: two-space indent, alphabetical keys
/// (nlohmann's default object ordering), trailing newline, LF endings.
inline std::string render_document(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace ktp
