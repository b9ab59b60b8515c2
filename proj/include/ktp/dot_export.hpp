#pragma once

// DOT rendering for graph and partition documents. Output is diff-stable:
// vertices and edges are emitted in ascending order. Partitions render each
// bag as cluster_<node-id> and each host edge as an edge between the bags'
// lowest vertices, clipped to the cluster borders.

#include <algorithm>
#include <string>

#include "ktp/json_io.hpp"

namespace ktp {

inline std::string to_dot(const GraphDocument& doc) {
    const char* head = doc.directed ? "digraph G {\n" : "graph G {\n";
    const char* connector = doc.directed ? " -> " : " -- ";
    std::string out = head;
    std::vector<Vertex> vertices = doc.vertices;
    std::sort(vertices.begin(), vertices.end());
    for (Vertex v : vertices)
        out += "  " + std::to_string(v) + ";\n";
    auto edges = doc.edges;
    if (!doc.directed)
        for (auto& [u, v] : edges)
            if (u > v)
                std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges)
        out += "  " + std::to_string(u) + connector + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

inline std::string to_dot(const PartitionDocument& doc) {
    const char* head = doc.host.directed ? "digraph G {\n" : "graph G {\n";
    const char* connector = doc.host.directed ? " -> " : " -- ";
    std::string out = head;
    out += "  compound=true;\n";

    auto bags = doc.bags;
    std::sort(bags.begin(), bags.end());
    std::map<Vertex, Vertex> anchor; // host node -> lowest vertex of its bag
    for (const auto& [node, verts] : bags) {
        if (verts.empty())
            throw DocumentError("bag " + std::to_string(node) +
                                " is empty and cannot be rendered");
        std::vector<Vertex> sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        anchor[node] = sorted.front();
        out += "  subgraph cluster_" + std::to_string(node) + " {\n";
        out += "    label=\"bag " + std::to_string(node) + "\";\n";
        for (Vertex v : sorted)
            out += "    " + std::to_string(v) + ";\n";
        out += "  }\n";
    }

    auto edges = doc.host.edges;
    if (!doc.host.directed)
        for (auto& [x, y] : edges)
            if (x > y)
                std::swap(x, y);
    std::sort(edges.begin(), edges.end());
    for (const auto& [x, y] : edges) {
        auto ix = anchor.find(x);
        auto iy = anchor.find(y);
        if (ix == anchor.end() || iy == anchor.end())
            throw DocumentError("host edge {" + std::to_string(x) + "," + std::to_string(y) +
                                "} references a node with no bag");
        out += "  " + std::to_string(ix->second) + connector + std::to_string(iy->second) +
               " [ltail=cluster_" + std::to_string(x) + ", lhead=cluster_" +
               std::to_string(y) + "];\n";
    }
    out += "}\n";
    return out;
}

} // namespace ktp
