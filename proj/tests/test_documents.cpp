#include <catch2/catch.hpp>

#include "ktp/dot_export.hpp"
#include "ktp/harness.hpp"
#include "ktp/json_io.hpp"

using namespace ktp;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

} // namespace

TEST_CASE("graph documents round-trip") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        auto [g, order] = random_ktree({static_cast<int>(rng.below(20)),
                                        static_cast<int>(rng.below(4)), rng.next(), true});
        GraphDocument doc = make_document(g);
        if (trial % 2 == 0)
            doc.build_order = order;
        GraphDocument back = graph_document_from_json(
            nlohmann::json::parse(render_document(to_json(doc))));
        CHECK(back == doc);
        CHECK(to_graph(back) == g);

        GraphDocument odoc = make_document(orient_from_buildorder(order));
        GraphDocument oback = graph_document_from_json(
            nlohmann::json::parse(render_document(to_json(odoc))));
        CHECK(oback == odoc);
        CHECK(to_oriented_graph(oback) == orient_from_buildorder(order));
    }
}

TEST_CASE("graph document parsing is strict") {
    auto parse = [](const char* text) {
        return graph_document_from_json(nlohmann::json::parse(text));
    };
    CHECK_NOTHROW(parse(R"({"directed": false, "vertices": [0, 1], "edges": [[0, 1]]})"));

    // Unknown field.
    CHECK_THROWS_AS(parse(R"({"directed": false, "vertices": [], "edges": [], "extra": 1})"),
                    DocumentError);
    // Missing field.
    CHECK_THROWS_AS(parse(R"({"directed": false, "vertices": []})"), DocumentError);
    // Duplicate vertex.
    CHECK_THROWS_AS(parse(R"({"directed": false, "vertices": [1, 1], "edges": []})"),
                    DocumentError);
    // Loop.
    CHECK_THROWS_AS(parse(R"({"directed": false, "vertices": [0], "edges": [[0, 0]]})"),
                    DocumentError);
    // Undeclared endpoint.
    CHECK_THROWS_AS(parse(R"({"directed": false, "vertices": [0], "edges": [[0, 1]]})"),
                    DocumentError);
    // Duplicate unordered pair.
    CHECK_THROWS_AS(
        parse(R"({"directed": false, "vertices": [0, 1], "edges": [[0, 1], [1, 0]]})"),
        DocumentError);
    // Digon on a directed document.
    CHECK_THROWS_AS(
        parse(R"({"directed": true, "vertices": [0, 1], "edges": [[0, 1], [1, 0]]})"),
        DocumentError);
    // Negative id.
    CHECK_THROWS_AS(parse(R"({"directed": false, "vertices": [-1], "edges": []})"),
                    DocumentError);
    // build_order on a directed document.
    CHECK_THROWS_AS(parse(R"({"directed": true, "vertices": [0], "edges": [],
                              "build_order": {"k": 0, "steps": [[0, []]]}})"),
                    DocumentError);
    // Directedness mismatch at conversion time.
    GraphDocument undirected = parse(R"({"directed": false, "vertices": [0], "edges": []})");
    CHECK_THROWS_AS(to_oriented_graph(undirected), DocumentError);
    CHECK_THROWS_AS(to_graph(parse(R"({"directed": true, "vertices": [], "edges": []})")),
                    DocumentError);
}

TEST_CASE("build orders round-trip through JSON") {
    BuildOrder order{3, {{1, {}}, {2, {1}}, {3, {1, 2}}, {4, {1, 2, 3}}}};
    CHECK(build_order_from_json(to_json(order)) == order);

    OrientedBuildOrder oorder{2, {{0, {}}, {4, {0}}, {7, {0, 4}}}};
    auto oback = oriented_build_order_from_json(to_json(oorder));
    CHECK(oback == oorder);

    CHECK_THROWS_AS(build_order_from_json(nlohmann::json::parse(
                        R"({"k": 1, "steps": [[0, [2, 2]]]})")),
                    DocumentError);
}

TEST_CASE("partition documents round-trip") {
    Graph k4;
    for (Vertex v : {1, 2, 3, 4})
        k4.add_vertex(v);
    for (Vertex u : {1, 2, 3})
        for (Vertex v = u + 1; v <= 4; ++v)
            k4.add_edge(u, v);
    BuildOrder order{3, {{1, {}}, {2, {1}}, {3, {1, 2}}, {4, {1, 2, 3}}}};
    HPartition p = ltree_partition(k4, order, 1);
    PartitionDocument doc = make_document(p, 3, 1, 1);

    PartitionDocument back = partition_document_from_json(
        nlohmann::json::parse(render_document(to_json(doc))));
    CHECK(back == doc);
    CHECK(to_hpartition(back) == p);

    auto bad = nlohmann::json::parse(R"({"host": {"directed": false, "vertices": [0],
        "edges": []}, "bags": [[0, [1]], [0, [2]]], "parameters": {"k": 1, "l": 0, "t": 1}})");
    CHECK_THROWS_AS(partition_document_from_json(bad), DocumentError);

    auto repeated = nlohmann::json::parse(R"({"host": {"directed": false, "vertices": [0],
        "edges": []}, "bags": [[0, [1, 1]]], "parameters": {"k": 1, "l": 0, "t": 1}})");
    CHECK_THROWS_AS(partition_document_from_json(repeated), DocumentError);
}

TEST_CASE("serialization is byte-stable") {
    auto [g, order] = random_ktree({25, 3, 12345, true});
    GraphDocument doc = make_document(g);
    doc.build_order = order;
    std::string once = render_document(to_json(doc));
    std::string twice = render_document(to_json(doc));
    CHECK(once == twice);
    CHECK(once.back() == '\n');
    CHECK(once.find('\r') == std::string::npos);
}

TEST_CASE("DOT export of graphs") {
    Graph k2 = complete_graph(2);
    std::string dot = to_dot(make_document(k2));
    CHECK(dot == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");

    CHECK(to_dot(make_document(Graph{})) == "graph G {\n}\n");

    OrientedGraph d;
    d.add_vertex(0);
    d.add_vertex(1);
    d.add_arc(1, 0);
    CHECK(to_dot(make_document(d)) == "digraph G {\n  0;\n  1;\n  1 -> 0;\n}\n");
}

TEST_CASE("DOT export of partitions renders clusters and host edges") {
    Graph k4;
    for (Vertex v : {1, 2, 3, 4})
        k4.add_vertex(v);
    for (Vertex u : {1, 2, 3})
        for (Vertex v = u + 1; v <= 4; ++v)
            k4.add_edge(u, v);
    BuildOrder order{3, {{1, {}}, {2, {1}}, {3, {1, 2}}, {4, {1, 2, 3}}}};
    HPartition p = ltree_partition(k4, order, 1);
    std::string dot = to_dot(make_document(p, 3, 1, 1));

    CHECK(count_occurrences(dot, "subgraph cluster_") == 2);
    CHECK(count_occurrences(dot, "ltail=") == 1); // one inter-cluster host edge
    CHECK(dot.find("1 -- 2 [ltail=cluster_0, lhead=cluster_1];") != std::string::npos);
}
