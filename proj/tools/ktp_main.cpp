// Command-line front end: recognize / partition / verify / gen / export-dot,
// plus oracle and tightness bindings for the brute-force harness.
//
// Exit codes are a stable contract: 0 success, 1 semantic failure (with a
// witness on stdout), 2 usage or parse failure (diagnostics on stderr).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ktp/ktp.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ktp::DocumentError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ktp::DocumentError("cannot write file: " + out_path);
    out << text;
}

ktp::GraphDocument load_graph_document(const std::string& path) {
    return ktp::graph_document_from_json(nlohmann::json::parse(read_file(path)));
}

ktp::PartitionDocument load_partition_document(const std::string& path) {
    return ktp::partition_document_from_json(nlohmann::json::parse(read_file(path)));
}

int run_recognize(const std::string& path, int k, bool oriented) {
    ktp::GraphDocument doc = load_graph_document(path);
    if (!oriented) {
        ktp::KtreeRecognition rec = ktp::recognize_ktree(ktp::to_graph(doc), k);
        if (rec.ok()) {
            std::cout << ktp::render_document(ktp::to_json(*rec.order));
            return 0;
        }
        std::cout << ktp::render_document({{"witness", ktp::to_json(*rec.witness)}});
        return 1;
    }
    ktp::OrientedRecognition rec =
        ktp::recognize_oriented_ktree(ktp::to_oriented_graph(doc), k);
    if (rec.ok()) {
        std::cout << ktp::render_document(ktp::to_json(*rec.order));
        return 0;
    }
    std::cout << ktp::render_document({{"witness", ktp::to_json(*rec.witness)}});
    return 1;
}

int run_partition(const std::string& path, int k, int l, bool oriented,
                  const std::string& out_path) {
    if (k < 0 || l < 0 || l > k) {
        std::cerr << "error: require 0 <= l <= k\n";
        return 2;
    }
    ktp::GraphDocument doc = load_graph_document(path);
    ktp::PartitionDocument out;
    if (!oriented) {
        ktp::Graph g = ktp::to_graph(doc);
        ktp::KtreeRecognition rec = ktp::recognize_ktree(g, k);
        if (!rec.ok()) {
            std::cout << ktp::render_document({{"witness", ktp::to_json(*rec.witness)}});
            return 1;
        }
        ktp::HPartition p = ktp::ltree_partition(g, *rec.order, l);
        ktp::ValidationReport report = ktp::validate_ltree_partition(g, p, k, l);
        if (!report.ok()) {
            std::cerr << "error: constructed partition failed validation\n";
            std::cout << ktp::render_document(ktp::to_json(report));
            return 1;
        }
        out = ktp::make_document(p, k, l, k / (l + 1));
    } else {
        ktp::OrientedGraph d = ktp::to_oriented_graph(doc);
        ktp::OrientedRecognition rec = ktp::recognize_oriented_ktree(d, k);
        if (!rec.ok()) {
            std::cout << ktp::render_document({{"witness", ktp::to_json(*rec.witness)}});
            return 1;
        }
        ktp::OrientedHPartition p = ktp::oriented_ltree_partition(d, *rec.order, l);
        ktp::ValidationReport report = ktp::validate_oriented_partition(d, p, k, l);
        if (!report.ok()) {
            std::cerr << "error: constructed partition failed validation\n";
            std::cout << ktp::render_document(ktp::to_json(report));
            return 1;
        }
        out = ktp::make_document(p, k, l, k - l);
    }
    write_output(out_path, ktp::render_document(ktp::to_json(out)));
    return 0;
}

const char* check_label(ktp::Cond c) {
    using ktp::Cond;
    switch (c) {
    case Cond::Coverage: return "coverage";
    case Cond::Disjointness: return "disjointness";
    case Cond::EdgeUncovered: return "edges-covered";
    case Cond::EmptyBag: return "no-empty-bags";
    case Cond::UnknownVertex: return "bag-vertices-known";
    case Cond::UnknownNode: return "bag-nodes-known";
    case Cond::HostNotLTree: return "host-l-tree";
    case Cond::BagNotTTree: return "bag-t-trees";
    case Cond::ArcInconsistent: return "arc-consistency";
    case Cond::QNotClique: return "q-cliques";
    case Cond::Parameters: return "parameters";
    }
    return "?";
}

void print_report(const ktp::ValidationReport& report, bool oriented) {
    using ktp::Cond;
    std::vector<Cond> order{Cond::Coverage,      Cond::Disjointness, Cond::EdgeUncovered,
                            Cond::EmptyBag,      Cond::UnknownVertex, Cond::UnknownNode,
                            Cond::HostNotLTree,  Cond::BagNotTTree};
    if (oriented) {
        order.push_back(Cond::ArcInconsistent);
        order.push_back(Cond::QNotClique);
    }
    order.push_back(Cond::Parameters);
    for (Cond c : order) {
        std::vector<const ktp::Violation*> hits;
        for (const ktp::Violation& v : report.violations)
            if (v.cond == c)
                hits.push_back(&v);
        if (hits.empty()) {
            std::cout << check_label(c) << ": pass\n";
            continue;
        }
        std::cout << check_label(c) << ": FAIL (" << hits.size() << ")\n";
        for (const ktp::Violation* v : hits) {
            std::cout << "  - " << v->detail << " [witness:";
            for (ktp::Vertex w : v->witness)
                std::cout << ' ' << w;
            std::cout << "]\n";
        }
    }
}

int run_verify(const std::string& graph_path, const std::string& partition_path, int k,
               int l, bool oriented) {
    if (k < 0 || l < 0 || l > k) {
        std::cerr << "error: require 0 <= l <= k\n";
        return 2;
    }
    ktp::GraphDocument gdoc = load_graph_document(graph_path);
    ktp::PartitionDocument pdoc = load_partition_document(partition_path);
    if (gdoc.directed != oriented || pdoc.host.directed != oriented) {
        std::cerr << "error: document directedness does not match the --oriented flag\n";
        return 2;
    }
    if (pdoc.k != k || pdoc.l != l) {
        std::cerr << "error: partition document declares k=" << pdoc.k << " l=" << pdoc.l
                  << ", flags say k=" << k << " l=" << l << "\n";
        return 2;
    }
    ktp::VertexSet graph_vertices(gdoc.vertices.begin(), gdoc.vertices.end());
    ktp::VertexSet bag_vertices;
    for (const auto& [node, verts] : pdoc.bags)
        bag_vertices.insert(verts.begin(), verts.end());
    if (graph_vertices != bag_vertices) {
        std::cerr << "error: the partition's vertices do not match the graph's vertices\n";
        return 2;
    }

    ktp::ValidationReport report;
    int expected_t;
    if (!oriented) {
        expected_t = k / (l + 1);
        report = ktp::validate_ltree_partition(ktp::to_graph(gdoc),
                                               ktp::to_hpartition(pdoc), k, l);
    } else {
        expected_t = k - l;
        report = ktp::validate_oriented_partition(ktp::to_oriented_graph(gdoc),
                                                  ktp::to_oriented_hpartition(pdoc), k, l);
    }
    if (pdoc.t != expected_t)
        report.violations.push_back({ktp::Cond::Parameters,
                                     "document declares t=" + std::to_string(pdoc.t) +
                                         " but k=" + std::to_string(k) +
                                         ", l=" + std::to_string(l) + " give t=" +
                                         std::to_string(expected_t),
                                     {}});
    print_report(report, oriented);
    return report.ok() ? 0 : 1;
}

int run_gen(int n, int k, std::uint64_t seed, bool partial, const std::string& out_path) {
    auto [g, order] = ktp::random_ktree({n, k, seed, partial});
    ktp::GraphDocument doc = ktp::make_document(g);
    doc.build_order = std::move(order);
    write_output(out_path, ktp::render_document(ktp::to_json(doc)));
    return 0;
}

int run_export_dot(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_file(path));
    if (j.is_object() && j.contains("host"))
        std::cout << ktp::to_dot(ktp::partition_document_from_json(j));
    else
        std::cout << ktp::to_dot(ktp::graph_document_from_json(j));
    return 0;
}

int run_oracle(const std::string& path, int l, int t, std::size_t cap) {
    ktp::Graph g = ktp::to_graph(load_graph_document(path));
    auto found = ktp::oracle_exists_partition(g, l, t, cap);
    if (!found) {
        std::cout << "none\n";
        return 1;
    }
    // Smallest k consistent with the (l, t) pair, for the document fields.
    int k = std::max(l, t * (l + 1));
    std::cout << ktp::render_document(ktp::to_json(ktp::make_document(*found, k, l, t)));
    return 0;
}

int run_tightness(int k, int l, int cap) {
    bool tight = ktp::certify_tightness(k, l, cap);
    int t = k / (l + 1);
    std::cout << "K_" << (k + 1) << " with l=" << l << ": t=" << t
              << (tight ? " certified tight" : " NOT tight") << "\n";
    return tight ? 0 : 1;
}

template <class F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const ktp::DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-tree recognition, l-tree partitions, and brute-force certification"};
    app.require_subcommand(1);

    std::string input, graph_path, partition_path, out_path;
    int k = 0, l = 0, n = 0, t = 0;
    std::uint64_t seed = 0;
    std::size_t cap = 10;
    int tightness_cap = 5;
    bool oriented = false, partial = false;

    CLI::App* rec = app.add_subcommand("recognize", "Recognize a k-tree and print its "
                                                    "construction order");
    rec->add_option("input", input, "graph document (JSON)")->required();
    rec->add_option("--k", k, "parameter k")->required();
    rec->add_flag("--oriented", oriented, "treat the input as an oriented graph");

    CLI::App* part = app.add_subcommand("partition", "Build an l-tree partition of a k-tree");
    part->add_option("input", input, "graph document (JSON)")->required();
    part->add_option("--k", k, "parameter k")->required();
    part->add_option("--l", l, "host parameter l (0 <= l <= k)")->required();
    part->add_flag("--oriented", oriented, "oriented graph and partition");
    part->add_option("--out", out_path, "write the partition document here");

    CLI::App* verify = app.add_subcommand("verify", "Check a partition document against "
                                                    "its graph");
    verify->add_option("graph", graph_path, "graph document (JSON)")->required();
    verify->add_option("partition", partition_path, "partition document (JSON)")->required();
    verify->add_option("--k", k, "parameter k")->required();
    verify->add_option("--l", l, "host parameter l")->required();
    verify->add_flag("--oriented", oriented, "oriented graph and partition");

    CLI::App* gen = app.add_subcommand("gen", "Generate a seeded random k-tree");
    gen->add_option("--n", n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--k", k, "parameter k")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", seed, "64-bit seed (default 0)");
    gen->add_flag("--partial", partial, "allow attachments smaller than k");
    gen->add_option("--out", out_path, "write the graph document here");

    CLI::App* dot = app.add_subcommand("export-dot", "Render a graph or partition "
                                                     "document as DOT");
    dot->add_option("input", input, "graph or partition document (JSON)")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "Exhaustively search for an l-tree "
                                                    "partition with connected t-tree bags");
    oracle->add_option("input", input, "graph document (JSON)")->required();
    oracle->add_option("--l", l, "host parameter l")->required();
    oracle->add_option("--t", t, "bag parameter t")->required();
    oracle->add_option("--cap", cap, "vertex cap for the enumeration (default 10)");

    CLI::App* tight = app.add_subcommand("tightness", "Certify the bag parameter is best "
                                                      "possible for the complete graph");
    tight->add_option("--k", k, "parameter k")->required();
    tight->add_option("--l", l, "host parameter l")->required();
    tight->add_option("--cap", tightness_cap, "cap on k (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*rec)
        return guarded([&] { return run_recognize(input, k, oriented); });
    if (*part)
        return guarded([&] { return run_partition(input, k, l, oriented, out_path); });
    if (*verify)
        return guarded([&] { return run_verify(graph_path, partition_path, k, l, oriented); });
    if (*gen)
        return guarded([&] { return run_gen(n, k, seed, partial, out_path); });
    if (*dot)
        return guarded([&] { return run_export_dot(input); });
    if (*oracle)
        return guarded([&] { return run_oracle(input, l, t, cap); });
    if (*tight)
        return guarded([&] { return run_tightness(k, l, tightness_cap); });
    return 2;
}
