#include <catch2/catch.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "ktp/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "ktp_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path write_fixture(const std::string& name, const std::string& text) {
    fs::path path = work_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = work_dir() / ("stdout." + std::to_string(counter));
    fs::path err = work_dir() / ("stderr." + std::to_string(counter));
    ++counter;
    std::string cmd = std::string("'") + KTP_CLI_PATH + "' " + args + " > '" +
                      out.string() + "' 2> '" + err.string() + "'";
    int status = std::system(cmd.c_str());
    int code = status < 0 ? 127 : WEXITSTATUS(status);
    return {code, slurp(out), slurp(err)};
}

const char* k3_doc = R"({"directed": false, "vertices": [0, 1, 2],
                         "edges": [[0, 1], [0, 2], [1, 2]]})";
const char* c4_doc = R"({"directed": false, "vertices": [0, 1, 2, 3],
                         "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]})";
const char* k4_doc = R"({"directed": false, "vertices": [1, 2, 3, 4],
                         "edges": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]})";
const char* tt3_doc = R"({"directed": true, "vertices": [1, 2, 3],
                          "edges": [[1, 2], [1, 3], [2, 3]]})";

} // namespace

TEST_CASE("cli recognize") {
    fs::path k3 = write_fixture("k3.json", k3_doc);
    auto ok = run_cli("recognize '" + k3.string() + "' --k 2");
    CHECK(ok.code == 0);
    auto order = ktp::build_order_from_json(nlohmann::json::parse(ok.out));
    CHECK(order.k == 2);
    CHECK(order.steps.size() == 3);

    fs::path c4 = write_fixture("c4.json", c4_doc);
    auto fail = run_cli("recognize '" + c4.string() + "' --k 2");
    CHECK(fail.code == 1);
    auto witness = nlohmann::json::parse(fail.out);
    CHECK(witness["witness"]["kind"] == "chordless-cycle");
    CHECK(witness["witness"]["vertices"].size() == 4);

    fs::path truncated = write_fixture("truncated.json", "{\"directed\": fal");
    CHECK(run_cli("recognize '" + truncated.string() + "' --k 2").code == 2);

    CHECK(run_cli("recognize '" + (work_dir() / "missing.json").string() + "' --k 1").code == 2);
}

TEST_CASE("cli partition and verify round trip") {
    fs::path k4 = write_fixture("k4.json", k4_doc);
    fs::path part = work_dir() / "k4_partition.json";
    auto built = run_cli("partition '" + k4.string() + "' --k 3 --l 1 --out '" +
                         part.string() + "'");
    REQUIRE(built.code == 0);

    auto doc = ktp::partition_document_from_json(nlohmann::json::parse(slurp(part)));
    CHECK(doc.k == 3);
    CHECK(doc.l == 1);
    CHECK(doc.t == 1);
    REQUIRE(doc.bags.size() == 2);
    CHECK(doc.bags[0].second.size() == 2);
    CHECK(doc.bags[1].second.size() == 2);

    auto verified = run_cli("verify '" + k4.string() + "' '" + part.string() +
                            "' --k 3 --l 1");
    CHECK(verified.code == 0);
    CHECK(verified.out.find("coverage: pass") != std::string::npos);
    CHECK(verified.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli verify rejects tampered partitions with a witness") {
    fs::path k4 = write_fixture("k4v.json", k4_doc);
    fs::path part = work_dir() / "k4v_partition.json";
    REQUIRE(run_cli("partition '" + k4.string() + "' --k 3 --l 1 --out '" + part.string() +
                    "'").code == 0);

    auto doc = ktp::partition_document_from_json(nlohmann::json::parse(slurp(part)));
    // Move vertex 3 into the other bag: it then induces K_3, not a 1-tree.
    REQUIRE(doc.bags.size() == 2);
    std::size_t holds3 = doc.bags[0].second[1] == 3 ? 0 : 1;
    std::size_t other = 1 - holds3;
    REQUIRE(doc.bags[holds3].second[1] == 3);
    doc.bags[holds3].second.erase(doc.bags[holds3].second.begin() + 1);
    doc.bags[other].second.push_back(3);
    std::sort(doc.bags[other].second.begin(), doc.bags[other].second.end());
    fs::path moved = write_fixture("k4v_moved.json",
                                   ktp::render_document(ktp::to_json(doc)));
    auto bad = run_cli("verify '" + k4.string() + "' '" + moved.string() + "' --k 3 --l 1");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("witness") != std::string::npos);

    // Dropping a vertex entirely is a file mismatch, not a semantic failure.
    doc.bags[other].second = {2, 4};
    fs::path mismatched = write_fixture("k4v_mismatched.json",
                                        ktp::render_document(ktp::to_json(doc)));
    CHECK(run_cli("verify '" + k4.string() + "' '" + mismatched.string() +
                  "' --k 3 --l 1").code == 2);

    // Flags contradicting the document's parameters are a usage error.
    CHECK(run_cli("verify '" + k4.string() + "' '" + part.string() + "' --k 2 --l 1").code ==
          2);
}

TEST_CASE("cli partition argument and recognition failures") {
    fs::path c4 = write_fixture("c4p.json", c4_doc);
    CHECK(run_cli("partition '" + c4.string() + "' --k 2 --l 1").code == 1);
    fs::path k3 = write_fixture("k3p.json", k3_doc);
    CHECK(run_cli("partition '" + k3.string() + "' --k 2 --l 3").code == 2);
}

TEST_CASE("cli oriented pipeline") {
    fs::path tt3 = write_fixture("tt3.json", tt3_doc);
    auto rec = run_cli("recognize '" + tt3.string() + "' --k 2 --oriented");
    CHECK(rec.code == 0);

    fs::path part = work_dir() / "tt3_partition.json";
    REQUIRE(run_cli("partition '" + tt3.string() + "' --k 2 --l 1 --oriented --out '" +
                    part.string() + "'").code == 0);
    auto doc = ktp::partition_document_from_json(nlohmann::json::parse(slurp(part)));
    CHECK(doc.host.directed);
    CHECK(doc.t == 1);

    CHECK(run_cli("verify '" + tt3.string() + "' '" + part.string() +
                  "' --k 2 --l 1 --oriented").code == 0);

    // Directedness mismatch between flag and document.
    CHECK(run_cli("recognize '" + tt3.string() + "' --k 2").code == 2);
}

TEST_CASE("cli gen is reproducible and self-consistent") {
    fs::path a = work_dir() / "gen_a.json";
    fs::path b = work_dir() / "gen_b.json";
    std::string flags = "gen --n 30 --k 2 --seed 9 --partial --out ";
    REQUIRE(run_cli(flags + "'" + a.string() + "'").code == 0);
    REQUIRE(run_cli(flags + "'" + b.string() + "'").code == 0);
    std::string text = slurp(a);
    CHECK(text == slurp(b));
    CHECK_FALSE(text.empty());

    auto doc = ktp::graph_document_from_json(nlohmann::json::parse(text));
    REQUIRE(doc.build_order);
    CHECK(ktp::replay(*doc.build_order) == ktp::to_graph(doc));
    CHECK(run_cli("recognize '" + a.string() + "' --k 2").code == 0);

    auto empty = run_cli("gen --n 0 --k 3");
    CHECK(empty.code == 0);
    auto parsed = ktp::graph_document_from_json(nlohmann::json::parse(empty.out));
    CHECK(parsed.vertices.empty());

    // Saturation: n = k+1 without --partial is forced complete.
    auto forced = run_cli("gen --n 3 --k 2 --seed 123");
    CHECK(forced.code == 0);
    CHECK(ktp::to_graph(ktp::graph_document_from_json(nlohmann::json::parse(forced.out))) ==
          ktp::complete_graph(3));
}

TEST_CASE("cli partition with l=k gives singleton bags") {
    fs::path k4 = write_fixture("k4s.json", k4_doc);
    fs::path part = work_dir() / "k4s_partition.json";
    REQUIRE(run_cli("partition '" + k4.string() + "' --k 3 --l 3 --out '" + part.string() +
                    "'").code == 0);
    auto doc = ktp::partition_document_from_json(nlohmann::json::parse(slurp(part)));
    CHECK(doc.t == 0);
    REQUIRE(doc.bags.size() == 4);
    for (const auto& [node, verts] : doc.bags)
        CHECK(verts.size() == 1);
    CHECK(run_cli("verify '" + k4.string() + "' '" + part.string() + "' --k 3 --l 3").code ==
          0);
}

TEST_CASE("cli export-dot") {
    fs::path k4 = write_fixture("k4d.json", k4_doc);
    auto graph_dot = run_cli("export-dot '" + k4.string() + "'");
    CHECK(graph_dot.code == 0);
    CHECK(graph_dot.out.rfind("graph G {", 0) == 0);

    fs::path part = work_dir() / "k4d_partition.json";
    REQUIRE(run_cli("partition '" + k4.string() + "' --k 3 --l 1 --out '" + part.string() +
                    "'").code == 0);
    auto part_dot = run_cli("export-dot '" + part.string() + "'");
    CHECK(part_dot.code == 0);
    CHECK(part_dot.out.find("subgraph cluster_0") != std::string::npos);
    CHECK(part_dot.out.find("ltail=cluster_") != std::string::npos);

    fs::path garbage = write_fixture("garbage.json", "not json");
    CHECK(run_cli("export-dot '" + garbage.string() + "'").code == 2);
}

TEST_CASE("cli oracle and tightness") {
    fs::path k4 = write_fixture("k4o.json",
                                R"({"directed": false, "vertices": [0, 1, 2, 3],
        "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]})");
    auto found = run_cli("oracle '" + k4.string() + "' --l 1 --t 1");
    CHECK(found.code == 0);
    auto doc = ktp::partition_document_from_json(nlohmann::json::parse(found.out));
    CHECK(doc.bags.size() == 2);

    auto none = run_cli("oracle '" + k4.string() + "' --l 1 --t 0");
    CHECK(none.code == 1);
    CHECK(none.out == "none\n");

    CHECK(run_cli("tightness --k 3 --l 1").code == 0);
    CHECK(run_cli("tightness --k 9 --l 1").code == 2); // above the default cap
    CHECK(run_cli("tightness --k 4 --l 2 --cap 4").code == 0);

    // Oracle cap guard.
    CHECK(run_cli("oracle '" + k4.string() + "' --l 1 --t 1 --cap 2").code == 2);
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("recognize").code == 2);
    CHECK(run_cli("gen --n -3 --k 1").code == 2);
}
