#include <doctest.h>

#include <cli.hpp>
#include <json_io.hpp>

#include <dpdp/catalog.hpp>
#include <dpdp/minimality.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

using namespace dpdp;
using dpdp::cli::Json;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Outcome invoke(const std::vector<std::string>& args, const std::string& stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    Outcome o;
    o.code = cli::run(args, in, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

class TempDir {
public:
    TempDir()
    {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() / ("dpdp_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string write(const std::string& name, const std::string& text) const
    {
        auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<Vertex> as_vertices(const Json& arr) { return arr.get<std::vector<Vertex>>(); }

// Rebuilds a DP-pair from its JSON form and checks it against the graph.
bool pair_verifies(const Multigraph& g, const Json& j)
{
    DpPair pair{VertexSet(g.vertex_count()), VertexSet(g.vertex_count()), {}};
    for (auto v : as_vertices(j["D"]))
        pair.d.insert(v);
    for (auto v : as_vertices(j["P"]))
        pair.p.insert(v);
    for (const auto& e : j["matching"]) {
        auto id = e[2].get<EdgeId>();
        if (g.edge(id).u != e[0].get<Vertex>() || g.edge(id).v != e[1].get<Vertex>())
            return false;
        pair.matching.push_back(id);
    }
    return is_dp_pair(g, pair);
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("check reports a DPDP verdict with a pair")
    {
        TempDir dir;
        auto p9 = invoke({"check", dir.write("p9.el", write_edge_list(path_graph(9)))});
        REQUIRE(p9.code == 0);
        auto j = p9.json();
        CHECK(j["command"] == "check");
        CHECK(j["result"]["dpdp"] == false);
        CHECK(j["result"]["pair"].is_null());
        CHECK(j.contains("engine_version"));

        auto p4 = invoke({"check", dir.write("p4.el", write_edge_list(path_graph(4)))});
        REQUIRE(p4.code == 0);
        auto r = p4.json()["result"];
        CHECK(r["dpdp"] == true);
        CHECK(as_vertices(r["pair"]["D"]) == std::vector<Vertex>{0, 3});
        CHECK(pair_verifies(path_graph(4), r["pair"]));
    }

    TEST_CASE("top-level keys come in a fixed order")
    {
        TempDir dir;
        auto o = invoke({"check", dir.write("k4.g6", "C~\n")});
        REQUIRE(o.code == 0);
        auto j = o.json();
        std::vector<std::string> keys;
        for (const auto& [k, v] : j.items())
            keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"command", "input", "result", "engine_version"});
    }

    TEST_CASE("stdin and explicit formats")
    {
        auto o = invoke({"check", "-", "--format", "g6"}, "Bw\n");
        REQUIRE(o.code == 0);
        CHECK(o.json()["result"]["dpdp"] == true);
        auto el = invoke({"check", "-"}, "3 3\n0 1\n1 2\n2 0\n");
        REQUIRE(el.code == 0);
        CHECK(el.json()["result"]["dpdp"] == true);
    }

    TEST_CASE("pairs honours the cap")
    {
        TempDir dir;
        auto path = dir.write("k3.el", write_edge_list(complete_graph(3)));
        auto all = invoke({"pairs", path}).json()["result"];
        CHECK(all["count"] == 3);
        CHECK(all["cap_reached"] == false);
        for (const auto& p : all["pairs"])
            CHECK(pair_verifies(complete_graph(3), p));
        auto capped = invoke({"pairs", path, "--cap", "2"}).json()["result"];
        CHECK(capped["count"] == 2);
        CHECK(capped["cap_reached"] == true);
        CHECK(invoke({"pairs", path, "--cap", "0"}).code == 1);
    }

    TEST_CASE("minimal")
    {
        TempDir dir;
        auto c6 = invoke({"minimal", dir.write("c6.el", write_edge_list(cycle_graph(6)))});
        REQUIRE(c6.code == 0);
        auto r = c6.json()["result"];
        CHECK(r["minimal"] == true);
        CHECK(r["witness"].is_null());
        CHECK(r["structure"]["is_2_subdivision"] == true);
        CHECK(r["structure"]["exceptional_cycle"] == true);
        CHECK(r["structure"]["verdicts_consistent"] == true);

        auto p8 = invoke({"minimal", dir.write("p8.el", write_edge_list(path_graph(8)))});
        REQUIRE(p8.code == 0);
        auto w = p8.json()["result"]["witness"];
        REQUIRE_FALSE(w.is_null());
        auto reduced = delete_edge(path_graph(8), w["deleted_edge"][2].get<EdgeId>()).graph;
        CHECK(pair_verifies(reduced, w["pair"]));
    }

    TEST_CASE("s2 writes the graph and labeling sidecar")
    {
        TempDir dir;
        auto in = dir.write("p3.el", write_edge_list(path_graph(3)));
        auto o = invoke({"s2", in, "--alpha", "0:2", "--out", dir.file("g.el"), "--labels", dir.file("lab.json")});
        REQUIRE(o.code == 0);
        auto g = read_edge_list(slurp(dir.file("g.el")));
        CHECK(g == build_s2(path_graph(3), {{0, 2}}).graph);
        auto labels = Json::parse(slurp(dir.file("lab.json")));
        CHECK(labels["alpha"] == Json::parse("[[0,2],[2,1]]"));
        CHECK(labels["provenance"].size() == g.vertex_count());
        CHECK(pair_verifies(g, o.json()["result"]["canonical_pair"]));

        CHECK(invoke({"s2", in, "--alpha", "1:2"}).code == 1);
        CHECK(invoke({"s2", in, "--alpha", "0:0"}).code == 1);
        CHECK(invoke({"s2", in, "--alpha", "zero"}).code == 1);
        CHECK(invoke({"s2", in, "--alpha", "0:2,0:3"}).code == 1);
    }

    TEST_CASE("invert")
    {
        TempDir dir;
        auto yes = invoke({"invert", dir.write("p10.el", write_edge_list(path_graph(10)))});
        REQUIRE(yes.code == 0);
        auto r = yes.json()["result"];
        CHECK(r["is_2_subdivision"] == true);
        CHECK(r["labeling"]["base"]["n"] == 4);
        auto no = invoke({"invert", dir.write("p5.el", write_edge_list(path_graph(5)))});
        REQUIRE(no.code == 0);
        CHECK(no.json()["result"]["is_2_subdivision"] == false);
    }

    TEST_CASE("goodsub")
    {
        TempDir dir;
        auto o = invoke({"goodsub", dir.write("p6.el", write_edge_list(path_graph(6)))});
        REQUIRE(o.code == 0);
        auto r = o.json()["result"];
        CHECK(r["found"] == true);
        CHECK(as_vertices(r["certificate"]["q_vertices"]) == std::vector<Vertex>{2, 3});
        auto reduced = read_edge_list(write_edge_list(build_s2(path_graph(6)).graph));
        CHECK(r["reduction"]["removed_edges"].size() >= 1);

        auto none = invoke({"goodsub", dir.write("p4.el", write_edge_list(path_graph(4)))});
        CHECK(none.json()["result"]["found"] == false);
        CHECK(invoke({"goodsub", dir.write("iso.el", "3 1\n0 1\n")}).code == 1);
    }

    TEST_CASE("survey")
    {
        TempDir dir;
        std::string g6;
        for (const auto& g : {path_graph(4), cycle_graph(5), path_graph(6), complete_graph(4)})
            g6 += write_graph6(g) + "\n";
        auto in = dir.write("few.g6", g6);
        auto o = invoke({"survey", in});
        REQUIRE(o.code == 0);
        CHECK(o.out
            == "n,m,dpdp,minimal,is_2_subdivision,good_subgraph_found\n"
               "4,3,true,true,true,false\n"
               "5,5,false,false,false,true\n"
               "6,5,false,false,false,true\n"
               "4,6,true,false,false,true\n");
        auto to_file = invoke({"survey", in, "--out", dir.file("s.csv")});
        REQUIRE(to_file.code == 0);
        CHECK(slurp(dir.file("s.csv")) == o.out);
        CHECK(to_file.json()["result"]["graphs"] == 4);
    }

    TEST_CASE("xcheck sweeps the catalog")
    {
        auto o = invoke({"xcheck", "--max-edges", "3"});
        REQUIRE(o.code == 0);
        auto r = o.json()["result"];
        CHECK(r["consistent"] == true);
        CHECK(r["graphs_checked"] == enumerate_connected_multigraphs(3).size());
        CHECK(r["disagreements"].empty());
        CHECK(invoke({"xcheck", "--max-edges", "9"}).code == 1);
        CHECK(invoke({"xcheck"}).code == 1);
    }

    TEST_CASE("xcheck over a graph6 file")
    {
        TempDir dir;
        auto in = dir.write("h.g6", write_graph6(path_graph(6)) + "\n" + write_graph6(Multigraph(3, {{0, 1}})) + "\n");
        auto r = invoke({"xcheck", in}).json()["result"];
        CHECK(r["graphs_checked"] == 1);
        CHECK(r["graphs_skipped"] == 1);
    }

    TEST_CASE("output does not depend on the worker count")
    {
        TempDir dir;
        std::string g6;
        for (const auto& g : enumerate_connected_simple(5))
            g6 += write_graph6(g) + "\n";
        auto in = dir.write("five.g6", g6);
        ::setenv("DPDP_WORKERS", "1", 1);
        auto survey1 = invoke({"survey", in});
        auto xcheck1 = invoke({"xcheck", "--max-edges", "4"});
        ::setenv("DPDP_WORKERS", "4", 1);
        auto survey4 = invoke({"survey", in});
        auto xcheck4 = invoke({"xcheck", "--max-edges", "4"});
        ::setenv("DPDP_WORKERS", "2", 1);
        CHECK(survey1.out == survey4.out);
        CHECK(xcheck1.out == xcheck4.out);
        CHECK(invoke({"survey", in}).out == survey1.out);
    }

    TEST_CASE("input errors exit with 1")
    {
        TempDir dir;
        CHECK(invoke({"check", dir.file("missing.el")}).code == 1);
        CHECK(invoke({"check", dir.write("bad.el", "2 1\n0 5\n")}).code == 1);
        CHECK(invoke({"check", dir.write("bad.g6", "B!\n")}).code == 1);
        CHECK(invoke({"check", dir.write("two.g6", "Bw\nBw\n")}).code == 1);
        CHECK(invoke({"check", dir.write("x.el", "1 0\n"), "--format", "dot"}).code == 1);
        CHECK(invoke({"frobnicate"}).code == 1);
        CHECK(invoke({}).code == 1);
        auto err = invoke({"check", dir.file("missing.el")}).err;
        CHECK(err.find("missing.el") != std::string::npos);
    }
}
