#include "doctest.h"
#include "json.hpp"
#include "tricut/fixtures.hpp"
#include "tricut/io.hpp"

using namespace tricut;

TEST_CASE("edge-list round trip") {
  for (const Fixture& f : fixtures()) {
    INFO(f.name);
    Graph g = parse_graph(write_edge_list(f.graph));
    CHECK(g.vertex_count() == f.graph.vertex_count());
    CHECK(g.edges() == f.graph.edges());
  }
}

TEST_CASE("edge-list parsing accepts comments and blank lines") {
  Graph g = parse_graph(
      "# a triangle plus a pendant path makes no sense here,\n"
      "# so use K4 instead\n"
      "4 6\n"
      "\n"
      "0 1  # first edge\n"
      "0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges().size() == 6);
}

TEST_CASE("edge-list parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph("4 1\n3 3\n"), "line 2: loop edge 3",
                       InputError);
  CHECK_THROWS_WITH_AS(parse_graph("4 2\n0 1\n1 0\n"),
                       "line 3: duplicate edge 1 0", InputError);
  CHECK_THROWS_WITH_AS(parse_graph("4 1\n0 9\n"),
                       "line 2: edge end out of range", InputError);
  CHECK_THROWS_WITH_AS(parse_graph("4 1\n0 1 2\n"),
                       "line 2: expected two integers", InputError);
  CHECK_THROWS_AS(parse_graph(""), InputError);
  CHECK_THROWS_AS(parse_graph("4 3\n0 1\n"), InputError);   // too few edges
  CHECK_THROWS_AS(parse_graph("99 0\n"), InputError);        // n > 64
}

TEST_CASE("JSON graph parsing") {
  Graph g = parse_graph(R"({"n": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges().size() == 6);

  Graph h = parse_graph(R"({"graph": {"n": 3, "edges": [[0,1],[1,2],[0,2]],
                            "labels": ["a","b","c"]}})");
  CHECK(h.vertex_count() == 3);
  CHECK(h.label(2) == "c");

  CHECK_THROWS_AS(parse_graph("{not json"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0,0]]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0,1],[1,0]]})"),
                  InputError);
}

TEST_CASE("analysis report JSON is valid and complete") {
  Graph g = fixture("FLOWER1");
  std::string s = analysis_report_json(g);
  nlohmann::json j = nlohmann::json::parse(s);
  CHECK(j["schema_version"] == 1);
  CHECK(j["graph"]["n"] == g.vertex_count());
  CHECK(j["graph"]["edges"].size() == g.edges().size());
  CHECK(j["cutsets"].size() == 7);
  CHECK(j["complexes"].size() == 3);
  for (const auto& c : j["complexes"]) {
    CHECK(c.contains("kind"));
    CHECK(c["members"].size() >= 1);
    for (const auto& p : c["parts"]) {
      CHECK(p.contains("vertices"));
      CHECK(p.contains("neighborhood"));
      CHECK((p["class"] == "normal" || p["class"] == "small" ||
             p["class"] == "empty"));
    }
  }
  CHECK(j["hypertree"]["nodes"] == 3);
  CHECK(j["verification"]["violations"] == 0);
  CHECK(j["verification"]["checks"].size() >= 30);
}

TEST_CASE("analysis report JSON is byte-identical across runs") {
  for (const Fixture& f : fixtures()) {
    INFO(f.name);
    std::string a = analysis_report_json(f.graph);
    std::string b = analysis_report_json(f.graph);
    CHECK(a == b);
  }
}

TEST_CASE("text report summarizes the structure") {
  std::string t = analysis_report_text(fixture("WHEEL6"));
  CHECK(t.find("graph: 7 vertices") != std::string::npos);
  CHECK(t.find("cutsets: 9") != std::string::npos);
  CHECK(t.find("wheel-flower") != std::string::npos);
  CHECK(t.find("0 violation(s)") != std::string::npos);
}

TEST_CASE("cutset census lists every cutset") {
  std::string t = cutset_census_text(fixture("WHEEL6"));
  CHECK(t.find("cutsets: 9") != std::string::npos);
  CHECK(std::count(t.begin(), t.end(), '\n') == 11);
}

TEST_CASE("DOT output shapes") {
  std::string d = hypertree_dot(fixture("DK4"));
  CHECK(d.rfind("graph hypertree {", 0) == 0);
  CHECK(d.find("c0 [label=") != std::string::npos);
  CHECK(d.find("h0 [shape=box") != std::string::npos);
  CHECK(d.find(" -- ") != std::string::npos);
  CHECK(d.back() == '\n');

  // A single-node hypertree has no hyperedges and hence no edges in the DOT.
  std::string w = hypertree_dot(fixture("WHEEL6"));
  CHECK(w.find(" -- ") == std::string::npos);
}
