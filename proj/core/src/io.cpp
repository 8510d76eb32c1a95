#include "tricut/io.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tricut/verify.hpp"

namespace tricut {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

Graph graph_from_json(const nlohmann::json& root) {
  const nlohmann::json& j = root.contains("graph") ? root.at("graph") : root;
  if (!j.contains("n") || !j.contains("edges"))
    throw InputError("JSON graph needs \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw InputError("JSON edge is not a pair");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u == v) throw InputError("loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge end out of range");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw InputError("duplicate edge " + std::to_string(u) + " " +
                       std::to_string(v));
    edges.emplace_back(u, v);
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Graph(n, std::move(edges), std::move(labels));
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(raw);
    long a, b;
    std::string extra;
    if (!(ls >> a) || !(ls >> b) || (ls >> extra))
      parse_fail(line, "expected two integers");
    if (n < 0) {
      if (a < 1 || a > 64) parse_fail(line, "vertex count out of range (1..64)");
      if (b < 0) parse_fail(line, "negative edge count");
      n = int(a);
      m = int(b);
      continue;
    }
    if (int(edges.size()) == m) parse_fail(line, "more edges than declared");
    if (a == b) parse_fail(line, "loop edge " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      parse_fail(line, "edge end out of range");
    if (!seen.insert({int(std::min(a, b)), int(std::max(a, b))}).second)
      parse_fail(line, "duplicate edge " + std::to_string(a) + " " +
                           std::to_string(b));
    edges.emplace_back(int(a), int(b));
  }
  if (n < 0) throw InputError("empty input");
  if (int(edges.size()) != m)
    throw InputError("declared " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

ordered_json set_json(VertexSet s) {
  ordered_json a = ordered_json::array();
  s.for_each([&](VertexId v) { a.push_back(v); });
  return a;
}

ordered_json cutset_json(const Cutset3& s) {
  return ordered_json::array({s.v[0], s.v[1], s.v[2]});
}

const char* class_name(PartClass c) {
  switch (c) {
    case PartClass::normal: return "normal";
    case PartClass::small: return "small";
    default: return "empty";
  }
}

ordered_json build_report(const Graph& g) {
  auto cutsets = enumerate_cutsets(g);
  std::sort(cutsets.begin(), cutsets.end());
  DecompositionHypertree tree = build_hypertree(g);
  VerificationReport ver = verify_graph(g);

  ordered_json j;
  j["schema_version"] = 1;
  ordered_json jg;
  jg["n"] = g.vertex_count();
  ordered_json je = ordered_json::array();
  for (const Edge& e : g.edges()) je.push_back({e.a, e.b});
  jg["edges"] = std::move(je);
  ordered_json jl = ordered_json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) jl.push_back(g.label(v));
  jg["labels"] = std::move(jl);
  j["graph"] = std::move(jg);

  ordered_json jc = ordered_json::array();
  for (const Cutset3& s : cutsets) jc.push_back(cutset_json(s));
  j["cutsets"] = std::move(jc);

  ordered_json jx = ordered_json::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const Complex& c = tree.nodes[i];
    ordered_json o;
    o["kind"] = to_string(c.kind);
    ordered_json mem = ordered_json::array();
    for (const Cutset3& s : c.members) mem.push_back(cutset_json(s));
    o["members"] = std::move(mem);
    ordered_json bnd = ordered_json::array();
    for (const Cutset3& s : c.boundaries) bnd.push_back(cutset_json(s));
    o["boundaries"] = std::move(bnd);
    o["vertices"] = set_json(c.vertex_set);
    ordered_json parts = ordered_json::array();
    for (const ComplexPart& p : tree.parts[i]) {
      ordered_json pj;
      pj["vertices"] = set_json(p.part.vertices);
      pj["boundary"] = set_json(p.part.boundary);
      pj["interior"] = set_json(p.part.interior);
      pj["neighborhood"] = set_json(p.neighborhood);
      pj["class"] = class_name(p.classification);
      parts.push_back(std::move(pj));
    }
    o["parts"] = std::move(parts);
    jx.push_back(std::move(o));
  }
  j["complexes"] = std::move(jx);

  ordered_json jt;
  jt["nodes"] = tree.nodes.size();
  ordered_json he = ordered_json::array();
  for (const auto& e : tree.hyperedges) he.push_back(e);
  jt["hyperedges"] = std::move(he);
  ordered_json bel = ordered_json::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    for (std::size_t k = 0; k < tree.nodes.size(); ++k)
      if (tree.belongs[i][k])
        bel.push_back({i, k, *tree.belongs[i][k]});
  jt["belongs"] = std::move(bel);
  j["hypertree"] = std::move(jt);

  ordered_json jv;
  jv["violations"] = ver.violation_count();
  ordered_json checks = ordered_json::array();
  for (const LemmaCheck& c : ver.checks) {
    ordered_json cj;
    cj["lemma"] = c.lemma;
    cj["instances"] = c.instances;
    cj["violations"] = c.violations;
    cj["witnesses"] = c.witnesses;
    checks.push_back(std::move(cj));
  }
  jv["checks"] = std::move(checks);
  j["verification"] = std::move(jv);
  return j;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("bad JSON: ") + e.what());
    }
  }
  return graph_from_edge_list(text);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edges().size() << '\n';
  for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
  return out.str();
}

std::string analysis_report_json(const Graph& g) {
  return build_report(g).dump(2) + "\n";
}

std::string analysis_report_text(const Graph& g) {
  ordered_json j = build_report(g);
  std::ostringstream out;
  out << "graph: " << j["graph"]["n"].get<int>() << " vertices, "
      << j["graph"]["edges"].size() << " edges\n";
  out << "cutsets: " << j["cutsets"].size() << '\n';
  out << "complexes: " << j["complexes"].size() << '\n';
  for (std::size_t i = 0; i < j["complexes"].size(); ++i) {
    const auto& c = j["complexes"][i];
    out << "  [" << i << "] " << c["kind"].get<std::string>() << ": "
        << c["members"].size() << " member(s), " << c["parts"].size()
        << " part(s)\n";
  }
  out << "hypertree: " << j["hypertree"]["nodes"].get<std::size_t>()
      << " node(s), " << j["hypertree"]["hyperedges"].size()
      << " hyperedge(s)\n";
  out << "verification: " << j["verification"]["checks"].size() << " checks, "
      << j["verification"]["violations"].get<std::size_t>() << " violation(s)\n";
  return out.str();
}

std::string cutset_census_text(const Graph& g) {
  auto cutsets = enumerate_cutsets(g);
  std::sort(cutsets.begin(), cutsets.end());
  std::ostringstream out;
  out << "graph: " << g.vertex_count() << " vertices, " << g.edges().size()
      << " edges\n";
  out << "cutsets: " << cutsets.size() << '\n';
  for (const Cutset3& s : cutsets) out << to_string(s) << '\n';
  return out.str();
}

std::string hypertree_dot(const Graph& g) {
  DecompositionHypertree tree = build_hypertree(g);
  std::ostringstream out;
  out << "graph hypertree {\n";
  out << "  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    out << "  c" << i << " [label=\"" << i << ": "
        << to_string(tree.nodes[i].kind) << "\\n"
        << tree.nodes[i].members.size() << " cutset(s) on "
        << to_string(tree.nodes[i].vertex_set) << "\"];\n";
  for (std::size_t e = 0; e < tree.hyperedges.size(); ++e) {
    out << "  h" << e << " [shape=box, style=dashed, label=\"hyperedge " << e
        << "\"];\n";
    for (std::size_t i : tree.hyperedges[e])
      out << "  h" << e << " -- c" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tricut
