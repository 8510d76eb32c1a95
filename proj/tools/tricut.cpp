// tricut — analyze the 3-cutset structure of a 3-connected graph.
//
// Subcommands: decompose, cutsets, verify, gen, fixtures.
// Exit codes: 0 success, 1 input error, 2 precondition violation
// (not 3-connected or too small), 3 integrity error (an internal
// structural invariant failed — always a bug).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tricut/fixtures.hpp"
#include "tricut/io.hpp"
#include "tricut/verify.hpp"

namespace {

bool quiet = false;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tricut::InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

tricut::Graph load(const std::string& path) {
  return tricut::parse_graph(slurp(path));
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw tricut::InputError("cannot open " + out_path);
  out << text;
}

void print_verification(const std::string& name,
                        const tricut::VerificationReport& r) {
  if (!quiet) {
    for (const tricut::LemmaCheck& c : r.checks) {
      std::cout << "  " << c.lemma << ": " << c.instances << " instance(s), "
                << c.violations << " violation(s)\n";
      for (const std::string& w : c.witnesses)
        std::cout << "    witness: " << w << '\n';
    }
  }
  std::cout << name << ": " << r.instance_count() << " instance(s), "
            << r.violation_count() << " violation(s)\n";
}

int run(int argc, char** argv) {
  CLI::App app{"3-cutset structure of a 3-connected graph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--quiet,-q", quiet, "suppress per-check detail");

  std::string file = "-";
  std::string out_path;
  bool as_json = false, as_dot = false;

  auto* decompose = app.add_subcommand(
      "decompose", "full analysis report (complexes + hypertree)");
  decompose->add_option("file", file, "input graph ('-' for stdin)");
  auto* jf = decompose->add_flag("--json", as_json, "JSON report");
  decompose->add_flag("--dot", as_dot, "hypertree in DOT format")
      ->excludes(jf);

  auto* cutsets = app.add_subcommand("cutsets", "3-cutset census only");
  cutsets->add_option("file", file, "input graph ('-' for stdin)");

  std::string corpus_dir;
  auto* verify = app.add_subcommand("verify", "check structural invariants");
  verify->add_option("file", file, "input graph ('-' for stdin)");
  verify->add_option("--corpus", corpus_dir,
                     "verify every file in a directory instead");

  unsigned wheel_m = 0;
  unsigned random_n = 0;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "generate a 3-connected graph");
  auto* gw = gen->add_option("--wheel", wheel_m, "wheel with M rim vertices");
  auto* gr = gen->add_option("--random", random_n, "random graph on N vertices");
  gr->excludes(gw);
  gen->add_option("--seed", seed, "generator seed (env TRICUT_SEED overrides)");
  gen->add_option("-o,--output", out_path, "output file (default stdout)");

  bool list = false;
  std::string emit_name;
  auto* fix = app.add_subcommand("fixtures", "built-in example graphs");
  auto* fl = fix->add_flag("--list", list, "list fixture names");
  fix->add_option("--emit", emit_name, "print a fixture as an edge list")
      ->excludes(fl);

  CLI11_PARSE(app, argc, argv);

  if (decompose->parsed()) {
    tricut::Graph g = load(file);
    if (as_json)
      std::cout << tricut::analysis_report_json(g);
    else if (as_dot)
      std::cout << tricut::hypertree_dot(g);
    else
      std::cout << tricut::analysis_report_text(g);
    return 0;
  }

  if (cutsets->parsed()) {
    std::cout << tricut::cutset_census_text(load(file));
    return 0;
  }

  if (verify->parsed()) {
    if (!corpus_dir.empty()) {
      if (!std::filesystem::is_directory(corpus_dir))
        throw tricut::InputError("not a directory: " + corpus_dir);
      std::vector<std::filesystem::path> files;
      for (const auto& e : std::filesystem::directory_iterator(corpus_dir))
        if (e.is_regular_file()) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      if (files.empty()) throw tricut::InputError("no files in " + corpus_dir);
      std::size_t violations = 0;
      for (const auto& p : files) {
        auto r = tricut::verify_graph(load(p.string()));
        violations += r.violation_count();
        std::cout << p.filename().string() << ": " << r.instance_count()
                  << " instance(s), " << r.violation_count()
                  << " violation(s)\n";
      }
      return violations == 0 ? 0 : 3;
    }
    auto r = tricut::verify_graph(load(file));
    print_verification(file, r);
    return r.ok() ? 0 : 3;
  }

  if (gen->parsed()) {
    if (const char* env = std::getenv("TRICUT_SEED")) seed = std::stoull(env);
    if (!*gw && !*gr)
      throw tricut::InputError("gen needs --wheel or --random");
    tricut::Graph g = *gw ? tricut::gen_wheel(wheel_m)
                          : tricut::gen_random_triconnected(random_n, seed);
    emit(out_path, tricut::write_edge_list(g));
    return 0;
  }

  if (fix->parsed()) {
    if (!emit_name.empty()) {
      std::cout << tricut::write_edge_list(tricut::fixture(emit_name));
    } else {
      for (const tricut::Fixture& f : tricut::fixtures())
        std::cout << f.name << '\n';
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tricut::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const tricut::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return 2;
  } catch (const tricut::IntegrityError& e) {
    std::cerr << "integrity error (this is a bug): " << e.what() << '\n';
    return 3;
  }
}
