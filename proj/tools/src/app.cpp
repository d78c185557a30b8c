#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tricolor/cli.hpp"
#include "tricolor/dimacs.hpp"
#include "tricolor/errors.hpp"

namespace tricolor::cli {

namespace {

struct Shared {
  std::uint64_t seed = 1;
  std::string params_file;
  std::string trace;
  std::string method = "pipeline";
  bool no_side_cuts = false;
  std::size_t oracle_cap = 0;
};

void add_shared(CLI::App* sub, Shared& s) {
  sub->add_option("--seed", s.seed, "Random seed");
  sub->add_option("--params", s.params_file, "JSON file with parameter overrides");
  sub->add_option("--trace", s.trace, "Write a JSON-lines trace to this path");
  sub->add_option("--method", s.method, "pipeline | greedy | extract | kt");
  sub->add_flag("--no-side-cuts", s.no_side_cuts, "Disable side cuts (ablation)");
  sub->add_option("--oracle-cap", s.oracle_cap, "Largest graph the exhaustive oracle accepts");
}

Params load_params(const Shared& s) {
  Params p;
  if (!s.params_file.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(s.params_file));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, std::string("params file: ") + e.what());
    }
    try {
      p = j.get<Params>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, std::string("params file: ") + e.what());
    }
  }
  if (s.no_side_cuts) p.side_cuts = false;
  if (s.oracle_cap > 0) p.oracle_cap = s.oracle_cap;
  return p;
}

Method load_method(const Shared& s) {
  auto m = parse_method(s.method);
  if (!m) throw CLI::ValidationError("--method", "unknown method '" + s.method + "'");
  return *m;
}

template <typename T>
std::vector<T> split_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream is(item);
    T v{};
    is >> v;
    if (!is || !is.eof()) throw CLI::ValidationError("list", "bad list item '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"tricolor: coloring 3-colorable graphs with few colors"};
  app.require_subcommand(1);

  Shared gen_shared, color_shared, verify_shared, bench_shared;

  GenerateConfig gen;
  std::string balance = "1,1,1";
  std::size_t min_degree = 0;
  auto* g = app.add_subcommand("generate", "Write a planted 3-colorable instance");
  add_shared(g, gen_shared);
  g->add_option("--n", gen.n, "Vertex count")->required();
  g->add_option("--p", gen.edge_prob, "Cross-class edge probability");
  g->add_option("--balance", balance, "Three class weights, e.g. 1,1,1");
  g->add_option("--min-degree", min_degree, "Resample until the minimum degree reaches this");
  g->add_option("--max-attempts", gen.max_attempts, "Resampling budget");
  g->add_option("--out", gen.out_prefix, "Output prefix (writes .col, .coloring, .meta.json)");

  ColorConfig col;
  auto* c = app.add_subcommand("color", "Color a DIMACS graph");
  add_shared(c, color_shared);
  c->add_option("input", col.input, "DIMACS .col file")->required();
  c->add_option("-o,--output", col.output, "Coloring output file");
  c->add_option("--report", col.report, "JSON report path (default: stdout)");
  c->add_flag("--timings", col.timings, "Include wall-clock time in the report");

  VerifyConfig ver;
  double verify_k = 0;
  auto* v = app.add_subcommand("verify", "Check claims against the exhaustive oracle");
  add_shared(v, verify_shared);
  v->add_option("graph", ver.graph, "DIMACS .col file")->required();
  v->add_option("claims", ver.claims, "JSON claims file")->required();
  v->add_option("-o,--output", ver.output, "Verdict output (default: stdout)");
  v->add_option("--k", verify_k, "Color target used by Type 1 / Type 2 thresholds");

  BenchConfig bench;
  std::string sizes = "500,1000,2000";
  std::string densities = "0.5";
  std::string methods = "pipeline,greedy,extract";
  bool no_ablation = false;
  auto* b = app.add_subcommand("bench", "Run a method x instance x seed matrix");
  add_shared(b, bench_shared);
  b->add_option("--sizes", sizes, "Comma-separated vertex counts");
  b->add_option("--densities", densities, "Comma-separated edge probabilities");
  b->add_option("--seeds", bench.seeds, "Seeds per (size, density)");
  b->add_option("--methods", methods, "Comma-separated methods");
  b->add_option("--csv", bench.csv, "CSV output");
  b->add_option("--summary", bench.summary, "JSON summary output");
  b->add_option("--timing", bench.timing, "Optional runtime CSV");
  b->add_option("--jobs", bench.jobs, "Parallel workers");
  b->add_flag("--no-ablation", no_ablation, "Skip the side-cut ablation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (g->parsed()) {
      gen.seed = gen_shared.seed;
      auto w = split_list<double>(balance);
      if (w.size() != 3) throw CLI::ValidationError("--balance", "expected three weights");
      const double sum = w[0] + w[1] + w[2];
      if (sum <= 0) throw CLI::ValidationError("--balance", "weights must sum to a positive value");
      gen.balance = {w[0] / sum, w[1] / sum, w[2] / sum};
      if (min_degree > 0) gen.min_degree = min_degree;
      return cmd_generate(gen, std::cerr);
    }
    if (c->parsed()) {
      col.params = load_params(color_shared);
      col.method = load_method(color_shared);
      col.trace = color_shared.trace;
      return cmd_color(col, std::cout, std::cerr);
    }
    if (v->parsed()) {
      ver.params = load_params(verify_shared);
      if (verify_k > 0) ver.k = verify_k;
      return cmd_verify(ver, std::cout, std::cerr);
    }
    if (b->parsed()) {
      bench.params = load_params(bench_shared);
      bench.seed = bench_shared.seed;
      bench.sizes = split_list<std::size_t>(sizes);
      bench.densities = split_list<double>(densities);
      bench.methods.clear();
      for (const auto& name : split_list<std::string>(methods)) {
        auto m = parse_method(name);
        if (!m) throw CLI::ValidationError("--methods", "unknown method '" + name + "'");
        bench.methods.push_back(*m);
      }
      bench.ablation = !no_ablation;
      return cmd_bench(bench, std::cerr);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const NotThreeColorable& e) {
    std::cerr << "not 3-colorable: " << e.witness.describe() << "\n";
    return kNotColorable;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIo;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tricolor::cli
