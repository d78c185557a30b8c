#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "tricolor/cli.hpp"
#include "tricolor/errors.hpp"
#include "tricolor/generator.hpp"

namespace tricolor::cli {

using nlohmann::json;

const std::vector<std::string>& bench_columns() {
  static const std::vector<std::string> cols = {
      "family",       "n",          "edge_prob",   "seed",          "method",
      "m",            "min_degree", "max_degree",  "status",        "proper",
      "colors",       "seek_calls", "seek_found",  "rounds",        "error_a",
      "error_b",      "round_cap",  "structure_failed", "fallback_vertices", "deferred_vertices",
      "eq11_pass",    "eq11_eval",  "eq18_pass",   "eq18_eval",     "eq19_pass",
      "eq19_eval",    "y1_over_t1_mean"};
  return cols;
}

namespace {

std::string fmt(double v, const char* spec = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

struct Row {
  std::vector<std::string> cells;
  std::string timing;
  std::string method;
  bool proper = false;
  bool failed = false;
  std::size_t colors = 0;
};

struct InstanceResult {
  std::vector<Row> rows;
  std::vector<double> ablation_with;
  std::vector<double> ablation_without;
};

struct Instance {
  std::size_t n;
  double p;
  std::uint64_t seed;
};

std::size_t count_of(const std::map<std::string, std::size_t>& m, const std::string& k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

std::optional<double> first_round_ratio(const Graph& g, Params p, bool side_cuts) {
  p.side_cuts = side_cuts;
  p.strict_audit = true;
  SeekOutcome out = seek_progress(g, g.min_degree(), p);
  for (const auto& a : out.audits) {
    if (a.j == 1 && a.t_size > 0) {
      return static_cast<double>(a.yj_size) / static_cast<double>(a.t_size);
    }
  }
  return std::nullopt;
}

InstanceResult run_instance(const Instance& inst, const BenchConfig& c) {
  InstanceResult res;
  GenParams gp;
  gp.n = inst.n;
  gp.edge_prob = inst.p;
  gp.seed = inst.seed;
  const std::vector<std::string> key = {"planted", std::to_string(inst.n), fmt(inst.p, "%.6g"),
                                        std::to_string(inst.seed)};
  Graph g;
  std::string gen_error;
  try {
    g = generate_planted(gp).graph;
  } catch (const std::exception& e) {
    gen_error = e.what();
  }
  for (Method m : c.methods) {
    Row row;
    row.method = method_name(m);
    row.cells = key;
    row.cells.push_back(row.method);
    const auto start = std::chrono::steady_clock::now();
    std::string status = "ok";
    ColorResult cr;
    if (!gen_error.empty()) {
      status = "error:generate";
    } else {
      try {
        cr = color_graph(g, m, c.params);
        row.proper = static_cast<bool>(is_proper_coloring(g, cr.coloring));
        if (!row.proper) status = "improper";
      } catch (const NotThreeColorable&) {
        status = "not_3_colorable";
      } catch (const std::exception&) {
        status = "error";
      }
    }
    row.failed = status != "ok";
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const SeekSummary& s = cr.report.seek;
    auto flag = [&](const char* name, bool passed) {
      auto it = s.soft_flags.find(name);
      if (it == s.soft_flags.end()) return std::string("0");
      return std::to_string(passed ? it->second.first : it->second.second);
    };
    double mean = 0;
    for (double r : s.y1_over_t1) mean += r;
    const bool has_ratio = !s.y1_over_t1.empty();
    if (has_ratio) mean /= static_cast<double>(s.y1_over_t1.size());
    const bool have_graph = gen_error.empty();
    row.colors = row.failed ? 0 : cr.coloring.palette_size();
    std::vector<std::string> rest = {
        have_graph ? std::to_string(g.num_edges()) : "",
        have_graph ? std::to_string(g.min_degree()) : "",
        have_graph ? std::to_string(g.max_degree()) : "",
        status,
        row.proper ? "1" : "0",
        row.failed ? "" : std::to_string(row.colors),
        std::to_string(s.calls),
        std::to_string(s.found),
        std::to_string(s.rounds),
        std::to_string(count_of(s.failures, "error_a")),
        std::to_string(count_of(s.failures, "error_b")),
        std::to_string(count_of(s.failures, "round_cap_exceeded")),
        std::to_string(count_of(s.failures, "structure_failed")),
        cr.report.driver ? std::to_string(cr.report.driver->fallback_vertices) : "0",
        cr.report.driver ? std::to_string(cr.report.driver->deferred_vertices) : "0",
        flag("mu_floor", true), flag("mu_floor", false),
        flag("y_sqrt_bound", true), flag("y_sqrt_bound", false),
        flag("y_round_bound", true), flag("y_round_bound", false),
        has_ratio ? fmt(mean) : ""};
    row.cells.insert(row.cells.end(), rest.begin(), rest.end());
    row.timing = key[0] + "," + key[1] + "," + key[2] + "," + key[3] + "," + row.method + "," +
                 fmt(secs);
    res.rows.push_back(std::move(row));
  }
  if (c.ablation && gen_error.empty() && g.num_edges() > 0) {
    try {
      if (auto r = first_round_ratio(g, c.params, true)) res.ablation_with.push_back(*r);
      if (auto r = first_round_ratio(g, c.params, false)) res.ablation_without.push_back(*r);
    } catch (const NotThreeColorable&) {
    }
  }
  return res;
}

std::string join(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += cells[i];
  }
  return s;
}

json mean_json(const std::vector<double>& v) {
  double sum = 0;
  for (double x : v) sum += x;
  return {{"count", v.size()},
          {"mean", v.empty() ? json(nullptr) : json(std::stod(fmt(sum / v.size())))}};
}

}  // namespace

int cmd_bench(const BenchConfig& c, std::ostream& log) {
  std::vector<Instance> instances;
  for (std::size_t n : c.sizes) {
    for (double p : c.densities) {
      for (std::size_t r = 0; r < c.seeds; ++r) instances.push_back({n, p, c.seed + r});
    }
  }

  std::ofstream csv(c.csv, std::ios::binary | std::ios::trunc);
  if (!csv) throw IoError("cannot open '" + c.csv + "' for writing");
  std::ofstream timing;
  if (!c.timing.empty()) {
    timing.open(c.timing, std::ios::binary | std::ios::trunc);
    if (!timing) throw IoError("cannot open '" + c.timing + "' for writing");
    timing << "family,n,edge_prob,seed,method,seconds\n";
  }
  csv << join(bench_columns()) << "\n" << std::flush;

  std::vector<std::optional<InstanceResult>> results(instances.size());
  std::mutex mu;
  std::size_t next_write = 0;
  auto flush_ready = [&] {
    while (next_write < results.size() && results[next_write]) {
      for (const Row& row : results[next_write]->rows) {
        csv << join(row.cells) << "\n";
        if (timing.is_open()) timing << row.timing << "\n";
      }
      csv.flush();
      ++next_write;
    }
  };
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      InstanceResult r = run_instance(instances[i], c);
      std::lock_guard<std::mutex> lock(mu);
      results[i] = std::move(r);
      flush_ready();
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(c.jobs, instances.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  json methods = json::object();
  std::vector<double> with, without;
  std::size_t rows = 0;
  for (Method m : c.methods) {
    std::size_t count = 0, proper = 0, failed = 0;
    double colors = 0;
    for (const auto& r : results) {
      for (const Row& row : r->rows) {
        if (row.method != method_name(m)) continue;
        ++count;
        if (row.proper) {
          ++proper;
          colors += static_cast<double>(row.colors);
        }
        if (row.failed) ++failed;
      }
    }
    methods[method_name(m)] = {
        {"rows", count},
        {"proper", proper},
        {"failed", failed},
        {"mean_colors", proper ? json(std::stod(fmt(colors / proper))) : json(nullptr)}};
    rows += count;
  }
  for (const auto& r : results) {
    with.insert(with.end(), r->ablation_with.begin(), r->ablation_with.end());
    without.insert(without.end(), r->ablation_without.begin(), r->ablation_without.end());
  }
  json cfg = {{"sizes", c.sizes}, {"densities", c.densities}, {"seeds", c.seeds},
              {"seed", c.seed}, {"params", c.params}};
  json methods_list = json::array();
  for (Method m : c.methods) methods_list.push_back(method_name(m));
  cfg["methods"] = methods_list;
  json summary = {{"config", cfg},
                  {"columns", bench_columns()},
                  {"rows", rows},
                  {"methods", methods}};
  if (c.ablation) {
    summary["ablation"] = {{"metric", "mean |Y_1|/|T_1|"},
                           {"with_side_cuts", mean_json(with)},
                           {"without_side_cuts", mean_json(without)}};
  }
  std::ofstream sum(c.summary, std::ios::binary | std::ios::trunc);
  if (!sum) throw IoError("cannot open '" + c.summary + "' for writing");
  sum << summary.dump(2) << "\n";
  log << "bench: " << rows << " rows written to " << c.csv << "\n";
  return kOk;
}

}  // namespace tricolor::cli
