#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tricolor/params.hpp"
#include "tricolor/pipeline.hpp"

namespace tricolor::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNotColorable = 2, kRejected = 3, kIo = 4 };

struct GenerateConfig {
  std::size_t n = 100;
  double edge_prob = 0.5;
  std::array<double, 3> balance{1.0 / 3, 1.0 / 3, 1.0 / 3};
  std::optional<std::size_t> min_degree;
  std::uint64_t seed = 1;
  int max_attempts = 50;
  std::string out_prefix = "instance";
};

struct ColorConfig {
  std::string input;
  std::string output;  // coloring file; empty: none
  std::string report;  // JSON report; empty: stdout
  std::string trace;
  Method method = Method::kPipeline;
  Params params;
  bool timings = false;
};

struct VerifyConfig {
  std::string graph;
  std::string claims;
  std::string output;  // empty: stdout
  std::optional<double> k;
  Params params;
};

struct BenchConfig {
  std::vector<std::size_t> sizes{500, 1000, 2000};
  std::vector<double> densities{0.5};
  std::size_t seeds = 5;
  std::uint64_t seed = 1;
  std::vector<Method> methods{Method::kPipeline, Method::kGreedy, Method::kExtract};
  std::string csv = "bench.csv";
  std::string summary = "bench_summary.json";
  std::string timing;  // optional per-row runtime CSV
  std::size_t jobs = 1;
  bool ablation = true;
  Params params;
};

// Each command writes diagnostics to `log` and returns an ExitCode.
int cmd_generate(const GenerateConfig& c, std::ostream& log);
int cmd_color(const ColorConfig& c, std::ostream& out, std::ostream& log);
int cmd_verify(const VerifyConfig& c, std::ostream& out, std::ostream& log);
int cmd_bench(const BenchConfig& c, std::ostream& log);

// Fixed bench CSV header.
const std::vector<std::string>& bench_columns();

int run(int argc, char** argv);

}  // namespace tricolor::cli
