#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tricolor/baselines.hpp"
#include "tricolor/driver.hpp"
#include "tricolor/kt.hpp"
#include "tricolor/params.hpp"

namespace tricolor {

enum class Method { kPipeline, kGreedy, kExtract, kKt };
std::optional<Method> parse_method(std::string_view name);
const char* method_name(Method m);

struct SeekSummary {
  std::size_t calls = 0;
  std::size_t found = 0;
  std::map<std::string, std::size_t> failures;  // by failure name
  std::map<std::string, std::size_t> progress;  // by progress kind
  std::size_t rounds = 0;
  // Soft-flag name -> (passed, evaluated).
  std::map<std::string, std::pair<std::size_t, std::size_t>> soft_flags;
  // |Y_1| / |T_1| of every first round that completed.
  std::vector<double> y1_over_t1;
};

struct ColorReport {
  std::string method;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t colors_used = 0;
  double k = 0;
  std::size_t degree_split = 0;
  std::size_t type1_extractions = 0;  // high-degree neighborhoods taken by the pipeline
  std::size_t deferral_batches = 0;
  std::optional<DriverStats> driver;
  std::optional<BaselineReport> baseline;
  SeekSummary seek;
};

struct ColorResult {
  Coloring coloring;
  ColorReport report;
};

// Throws NotThreeColorable (odd wheel) if some G[N(v)] has an odd cycle.
void certify_neighborhoods(const Graph& g);

ColorResult pipeline_color(const Graph& g, const Params& p, const Instrumentation& instr = {});
ColorResult color_graph(const Graph& g, Method method, const Params& p,
                        const Instrumentation& instr = {});

nlohmann::json to_json(const SeekSummary& s);
nlohmann::json to_json(const ColorReport& r);

}  // namespace tricolor
