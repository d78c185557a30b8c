#include <chrono>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tricolor/cli.hpp"
#include "tricolor/dimacs.hpp"
#include "tricolor/errors.hpp"
#include "tricolor/generator.hpp"
#include "tricolor/oracle.hpp"

namespace tricolor::cli {

using nlohmann::json;

namespace {

json witness_json(const NonColorabilityWitness& w) {
  json v = json::array();
  for (Vertex x : w.vertices) v.push_back(x + 1);
  json j = {{"kind", w.kind == NonColorabilityWitness::Kind::kOddWheel ? "odd_wheel"
                                                                       : "forced_adjacent_pair"},
            {"vertices", v},
            {"description", w.describe()}};
  j["center"] = w.center ? json(*w.center + 1) : json(nullptr);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int cmd_generate(const GenerateConfig& c, std::ostream& log) {
  GenParams gp;
  gp.n = c.n;
  gp.edge_prob = c.edge_prob;
  gp.class_balance = c.balance;
  gp.min_degree_target = c.min_degree;
  gp.seed = c.seed;
  gp.max_attempts = c.max_attempts;
  Generated gen;
  try {
    gen = generate_planted(gp);
  } catch (const MinDegreeUnreachable& e) {
    log << "generate: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    log << "generate: " << e.what() << "\n";
    return kUsage;
  }
  const auto sizes = class_sizes(c.n, c.balance);
  json meta = {{"n", c.n},
               {"m", gen.graph.num_edges()},
               {"edge_prob", c.edge_prob},
               {"class_balance", c.balance},
               {"class_sizes", sizes},
               {"seed", c.seed},
               {"attempts", gen.attempts},
               {"min_degree", gen.graph.min_degree()},
               {"max_degree", gen.graph.max_degree()}};
  meta["min_degree_target"] = c.min_degree ? json(*c.min_degree) : json(nullptr);
  write_file(c.out_prefix + ".col", emit_dimacs(gen.graph));
  write_file(c.out_prefix + ".coloring", emit_coloring(gen.planted));
  write_file(c.out_prefix + ".meta.json", dump(meta));
  return kOk;
}

int cmd_color(const ColorConfig& c, std::ostream& out, std::ostream& log) {
  const Graph g = parse_dimacs(read_file(c.input));
  std::ofstream trace_file;
  std::optional<TraceSink> sink;
  if (!c.trace.empty()) {
    trace_file.open(c.trace, std::ios::binary | std::ios::trunc);
    if (!trace_file) throw IoError("cannot open '" + c.trace + "' for writing");
    sink.emplace(trace_file);
  }
  Instrumentation instr;
  if (sink) instr.trace = &*sink;

  auto emit_report = [&](const json& report) {
    if (c.report.empty()) {
      out << dump(report);
    } else {
      write_file(c.report, dump(report));
    }
  };

  const auto start = std::chrono::steady_clock::now();
  ColorResult res;
  try {
    res = color_graph(g, c.method, c.params, instr);
  } catch (const NotThreeColorable& e) {
    emit_report({{"status", "not_3_colorable"},
                 {"method", method_name(c.method)},
                 {"n", g.order()},
                 {"witness", witness_json(e.witness)}});
    log << "color: graph is not 3-colorable: " << e.witness.describe() << "\n";
    return kNotColorable;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const ProperCheck check = is_proper_coloring(g, res.coloring);
  if (!check) {
    log << "color: internal error, refusing to write an improper coloring\n";
    throw InvariantViolation("cmd_color: improper coloring");
  }
  json report = to_json(res.report);
  report["status"] = "ok";
  report["proper"] = true;
  if (c.timings) report["seconds"] = seconds;
  if (!c.output.empty()) write_file(c.output, emit_coloring(res.coloring));
  emit_report(report);
  return kOk;
}

namespace {

VertexSet ids_to_set(const json& arr, std::size_t n) {
  VertexSet s(n);
  for (const auto& x : arr) {
    const auto v = x.get<std::int64_t>();
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw VertexOutOfRange(static_cast<std::size_t>(std::max<std::int64_t>(v, 0)), n);
    }
    s.insert(static_cast<Vertex>(v - 1));
  }
  return s;
}

Claim parse_claim(const json& j, const Graph& g) {
  const std::size_t n = g.order();
  const std::string type = j.at("type").get<std::string>();
  auto pair_of = [&](const json& arr) {
    if (!arr.is_array() || arr.size() != 2) throw Error("claim: expected a pair of vertex ids");
    const auto a = arr[0].get<std::int64_t>();
    const auto b = arr[1].get<std::int64_t>();
    for (auto v : {a, b}) {
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw VertexOutOfRange(static_cast<std::size_t>(std::max<std::int64_t>(v, 0)), n);
      }
    }
    return Edge{static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)};
  };
  if (type == "type0") {
    const Edge e = pair_of(j.contains("pair") ? j.at("pair") : j.at("vertices"));
    return Progress{SameColor{e.first, e.second}, "claims_file"};
  }
  const VertexSet set = ids_to_set(j.at("vertices"), n);
  if (type == "type1" || type == "type2") {
    TwoColoring wit;
    auto split = bipartition(g, set);
    if (auto* two = std::get_if<TwoColoring>(&split)) {
      wit = std::move(*two);
    } else {
      wit = TwoColoring{VertexSet(n), VertexSet(n)};
    }
    if (type == "type1") return Progress{LargeSet{set, wit}, "claims_file"};
    VertexSet nb;
    if (j.contains("neighborhood")) nb = ids_to_set(j.at("neighborhood"), n);
    return Progress{SmallNeighborhood{set, wit, nb}, "claims_file"};
  }
  if (type == "mono") {
    if (j.contains("conditional") && !j.at("conditional").is_null()) {
      const Edge e = pair_of(j.at("conditional"));
      return ConditionalMonoClaim{set, e.first, e.second};
    }
    return Progress{MonoSet{set}, "claims_file"};
  }
  if (type == "multi") return MultichromaticClaim{set};
  throw Error("claim: unknown type '" + type + "'");
}

}  // namespace

int cmd_verify(const VerifyConfig& c, std::ostream& out, std::ostream& log) {
  const Graph g = parse_dimacs(read_file(c.graph));
  json doc;
  try {
    doc = json::parse(read_file(c.claims));
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("claims file: ") + e.what());
  }
  json claims = doc.is_array() ? doc : doc.value("claims", json::array());
  double k = 0;
  if (c.k) {
    k = *c.k;
  } else if (doc.is_object() && doc.contains("k")) {
    k = doc.at("k").get<double>();
  } else {
    k = resolve(c.params, g.order(), g.min_degree()).k;
  }
  VerifyOptions opts;
  opts.thresholds = c.params.progress;
  opts.oracle.cap = c.params.oracle_cap;

  json verdicts = json::array();
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const json& cj = claims[i];
    json v = {{"index", i}, {"type", cj.value("type", "")}};
    try {
      const Verdict verdict = verify_claim(g, parse_claim(cj, g), k, opts);
      v["accepted"] = verdict.accepted;
      v["reason"] = verdict.reason;
    } catch (const TooLarge& e) {
      v["accepted"] = false;
      v["reason"] = std::string("too large: ") + e.what();
    } catch (const json::exception& e) {
      v["accepted"] = false;
      v["reason"] = std::string("malformed claim: ") + e.what();
    } catch (const Error& e) {
      v["accepted"] = false;
      v["reason"] = std::string("malformed claim: ") + e.what();
    }
    (v["accepted"].get<bool>() ? accepted : rejected) += 1;
    verdicts.push_back(std::move(v));
  }
  const json result = {{"k", k}, {"accepted", accepted}, {"rejected", rejected},
                       {"verdicts", verdicts}};
  if (c.output.empty()) {
    out << dump(result);
  } else {
    write_file(c.output, dump(result));
  }
  if (rejected > 0) {
    log << "verify: " << rejected << " claim(s) rejected\n";
    return kRejected;
  }
  return kOk;
}

}  // namespace tricolor::cli
