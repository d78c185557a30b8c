#pragma once

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "tricolor/progress.hpp"
#include "tricolor/rational.hpp"

namespace tricolor {

// Configuration shared by the multichromatic test, regularization, the
// cut-or-color recursion and the pipeline. Zero-valued k, nh and round_cap
// are derived from the graph by resolve().
struct Params {
  // Color target. 0 derives ck * sqrt(n / min_degree).
  double k = 0;
  // Stand-in for the subpolynomial factor in front of sqrt(n / Δ).
  double ck = 1.0;
  // Multichromatic-test size threshold. 0 derives ceil(n / k^2).
  std::size_t nh = 0;
  // Outer-round cap. 0 derives max(floor(log2 log2 n), 3).
  int round_cap = 0;

  ProgressThresholds progress{};

  Rational highdeg_factor{1, 4};   // U = {v in T : d_S(v) >= δ̂ * highdeg_factor}
  Rational sidecut_factor{1, 3};   // side cut needs d_{S_j \ X}(u) >= δ̂ * sidecut_factor
  Rational term_factor{1, 2};      // inner loop stops once E(S,T) < δ̂ |T| * term_factor
  Rational bucket_base{4, 3};      // regularization buckets d_l = bucket_base^l
  Rational delta_t_divisor{4};     // δ̂^r = d_l / delta_t_divisor
  Rational delta_s_divisor{4};     // Δ^r = avg d_U(S) / delta_s_divisor
  Rational degree_cap{16, 3};      // asserted T-side ceiling, in units of δ̂

  int root_retries = 10;
  bool side_cuts = true;
  // Hard audit flags throw InvariantViolation when they fail.
  bool strict_audit = true;

  // Pipeline.
  std::size_t small_graph = 64;      // below this many vertices: greedy fallback
  double split_exponent = 0.605;     // min-degree split δ_split(n) = ceil(n^split_exponent)
  bool certify_neighborhoods = true; // scan every N(v) for an odd cycle first
  double seek_retry_shrink = 0.5;    // retry the recursion after a failure only once |V| shrinks by this factor

  std::size_t oracle_cap = 25;
};

// Copy of p with k, nh and round_cap filled in for a graph with n vertices
// and minimum degree min_degree.
Params resolve(const Params& p, std::size_t n, std::size_t min_degree);

// max(floor(log2 log2 n), 3).
int default_round_cap(std::size_t n);
// ceil(n^exponent).
std::size_t degree_split(std::size_t n, double exponent);

void to_json(nlohmann::json& j, const Params& p);
// Unknown keys are rejected; missing keys keep their defaults.
void from_json(const nlohmann::json& j, Params& p);

}  // namespace tricolor
