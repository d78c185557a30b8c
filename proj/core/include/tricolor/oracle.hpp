#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tricolor/graph.hpp"
#include "tricolor/progress.hpp"

namespace tricolor {

// Exhaustive ground truth over all proper 3-colorings of a small graph.

struct OracleOptions {
  std::size_t cap = 25;
  // Canonical leaves visited while counting before the count is reported
  // as exceeding the limit. Queries are always answered exactly.
  std::uint64_t count_limit = 1ull << 24;
};

struct OracleQueries {
  std::vector<Edge> pairs;
  std::vector<VertexSet> sets;
  // Restrict to colorings where these two vertices get different colors.
  std::optional<Edge> differ;
};

enum class PairRelation { kAlways, kSometimes, kNever, kVacuous };

struct PairAnswer {
  Edge pair{};
  bool can_equal = false;
  bool can_differ = false;

  PairRelation relation() const;
};

struct SetAnswer {
  // Min / max over colorings of the number of distinct colors on the set;
  // both 0 when no coloring exists.
  int min_colors = 0;
  int max_colors = 0;
};

struct ColoringSummary {
  std::uint64_t count = 0;      // number of (conditional) proper 3-colorings
  bool count_exceeds_limit = false;
  bool colorable = false;
  std::vector<PairAnswer> pairs;
  std::vector<SetAnswer> sets;

  // Vacuously true when no coloring exists.
  bool always_same(std::size_t pair_index) const;
  bool always_monochromatic(std::size_t set_index) const;
  bool always_multichromatic(std::size_t set_index) const;
};

// Backtracking over canonical colorings (colors introduced in first-use
// order), with the symmetry factor restored in the reported count.
// Throws TooLarge when n exceeds opts.cap.
ColoringSummary enumerate_3colorings(const Graph& g, const OracleQueries& queries,
                                     const OracleOptions& opts = {});

// Claims beyond Blum progress that the recursion derives internally.
struct MultichromaticClaim {
  VertexSet set;
};
struct ConditionalMonoClaim {
  VertexSet set;
  Vertex t = 0;
  Vertex r0 = 0;
};

using Claim = std::variant<Progress, MultichromaticClaim, ConditionalMonoClaim>;

struct Verdict {
  bool accepted = false;
  std::string reason;
};

struct VerifyOptions {
  ProgressThresholds thresholds{};
  OracleOptions oracle{};
};

// Type 0, mono, multichromatic and conditional claims are decided by
// enumeration (TooLarge above the cap); Type 1 and Type 2 structurally.
Verdict verify_progress_claim(const Graph& g, const Progress& claim, double k,
                              const VerifyOptions& opts = {});
Verdict verify_claim(const Graph& g, const Claim& claim, double k, const VerifyOptions& opts = {});

}  // namespace tricolor
