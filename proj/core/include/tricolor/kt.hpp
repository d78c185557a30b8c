#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "tricolor/blum.hpp"
#include "tricolor/graph.hpp"
#include "tricolor/params.hpp"
#include "tricolor/progress.hpp"
#include "tricolor/trace.hpp"

namespace tricolor {

// Shared per-root state: N(r0) and, lazily, Z(w) = N_T1(N_{N(r0)}(w)) for
// w in T1. The Y-extension count |N_Y(N_{N(r0)}(t'))| equals |Z(t') ∩ Y|
// for every Y ⊆ T1, and Z is symmetric on T1.
class CutContext {
 public:
  CutContext(const Graph& g, Vertex r0, VertexSet t1);

  const Graph& graph() const { return *g_; }
  Vertex root() const { return r0_; }
  const VertexSet& root_neighbors() const { return nr0_; }
  const VertexSet& t1() const { return t1_; }
  // Requires w ∈ T1.
  const VertexSet& z(Vertex w);

 private:
  const Graph* g_;
  Vertex r0_;
  VertexSet nr0_;
  VertexSet t1_;
  std::vector<std::optional<VertexSet>> z_;
};

struct MonochromaticIfDiffer {};

struct SparseCut {
  VertexSet x;
  VertexSet y;
};

struct CutResult {
  std::variant<MonochromaticIfDiffer, SparseCut, Progress> outcome;
  std::size_t x_extensions = 0;
  std::size_t y_extensions = 0;
};

// Preconditions: S ⊆ N(r0), T ⊆ ctx.t1(), t ∈ T, N_S(t) nonempty.
CutResult cut_or_color(CutContext& ctx, const VertexSet& s, const VertexSet& t_side, Vertex t,
                       const Params& p, const Instrumentation& instr = {});

enum class CutViolation { kNotSubproblem, kTrivial, kI1, kI2, kI3, kI4 };
const char* violation_name(CutViolation v);

// Independent check of the sparse-cut invariants; recomputes everything
// from G.
std::vector<CutViolation> check_sparse_cut(const Graph& g, Vertex r0, const VertexSet& s,
                                           const VertexSet& t_side, Vertex t, const VertexSet& x,
                                           const VertexSet& y, std::size_t nh);

struct SideCut {
  VertexSet x;
  VertexSet y;
  std::optional<Vertex> u;     // nullopt: no candidate beat (S_j, T_j)
  std::size_t qualifying = 0;  // |Y''|
};

// Qualifying threshold for side-cut seeds: d_{S_j \ X}(u) >= this.
Rational side_cut_threshold(const RegularPair& pair, const Params& p);

SideCut best_side_cut(const Graph& g, const VertexSet& x, const VertexSet& y,
                      const RegularPair& pair, const Params& p);

struct RoundInputs {
  int j = 1;
  const RegularPair* pair = nullptr;
  VertexSet x;  // final sparse cut of the inner loop
  VertexSet y;
  bool termination_fired = false;
  std::optional<SideCut> side;  // evaluated side cut, if any
  bool side_adopted = false;
  std::size_t nh = 1;
  double k = 1;
};

struct AuditFlag {
  std::string name;
  bool hard = false;
  bool pass = true;
  bool evaluated = true;
};

struct RoundAudit {
  int j = 1;
  std::size_t s_size = 0, t_size = 0;       // |S_j|, |T_j|
  std::size_t x_size = 0, y_size = 0;       // final sparse cut
  std::size_t xj_size = 0, yj_size = 0;     // adopted cut (X_j, Y_j)
  Rational delta_s, delta_t;
  Rational mu;                              // |Y_j| * nh / delta_s^2
  std::size_t ypp_size = 0;                 // |Y''|
  std::size_t edges_ypp_rest = 0;           // E(Y'', S_j \ X)
  std::size_t edges_xy = 0;                 // E(X, Y)
  bool side_adopted = false;
  std::vector<AuditFlag> flags;

  bool hard_ok() const;
  const AuditFlag* flag(const std::string& name) const;
};

RoundAudit audit_round(const Graph& g, const RoundInputs& in);
nlohmann::json to_json(const RoundAudit& a);

struct FinalCut {
  VertexSet x;
  VertexSet y;
  std::size_t iterations = 0;
};

enum class FailureReason { kErrorA, kErrorB, kRoundCapExceeded, kStructureFailed };
const char* failure_name(FailureReason r);

struct SeekFailure {
  FailureReason reason = FailureReason::kStructureFailed;
  std::string detail;
};

using InnerOutcome = std::variant<FinalCut, Progress, SeekFailure>;

// Inner repeat-until loop on a regular pair of round j.
InnerOutcome inner_loop(CutContext& ctx, const RegularPair& pair, const Params& p,
                        const Instrumentation& instr = {});

struct SeekOutcome {
  std::variant<Progress, SeekFailure, NonColorabilityWitness> result;
  std::vector<RoundAudit> audits;
  std::optional<Vertex> root;
  std::size_t roots_tried = 0;
  std::size_t t1_size = 0;
  Params params;  // resolved

  bool found() const { return std::holds_alternative<Progress>(result); }
};

// Searches for progress towards a k-coloring. Failures are data. Throws
// InvariantViolation when strict_audit is set and a hard flag fails.
SeekOutcome seek_progress(const Graph& g, std::size_t min_degree, const Params& p,
                          const Instrumentation& instr = {});

}  // namespace tricolor
