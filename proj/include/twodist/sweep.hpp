#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "twodist/graph.hpp"
#include "twodist/tolerances.hpp"

namespace twodist {

// Invariants evaluated on every sweep graph.
enum class Check : std::size_t {
  Graph6RoundTrip,
  ComplementInvolution,
  AdjacencyComplement,
  ClassifyDuality,
  ProjectionTrace,
  Interlacing,
  RegularFastPath,
  BasisIndependence,
  MuMinBound,
  ClusterSpectral,
  MultipartiteSpectral,
  NoOpenEnds,
  ComplementMu,
  DimEDuality,
  DimSDuality,
  EndpointDuality,
  DimChain,
  DimEUpper,
  LowerBounds,
  DiscriminatingRoots,
  EinhornSchoenberg,
  EuclideanConfigs,
  SphericalConfig,
  JSphericalConfig,
  ComplementRadius,
  RegularRadius,
  RadiusConsistency,
  InternalConsistency,
  Exception,
  kCount
};

inline constexpr std::size_t kCheckCount = static_cast<std::size_t>(Check::kCount);

std::string_view check_name(Check c);

struct CheckTally {
  std::size_t applied = 0;
  std::size_t violations = 0;
  bool operator==(const CheckTally&) const = default;
};

struct Counterexample {
  std::size_t index;  // position in the sweep order
  Check check;
  std::string graph6;
  std::string detail;
  bool operator==(const Counterexample&) const = default;
};

struct SweepOptions {
  int n_max = 6;
  int exhaustive_max = 6;          // every labelled graph for n <= min(n_max, exhaustive_max)
  std::size_t samples = 0;         // random graphs spread over n in exhaustive_max+1..n_max
  std::uint64_t seed = 20190101;
  Tolerances tol;
  double check_tol = 1e-7;         // agreement tolerance for numeric equalities
};

struct SweepSummary {
  SweepOptions options;
  std::size_t exhaustive_graphs = 0;
  std::size_t sampled_graphs = 0;
  std::array<CheckTally, kCheckCount> checks{};
  std::optional<Counterexample> first;
  double seconds = 0.0;
  int threads = 1;
  bool parallel = false;

  std::size_t graphs_checked() const { return exhaustive_graphs + sampled_graphs; }
  std::size_t violations() const;
  const CheckTally& tally(Check c) const { return checks[static_cast<std::size_t>(c)]; }
  // Counts and counterexample agree (timing and threading ignored).
  bool same_findings(const SweepSummary& o) const;
};

// Findings for a single graph.
struct GraphFindings {
  std::array<CheckTally, kCheckCount> checks{};
  std::optional<Counterexample> first;

  void applied(Check c) { ++checks[static_cast<std::size_t>(c)].applied; }
  void expect(Check c, bool ok, const std::string& detail = {});
};

// Runs every invariant on one graph.
GraphFindings check_graph(const Graph& g, const SweepOptions& opts);

// Throws std::invalid_argument unless 2 <= n_max <= 8.
SweepSummary invariant_sweep(const SweepOptions& opts);         // OpenMP
SweepSummary invariant_sweep_serial(const SweepOptions& opts);  // reference loop

}  // namespace twodist
