#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "twodist/centering.hpp"
#include "twodist/edm.hpp"
#include "twodist/graph.hpp"
#include "twodist/linalg.hpp"
#include "twodist/tolerances.hpp"

namespace twodist {

// Extreme eigenvalues of VᵀAV with their eigenspaces.
struct ProjectedSpectrum {
  double mu_min;
  double mu_max;
  std::size_t m_min;
  std::size_t m_max;
  Matrix u_u;  // (n-1) x m_min, eigenspace of mu_min
  Matrix u_l;  // (n-1) x m_max, eigenspace of mu_max
  std::vector<EigenGroup> rest;  // every group except mu_min's (W_u, Λ_u)
  Spectrum spectrum;             // full clustered spectrum
};

// Generic path: clustered eigh of VᵀAV. For k-regular graphs the fast path
// takes the spectrum of A, drops one copy of k and maps eigenvectors by Vᵀ.
ProjectedSpectrum projected_spectrum(const Graph& g, const VBasis& v, const Tolerances& tol = {},
                                     bool regular_fast_path = true);
ProjectedSpectrum projected_spectrum(const Graph& g, const Tolerances& tol = {});

struct BetaInterval {
  double lo;
  bool lo_closed;
  double hi;  // +inf when unbounded
  bool hi_closed;

  bool contains(double beta) const;
};

struct BetaIntervals {
  std::vector<BetaInterval> intervals;
  bool contains(double beta) const;
};

enum class Side { Lower, Upper };

struct DimResult {
  std::size_t dim;
  double witness_beta;
};

struct SphericalDim {
  std::size_t dim;
  double witness_beta;
  double radius;
};

// Euclidean representation with α = 1: D = A + βĀ.
struct EuclideanRepresentation {
  double beta;
  std::size_t rank;
  Matrix d;
  Configuration config;
};

// Spherical representation with α = 1, centred on the sphere.
struct SphericalRepresentation {
  double beta;
  double radius;
  Matrix d;
  Configuration config;
};

// J-spherical representation: α = 2, unit sphere, β = 2 + 2δ.
struct JSpherical {
  double lambda1;          // largest eigenvalue of Ā
  std::size_t m_lambda1;   // its multiplicity
  double delta;            // 1 / lambda1
  double beta;             // 2 + 2δ
  std::size_t dim;         // n - m_lambda1
  Matrix d;                // 2(E - I) + 2δĀ
  Configuration config;    // rows of unit norm
};

struct LowerBounds {
  double euclidean;  // ½(√(8n+1) - 3)
  double spherical;  // ½(√(8n+9) - 3)
};

LowerBounds lower_bounds(int n);

struct ReprReport {
  int n = 0;
  std::size_t edges = 0;
  GraphClass graph_class;
  bool degenerate = false;

  std::optional<double> mu_min, mu_max;
  std::optional<std::size_t> m_min, m_max;
  std::optional<double> beta_l, beta_u;
  std::optional<std::size_t> dim_e;
  std::optional<double> dim_e_beta;
  std::optional<std::size_t> dim_s;
  std::optional<double> dim_s_beta, dim_s_radius;
  std::optional<bool> spherical_at_l, spherical_at_u;
  std::optional<double> rho_l, rho_u;
  std::optional<double> lambda1_complement;
  std::optional<std::size_t> m_lambda1_complement;
  std::optional<double> delta, beta_j;
  std::optional<std::size_t> dim_j;
  std::optional<double> lower_bound_e, lower_bound_s;

  bool operator==(const ReprReport&) const = default;
};

// Per-graph analysis state: V, A, Ā, the class and the projected spectrum
// are computed once at construction and shared by every query.
class GraphAnalyzer {
 public:
  explicit GraphAnalyzer(Graph g, Tolerances tol = {}, VScheme scheme = VScheme::Dense);

  const Graph& graph() const { return graph_; }
  const Tolerances& tolerances() const { return tol_; }
  const GraphClass& graph_class() const { return class_; }
  const Matrix& adjacency() const { return a_; }
  const Matrix& complement_adjacency() const { return abar_; }
  // Throws std::invalid_argument for n = 1.
  const VBasis& v() const;
  const ProjectedSpectrum& projected_spectrum() const;

  // Complete or null: no two-distance representation.
  bool degenerate() const;

  // Queries below throw DegenerateGraphError on degenerate graphs.
  std::optional<double> beta_l() const;  // absent for complete multipartite graphs
  std::optional<double> beta_u() const;  // absent for cluster graphs
  BetaIntervals beta_feasible_set() const;
  // A β strictly inside the feasible set: midpoint of [β_l, 1) or ½.
  double interior_beta() const;
  Matrix distance_matrix(double beta) const;  // A + βĀ

  DimResult dim_euclidean() const;
  // Eigenvector test A·V·U = μ·V·U at the endpoint, cross-checked against the
  // rank test of spherical_info (ConsistencyError on disagreement). Throws
  // InfeasibleError when the endpoint does not exist.
  bool endpoint_sphericity(Side side) const;
  SphericalDim dim_spherical() const;
  // ρ² at β_u from the spectral decomposition of VᵀAV. Requires a spherical
  // upper endpoint; throws InfeasibleError otherwise.
  double radius_squared_at_beta_u_closed_form() const;
  JSpherical j_spherical() const;
  EuclideanRepresentation euclidean_representation(double beta) const;
  // side == nullopt picks the dim_spherical witness.
  SphericalRepresentation spherical_representation(std::optional<Side> side = std::nullopt) const;

  ReprReport report() const;

 private:
  void require_nondegenerate() const;
  double endpoint_residual(Side side) const;

  Graph graph_;
  Tolerances tol_;
  GraphClass class_;
  Matrix a_;
  Matrix abar_;
  std::optional<VBasis> v_;
  std::optional<ProjectedSpectrum> ps_;
};

// λ₁(Ā) for a non-degenerate graph.
double complement_lambda1(const Graph& g, const Tolerances& tol = {});
bool same_second_distance(const Graph& g1, const Graph& g2, const Tolerances& tol = {});

}  // namespace twodist
