#pragma once

// Independent checks that validate the spectral formulas from first
// principles. Nothing here touches the e⊥ basis or the projected spectrum.

#include <optional>
#include <span>
#include <vector>

#include "twodist/edm.hpp"
#include "twodist/graph.hpp"
#include "twodist/matrix.hpp"

namespace twodist {

struct DistanceCluster {
  double value;
  std::size_t count;
};

struct VerificationReport {
  std::vector<DistanceCluster> distinct_sq_distances;  // ascending
  double max_deviation;  // max over pairs of |‖pⁱ - pʲ‖² - target|
  bool pass;             // two clusters and max_deviation <= tol·max(1, α, β)
};

VerificationReport verify_two_distance(const Configuration& config, const Graph& g, double alpha, double beta,
                                       double tol);

// X̃(t) = -[-e I] D(t) [-e I]ᵀ with D(t) = A + tĀ, i.e. twice the Gram
// matrix of the points with node 0 at the origin.
Matrix bordered_gram(const Graph& g, double t);

struct DiscriminatingRoots {
  std::optional<double> t1;  // largest root of det X̃(t) in (0, 1)
  std::optional<double> t2;  // smallest root greater than 1
  std::size_t m1 = 0;        // nullity of X̃(t1)
  std::size_t m2 = 0;        // nullity of X̃(t2)
};

// Sign-tracked bisection of λ_min(X̃(t)) to a bracket width of 1e-12. The
// upper bracket doubles from t = 2 until λ_min turns negative or t passes 1e6.
DiscriminatingRoots discriminating_roots(const Graph& g);

// dim_E from root multiplicities: min over existing roots of n-1-m(t).
std::size_t dim_euclidean_from_roots(const Graph& g, const DiscriminatingRoots& roots);

// Minimum rank of X̃(β) over the candidates at which it is PSD; nullopt if
// none is feasible.
std::optional<std::size_t> min_rank_over_beta(const Graph& g, std::span<const double> betas,
                                              double tol = 1e-8);

}  // namespace twodist
