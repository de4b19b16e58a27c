#include "twodist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twodist/errors.hpp"
#include "twodist/linalg.hpp"

namespace twodist {

namespace {

constexpr double kRootWidth = 1e-12;
constexpr double kLowerProbe = 1e-6;
constexpr double kUpperLimit = 1e6;
constexpr double kNullityTol = 1e-8;

double min_eigenvalue(const Graph& g, double t) { return jacobi_eigen(bordered_gram(g, t)).values.back(); }

std::size_t nullity(const Graph& g, double t) {
  const EigenPairs ep = jacobi_eigen(bordered_gram(g, t));
  const double thr = kNullityTol * std::max(1.0, max_abs(ep.values));
  return static_cast<std::size_t>(
      std::count_if(ep.values.begin(), ep.values.end(), [&](double v) { return std::abs(v) <= thr; }));
}

// Boundary between neg_end (λ_min < 0) and pos_end (λ_min >= 0).
double bisect(const Graph& g, double neg_end, double pos_end) {
  while (std::abs(pos_end - neg_end) > kRootWidth) {
    const double mid = 0.5 * (neg_end + pos_end);
    if (min_eigenvalue(g, mid) < 0.0)
      neg_end = mid;
    else
      pos_end = mid;
  }
  return 0.5 * (neg_end + pos_end);
}

void require_nondegenerate(const Graph& g) {
  const std::size_t pairs = static_cast<std::size_t>(g.n()) * (g.n() - 1) / 2;
  if (g.n() < 2 || g.edge_count() == 0 || g.edge_count() == pairs)
    throw DegenerateGraphError("discriminating polynomial is degenerate for complete or null graphs");
}

}  // namespace

VerificationReport verify_two_distance(const Configuration& config, const Graph& g, double alpha, double beta,
                                       double tol) {
  const std::size_t n = config.size();
  if (n != static_cast<std::size_t>(g.n())) throw std::invalid_argument("verify_two_distance: size mismatch");
  const double abs_tol = tol * std::max({1.0, alpha, beta});
  const Matrix d = squared_distances(config.points);

  std::vector<double> values;
  values.reserve(n * (n - 1) / 2);
  double max_dev = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double target = g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? alpha : beta;
      max_dev = std::max(max_dev, std::abs(d(i, j) - target));
      values.push_back(d(i, j));
    }
  std::sort(values.begin(), values.end());

  std::vector<DistanceCluster> clusters;
  std::size_t start = 0;
  while (start < values.size()) {
    std::size_t end = start + 1;
    while (end < values.size() && values[end] - values[end - 1] <= abs_tol) ++end;
    double mean = 0.0;
    for (std::size_t k = start; k < end; ++k) mean += values[k];
    clusters.push_back({mean / static_cast<double>(end - start), end - start});
    start = end;
  }
  const bool pass = clusters.size() == 2 && max_dev <= abs_tol;
  return {std::move(clusters), max_dev, pass};
}

Matrix bordered_gram(const Graph& g, double t) {
  const int n = g.n();
  auto dist = [&](int i, int j) { return i == j ? 0.0 : (g.has_edge(i, j) ? 1.0 : t); };
  Matrix x(n - 1, n - 1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) x(i - 1, j - 1) = dist(0, i) + dist(0, j) - dist(i, j);
  return x;
}

DiscriminatingRoots discriminating_roots(const Graph& g) {
  require_nondegenerate(g);
  DiscriminatingRoots out;

  if (min_eigenvalue(g, kLowerProbe) < 0.0) {
    out.t1 = bisect(g, kLowerProbe, 1.0);
    out.m1 = nullity(g, *out.t1);
  }

  double hi = 2.0;
  while (hi <= kUpperLimit && min_eigenvalue(g, hi) >= 0.0) hi *= 2.0;
  if (hi <= kUpperLimit) {
    out.t2 = bisect(g, hi, hi > 2.0 ? 0.5 * hi : 1.0);
    out.m2 = nullity(g, *out.t2);
  }
  return out;
}

std::size_t dim_euclidean_from_roots(const Graph& g, const DiscriminatingRoots& roots) {
  const std::size_t n1 = static_cast<std::size_t>(g.n()) - 1;
  std::size_t best = n1;
  if (roots.t1) best = std::min(best, n1 - roots.m1);
  if (roots.t2) best = std::min(best, n1 - roots.m2);
  return best;
}

std::optional<std::size_t> min_rank_over_beta(const Graph& g, std::span<const double> betas, double tol) {
  std::optional<std::size_t> best;
  for (double beta : betas) {
    const EigenPairs ep = jacobi_eigen(bordered_gram(g, beta));
    const PsdRank pr = psd_rank(ep, tol);
    if (!pr.is_psd) continue;
    if (!best || pr.rank < *best) best = pr.rank;
  }
  return best;
}

}  // namespace twodist
