#include "twodist/representations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "twodist/errors.hpp"

namespace twodist {

namespace {

ProjectedSpectrum from_spectrum(Spectrum spec) {
  ProjectedSpectrum ps;
  ps.mu_max = spec.largest().value;
  ps.m_max = spec.largest().multiplicity;
  ps.u_l = spec.largest().basis;
  ps.mu_min = spec.smallest().value;
  ps.m_min = spec.smallest().multiplicity;
  ps.u_u = spec.smallest().basis;
  ps.rest.assign(spec.groups.begin(), spec.groups.end() - 1);
  ps.spectrum = std::move(spec);
  return ps;
}

// Spectrum of VᵀAV from that of A when Ae = ke: one copy of k belongs to e.
Spectrum regular_projected_spectrum(const Matrix& a, int k, const VBasis& v, double tol_rel) {
  Spectrum full = eigh(a, tol_rel);
  const std::size_t n = a.rows();
  Spectrum out{{}, full.tol};
  for (auto& g : full.groups) {
    Matrix basis = g.basis;
    std::size_t mult = g.multiplicity;
    if (std::abs(g.value - k) <= full.tol) {
      // Project the k-eigenspace onto e⊥; the e direction drops out.
      for (std::size_t j = 0; j < basis.cols(); ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += basis(i, j);
        mean /= static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) basis(i, j) -= mean;
      }
      basis = orthonormalize(basis, 1e-6);
      mult = basis.cols();
      if (mult != g.multiplicity - 1)
        throw ConsistencyError("regular fast path: eigenvalue k does not contain e");
      if (mult == 0) continue;
    }
    out.groups.push_back({g.value, mult, transpose_times(v.columns, basis)});
  }
  return out;
}

}  // namespace

ProjectedSpectrum projected_spectrum(const Graph& g, const VBasis& v, const Tolerances& tol,
                                     bool regular_fast_path) {
  if (g.n() < 2) throw std::invalid_argument("projected_spectrum: n must be at least 2");
  const Matrix a = adjacency_matrix(g);
  if (regular_fast_path) {
    if (auto k = g.regular_degree()) return from_spectrum(regular_projected_spectrum(a, *k, v, tol.eig));
  }
  return from_spectrum(eigh(project_adjacency(a, v), tol.eig));
}

ProjectedSpectrum projected_spectrum(const Graph& g, const Tolerances& tol) {
  return projected_spectrum(g, build_v(g.n()), tol);
}

bool BetaInterval::contains(double beta) const {
  const bool above = lo_closed ? beta >= lo : beta > lo;
  const bool below = std::isinf(hi) ? true : (hi_closed ? beta <= hi : beta < hi);
  return above && below;
}

bool BetaIntervals::contains(double beta) const {
  return std::any_of(intervals.begin(), intervals.end(), [&](const auto& iv) { return iv.contains(beta); });
}

LowerBounds lower_bounds(int n) {
  if (n < 2) throw std::invalid_argument("lower_bounds: n must be at least 2");
  return {0.5 * (std::sqrt(8.0 * n + 1.0) - 3.0), 0.5 * (std::sqrt(8.0 * n + 9.0) - 3.0)};
}

GraphAnalyzer::GraphAnalyzer(Graph g, Tolerances tol, VScheme scheme)
    : graph_(std::move(g)),
      tol_(tol),
      class_(classify(graph_)),
      a_(adjacency_matrix(graph_)),
      abar_(adjacency_matrix(complement(graph_))) {
  if (graph_.n() >= 2) {
    v_ = build_v(graph_.n(), scheme);
    ps_ = twodist::projected_spectrum(graph_, *v_, tol_);
  }
}

const VBasis& GraphAnalyzer::v() const {
  if (!v_) throw std::invalid_argument("GraphAnalyzer: single-node graph has no e⊥ basis");
  return *v_;
}

const ProjectedSpectrum& GraphAnalyzer::projected_spectrum() const {
  if (!ps_) throw std::invalid_argument("GraphAnalyzer: single-node graph has no projected spectrum");
  return *ps_;
}

bool GraphAnalyzer::degenerate() const {
  return class_.tag == ClassTag::Complete || class_.tag == ClassTag::Null;
}

void GraphAnalyzer::require_nondegenerate() const {
  if (degenerate())
    throw DegenerateGraphError("no two-distance representation exists for a " +
                               std::string(to_string(class_.tag)) + " graph");
}

std::optional<double> GraphAnalyzer::beta_l() const {
  require_nondegenerate();
  if (class_.is_multipartite) return std::nullopt;
  const double mu = ps_->mu_max;
  return mu / (mu + 1.0);
}

std::optional<double> GraphAnalyzer::beta_u() const {
  require_nondegenerate();
  if (class_.is_cluster) return std::nullopt;
  const double mu = std::abs(ps_->mu_min);
  return mu / (mu - 1.0);
}

BetaIntervals GraphAnalyzer::beta_feasible_set() const {
  const auto lo = beta_l();
  const auto hi = beta_u();
  const double inf = std::numeric_limits<double>::infinity();
  BetaIntervals out;
  out.intervals.push_back(lo ? BetaInterval{*lo, true, 1.0, false} : BetaInterval{0.0, false, 1.0, false});
  out.intervals.push_back(hi ? BetaInterval{1.0, false, *hi, true} : BetaInterval{1.0, false, inf, false});
  return out;
}

double GraphAnalyzer::interior_beta() const {
  const auto lo = beta_l();
  return lo ? 0.5 * (*lo + 1.0) : 0.5;
}

Matrix GraphAnalyzer::distance_matrix(double beta) const { return a_ + abar_ * beta; }

DimResult GraphAnalyzer::dim_euclidean() const {
  const auto lo = beta_l();
  const auto hi = beta_u();
  const std::size_t n1 = static_cast<std::size_t>(graph_.n()) - 1;
  if (!hi) return {n1 - ps_->m_max, *lo};
  if (!lo) return {n1 - ps_->m_min, *hi};
  // Tie goes to β_l.
  if (ps_->m_max >= ps_->m_min) return {n1 - ps_->m_max, *lo};
  return {n1 - ps_->m_min, *hi};
}

double GraphAnalyzer::endpoint_residual(Side side) const {
  const bool lower = side == Side::Lower;
  const Matrix z = v_->columns * (lower ? ps_->u_l : ps_->u_u);
  const double mu = lower ? ps_->mu_max : ps_->mu_min;
  return max_abs_diff(a_ * z, z * mu);
}

bool GraphAnalyzer::endpoint_sphericity(Side side) const {
  const auto beta = side == Side::Lower ? beta_l() : beta_u();
  if (!beta)
    throw InfeasibleError(side == Side::Lower ? "lower endpoint beta_l does not exist for this graph"
                                              : "upper endpoint beta_u does not exist for this graph");
  const double thr = tol_.residual * std::max(1.0, max_abs(a_)) * std::sqrt(double(graph_.n()));
  const bool eigen_test = endpoint_residual(side) <= thr;
  const bool rank_test = spherical_info(distance_matrix(*beta), *v_, tol_).has_value();
  if (eigen_test != rank_test) {
    std::ostringstream os;
    os << "endpoint sphericity: eigenvector test (" << eigen_test << ") disagrees with rank test ("
       << rank_test << ") at " << (side == Side::Lower ? "beta_l" : "beta_u");
    throw ConsistencyError(os.str());
  }
  return eigen_test;
}

SphericalDim GraphAnalyzer::dim_spherical() const {
  const auto lo = beta_l();
  const auto hi = beta_u();
  const std::size_t n1 = static_cast<std::size_t>(graph_.n()) - 1;
  const bool sph_l = lo && endpoint_sphericity(Side::Lower);
  const bool sph_u = hi && endpoint_sphericity(Side::Upper);

  std::size_t dim = n1;
  double beta = interior_beta();
  if (sph_l && (!sph_u || ps_->m_max >= ps_->m_min)) {
    dim = n1 - ps_->m_max;
    beta = *lo;
  } else if (sph_u) {
    dim = n1 - ps_->m_min;
    beta = *hi;
  }
  const auto info = spherical_info(distance_matrix(beta), *v_, tol_);
  if (!info) throw ConsistencyError("dim_spherical: witness EDM is not spherical");
  return {dim, beta, info->radius};
}

double GraphAnalyzer::radius_squared_at_beta_u_closed_form() const {
  const auto hi = beta_u();
  if (!hi) throw InfeasibleError("closed-form radius needs mu_min < -1 (graph is a cluster graph)");
  if (!endpoint_sphericity(Side::Upper)) throw InfeasibleError("closed-form radius needs a spherical D_u");
  const double n = graph_.n();
  const double mu = ps_->mu_min;
  const Vector e(graph_.n(), 1.0);
  const Vector ae = a_ * std::span<const double>(e);
  Vector y(graph_.n() - 1, 0.0);
  for (std::size_t j = 0; j < y.size(); ++j)
    for (std::size_t i = 0; i < ae.size(); ++i) y[j] += v_->columns(i, j) * ae[i];
  // eᵀAV W_u (μ_min I - Λ_u)⁻¹ W_uᵀ VᵀAe
  double quad = 0.0;
  for (const auto& g : ps_->rest)
    for (std::size_t k = 0; k < g.multiplicity; ++k) {
      double c = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) c += g.basis(i, k) * y[i];
      quad += c * c / (mu - g.value);
    }
  const double eae = sum(ae);
  return (quad + mu * (n * n - n) + eae) / (2.0 * n * n * (mu + 1.0));
}

JSpherical GraphAnalyzer::j_spherical() const {
  require_nondegenerate();
  const Spectrum spec = eigh(abar_, tol_.eig);
  const double lambda1 = spec.largest().value;
  const std::size_t m = spec.largest().multiplicity;
  const double delta = 1.0 / lambda1;
  const std::size_t n = static_cast<std::size_t>(graph_.n());
  const Matrix b = Matrix::identity(n) - abar_ * delta;
  const std::size_t dim = n - m;
  const PsdRank pr = psd_rank(b, tol_.psd);
  if (!pr.is_psd || pr.rank != dim)
    throw ConsistencyError("j_spherical: rank of I - δĀ does not match n - m(λ₁(Ā))");
  Matrix d = (Matrix::ones(n, n) - Matrix::identity(n)) * 2.0 + abar_ * (2.0 * delta);
  return {lambda1, m, delta, 2.0 + 2.0 * delta, dim, std::move(d),
          Configuration{gram_factor(b, dim, tol_.psd), Centering::Circumcenter}};
}

EuclideanRepresentation GraphAnalyzer::euclidean_representation(double beta) const {
  require_nondegenerate();
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InfeasibleError("beta must be positive and finite");
  if (beta == 1.0) throw InfeasibleError("beta = 1 gives a one-distance set");
  Matrix d = distance_matrix(beta);
  const EdmCheck chk = is_edm(d, *v_, tol_);
  if (!chk.is_edm) {
    std::ostringstream os;
    os.precision(17);
    os << "beta " << beta << " is infeasible: projected Gram has eigenvalue " << chk.x_spectrum.smallest().value;
    throw InfeasibleError(os.str());
  }
  Configuration config = recover_configuration(d, Centering::Centroid, tol_);
  return {beta, chk.embedding_dim, std::move(d), std::move(config)};
}

SphericalRepresentation GraphAnalyzer::spherical_representation(std::optional<Side> side) const {
  double beta;
  if (!side) {
    beta = dim_spherical().witness_beta;
  } else {
    if (!endpoint_sphericity(*side))
      throw InfeasibleError(*side == Side::Lower ? "D_l is not spherical" : "D_u is not spherical");
    beta = *side == Side::Lower ? *beta_l() : *beta_u();
  }
  Matrix d = distance_matrix(beta);
  const auto info = spherical_info(d, *v_, tol_);
  if (!info) throw InfeasibleError("EDM at the requested beta is not spherical");
  Configuration config = recover_configuration(d, Centering::Circumcenter, tol_);
  return {beta, info->radius, std::move(d), std::move(config)};
}

ReprReport GraphAnalyzer::report() const {
  ReprReport r;
  r.n = graph_.n();
  r.edges = graph_.edge_count();
  r.graph_class = class_;
  r.degenerate = degenerate();
  if (graph_.n() >= 2) {
    r.mu_min = ps_->mu_min;
    r.mu_max = ps_->mu_max;
    r.m_min = ps_->m_min;
    r.m_max = ps_->m_max;
    const auto lb = lower_bounds(graph_.n());
    r.lower_bound_e = lb.euclidean;
    r.lower_bound_s = lb.spherical;
  }
  if (r.degenerate) return r;

  r.beta_l = beta_l();
  r.beta_u = beta_u();
  const auto de = dim_euclidean();
  r.dim_e = de.dim;
  r.dim_e_beta = de.witness_beta;
  if (r.beta_l) {
    r.spherical_at_l = endpoint_sphericity(Side::Lower);
    if (*r.spherical_at_l) r.rho_l = spherical_info(distance_matrix(*r.beta_l), *v_, tol_)->radius;
  }
  if (r.beta_u) {
    r.spherical_at_u = endpoint_sphericity(Side::Upper);
    if (*r.spherical_at_u) r.rho_u = spherical_info(distance_matrix(*r.beta_u), *v_, tol_)->radius;
  }
  const auto ds = dim_spherical();
  r.dim_s = ds.dim;
  r.dim_s_beta = ds.witness_beta;
  r.dim_s_radius = ds.radius;
  const auto js = j_spherical();
  r.lambda1_complement = js.lambda1;
  r.m_lambda1_complement = js.m_lambda1;
  r.delta = js.delta;
  r.beta_j = js.beta;
  r.dim_j = js.dim;
  return r;
}

double complement_lambda1(const Graph& g, const Tolerances& tol) {
  const GraphClass c = classify(g);
  if (c.tag == ClassTag::Complete || c.tag == ClassTag::Null)
    throw DegenerateGraphError("second distance is undefined for complete or null graphs");
  return eigh(adjacency_matrix(complement(g)), tol.eig).largest().value;
}

bool same_second_distance(const Graph& g1, const Graph& g2, const Tolerances& tol) {
  const double l1 = complement_lambda1(g1, tol);
  const double l2 = complement_lambda1(g2, tol);
  return std::abs(l1 - l2) <= tol.eig * std::max({1.0, std::abs(l1), std::abs(l2)});
}

}  // namespace twodist
