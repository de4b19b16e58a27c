#include "twodist/sweep.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "twodist/centering.hpp"
#include "twodist/edm.hpp"
#include "twodist/errors.hpp"
#include "twodist/linalg.hpp"
#include "twodist/oracle.hpp"
#include "twodist/representations.hpp"

namespace twodist {

namespace {

constexpr std::string_view kCheckNames[kCheckCount] = {
    "graph6_roundtrip",     "complement_involution", "adjacency_complement", "classify_duality",
    "projection_trace",     "interlacing",           "regular_fast_path",    "basis_independence",
    "mu_min_bound",         "cluster_spectral",      "multipartite_spectral", "no_open_ends",
    "complement_mu",        "dim_e_duality",         "dim_s_duality",        "endpoint_duality",
    "dim_chain",            "dim_e_upper",           "lower_bounds",         "discriminating_roots",
    "einhorn_schoenberg",   "euclidean_configs",     "spherical_config",     "j_spherical_config",
    "complement_radius",    "regular_radius",        "radius_consistency",   "internal_consistency",
    "exception",
};

constexpr double kSpectralTol = 1e-9;

struct SweepItem {
  int n;
  std::uint64_t mask;
};

std::vector<SweepItem> sweep_items(const SweepOptions& opts, std::size_t& exhaustive, std::size_t& sampled) {
  if (opts.n_max < 2 || opts.n_max > 8)
    throw std::invalid_argument("n_max too large: sweeps support 2 <= n_max <= 8, got " +
                                std::to_string(opts.n_max));
  if (opts.exhaustive_max < 1 || opts.exhaustive_max > 6)
    throw std::invalid_argument("exhaustive_max must be in 1..6, got " + std::to_string(opts.exhaustive_max));
  const int full = opts.exhaustive_max;
  std::vector<SweepItem> items;
  for (int n = 2; n <= std::min(opts.n_max, full); ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) items.push_back({n, mask});
  }
  exhaustive = items.size();
  if (opts.n_max > full) {
    std::mt19937_64 rng(opts.seed);
    const int span = opts.n_max - full;
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const int n = full + 1 + static_cast<int>(i % static_cast<std::size_t>(span));
      const int pairs = n * (n - 1) / 2;
      items.push_back({n, rng() & ((std::uint64_t{1} << pairs) - 1)});
    }
  }
  sampled = items.size() - exhaustive;
  return items;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

std::string fmt(std::initializer_list<double> values) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (double v : values) {
    os << (first ? "" : ", ") << v;
    first = false;
  }
  return os.str();
}

bool same_spectrum(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.groups.size() != b.groups.size()) return false;
  for (std::size_t k = 0; k < a.groups.size(); ++k)
    if (a.groups[k].multiplicity != b.groups[k].multiplicity ||
        std::abs(a.groups[k].value - b.groups[k].value) > tol)
      return false;
  return true;
}

bool rows_on_sphere(const Matrix& p, double radius, double tol) {
  for (std::size_t i = 0; i < p.rows(); ++i)
    if (std::abs(norm2(p.row(i)) - radius) > tol) return false;
  return true;
}

void run_checks(const Graph& g, const SweepOptions& opts, GraphFindings& f) {
  const double ct = opts.check_tol;
  const Tolerances& tol = opts.tol;
  const int n = g.n();

  f.expect(Check::Graph6RoundTrip, parse_graph6(encode_graph6(g)) == g);
  const Graph gc = complement(g);
  f.expect(Check::ComplementInvolution,
           complement(gc) == g && g.edge_count() + gc.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2));

  const GraphAnalyzer an(g, tol);
  const GraphAnalyzer anc(gc, tol);
  const Matrix& a = an.adjacency();
  f.expect(Check::AdjacencyComplement,
           an.complement_adjacency() == Matrix::ones(n, n) - Matrix::identity(n) - a &&
               anc.adjacency() == an.complement_adjacency());

  const GraphClass& cls = an.graph_class();
  const GraphClass& ccls = anc.graph_class();
  auto dual_tag = [](ClassTag t) {
    switch (t) {
      case ClassTag::Complete: return ClassTag::Null;
      case ClassTag::Null: return ClassTag::Complete;
      case ClassTag::Cluster: return ClassTag::CompleteMultipartite;
      case ClassTag::CompleteMultipartite: return ClassTag::Cluster;
      default: return ClassTag::General;
    }
  };
  f.expect(Check::ClassifyDuality, cls.is_cluster == ccls.is_multipartite &&
                                       cls.is_multipartite == ccls.is_cluster && ccls.tag == dual_tag(cls.tag));

  const ProjectedSpectrum& ps = an.projected_spectrum();
  double tr = 0.0;
  for (const auto& grp : ps.spectrum.groups) tr += grp.value * static_cast<double>(grp.multiplicity);
  const double eae = 2.0 * static_cast<double>(g.edge_count());
  f.expect(Check::ProjectionTrace, std::abs(tr + eae / n) <= 1e-10 * std::max(1.0, eae),
           "trace " + fmt({tr, -eae / n}));

  const Vector lam = jacobi_eigen(a).values;
  const std::size_t last = lam.size() - 1;
  f.expect(Check::Interlacing, lam[0] >= ps.mu_max - kSpectralTol && ps.mu_max >= lam[1] - kSpectralTol &&
                                   lam[last - 1] >= ps.mu_min - kSpectralTol &&
                                   ps.mu_min >= lam[last] - kSpectralTol);

  if (g.regular_degree()) {
    const ProjectedSpectrum generic = projected_spectrum(g, an.v(), tol, false);
    f.expect(Check::RegularFastPath, same_spectrum(generic.spectrum, ps.spectrum, kSpectralTol));
  }
  if (n >= 4) {
    const Spectrum block = eigh(project_adjacency(a, build_v(n, VScheme::Block)), tol.eig);
    f.expect(Check::BasisIndependence, same_spectrum(block, ps.spectrum, kSpectralTol));
  }
  if (g.edge_count() > 0) f.expect(Check::MuMinBound, ps.mu_min <= -1.0 + kSpectralTol);

  if (an.degenerate()) return;

  const bool mu_min_is_minus_one = std::abs(ps.mu_min + 1.0) <= kSpectralTol;
  const bool mu_max_nonpositive = ps.mu_max <= kSpectralTol;
  f.expect(Check::ClusterSpectral, cls.is_cluster == mu_min_is_minus_one, "mu_min " + fmt({ps.mu_min}));
  f.expect(Check::MultipartiteSpectral,
           cls.is_multipartite == mu_max_nonpositive && cls.is_multipartite == is_edm(a, an.v(), tol).is_edm,
           "mu_max " + fmt({ps.mu_max}));
  f.expect(Check::NoOpenEnds, !(std::abs(ps.mu_max) <= kSpectralTol && mu_min_is_minus_one));

  const ProjectedSpectrum& psc = anc.projected_spectrum();
  f.expect(Check::ComplementMu, std::abs(psc.mu_min - (-1.0 - ps.mu_max)) <= kSpectralTol &&
                                    std::abs(psc.mu_max - (-1.0 - ps.mu_min)) <= kSpectralTol &&
                                    psc.m_min == ps.m_max && psc.m_max == ps.m_min);

  const DimResult de = an.dim_euclidean();
  const DimResult dec = anc.dim_euclidean();
  f.expect(Check::DimEDuality, de.dim == dec.dim);
  const SphericalDim ds = an.dim_spherical();
  const SphericalDim dsc = anc.dim_spherical();
  f.expect(Check::DimSDuality, ds.dim == dsc.dim);

  const auto beta_l = an.beta_l();
  const auto beta_u = an.beta_u();
  std::optional<bool> sph_u;
  if (beta_l) f.expect(Check::EndpointDuality, an.endpoint_sphericity(Side::Lower) == anc.endpoint_sphericity(Side::Upper));
  if (beta_u) {
    sph_u = an.endpoint_sphericity(Side::Upper);
    f.expect(Check::EndpointDuality, *sph_u == anc.endpoint_sphericity(Side::Lower));
  }

  const JSpherical js = an.j_spherical();
  f.expect(Check::DimChain, de.dim <= ds.dim && ds.dim <= js.dim);
  f.expect(Check::DimEUpper, de.dim + 2 <= static_cast<std::size_t>(n));
  const LowerBounds lb = lower_bounds(n);
  f.expect(Check::LowerBounds, double(de.dim) >= lb.euclidean - 1e-12 && double(ds.dim) >= lb.spherical - 1e-12);

  const DiscriminatingRoots roots = discriminating_roots(g);
  f.expect(Check::DiscriminatingRoots,
           roots.t1.has_value() == beta_l.has_value() && roots.t2.has_value() == beta_u.has_value() &&
               (!beta_l || std::abs(*roots.t1 - *beta_l) <= ct) && (!beta_u || std::abs(*roots.t2 - *beta_u) <= ct),
           "roots " + fmt({roots.t1.value_or(NAN), roots.t2.value_or(NAN), beta_l.value_or(NAN), beta_u.value_or(NAN)}));
  f.expect(Check::EinhornSchoenberg, dim_euclidean_from_roots(g, roots) == de.dim);

  const std::size_t n1 = static_cast<std::size_t>(n) - 1;
  std::vector<std::pair<double, std::size_t>> euclid;
  if (beta_l) euclid.emplace_back(*beta_l, n1 - ps.m_max);
  if (beta_u) euclid.emplace_back(*beta_u, n1 - ps.m_min);
  euclid.emplace_back(an.interior_beta(), n1);
  for (auto [beta, rank] : euclid) {
    const EuclideanRepresentation rep = an.euclidean_representation(beta);
    const VerificationReport vr = verify_two_distance(rep.config, g, 1.0, beta, ct);
    f.expect(Check::EuclideanConfigs, vr.pass && rep.rank == rank && rep.config.dim() == rank,
             "beta " + fmt({beta, vr.max_deviation}));
  }

  const SphericalRepresentation sr = an.spherical_representation();
  {
    const VerificationReport vr = verify_two_distance(sr.config, g, 1.0, sr.beta, ct);
    f.expect(Check::SphericalConfig, vr.pass && rows_on_sphere(sr.config.points, sr.radius, ct) &&
                                         sr.config.dim() == ds.dim && close(sr.radius, ds.radius, ct),
             "beta " + fmt({sr.beta, vr.max_deviation}));
  }
  {
    const VerificationReport vr = verify_two_distance(js.config, g, 2.0, js.beta, ct);
    f.expect(Check::JSphericalConfig, vr.pass && rows_on_sphere(js.config.points, 1.0, 1e-8) &&
                                          js.config.dim() == js.dim && (!beta_u || js.beta <= 2.0 * *beta_u + ct),
             "delta " + fmt({js.delta, vr.max_deviation}));
  }
  {
    const auto dual = spherical_info(sr.d * (1.0 / sr.beta), anc.v(), tol);
    f.expect(Check::ComplementRadius,
             dual.has_value() && close(dual->radius * dual->radius, sr.radius * sr.radius / sr.beta, ct));
  }
  if (const auto k = g.regular_degree()) {
    const double beta = an.interior_beta();
    const Matrix d = an.distance_matrix(beta);
    const double expected = ((1.0 - beta) * *k + beta * (n - 1)) / (2.0 * n);
    const auto reg = is_regular_edm(d, tol);
    const auto info = spherical_info(d, an.v(), tol);
    f.expect(Check::RegularRadius, reg && info && close(*reg * *reg, expected, ct) &&
                                       close(info->radius * info->radius, expected, ct));
  }
  if (sph_u && *sph_u) {
    const double closed = an.radius_squared_at_beta_u_closed_form();
    const auto info = spherical_info(an.distance_matrix(*beta_u), an.v(), tol);
    const double r5 = info ? info->radius * info->radius : NAN;
    const double r4 = info ? info->radius_via_center * info->radius_via_center : NAN;
    f.expect(Check::RadiusConsistency, info && close(closed, r5, ct) && close(r4, r5, ct),
             "rho^2 " + fmt({closed, r5, r4}));
  }
}

void merge(SweepSummary& sum, const GraphFindings& f, std::size_t index, const Graph& g) {
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    sum.checks[c].applied += f.checks[c].applied;
    sum.checks[c].violations += f.checks[c].violations;
  }
  if (f.first && (!sum.first || index < sum.first->index)) {
    sum.first = *f.first;
    sum.first->index = index;
    sum.first->graph6 = encode_graph6(g);
  }
}

void merge(SweepSummary& into, const SweepSummary& part) {
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    into.checks[c].applied += part.checks[c].applied;
    into.checks[c].violations += part.checks[c].violations;
  }
  if (part.first && (!into.first || part.first->index < into.first->index)) into.first = part.first;
}

}  // namespace

std::string_view check_name(Check c) { return kCheckNames[static_cast<std::size_t>(c)]; }

std::size_t SweepSummary::violations() const {
  std::size_t v = 0;
  for (const auto& t : checks) v += t.violations;
  return v;
}

bool SweepSummary::same_findings(const SweepSummary& o) const {
  return exhaustive_graphs == o.exhaustive_graphs && sampled_graphs == o.sampled_graphs && checks == o.checks &&
         first == o.first;
}

void GraphFindings::expect(Check c, bool ok, const std::string& detail) {
  auto& t = checks[static_cast<std::size_t>(c)];
  ++t.applied;
  if (ok) return;
  ++t.violations;
  if (!first) first = Counterexample{0, c, {}, detail};
}

GraphFindings check_graph(const Graph& g, const SweepOptions& opts) {
  GraphFindings f;
  try {
    run_checks(g, opts, f);
    f.expect(Check::InternalConsistency, true);
    f.expect(Check::Exception, true);
  } catch (const ConsistencyError& e) {
    f.expect(Check::InternalConsistency, false, e.what());
  } catch (const std::exception& e) {
    f.expect(Check::Exception, false, e.what());
  }
  return f;
}

SweepSummary invariant_sweep_serial(const SweepOptions& opts) {
  SweepSummary sum;
  sum.options = opts;
  const auto items = sweep_items(opts, sum.exhaustive_graphs, sum.sampled_graphs);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Graph g = graph_from_mask(items[i].n, items[i].mask);
    merge(sum, check_graph(g, opts), i, g);
  }
  sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sum;
}

SweepSummary invariant_sweep(const SweepOptions& opts) {
  SweepSummary sum;
  sum.options = opts;
  sum.parallel = true;
  sum.threads = omp_get_max_threads();
  const auto items = sweep_items(opts, sum.exhaustive_graphs, sum.sampled_graphs);
  const auto count = static_cast<std::ptrdiff_t>(items.size());
  const auto start = std::chrono::steady_clock::now();
#pragma omp parallel
  {
    SweepSummary local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto& item = items[static_cast<std::size_t>(i)];
      const Graph g = graph_from_mask(item.n, item.mask);
      merge(local, check_graph(g, opts), static_cast<std::size_t>(i), g);
    }
#pragma omp critical(twodist_sweep_merge)
    merge(sum, local);
  }
  sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sum;
}

}  // namespace twodist
