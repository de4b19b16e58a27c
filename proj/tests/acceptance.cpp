// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twodist/oracle.hpp"
#include "twodist/representations.hpp"
#include "twodist/sweep.hpp"

using namespace twodist;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failed expectations for one criterion.
struct Gate {
  std::vector<std::string> failures;

  void near(const std::string& what, double got, double want, double tol) {
    if (!(std::abs(got - want) <= tol)) {
      std::ostringstream os;
      os.precision(17);
      os << what << ": got " << got << ", want " << want;
      failures.push_back(os.str());
    }
  }
  void equal(const std::string& what, long long got, long long want) {
    if (got != want) failures.push_back(what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
  }
  void truth(const std::string& what, bool ok) {
    if (!ok) failures.push_back(what);
  }
};

int report(int id, const std::string& title, const std::function<void(Gate&)>& body) {
  Gate gate;
  const auto t0 = Clock::now();
  try {
    body(gate);
  } catch (const std::exception& e) {
    gate.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(t0);
  std::printf("[%s] %d. %s (%.3f s)\n", gate.failures.empty() ? "PASS" : "FAIL", id, title.c_str(), secs);
  for (const auto& f : gate.failures) std::printf("       %s\n", f.c_str());
  std::fflush(stdout);
  return gate.failures.empty() ? 0 : 1;
}

bool proportional(const Vector& a, const Vector& b, double tol) {
  return std::abs(std::abs(dot(a, b)) - norm2(a) * norm2(b)) <= tol * norm2(a) * norm2(b);
}

std::string violations_of(const SweepSummary& s, std::initializer_list<Check> checks) {
  std::string out;
  for (Check c : checks) {
    const CheckTally& t = s.tally(c);
    if (t.violations || !t.applied)
      out += std::string(check_name(c)) + " " + std::to_string(t.violations) + "/" + std::to_string(t.applied) + "; ";
  }
  return out;
}

}  // namespace

int main() {
  constexpr double kTol = 1e-9;
  const double r5 = std::sqrt(5.0);
  int failed = 0;

  failed += report(1, "five-cycle spectrum, endpoints, radii, dim_E = dim_S = 2, dim_J = 4", [&](Gate& g) {
    const auto t0 = Clock::now();
    const GraphAnalyzer an(cycle_graph(5));
    const ReprReport r = an.report();
    const JSpherical js = an.j_spherical();
    const double secs = seconds_since(t0);
    g.near("mu_max", *r.mu_max, (r5 - 1) / 2, kTol);
    g.equal("m(mu_max)", *r.m_max, 2);
    g.near("mu_min", *r.mu_min, -(r5 + 1) / 2, kTol);
    g.equal("m(mu_min)", *r.m_min, 2);
    g.equal("dim_E", *r.dim_e, 2);
    g.near("beta_l", *r.beta_l, (3 - r5) / 2, kTol);
    g.near("beta_u", *r.beta_u, (3 + r5) / 2, kTol);
    g.near("beta_l * beta_u", *r.beta_l * *r.beta_u, 1.0, kTol);
    g.equal("dim_S", *r.dim_s, 2);
    g.near("rho_l^2", *r.rho_l * *r.rho_l, 2 / (5 + r5), kTol);
    g.near("rho_u^2", *r.rho_u * *r.rho_u, 2 / (5 - r5), kTol);
    g.equal("dim_J", js.dim, 4);
    g.near("J beta", js.beta, 3.0, kTol);
    g.truth("runtime " + std::to_string(secs) + " s >= 0.1 s", secs < 0.1);
  });

  failed += report(2, "bow tie: endpoints, Gale vectors, sphericity only at beta_l, dim_S = 3, dim_J = 4", [&](Gate& g) {
    const GraphAnalyzer an(bow_tie_graph());
    const auto& ps = an.projected_spectrum();
    g.near("mu_min", ps.mu_min, -1.4, kTol);
    g.near("mu_max", ps.mu_max, 1.0, kTol);
    g.near("beta_l", *an.beta_l(), 0.5, kTol);
    g.near("beta_u", *an.beta_u(), 3.5, kTol);
    const Matrix zl = an.v().columns * ps.u_l, zu = an.v().columns * ps.u_u;
    g.truth("Z_l proportional to (0,1,-1,1,-1)", zl.cols() == 1 && proportional(zl.col(0), {0, 1, -1, 1, -1}, kTol));
    g.truth("Z_u proportional to (-4,1,1,1,1)", zu.cols() == 1 && proportional(zu.col(0), {-4, 1, 1, 1, 1}, kTol));
    g.truth("D_l spherical", an.endpoint_sphericity(Side::Lower));
    g.truth("D_u not spherical", !an.endpoint_sphericity(Side::Upper));
    const SphericalDim ds = an.dim_spherical();
    g.near("rho_l", ds.radius, 1 / std::sqrt(3.0), kTol);
    g.equal("dim_S", ds.dim, 3);
    const JSpherical js = an.j_spherical();
    g.near("delta", js.delta, 0.5, kTol);
    g.equal("dim_J", js.dim, 4);
  });

  failed += report(3, "cluster family at beta = 5/2 and complements of C_4..C_10 at beta = 3", [&](Gate& g) {
    const std::vector<std::vector<int>> families{{2, 2, 2}, {4, 4}, {2, 8}, {1, 16}};
    for (const auto& sizes : families) {
      const JSpherical js = GraphAnalyzer(cluster_graph(sizes)).j_spherical();
      const std::string name = "cluster " + std::to_string(sizes[0]) + "," + std::to_string(sizes[1]);
      g.near(name + " lambda1", js.lambda1, 4.0, kTol);
      g.near(name + " beta", js.beta, 2.5, kTol);
    }
    for (int n = 4; n <= 10; ++n)
      g.near("complement of C_" + std::to_string(n) + " beta",
             GraphAnalyzer(complement(cycle_graph(n))).j_spherical().beta, 3.0, kTol);
  });

  failed += report(4, "complete multipartite: dim_J = n - k, lambda1 = n1 - 1 with multiplicity k (20 partitions)",
                   [&](Gate& g) {
                     std::mt19937_64 rng(31);
                     for (int trial = 0; trial < 20; ++trial) {
                       std::uniform_int_distribution<int> parts(2, 5), size(1, 5);
                       std::vector<int> sizes(parts(rng));
                       for (int& s : sizes) s = size(rng);
                       sizes[0] = std::max(sizes[0], 2);
                       std::sort(sizes.rbegin(), sizes.rend());
                       int n = 0;
                       for (int s : sizes) n += s;
                       const long long k = std::count(sizes.begin(), sizes.end(), sizes[0]);
                       const JSpherical js = GraphAnalyzer(complete_multipartite_graph(sizes)).j_spherical();
                       const std::string tag = "partition #" + std::to_string(trial);
                       g.equal(tag + " dim_J", js.dim, n - k);
                       g.equal(tag + " m(lambda1)", js.m_lambda1, k);
                       g.equal(tag + " lambda1", std::llround(js.lambda1), sizes[0] - 1);
                       g.near(tag + " lambda1 exact", js.lambda1, sizes[0] - 1, kTol);
                     }
                   });

  SweepOptions opts;
  opts.n_max = 8;
  opts.samples = 500;
  SweepSummary sweep;
  bool swept = false;
  failed += report(5, "discriminating-polynomial roots match (beta_l, beta_u) on every graph up to 6 nodes", [&](Gate& g) {
    const auto t0 = Clock::now();
    sweep = invariant_sweep(opts);
    swept = true;
    const double sweep_secs = seconds_since(t0);
    std::printf("       sweep: %zu graphs (%zu exhaustive, %zu sampled) in %.1f s on %d thread(s)\n",
                sweep.graphs_checked(), sweep.exhaustive_graphs, sweep.sampled_graphs, sweep_secs, sweep.threads);
    for (Check c : {Check::DiscriminatingRoots, Check::DimChain, Check::EuclideanConfigs, Check::SphericalConfig,
                    Check::JSphericalConfig, Check::RadiusConsistency})
      std::printf("       %-22s applied %zu\n", std::string(check_name(c)).c_str(), sweep.tally(c).applied);
    if (sweep.first)
      std::printf("       first counterexample: %s %s %s\n", std::string(check_name(sweep.first->check)).c_str(),
                  sweep.first->graph6.c_str(), sweep.first->detail.c_str());
    // 2..6 nodes: 33866 labelled graphs, two degenerate per order.
    const std::string v = violations_of(sweep, {Check::DiscriminatingRoots, Check::EinhornSchoenberg});
    g.truth(v, v.empty());
    g.truth("root check applied to every non-degenerate graph",
            sweep.tally(Check::DiscriminatingRoots).applied >= 33866 - 10);
    g.truth("sweep took " + std::to_string(sweep_secs) + " s >= 120 s", sweep_secs < 120.0);
  });

  failed += report(6, "property suite on the exhaustive sweep plus 500 samples at n = 7, 8", [&](Gate& g) {
    g.truth("sweep did not run", swept);
    const std::string v = violations_of(
        sweep, {Check::ComplementMu, Check::DimEDuality, Check::DimSDuality, Check::EndpointDuality, Check::DimChain,
                Check::DimEUpper, Check::LowerBounds, Check::ClusterSpectral, Check::MultipartiteSpectral,
                Check::NoOpenEnds, Check::InternalConsistency, Check::Exception});
    g.truth(v, v.empty());
    g.equal("sampled graphs", sweep.sampled_graphs, 500);
  });

  failed += report(7, "every emitted configuration verifies at 1e-7, J-spherical rows unit at 1e-8", [&](Gate& g) {
    g.truth("sweep did not run", swept);
    const std::string v = violations_of(sweep, {Check::EuclideanConfigs, Check::SphericalConfig, Check::JSphericalConfig});
    g.truth(v, v.empty());
  });

  failed += report(8, "closed-form radius at beta_u matches 1/(2 e'w) and the center-based radius", [&](Gate& g) {
    g.truth("sweep did not run", swept);
    const std::string v = violations_of(sweep, {Check::RadiusConsistency});
    g.truth(v, v.empty());
  });

  std::printf("%s: %d of 8 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
