#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "twodist/errors.hpp"
#include "twodist/oracle.hpp"
#include "twodist/representations.hpp"

using namespace twodist;

namespace {

const double kSqrt5 = std::sqrt(5.0);

bool proportional(const Vector& a, const Vector& b, double tol) {
  // |aᵀb| = ‖a‖‖b‖ up to tol.
  return std::abs(std::abs(dot(a, b)) - norm2(a) * norm2(b)) <= tol * norm2(a) * norm2(b);
}

}  // namespace

TEST_CASE("five-cycle") {
  const GraphAnalyzer an(cycle_graph(5));
  const auto& ps = an.projected_spectrum();
  CHECK(ps.mu_max == doctest::Approx((kSqrt5 - 1) / 2).epsilon(1e-12));
  CHECK(ps.mu_min == doctest::Approx(-(kSqrt5 + 1) / 2).epsilon(1e-12));
  CHECK(ps.m_max == 2);
  CHECK(ps.m_min == 2);

  const double bl = *an.beta_l(), bu = *an.beta_u();
  CHECK(bl == doctest::Approx((3 - kSqrt5) / 2).epsilon(1e-12));
  CHECK(bu == doctest::Approx((3 + kSqrt5) / 2).epsilon(1e-12));
  CHECK(bl * bu == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(an.dim_euclidean().dim == 2);
  CHECK(an.endpoint_sphericity(Side::Lower));
  CHECK(an.endpoint_sphericity(Side::Upper));
  const SphericalDim ds = an.dim_spherical();
  CHECK(ds.dim == 2);

  const ReprReport r = an.report();
  CHECK(*r.rho_l * *r.rho_l == doctest::Approx(2 / (5 + kSqrt5)).epsilon(1e-12));
  CHECK(*r.rho_u * *r.rho_u == doctest::Approx(2 / (5 - kSqrt5)).epsilon(1e-12));
  CHECK(an.radius_squared_at_beta_u_closed_form() == doctest::Approx(2 / (5 - kSqrt5)).epsilon(1e-12));

  const JSpherical js = an.j_spherical();
  CHECK(js.dim == 4);
  CHECK(js.beta == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("bow tie") {
  const GraphAnalyzer an(bow_tie_graph());
  const auto& ps = an.projected_spectrum();
  CHECK(ps.mu_min == doctest::Approx(-1.4).epsilon(1e-12));
  CHECK(ps.mu_max == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ps.m_min == 1);
  CHECK(ps.m_max == 1);
  CHECK(*an.beta_l() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(*an.beta_u() == doctest::Approx(3.5).epsilon(1e-12));

  const VBasis& v = an.v();
  const Matrix zl = v.columns * ps.u_l;
  const Matrix zu = v.columns * ps.u_u;
  CHECK(proportional(zl.col(0), Vector{0, 1, -1, 1, -1}, 1e-12));
  CHECK(proportional(zu.col(0), Vector{-4, 1, 1, 1, 1}, 1e-12));

  CHECK(an.endpoint_sphericity(Side::Lower));
  CHECK_FALSE(an.endpoint_sphericity(Side::Upper));
  const SphericalDim ds = an.dim_spherical();
  CHECK(ds.dim == 3);
  CHECK(ds.radius == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(an.radius_squared_at_beta_u_closed_form(), InfeasibleError);

  const JSpherical js = an.j_spherical();
  CHECK(js.delta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(js.dim == 4);
}

TEST_CASE("both V schemes give the same answers") {
  for (const Graph& g : {cycle_graph(7), bow_tie_graph(), complement(cycle_graph(6))}) {
    const GraphAnalyzer dense(g, {}, VScheme::Dense), block(g, {}, VScheme::Block);
    CHECK(dense.report().dim_e == block.report().dim_e);
    CHECK(*dense.beta_l() == doctest::Approx(*block.beta_l()).epsilon(1e-12));
    CHECK(*dense.beta_u() == doctest::Approx(*block.beta_u()).epsilon(1e-12));
    CHECK(dense.dim_spherical().dim == block.dim_spherical().dim);
  }
}

TEST_CASE("cluster family shares the second distance") {
  const std::vector<std::vector<int>> families{{2, 2, 2}, {4, 4}, {2, 8}, {1, 16}};
  for (const auto& sizes : families) {
    const Graph g = cluster_graph(sizes);
    CHECK(complement_lambda1(g) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(GraphAnalyzer(g).j_spherical().beta == doctest::Approx(2.5).epsilon(1e-12));
  }
  CHECK(same_second_distance(cluster_graph(std::vector<int>{2, 2, 2}), cluster_graph(std::vector<int>{1, 16})));
  for (int n = 4; n <= 10; ++n)
    CHECK(GraphAnalyzer(complement(cycle_graph(n))).j_spherical().beta == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_FALSE(same_second_distance(cycle_graph(5), cluster_graph(std::vector<int>{4, 4})));
}

TEST_CASE("cluster and multipartite endpoints") {
  const GraphAnalyzer cl(cluster_graph(std::vector<int>{3, 2}));
  CHECK(cl.projected_spectrum().mu_min == doctest::Approx(-1.0));
  CHECK(cl.beta_l().has_value());
  CHECK_FALSE(cl.beta_u().has_value());
  const BetaIntervals fs = cl.beta_feasible_set();
  CHECK(fs.contains(*cl.beta_l()));
  CHECK(fs.contains(100.0));
  CHECK_FALSE(fs.contains(1.0));

  const GraphAnalyzer mp(complete_multipartite_graph(std::vector<int>{3, 2}));
  CHECK(mp.projected_spectrum().mu_max <= 1e-12);
  CHECK_FALSE(mp.beta_l().has_value());
  CHECK(mp.beta_u().has_value());
  CHECK(mp.beta_feasible_set().contains(1e-3));
  CHECK_FALSE(mp.beta_feasible_set().contains(0.0));
  CHECK(mp.interior_beta() == doctest::Approx(0.5));
}

TEST_CASE("complete multipartite J-dimension over random partitions") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> parts(2, 5), size(1, 5);
    std::vector<int> sizes(parts(rng));
    for (int& s : sizes) s = size(rng);
    sizes[0] = std::max(sizes[0], 2);
    std::sort(sizes.rbegin(), sizes.rend());
    const int n = [&] { int t = 0; for (int s : sizes) t += s; return t; }();
    const int k = static_cast<int>(std::count(sizes.begin(), sizes.end(), sizes[0]));
    const JSpherical js = GraphAnalyzer(complete_multipartite_graph(sizes)).j_spherical();
    CHECK(static_cast<int>(js.dim) == n - k);
    CHECK(static_cast<int>(js.m_lambda1) == k);
    CHECK(std::lround(js.lambda1) == sizes[0] - 1);
    CHECK(js.lambda1 == doctest::Approx(sizes[0] - 1).epsilon(1e-12));
  }
}

TEST_CASE("degenerate graphs") {
  const GraphAnalyzer k4(complete_graph(4));
  CHECK(k4.degenerate());
  CHECK_THROWS_AS(k4.beta_l(), DegenerateGraphError);
  CHECK_THROWS_AS(k4.dim_euclidean(), DegenerateGraphError);
  CHECK_THROWS_AS(k4.j_spherical(), DegenerateGraphError);
  const ReprReport r = GraphAnalyzer(null_graph(3)).report();
  CHECK(r.degenerate);
  CHECK_FALSE(r.dim_e.has_value());
  CHECK_THROWS_AS(GraphAnalyzer(null_graph(1)).v(), std::invalid_argument);
}

TEST_CASE("euclidean representations across the feasible set") {
  const GraphAnalyzer an(cycle_graph(6));
  for (double beta : {*an.beta_l(), an.interior_beta(), 1.7, *an.beta_u()}) {
    const EuclideanRepresentation rep = an.euclidean_representation(beta);
    CHECK(rep.config.dim() == rep.rank);
    CHECK(verify_two_distance(rep.config, an.graph(), 1.0, beta, 1e-9).pass);
  }
  CHECK(an.euclidean_representation(*an.beta_l()).rank == an.dim_euclidean().dim);
  CHECK(an.euclidean_representation(0.9).rank == 5);
  CHECK_THROWS_AS(an.euclidean_representation(1.0), InfeasibleError);
  CHECK_THROWS_AS(an.euclidean_representation(0.0), InfeasibleError);
  CHECK_THROWS_AS(an.euclidean_representation(0.5 * *an.beta_l()), InfeasibleError);
  CHECK_THROWS_AS(an.euclidean_representation(2.0 * *an.beta_u()), InfeasibleError);
}

TEST_CASE("spherical and J-spherical configurations") {
  for (const Graph& g : {cycle_graph(5), bow_tie_graph(), cluster_graph(std::vector<int>{2, 3})}) {
    const GraphAnalyzer an(g);
    const SphericalRepresentation s = an.spherical_representation();
    CHECK(verify_two_distance(s.config, g, 1.0, s.beta, 1e-9).pass);
    for (std::size_t i = 0; i < s.config.size(); ++i)
      CHECK(norm2(s.config.points.row(i)) == doctest::Approx(s.radius).epsilon(1e-9));

    const JSpherical js = an.j_spherical();
    CHECK(js.config.dim() == js.dim);
    CHECK(verify_two_distance(js.config, g, 2.0, js.beta, 1e-9).pass);
    for (std::size_t i = 0; i < js.config.size(); ++i)
      CHECK(norm2(js.config.points.row(i)) == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK_THROWS_AS(GraphAnalyzer(bow_tie_graph()).spherical_representation(Side::Upper), InfeasibleError);
}

TEST_CASE("complement duality for regular graphs") {
  // Ā's representation at β is the graph's at 1/β after rescaling.
  const Graph g = cycle_graph(7);
  const GraphAnalyzer an(g), co(complement(g));
  CHECK(*an.beta_l() * *co.beta_u() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*an.beta_u() * *co.beta_l() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(an.dim_euclidean().dim == co.dim_euclidean().dim);
  const ReprReport r = an.report();
  const double k = 2, n = 7, beta = *an.beta_l();
  CHECK(*r.rho_l * *r.rho_l == doctest::Approx(((1 - beta) * k + beta * (n - 1)) / (2 * n)).epsilon(1e-12));
}

TEST_CASE("lower bounds") {
  const LowerBounds lb = lower_bounds(5);
  CHECK(lb.euclidean == doctest::Approx(0.5 * (std::sqrt(41.0) - 3)));
  CHECK(lb.spherical == doctest::Approx(2.0));
}
