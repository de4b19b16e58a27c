#include <stdexcept>

#include "doctest.h"
#include "twodist/sweep.hpp"

using namespace twodist;

TEST_CASE("parallel sweep matches the serial reference") {
  SweepOptions opts;
  opts.n_max = 5;
  const SweepSummary serial = invariant_sweep_serial(opts);
  const SweepSummary parallel = invariant_sweep(opts);
  CHECK(serial.graphs_checked() == 2 + 8 + 64 + 1024);
  CHECK(serial.same_findings(parallel));
  CHECK(serial.violations() == 0);
  CHECK_FALSE(serial.first.has_value());
  CHECK(serial.tally(Check::DiscriminatingRoots).applied > 0);
  CHECK(serial.tally(Check::RadiusConsistency).applied > 0);
}

TEST_CASE("sampled sweep is reproducible from the seed") {
  SweepOptions sampled;
  sampled.n_max = 8;
  sampled.exhaustive_max = 3;
  sampled.samples = 40;
  const SweepSummary a = invariant_sweep(sampled), b = invariant_sweep_serial(sampled);
  CHECK(a.exhaustive_graphs == 2 + 8);
  CHECK(a.sampled_graphs == 40);
  CHECK(a.violations() == 0);
  SweepOptions reseeded = sampled;
  reseeded.seed += 1;
  CHECK(invariant_sweep(reseeded).graphs_checked() == a.graphs_checked());
  CHECK(a.same_findings(b));
}

TEST_CASE("sweep rejects orders above eight") {
  SweepOptions opts;
  opts.n_max = 9;
  CHECK_THROWS_AS(invariant_sweep(opts), std::invalid_argument);
  opts.n_max = 1;
  CHECK_THROWS_AS(invariant_sweep_serial(opts), std::invalid_argument);
  opts.n_max = 6;
  opts.exhaustive_max = 7;
  CHECK_THROWS_AS(invariant_sweep(opts), std::invalid_argument);
}

TEST_CASE("check_graph flags every applied check on a rich graph") {
  const GraphFindings f = check_graph(cycle_graph(5), SweepOptions{});
  for (std::size_t c = 0; c < kCheckCount; ++c) CHECK(f.checks[c].violations == 0);
  CHECK_FALSE(f.first.has_value());
  CHECK(check_name(Check::DimChain) == "dim_chain");
}
