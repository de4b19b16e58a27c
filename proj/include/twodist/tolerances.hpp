#pragma once

namespace twodist {

// Relative tolerances. Each is scaled by max(1, magnitude of the quantity
// being tested) at the point of use.
struct Tolerances {
  // Eigenvalue clustering (multiplicity counting).
  double eig = 1e-9;
  // PSD and rank decisions, shared by psd_rank and rank(D).
  double psd = 1e-9;
  // Residual tests: column-space solves, eigenvector equations, D·Z = 0.
  double residual = 1e-8;
};

}  // namespace twodist
