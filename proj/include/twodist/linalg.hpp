#pragma once

#include <cstddef>
#include <vector>

#include "twodist/matrix.hpp"
#include "twodist/tolerances.hpp"

namespace twodist {

// Eigenpairs of a symmetric matrix, eigenvalues in decreasing order,
// eigenvectors as the matching orthonormal columns.
struct EigenPairs {
  Vector values;
  Matrix vectors;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
// 1e-14 times the Frobenius norm of the input. Throws InfeasibleError on
// non-finite entries and std::invalid_argument on non-square input.
EigenPairs jacobi_eigen(const Matrix& m);

struct EigenGroup {
  double value;
  std::size_t multiplicity;
  Matrix basis;  // order x multiplicity, orthonormal columns
};

struct Spectrum {
  std::vector<EigenGroup> groups;  // strictly decreasing values
  double tol;                      // absolute clustering gap used

  std::size_t order() const;
  const EigenGroup& largest() const { return groups.front(); }
  const EigenGroup& smallest() const { return groups.back(); }
  // Σ value · basis · basisᵀ
  Matrix reconstruct() const;
};

// Eigendecomposition with eigenvalues clustered into groups: consecutive
// sorted eigenvalues closer than tol_rel * max(1, max|λ|) share a group, and
// each group's basis is re-orthonormalised by modified Gram–Schmidt.
Spectrum eigh(const Matrix& m, double tol_rel = Tolerances{}.eig);

struct PsdRank {
  bool is_psd;
  std::size_t rank;
};

// is_psd iff λ_min >= -tol·scale; rank counts λ > tol·scale, where
// scale = max(1, max|λ|).
PsdRank psd_rank(const Matrix& m, double tol = Tolerances{}.psd);
PsdRank psd_rank(const EigenPairs& eig, double tol = Tolerances{}.psd);

// Count of |λ| > tol·scale (rank of an indefinite symmetric matrix).
std::size_t symmetric_rank(const Matrix& m, double tol = Tolerances{}.psd);

// Spectral Moore–Penrose inverse; eigenvalues with |λ| <= tol·scale map to 0.
Matrix pinv(const Matrix& m, double tol = Tolerances{}.psd);

// w = pinv(d)·b. Throws InfeasibleError("b not in column space") unless
// ‖d·w − b‖ <= residual_tol · ‖b‖.
Vector solve_in_colspace(const Matrix& d, std::span<const double> b,
                         const Tolerances& tol = {});

// n x rank factor P with P·Pᵀ ≈ b, columns sqrt(λ_k)·q_k for the rank
// largest eigenvalues. Throws InfeasibleError when b is not PSD at tol.
Matrix gram_factor(const Matrix& b, std::size_t rank, double tol = Tolerances{}.psd);

// Modified Gram–Schmidt over the columns of m; columns whose remaining norm
// is below drop_tol are discarded.
Matrix orthonormalize(const Matrix& m, double drop_tol = 1e-10);

}  // namespace twodist
