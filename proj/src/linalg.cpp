#include "twodist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "twodist/errors.hpp"

namespace twodist {

namespace {

constexpr double kJacobiRelTol = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double spectral_scale(std::span<const double> values) { return std::max(1.0, max_abs(values)); }

}  // namespace

EigenPairs jacobi_eigen(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("jacobi_eigen: matrix is not square");
  if (!all_finite(m)) throw InfeasibleError("jacobi_eigen: non-finite entry");
  const std::size_t n = m.rows();
  Matrix a = symmetrized(m);
  Matrix q = Matrix::identity(n);

  const double stop = kJacobiRelTol * frobenius(a);
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apr = a(p, r);
        if (apr == 0.0) continue;
        const double tau = (a(r, r) - a(p, p)) / (2.0 * apr);
        double t;
        if (std::abs(tau) > 1e150) {
          t = 0.5 / tau;
        } else {
          t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akr = a(k, r);
          a(k, p) = c * akp - s * akr;
          a(k, r) = s * akp + c * akr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), ark = a(r, k);
          a(p, k) = c * apk - s * ark;
          a(r, k) = s * apk + c * ark;
        }
        a(p, r) = a(r, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double qkp = q(k, p), qkr = q(k, r);
          q(k, p) = c * qkp - s * qkr;
          q(k, r) = s * qkp + c * qkr;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  EigenPairs out{Vector(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = q(i, order[k]);
  }
  return out;
}

std::size_t Spectrum::order() const {
  std::size_t s = 0;
  for (const auto& g : groups) s += g.multiplicity;
  return s;
}

Matrix Spectrum::reconstruct() const {
  const std::size_t n = order();
  Matrix out(n, n);
  for (const auto& g : groups)
    for (std::size_t k = 0; k < g.multiplicity; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) += g.value * g.basis(i, k) * g.basis(j, k);
  return out;
}

Matrix orthonormalize(const Matrix& m, double drop_tol) {
  std::vector<Vector> kept;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Vector v = m.col(j);
    for (const auto& u : kept) {
      const double proj = dot(u, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * u[i];
    }
    const double nv = norm2(v);
    if (nv <= drop_tol) continue;
    for (double& x : v) x /= nv;
    kept.push_back(std::move(v));
  }
  Matrix out(m.rows(), kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) out.set_col(j, kept[j]);
  return out;
}

Spectrum eigh(const Matrix& m, double tol_rel) {
  const EigenPairs ep = jacobi_eigen(m);
  const std::size_t n = ep.values.size();
  Spectrum spec{{}, tol_rel * spectral_scale(ep.values)};
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && ep.values[end - 1] - ep.values[end] <= spec.tol) ++end;
    const std::size_t mult = end - start;
    double mean = 0.0;
    std::vector<std::size_t> cols(mult);
    for (std::size_t k = 0; k < mult; ++k) {
      mean += ep.values[start + k];
      cols[k] = start + k;
    }
    mean /= static_cast<double>(mult);
    Matrix basis = select_cols(ep.vectors, cols);
    if (mult > 1) {
      Matrix ortho = orthonormalize(basis, 0.0);
      if (ortho.cols() == mult) basis = std::move(ortho);
    }
    spec.groups.push_back({mean, mult, std::move(basis)});
    start = end;
  }
  return spec;
}

PsdRank psd_rank(const EigenPairs& eig, double tol) {
  if (eig.values.empty()) return {true, 0};
  const double thr = tol * spectral_scale(eig.values);
  const bool psd = eig.values.back() >= -thr;
  const auto rank = static_cast<std::size_t>(
      std::count_if(eig.values.begin(), eig.values.end(), [&](double v) { return v > thr; }));
  return {psd, rank};
}

PsdRank psd_rank(const Matrix& m, double tol) { return psd_rank(jacobi_eigen(m), tol); }

std::size_t symmetric_rank(const Matrix& m, double tol) {
  const EigenPairs ep = jacobi_eigen(m);
  const double thr = tol * spectral_scale(ep.values);
  return static_cast<std::size_t>(
      std::count_if(ep.values.begin(), ep.values.end(), [&](double v) { return std::abs(v) > thr; }));
}

Matrix pinv(const Matrix& m, double tol) {
  const EigenPairs ep = jacobi_eigen(m);
  const std::size_t n = ep.values.size();
  const double thr = tol * spectral_scale(ep.values);
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(ep.values[k]) <= thr) continue;
    const double inv = 1.0 / ep.values[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += inv * ep.vectors(i, k) * ep.vectors(j, k);
  }
  return out;
}

Vector solve_in_colspace(const Matrix& d, std::span<const double> b, const Tolerances& tol) {
  if (!d.square() || d.rows() != b.size()) throw std::invalid_argument("solve_in_colspace: shape mismatch");
  Vector w = pinv(d, tol.psd) * b;
  Vector r = d * std::span<const double>(w);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  if (norm2(r) > tol.residual * norm2(b)) throw InfeasibleError("b not in column space");
  return w;
}

Matrix gram_factor(const Matrix& b, std::size_t rank, double tol) {
  const EigenPairs ep = jacobi_eigen(b);
  if (!psd_rank(ep, tol).is_psd)
    throw InfeasibleError("gram_factor: matrix is not PSD (min eigenvalue " +
                          std::to_string(ep.values.back()) + ")");
  if (rank > b.rows()) throw std::invalid_argument("gram_factor: rank exceeds order");
  Matrix p(b.rows(), rank);
  for (std::size_t k = 0; k < rank; ++k) {
    const double s = std::sqrt(std::max(ep.values[k], 0.0));
    for (std::size_t i = 0; i < b.rows(); ++i) p(i, k) = s * ep.vectors(i, k);
  }
  return p;
}

}  // namespace twodist
