#include "twodist/edm.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "twodist/errors.hpp"

namespace twodist {

namespace {

void require_hollow_square(const Matrix& d, const char* who) {
  if (!d.square()) throw std::invalid_argument(std::string(who) + ": matrix is not square");
  for (std::size_t i = 0; i < d.rows(); ++i)
    if (d(i, i) != 0.0) throw std::invalid_argument(std::string(who) + ": nonzero diagonal entry");
}

Vector ones(std::size_t n) { return Vector(n, 1.0); }

// Eigenvalues above this count towards the rank; those below -thr break PSD.
double rank_threshold(const Spectrum& spec, const Tolerances& tol) {
  double scale = 1.0;
  for (const auto& g : spec.groups) scale = std::max(scale, std::abs(g.value));
  return tol.psd * scale;
}

std::string not_edm_message(const EdmCheck& chk) {
  std::ostringstream os;
  os.precision(17);
  os << "not an EDM: projected Gram has eigenvalue " << chk.x_spectrum.smallest().value;
  return os.str();
}

}  // namespace

EdmCheck is_edm(const Matrix& d, const VBasis& v, const Tolerances& tol) {
  require_hollow_square(d, "is_edm");
  Spectrum spec = eigh(projected_gram(d, v), tol.eig);
  const double thr = rank_threshold(spec, tol);
  std::size_t rank = 0;
  for (const auto& g : spec.groups)
    if (g.value > thr) rank += g.multiplicity;
  const bool psd = spec.groups.empty() || spec.smallest().value >= -thr;
  return {psd, psd ? rank : 0, std::move(spec)};
}

EdmCheck is_edm(const Matrix& d, const Tolerances& tol) {
  return is_edm(d, build_v(static_cast<int>(d.rows())), tol);
}

Matrix gram_from_edm(const Matrix& d, std::span<const double> s) {
  const std::size_t n = d.rows();
  if (s.size() != n) throw std::invalid_argument("gram_from_edm: weight length mismatch");
  // (I - e sᵀ) D (I - s eᵀ) = D - e (sᵀD) - (D s) eᵀ + (sᵀ D s) E
  const Vector ds = d * s;
  const double sds = dot(s, ds);
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = -0.5 * (d(i, j) - ds[j] - ds[i] + sds);
  return symmetrized(b);
}

Configuration recover_configuration(const Matrix& d, Centering centering, const Tolerances& tol) {
  const auto v = build_v(static_cast<int>(d.rows()));
  const EdmCheck chk = is_edm(d, v, tol);
  if (!chk.is_edm) throw InfeasibleError(not_edm_message(chk));
  const std::size_t n = d.rows();

  if (centering == Centering::Centroid) {
    const Vector s(n, 1.0 / static_cast<double>(n));
    return {gram_factor(gram_from_edm(d, s), chk.embedding_dim, tol.psd), Centering::Centroid};
  }

  const auto info = spherical_info(d, v, tol);
  if (!info) throw InfeasibleError("circumcenter requested for a non-spherical EDM");
  Matrix b;
  if (std::abs(2.0 * info->ew - 1.0) <= tol.residual) {
    b = Matrix::ones(n, n) - d * 0.5;
  } else {
    Vector s = info->w;
    for (double& x : s) x /= info->ew;
    b = gram_from_edm(d, s);
  }
  return {gram_factor(b, chk.embedding_dim, tol.psd), Centering::Circumcenter};
}

Matrix gale_matrix(const Matrix& d, const VBasis& v, const Tolerances& tol) {
  const EdmCheck chk = is_edm(d, v, tol);
  if (!chk.is_edm) throw InfeasibleError(not_edm_message(chk));
  const std::size_t n = d.rows();
  if (chk.embedding_dim + 1 >= n) throw InfeasibleError("gale_matrix: full embedding dimension");
  const double thr = rank_threshold(chk.x_spectrum, tol);
  std::vector<const EigenGroup*> null_groups;
  std::size_t null_dim = 0;
  for (const auto& g : chk.x_spectrum.groups)
    if (g.value <= thr) {
      null_groups.push_back(&g);
      null_dim += g.multiplicity;
    }
  Matrix basis(n - 1, null_dim);
  std::size_t col = 0;
  for (const EigenGroup* g : null_groups)
    for (std::size_t k = 0; k < g->multiplicity; ++k, ++col)
      for (std::size_t i = 0; i < n - 1; ++i) basis(i, col) = g->basis(i, k);
  if (null_dim != n - 1 - chk.embedding_dim)
    throw ConsistencyError("gale_matrix: null space dimension does not match embedding dimension");
  return v.columns * basis;
}

Matrix gale_matrix(const Matrix& d, const Tolerances& tol) {
  return gale_matrix(d, build_v(static_cast<int>(d.rows())), tol);
}

std::optional<SphereInfo> spherical_info(const Matrix& d, const VBasis& v, const Tolerances& tol) {
  const EdmCheck chk = is_edm(d, v, tol);
  if (!chk.is_edm) throw InfeasibleError(not_edm_message(chk));
  if (max_abs(d) == 0.0) throw InfeasibleError("spherical_info: zero EDM has coincident points");
  const std::size_t n = d.rows();
  const std::size_t r = chk.embedding_dim;
  const Vector e = ones(n);

  Vector w;
  try {
    w = solve_in_colspace(d, e, tol);
  } catch (const InfeasibleError&) {
    throw ConsistencyError("spherical_info: e is not in the column space of a nonzero EDM");
  }
  const double ew = sum(w);
  const bool positive_ew = ew > tol.residual * std::max(1.0, max_abs(w));
  const bool rank_test = symmetric_rank(d, tol.psd) == r + 1;

  bool spherical = true;
  if (r + 1 >= n) {
    if (!positive_ew || !rank_test)
      throw ConsistencyError("spherical_info: full-dimensional EDM failed a sphericity test");
  } else {
    const Matrix z = gale_matrix(d, v, tol);
    const bool gale_test = max_abs(d * z) <= tol.residual * std::max(1.0, max_abs(d)) * std::sqrt(double(n));
    if (gale_test != rank_test || rank_test != positive_ew) {
      std::ostringstream os;
      os << "spherical_info: sphericity tests disagree (D·Z=0: " << gale_test
         << ", rank(D)=r+1: " << rank_test << ", eᵀw>0: " << positive_ew << ")";
      throw ConsistencyError(os.str());
    }
    spherical = rank_test;
  }
  if (!spherical) return std::nullopt;

  // Centre from the centroid-centred configuration: P a = ½(I - E/n) diag(PPᵀ).
  const Vector centroid_weights(n, 1.0 / static_cast<double>(n));
  const Matrix p = gram_factor(gram_from_edm(d, centroid_weights), r, tol.psd);
  Vector rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < r; ++k) s += p(i, k) * p(i, k);
    rhs[i] = s;
  }
  const double mean = sum(rhs) / static_cast<double>(n);
  for (double& x : rhs) x = 0.5 * (x - mean);
  Vector center(r, 0.0);
  if (r > 0) {
    const Matrix ptp_inv = pinv(transpose_times(p, p), tol.psd);
    Vector ptr(r, 0.0);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < n; ++i) ptr[k] += p(i, k) * rhs[i];
    center = ptp_inv * std::span<const double>(ptr);
  }
  const double ede = sum(d * std::span<const double>(e));
  const double radius_via_center = std::sqrt(dot(center, center) + ede / (2.0 * n * n));

  return SphereInfo{std::sqrt(1.0 / (2.0 * ew)), radius_via_center, std::move(center), std::move(w), ew};
}

std::optional<SphereInfo> spherical_info(const Matrix& d, const Tolerances& tol) {
  return spherical_info(d, build_v(static_cast<int>(d.rows())), tol);
}

std::optional<double> is_regular_edm(const Matrix& d, const Tolerances& tol) {
  const std::size_t n = d.rows();
  const Vector de = d * std::span<const double>(ones(n));
  const double mean = sum(de) / static_cast<double>(n);
  for (double x : de)
    if (std::abs(x - mean) > tol.residual * std::max(1.0, max_abs(de))) return std::nullopt;
  return std::sqrt(sum(de) / (2.0 * n * n));
}

Matrix squared_distances(const Matrix& p) {
  const std::size_t n = p.rows();
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < p.cols(); ++k) {
        const double diff = p(i, k) - p(j, k);
        s += diff * diff;
      }
      d(i, j) = d(j, i) = s;
    }
  return d;
}

}  // namespace twodist
