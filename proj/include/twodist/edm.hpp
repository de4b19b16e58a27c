#pragma once

#include <optional>

#include "twodist/centering.hpp"
#include "twodist/linalg.hpp"
#include "twodist/matrix.hpp"
#include "twodist/tolerances.hpp"

namespace twodist {

struct EdmCheck {
  bool is_edm;
  std::size_t embedding_dim;  // psd rank of the projected Gram when is_edm
  Spectrum x_spectrum;        // spectrum of X = -½VᵀDV
};

enum class Centering { Centroid, Circumcenter };

// n x r coordinates realising an EDM.
struct Configuration {
  Matrix points;
  Centering centering = Centering::Centroid;

  std::size_t size() const { return points.rows(); }
  std::size_t dim() const { return points.cols(); }
};

struct SphereInfo {
  double radius;            // (1 / (2 eᵀw))^{1/2}
  double radius_via_center; // (aᵀa + eᵀDe / 2n²)^{1/2}
  Vector center;            // a, relative to the centroid-centred configuration
  Vector w;                 // D w = e
  double ew;                // eᵀw
};

// All functions below take an explicit V so callers can share one basis per
// graph; the overloads without it build the dense basis.

EdmCheck is_edm(const Matrix& d, const VBasis& v, const Tolerances& tol = {});
EdmCheck is_edm(const Matrix& d, const Tolerances& tol = {});

// Gram matrix B = -½(I - e sᵀ) D (I - s eᵀ) for a weight vector with eᵀs = 1.
Matrix gram_from_edm(const Matrix& d, std::span<const double> s);

// Centroid: s = e/n. Circumcenter: origin at the sphere centre, using
// B = E - D/2 when the radius is 1 and s = w / eᵀw otherwise.
// Throws InfeasibleError if d is not an EDM, or not spherical for Circumcenter.
Configuration recover_configuration(const Matrix& d, Centering centering, const Tolerances& tol = {});

// Gale matrix V·U with U an orthonormal null-space basis of the projected
// Gram. Throws InfeasibleError if d is not an EDM or has full embedding
// dimension n-1.
Matrix gale_matrix(const Matrix& d, const VBasis& v, const Tolerances& tol = {});
Matrix gale_matrix(const Matrix& d, const Tolerances& tol = {});

// Sphericity of an EDM decided by rank(D) == r + 1, with D·Z = 0 and eᵀw > 0
// evaluated alongside; any disagreement throws ConsistencyError. Returns
// nullopt for non-spherical input.
std::optional<SphereInfo> spherical_info(const Matrix& d, const VBasis& v, const Tolerances& tol = {});
std::optional<SphereInfo> spherical_info(const Matrix& d, const Tolerances& tol = {});

// Radius (eᵀDe / 2n²)^{1/2} when D·e is parallel to e.
std::optional<double> is_regular_edm(const Matrix& d, const Tolerances& tol = {});

// Matrix of squared pairwise distances between the rows of p.
Matrix squared_distances(const Matrix& p);

}  // namespace twodist
