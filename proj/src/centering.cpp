#include "twodist/centering.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twodist {

namespace {

Matrix dense_v(int n) {
  Matrix v(n, n - 1);
  const double rn = std::sqrt(static_cast<double>(n));
  const double y = -1.0 / rn;
  const double x = -1.0 / (n + rn);
  for (int j = 0; j < n - 1; ++j) {
    v(0, j) = y;
    for (int i = 1; i < n; ++i) v(i, j) = x + (i - 1 == j ? 1.0 : 0.0);
  }
  return v;
}

Matrix block_v(int n) {
  Matrix v(n, n - 1);
  const Matrix v3 = dense_v(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) v(i, j) = v3(i, j);
  if (n > 4) {
    const Matrix rest = dense_v(n - 3);
    for (int i = 0; i < n - 3; ++i)
      for (int j = 0; j < n - 4; ++j) v(3 + i, 2 + j) = rest(i, j);
  }
  const double a = std::sqrt((n - 3.0) / (3.0 * n));
  const double b = -std::sqrt(3.0 / (n * (n - 3.0)));
  for (int i = 0; i < n; ++i) v(i, n - 2) = i < 3 ? a : b;
  return v;
}

}  // namespace

VBasis build_v(int n, VScheme scheme) {
  if (scheme == VScheme::Dense) {
    if (n < 2) throw std::invalid_argument("build_v: dense scheme needs n >= 2, got " + std::to_string(n));
    return {n, dense_v(n), scheme};
  }
  if (n < 4) throw std::invalid_argument("build_v: block scheme needs n >= 4, got " + std::to_string(n));
  return {n, block_v(n), scheme};
}

Matrix projected_gram(const Matrix& d, const VBasis& v) {
  if (!d.square() || static_cast<int>(d.rows()) != v.n)
    throw std::invalid_argument("projected_gram: order mismatch");
  for (std::size_t i = 0; i < d.rows(); ++i)
    if (d(i, i) != 0.0) throw std::invalid_argument("projected_gram: nonzero diagonal entry");
  return congruence(v.columns, d) * -0.5;
}

Matrix project_adjacency(const Matrix& a, const VBasis& v) {
  if (!a.square() || static_cast<int>(a.rows()) != v.n)
    throw std::invalid_argument("project_adjacency: order mismatch");
  return congruence(v.columns, a);
}

}  // namespace twodist
