#pragma once

#include "twodist/matrix.hpp"

namespace twodist {

enum class VScheme { Dense, Block };

// Orthonormal basis of e⊥ in Rⁿ: Vᵀe = 0 and VᵀV = I_{n-1}.
struct VBasis {
  int n;
  Matrix columns;  // n x (n-1)
  VScheme scheme;
};

// Dense: [y·eᵀ; I + x·E] with y = -1/√n, x = -1/(n+√n); needs n >= 2.
// Block: the 3 / (n-3) split with a single coupling column; needs n >= 4.
VBasis build_v(int n, VScheme scheme = VScheme::Dense);

// X = -½ Vᵀ d V. Throws std::invalid_argument when d has a nonzero diagonal.
Matrix projected_gram(const Matrix& d, const VBasis& v);

// Vᵀ a V.
Matrix project_adjacency(const Matrix& a, const VBasis& v);

}  // namespace twodist
