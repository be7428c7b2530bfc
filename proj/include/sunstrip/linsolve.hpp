#pragma once

// Fraction-free linear algebra over Z[vars].

#include <vector>

#include "sunstrip/poly.hpp"

namespace sunstrip {

using PolyMatrix = std::vector<std::vector<Poly>>;

// x_i = numerators[i] / det.
struct FractionFreeSolution {
  Poly det;
  std::vector<Poly> numerators;
};

// Solves M x = b by Bareiss elimination on sparse rows. Pivots are chosen by
// lowest total degree, then fewest terms, then smallest Markowitz product,
// then row and column order. Throws DomainError when M is singular.
FractionFreeSolution bareiss_solve(const PolyMatrix& M, const std::vector<Poly>& b);

Poly bareiss_determinant(const PolyMatrix& M);

}  // namespace sunstrip
