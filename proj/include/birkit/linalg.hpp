#ifndef BIRKIT_LINALG_HPP
#define BIRKIT_LINALG_HPP

#include <vector>

#include "birkit/field.hpp"

namespace birkit {

/// Dense exact matrix, row-major.
struct DenseMatrix {
  int rows = 0, cols = 0;
  std::vector<Coeff> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Coeff(0)) {}
  Coeff& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Coeff& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(DenseMatrix& m, const Field& F);

long mat_rank(DenseMatrix m, const Field& F);

/// Basis of the right nullspace {x : Ax = 0}.
std::vector<std::vector<Coeff>> mat_nullspace(DenseMatrix m, const Field& F);

/// Basis of the row space (nonzero RREF rows).
std::vector<std::vector<Coeff>> mat_row_basis(DenseMatrix m, const Field& F);

}  // namespace birkit

#endif
