#include "birkit/linalg.hpp"

namespace birkit {

std::vector<int> rref(DenseMatrix& m, const Field& F) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    // prefer a short pivot row; over QQ this keeps entries small
    int best = -1;
    size_t best_sz = ~size_t{0};
    for (int r = row; r < m.rows; ++r) {
      if (F.is_zero(m.at(r, col))) continue;
      size_t sz = mpz_size(m.at(r, col).get_num().get_mpz_t()) +
                  mpz_size(m.at(r, col).get_den().get_mpz_t());
      if (sz < best_sz) { best = r; best_sz = sz; }
    }
    if (best < 0) continue;
    if (best != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(best, c));
    Coeff inv = F.inv(m.at(row, col));
    for (int c = col; c < m.cols; ++c)
      if (!F.is_zero(m.at(row, c))) m.at(row, c) = F.mul(m.at(row, c), inv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || F.is_zero(m.at(r, col))) continue;
      Coeff f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) {
        if (F.is_zero(m.at(row, c))) continue;
        m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

long mat_rank(DenseMatrix m, const Field& F) {
  return static_cast<long>(rref(m, F).size());
}

std::vector<std::vector<Coeff>> mat_nullspace(DenseMatrix m, const Field& F) {
  std::vector<int> pivots = rref(m, F);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Coeff>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols, Coeff(0));
    v[free] = Coeff(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = F.neg(m.at(static_cast<int>(i), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Coeff>> mat_row_basis(DenseMatrix m, const Field& F) {
  std::vector<int> pivots = rref(m, F);
  std::vector<std::vector<Coeff>> rows;
  for (size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Coeff> v(m.cols, Coeff(0));
    for (int c = 0; c < m.cols; ++c) v[c] = m.at(static_cast<int>(i), c);
    rows.push_back(std::move(v));
  }
  return rows;
}

}  // namespace birkit
