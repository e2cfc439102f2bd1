#include "qgr/matrix.hpp"

namespace qgr {

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, std::vector<Scalar>(cols)); }

Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Matrix out = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

namespace {

// Incremental echelon basis of vectors; each stored vector has a pivot
// position where it equals 1 and all later stored vectors vanish.
class Echelon {
 public:
  // Returns true (and stores the reduced vector) when v is independent.
  bool insert(std::vector<Scalar> v) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const Scalar& c = v[pivots_[b]];
      if (c.is_zero()) continue;
      const Scalar factor = c;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!basis_[b][k].is_zero()) v[k] -= factor * basis_[b][k];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    const Scalar inv = v[p].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    // Keep earlier vectors reduced at the new pivot.
    for (auto& row : basis_) {
      if (row[p].is_zero()) continue;
      const Scalar factor = row[p];
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) row[k] -= factor * v[k];
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::vector<std::vector<Scalar>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::vector<int> independent_columns(const Matrix& m) {
  std::vector<int> out;
  if (m.empty()) return out;
  Echelon ech;
  for (std::size_t j = 0; j < m[0].size(); ++j) {
    std::vector<Scalar> col(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) col[i] = m[i][j];
    if (ech.insert(std::move(col))) out.push_back(static_cast<int>(j));
  }
  return out;
}

std::vector<int> independent_rows(const Matrix& m) {
  std::vector<int> out;
  Echelon ech;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (ech.insert(m[i])) out.push_back(static_cast<int>(i));
  return out;
}

int matrix_rank(const Matrix& m) { return static_cast<int>(independent_rows(m).size()); }

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw ZeroDivisor("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Scalar p = a[col][col].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      if (!a[col][k].is_zero()) a[col][k] *= p;
      if (!inv[col][k].is_zero()) inv[col][k] *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      const Scalar factor = a[i][col];
      for (std::size_t k = 0; k < n; ++k) {
        if (!a[col][k].is_zero()) a[i][k] -= factor * a[col][k];
        if (!inv[col][k].is_zero()) inv[i][k] -= factor * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace qgr
