#include "modcat/matrix.hpp"

#include "modcat/error.hpp"

namespace modcat {

Matrix identity_matrix(std::size_t r) {
  Matrix m = zero_matrix(r, r);
  for (std::size_t i = 0; i < r; ++i) m[i][i] = Cyclotomic(1);
  return m;
}

Matrix zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, std::vector<Cyclotomic>(cols));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw Error(ErrorKind::InvalidParameters, "matrix shape mismatch");
  Matrix c = zero_matrix(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

Matrix mat_scale(const Matrix& a, const Cyclotomic& s) {
  Matrix c = a;
  for (auto& row : c)
    for (auto& x : row) x = x * s;
  return c;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix c = zero_matrix(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[j][i] = a[i][j];
  return c;
}

Matrix conj(const Matrix& a) { return galois(a, -1); }

Matrix galois(const Matrix& a, std::int64_t k) {
  Matrix c = a;
  for (auto& row : c)
    for (auto& x : row) x = x.galois(k);
  return c;
}

Matrix mat_pow(const Matrix& a, unsigned k) {
  Matrix result = identity_matrix(a.size());
  Matrix base = a;
  while (k > 0) {
    if (k & 1U) result = mat_mul(result, base);
    k >>= 1U;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

Matrix diag_left(const std::vector<Cyclotomic>& d, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (auto& x : c[i]) x = d[i] * x;
  return c;
}

Matrix diag_right(const Matrix& a, const std::vector<Cyclotomic>& d) {
  Matrix c = a;
  for (auto& row : c)
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = row[j] * d[j];
  return c;
}

bool is_symmetric(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

bool is_scalar_identity(const Matrix& a, const Cyclotomic& c) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != (i == j ? c : Cyclotomic())) return false;
  return true;
}

}  // namespace modcat
