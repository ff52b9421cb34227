#pragma once

// Dense square/rectangular matrices over Cyclotomic. Sizes here are tiny
// (rank <= 8, occasionally p for the psi representation), so plain nested
// vectors are enough.

#include <vector>

#include "modcat/cyclotomic.hpp"

namespace modcat {

using Matrix = std::vector<std::vector<Cyclotomic>>;

Matrix identity_matrix(std::size_t r);
Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, const Cyclotomic& c);
Matrix transpose(const Matrix& a);
/// Entrywise complex conjugate.
Matrix conj(const Matrix& a);
/// Entrywise sigma_k.
Matrix galois(const Matrix& a, std::int64_t k);
Matrix mat_pow(const Matrix& a, unsigned k);
/// diag(d) * a
Matrix diag_left(const std::vector<Cyclotomic>& d, const Matrix& a);
/// a * diag(d)
Matrix diag_right(const Matrix& a, const std::vector<Cyclotomic>& d);

bool is_symmetric(const Matrix& a);
bool is_scalar_identity(const Matrix& a, const Cyclotomic& c);

}  // namespace modcat
