#pragma once

// Integer matrices and Smith normal form.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pbc/bigint.hpp"

namespace pbc {

// Dense row-major matrix over Z.
using Matrix = std::vector<std::vector<BigInt>>;
using Vector = std::vector<BigInt>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);
Matrix transpose(const Matrix& a, std::size_t rows_if_empty = 0);
std::size_t cols_of(const Matrix& a);

struct SmithForm {
  Matrix S;      // diagonal, nonnegative, each entry dividing the next
  Matrix U;      // unimodular, U * M * V = S
  Matrix V;      // unimodular
  Matrix V_inv;  // V^{-1}
  std::size_t rank = 0;
  std::vector<BigInt> invariants;  // the nonzero diagonal entries
};

// Pivoting repeatedly selects the nonzero entry of least absolute value.
SmithForm smith_normal_form(const Matrix& m, std::size_t cols_if_empty = 0);

// Sparse matrix with small entries, as produced by simplicial boundaries.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  // Column-major: entries of column j as (row, value), rows increasing.
  std::vector<std::vector<std::pair<int, long long>>> columns;

  Matrix dense() const;
};

// Nonzero invariant factors only (no transforms). Unit pivots are eliminated
// sparsely first; the remainder goes through the dense algorithm. Arithmetic
// is int64 with overflow detection, restarting in BigInt on overflow.
std::vector<BigInt> invariant_factors(const SparseMatrix& m);
std::vector<BigInt> invariant_factors(const Matrix& m);

// Z-basis of the kernel of m (as columns of the returned list).
std::vector<Vector> kernel_basis(const Matrix& m, std::size_t cols_if_empty = 0);

// Some integer x with m x = b, or nullopt when none exists.
std::optional<Vector> solve_integer(const Matrix& m, const Vector& b, std::size_t cols_if_empty = 0);

// Repeated solves against one matrix, reusing its Smith form.
class IntegerSolver {
 public:
  explicit IntegerSolver(const Matrix& m, std::size_t cols_if_empty = 0);
  std::optional<Vector> solve(const Vector& b) const;
  std::size_t rank() const { return form_.rank; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  SmithForm form_;
};

BigInt determinant(const Matrix& m);

}  // namespace pbc
