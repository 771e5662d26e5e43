#include "pbc/smith.hpp"

#include <algorithm>
#include <stdexcept>

#include "pbc/errors.hpp"

namespace pbc {

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, Vector(cols)); }

Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::size_t cols_of(const Matrix& a) { return a.empty() ? 0 : a.front().size(); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t r = a.size(), k = b.size(), c = cols_of(b);
  if (cols_of(a) != k && !(r == 0 || k == 0)) throw InvalidArgument("matrix shapes do not match");
  Matrix out = zero_matrix(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

Vector multiply(const Matrix& a, const Vector& x) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw InvalidArgument("matrix-vector shapes do not match");
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != 0) out[i] += a[i][j] * x[j];
  }
  return out;
}

Matrix transpose(const Matrix& a, std::size_t rows_if_empty) {
  const std::size_t r = a.size(), c = cols_of(a);
  Matrix t = zero_matrix(r == 0 ? rows_if_empty : c, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) t[j][i] = a[i][j];
  return t;
}

Matrix SparseMatrix::dense() const {
  Matrix m = zero_matrix(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (auto [i, v] : columns[j]) m[i][j] = v;
  return m;
}

namespace {

struct Overflow {};

// x -= q * y, checked for int64.
inline void sub_mul(long long& x, long long q, long long y) {
  long long p;
  if (__builtin_mul_overflow(q, y, &p) || __builtin_sub_overflow(x, p, &x)) throw Overflow{};
}
inline void sub_mul(BigInt& x, const BigInt& q, const BigInt& y) { x -= q * y; }
inline void add_to(long long& x, long long y) {
  if (__builtin_add_overflow(x, y, &x)) throw Overflow{};
}
inline void add_to(BigInt& x, const BigInt& y) { x += y; }
inline long long abs_of(long long x) {
  if (x == std::numeric_limits<long long>::min()) throw Overflow{};
  return x < 0 ? -x : x;
}
inline BigInt abs_of(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
inline void negate(long long& x) {
  if (x == std::numeric_limits<long long>::min()) throw Overflow{};
  x = -x;
}
inline void negate(BigInt& x) { x = -x; }

template <class T>
using Mat = std::vector<std::vector<T>>;

// In-place Smith normal form of a (r x c). Transforms are tracked when the
// pointers are non-null: U a V = S and Vi = V^{-1}.
template <class T>
std::size_t snf_dense(Mat<T>& a, std::size_t r, std::size_t c, Mat<T>* U, Mat<T>* V, Mat<T>* Vi) {
  auto swap_rows = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a[i], a[k]);
    if (U) std::swap((*U)[i], (*U)[k]);
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a) std::swap(row[j], row[k]);
    if (V) {
      for (auto& row : *V) std::swap(row[j], row[k]);
      std::swap((*Vi)[j], (*Vi)[k]);
    }
  };
  std::size_t t = 0;
  while (t < r && t < c) {
    // Least absolute value in the remaining block.
    std::size_t pi = r, pj = c;
    T best{};
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (a[i][j] == 0) continue;
        T v = abs_of(a[i][j]);
        if (pi == r || v < best) {
          best = v;
          pi = i;
          pj = j;
          if (best == 1) goto found;
        }
      }
  found:
    if (pi == r) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        const T q = a[i][t] / a[t][t];
        if (q != 0) {
          for (std::size_t j = t; j < c; ++j) sub_mul(a[i][j], q, a[t][j]);
          if (U)
            for (std::size_t j = 0; j < r; ++j) sub_mul((*U)[i][j], q, (*U)[t][j]);
        }
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        const T q = a[t][j] / a[t][t];
        if (q != 0) {
          for (std::size_t i = t; i < r; ++i) sub_mul(a[i][j], q, a[i][t]);
          if (V) {
            for (std::size_t i = 0; i < c; ++i) sub_mul((*V)[i][j], q, (*V)[i][t]);
            // V' = V (I - q e_t e_j^T), so V'^{-1} = (I + q e_t e_j^T) V^{-1}.
            for (std::size_t k = 0; k < c; ++k) sub_mul((*Vi)[t][k], -q, (*Vi)[j][k]);
          }
        }
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        T b = abs_of(a[t][t]);
        for (std::size_t i = t + 1; i < r; ++i)
          if (a[i][t] != 0 && abs_of(a[i][t]) < b) b = abs_of(a[i][t]), bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (a[t][j] != 0 && abs_of(a[t][j]) < b) b = abs_of(a[t][j]), bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility of the remaining block by the pivot.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      for (std::size_t j = t; j < c; ++j) add_to(a[t][j], a[bad][j]);
      if (U)
        for (std::size_t j = 0; j < r; ++j) add_to((*U)[t][j], (*U)[bad][j]);
    }
    if (a[t][t] < 0) {
      negate(a[t][t]);
      if (U)
        for (auto& x : (*U)[t]) negate(x);
    }
    ++t;
  }
  return t;
}

template <class T>
std::vector<BigInt> dense_invariants(Mat<T> a, std::size_t r, std::size_t c) {
  const std::size_t rank = snf_dense<T>(a, r, c, nullptr, nullptr, nullptr);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(BigInt(a[i][i]));
  return out;
}

template <class T>
std::vector<BigInt> sparse_invariants(const SparseMatrix& m) {
  using Col = std::vector<std::pair<int, T>>;
  std::vector<Col> cols(m.cols);
  std::vector<std::vector<int>> row_cols(m.rows);
  for (std::size_t j = 0; j < m.cols; ++j) {
    for (auto [i, v] : m.columns[j]) {
      if (v == 0) continue;
      cols[j].emplace_back(i, T(v));
      row_cols[i].push_back(static_cast<int>(j));
    }
  }
  std::vector<char> col_done(m.cols, 0), row_dead(m.rows, 0);
  std::size_t units = 0;
  auto value_at = [&](const Col& col, int row) -> const T* {
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const std::pair<int, T>& e, int r) { return e.first < r; });
    return (it != col.end() && it->first == row) ? &it->second : nullptr;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (col_done[j] || cols[j].empty()) continue;
      // Unit entry in the row with the fewest other columns.
      int pivot_row = -1;
      std::size_t best = 0;
      T p{};
      for (auto& [i, v] : cols[j]) {
        if (v != 1 && v != -1) continue;
        if (pivot_row < 0 || row_cols[i].size() < best) {
          pivot_row = i;
          best = row_cols[i].size();
          p = v;
        }
      }
      if (pivot_row < 0) continue;
      const Col pivot = cols[j];
      std::vector<int> touched;
      for (int k : row_cols[pivot_row]) {
        if (static_cast<std::size_t>(k) == j || col_done[k]) continue;
        const T* av = value_at(cols[k], pivot_row);
        if (!av) continue;
        const T q = *av * p;  // p = +-1, so a / p = a * p
        Col merged;
        merged.reserve(cols[k].size() + pivot.size());
        std::size_t x = 0, y = 0;
        while (x < cols[k].size() || y < pivot.size()) {
          if (y == pivot.size() || (x < cols[k].size() && cols[k][x].first < pivot[y].first)) {
            merged.push_back(cols[k][x++]);
          } else if (x == cols[k].size() || pivot[y].first < cols[k][x].first) {
            T v{};
            sub_mul(v, q, pivot[y].second);
            row_cols[pivot[y].first].push_back(k);
            merged.emplace_back(pivot[y].first, v);
            ++y;
          } else {
            T v = cols[k][x].second;
            sub_mul(v, q, pivot[y].second);
            if (v != 0) merged.emplace_back(cols[k][x].first, v);
            ++x;
            ++y;
          }
        }
        cols[k] = std::move(merged);
        touched.push_back(k);
      }
      col_done[j] = 1;
      row_dead[pivot_row] = 1;
      cols[j].clear();
      ++units;
      progress = true;
      // Compact stale row->column lists occasionally.
      for (int k : touched) {
        for (auto& [i, v] : cols[k]) {
          auto& rc = row_cols[i];
          if (rc.size() > 4 * cols.size() / std::max<std::size_t>(1, m.rows) + 64) {
            std::sort(rc.begin(), rc.end());
            rc.erase(std::unique(rc.begin(), rc.end()), rc.end());
          }
        }
      }
    }
  }
  std::vector<BigInt> out(units, BigInt(1));
  // Dense remainder.
  std::vector<std::size_t> rem_cols;
  for (std::size_t j = 0; j < m.cols; ++j)
    if (!col_done[j] && !cols[j].empty()) rem_cols.push_back(j);
  if (rem_cols.empty()) return out;
  std::vector<int> row_id(m.rows, -1);
  std::size_t nr = 0;
  for (std::size_t j : rem_cols)
    for (auto& [i, v] : cols[j])
      if (row_id[i] < 0) row_id[i] = static_cast<int>(nr++);
  Mat<T> a(nr, std::vector<T>(rem_cols.size(), T(0)));
  for (std::size_t c = 0; c < rem_cols.size(); ++c)
    for (auto& [i, v] : cols[rem_cols[c]]) a[row_id[i]][c] = v;
  auto rest = dense_invariants<T>(std::move(a), nr, rem_cols.size());
  out.insert(out.end(), rest.begin(), rest.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SmithForm smith_normal_form(const Matrix& m, std::size_t cols_if_empty) {
  const std::size_t r = m.size(), c = r == 0 ? cols_if_empty : m.front().size();
  SmithForm f;
  f.S = m;
  f.U = identity_matrix(r);
  f.V = identity_matrix(c);
  f.V_inv = identity_matrix(c);
  f.rank = snf_dense<BigInt>(f.S, r, c, &f.U, &f.V, &f.V_inv);
  for (std::size_t i = 0; i < f.rank; ++i) f.invariants.push_back(f.S[i][i]);
  return f;
}

std::vector<BigInt> invariant_factors(const SparseMatrix& m) {
  try {
    return sparse_invariants<long long>(m);
  } catch (const Overflow&) {
    return sparse_invariants<BigInt>(m);
  }
}

std::vector<BigInt> invariant_factors(const Matrix& m) {
  const std::size_t r = m.size(), c = cols_of(m);
  try {
    Mat<long long> a(r, std::vector<long long>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (m[i][j] > std::numeric_limits<long long>::max() || m[i][j] < std::numeric_limits<long long>::min())
          throw Overflow{};
        a[i][j] = static_cast<long long>(m[i][j]);
      }
    return dense_invariants<long long>(std::move(a), r, c);
  } catch (const Overflow&) {
    return dense_invariants<BigInt>(m, r, c);
  }
}

std::vector<Vector> kernel_basis(const Matrix& m, std::size_t cols_if_empty) {
  const std::size_t c = m.empty() ? cols_if_empty : m.front().size();
  SmithForm f = smith_normal_form(m, c);
  std::vector<Vector> out;
  for (std::size_t j = f.rank; j < c; ++j) {
    Vector v(c);
    for (std::size_t i = 0; i < c; ++i) v[i] = f.V[i][j];
    out.push_back(std::move(v));
  }
  return out;
}

IntegerSolver::IntegerSolver(const Matrix& m, std::size_t cols_if_empty)
    : rows_(m.size()), cols_(m.empty() ? cols_if_empty : m.front().size()), form_(smith_normal_form(m, cols_)) {}

std::optional<Vector> IntegerSolver::solve(const Vector& b) const {
  if (b.size() != rows_) throw InvalidArgument("right-hand side has the wrong length");
  Vector ub = multiply(form_.U, b);
  Vector y(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < form_.rank) {
      if (ub[i] % form_.S[i][i] != 0) return std::nullopt;
      y[i] = ub[i] / form_.S[i][i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return multiply(form_.V, y);
}

std::optional<Vector> solve_integer(const Matrix& m, const Vector& b, std::size_t cols_if_empty) {
  return IntegerSolver(m, cols_if_empty).solve(b);
}

BigInt determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (cols_of(m) != n) throw InvalidArgument("determinant of a non-square matrix");
  Matrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace pbc
