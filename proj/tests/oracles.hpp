#pragma once

// Test-only reference computations, written independently of the library
// kernels they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pbc/bigint.hpp"
#include "pbc/freegroup.hpp"
#include "pbc/smith.hpp"

namespace oracle {

using pbc::BigInt;
using pbc::Matrix;

// Determinant by cofactor expansion (small matrices only).
inline BigInt cofactor_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const BigInt c = m[0][j] * cofactor_det(minor);
    det += (j % 2 == 0) ? c : BigInt(-c);
  }
  return det;
}

inline BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> s;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (s.size() == k) {
      out.push_back(s);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      s.push_back(i);
      self(self, i + 1);
      s.pop_back();
    }
  };
  rec(rec, 0);
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors,
// s_k = d_k / d_{k-1}.
inline std::vector<BigInt> determinantal_invariants(const Matrix& m) {
  const std::size_t r = m.size(), c = r ? m[0].size() : 0;
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(r, k, rs);
    subsets(c, k, cs);
    BigInt d = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        Matrix sub(k, std::vector<BigInt>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
        d = gcd(d, cofactor_det(sub));
      }
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

// Rank over Q by fraction-free elimination.
inline std::size_t rational_rank(Matrix a) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t p = rank;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < r; ++i) {
      if (a[i][col] == 0) continue;
      const BigInt f = a[i][col], g = a[rank][col];
      for (std::size_t j = col; j < c; ++j) a[i][j] = a[i][j] * g - a[rank][j] * f;
    }
    ++rank;
  }
  return rank;
}

// Rank over F_p.
inline std::size_t rank_mod_p(const Matrix& m, long long p) {
  const std::size_t r = m.size(), c = r ? m[0].size() : 0;
  std::vector<std::vector<long long>> a(r, std::vector<long long>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      BigInt x = m[i][j] % p;
      if (x < 0) x += p;
      a[i][j] = static_cast<long long>(x);
    }
  auto inv = [&](long long x) {
    long long res = 1, e = p - 2;
    while (e) {
      if (e & 1) res = res * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return res;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && a[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(a[piv], a[rank]);
    const long long iv = inv(a[rank][col]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const long long f = a[i][col] * iv % p;
      for (std::size_t j = col; j < c; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi, double density = 1.0) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution keep(density);
  Matrix m(r, std::vector<BigInt>(c));
  for (auto& row : m)
    for (auto& x : row)
      if (keep(rng)) x = val(rng);
  return m;
}

// Partial-basis oracle: breadth-first search over images under Whitehead
// automorphisms (A;a), restricted to sets of total length at most cap, looking
// for a set of single letters in distinct generator orbits. Words are plain
// signed-int vectors; states are normalized under signed permutations and
// inversion of each word.
using RawWord = std::vector<int>;

inline RawWord raw_reduce(const RawWord& w) {
  RawWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

inline RawWord raw_inverse(const RawWord& w) {
  RawWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

inline std::vector<std::vector<int>> signed_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      std::vector<int> q(p);
      for (int i = 0; i < n; ++i)
        if (signs & (1 << i)) q[i] = -q[i];
      out.push_back(q);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<RawWord> normalize(const std::vector<RawWord>& s, const std::vector<std::vector<int>>& perms) {
  std::vector<RawWord> best;
  for (const auto& p : perms) {
    std::vector<RawWord> img;
    for (const RawWord& w : s) {
      RawWord u;
      for (int x : w) u.push_back(x > 0 ? p[x - 1] : -p[-x - 1]);
      RawWord v = raw_inverse(u);
      img.push_back(std::min(u, v));
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (best.empty() || img < best) best = img;
  }
  return best;
}

inline bool is_letter_set(const std::vector<RawWord>& s) {
  std::set<int> seen;
  for (const RawWord& w : s) {
    if (w.size() != 1) return false;
    if (!seen.insert(w[0] < 0 ? -w[0] : w[0]).second) return false;
  }
  return true;
}

inline bool bfs_partial_basis(std::vector<RawWord> s, int n, std::size_t slack = 2) {
  for (auto& w : s) w = raw_reduce(w);
  if (static_cast<int>(s.size()) > n) return false;
  for (const auto& w : s)
    if (w.empty()) return false;
  std::size_t cap = slack;
  for (const auto& w : s) cap += w.size();
  const auto perms = signed_perms(n);
  std::set<std::vector<RawWord>> seen;
  std::set<RawWord> plain;
  for (const auto& w : s) plain.insert(std::min(w, raw_inverse(w)));
  std::set<RawWord> distinct(s.begin(), s.end());
  if (plain.size() != distinct.size()) return false;  // w and w^-1 together
  std::vector<std::vector<RawWord>> frontier{normalize(s, perms)};
  seen.insert(frontier[0]);
  // all letters as signed ints, a = multiplier, A encoded as a bitmask over 2n letters
  auto bit = [n](int x) { return x > 0 ? x - 1 : n - x - 1; };
  while (!frontier.empty()) {
    std::vector<std::vector<RawWord>> next;
    for (const auto& state : frontier) {
      if (is_letter_set(state)) return true;
      for (int a = -n; a <= n; ++a) {
        if (a == 0) continue;
        for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
          if (!(mask & (1u << bit(a))) || (mask & (1u << bit(-a)))) continue;
          auto in = [&](int x) { return (mask >> bit(x)) & 1u; };
          std::vector<RawWord> img;
          std::size_t total = 0;
          for (const RawWord& w : state) {
            RawWord u;
            for (int x : w) {
              if (x == a || x == -a) {
                u.push_back(x);
                continue;
              }
              if (in(-x)) u.push_back(-a);
              u.push_back(x);
              if (in(x)) u.push_back(a);
            }
            u = raw_reduce(u);
            total += u.size();
            img.push_back(std::move(u));
          }
          if (total > cap) continue;
          auto norm = normalize(img, perms);
          if (seen.insert(norm).second) next.push_back(std::move(norm));
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

inline std::vector<RawWord> raw_words(int n, std::size_t length) {
  std::vector<RawWord> out{{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<RawWord> grown;
    for (const RawWord& w : out)
      for (int x = -n; x <= n; ++x)
        if (x != 0 && (w.empty() || w.back() != -x)) {
          RawWord u(w);
          u.push_back(x);
          grown.push_back(std::move(u));
        }
    out = std::move(grown);
  }
  return out;
}

}  // namespace oracle
