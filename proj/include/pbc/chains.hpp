#pragma once

// Augmented simplicial chains with integer coefficients. A chain of degree d
// is a combination of oriented d-simplices (sorted vertex lists); degree -1
// is spanned by the empty simplex.

#include <map>
#include <string>
#include <vector>

#include "pbc/bigint.hpp"
#include "pbc/complex.hpp"
#include "pbc/smith.hpp"

namespace pbc {

struct Chain {
  int degree = 0;
  std::map<Simplex, BigInt> terms;  // no zero coefficients

  Chain() = default;
  explicit Chain(int d) : degree(d) {}
  static Chain simplex(const Simplex& s, const BigInt& c = 1);
  static Chain empty_simplex() { return simplex({}); }

  bool is_zero() const { return terms.empty(); }
  void add(const Simplex& s, const BigInt& c);
  BigInt coefficient(const Simplex& s) const;

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain operator+(const Chain& o) const;
  Chain operator-(const Chain& o) const;
  Chain operator*(const BigInt& c) const;
  Chain operator-() const;
  bool operator==(const Chain& o) const;
};

std::string format_chain(const Chain& c, const SimplicialComplex* k = nullptr);

// The augmented boundary: d[v] is the empty simplex, d of degree -1 is zero.
Chain boundary(const Chain& c);

// Coordinates of c in the basis simplices(c.degree) of K; throws
// InvalidArgument if c uses a simplex outside K.
Vector chain_coordinates(const Chain& c, const SimplicialComplex& k);
Chain chain_from_coordinates(const Vector& x, int degree, const SimplicialComplex& k);

// The chain of K1 * K2 (vertices of K2 shifted by K1's vertex count):
// concatenation [a_0..a_p] * [b_0..b_q] = [a_0..a_p b_0..b_q]. Satisfies
// d(a * b) = da * b + (-1)^{p+1} a * db, with p + 1 the number of vertices of a.
Chain chain_join(const Chain& a, const Chain& b, int k1_vertex_count);

// Concatenation of simplices drawn from disjoint vertex sets of one complex,
// re-sorted into index order with the permutation sign.
Chain chain_join_sorted(const Chain& a, const Chain& b);

// Barycentric subdivision into K' = K(X(K)), whose vertices are the simplices
// of K in face_list order: lambda(s) = (-1)^{dim s} lambda(ds) * [b_s], with
// lambda of the empty simplex itself.
Chain subdivision_chain(const Chain& c, const SimplicialComplex& k);

// Image under a vertex map; simplices with repeated image vertices vanish and
// the rest are re-sorted with the permutation sign.
Chain pushforward(const Chain& c, const std::vector<int>& vertex_map);

}  // namespace pbc
