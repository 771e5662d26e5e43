#pragma once

// Finite posets, order complexes and face posets.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pbc/complex.hpp"

namespace pbc {

class FinitePoset {
 public:
  FinitePoset() = default;
  // `relations` are pairs (a, b) meaning a <= b; the order is their reflexive
  // transitive closure. Throws InvalidArgument when the closure is not
  // antisymmetric, on out-of-range indices, or on duplicate labels.
  FinitePoset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& relations);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[x]; }
  int index_of(const std::string& label) const;  // -1 if absent

  bool leq(int a, int b) const { return (rows_[a][b >> 6] >> (b & 63)) & 1u; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  const std::vector<int>& above(int x) const { return above_[x]; }  // strictly, increasing index
  const std::vector<int>& below(int x) const { return below_[x]; }

  // h(x): elements in the longest chain ending at x, minus one.
  int height(int x) const { return height_[x]; }
  // Dimension of the order complex; -1 when empty.
  int dimension() const;

  // Subposet on `elements`, in the given order.
  FinitePoset induced(const std::vector<int>& elements) const;
  FinitePoset opposite() const;
  std::vector<std::pair<int, int>> cover_relations() const;
  std::vector<std::pair<int, int>> strict_relations() const;
  // True if the index order is a linear extension of the order.
  bool index_order_is_linear_extension() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::vector<int>> above_, below_;
  std::vector<int> height_;
};

// Strict upper and lower sets X_{>x}, X_{<x}, and the closed versions.
std::vector<int> strictly_above(const FinitePoset& p, int x);
std::vector<int> strictly_below(const FinitePoset& p, int x);
FinitePoset upper_set(const FinitePoset& p, int x);
FinitePoset lower_set(const FinitePoset& p, int x);

// X1 then X2, labels tagged "0:" and "1:", with every x1 <= x2.
FinitePoset poset_join(const FinitePoset& x1, const FinitePoset& x2);

// lk(x, X) = X_{<x} * X_{>x}.
FinitePoset link_poset(int x, const FinitePoset& p);

// Simplices are the nonempty chains; vertex i is element i.
SimplicialComplex order_complex(const FinitePoset& p);

// Simplices ordered by (dimension, lexicographic), so the index order is a
// linear extension; labels are the vertex labels joined with ",".
FinitePoset face_poset(const SimplicialComplex& k);

// The element order used by face_poset: all nonempty simplices of K.
std::vector<Simplex> face_list(const SimplicialComplex& k);

}  // namespace pbc
