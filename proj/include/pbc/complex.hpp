#pragma once

// Finite abstract simplicial complexes on a totally ordered, labelled vertex
// set. Simplices are sorted vectors of vertex indices; the index order is the
// orientation order.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace pbc {

using Simplex = std::vector<int>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Downward closure of `faces`. Every vertex is a 0-simplex, so vertices not
  // covered by any face are isolated points. Throws InvalidArgument on
  // out-of-range or duplicated vertices inside a face, or duplicate labels.
  SimplicialComplex(std::vector<std::string> labels, const std::vector<Simplex>& faces);
  // Vertices labelled 0..n-1.
  static SimplicialComplex from_facets(int vertex_count, const std::vector<Simplex>& faces);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  int vertex_of(const std::string& label) const;  // -1 if absent

  // -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return labels_.empty(); }

  // Simplices of dimension d in lexicographic order. d = -1 gives the empty
  // simplex alone; dimensions outside [-1, dim] give an empty list.
  const std::vector<Simplex>& simplices(int d) const;
  std::size_t count(int d) const { return simplices(d).size(); }
  std::size_t simplex_count() const;  // nonempty simplices

  bool contains(const Simplex& s) const;
  // Position of s within simplices(s.size() - 1), or -1.
  int index_of(const Simplex& s) const;

  std::vector<Simplex> facets() const;
  SimplicialComplex skeleton(int k) const;
  // Unreduced Euler characteristic sum (-1)^d f_d.
  long long euler_characteristic() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;

  void build(const std::vector<Simplex>& faces);
};

// Vertices of K1 then K2, labels tagged "0:" and "1:"; simplices are the
// unions of a simplex (or the empty simplex) of each side.
SimplicialComplex complex_join(const SimplicialComplex& k1, const SimplicialComplex& k2);

// lk(s, K) = {t : t and s disjoint, t u s in K}, on the vertices it uses
// (labels kept, order kept). Throws InvalidArgument if s is not in K.
SimplicialComplex link_complex(const Simplex& s, const SimplicialComplex& k);

// Vertex indices of the link's vertices in K, in link order.
std::vector<int> link_vertices(const Simplex& s, const SimplicialComplex& k);

// Sign of the permutation sorting `v` (distinct entries); 0 on repeats.
int sort_sign(std::vector<int>& v);

}  // namespace pbc
