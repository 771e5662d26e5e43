#include "pbc/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pbc/errors.hpp"

namespace pbc {

SparseMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  SparseMatrix m;
  m.rows = k.count(d - 1);
  m.cols = k.count(d);
  m.columns.resize(m.cols);
  if (d < 0) return m;
  const auto& simplices = k.simplices(d);
  for (std::size_t j = 0; j < simplices.size(); ++j) {
    const Simplex& s = simplices[j];
    auto& col = m.columns[j];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<long>(i));
      col.emplace_back(k.index_of(f), i % 2 == 0 ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
  }
  return m;
}

IntegerChainComplex augmented_chain_complex(const SimplicialComplex& k) {
  IntegerChainComplex c;
  c.top = k.dimension();
  for (int d = -1; d <= c.top; ++d) {
    c.ranks.push_back(k.count(d));
    c.boundary.push_back(boundary_matrix(k, d));
  }
  return c;
}

bool boundaries_square_to_zero(const IntegerChainComplex& c) {
  for (int d = 1; d <= c.top; ++d) {
    const SparseMatrix& hi = c.boundary_at(d);
    const SparseMatrix& lo = c.boundary_at(d - 1);
    // Column lookup of lo by row of hi.
    for (const auto& col : hi.columns) {
      std::map<int, long long> acc;
      for (auto [mid, v] : col)
        for (auto [row, w] : lo.columns[mid]) acc[row] += v * w;
      for (const auto& [row, x] : acc)
        if (x != 0) return false;
    }
  }
  return true;
}

DegreeHomology HomologyResult::at(int d) const {
  for (const auto& h : degrees)
    if (h.degree == d) return h;
  DegreeHomology z;
  z.degree = d;
  return z;
}

bool HomologyResult::zero_below(int n) const {
  for (const auto& h : degrees)
    if (h.degree < n && !h.zero()) return false;
  return true;
}

bool HomologyResult::acyclic() const {
  for (const auto& h : degrees)
    if (!h.zero()) return false;
  return true;
}

long long HomologyResult::reduced_euler_characteristic() const {
  long long chi = 0;
  for (const auto& h : degrees) chi += ((h.degree + 2) % 2 == 0 ? 1 : -1) * static_cast<long long>(h.rank);
  return chi;
}

bool HomologyResult::operator==(const HomologyResult& o) const {
  int top = -1;
  for (const auto& h : degrees) top = std::max(top, h.degree);
  for (const auto& h : o.degrees) top = std::max(top, h.degree);
  for (int d = -1; d <= top; ++d)
    if (!(at(d) == o.at(d))) return false;
  return true;
}

std::string format_homology(const HomologyResult& h) {
  std::ostringstream os;
  bool any = false;
  for (const auto& g : h.degrees) {
    if (g.zero()) continue;
    if (any) os << ", ";
    any = true;
    os << "H" << g.degree << " = ";
    bool term = false;
    if (g.rank > 0) {
      os << "Z";
      if (g.rank > 1) os << "^" << g.rank;
      term = true;
    }
    for (const auto& t : g.torsion) {
      os << (term ? " + " : "") << "Z/" << t;
      term = true;
    }
  }
  if (!any) os << "acyclic";
  return os.str();
}

HomologyResult homology(const IntegerChainComplex& c, Exec exec) {
  const int count = c.top + 2;
  std::vector<std::vector<BigInt>> inv(count);
  // inv[i] = invariant factors of boundary at degree i - 1; degree -1 has none.
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int i = 1; i < count; ++i) inv[i] = invariant_factors(c.boundary[i]);
  HomologyResult r;
  for (int d = -1; d <= c.top; ++d) {
    DegreeHomology h;
    h.degree = d;
    const std::size_t rank_out = inv[d + 1].size();
    const std::size_t rank_in = d + 2 < count ? inv[d + 2].size() : 0;
    h.rank = c.rank(d) - rank_out - rank_in;
    if (d + 2 < count)
      for (const auto& x : inv[d + 2])
        if (x > 1) h.torsion.push_back(x);
    std::sort(h.torsion.begin(), h.torsion.end());
    r.degrees.push_back(std::move(h));
  }
  return r;
}

HomologyResult reduced_homology(const SimplicialComplex& k, Exec exec) {
  return homology(augmented_chain_complex(k), exec);
}

HomologyResult reduced_homology(const FinitePoset& p, Exec exec) { return reduced_homology(order_complex(p), exec); }

std::vector<Vector> cycle_basis(const SimplicialComplex& k, int d) {
  if (d < -1 || d > k.dimension()) return {};
  if (d == -1) return {Vector{BigInt(1)}};
  return kernel_basis(boundary_matrix(k, d).dense(), k.count(d));
}

namespace {

Matrix columns_to_matrix(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m = zero_matrix(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  return m;
}

}  // namespace

CycleCoordinates::CycleCoordinates(const SimplicialComplex& k, int d)
    : k_(&k), d_(d), basis_(cycle_basis(k, d)), solver_(columns_to_matrix(basis_, k.count(d)), basis_.size()) {}

Vector CycleCoordinates::operator()(const Chain& c) const {
  if (!c.is_zero() && c.degree != d_) throw InvalidArgument("chain has the wrong degree");
  Chain cc = c;
  cc.degree = d_;
  auto x = solver_.solve(chain_coordinates(cc, *k_));
  if (!x) throw InvalidArgument("chain is not a cycle");
  return *x;
}

bool induced_epimorphism(const SimplicialComplex& a, const SimplicialComplex& b, const std::vector<int>& vertex_map,
                         int d) {
  const CycleCoordinates zb(b, d);
  if (zb.basis().empty()) return true;
  std::vector<Vector> cols;
  for (const Vector& z : cycle_basis(a, d)) cols.push_back(zb(pushforward(chain_from_coordinates(z, d, a), vertex_map)));
  for (const Simplex& s : b.simplices(d + 1)) cols.push_back(zb(boundary(Chain::simplex(s))));
  const auto inv = invariant_factors(columns_to_matrix(cols, zb.basis().size()));
  if (inv.size() != zb.basis().size()) return false;
  for (const auto& x : inv)
    if (x != 1) return false;
  return true;
}

}  // namespace pbc
