#include "pbc/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "pbc/errors.hpp"

namespace pbc {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : s) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, const std::vector<Simplex>& faces)
    : labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw InvalidArgument("duplicate vertex label '" + l + "'");
  build(faces);
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count, const std::vector<Simplex>& faces) {
  std::vector<std::string> labels;
  for (int i = 0; i < vertex_count; ++i) labels.push_back(std::to_string(i));
  return SimplicialComplex(std::move(labels), faces);
}

void SimplicialComplex::build(const std::vector<Simplex>& faces) {
  const int n = static_cast<int>(labels_.size());
  std::vector<std::unordered_set<Simplex, SimplexHash>> sets;
  auto add = [&](const Simplex& s) {
    const std::size_t d = s.size() - 1;
    if (sets.size() <= d) sets.resize(d + 1);
    sets[d].insert(s);
  };
  for (int v = 0; v < n; ++v) add({v});
  // Largest first, so faces of already-closed simplices are skipped.
  std::vector<const Simplex*> order;
  for (const auto& f : faces) order.push_back(&f);
  std::stable_sort(order.begin(), order.end(), [](auto a, auto b) { return a->size() > b->size(); });
  for (const Simplex* fp : order) {
    Simplex f = *fp;
    if (f.empty()) continue;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InvalidArgument("simplex repeats a vertex");
    if (f.front() < 0 || f.back() >= n) throw InvalidArgument("simplex vertex out of range");
    if (f.size() > 30) throw InvalidArgument("simplex too large");
    if (sets.size() >= f.size() && sets[f.size() - 1].count(f)) continue;
    const std::uint32_t full = (1u << f.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      add(s);
    }
  }
  by_dim_.clear();
  index_.clear();
  for (auto& set : sets) {
    std::vector<Simplex> list(set.begin(), set.end());
    std::sort(list.begin(), list.end());
    std::unordered_map<Simplex, int, SimplexHash> idx;
    idx.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) idx.emplace(list[i], static_cast<int>(i));
    by_dim_.push_back(std::move(list));
    index_.push_back(std::move(idx));
  }
}

int SimplicialComplex::vertex_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  static const std::vector<Simplex> empty_simplex{Simplex{}};
  static const std::vector<Simplex> none;
  if (d == -1) return empty_simplex;
  if (d < -1 || d > dimension()) return none;
  return by_dim_[d];
}

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& l : by_dim_) n += l.size();
  return n;
}

bool SimplicialComplex::contains(const Simplex& s) const { return s.empty() || index_of(s) >= 0; }

int SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty()) return 0;
  const std::size_t d = s.size() - 1;
  if (d >= index_.size()) return -1;
  auto it = index_[d].find(s);
  return it == index_[d].end() ? -1 : it->second;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (const auto& s : by_dim_[d]) {
      bool maximal = true;
      if (d < dimension()) {
        Simplex t(s.size() + 1);
        for (int v = 0; v < static_cast<int>(labels_.size()) && maximal; ++v) {
          if (std::binary_search(s.begin(), s.end(), v)) continue;
          std::merge(s.begin(), s.end(), &v, &v + 1, t.begin());
          if (index_[d + 1].count(t)) maximal = false;
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  std::vector<Simplex> faces;
  for (int d = 0; d <= std::min(k, dimension()); ++d)
    for (const auto& s : by_dim_[d]) faces.push_back(s);
  return SimplicialComplex(labels_, faces);
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[d].size());
  return chi;
}

SimplicialComplex complex_join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  std::vector<std::string> labels;
  for (const auto& l : k1.labels()) labels.push_back("0:" + l);
  for (const auto& l : k2.labels()) labels.push_back("1:" + l);
  const int off = static_cast<int>(k1.vertex_count());
  auto f1 = k1.facets(), f2 = k2.facets();
  if (f1.empty()) f1.push_back({});
  if (f2.empty()) f2.push_back({});
  std::vector<Simplex> faces;
  for (const auto& a : f1)
    for (const auto& b : f2) {
      Simplex s = a;
      for (int v : b) s.push_back(v + off);
      if (!s.empty()) faces.push_back(std::move(s));
    }
  return SimplicialComplex(std::move(labels), faces);
}

std::vector<int> link_vertices(const Simplex& s, const SimplicialComplex& k) {
  if (!k.contains(s)) throw InvalidArgument("simplex not in complex");
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(k.vertex_count()); ++v) {
    if (std::binary_search(s.begin(), s.end(), v)) continue;
    Simplex t = s;
    t.insert(std::upper_bound(t.begin(), t.end(), v), v);
    if (k.contains(t)) out.push_back(v);
  }
  return out;
}

SimplicialComplex link_complex(const Simplex& s, const SimplicialComplex& k) {
  const std::vector<int> verts = link_vertices(s, k);
  std::vector<int> local(k.vertex_count(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    local[verts[i]] = static_cast<int>(i);
    labels.push_back(k.label(verts[i]));
  }
  std::vector<Simplex> faces;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& t : k.simplices(d)) {
      if (t.size() <= s.size() || !std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
      Simplex rest;
      for (int v : t)
        if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(local[v]);
      faces.push_back(std::move(rest));
    }
  return SimplicialComplex(std::move(labels), faces);
}

int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) return 0;
  return sign;
}

}  // namespace pbc
