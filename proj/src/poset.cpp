#include "pbc/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "pbc/errors.hpp"

namespace pbc {

FinitePoset::FinitePoset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& relations)
    : labels_(std::move(labels)) {
  const int n = static_cast<int>(labels_.size());
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
      if (!seen.insert(l).second) throw InvalidArgument("duplicate poset element '" + l + "'");
  }
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(n, std::vector<std::uint64_t>(words, 0));
  auto set = [&](int a, int b) { rows_[a][b >> 6] |= std::uint64_t{1} << (b & 63); };
  for (int i = 0; i < n; ++i) set(i, i);
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("poset relation index out of range");
    set(a, b);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (i != k && leq(i, k))
        for (std::size_t w = 0; w < words; ++w) rows_[i][w] |= rows_[k][w];
  above_.assign(n, {});
  below_.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      if (leq(j, i))
        throw InvalidArgument("relation is not antisymmetric: '" + labels_[i] + "' and '" + labels_[j] + "'");
      above_[i].push_back(j);
      below_[j].push_back(i);
    }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below_[a].size() < below_[b].size(); });
  height_.assign(n, 0);
  for (int x : order)
    for (int y : below_[x]) height_[x] = std::max(height_[x], height_[y] + 1);
}

int FinitePoset::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

int FinitePoset::dimension() const {
  int d = -1;
  for (int h : height_) d = std::max(d, h);
  return d;
}

FinitePoset FinitePoset::induced(const std::vector<int>& elements) const {
  std::vector<std::string> labels;
  for (int e : elements) labels.push_back(labels_.at(e));
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (i != j && leq(elements[i], elements[j])) rel.emplace_back(i, j);
  return FinitePoset(std::move(labels), rel);
}

FinitePoset FinitePoset::opposite() const {
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : cover_relations()) rel.emplace_back(b, a);
  return FinitePoset(labels_, rel);
}

std::vector<std::pair<int, int>> FinitePoset::strict_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(size()); ++a)
    for (int b : above_[a]) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(size()); ++a)
    for (int b : above_[a]) {
      bool cover = true;
      for (int c : above_[a])
        if (c != b && less(c, b)) {
          cover = false;
          break;
        }
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

bool FinitePoset::index_order_is_linear_extension() const {
  for (int a = 0; a < static_cast<int>(size()); ++a)
    if (!above_[a].empty() && above_[a].front() < a) return false;
  return true;
}

std::vector<int> strictly_above(const FinitePoset& p, int x) { return p.above(x); }
std::vector<int> strictly_below(const FinitePoset& p, int x) { return p.below(x); }

FinitePoset upper_set(const FinitePoset& p, int x) {
  if (x < 0 || x >= static_cast<int>(p.size())) throw InvalidArgument("element not in poset");
  return p.induced(p.above(x));
}

FinitePoset lower_set(const FinitePoset& p, int x) {
  if (x < 0 || x >= static_cast<int>(p.size())) throw InvalidArgument("element not in poset");
  return p.induced(p.below(x));
}

FinitePoset poset_join(const FinitePoset& x1, const FinitePoset& x2) {
  std::vector<std::string> labels;
  for (const auto& l : x1.labels()) labels.push_back("0:" + l);
  for (const auto& l : x2.labels()) labels.push_back("1:" + l);
  const int off = static_cast<int>(x1.size());
  std::vector<std::pair<int, int>> rel;
  for (auto r : x1.cover_relations()) rel.push_back(r);
  for (auto [a, b] : x2.cover_relations()) rel.emplace_back(a + off, b + off);
  for (int a = 0; a < off; ++a)
    for (int b = 0; b < static_cast<int>(x2.size()); ++b) rel.emplace_back(a, b + off);
  return FinitePoset(std::move(labels), rel);
}

FinitePoset link_poset(int x, const FinitePoset& p) { return poset_join(lower_set(p, x), upper_set(p, x)); }

SimplicialComplex order_complex(const FinitePoset& p) {
  const int n = static_cast<int>(p.size());
  std::vector<std::vector<int>> covers(n);
  std::vector<char> minimal(n, 1);
  for (auto [a, b] : p.cover_relations()) {
    covers[a].push_back(b);
    minimal[b] = 0;
  }
  // Maximal chains are the maximal paths of the Hasse diagram.
  std::vector<Simplex> chains;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int x) -> void {
    path.push_back(x);
    if (covers[x].empty()) {
      Simplex s = path;
      std::sort(s.begin(), s.end());
      chains.push_back(std::move(s));
    }
    for (int y : covers[x]) self(self, y);
    path.pop_back();
  };
  for (int x = 0; x < n; ++x)
    if (minimal[x]) dfs(dfs, x);
  return SimplicialComplex(p.labels(), chains);
}

std::vector<Simplex> face_list(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) out.push_back(s);
  return out;
}

FinitePoset face_poset(const SimplicialComplex& k) {
  std::vector<std::string> labels;
  std::vector<int> offset(k.dimension() + 2, 0);
  for (int d = 0; d <= k.dimension(); ++d) offset[d + 1] = offset[d] + static_cast<int>(k.count(d));
  std::vector<std::pair<int, int>> rel;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) {
      std::string l;
      for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + k.label(s[i]);
      labels.push_back(std::move(l));
      if (d == 0) continue;
      const int me = offset[d] + k.index_of(s);
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<long>(i));
        rel.emplace_back(offset[d - 1] + k.index_of(f), me);
      }
    }
  return FinitePoset(std::move(labels), rel);
}

}  // namespace pbc
