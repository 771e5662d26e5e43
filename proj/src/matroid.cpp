#include "pbc/matroid.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <unordered_map>

#include "pbc/errors.hpp"

namespace pbc {

Matroid::Matroid(int ground, std::vector<int> rank_of, std::string description)
    : ground_(ground), rank_of_(std::move(rank_of)), description_(std::move(description)) {
  if (ground < 0 || ground > 16) throw InvalidArgument("ground set must have at most 16 elements");
  if (rank_of_.size() != (std::size_t{1} << ground)) throw InvalidArgument("rank table has the wrong size");
}

Matroid Matroid::uniform_sum(const std::vector<std::pair<int, int>>& parts) {
  int ground = 0;
  std::ostringstream desc;
  std::vector<std::uint32_t> masks;
  std::vector<int> caps;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto [k, m] = parts[i];
    if (k < 0 || k > m) throw InvalidArgument("uniform matroid needs 0 <= k <= m");
    std::uint32_t mask = 0;
    for (int e = 0; e < m; ++e) mask |= 1u << (ground + e);
    masks.push_back(mask);
    caps.push_back(k);
    ground += m;
    desc << (i ? "+" : "") << "U(" << k << "," << m << ")";
  }
  std::vector<int> r(std::size_t{1} << ground);
  for (std::uint32_t s = 0; s < r.size(); ++s)
    for (std::size_t i = 0; i < masks.size(); ++i) r[s] += std::min(caps[i], std::popcount(s & masks[i]));
  return Matroid(ground, std::move(r), desc.str());
}

Matroid Matroid::linear(const std::vector<std::vector<int>>& columns, int p) {
  const int ground = static_cast<int>(columns.size());
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  std::ostringstream desc;
  desc << "F" << p << ":";
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InvalidArgument("columns have different lengths");
    desc << (j ? "," : "");
    for (int x : columns[j]) desc << ((x % p) + p) % p;
  }
  std::vector<int> r(std::size_t{1} << ground);
  for (std::uint32_t s = 1; s < r.size(); ++s) {
    std::vector<std::vector<int>> a;
    for (int j = 0; j < ground; ++j)
      if (s & (1u << j)) {
        std::vector<int> col;
        for (int x : columns[j]) col.push_back(((x % p) + p) % p);
        a.push_back(std::move(col));
      }
    // Row-reduce the selected columns (as rows) over F_p.
    int rank = 0;
    for (std::size_t c = 0; c < rows && rank < static_cast<int>(a.size()); ++c) {
      int piv = -1;
      for (int i = rank; i < static_cast<int>(a.size()); ++i)
        if (a[i][c] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(a[piv], a[rank]);
      int inv = 1;
      while (a[rank][c] * inv % p != 1) ++inv;
      for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (i == rank || a[i][c] == 0) continue;
        const int factor = a[i][c] * inv % p;
        for (std::size_t k = 0; k < rows; ++k) a[i][k] = ((a[i][k] - factor * a[rank][k]) % p + p) % p;
      }
      ++rank;
    }
    r[s] = rank;
  }
  return Matroid(ground, std::move(r), desc.str());
}

bool Matroid::independent(std::uint32_t s) const { return rank_of_[s] == std::popcount(s); }

std::uint32_t Matroid::closure(std::uint32_t s) const {
  std::uint32_t c = s;
  for (int e = 0; e < ground_; ++e)
    if (rank_of_[s | (1u << e)] == rank_of_[s]) c |= 1u << e;
  return c;
}

bool Matroid::loopless() const {
  for (int e = 0; e < ground_; ++e)
    if (rank_of_[1u << e] == 0) return false;
  return true;
}

std::vector<std::uint32_t> Matroid::flats() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < rank_of_.size(); ++s)
    if (closure(s) == s) out.push_back(s);
  std::sort(out.begin(), out.end(), [&](std::uint32_t a, std::uint32_t b) {
    return rank_of_[a] != rank_of_[b] ? rank_of_[a] < rank_of_[b] : a < b;
  });
  return out;
}

QuillenInstance matroid_instance(const Matroid& m) {
  const int r = m.rank();
  if (r < 2) throw InvalidArgument("matroid rank must be at least 2");
  if (!m.loopless()) throw InvalidArgument("matroid has a loop");
  QuillenInstance inst;
  inst.description = m.description();
  inst.n = r - 2;
  std::vector<std::string> labels;
  for (int e = 0; e < m.ground(); ++e) labels.push_back(std::to_string(e));
  std::vector<Simplex> faces;
  for (std::uint32_t s = 1; s < (1u << m.ground()); ++s)
    if (std::popcount(s) <= r - 1 && m.independent(s)) {
      Simplex f;
      for (int e = 0; e < m.ground(); ++e)
        if (s & (1u << e)) f.push_back(e);
      faces.push_back(std::move(f));
    }
  inst.complex = SimplicialComplex(labels, faces);

  std::vector<std::uint32_t> flats;
  for (std::uint32_t fl : m.flats())
    if (m.rank(fl) >= 1 && m.rank(fl) <= r - 1) flats.push_back(fl);
  std::unordered_map<std::uint32_t, int> flat_index;
  std::vector<std::string> ylabels;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    flat_index.emplace(flats[i], static_cast<int>(i));
    std::string l = "{";
    bool first = true;
    for (int e = 0; e < m.ground(); ++e)
      if (flats[i] & (1u << e)) {
        l += (first ? "" : ",") + std::to_string(e);
        first = false;
      }
    ylabels.push_back(l + "}");
  }
  std::vector<std::pair<int, int>> rel;
  for (std::size_t a = 0; a < flats.size(); ++a)
    for (std::size_t b = 0; b < flats.size(); ++b)
      if (a != b && (flats[a] & flats[b]) == flats[a]) rel.emplace_back(a, b);
  FinitePoset y(std::move(ylabels), rel);
  FinitePoset x = face_poset(inst.complex);
  std::vector<int> f;
  for (const Simplex& s : face_list(inst.complex)) {
    std::uint32_t mask = 0;
    for (int e : s) mask |= 1u << e;
    f.push_back(flat_index.at(m.closure(mask)));
  }
  inst.map = PosetMap(std::move(x), std::move(y), std::move(f));
  return inst;
}

std::vector<QuillenInstance> generate_instances(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<QuillenInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int r = uniform(2, 4);
    const int m = uniform(r, 7);
    if (i % 2 == 0) {
      const int t = uniform(1, std::min(r, 3));
      std::vector<int> k(t, 1), size;
      for (int extra = r - t; extra > 0; --extra) ++k[uniform(0, t - 1)];
      size = k;
      for (int extra = m - r; extra > 0; --extra) ++size[uniform(0, t - 1)];
      std::vector<std::pair<int, int>> parts;
      for (int j = 0; j < t; ++j) parts.emplace_back(k[j], size[j]);
      out.push_back(matroid_instance(Matroid::uniform_sum(parts)));
    } else {
      const int p = uniform(0, 1) ? 3 : 2;
      while (true) {
        std::vector<std::vector<int>> cols(m, std::vector<int>(r));
        bool zero_col = false;
        for (auto& c : cols) {
          for (auto& x : c) x = uniform(0, p - 1);
          zero_col |= std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
        }
        if (zero_col) continue;
        const Matroid mat = Matroid::linear(cols, p);
        if (mat.rank() != r) continue;
        out.push_back(matroid_instance(mat));
        break;
      }
    }
  }
  return out;
}

bool InstanceResult::pass() const {
  return spherical == Verdict::yes && heights && surjective && dimensions && decomposition && epimorphism &&
         epimorphism_certificate && basis && identity_failures == 0 && failure.empty();
}

InstanceResult evaluate_instance(const QuillenInstance& inst) {
  InstanceResult r;
  r.description = inst.description;
  r.n = inst.n;
  r.faces = inst.map.source.size();
  r.flats = inst.map.target.size();
  const auto rep = check_spherical_map(inst.map, inst.n, true, Exec::serial);
  r.spherical = rep.overall;
  r.heights = rep.heights.pass;
  r.surjective = rep.surjective.pass;
  r.dimensions = rep.dimensions.pass;
  if (rep.pass()) {
    try {
      const auto d = fiber_decomposition(inst.map, inst.n, Exec::serial);
      r.source_rank = d.source_rank;
      r.predicted_rank = d.predicted_rank;
      r.decomposition = d.holds();
    } catch (const InvalidArgument& e) {
      r.failure = e.what();
    }
  } else {
    r.failure = "map is not spherical";
  }
  r.epimorphism = top_homology_epimorphism(inst.map, inst.n);
  const auto cert = top_homology_basis(inst.map, inst.complex, inst.n);
  r.link_monotone = cert.link_monotone;
  r.union_compatible = cert.union_compatible;
  r.upper_epimorphisms = cert.upper_epimorphisms;
  r.epimorphism_certificate = cert.epimorphism;
  r.basis = cert.pass();
  r.determinant = cert.determinant;
  r.identity_checks = cert.identity_checks();
  r.identity_failures = cert.identity_failures();
  if (r.failure.empty() && !cert.failure.empty()) r.failure = cert.failure;
  return r;
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const InstanceResult& r) { return r.pass(); }));
}

SuiteReport run_quillen_suite(std::uint64_t seed, std::size_t count, Exec exec) {
  SuiteReport report;
  report.seed = seed;
  const auto instances = generate_instances(seed, count);
  report.instances.resize(instances.size());
  const int total = static_cast<int>(instances.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int i = 0; i < total; ++i) report.instances[i] = evaluate_instance(instances[i]);
  return report;
}

}  // namespace pbc
