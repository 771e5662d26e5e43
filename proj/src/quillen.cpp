#include "pbc/quillen.hpp"

#include <algorithm>
#include <unordered_map>

#include "pbc/errors.hpp"

namespace pbc {

PosetMap::PosetMap(FinitePoset x, FinitePoset y, std::vector<int> f)
    : source(std::move(x)), target(std::move(y)), assignment(std::move(f)) {
  if (assignment.size() != source.size()) throw InvalidArgument("assignment does not cover the source poset");
  for (int v : assignment)
    if (v < 0 || v >= static_cast<int>(target.size())) throw InvalidArgument("assignment leaves the target poset");
  for (auto [a, b] : source.cover_relations())
    if (!target.leq(assignment[a], assignment[b]))
      throw InvalidArgument("map is not order preserving: " + source.label(a) + " <= " + source.label(b));
}

std::vector<int> fiber_elements(const PosetMap& f, int y) {
  if (y < 0 || y >= static_cast<int>(f.target.size())) throw InvalidArgument("element not in target poset");
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(f.source.size()); ++x)
    if (f.target.leq(f(x), y)) out.push_back(x);
  return out;
}

FinitePoset fiber(const PosetMap& f, int y) { return f.source.induced(fiber_elements(f, y)); }

MappingCylinder mapping_cylinder(const PosetMap& f) {
  const int nx = static_cast<int>(f.source.size());
  std::vector<std::string> labels;
  for (const auto& l : f.source.labels()) labels.push_back("0:" + l);
  for (const auto& l : f.target.labels()) labels.push_back("1:" + l);
  std::vector<std::pair<int, int>> rel = f.source.cover_relations();
  for (auto [a, b] : f.target.cover_relations()) rel.emplace_back(a + nx, b + nx);
  for (int x = 0; x < nx; ++x) rel.emplace_back(x, nx + f(x));
  MappingCylinder m;
  m.poset = FinitePoset(std::move(labels), rel);
  for (int x = 0; x < nx; ++x) m.j.push_back(x);
  for (int y = 0; y < static_cast<int>(f.target.size()); ++y) m.i.push_back(nx + y);
  return m;
}

SphericalMapReport check_spherical_map(const PosetMap& f, int n, bool homological, Exec exec,
                                       const SphericityOptions& opt) {
  SphericalMapReport r;
  r.n = n;
  r.homological = homological;
  const int ny = static_cast<int>(f.target.size());
  r.per_y.resize(ny);
  auto verdict = [&](const FinitePoset& p, int dim) {
    return homological ? is_homologically_spherical(p, dim, Exec::serial) : is_spherical(p, dim, opt, Exec::serial);
  };
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int y = 0; y < ny; ++y) {
    FiberVerdict& v = r.per_y[y];
    v.y = y;
    v.height = f.target.height(y);
    v.upper = verdict(upper_set(f.target, y), n - v.height - 1);
    v.fiber = verdict(fiber(f, y), v.height);
  }
  r.overall = Verdict::yes;
  for (const auto& v : r.per_y)
    for (Verdict w : {v.upper, v.fiber}) {
      if (w == Verdict::no) r.overall = Verdict::no;
      else if (w == Verdict::unknown && r.overall == Verdict::yes) r.overall = Verdict::unknown;
    }
  for (int x = 0; x < static_cast<int>(f.source.size()) && r.heights.pass; ++x) {
    const int hx = f.source.height(x), hy = f.target.height(f(x));
    if (hy < hx) {
      r.heights.pass = false;
      r.heights.witness = f.source.label(x) + ": h(x) = " + std::to_string(hx) + ", h(f(x)) = " + std::to_string(hy);
    }
  }
  std::vector<char> hit(ny, 0);
  for (int v : f.assignment) hit[v] = 1;
  for (int y = 0; y < ny; ++y)
    if (!hit[y]) {
      r.surjective.pass = false;
      r.surjective.witness = f.target.label(y) + " has no preimage";
      break;
    }
  const int dx = f.source.dimension(), dy = f.target.dimension();
  if (dx != n || dy != n) {
    r.dimensions.pass = false;
    r.dimensions.witness = "dim X = " + std::to_string(dx) + ", dim Y = " + std::to_string(dy);
  }
  return r;
}

Decomposition fiber_decomposition(const PosetMap& f, int n, Exec exec) {
  if (!check_spherical_map(f, n, true, exec).pass()) throw InvalidArgument("map is not homologically spherical");
  if (is_homologically_spherical(f.target, n, exec) != Verdict::yes)
    throw InvalidArgument("target is not homologically spherical");
  Decomposition d;
  d.n = n;
  d.target_rank = reduced_homology(f.target, exec).rank(n);
  d.source_rank = reduced_homology(f.source, exec).rank(n);
  d.predicted_rank = d.target_rank;
  const int ny = static_cast<int>(f.target.size());
  d.summands.resize(ny);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int y = 0; y < ny; ++y) {
    auto& s = d.summands[y];
    s.y = y;
    s.height = f.target.height(y);
    s.fiber_rank = reduced_homology(fiber(f, y), Exec::serial).rank(s.height);
    s.upper_rank = reduced_homology(upper_set(f.target, y), Exec::serial).rank(n - s.height - 1);
  }
  for (const auto& s : d.summands) d.predicted_rank += s.fiber_rank * s.upper_rank;
  return d;
}

bool top_homology_epimorphism(const PosetMap& f, int n) {
  return induced_epimorphism(order_complex(f.source), order_complex(f.target), f.assignment, n);
}

std::size_t BasisCertificate::identity_checks() const {
  std::size_t c = 0;
  for (const auto& s : summands) c += s.identity_checks;
  return c;
}

std::size_t BasisCertificate::identity_failures() const {
  std::size_t c = 0;
  for (const auto& s : summands) c += s.identity_failures;
  return c;
}

namespace {

Matrix columns_matrix(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m = zero_matrix(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  return m;
}

// Integer combinations c with images * c = e_j for each unit vector e_j of
// the target, applied to `sources`. Empty optional when some e_j has no
// preimage.
std::optional<std::vector<Chain>> lift_basis(const std::vector<Vector>& images, std::size_t target_rank,
                                             const std::vector<Chain>& sources, int degree) {
  const IntegerSolver solver(columns_matrix(images, target_rank), images.size());
  std::vector<Chain> out;
  for (std::size_t j = 0; j < target_rank; ++j) {
    Vector e(target_rank);
    e[j] = 1;
    auto c = solver.solve(e);
    if (!c) return std::nullopt;
    Chain g(degree);
    for (std::size_t i = 0; i < sources.size(); ++i)
      if ((*c)[i] != 0) g += sources[i] * (*c)[i];
    g.degree = degree;
    out.push_back(std::move(g));
  }
  return out;
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

}  // namespace

BasisCertificate top_homology_basis(const PosetMap& f, const SimplicialComplex& k, int n, const BasisOptions& opt) {
  BasisCertificate cert;
  cert.n = n;
  const FinitePoset& xp = f.source;
  const FinitePoset& yp = f.target;
  const std::vector<Simplex> faces = face_list(k);
  const int nx = static_cast<int>(faces.size());
  if (static_cast<int>(xp.size()) != nx) throw InvalidArgument("map source is not the face poset of the complex");
  {
    const FinitePoset xk = face_poset(k);
    if (xk.labels() != xp.labels()) throw InvalidArgument("map source is not the face poset of the complex");
  }
  if (k.dimension() != n) {
    cert.failure = "complex dimension differs from n";
    return cert;
  }
  std::unordered_map<Simplex, int, SimplexHash> face_index;
  for (int i = 0; i < nx; ++i) face_index.emplace(faces[i], i);
  auto index_of = [&](const Simplex& s) {
    auto it = face_index.find(s);
    return it == face_index.end() ? -1 : it->second;
  };

  // (i) f(s1) <= f(s2) implies lk(s2) is contained in lk(s1).
  std::vector<std::vector<Simplex>> links(nx);
  for (int i = 0; i < nx; ++i) {
    const SimplicialComplex lk = link_complex(faces[i], k);
    const auto verts = link_vertices(faces[i], k);
    for (const auto& t : face_list(lk)) {
      Simplex g;
      for (int v : t) g.push_back(verts[v]);
      links[i].push_back(std::move(g));
    }
  }
  cert.link_monotone = Verdict::yes;
  for (int a = 0; a < nx && cert.link_monotone == Verdict::yes; ++a)
    for (int b = 0; b < nx && cert.link_monotone == Verdict::yes; ++b) {
      if (!yp.leq(f(a), f(b))) continue;
      for (const auto& t : links[b]) {
        const Simplex u = simplex_union(faces[a], t);
        if (u.size() != faces[a].size() + t.size() || index_of(u) < 0) {
          cert.link_monotone = Verdict::no;
          cert.hypothesis_witness = "link of " + xp.label(b) + " is not inside the link of " + xp.label(a);
          break;
        }
      }
    }

  // (ii) union compatibility, over all comparable pairs.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b)
      if (yp.leq(f(a), f(b))) pairs.emplace_back(a, b);
  std::vector<int> unions(static_cast<std::size_t>(nx) * nx, -1);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b) unions[static_cast<std::size_t>(a) * nx + b] = index_of(simplex_union(faces[a], faces[b]));
  cert.union_compatible = Verdict::yes;
  std::size_t work = 0;
  for (std::size_t p = 0; p < pairs.size() && cert.union_compatible == Verdict::yes; ++p) {
    const auto [s1, s2] = pairs[p];
    for (const auto& [t1, t2] : pairs) {
      const int u1 = unions[static_cast<std::size_t>(s1) * nx + t1];
      const int u2 = unions[static_cast<std::size_t>(s2) * nx + t2];
      if (u1 < 0 || u2 < 0) continue;
      if (!yp.leq(f(u1), f(u2))) {
        cert.union_compatible = Verdict::no;
        cert.hypothesis_witness = "f(" + xp.label(s1) + " u " + xp.label(t1) + ") is not below f(" + xp.label(s2) +
                                  " u " + xp.label(t2) + ")";
        break;
      }
    }
    work += pairs.size();
    if (work > opt.union_check_budget && cert.union_compatible == Verdict::yes) {
      cert.union_compatible = Verdict::unknown;
      break;
    }
  }

  // (iii) f_* : H~_{n-h-1}(X_{>s}) -> H~_{n-h-1}(Y_{>y}) onto, for s over y.
  cert.upper_epimorphisms = Verdict::yes;
  for (int s = 0; s < nx && cert.upper_epimorphisms == Verdict::yes; ++s) {
    const int y = f(s);
    const int d = n - yp.height(y) - 1;
    const auto& xs = xp.above(s);
    const auto& ys = yp.above(y);
    std::vector<int> local(yp.size(), -1);
    for (std::size_t i = 0; i < ys.size(); ++i) local[ys[i]] = static_cast<int>(i);
    std::vector<int> vmap;
    for (int a : xs) vmap.push_back(local[f(a)]);
    if (std::find(vmap.begin(), vmap.end(), -1) != vmap.end()) {
      cert.upper_epimorphisms = Verdict::no;
      cert.hypothesis_witness = "f does not send X_{>" + xp.label(s) + "} into Y_{>" + yp.label(y) + "}";
      break;
    }
    if (!induced_epimorphism(order_complex(xp.induced(xs)), order_complex(yp.induced(ys)), vmap, d)) {
      cert.upper_epimorphisms = Verdict::no;
      cert.hypothesis_witness = "no epimorphism above " + xp.label(s);
    }
  }
  if (cert.link_monotone == Verdict::no || cert.union_compatible == Verdict::no ||
      cert.upper_epimorphisms == Verdict::no) {
    cert.failure = "hypothesis fails: " + cert.hypothesis_witness;
    return cert;
  }

  // gamma: lifts of a basis of H~_n(Y) = Z_n(K(Y)).
  const SimplicialComplex ky = order_complex(yp);
  if (ky.dimension() > n) {
    cert.failure = "target dimension exceeds n";
    return cert;
  }
  const std::vector<Vector> zk = cycle_basis(k, n);
  std::vector<Chain> zk_chains;
  for (const auto& z : zk) zk_chains.push_back(chain_from_coordinates(z, n, k));
  const CycleCoordinates y_coords(ky, n);
  std::vector<Vector> images;
  for (const auto& z : zk_chains) images.push_back(y_coords(pushforward(subdivision_chain(z, k), f.assignment)));
  {
    Matrix fm = columns_matrix(images, y_coords.basis().size());
    const auto inv = invariant_factors(fm);
    cert.epimorphism = inv.size() == y_coords.basis().size() &&
                       std::all_of(inv.begin(), inv.end(), [](const BigInt& v) { return v == 1; });
  }
  if (!cert.epimorphism) {
    cert.failure = "f_* is not onto H~_n(Y)";
    return cert;
  }
  auto gamma = lift_basis(images, y_coords.basis().size(), zk_chains, n);
  if (!gamma) {
    cert.failure = "no lift of a basis of H~_n(Y)";
    return cert;
  }
  cert.gamma = std::move(*gamma);

  for (int y = 0; y < static_cast<int>(yp.size()); ++y) {
    SummandBasis sb;
    sb.y = y;
    sb.height = yp.height(y);
    const int h = sb.height;
    const int d = n - h - 1;
    int x_index = -1;
    for (int i = 0; i < nx && x_index < 0; ++i)
      if (f(i) == y) x_index = i;
    if (x_index < 0) {
      cert.failure = "f is not surjective at " + yp.label(y);
      return cert;
    }
    sb.x = faces[x_index];

    // alpha: cycles of K_y, built on its own vertices and pushed back to K.
    std::vector<Simplex> ky_faces;
    std::vector<int> ky_verts;
    for (int i = 0; i < nx; ++i)
      if (yp.leq(f(i), y)) {
        ky_faces.push_back(faces[i]);
        if (faces[i].size() == 1) ky_verts.push_back(faces[i][0]);
      }
    std::sort(ky_verts.begin(), ky_verts.end());
    std::vector<int> to_local(k.vertex_count(), -1);
    std::vector<std::string> ky_labels;
    for (std::size_t i = 0; i < ky_verts.size(); ++i) {
      to_local[ky_verts[i]] = static_cast<int>(i);
      ky_labels.push_back(k.label(ky_verts[i]));
    }
    for (auto& s : ky_faces)
      for (auto& v : s) v = to_local[v];
    const SimplicialComplex k_y(ky_labels, ky_faces);
    for (const auto& z : cycle_basis(k_y, h)) sb.alpha.push_back(pushforward(chain_from_coordinates(z, h, k_y), ky_verts));

    // beta: cycles of K^y = lk(x, K) whose images under ftilde form a basis of
    // H~_d(Y_{>y}).
    const SimplicialComplex kup = link_complex(sb.x, k);
    const std::vector<int> lv = link_vertices(sb.x, k);
    const std::vector<Simplex> kup_faces = face_list(kup);
    const auto& ys = yp.above(y);
    std::vector<int> y_local(yp.size(), -1);
    for (std::size_t i = 0; i < ys.size(); ++i) y_local[ys[i]] = static_cast<int>(i);
    std::vector<int> ftilde;  // face of K^y -> element of Y_{>y} (local index)
    std::vector<int> ftilde_global;
    for (const auto& t : kup_faces) {
      Simplex g = sb.x;
      for (int v : t) g.push_back(lv[v]);
      std::sort(g.begin(), g.end());
      const int gy = f(index_of(g));
      ftilde_global.push_back(gy);
      ftilde.push_back(y_local[gy]);
      if (y_local[gy] < 0) {
        cert.failure = "ftilde leaves Y_{>y} at " + yp.label(y);
        return cert;
      }
    }
    const SimplicialComplex kyup = order_complex(yp.induced(ys));
    if (kyup.dimension() != d) {
      cert.failure = "Y_{>" + yp.label(y) + "} has unexpected dimension";
      return cert;
    }
    std::vector<Chain> zb;
    for (const auto& z : cycle_basis(kup, d)) zb.push_back(chain_from_coordinates(z, d, kup));
    const CycleCoordinates up_coords(kyup, d);
    std::vector<Vector> up_images;
    for (const auto& z : zb) up_images.push_back(up_coords(pushforward(subdivision_chain(z, kup), ftilde)));
    auto beta = lift_basis(up_images, up_coords.basis().size(), zb, d);
    if (!beta) {
      cert.failure = "no lift of a basis of H~(Y_{>" + yp.label(y) + "})";
      return cert;
    }
    sb.beta = std::move(*beta);

    // Products and the chain identity in the mapping cylinder.
    std::vector<int> phi(nx);
    for (int i = 0; i < nx; ++i) phi[i] = xp.height(i) < h + 1 ? i : nx + f(i);
    std::vector<int> ftilde_m;
    for (int g : ftilde_global) ftilde_m.push_back(nx + g);
    for (const auto& a : sb.alpha) {
      const Chain a_sub = subdivision_chain(a, k);
      for (const auto& b : sb.beta) {
        const Chain b_global = pushforward(b, lv);
        const Chain prod = chain_join_sorted(a, b_global);
        sb.products.push_back(prod);
        const Chain lhs = pushforward(subdivision_chain(prod, k), phi);
        const Chain rhs = chain_join_sorted(a_sub, pushforward(subdivision_chain(b, kup), ftilde_m));
        ++sb.identity_checks;
        if (!(lhs == rhs)) ++sb.identity_failures;
      }
    }
    cert.summands.push_back(std::move(sb));
  }

  // Candidates in the cycle basis of Z_n(K).
  const CycleCoordinates k_coords(k, n);
  std::vector<Vector> cols;
  for (const auto& g : cert.gamma) cols.push_back(k_coords(g));
  for (const auto& s : cert.summands)
    for (const auto& p : s.products) cols.push_back(k_coords(p));
  cert.change_of_basis = columns_matrix(cols, zk.size());
  if (cols.size() != zk.size()) {
    cert.failure = "candidate count " + std::to_string(cols.size()) + " differs from rank " + std::to_string(zk.size());
    cert.determinant = 0;
    return cert;
  }
  cert.determinant = determinant(cert.change_of_basis);
  if (!cert.unimodular()) cert.failure = "candidates are not a basis";
  else if (cert.identity_failures() > 0) cert.failure = "chain identity fails";
  return cert;
}

}  // namespace pbc
