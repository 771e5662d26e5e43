#include "pbc/chains.hpp"

#include <algorithm>
#include <sstream>

#include "pbc/errors.hpp"

namespace pbc {

Chain Chain::simplex(const Simplex& s, const BigInt& c) {
  Chain out(static_cast<int>(s.size()) - 1);
  out.add(s, c);
  return out;
}

void Chain::add(const Simplex& s, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

BigInt Chain::coefficient(const Simplex& s) const {
  auto it = terms.find(s);
  return it == terms.end() ? BigInt(0) : it->second;
}

Chain& Chain::operator+=(const Chain& o) {
  if (!o.is_zero() && !is_zero() && o.degree != degree) throw InvalidArgument("adding chains of different degree");
  if (is_zero()) degree = o.degree;
  for (const auto& [s, c] : o.terms) add(s, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) { return *this += -o; }
Chain Chain::operator+(const Chain& o) const { return Chain(*this) += o; }
Chain Chain::operator-(const Chain& o) const { return Chain(*this) -= o; }

Chain Chain::operator*(const BigInt& c) const {
  Chain out(degree);
  if (c == 0) return out;
  for (const auto& [s, v] : terms) out.terms.emplace(s, v * c);
  return out;
}

Chain Chain::operator-() const { return *this * BigInt(-1); }

bool Chain::operator==(const Chain& o) const {
  if (is_zero() && o.is_zero()) return true;
  return degree == o.degree && terms == o.terms;
}

std::string format_chain(const Chain& c, const SimplicialComplex* k) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, v] : c.terms) {
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    first = false;
    const BigInt a = abs(v);
    if (a != 1) os << a;
    os << "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) os << ",";
      if (k) os << k->label(s[i]);
      else os << s[i];
    }
    os << "]";
  }
  return os.str();
}

Chain boundary(const Chain& c) {
  Chain out(c.degree - 1);
  if (c.degree < 0) return out;
  for (const auto& [s, v] : c.terms)
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<long>(i));
      out.add(f, i % 2 == 0 ? v : BigInt(-v));
    }
  return out;
}

Vector chain_coordinates(const Chain& c, const SimplicialComplex& k) {
  Vector x(k.count(c.degree));
  for (const auto& [s, v] : c.terms) {
    const int i = k.index_of(s);
    if (i < 0 || static_cast<int>(s.size()) - 1 != c.degree) throw InvalidArgument("chain uses a simplex outside the complex");
    x[i] = v;
  }
  return x;
}

Chain chain_from_coordinates(const Vector& x, int degree, const SimplicialComplex& k) {
  const auto& basis = k.simplices(degree);
  if (x.size() != basis.size()) throw InvalidArgument("coordinate vector has the wrong length");
  Chain out(degree);
  for (std::size_t i = 0; i < x.size(); ++i) out.add(basis[i], x[i]);
  return out;
}

Chain chain_join(const Chain& a, const Chain& b, int k1_vertex_count) {
  Chain out(a.degree + b.degree + 1);
  for (const auto& [s, u] : a.terms)
    for (const auto& [t, v] : b.terms) {
      Simplex st = s;
      for (int x : t) st.push_back(x + k1_vertex_count);
      out.add(st, u * v);
    }
  return out;
}

Chain chain_join_sorted(const Chain& a, const Chain& b) {
  Chain out(a.degree + b.degree + 1);
  for (const auto& [s, u] : a.terms)
    for (const auto& [t, v] : b.terms) {
      Simplex st = s;
      st.insert(st.end(), t.begin(), t.end());
      const int sign = sort_sign(st);
      if (sign == 0) throw InvalidArgument("joined simplices share a vertex");
      out.add(st, sign > 0 ? BigInt(u * v) : BigInt(-(u * v)));
    }
  return out;
}

Chain subdivision_chain(const Chain& c, const SimplicialComplex& k) {
  std::vector<int> offset(k.dimension() + 2, 0);
  for (int d = 0; d <= k.dimension(); ++d) offset[d + 1] = offset[d] + static_cast<int>(k.count(d));
  auto barycenter = [&](const Simplex& s) {
    const int i = k.index_of(s);
    if (i < 0) throw InvalidArgument("chain uses a simplex outside the complex");
    return offset[s.size() - 1] + i;
  };
  std::map<Simplex, Chain> memo;
  auto lambda = [&](auto&& self, const Simplex& s) -> const Chain& {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    Chain r;
    if (s.empty()) {
      r = Chain::empty_simplex();
    } else {
      Chain ls(static_cast<int>(s.size()) - 2);
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<long>(i));
        const Chain& lf = self(self, f);
        ls += (i % 2 == 0) ? lf : -lf;
      }
      // Barycenters of faces precede b_s in face_list order, so appending
      // b_s keeps every simplex sorted.
      const int b = barycenter(s);
      r = Chain(ls.degree + 1);
      for (const auto& [t, v] : ls.terms) {
        Simplex tb = t;
        tb.push_back(b);
        r.add(tb, s.size() % 2 == 1 ? v : BigInt(-v));
      }
    }
    return memo.emplace(s, std::move(r)).first->second;
  };
  Chain out(c.degree);
  for (const auto& [s, v] : c.terms) out += lambda(lambda, s) * v;
  out.degree = c.degree;
  return out;
}

Chain pushforward(const Chain& c, const std::vector<int>& vertex_map) {
  Chain out(c.degree);
  for (const auto& [s, v] : c.terms) {
    Simplex t;
    t.reserve(s.size());
    for (int x : s) t.push_back(vertex_map.at(x));
    const int sign = sort_sign(t);
    if (sign == 0) continue;
    out.add(t, sign > 0 ? v : BigInt(-v));
  }
  return out;
}

}  // namespace pbc
