// weyl.cpp - Weyl group enumeration and chamber operations.
#include "coset/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coset {

WeylElement WeylElement::identity(int n) {
  WeylElement e;
  e.n = n;
  e.mat.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) e.at(i, i) = 1;
  e.sign = 1;
  return e;
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Weight WeylElement::apply(const Weight& w) const {
  if (static_cast<int>(w.dim()) != n)
    throw DimensionMismatch("Weyl element acts on " + std::to_string(n) +
                            " coordinates, weight has " +
                            std::to_string(w.dim()));
  Weight r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rational s = 0;
    for (int j = 0; j < n; ++j)
      if (at(i, j) != 0) s += Rational(at(i, j)) * w[j];
    r[i] = s;
  }
  return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.n != b.n) throw DimensionMismatch("composing Weyl elements of different sizes");
  WeylElement c;
  c.n = a.n;
  c.mat.assign(static_cast<std::size_t>(a.n) * a.n, 0);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      long aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  c.sign = a.sign * b.sign;
  return c;
}

Weight reflect(const BilinearForm& form, const Weight& root, const Weight& w) {
  if (root.is_zero()) throw ZeroRoot("reflection in the zero vector");
  return w - coroot_pairing(form, w, root) * root;
}

WeylElement reflection_element(const BilinearForm& form, const Weight& root) {
  if (root.is_zero()) throw ZeroRoot("reflection in the zero vector");
  const int n = static_cast<int>(form.dim());
  Rational n2 = form.inner(root, root);
  WeylElement r = WeylElement::identity(n);
  // column j of the matrix is s(e_j) = e_j - (2 (e_j, root)/(root,root)) root
  for (int j = 0; j < n; ++j) {
    Weight ej(static_cast<std::size_t>(n));
    ej[j] = 1;
    Rational p = 2 * form.inner(ej, root) / n2;
    for (int i = 0; i < n; ++i) {
      Rational entry = Rational(i == j ? 1 : 0) - p * root[i];
      if (!is_integer(entry))
        throw std::logic_error("reflection matrix has non-integer entry for root " +
                               root.str());
      r.at(i, j) = static_cast<long>(entry.get_num().get_si());
    }
  }
  r.sign = -1;
  return r;
}

WeylGroup enumerate_weyl(const RootSystem& rs, long limit) {
  WeylGroup g;
  for (const auto& a : rs.simple_roots)
    g.generators.push_back(reflection_element(rs.form, a));

  const WeylElement e = WeylElement::identity(rs.ambient);
  std::set<WeylElement> seen{e};
  g.elements.push_back(e);
  g.lengths.push_back(0);

  std::vector<WeylElement> frontier{e};
  int length = 0;
  while (!frontier.empty()) {
    ++length;
    std::set<WeylElement> next;
    for (const auto& w : frontier)
      for (const auto& s : g.generators) {
        WeylElement ws = w * s;
        if (!seen.count(ws)) next.insert(ws);
      }
    frontier.assign(next.begin(), next.end());  // lexicographic inside level
    for (const auto& w : frontier) {
      if (static_cast<long>(g.elements.size()) >= limit)
        throw GroupTooLarge("Weyl group exceeds the enumeration limit of " +
                            std::to_string(limit) + " elements");
      seen.insert(w);
      g.elements.push_back(w);
      g.lengths.push_back(length);
    }
  }
  return g;
}

bool is_dominant(const RootSystem& rs, const Weight& w, bool strict) {
  for (const auto& a : rs.simple_roots) {
    Rational p = rs.form.inner(w, a);
    if (strict ? (p <= 0) : (p < 0)) return false;
  }
  return true;
}

DominantRep to_dominant(const RootSystem& rs, const Weight& w) {
  DominantRep r{WeylElement::identity(rs.ambient), w};
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
      if (rs.form.inner(r.dominant, rs.simple_roots[i]) < 0) {
        r.dominant = reflect(rs.form, rs.simple_roots[i], r.dominant);
        r.u = reflection_element(rs.form, rs.simple_roots[i]) * r.u;
        moved = true;
        break;
      }
    }
    if (!moved) return r;
  }
}

std::vector<WeylElement> coset_transversal(const RootSystem& g,
                                           const RootSystem& eta,
                                           const WeylGroup& wg) {
  if (!is_subsystem_of(eta, g))
    throw NotASubsystem("transversal requires eta to be a subsystem of g");
  std::vector<WeylElement> c;
  for (const auto& w : wg.elements)
    if (is_dominant(eta, w.apply(g.rho), /*strict=*/true)) c.push_back(w);
  return c;
}

}  // namespace coset
