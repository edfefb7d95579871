// rootsys.cpp - construction of the supported root systems and their
// equal-rank subsystems.
#include "coset/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace coset {

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::G2: return "G2";
    case Series::Derived: return "derived";
  }
  return "?";
}

Series parse_series(const std::string& s) {
  if (s == "A") return Series::A;
  if (s == "B") return Series::B;
  if (s == "C") return Series::C;
  if (s == "D") return Series::D;
  if (s == "G") return Series::G2;
  if (s == "E" || s == "F")
    throw UnsupportedSeries("series " + s +
                            " is not supported: only A, B, C, D and G2 "
                            "ambient realizations are shipped");
  throw UnsupportedSeries("unknown series '" + s + "'");
}

bool RootSystem::is_positive_root(const Weight& w) const {
  return std::binary_search(positive_sorted.begin(), positive_sorted.end(), w);
}

bool RootSystem::is_root(const Weight& w) const {
  return is_positive_root(w) || is_positive_root(-w);
}

namespace {

Weight unit(int n, int i) {
  Weight w(static_cast<std::size_t>(n));
  w[i] = 1;
  return w;
}

// Positive roots generated from the simples as the reflection orbit, carrying
// exact integer simple-root coefficients along.  Returns (roots, coords)
// sorted by height then lexicographically; also sorts lexicographically for
// binary search?  No: callers keep the height order and search with a sorted
// copy; see finalize().
struct GeneratedRoots {
  std::vector<Weight> positives;
  std::vector<std::vector<long>> coords;
};

GeneratedRoots close_under_reflections(const std::vector<Weight>& simples,
                                       const BilinearForm& form) {
  const std::size_t r = simples.size();
  std::map<Weight, std::vector<long>> seen;
  std::vector<Weight> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<long> c(r, 0);
    c[i] = 1;
    seen.emplace(simples[i], c);
    queue.push_back(simples[i]);
  }
  while (!queue.empty()) {
    Weight w = queue.back();
    queue.pop_back();
    std::vector<long> c = seen.at(w);
    for (std::size_t i = 0; i < r; ++i) {
      Rational p = coroot_pairing(form, w, simples[i]);
      if (!is_integer(p))
        throw std::logic_error("root generation: non-integral Cartan pairing");
      Weight img = w - p * simples[i];
      if (seen.count(img)) continue;
      std::vector<long> ci = c;
      ci[i] -= static_cast<long>(p.get_num().get_si());
      seen.emplace(img, ci);
      queue.push_back(img);
    }
  }
  GeneratedRoots out;
  for (const auto& [w, c] : seen) {
    bool nonneg = true, nonpos = true;
    for (long x : c) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    if (!nonneg && !nonpos)
      throw std::logic_error("root generation: mixed-sign coefficient vector");
    if (nonneg) {
      out.positives.push_back(w);
      out.coords.push_back(c);
    }
  }
  return out;
}

long height_of(const std::vector<long>& c) {
  long h = 0;
  for (long x : c) h += x;
  return h;
}

void sort_by_height_then_lex(GeneratedRoots& g) {
  std::vector<std::size_t> idx(g.positives.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    long ha = height_of(g.coords[a]), hb = height_of(g.coords[b]);
    if (ha != hb) return ha < hb;
    return g.positives[a] < g.positives[b];
  });
  GeneratedRoots sorted;
  for (std::size_t i : idx) {
    sorted.positives.push_back(g.positives[i]);
    sorted.coords.push_back(g.coords[i]);
  }
  g = std::move(sorted);
}

void finalize(RootSystem& rs, GeneratedRoots g) {
  sort_by_height_then_lex(g);
  rs.positive_roots = g.positives;
  rs.positive_coords = g.coords;
  rs.positive_sorted = g.positives;
  std::sort(rs.positive_sorted.begin(), rs.positive_sorted.end());
  Weight sum(static_cast<std::size_t>(rs.ambient));
  for (const auto& w : rs.positive_roots) sum = sum + w;
  rs.rho = Rational(1, 2) * sum;
}

}  // namespace

Rational coroot_pairing(const BilinearForm& form, const Weight& w,
                        const Weight& root) {
  if (root.is_zero()) throw ZeroRoot("coroot pairing against the zero vector");
  Rational n2 = form.inner(root, root);
  return 2 * form.inner(w, root) / n2;
}

RootSystem build_root_system(Series series, int rank) {
  if (series == Series::Derived)
    throw UnsupportedSeries("derived systems come from sub_root_system");
  if (rank < 1) throw InvalidRank("rank must be at least 1");
  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  switch (series) {
    case Series::A: {
      rs.ambient = rank + 1;
      rs.form = scaled_identity_form(rs.ambient, 1);
      for (int i = 0; i < rank; ++i)
        rs.simple_roots.push_back(unit(rs.ambient, i) - unit(rs.ambient, i + 1));
      break;
    }
    case Series::B: {
      rs.ambient = rank;
      rs.form = scaled_identity_form(rs.ambient, rank == 1 ? Rational(2) : Rational(1));
      for (int i = 0; i + 1 < rank; ++i)
        rs.simple_roots.push_back(unit(rank, i) - unit(rank, i + 1));
      rs.simple_roots.push_back(unit(rank, rank - 1));
      break;
    }
    case Series::C: {
      rs.ambient = rank;
      rs.form = scaled_identity_form(rs.ambient, Rational(1, 2));
      for (int i = 0; i + 1 < rank; ++i)
        rs.simple_roots.push_back(unit(rank, i) - unit(rank, i + 1));
      rs.simple_roots.push_back(Rational(2) * unit(rank, rank - 1));
      break;
    }
    case Series::D: {
      if (rank < 2) throw InvalidRank("series D needs rank >= 2");
      rs.ambient = rank;
      rs.form = scaled_identity_form(rs.ambient, 1);
      for (int i = 0; i + 1 < rank; ++i)
        rs.simple_roots.push_back(unit(rank, i) - unit(rank, i + 1));
      rs.simple_roots.push_back(unit(rank, rank - 2) + unit(rank, rank - 1));
      break;
    }
    case Series::G2: {
      if (rank != 2) throw InvalidRank("G2 has rank 2");
      rs.ambient = 2;
      rs.form.gram = {{Rational(2, 3), Rational(-1)},
                      {Rational(-1), Rational(2)}};
      rs.simple_roots.push_back(Weight{Rational(1), Rational(0)});
      rs.simple_roots.push_back(Weight{Rational(0), Rational(1)});
      break;
    }
    case Series::Derived:
      break;  // unreachable
  }
  finalize(rs, close_under_reflections(rs.simple_roots, rs.form));
  return rs;
}

RootSystem sub_root_system(const RootSystem& parent,
                           const std::vector<Weight>& generators) {
  for (const auto& g : generators) {
    if (g.is_zero()) throw ZeroRoot("subsystem generator is the zero vector");
    if (!parent.is_root(g))
      throw NotARoot("generator " + g.str() + " is not a root of the parent");
  }
  // Symmetric sum-closure: the root sets of equal-rank subalgebras are the
  // subsets closed under negation and under addition inside the parent.
  std::set<Weight> closed;
  for (const auto& g : generators) {
    closed.insert(g);
    closed.insert(-g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Weight> members(closed.begin(), closed.end());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i; j < members.size(); ++j) {
        Weight s = members[i] + members[j];
        if (s.is_zero() || closed.count(s) || !parent.is_root(s)) continue;
        closed.insert(s);
        closed.insert(-s);
        grew = true;
      }
  }

  RootSystem rs;
  rs.series = Series::Derived;
  rs.ambient = parent.ambient;
  rs.form = parent.form;

  std::vector<Weight> positives;
  for (const auto& w : closed)
    if (parent.is_positive_root(w)) positives.push_back(w);

  // Simple roots of the subsystem: positives that are not sums of two
  // positives of the subsystem.
  std::set<Weight> pos_set(positives.begin(), positives.end());
  for (const auto& a : positives) {
    bool decomposable = false;
    for (const auto& b : positives) {
      if (decomposable) break;
      Weight rem = a - b;
      if (!rem.is_zero() && pos_set.count(rem)) decomposable = true;
    }
    if (!decomposable) rs.simple_roots.push_back(a);
  }
  std::sort(rs.simple_roots.begin(), rs.simple_roots.end());
  rs.rank = static_cast<int>(rs.simple_roots.size());

  GeneratedRoots g;
  for (const auto& w : positives) {
    auto c = span_coords(rs.form, rs.simple_roots, w);
    if (!c)
      throw ClosureViolation("subsystem positive root " + w.str() +
                             " is outside the span of its simple roots");
    std::vector<long> ci;
    for (const auto& x : *c) {
      if (!is_integer(x) || x < 0)
        throw ClosureViolation("subsystem root " + w.str() +
                               " is not a nonnegative integer combination "
                               "of the subsystem simple roots");
      ci.push_back(static_cast<long>(x.get_num().get_si()));
    }
    g.positives.push_back(w);
    g.coords.push_back(ci);
  }
  finalize(rs, std::move(g));
  return rs;
}

std::vector<Weight> fundamental_weights(const RootSystem& rs) {
  const std::size_t r = rs.simple_roots.size();
  std::vector<Weight> out;
  for (std::size_t i = 0; i < r; ++i) {
    // omega_i = sum_j x_j alpha_j with <omega_i, alpha_k^v> = delta_ik.
    RatMat a(r, std::vector<Rational>(r));
    std::vector<Rational> b(r);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t j = 0; j < r; ++j)
        a[k][j] = coroot_pairing(rs.form, rs.simple_roots[j],
                                 rs.simple_roots[k]);
      b[k] = (k == i) ? 1 : 0;
    }
    auto x = solve_square(std::move(a), std::move(b));
    if (!x) throw std::logic_error("fundamental_weights: dependent simple roots");
    Weight w(static_cast<std::size_t>(rs.ambient));
    for (std::size_t j = 0; j < r; ++j) w = w + (*x)[j] * rs.simple_roots[j];
    out.push_back(w);
  }
  return out;
}

bool is_subsystem_of(const RootSystem& eta, const RootSystem& g) {
  if (eta.ambient != g.ambient) return false;
  if (eta.form.gram != g.form.gram) return false;
  for (const auto& a : eta.positive_roots)
    if (!g.is_root(a)) return false;
  return true;
}

}  // namespace coset
