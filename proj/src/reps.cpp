// reps.cpp - dimensions, Freudenthal characters, tensor products and
// decomposition into irreducibles.
#include "coset/reps.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "coset/linalg.hpp"
#include "coset/parallel.hpp"
#include "coset/weyl.hpp"

#ifdef COSET_HAVE_OPENMP
#include <omp.h>
#endif

namespace coset {

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.ambient != b.ambient)
    throw DimensionMismatch("adding characters over different ambient spaces");
  VirtualCharacter r = a;
  for (const auto& [w, c] : b.terms) r.add(w, c);
  return r;
}

VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.ambient != b.ambient)
    throw DimensionMismatch("subtracting characters over different ambient spaces");
  VirtualCharacter r = a;
  for (const auto& [w, c] : b.terms) r.add(w, -c);
  return r;
}

VirtualCharacter operator-(const VirtualCharacter& a) {
  VirtualCharacter r(a.ambient);
  for (const auto& [w, c] : a.terms) r.terms.emplace(w, -c);
  return r;
}

bool is_integral_weight(const RootSystem& rs, const Weight& w) {
  for (const auto& a : rs.simple_roots)
    if (!is_integer(coroot_pairing(rs.form, w, a))) return false;
  return true;
}

namespace {

void require_label(const RootSystem& rs, const Weight& hw, const char* who) {
  if (static_cast<int>(hw.dim()) != rs.ambient)
    throw DimensionMismatch(std::string(who) + ": weight has " +
                            std::to_string(hw.dim()) + " coordinates, system " +
                            std::to_string(rs.ambient));
  if (!is_dominant(rs, hw, false))
    throw NotDominant(std::string(who) + ": " + hw.str() +
                      " is not dominant for the system");
  if (!is_integral_weight(rs, hw))
    throw NotIntegral(std::string(who) + ": " + hw.str() +
                      " has a non-integer coroot pairing");
}

}  // namespace

Integer weyl_dimension(const RootSystem& rs, const Weight& hw) {
  require_label(rs, hw, "weyl_dimension");
  Weight top = hw + rs.rho;
  Rational dim = 1;
  for (const auto& a : rs.positive_roots)
    dim *= rs.form.inner(top, a) / rs.form.inner(rs.rho, a);
  if (!is_integer(dim))
    throw std::logic_error("weyl_dimension: product is not an integer");
  return dim.get_num();
}

Rational casimir(const RootSystem& rs, const Weight& hw) {
  if (static_cast<int>(hw.dim()) != rs.ambient)
    throw DimensionMismatch("casimir: coordinate count mismatch");
  if (!is_dominant(rs, hw, false))
    throw NotDominant("casimir: " + hw.str() + " is not dominant");
  Weight top = hw + rs.rho;
  return rs.form.inner(top, top) - rs.form.inner(rs.rho, rs.rho);
}

// ---------------------------------------------------------------------------
// Freudenthal recursion.
// ---------------------------------------------------------------------------

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<long>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (long x : v)
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// Weight of the irreducible encoded as its depth vector (w = hw - sum c_i
// alpha_i) together with integer ambient coordinates scaled by the common
// denominator, so enumeration, orbit walks and string sums stay in integers.
struct Candidate {
  std::vector<long> c;
  std::vector<long> sc;
  long height = 0;
};

// Per-weight state: the multiplicity and, for each positive root beta_q, the
// scaled string sum above the weight,
//   t[q] = S * sum_{j >= 1} (w + j beta_q, beta_q) * m(w + j beta_q),
// which turns Freudenthal's inner sum into a single lookup per root.
struct Node {
  long long m = 0;
  std::vector<Integer> t;
};

using NodeMap = std::unordered_map<std::vector<long>, Node, VecHash>;

long pairing_to_long(const Rational& x) {
  if (!is_integer(x))
    throw std::logic_error("freudenthal: pairing is not an integer");
  Integer n = x.get_num();
  if (!n.fits_slong_p())
    throw std::logic_error("freudenthal: pairing overflows a machine word");
  return n.get_si();
}

VirtualCharacter freudenthal(const RootSystem& rs, const Weight& hw) {
  VirtualCharacter out(rs.ambient);
  const std::size_t r = rs.simple_roots.size();
  if (r == 0) {
    out.add(hw, 1);
    return out;
  }
  const std::size_t nroots = rs.positive_roots.size();
  const std::size_t amb = static_cast<std::size_t>(rs.ambient);

  // Common scale S = dg * d * d: d clears the coordinates of hw and hw + rho,
  // dg clears the Gram matrix, so every inner product below becomes an exact
  // integer after multiplication by S.
  const Weight top = hw + rs.rho;
  Integer d(1), dg(1);
  for (const auto& x : hw.coords) d = lcm(d, x.get_den());
  for (const auto& x : top.coords) d = lcm(d, x.get_den());
  for (const auto& row : rs.form.gram)
    for (const auto& g : row) dg = lcm(dg, g.get_den());
  const Rational scale(dg * d * d);
  auto sint = [&](const Rational& x) -> Integer {
    Rational y = x * scale;
    if (!is_integer(y))
      throw std::logic_error("freudenthal: pairing does not clear the scale");
    return y.get_num();
  };

  // Integer coordinates d * hw and d * alpha_i.
  auto scaled_coords = [&](const Weight& w) {
    std::vector<long> v(amb);
    for (std::size_t j = 0; j < amb; ++j) {
      Rational y = w.coords[j] * Rational(d);
      if (!is_integer(y) || !y.get_num().fits_slong_p())
        throw std::logic_error("freudenthal: coordinate does not clear the scale");
      v[j] = y.get_num().get_si();
    }
    return v;
  };
  const std::vector<long> dhw = scaled_coords(hw);
  std::vector<std::vector<long>> dalpha(r);
  for (std::size_t i = 0; i < r; ++i) dalpha[i] = scaled_coords(rs.simple_roots[i]);

  // Coroot pairings as plain longs: p[i] = <hw, alpha_i^vee> and
  // cart[i][j] = <alpha_j, alpha_i^vee>, so dominance tests and orbit
  // reflections cost a handful of word operations each.
  std::vector<long> p(r);
  std::vector<std::vector<long>> cart(r, std::vector<long>(r));
  for (std::size_t i = 0; i < r; ++i) {
    p[i] = pairing_to_long(coroot_pairing(rs.form, hw, rs.simple_roots[i]));
    for (std::size_t j = 0; j < r; ++j)
      cart[i][j] = pairing_to_long(
          coroot_pairing(rs.form, rs.simple_roots[j], rs.simple_roots[i]));
  }

  // Dominant weights of the module are exactly the dominant points of hw - Q+
  // (saturation).  The inverse Cartan matrix has nonnegative entries, so
  // Kc <= p together with c >= 0 forces c <= K^{-1}p; scanning that box and
  // keeping the dominant corners enumerates the candidates.
  std::vector<long> bmax(r);
  {
    RatMat k(r, RatVec(r));
    RatVec rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
      rhs[i] = p[i];
      for (std::size_t j = 0; j < r; ++j) k[i][j] = cart[i][j];
    }
    auto x = solve_square(k, rhs);
    if (!x) throw std::logic_error("freudenthal: Cartan matrix is singular");
    for (std::size_t i = 0; i < r; ++i) bmax[i] = floor_rat((*x)[i]).get_si();
  }

  std::vector<Candidate> cands;
  std::vector<long> cvec(r, 0);
  auto scan = [&](auto&& self, std::size_t k, std::vector<long> rem,
                  long height) -> void {
    if (k == r) {
      for (long v : rem)
        if (v < 0) return;
      Candidate cd;
      cd.c = cvec;
      cd.height = height;
      cd.sc = dhw;
      for (std::size_t i = 0; i < r; ++i)
        if (cvec[i] != 0)
          for (std::size_t j = 0; j < amb; ++j) cd.sc[j] -= cvec[i] * dalpha[i][j];
      cands.push_back(std::move(cd));
      return;
    }
    for (long v = 0; v <= bmax[k]; ++v) {
      cvec[k] = v;
      std::vector<long> next = rem;
      for (std::size_t i = 0; i < r; ++i) next[i] -= v * cart[i][k];
      self(self, k + 1, std::move(next), height + v);
    }
    cvec[k] = 0;
  };
  scan(scan, 0, p, 0);
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.sc < b.sc;
  });
  if (cands.empty() || cands.front().height != 0)
    throw std::logic_error("freudenthal: highest weight missing from candidate set");
  const long maxdepth = cands.back().height;

  // Scaled pairing tables: HB[q] = S(hw, beta_q), AB[i][q] = S(alpha_i,
  // beta_q), HA[i] = S(hw + rho, alpha_i) and AA[i][j] = S(alpha_i, alpha_j).
  std::vector<Integer> HB(nroots), HA(r);
  std::vector<std::vector<Integer>> AB(r, std::vector<Integer>(nroots));
  std::vector<std::vector<Integer>> AA(r, std::vector<Integer>(r));
  for (std::size_t q = 0; q < nroots; ++q) {
    HB[q] = sint(rs.form.inner(hw, rs.positive_roots[q]));
    for (std::size_t i = 0; i < r; ++i)
      AB[i][q] = sint(rs.form.inner(rs.simple_roots[i], rs.positive_roots[q]));
  }
  for (std::size_t i = 0; i < r; ++i) {
    HA[i] = sint(rs.form.inner(top, rs.simple_roots[i]));
    for (std::size_t j = 0; j < r; ++j)
      AA[i][j] = sint(rs.form.inner(rs.simple_roots[i], rs.simple_roots[j]));
  }

  NodeMap table;
  // Weights whose string sums are still to be filled, grouped by depth; the
  // stored references stay valid because unordered_map nodes never move.
  std::vector<std::vector<std::pair<const std::vector<long>*, Node*>>> pending(
      static_cast<std::size_t>(maxdepth) + 1);
  // Every orbit member as (scaled coordinates, multiplicity).
  std::vector<std::pair<std::vector<long>, long long>> raw;

  // S((hw+rho)^2 - (w+rho)^2) for the weight at depth vector c.
  auto denom_scaled = [&](const std::vector<long>& c) -> Integer {
    Integer total(0);
    for (std::size_t i = 0; i < r; ++i) {
      if (c[i] == 0) continue;
      total += HA[i] * (2 * c[i]);
      for (std::size_t j = 0; j < r; ++j)
        if (c[j] != 0) total -= AA[i][j] * (c[i] * c[j]);
    }
    return total;
  };

  // S * sum_{j>=1} (w + j beta_q, beta_q) m(w + j beta_q) for the weight at
  // depth vector c: the stored sum one step up the string plus that weight's
  // own term.  Reads only strictly shallower nodes, whose sums are final.
  auto string_sum = [&](const std::vector<long>& c, std::size_t q,
                        std::vector<long>& cc) -> Integer {
    const std::vector<long>& e = rs.positive_coords[q];
    for (std::size_t t = 0; t < r; ++t) {
      cc[t] = c[t] - e[t];
      if (cc[t] < 0) return Integer(0);
    }
    auto it = table.find(cc);
    if (it == table.end()) return Integer(0);  // weight strings are unbroken
    const Node& up = it->second;
    // S(w + beta_q, beta_q) with w + beta_q = hw - sum cc_i alpha_i.
    Integer wa = HB[q];
    for (std::size_t i = 0; i < r; ++i)
      if (cc[i] != 0) wa -= AB[i][q] * cc[i];
    return up.t[q] + wa * static_cast<long>(up.m);
  };

  auto weight_of_scaled = [&](const std::vector<long>& sc) {
    Weight w(amb);
    for (std::size_t j = 0; j < amb; ++j) {
      Rational x{Integer(sc[j]), d};
      x.canonicalize();
      w.coords[j] = x;
    }
    return w;
  };

  auto eval = [&](const Candidate& cd) -> long long {
    if (cd.height == 0) return 1;
    Integer num(0);
    std::vector<long> cc(r);
    for (std::size_t q = 0; q < nroots; ++q) num += string_sum(cd.c, q, cc);
    num *= 2;
    Integer den = denom_scaled(cd.c);
    Integer m;
    if (den > 0 && num > 0 && mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
      m = num / den;
    if (m <= 0 || !m.fits_slong_p())
      throw std::logic_error("freudenthal: multiplicity of " +
                             weight_of_scaled(cd.sc).str() +
                             " is not a positive integer");
    return m.get_si();
  };

  auto fill_row = [&](const std::vector<long>& c, Node& node) {
    node.t.assign(nroots, Integer(0));
    std::vector<long> cc(r);
    for (std::size_t q = 0; q < nroots; ++q) node.t[q] = string_sum(c, q, cc);
  };

  // Inserts the full Weyl orbit of a dominant weight, descending by simple
  // reflections; every member shares the multiplicity and lies strictly
  // deeper than the dominant representative.
  auto expand_orbit = [&](const Candidate& dom, long long m) {
    std::vector<std::pair<std::vector<long>, std::vector<long>>> stack;
    auto insert = [&](std::vector<long> c, std::vector<long> sc) {
      auto [it, fresh] = table.emplace(std::move(c), Node{m, {}});
      if (!fresh) return;
      long depth = 0;
      for (long v : it->first) depth += v;
      if (depth <= maxdepth)
        pending[static_cast<std::size_t>(depth)].push_back(
            {&it->first, &it->second});
      raw.emplace_back(sc, m);
      stack.emplace_back(it->first, std::move(sc));
    };
    insert(dom.c, dom.sc);
    while (!stack.empty()) {
      auto [c, sc] = std::move(stack.back());
      stack.pop_back();
      for (std::size_t i = 0; i < r; ++i) {
        long pr = p[i];
        for (std::size_t j = 0; j < r; ++j) pr -= c[j] * cart[i][j];
        if (pr <= 0) continue;
        std::vector<long> ci = c;
        ci[i] += pr;
        std::vector<long> sci = sc;
        for (std::size_t j = 0; j < amb; ++j) sci[j] -= pr * dalpha[i][j];
        insert(std::move(ci), std::move(sci));
      }
    }
  };

  // Depth levels in order: multiplicities of the level's dominant weights
  // first (they read only shallower shells, so each shell parallelises),
  // then orbit expansion, then string sums for everything at this depth.
  std::size_t ci = 0;
  for (long level = 0; level <= maxdepth; ++level) {
    std::size_t cj = ci;
    while (cj < cands.size() && cands[cj].height == level) ++cj;
    if (cj > ci) {
      std::vector<long long> shell(cj - ci);
#ifdef COSET_HAVE_OPENMP
      if (parallel::enabled() && cj - ci >= 16) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (std::size_t k = ci; k < cj; ++k) {
          try {
            shell[k - ci] = eval(cands[k]);
          } catch (...) {
#pragma omp critical
          if (!err) err = std::current_exception();
          }
        }
        if (err) std::rethrow_exception(err);
      } else
#endif
      {
        for (std::size_t k = ci; k < cj; ++k) shell[k - ci] = eval(cands[k]);
      }
      for (std::size_t k = ci; k < cj; ++k) expand_orbit(cands[k], shell[k - ci]);
    }
    ci = cj;
    auto& rows = pending[static_cast<std::size_t>(level)];
#ifdef COSET_HAVE_OPENMP
    if (parallel::enabled() && rows.size() >= 256) {
#pragma omp parallel for schedule(dynamic, 16)
      for (std::size_t k = 0; k < rows.size(); ++k)
        fill_row(*rows[k].first, *rows[k].second);
    } else
#endif
    {
      for (auto& [key, node] : rows) fill_row(*key, *node);
    }
  }

  // Scaled coordinates sort exactly like the weights themselves, so the
  // output map can be built front to back with hinted inserts.
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [sc, m] : raw)
    out.terms.emplace_hint(out.terms.end(), weight_of_scaled(sc), m);
  return out;
}

struct CharCacheBox : detail::OpaqueCache {
  std::map<Weight, std::shared_ptr<const VirtualCharacter>> chars;
};

std::shared_ptr<CharCacheBox> cache_of(const RootSystem& rs) {
  std::lock_guard<std::mutex> lock(rs.memo->mutex);
  auto box = std::dynamic_pointer_cast<CharCacheBox>(rs.memo->box);
  if (!box) {
    box = std::make_shared<CharCacheBox>();
    rs.memo->box = box;
  }
  return box;
}

}  // namespace

std::shared_ptr<const VirtualCharacter> character_ptr(const RootSystem& rs,
                                                      const Weight& hw) {
  require_label(rs, hw, "character");
  auto box = cache_of(rs);
  {
    std::lock_guard<std::mutex> lock(rs.memo->mutex);
    auto it = box->chars.find(hw);
    if (it != box->chars.end()) return it->second;
  }
  auto ch = std::make_shared<const VirtualCharacter>(freudenthal(rs, hw));
  std::lock_guard<std::mutex> lock(rs.memo->mutex);
  return box->chars.emplace(hw, ch).first->second;
}

VirtualCharacter character(const RootSystem& rs, const Weight& hw) {
  return *character_ptr(rs, hw);
}

// ---------------------------------------------------------------------------
// Tensor products.
// ---------------------------------------------------------------------------

VirtualCharacter multiply(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.ambient != b.ambient)
    throw DimensionMismatch("multiplying characters over different ambient spaces");
  const VirtualCharacter& small = a.terms.size() <= b.terms.size() ? a : b;
  const VirtualCharacter& large = (&small == &a) ? b : a;
  VirtualCharacter r(a.ambient);

#ifdef COSET_HAVE_OPENMP
  const std::size_t work = small.terms.size() * large.terms.size();
  if (parallel::enabled() && work >= 4096) {
    std::vector<const std::pair<const Weight, long long>*> lg;
    lg.reserve(large.terms.size());
    for (const auto& t : large.terms) lg.push_back(&t);
    const int nt = parallel::max_threads();
    std::vector<VirtualCharacter> part(static_cast<std::size_t>(nt),
                                       VirtualCharacter(a.ambient));
#pragma omp parallel num_threads(nt)
    {
      VirtualCharacter& mine = part[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::size_t i = 0; i < lg.size(); ++i)
        for (const auto& [ws, cs] : small.terms)
          mine.add(lg[i]->first + ws, lg[i]->second * cs);
    }
    // Integer accumulation commutes, so the merged map is identical to the
    // serial result whatever the thread count.
    for (const auto& p : part)
      for (const auto& [w, c] : p.terms) r.add(w, c);
    return r;
  }
#endif
  for (const auto& [wl, cl] : large.terms)
    for (const auto& [ws, cs] : small.terms) r.add(wl + ws, cl * cs);
  return r;
}

// ---------------------------------------------------------------------------
// Decomposition into irreducibles.
// ---------------------------------------------------------------------------

std::vector<std::pair<Weight, long long>> decompose(const RootSystem& rs,
                                                    const VirtualCharacter& ch) {
  if (ch.ambient != rs.ambient && !ch.empty())
    throw DimensionMismatch("decompose: character lives in a different space");

  // Invariance under the simple reflections generates the whole group.
  for (const auto& [w, c] : ch.terms)
    for (const auto& a : rs.simple_roots)
      if (ch.coefficient(reflect(rs.form, a, w)) != c)
        throw NotWInvariant("decompose: coefficient of " + w.str() +
                            " breaks Weyl invariance across root " + a.str());

  // Peel worklist ordered by (nu+rho, nu+rho) descending, then
  // lexicographically descending; holds dominant support weights only.
  struct PeelOrder {
    bool operator()(const std::pair<Rational, Weight>& x,
                    const std::pair<Rational, Weight>& y) const {
      if (x.first != y.first) return x.first > y.first;
      return y.second < x.second;
    }
  };
  std::set<std::pair<Rational, Weight>, PeelOrder> work;
  std::set<Weight> queued;

  VirtualCharacter rem = ch;
  auto enqueue = [&](const Weight& w) {
    if (!is_dominant(rs, w, false)) return;
    if (!queued.insert(w).second) return;
    Weight top = w + rs.rho;
    work.emplace(rs.form.inner(top, top), w);
  };
  for (const auto& [w, c] : rem.terms) enqueue(w);

  std::vector<std::pair<Weight, long long>> result;
  while (!work.empty()) {
    Weight nu = work.begin()->second;
    work.erase(work.begin());
    long long m = rem.coefficient(nu);
    if (m == 0) continue;
    if (!is_integral_weight(rs, nu))
      throw NonIntegralPeel("decompose: dominant weight " + nu.str() +
                            " is not integral, so the input is not a virtual "
                            "combination of irreducible characters");
    result.emplace_back(nu, m);
    auto piece = character_ptr(rs, nu);
    for (const auto& [w, c] : piece->terms) {
      rem.add(w, -m * c);
      enqueue(w);
    }
  }
  if (!rem.empty())
    throw std::logic_error("decompose: nonzero remainder after peeling");
  return result;
}

}  // namespace coset
