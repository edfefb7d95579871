// rootsys.hpp - finite root systems in explicit rational coordinates.
//
// Realizations (the invariant form is normalized so long roots have squared
// length 2 in every simple factor):
//   A_n : ambient R^{n+1}, roots e_i - e_j, identity Gram.
//   B_n : ambient R^n, roots e_i +- e_j and e_i, identity Gram for n >= 2;
//         for n = 1 the sole root e_1 is long, so the Gram is [2].
//   C_n : ambient R^n, roots e_i +- e_j and 2 e_i, Gram (1/2) I.
//   D_n : ambient R^n (n >= 2), roots e_i +- e_j, identity Gram.
//   G2  : ambient R^2 in simple-root coordinates, alpha1 = (1,0) short,
//         alpha2 = (0,1) long, Gram [[2/3, -1], [-1, 2]].
#ifndef COSET_ROOTSYS_HPP
#define COSET_ROOTSYS_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "coset/linalg.hpp"
#include "coset/weight.hpp"

namespace coset {

enum class Series { A, B, C, D, G2, Derived };

std::string series_name(Series s);

// Maps a series letter ("A".."D", "G2") to the enum; E and F are recognized
// but rejected with an explanatory UnsupportedSeries.
Series parse_series(const std::string& s);

namespace detail {
// Anchor for memoized per-system data (computed characters).  Copies of a
// RootSystem share the anchor, so caches follow the value around.
struct OpaqueCache {
  virtual ~OpaqueCache() = default;
};
struct CacheAnchor {
  std::mutex mutex;
  std::shared_ptr<OpaqueCache> box;
};
}  // namespace detail

struct RootSystem {
  Series series = Series::Derived;
  int rank = 0;         // number of simple roots
  int ambient = 0;      // coordinate dimension
  BilinearForm form;    // shared with any subsystem derived from this one
  std::vector<Weight> simple_roots;
  // Positive roots ordered by height (sum of simple-root coefficients),
  // ties broken lexicographically on coordinates.
  std::vector<Weight> positive_roots;
  // Integer coefficients of each positive root over simple_roots.
  std::vector<std::vector<long>> positive_coords;
  // Lexicographically sorted copy of positive_roots, for membership tests.
  std::vector<Weight> positive_sorted;
  Weight rho;  // half the sum of the positive roots

  std::shared_ptr<detail::CacheAnchor> memo =
      std::make_shared<detail::CacheAnchor>();

  bool is_root(const Weight& w) const;
  bool is_positive_root(const Weight& w) const;
};

RootSystem build_root_system(Series series, int rank);

// Smallest subsystem of `parent` containing the generators: the symmetric
// sum-closure inside parent's root set (the subsets that occur as root
// systems of equal-rank reductive subalgebras).  Generators must be roots of
// the parent; an empty list yields the rank-0 (torus) system.
RootSystem sub_root_system(const RootSystem& parent,
                           const std::vector<Weight>& generators);

// 2 (w, root) / (root, root).
Rational coroot_pairing(const BilinearForm& form, const Weight& w,
                        const Weight& root);

// Fundamental weights inside the span of the roots: <omega_i, alpha_j^v> =
// delta_ij.  Dominant integral weights of the system are the nonnegative
// integer combinations, up to a component orthogonal to every root.
std::vector<Weight> fundamental_weights(const RootSystem& rs);

inline const Weight& weyl_vector(const RootSystem& rs) { return rs.rho; }

// True when every positive root of `eta` is a root of `g` (with matching
// ambient dimension): the containment make_equal_rank_pair relies on.
bool is_subsystem_of(const RootSystem& eta, const RootSystem& g);

}  // namespace coset

#endif
