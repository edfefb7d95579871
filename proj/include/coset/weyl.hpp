// weyl.hpp - Weyl groups as exact matrices: reflections, closure
// enumeration, dominance, and coset transversals.
#ifndef COSET_WEYL_HPP
#define COSET_WEYL_HPP

#include <string>
#include <vector>

#include "coset/rootsys.hpp"

namespace coset {

// Orthogonal transformation of the ambient space.  In every realization this
// library ships, Weyl reflections preserve an integer coordinate lattice, so
// entries are stored as exact integers (a strict subset of the rationals the
// contract promises).  `sign` is the determinant.
struct WeylElement {
  int n = 0;
  std::vector<long> mat;  // row-major n*n
  int sign = 1;

  static WeylElement identity(int n);

  long at(int i, int j) const { return mat[static_cast<std::size_t>(i) * n + j]; }
  long& at(int i, int j) { return mat[static_cast<std::size_t>(i) * n + j]; }

  bool is_identity() const;
  Weight apply(const Weight& w) const;

  // Composition: (a * b)(x) = a(b(x)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.n == b.n && a.mat == b.mat;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.mat < b.mat;
  }
};

// s_root(w) = w - <w, root^v> root.
Weight reflect(const BilinearForm& form, const Weight& root, const Weight& w);

// The reflection as a matrix; throws std::logic_error if the entries fail to
// be integers (cannot happen for roots of the shipped realizations).
WeylElement reflection_element(const BilinearForm& form, const Weight& root);

struct WeylGroup {
  std::vector<WeylElement> elements;    // breadth-first by word length,
                                        // lexicographic inside each level
  std::vector<int> lengths;             // word length per element
  std::vector<WeylElement> generators;  // reflections in the simple roots
};

inline constexpr long kDefaultWeylLimit = 10000000;

// Closure of the simple reflections; GroupTooLarge if the element count
// would exceed `limit`.
WeylGroup enumerate_weyl(const RootSystem& rs, long limit = kDefaultWeylLimit);

bool is_dominant(const RootSystem& rs, const Weight& w, bool strict);

// u with u(w) dominant; picks the lowest-index violated simple root each
// step, so the result is deterministic (and the dominant representative is
// unique regardless).
struct DominantRep {
  WeylElement u;
  Weight dominant;
};
DominantRep to_dominant(const RootSystem& rs, const Weight& w);

// { c in W_g : c(rho_g) strictly eta-dominant }, in the enumeration order of
// `wg`.  One representative per W_eta coset.
std::vector<WeylElement> coset_transversal(const RootSystem& g,
                                           const RootSystem& eta,
                                           const WeylGroup& wg);

}  // namespace coset

#endif
