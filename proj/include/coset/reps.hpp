// reps.hpp - highest-weight representation arithmetic: dimensions,
// characters, tensor products, decomposition, Casimir eigenvalues.
#ifndef COSET_REPS_HPP
#define COSET_REPS_HPP

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "coset/rootsys.hpp"

namespace coset {

// Finite formal sum of weights with nonzero integer coefficients.
struct VirtualCharacter {
  int ambient = 0;
  std::map<Weight, long long> terms;

  VirtualCharacter() = default;
  explicit VirtualCharacter(int dim) : ambient(dim) {}

  void add(const Weight& w, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  long long coefficient(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
  }

  // Signed sum of coefficients; equals the dimension for a true character.
  Integer mass() const {
    Integer m = 0;
    for (const auto& [w, c] : terms) m += static_cast<long>(c);
    return m;
  }

  bool empty() const { return terms.empty(); }

  friend VirtualCharacter operator+(const VirtualCharacter& a,
                                    const VirtualCharacter& b);
  friend VirtualCharacter operator-(const VirtualCharacter& a,
                                    const VirtualCharacter& b);
  friend VirtualCharacter operator-(const VirtualCharacter& a);
  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return a.ambient == b.ambient && a.terms == b.terms;
  }
};

// True when <w, alpha^v> is an integer for every simple root.
bool is_integral_weight(const RootSystem& rs, const Weight& w);

// Product of (hw+rho, a) / (rho, a) over the positive roots.  Requires hw
// dominant (NotDominant) and integral (NotIntegral).
Integer weyl_dimension(const RootSystem& rs, const Weight& hw);

// Full weight multiplicity map of the irreducible with highest weight hw,
// computed by the Freudenthal recursion over shells of constant depth.
// Results are memoized on the root system (copies share the cache) and do
// not depend on the parallel/serial execution path.
VirtualCharacter character(const RootSystem& rs, const Weight& hw);
std::shared_ptr<const VirtualCharacter> character_ptr(const RootSystem& rs,
                                                      const Weight& hw);

// Convolution; DimensionMismatch when ambient spaces differ.
VirtualCharacter multiply(const VirtualCharacter& a, const VirtualCharacter& b);

// Writes a W-invariant virtual character as an integer combination of
// irreducible characters by repeatedly peeling the maximal remaining
// dominant weight ((nu+rho, nu+rho) order, ties lexicographically largest).
// Returns (highest weight, coefficient) pairs in peel order.  Throws
// NotWInvariant when the input is not Weyl-invariant and NonIntegralPeel
// when peeling reaches a non-integral dominant weight.
std::vector<std::pair<Weight, long long>> decompose(const RootSystem& rs,
                                                    const VirtualCharacter& ch);

// (hw+rho, hw+rho) - (rho, rho) for weakly dominant hw.
Rational casimir(const RootSystem& rs, const Weight& hw);

}  // namespace coset

#endif
