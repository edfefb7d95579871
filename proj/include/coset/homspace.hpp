// homspace.hpp - equal-rank pairs (g, eta) and the Laplacian spectrum data
// attached to them: spin modules, eigenvalues, the closed-form lowest level,
// and the Frobenius-reciprocity spectrum enumeration.
#ifndef COSET_HOMSPACE_HPP
#define COSET_HOMSPACE_HPP

#include <memory>
#include <mutex>
#include <optional>

#include "coset/reps.hpp"
#include "coset/weyl.hpp"

namespace coset {

// A compact group with a closed equal-rank subgroup, described by the root
// systems of their complexified algebras over a common Cartan subalgebra.
// The complement roots Phi+_m = Phi+_g \ Phi+_eta describe the tangent space
// of G/H at the identity coset.
struct EqualRankPair {
  RootSystem g;
  RootSystem eta;
  std::vector<Weight> m_positive;  // in the positive-root order of g
  Weight rho_g, rho_eta;

  struct Shared;
  std::shared_ptr<Shared> shared;

  // Lazily enumerated data; the limit only matters for the first call.
  const WeylGroup& weyl_g(long limit = kDefaultWeylLimit) const;
  const std::vector<WeylElement>& transversal(long limit = kDefaultWeylLimit) const;

  // Decomposition of the restriction of the g-irreducible with highest
  // weight hw to eta, memoized per pair.
  const std::vector<std::pair<Weight, long long>>& branching(const Weight& hw) const;
};

struct EqualRankPair::Shared {
  std::mutex mutex;
  std::optional<WeylGroup> wg;
  std::optional<std::vector<WeylElement>> transversal;
  std::map<Weight, std::shared_ptr<const std::vector<std::pair<Weight, long long>>>>
      branchings;
};

EqualRankPair make_equal_rank_pair(const RootSystem& g, const RootSystem& eta);
EqualRankPair make_equal_rank_pair(const RootSystem& g,
                                   const std::vector<Weight>& eta_generators);

// The two half-spin modules of the isotropy representation, as virtual
// eta-characters: weights (1/2) sum s_a a over sign vectors s on Phi+_m,
// split by the parity of the minus signs (even parity lands in plus).
// Throws EmptyComplement when eta = g.
struct SpinModules {
  VirtualCharacter plus, minus;
};
SpinModules spin_modules(const EqualRankPair& pair);

// Checks that mu is weakly eta-dominant and integral for the coroots of g;
// these are the bundle parameters the spectrum operations accept.
void require_eta_label(const EqualRankPair& pair, const Weight& mu);

// Laplacian eigenvalue on sections of the mu-bundle at the g-type lambda:
// (lambda+rho_g)^2 - (mu+rho_eta)^2 - rho_g^2 + rho_eta^2.
Rational eigenvalue(const EqualRankPair& pair, const Weight& lambda,
                    const Weight& mu);

// Closed-form lowest level: the unique Weyl translate of mu+rho_eta landing
// on a weakly dominant lambda = w(mu+rho_eta) - rho_g, when one exists.  Its
// energy is rho_eta^2 - rho_g^2 independent of mu, with multiplicity
// prod (w(mu+rho_eta), a) / prod (rho_g, a) over the positive roots of g.
// Returns nullopt when mu+rho_eta lies on a wall of g (no dominant
// translate), in which case the closed-form lowest level does not exist.
struct KostantLowest {
  Weight lambda;
  Rational energy;
  Integer multiplicity;
};
std::optional<KostantLowest> kostant_lowest(const EqualRankPair& pair,
                                            const Weight& mu);

// One line of the Frobenius-reciprocity spectrum: a g-type lambda containing
// the bundle type mu in its restriction, with the Laplacian eigenvalue, the
// full degeneracy dim V_lambda, and the branching multiplicity of mu.
struct SpectralLine {
  Weight lambda;
  Rational energy;
  Integer degeneracy;
  long long frobenius_multiplicity = 0;
};

Rational default_cutoff(const EqualRankPair& pair, const Weight& mu);

// Enumerates dominant-integral lambda with lambda - mu in the root lattice
// of g in increasing (lambda+rho_g, lambda+rho_g) order (ties lexicographic)
// and keeps those whose restriction contains mu.  Stops after max_lines
// lines or once (lambda+rho_g)^2 exceeds the cutoff; the first line is a
// certified global minimum of the energy.  Throws CutoffBeforeFirstLine when
// nothing is found below the cutoff.
std::vector<SpectralLine> spectrum(const EqualRankPair& pair, const Weight& mu,
                                   std::size_t max_lines,
                                   std::optional<Rational> hard_cutoff = {});

// Multiplies every energy by scale (> 0, else NonPositiveScale); the
// magnetic-analogue rescaling of the level ladder.
std::vector<SpectralLine> landau_levels(std::vector<SpectralLine> lines,
                                        const Rational& scale);

}  // namespace coset

#endif
