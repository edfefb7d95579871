// gkrs.hpp - the equal-rank multiplet identity relating a g-character times
// the half-spin difference to the alternating sum of eta-characters over the
// dominant coset transversal.
#ifndef COSET_GKRS_HPP
#define COSET_GKRS_HPP

#include "coset/homspace.hpp"

namespace coset {

// c(lambda + rho_g) - rho_eta for a transversal element c; the labels of the
// eta-multiplet attached to lambda.  Throws NotInTransversal when c is not a
// member of the pair's dominant transversal.
Weight dotted_action(const EqualRankPair& pair, const WeylElement& c,
                     const Weight& lambda);

struct GkrsTerm {
  WeylElement c;
  int sign = 1;
  Weight label;  // c . lambda; weakly eta-dominant by construction of C
};

struct GkrsReport {
  Weight lambda;
  bool verified = false;
  VirtualCharacter lhs;          // char(g,lambda) * (S+ - S-)
  VirtualCharacter rhs;          // sum of signed eta-characters
  VirtualCharacter discrepancy;  // lhs - rhs, empty iff verified
  std::vector<GkrsTerm> terms;
};

// Verifies the multiplet identity for one lambda by exact expansion of both
// sides.  Throws EmptyComplement when eta = g.
GkrsReport gkrs_check(const EqualRankPair& pair, const Weight& lambda);

// All dominant-integral lambda of g with dim V_lambda <= dim_bound, ordered
// by ((lambda+rho)^2, lex).
std::vector<Weight> dominant_weights_with_dim_at_most(const RootSystem& rs,
                                                      const Integer& dim_bound);

// gkrs_check across the dimension-bounded sweep; reports in sweep order.
std::vector<GkrsReport> gkrs_sweep(const EqualRankPair& pair,
                                   const Integer& dim_bound);

}  // namespace coset

#endif
