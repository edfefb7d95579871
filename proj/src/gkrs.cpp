// gkrs.cpp - exact verification of the equal-rank multiplet identity.
#include "coset/gkrs.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "coset/parallel.hpp"

#ifdef COSET_HAVE_OPENMP
#include <omp.h>
#endif

namespace coset {

Weight dotted_action(const EqualRankPair& pair, const WeylElement& c,
                     const Weight& lambda) {
  const auto& transversal = pair.transversal();
  if (std::find(transversal.begin(), transversal.end(), c) == transversal.end())
    throw NotInTransversal(
        "the element is not one of the dominant coset representatives");
  return c.apply(lambda + pair.rho_g) - pair.rho_eta;
}

GkrsReport gkrs_check(const EqualRankPair& pair, const Weight& lambda) {
  SpinModules spin = spin_modules(pair);  // throws EmptyComplement for eta = g
  if (!is_dominant(pair.g, lambda, false))
    throw NotDominant("gkrs_check: " + lambda.str() + " is not dominant for g");
  if (!is_integral_weight(pair.g, lambda))
    throw NotIntegral("gkrs_check: " + lambda.str() + " is not integral for g");

  GkrsReport rep;
  rep.lambda = lambda;
  rep.lhs = multiply(*character_ptr(pair.g, lambda), spin.plus - spin.minus);

  rep.rhs = VirtualCharacter(pair.g.ambient);
  for (const auto& c : pair.transversal()) {
    GkrsTerm term;
    term.c = c;
    term.sign = c.sign;
    term.label = c.apply(lambda + pair.rho_g) - pair.rho_eta;
    auto u = character_ptr(pair.eta, term.label);
    if (term.sign > 0)
      rep.rhs = rep.rhs + *u;
    else
      rep.rhs = rep.rhs - *u;
    rep.terms.push_back(std::move(term));
  }

  rep.discrepancy = rep.lhs - rep.rhs;
  rep.verified = rep.discrepancy.empty();
  return rep;
}

std::vector<Weight> dominant_weights_with_dim_at_most(const RootSystem& rs,
                                                      const Integer& dim_bound) {
  // Weyl dimension is strictly increasing in each fundamental coordinate, so
  // a depth-first scan with pruning enumerates the finite sublevel set.
  std::vector<Weight> omega = fundamental_weights(rs);

  std::vector<Weight> found;
  Weight zero(static_cast<std::size_t>(rs.ambient));
  auto scan = [&](auto&& self, std::size_t i, const Weight& base) -> void {
    if (i == omega.size()) {
      found.push_back(base);
      return;
    }
    Weight w = base;
    for (;;) {
      if (weyl_dimension(rs, w) > dim_bound) break;
      self(self, i + 1, w);
      w = w + omega[i];
    }
  };
  if (weyl_dimension(rs, zero) <= dim_bound) scan(scan, 0, zero);

  std::sort(found.begin(), found.end(), [&](const Weight& a, const Weight& b) {
    Weight ta = a + rs.rho, tb = b + rs.rho;
    Rational na = rs.form.inner(ta, ta), nb = rs.form.inner(tb, tb);
    if (na != nb) return na < nb;
    return a < b;
  });
  return found;
}

std::vector<GkrsReport> gkrs_sweep(const EqualRankPair& pair,
                                   const Integer& dim_bound) {
  std::vector<Weight> lambdas =
      dominant_weights_with_dim_at_most(pair.g, dim_bound);
  pair.transversal();  // build once before the parallel region
  std::vector<GkrsReport> reports(lambdas.size());

#ifdef COSET_HAVE_OPENMP
  if (parallel::enabled() && lambdas.size() > 1) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      try {
        reports[i] = gkrs_check(pair, lambdas[i]);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return reports;
  }
#endif
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    reports[i] = gkrs_check(pair, lambdas[i]);
  return reports;
}

}  // namespace coset
