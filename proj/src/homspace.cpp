// homspace.cpp - equal-rank pairs and spectrum enumeration.
#include "coset/homspace.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <stdexcept>

#include "coset/parallel.hpp"

#ifdef COSET_HAVE_OPENMP
#include <omp.h>
#endif

namespace coset {

const WeylGroup& EqualRankPair::weyl_g(long limit) const {
  std::lock_guard<std::mutex> lock(shared->mutex);
  if (!shared->wg) shared->wg = enumerate_weyl(g, limit);
  return *shared->wg;
}

const std::vector<WeylElement>& EqualRankPair::transversal(long limit) const {
  weyl_g(limit);
  std::lock_guard<std::mutex> lock(shared->mutex);
  if (!shared->transversal)
    shared->transversal = coset_transversal(g, eta, *shared->wg);
  return *shared->transversal;
}

const std::vector<std::pair<Weight, long long>>& EqualRankPair::branching(
    const Weight& hw) const {
  {
    std::lock_guard<std::mutex> lock(shared->mutex);
    auto it = shared->branchings.find(hw);
    if (it != shared->branchings.end()) return *it->second;
  }
  auto chi = character_ptr(g, hw);
  auto dec = std::make_shared<const std::vector<std::pair<Weight, long long>>>(
      decompose(eta, *chi));
  std::lock_guard<std::mutex> lock(shared->mutex);
  return *shared->branchings.emplace(hw, dec).first->second;
}

EqualRankPair make_equal_rank_pair(const RootSystem& g, const RootSystem& eta) {
  if (!is_subsystem_of(eta, g))
    throw NotASubsystem(
        "the subgroup root system is not contained in the group's (ambient "
        "space, form and roots must all match)");
  EqualRankPair p;
  p.g = g;
  p.eta = eta;
  p.rho_g = g.rho;
  p.rho_eta = eta.rank == 0 ? Weight(static_cast<std::size_t>(g.ambient)) : eta.rho;
  for (const auto& a : g.positive_roots)
    if (!eta.is_positive_root(a)) p.m_positive.push_back(a);
  // A subsystem built over the same positivity has all its positive roots
  // among g's; anything else would make the complement count inconsistent.
  if (p.m_positive.size() + eta.positive_roots.size() != g.positive_roots.size())
    throw NotASubsystem(
        "the subgroup's positive roots must be positive roots of g");
  p.shared = std::make_shared<EqualRankPair::Shared>();
  return p;
}

EqualRankPair make_equal_rank_pair(const RootSystem& g,
                                   const std::vector<Weight>& eta_generators) {
  return make_equal_rank_pair(g, sub_root_system(g, eta_generators));
}

SpinModules spin_modules(const EqualRankPair& pair) {
  const std::size_t k = pair.m_positive.size();
  if (k == 0)
    throw EmptyComplement("eta equals g: the isotropy representation is zero");
  SpinModules s;
  s.plus = VirtualCharacter(pair.g.ambient);
  s.minus = VirtualCharacter(pair.g.ambient);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Weight w(static_cast<std::size_t>(pair.g.ambient));
    int minus_signs = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        w = w - pair.m_positive[i];
        ++minus_signs;
      } else {
        w = w + pair.m_positive[i];
      }
    }
    (minus_signs % 2 == 0 ? s.plus : s.minus).add(Rational(1, 2) * w, 1);
  }
  return s;
}

void require_eta_label(const EqualRankPair& pair, const Weight& mu) {
  if (static_cast<int>(mu.dim()) != pair.g.ambient)
    throw DimensionMismatch("bundle weight has " + std::to_string(mu.dim()) +
                            " coordinates, the pair lives in " +
                            std::to_string(pair.g.ambient));
  if (!is_dominant(pair.eta, mu, false))
    throw NotDominant("bundle weight " + mu.str() +
                      " is not dominant for the subgroup");
  for (const auto& a : pair.g.simple_roots)
    if (!is_integer(coroot_pairing(pair.g.form, mu, a)))
      throw NotIntegral("bundle weight " + mu.str() +
                        " is not integral for the coroots of g");
}

namespace {

void require_g_label(const EqualRankPair& pair, const Weight& lambda) {
  if (static_cast<int>(lambda.dim()) != pair.g.ambient)
    throw DimensionMismatch("g-type has wrong coordinate count");
  if (!is_dominant(pair.g, lambda, false))
    throw NotDominant("g-type " + lambda.str() + " is not dominant");
  if (!is_integral_weight(pair.g, lambda))
    throw NotIntegral("g-type " + lambda.str() + " is not integral");
}

}  // namespace

Rational eigenvalue(const EqualRankPair& pair, const Weight& lambda,
                    const Weight& mu) {
  require_g_label(pair, lambda);
  require_eta_label(pair, mu);
  const BilinearForm& f = pair.g.form;
  Weight lt = lambda + pair.rho_g;
  Weight mt = mu + pair.rho_eta;
  return f.inner(lt, lt) - f.inner(mt, mt) - f.inner(pair.rho_g, pair.rho_g) +
         f.inner(pair.rho_eta, pair.rho_eta);
}

std::optional<KostantLowest> kostant_lowest(const EqualRankPair& pair,
                                            const Weight& mu) {
  require_eta_label(pair, mu);
  const BilinearForm& f = pair.g.form;
  Weight x = mu + pair.rho_eta;
  DominantRep rep = to_dominant(pair.g, x);
  // The dominant translate is the only candidate: a weakly dominant
  // w(x) - rho_g forces w(x) strictly dominant.  On a wall there is none.
  if (!is_dominant(pair.g, rep.dominant, /*strict=*/true)) return std::nullopt;
  Weight lambda = rep.dominant - pair.rho_g;
  if (!is_dominant(pair.g, lambda, false)) return std::nullopt;
  // Pairs whose rho_eta falls outside the weight lattice can shift mu+rho_eta
  // to a dominant but non-integral position; no irreducible attains the
  // bound there, so the level is not attained.
  if (!is_integral_weight(pair.g, lambda)) return std::nullopt;

  KostantLowest out;
  out.lambda = lambda;
  out.energy = f.inner(pair.rho_eta, pair.rho_eta) - f.inner(pair.rho_g, pair.rho_g);
  Rational m = 1;
  for (const auto& a : pair.g.positive_roots)
    m *= f.inner(rep.dominant, a) / f.inner(pair.rho_g, a);
  if (!is_integer(m) || m <= 0)
    throw std::logic_error("lowest-level multiplicity is not a positive integer");
  out.multiplicity = m.get_num();
  return out;
}

Rational default_cutoff(const EqualRankPair& pair, const Weight& mu) {
  Weight mt = mu + pair.rho_eta;
  return 4 * pair.g.form.inner(mt, mt) + 100;
}

namespace {

bool in_root_lattice(const RootSystem& rs, const Weight& w) {
  auto c = span_coords(rs.form, rs.simple_roots, w);
  if (!c) return false;
  for (const auto& x : *c)
    if (!is_integer(x)) return false;
  return true;
}

}  // namespace

std::vector<SpectralLine> spectrum(const EqualRankPair& pair, const Weight& mu,
                                   std::size_t max_lines,
                                   std::optional<Rational> hard_cutoff) {
  require_eta_label(pair, mu);
  const BilinearForm& f = pair.g.form;
  const Rational cutoff = hard_cutoff ? *hard_cutoff : default_cutoff(pair, mu);

  // Candidates: dominant integral lambda sharing mu's component orthogonal
  // to the root span, with (lambda+rho_g)^2 <= cutoff.  The fundamental
  // weights have pairwise nonnegative inner products, so the ellipsoid
  // enumeration over their nonnegative span terminates quickly.
  auto omega = fundamental_weights(pair.g);
  Weight off = mu;
  for (std::size_t i = 0; i < omega.size(); ++i)
    off = off - coroot_pairing(f, mu, pair.g.simple_roots[i]) * omega[i];

  struct Cand {
    Rational norm;
    Weight lambda;
  };
  std::vector<Cand> cands;
  enumerate_shifted_lattice(
      f, omega, off + pair.g.rho, cutoff, /*nonnegative=*/true,
      [&](const std::vector<long>&, const Weight& x) {
        Weight lambda = x - pair.g.rho;
        if (!in_root_lattice(pair.g, lambda - mu)) return;
        cands.push_back({f.inner(x, x), lambda});
      });
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.lambda < b.lambda;
  });

  const Rational base = f.inner(mu + pair.rho_eta, mu + pair.rho_eta) +
                        f.inner(pair.rho_g, pair.rho_g) -
                        f.inner(pair.rho_eta, pair.rho_eta);

  // Branching multiplicity of mu inside V_lambda restricted to eta.  The
  // weight multiplicity bounds it, so candidates whose weight system misses
  // mu entirely are rejected without the full decomposition.
  auto line_multiplicity = [&](const Weight& lambda) -> long long {
    auto chi = character_ptr(pair.g, lambda);
    if (chi->coefficient(mu) == 0) return 0;
    for (const auto& [hw, m] : pair.branching(lambda))
      if (hw == mu) return m;
    return 0;
  };

  std::vector<SpectralLine> lines;
  auto emit = [&](const Weight& lambda, const Rational& norm, long long m) {
    SpectralLine ln;
    ln.lambda = lambda;
    ln.energy = norm - base;
    ln.degeneracy = weyl_dimension(pair.g, lambda);
    ln.frobenius_multiplicity = m;
    lines.push_back(std::move(ln));
  };

  const std::size_t block =
      parallel::enabled() ? std::max(4 * static_cast<std::size_t>(parallel::max_threads()),
                                     std::size_t{8})
                          : 1;
  std::size_t i = 0;
  while (i < cands.size() && lines.size() < max_lines) {
    const std::size_t j = std::min(cands.size(), i + block);
    std::vector<long long> mult(j - i, 0);
#ifdef COSET_HAVE_OPENMP
    if (parallel::enabled() && j - i > 1) {
      std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
      for (std::size_t k = i; k < j; ++k) {
        try {
          mult[k - i] = line_multiplicity(cands[k].lambda);
        } catch (...) {
#pragma omp critical
          if (!err) err = std::current_exception();
        }
      }
      if (err) std::rethrow_exception(err);
    } else
#endif
    {
      for (std::size_t k = i; k < j; ++k)
        mult[k - i] = line_multiplicity(cands[k].lambda);
    }
    for (std::size_t k = i; k < j && lines.size() < max_lines; ++k)
      if (mult[k - i] > 0) emit(cands[k].lambda, cands[k].norm, mult[k - i]);
    i = j;
  }

  if (lines.empty())
    throw CutoffBeforeFirstLine(
        "no spectrum line below the cutoff " + rat_str(cutoff) +
        " for bundle weight " + mu.str() +
        "; raise the cutoff or check the lattice class of the weight");
  return lines;
}

std::vector<SpectralLine> landau_levels(std::vector<SpectralLine> lines,
                                        const Rational& scale) {
  if (scale <= 0)
    throw NonPositiveScale("energy scale must be positive, got " + rat_str(scale));
  for (auto& ln : lines) ln.energy *= scale;
  return lines;
}

}  // namespace coset
