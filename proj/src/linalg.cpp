// linalg.cpp - exact rational linear algebra kernels.
#include "coset/linalg.hpp"

#include <stdexcept>

namespace coset {

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("solve_square: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::optional<RatVec> span_coords(const BilinearForm& form,
                                  const std::vector<Weight>& basis,
                                  const Weight& w) {
  const std::size_t k = basis.size();
  if (k == 0) return w.is_zero() ? std::optional<RatVec>(RatVec{}) : std::nullopt;
  RatMat g(k, RatVec(k));
  RatVec b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g[i][j] = form.inner(basis[i], basis[j]);
    b[i] = form.inner(basis[i], w);
  }
  auto c = solve_square(std::move(g), std::move(b));
  if (!c) throw std::logic_error("span_coords: dependent basis");
  // The normal equations always have a solution; membership needs an exact
  // reconstruction check.
  Weight rec(w.dim());
  for (std::size_t i = 0; i < k; ++i) rec = rec + (*c)[i] * basis[i];
  if (rec != w) return std::nullopt;
  return c;
}

LdlFactors ldl_decompose(const RatMat& g) {
  const std::size_t n = g.size();
  LdlFactors f;
  f.l.assign(n, RatVec(n, Rational(0)));
  f.d.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    f.l[i][i] = 1;
    for (std::size_t j = 0; j <= i; ++j) {
      Rational s = g[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= f.l[i][k] * f.l[j][k] * f.d[k];
      if (j == i) {
        if (s <= 0) throw std::logic_error("ldl_decompose: not positive definite");
        f.d[i] = s;
      } else {
        f.l[i][j] = s / f.d[j];
      }
    }
  }
  return f;
}

namespace {

// Smallest integer radius r with r >= sqrt(x) for rational x >= 0, as a
// rational over x's denominator, so the candidate range never undershoots.
Rational sqrt_upper(const Rational& x) {
  if (x < 0) return Rational(-1);
  Integer pq = x.get_num() * x.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
  Rational r{root + 1, x.get_den()};
  r.canonicalize();
  return r;
}

struct LatticeEnum {
  const std::vector<Weight>* basis;
  const Weight* t;
  bool nonnegative;
  LdlFactors f;
  RatVec mu;        // center shift: c = -mu minimizes the form
  Rational budget;  // total allowance for sum_i d_i z_i^2
  std::vector<long> c;
  const std::function<void(const std::vector<long>&, const Weight&)>* visit;

  // Assign coordinate i given the budget left after coordinates > i.
  void descend(std::size_t i_plus_1, const Rational& remaining) {
    if (i_plus_1 == 0) {
      Weight x = *t;
      for (std::size_t j = 0; j < basis->size(); ++j)
        x = x + Rational(c[j]) * (*basis)[j];
      (*visit)(c, x);
      return;
    }
    const std::size_t i = i_plus_1 - 1;
    // z_i = (c_i + mu_i) + sum_{j>i} L_ji (c_j + mu_j)
    Rational off = mu[i];
    for (std::size_t j = i + 1; j < c.size(); ++j)
      off += f.l[j][i] * (Rational(c[j]) + mu[j]);
    Rational r2 = remaining / f.d[i];
    Rational rad = sqrt_upper(r2);
    if (rad < 0) return;
    Integer lo = ceil_rat(-off - rad);
    Integer hi = floor_rat(-off + rad);
    if (nonnegative && lo < 0) lo = 0;
    for (Integer m = lo; m <= hi; ++m) {
      Rational z = Rational(m) + off;
      Rational used = f.d[i] * z * z;
      if (used > remaining) continue;
      c[i] = m.get_si();
      descend(i, remaining - used);
    }
  }
};

}  // namespace

void enumerate_shifted_lattice(
    const BilinearForm& form, const std::vector<Weight>& basis,
    const Weight& t, const Rational& bound, bool nonnegative,
    const std::function<void(const std::vector<long>&, const Weight&)>& visit) {
  const std::size_t k = basis.size();
  if (k == 0) {
    if (form.inner(t, t) <= bound) visit({}, t);
    return;
  }
  RatMat g(k, RatVec(k));
  RatVec lin(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g[i][j] = form.inner(basis[i], basis[j]);
    lin[i] = form.inner(basis[i], t);
  }
  // (t + Vc, t + Vc) = (c+mu)^T G (c+mu) + (t,t) - mu^T G mu  with  G mu = lin.
  auto mu = solve_square(g, lin);
  if (!mu) throw std::logic_error("enumerate_shifted_lattice: dependent basis");
  Rational shift = 0;
  for (std::size_t i = 0; i < k; ++i) shift += (*mu)[i] * lin[i];
  Rational budget = bound - form.inner(t, t) + shift;
  if (budget < 0) return;

  LatticeEnum e;
  e.basis = &basis;
  e.t = &t;
  e.nonnegative = nonnegative;
  e.f = ldl_decompose(g);
  e.mu = *mu;
  e.budget = budget;
  e.c.assign(k, 0);
  e.visit = &visit;
  e.descend(k, budget);
}

}  // namespace coset
