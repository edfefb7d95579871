// linalg.hpp - exact rational linear algebra: bilinear forms, Gaussian
// elimination, LDL^T, and lattice-point enumeration inside an ellipsoid.
#ifndef COSET_LINALG_HPP
#define COSET_LINALG_HPP

#include <functional>
#include <optional>
#include <vector>

#include "coset/weight.hpp"

namespace coset {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Symmetric positive-definite Gram matrix defining the invariant form.
struct BilinearForm {
  RatMat gram;

  std::size_t dim() const { return gram.size(); }

  Rational inner(const Weight& a, const Weight& b) const {
    if (a.dim() != dim() || b.dim() != dim())
      throw DimensionMismatch("inner product: form is " +
                              std::to_string(dim()) + "-dimensional, weights " +
                              std::to_string(a.dim()) + " and " +
                              std::to_string(b.dim()));
    Rational s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i] == 0) continue;
      Rational row = 0;
      for (std::size_t j = 0; j < dim(); ++j) row += gram[i][j] * b[j];
      s += a[i] * row;
    }
    return s;
  }
};

inline Rational inner(const BilinearForm& form, const Weight& a,
                      const Weight& b) {
  return form.inner(a, b);
}

inline BilinearForm scaled_identity_form(std::size_t n, const Rational& s) {
  BilinearForm f;
  f.gram.assign(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) f.gram[i][i] = s;
  return f;
}

// Solves A x = b exactly for square A; nullopt when A is singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);

// Coordinates of w in the span of `basis` (independent vectors), under the
// given form; nullopt when w is outside the span.
std::optional<RatVec> span_coords(const BilinearForm& form,
                                  const std::vector<Weight>& basis,
                                  const Weight& w);

// Unit-lower-triangular L and positive diagonal d with G = L diag(d) L^T.
// Throws std::logic_error if G is not positive definite.
struct LdlFactors {
  RatMat l;
  RatVec d;
};
LdlFactors ldl_decompose(const RatMat& g);

// Visits every integer vector c (componentwise c >= 0 when `nonnegative`)
// with (t + sum_i c_i v_i, same) <= bound under `form`.  The basis must be
// linearly independent, which makes the solution set finite.  Visit order is
// deterministic (last coordinate varies slowest, each coordinate ascending).
void enumerate_shifted_lattice(
    const BilinearForm& form, const std::vector<Weight>& basis,
    const Weight& t, const Rational& bound, bool nonnegative,
    const std::function<void(const std::vector<long>&, const Weight&)>& visit);

}  // namespace coset

#endif
