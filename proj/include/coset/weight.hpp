// weight.hpp - vectors of exact rationals in the ambient coordinate space.
#ifndef COSET_WEIGHT_HPP
#define COSET_WEIGHT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "coset/errors.hpp"
#include "coset/rational.hpp"

namespace coset {

// A weight (or root) is just its coordinate vector; which bilinear form and
// root system it belongs with is supplied by the caller.
struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::size_t n) : coords(n, Rational(0)) {}
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    if (a.dim() != b.dim())
      throw DimensionMismatch("weight addition: " + std::to_string(a.dim()) +
                              " vs " + std::to_string(b.dim()) + " coords");
    Weight r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r.coords[i] = a[i] + b[i];
    return r;
  }

  friend Weight operator-(const Weight& a, const Weight& b) {
    if (a.dim() != b.dim())
      throw DimensionMismatch("weight subtraction: " + std::to_string(a.dim()) +
                              " vs " + std::to_string(b.dim()) + " coords");
    Weight r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r.coords[i] = a[i] - b[i];
    return r;
  }

  friend Weight operator-(const Weight& a) {
    Weight r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r.coords[i] = -a[i];
    return r;
  }

  friend Weight operator*(const Rational& s, const Weight& a) {
    Weight r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r.coords[i] = s * a[i];
    return r;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.coords == b.coords;
  }
  friend bool operator!=(const Weight& a, const Weight& b) {
    return !(a == b);
  }

  // Lexicographic order on coordinates; the tie-breaker used everywhere a
  // deterministic order is promised.
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i) s += ", ";
      s += rat_str(coords[i]);
    }
    return s + ")";
  }
};

inline bool all_integer(const Weight& w) {
  for (const auto& c : w.coords)
    if (!is_integer(c)) return false;
  return true;
}

}  // namespace coset

#endif
