#include <doctest.h>

#include <set>

#include "coset/linalg.hpp"
#include "coset/rootsys.hpp"

using namespace coset;

namespace {

Weight wt(std::vector<Rational> c) {
  Weight w(c.size());
  w.coords = std::move(c);
  return w;
}

}  // namespace

TEST_CASE("positive root counts match the classical formulas") {
  CHECK(build_root_system(Series::A, 2).positive_roots.size() == 3);
  CHECK(build_root_system(Series::A, 4).positive_roots.size() == 10);
  CHECK(build_root_system(Series::B, 2).positive_roots.size() == 4);
  CHECK(build_root_system(Series::B, 3).positive_roots.size() == 9);
  CHECK(build_root_system(Series::C, 3).positive_roots.size() == 9);
  CHECK(build_root_system(Series::D, 3).positive_roots.size() == 6);
  CHECK(build_root_system(Series::D, 4).positive_roots.size() == 12);
  CHECK(build_root_system(Series::G2, 2).positive_roots.size() == 6);
}

TEST_CASE("weyl vectors") {
  CHECK(build_root_system(Series::B, 1).rho == wt({Rational(1, 2)}));
  CHECK(build_root_system(Series::B, 2).rho ==
        wt({Rational(3, 2), Rational(1, 2)}));
  CHECK(build_root_system(Series::B, 3).rho ==
        wt({Rational(5, 2), Rational(3, 2), Rational(1, 2)}));
  CHECK(build_root_system(Series::D, 3).rho == wt({2, 1, 0}));
  CHECK(build_root_system(Series::G2, 2).rho == wt({5, 3}));
}

TEST_CASE("B1 uses the long-root normalization") {
  auto b1 = build_root_system(Series::B, 1);
  REQUIRE(b1.positive_roots.size() == 1);
  const Weight& a = b1.positive_roots[0];
  CHECK(a == wt({1}));
  CHECK(b1.form.inner(a, a) == 2);
}

TEST_CASE("long roots have squared length 2 in every series") {
  for (auto [s, r] : {std::pair{Series::A, 3}, {Series::B, 3}, {Series::C, 3},
                      {Series::D, 4}, {Series::G2, 2}}) {
    auto rs = build_root_system(s, r);
    Rational longest = 0;
    for (const auto& a : rs.positive_roots)
      longest = std::max(longest, rs.form.inner(a, a));
    CHECK(longest == 2);
  }
}

TEST_CASE("G2 realization in simple-root coordinates") {
  auto g2 = build_root_system(Series::G2, 2);
  CHECK(g2.ambient == 2);
  CHECK(g2.simple_roots[0] == wt({1, 0}));
  CHECK(g2.simple_roots[1] == wt({0, 1}));
  // short and long lengths
  CHECK(g2.form.inner(g2.simple_roots[0], g2.simple_roots[0]) ==
        Rational(2, 3));
  CHECK(g2.form.inner(g2.simple_roots[1], g2.simple_roots[1]) == 2);
  // the six positive roots
  std::set<Weight> pos(g2.positive_roots.begin(), g2.positive_roots.end());
  std::set<Weight> expect = {wt({1, 0}), wt({0, 1}), wt({1, 1}),
                             wt({2, 1}), wt({3, 1}), wt({3, 2})};
  CHECK(pos == expect);
}

TEST_CASE("unsupported and invalid inputs are rejected") {
  CHECK_THROWS_AS(parse_series("E"), UnsupportedSeries);
  CHECK_THROWS_AS(parse_series("F"), UnsupportedSeries);
  CHECK_THROWS_AS(parse_series("X"), UnsupportedSeries);
  CHECK_THROWS_AS(build_root_system(Series::A, 0), InvalidRank);
  CHECK_THROWS_AS(build_root_system(Series::B, 0), InvalidRank);
  CHECK_THROWS_AS(build_root_system(Series::D, 1), InvalidRank);
  CHECK_THROWS_AS(build_root_system(Series::G2, 3), InvalidRank);
}

TEST_CASE("positive roots are listed by height then lexicographically") {
  for (auto [s, r] : {std::pair{Series::A, 3}, {Series::B, 3},
                      {Series::C, 2}, {Series::D, 4}, {Series::G2, 2}}) {
    auto rs = build_root_system(s, r);
    REQUIRE(rs.positive_roots.size() == rs.positive_coords.size());
    long prev_height = 0;
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
      long h = 0;
      Weight rebuilt(static_cast<std::size_t>(rs.ambient));
      for (std::size_t j = 0; j < rs.simple_roots.size(); ++j) {
        long cj = rs.positive_coords[i][j];
        CHECK(cj >= 0);
        h += cj;
        rebuilt = rebuilt + Rational(cj) * rs.simple_roots[j];
      }
      CHECK(rebuilt == rs.positive_roots[i]);
      CHECK(h >= prev_height);
      if (i > 0 && h == prev_height)
        CHECK(rs.positive_roots[i - 1] < rs.positive_roots[i]);
      prev_height = h;
    }
  }
}

TEST_CASE("root sets are closed under their own reflections") {
  for (auto [s, r] :
       {std::pair{Series::A, 2}, {Series::B, 3}, {Series::G2, 2}}) {
    auto rs = build_root_system(s, r);
    for (const auto& a : rs.positive_roots)
      for (const auto& b : rs.positive_roots) {
        Weight im = b - coroot_pairing(rs.form, b, a) * a;
        CHECK(rs.is_root(im));
      }
  }
}

TEST_CASE("is_root and is_positive_root") {
  auto b2 = build_root_system(Series::B, 2);
  CHECK(b2.is_root(wt({1, -1})));
  CHECK(b2.is_root(wt({-1, 1})));
  CHECK(b2.is_positive_root(wt({1, -1})));
  CHECK(!b2.is_positive_root(wt({-1, 1})));
  CHECK(!b2.is_root(wt({2, 0})));
  CHECK(!b2.is_root(wt({0, 0})));
}

TEST_CASE("subsystem construction: D2 inside B2") {
  auto b2 = build_root_system(Series::B, 2);
  auto d2 = sub_root_system(b2, {wt({1, -1}), wt({1, 1})});
  CHECK(d2.series == Series::Derived);
  CHECK(d2.rank == 2);
  CHECK(d2.positive_roots.size() == 2);
  CHECK(d2.rho == wt({1, 0}));
  CHECK(is_subsystem_of(d2, b2));
  CHECK(!is_subsystem_of(b2, d2));
}

TEST_CASE("subsystem closure adds forced roots") {
  auto b2 = build_root_system(Series::B, 2);
  // (1,0) and (0,1) sum to the root (1,1), and (1,0)-(0,1)... -(0,1)+(1,0)
  // is not how closure works: it adds a+b when that is a root, here (1,1).
  auto sub = sub_root_system(b2, {wt({1, 0}), wt({0, 1})});
  CHECK(sub.positive_roots.size() == 4);  // all of B2: (1,-1) = (1,0)+(0,-1)
  auto a1 = sub_root_system(b2, {wt({1, 1})});
  CHECK(a1.positive_roots.size() == 1);
  CHECK(a1.rank == 1);
}

TEST_CASE("empty generator list gives the torus subsystem") {
  auto b3 = build_root_system(Series::B, 3);
  auto torus = sub_root_system(b3, {});
  CHECK(torus.rank == 0);
  CHECK(torus.positive_roots.empty());
  CHECK(torus.ambient == 3);
  CHECK(is_subsystem_of(torus, b3));
}

TEST_CASE("subsystem generators must be nonzero roots of the parent") {
  auto b2 = build_root_system(Series::B, 2);
  CHECK_THROWS_AS(sub_root_system(b2, {wt({0, 0})}), ZeroRoot);
  CHECK_THROWS_AS(sub_root_system(b2, {wt({2, 1})}), NotARoot);
  CHECK_THROWS_AS(sub_root_system(b2, {wt({1, 0, 0})}), NotARoot);
}

TEST_CASE("fundamental weights pair as the identity against coroots") {
  for (auto [s, r] : {std::pair{Series::A, 2}, {Series::B, 3},
                      {Series::C, 2}, {Series::D, 4}, {Series::G2, 2}}) {
    auto rs = build_root_system(s, r);
    auto omega = fundamental_weights(rs);
    REQUIRE(omega.size() == rs.simple_roots.size());
    for (std::size_t i = 0; i < omega.size(); ++i)
      for (std::size_t j = 0; j < omega.size(); ++j)
        CHECK(coroot_pairing(rs.form, omega[i], rs.simple_roots[j]) ==
              (i == j ? 1 : 0));
  }
}

TEST_CASE("G2 fundamental weights in simple-root coordinates") {
  auto g2 = build_root_system(Series::G2, 2);
  auto omega = fundamental_weights(g2);
  CHECK(omega[0] == wt({2, 1}));
  CHECK(omega[1] == wt({3, 2}));
}

TEST_CASE("rho is half the sum of the positive roots") {
  for (auto [s, r] : {std::pair{Series::B, 3}, {Series::G2, 2}}) {
    auto rs = build_root_system(s, r);
    Weight sum(static_cast<std::size_t>(rs.ambient));
    for (const auto& a : rs.positive_roots) sum = sum + a;
    CHECK(rs.rho == Rational(1, 2) * sum);
  }
}
