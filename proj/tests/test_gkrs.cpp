#include <doctest.h>

#include <algorithm>

#include "coset/gkrs.hpp"
#include "oracles.hpp"

using namespace coset;

namespace {

EqualRankPair b2_over_d2() {
  auto g = build_root_system(Series::B, 2);
  return make_equal_rank_pair(g, {Weight{1, -1}, Weight{1, 1}});
}

}  // namespace

TEST_CASE("dotted action shifts by the rho difference") {
  auto pair = b2_over_d2();
  const auto& c = pair.transversal();
  REQUIRE(c.size() == 2);
  Weight lambda{1, 0};
  CHECK(dotted_action(pair, c[0], lambda) ==
        lambda + pair.rho_g - pair.rho_eta);
  // the flip sends (5/2, 1/2) to (5/2, -1/2), then subtracts rho_eta
  CHECK(dotted_action(pair, c[1], lambda) ==
        Weight{Rational(3, 2), Rational(-1, 2)});
}

TEST_CASE("dotted action rejects elements outside the transversal") {
  auto pair = b2_over_d2();
  WeylElement swap = WeylElement::identity(2);
  swap.at(0, 0) = 0;
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  swap.at(1, 1) = 0;
  swap.sign = -1;
  CHECK_THROWS_AS(dotted_action(pair, swap, Weight{1, 0}), NotInTransversal);
}

TEST_CASE("multiplet identity for the 4-sphere, term by term") {
  auto pair = b2_over_d2();
  auto report = gkrs_check(pair, Weight{1, 0});
  CHECK(report.verified);
  CHECK(report.discrepancy.empty());
  CHECK(report.lhs == report.rhs);
  REQUIRE(report.terms.size() == 2);
  CHECK(report.terms[0].sign == 1);
  CHECK(report.terms[0].label == Weight{Rational(3, 2), Rational(1, 2)});
  CHECK(report.terms[1].sign == -1);
  CHECK(report.terms[1].label == Weight{Rational(3, 2), Rational(-1, 2)});
  for (const auto& t : report.terms)
    CHECK(is_dominant(pair.eta, t.label, false));
  // lhs really is char(lambda) * (S+ - S-)
  auto s = spin_modules(pair);
  CHECK(report.lhs ==
        multiply(character(pair.g, Weight{1, 0}), s.plus - s.minus));
}

TEST_CASE("multiplet identity across small sweeps") {
  auto pair = b2_over_d2();
  for (const auto& rep : gkrs_sweep(pair, 30)) CHECK(rep.verified);

  auto g2 = build_root_system(Series::G2, 2);
  auto flag = make_equal_rank_pair(
      g2, std::vector<Weight>{Weight{1, 0}, Weight{3, 2}});
  for (const auto& rep : gkrs_sweep(flag, 20)) CHECK(rep.verified);
}

TEST_CASE("multiplet identity on the long-root A1 pair of G2") {
  // rho_eta here is not a weight of G2, but the identity is still exact
  auto g2 = build_root_system(Series::G2, 2);
  auto pair = make_equal_rank_pair(g2, std::vector<Weight>{Weight{3, 2}});
  CHECK(pair.transversal().size() == 6);
  auto s = spin_modules(pair);
  CHECK(s.plus.mass() == 16);
  CHECK(s.minus.mass() == 16);
  auto report = gkrs_check(pair, Weight{0, 0});
  CHECK(report.verified);
  REQUIRE(report.terms.size() == 6);
  int sum = 0;
  for (const auto& t : report.terms) sum += t.sign;
  CHECK(sum == 0);  // three even cosets, three odd
  CHECK(gkrs_check(pair, Weight{2, 1}).verified);
}

TEST_CASE("identity needs a proper subgroup") {
  auto g = build_root_system(Series::B, 2);
  auto pair = make_equal_rank_pair(g, g);
  CHECK_THROWS_AS(gkrs_check(pair, Weight{1, 0}), EmptyComplement);
}

TEST_CASE("multiplet labels reproduce the closed-form lowest level") {
  // mu in the multiplet of lambda <=> the dotted action hits it; check that
  // kostant_lowest inverts the c = identity member
  auto pair = b2_over_d2();
  Weight lambda{1, 1};
  for (const auto& c : pair.transversal()) {
    Weight mu = dotted_action(pair, c, lambda);
    if (!is_dominant(pair.eta, mu, false)) continue;
    auto k = kostant_lowest(pair, mu);
    REQUIRE(k.has_value());
    CHECK(k->lambda == lambda);
    CHECK(k->multiplicity == weyl_dimension(pair.g, lambda));
  }
}

TEST_CASE("dimension-bounded dominant weight sweep") {
  auto b2 = build_root_system(Series::B, 2);
  auto small = dominant_weights_with_dim_at_most(b2, 1);
  REQUIRE(small.size() == 1);
  CHECK(small[0] == Weight{0, 0});
  CHECK(dominant_weights_with_dim_at_most(b2, 0).empty());

  auto upto30 = dominant_weights_with_dim_at_most(b2, 30);
  REQUIRE(upto30.size() == 8);
  for (std::size_t i = 0; i < upto30.size(); ++i) {
    CHECK(weyl_dimension(b2, upto30[i]) <= 30);
    if (i) {
      Rational a = b2.form.inner(upto30[i - 1] + b2.rho, upto30[i - 1] + b2.rho);
      Rational b = b2.form.inner(upto30[i] + b2.rho, upto30[i] + b2.rho);
      CHECK(a <= b);
      if (a == b) CHECK(upto30[i - 1] < upto30[i]);
    }
  }
  // half-integral classes are part of the sweep
  CHECK(std::count(upto30.begin(), upto30.end(),
                   Weight{Rational(1, 2), Rational(1, 2)}) == 1);

  auto g2 = build_root_system(Series::G2, 2);
  auto g2small = dominant_weights_with_dim_at_most(g2, 14);
  REQUIRE(g2small.size() == 3);
  CHECK(g2small[0] == Weight{0, 0});
  CHECK(g2small[1] == Weight{2, 1});   // the 7-dimensional fundamental
  CHECK(g2small[2] == Weight{3, 2});   // the adjoint
}

TEST_CASE("sweep reports come back in sweep order and verified") {
  auto pair = b2_over_d2();
  auto weights = dominant_weights_with_dim_at_most(pair.g, 30);
  auto reports = gkrs_sweep(pair, 30);
  REQUIRE(reports.size() == weights.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].lambda == weights[i]);
    CHECK(reports[i].verified);
    CHECK(reports[i].discrepancy.empty());
  }
}

TEST_CASE("restriction mass balances on both sides of the identity") {
  auto pair = b2_over_d2();
  auto report = gkrs_check(pair, Weight{2, 1});
  // mass of lhs: dim V_lambda * (dim S+ - dim S-) = 0 for equal halves
  CHECK(report.lhs.mass() == 0);
  CHECK(report.rhs.mass() == 0);
}
