// spacespec.hpp - textual descriptions of a homogeneous space query and
// their realization as an equal-rank pair.
//
// Grammar (no whitespace):
//   <series><rank> "/" ( <named-sub> | "roots:" <root-list> )
//                  [";mu=" <rational-list>] [";scale=" <rational>]
//   named-sub      := "torus" | "full" | "D" <digits>
//   root-list      := rational-list ("|" rational-list)*
//   rational-list  := rational ("," rational)*
//   rational       := ["-"] digits ["/" digits]
//
// Examples: "B3/D3;mu=1/2,1/2,1/2", "B1/torus;mu=0", "G2/roots:1,0|3,2".
// Coordinates are ambient coordinates of the chosen realization; for A..D
// these are the usual orthogonal coordinates, for G2 they are coefficients
// in the basis of the two simple roots (short first).
#ifndef COSET_SPACESPEC_HPP
#define COSET_SPACESPEC_HPP

#include <optional>
#include <string>
#include <vector>

#include "coset/homspace.hpp"
#include "coset/rational.hpp"
#include "coset/rootsys.hpp"

namespace coset {

struct SpaceSpec {
  Series series = Series::A;
  int rank = 1;
  bool named = true;           // named selector vs explicit generator roots
  std::string sub_name;        // "torus", "full" or "D<k>" when named
  std::vector<std::vector<Rational>> sub_roots;  // generators when !named
  std::optional<std::vector<Rational>> mu;
  Rational scale = 1;
};

bool operator==(const SpaceSpec& a, const SpaceSpec& b);

// Throws ParseError (with offending position) on malformed text and
// UnsupportedSeries for the E/F families.  Purely syntactic: rank bounds,
// subsystem validity and coordinate counts are checked by realize().
SpaceSpec parse_space_spec(const std::string& text);

// Canonical text form; parse_space_spec(serialize(s)) == s for every value
// this type can hold.  Omits ";scale=" when the scale is 1.
std::string serialize(const SpaceSpec& spec);

struct RealizedSpace {
  EqualRankPair pair;
  std::optional<Weight> mu;
  Rational scale;
};

// Builds the group, the subgroup and the bundle weight.  Throws the core
// errors (InvalidRank, NotASubsystem, DimensionMismatch, NonPositiveScale,
// ...) when the spec is grammatical but meaningless.
RealizedSpace realize(const SpaceSpec& spec);

}  // namespace coset

#endif
