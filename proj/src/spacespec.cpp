// spacespec.cpp - parsing, printing and realizing space specs.
#include "coset/spacespec.hpp"

#include <cctype>

namespace coset {

bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
  return a.series == b.series && a.rank == b.rank && a.named == b.named &&
         a.sub_name == b.sub_name && a.sub_roots == b.sub_roots &&
         a.mu == b.mu && a.scale == b.scale;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  bool eat(const std::string& word) {
    if (s.compare(pos, word.size(), word) != 0) return false;
    pos += word.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos);
  }
};

int parse_rank(Cursor& c) {
  std::size_t start = c.pos;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) c.fail("expected a rank after the series letter");
  if (c.pos - start > 4) throw ParseError("rank is absurdly large", start);
  return std::stoi(c.s.substr(start, c.pos - start));
}

Rational parse_rat(Cursor& c) {
  std::size_t start = c.pos;
  if (c.peek() == '-') ++c.pos;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.peek() == '/') {
    ++c.pos;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  }
  auto r = parse_rational(c.s.substr(start, c.pos - start));
  if (!r) throw ParseError("expected a rational number", start);
  return *r;
}

std::vector<Rational> parse_rat_list(Cursor& c) {
  std::vector<Rational> out;
  out.push_back(parse_rat(c));
  while (c.eat(',')) out.push_back(parse_rat(c));
  return out;
}

std::string join_rats(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  return out;
}

std::string series_letter(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::G2: return "G";
    case Series::Derived: break;
  }
  throw std::logic_error("series has no spec letter");
}

}  // namespace

SpaceSpec parse_space_spec(const std::string& text) {
  Cursor c{text};
  SpaceSpec spec;

  char letter = c.peek();
  if (letter < 'A' || letter > 'G')
    c.fail("expected a series letter (A, B, C, D or G)");
  ++c.pos;
  spec.series = parse_series(std::string(1, letter));
  spec.rank = parse_rank(c);

  if (!c.eat('/')) c.fail("expected '/' between the group and the subgroup");

  if (c.eat(std::string("roots:"))) {
    spec.named = false;
    spec.sub_roots.push_back(parse_rat_list(c));
    while (c.eat('|')) spec.sub_roots.push_back(parse_rat_list(c));
  } else {
    std::size_t start = c.pos;
    while (std::isalnum(static_cast<unsigned char>(c.peek()))) ++c.pos;
    std::string name = text.substr(start, c.pos - start);
    bool dk = name.size() >= 2 && name[0] == 'D' &&
              name.find_first_not_of("0123456789", 1) == std::string::npos;
    if (name != "torus" && name != "full" && !dk)
      throw ParseError("unknown subsystem name '" + name +
                           "' (expected torus, full, D<k> or roots:...)",
                       start);
    spec.named = true;
    spec.sub_name = name;
  }

  bool saw_mu = false, saw_scale = false;
  while (c.eat(';')) {
    if (c.eat(std::string("mu="))) {
      if (saw_mu) c.fail("duplicate mu clause");
      if (saw_scale) c.fail("mu must come before scale");
      spec.mu = parse_rat_list(c);
      saw_mu = true;
    } else if (c.eat(std::string("scale="))) {
      if (saw_scale) c.fail("duplicate scale clause");
      spec.scale = parse_rat(c);
      saw_scale = true;
    } else {
      c.fail("expected 'mu=' or 'scale=' after ';'");
    }
  }
  if (!c.done()) c.fail("unexpected trailing characters");
  return spec;
}

std::string serialize(const SpaceSpec& spec) {
  std::string out = series_letter(spec.series) + std::to_string(spec.rank) + "/";
  if (spec.named) {
    out += spec.sub_name;
  } else {
    out += "roots:";
    for (std::size_t i = 0; i < spec.sub_roots.size(); ++i) {
      if (i) out += "|";
      out += join_rats(spec.sub_roots[i]);
    }
  }
  if (spec.mu) out += ";mu=" + join_rats(*spec.mu);
  if (spec.scale != 1) out += ";scale=" + rat_str(spec.scale);
  return out;
}

namespace {

// Simple roots of D_k in the orthogonal coordinates of B_k.
std::vector<Weight> d_in_b_generators(int k) {
  std::vector<Weight> gens;
  auto basis = [&](int i, int j, Rational sj) {
    Weight w(static_cast<std::size_t>(k));
    w.coords[static_cast<std::size_t>(i)] = 1;
    w.coords[static_cast<std::size_t>(j)] = sj;
    return w;
  };
  for (int i = 0; i + 1 < k; ++i) gens.push_back(basis(i, i + 1, -1));
  if (k >= 2) gens.push_back(basis(k - 2, k - 1, 1));
  return gens;  // empty for k = 1: D_1 is the torus
}

}  // namespace

RealizedSpace realize(const SpaceSpec& spec) {
  RootSystem g = build_root_system(spec.series, spec.rank);

  std::vector<Weight> gens;
  if (spec.named) {
    if (spec.sub_name == "torus") {
      // no generators
    } else if (spec.sub_name == "full") {
      gens = g.simple_roots;
    } else {  // D<k>
      int k = std::stoi(spec.sub_name.substr(1));
      if (spec.series != Series::B || k != spec.rank)
        throw NotASubsystem("the named subsystem " + spec.sub_name +
                            " only makes sense inside B" + std::to_string(k));
      gens = d_in_b_generators(k);
    }
  } else {
    for (const auto& coords : spec.sub_roots) {
      if (static_cast<int>(coords.size()) != g.ambient)
        throw DimensionMismatch(
            "subsystem generator has " + std::to_string(coords.size()) +
            " coordinates; " + series_letter(spec.series) +
            std::to_string(spec.rank) + " needs " + std::to_string(g.ambient));
      Weight w(coords.size());
      w.coords = coords;
      gens.push_back(w);
    }
  }

  RealizedSpace out{make_equal_rank_pair(g, gens), std::nullopt, spec.scale};
  if (spec.mu) {
    if (static_cast<int>(spec.mu->size()) != g.ambient)
      throw DimensionMismatch("mu has " + std::to_string(spec.mu->size()) +
                              " coordinates; the space needs " +
                              std::to_string(g.ambient));
    Weight m(spec.mu->size());
    m.coords = *spec.mu;
    out.mu = m;
  }
  if (out.scale <= 0)
    throw NonPositiveScale("scale must be a positive rational, got " +
                           rat_str(out.scale));
  return out;
}

}  // namespace coset
