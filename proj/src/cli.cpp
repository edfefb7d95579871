// cli.cpp - the coset-spectra command set: spectrum, lowest, gkrs-check,
// weyl-info, with deterministic text and JSON renderings.
#include "coset/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coset/gkrs.hpp"
#include "coset/spacespec.hpp"
#include "coset/weyl.hpp"

namespace coset {

namespace {

using nlohmann::ordered_json;

constexpr const char* kArtifact = "coset-spectra 1.0.0";
constexpr const char* kNormalization =
    "normalization: the invariant form gives every long root squared length "
    "2; energies are exact Casimir differences in that scale, times the "
    "requested scale factor";

struct Options {
  std::string spec_text;
  std::size_t lines = 10;
  long dim_bound = 100;
  bool json = false;
  std::string scale_text;
  long weyl_limit = kDefaultWeylLimit;
  bool provenance = false;
};

ordered_json int_json(const Integer& z) {
  if (z.fits_slong_p()) return ordered_json(z.get_si());
  return ordered_json(z.get_str());
}

ordered_json rat_json(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  ordered_json j;
  j["num"] = int_json(c.get_num());
  j["den"] = int_json(c.get_den());
  return j;
}

ordered_json weight_json(const Weight& w) {
  ordered_json a = ordered_json::array();
  for (const auto& c : w.coords) a.push_back(rat_json(c));
  return a;
}

ordered_json provenance_json() {
  ordered_json j;
  j["normalization"] = kNormalization;
  j["artifact"] = kArtifact;
  return j;
}

void finish_text(std::ostream& out, const Options& o) {
  if (o.provenance) out << "# " << kNormalization << "\n# " << kArtifact << "\n";
}

void finish_json(std::ostream& out, const Options& o, ordered_json& doc) {
  if (o.provenance) doc["provenance"] = provenance_json();
  out << doc.dump(2) << "\n";
}

// Right-aligns every column except the last, which is left-aligned with no
// trailing padding; two spaces between columns.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size(); ++j)
      width[j] = std::max(width[j], r[j].size());
  auto emit = [&](const std::vector<std::string>& r) {
    std::string line;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) line += "  ";
      if (j + 1 == r.size())
        line += r[j];
      else
        line += std::string(width[j] - r[j].size(), ' ') + r[j];
    }
    out << line << "\n";
  };
  emit(header);
  for (const auto& r : rows) emit(r);
}

// Parse + scale override + realize; the shared front half of every command.
struct Query {
  SpaceSpec spec;
  RealizedSpace space;
};

Query open_query(const Options& o) {
  SpaceSpec spec = parse_space_spec(o.spec_text);
  if (!o.scale_text.empty()) {
    auto r = parse_rational(o.scale_text);
    if (!r) throw ParseError("--scale expects p or p/q", 0);
    spec.scale = *r;
  }
  return Query{spec, realize(spec)};
}

ordered_json query_json(const Query& q, const std::string& command) {
  ordered_json j;
  j["space"] = serialize(q.spec);
  j["command"] = command;
  j["scale"] = rat_json(q.space.scale);
  return j;
}

int require_mu(const Query& q, const std::string& cmd, std::ostream& err) {
  if (q.space.mu) return 0;
  err << "error: " << cmd << " needs ';mu=' in the space spec\n";
  return 1;
}

int run_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
  Query q = open_query(o);
  if (int rc = require_mu(q, "spectrum", err)) return rc;
  auto lines =
      landau_levels(spectrum(q.space.pair, *q.space.mu, o.lines), q.space.scale);

  if (o.json) {
    ordered_json doc;
    doc["query"] = query_json(q, "spectrum");
    doc["query"]["lines"] = o.lines;
    ordered_json arr = ordered_json::array();
    for (const auto& l : lines) {
      ordered_json item;
      item["lambda"] = weight_json(l.lambda);
      item["energy"] = rat_json(l.energy);
      item["dim"] = int_json(l.degeneracy);
      item["multiplicity"] = l.frobenius_multiplicity;
      arr.push_back(std::move(item));
    }
    doc["lines"] = arr;
    finish_json(out, o, doc);
    return 0;
  }

  out << "space: " << serialize(q.spec) << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& l : lines)
    rows.push_back({rat_str(l.energy), l.degeneracy.get_str(),
                    std::to_string(l.frobenius_multiplicity), l.lambda.str()});
  print_table(out, {"energy", "dim", "mult", "lambda"}, rows);
  finish_text(out, o);
  return 0;
}

int run_lowest(const Options& o, std::ostream& out, std::ostream& err) {
  Query q = open_query(o);
  if (int rc = require_mu(q, "lowest", err)) return rc;
  auto low = kostant_lowest(q.space.pair, *q.space.mu);
  auto first =
      landau_levels(spectrum(q.space.pair, *q.space.mu, 1), q.space.scale).at(0);

  if (o.json) {
    ordered_json doc;
    doc["query"] = query_json(q, "lowest");
    ordered_json k;
    k["label"] = "kostant (closed form)";
    k["attained"] = bool(low);
    if (low) {
      k["lambda"] = weight_json(low->lambda);
      k["energy"] = rat_json(low->energy * q.space.scale);
      k["multiplicity"] = int_json(low->multiplicity);
    }
    ordered_json f;
    f["label"] = "frobenius (Peter-Weyl)";
    f["lambda"] = weight_json(first.lambda);
    f["energy"] = rat_json(first.energy);
    f["dim"] = int_json(first.degeneracy);
    f["multiplicity"] = first.frobenius_multiplicity;
    doc["kostant"] = k;
    doc["frobenius"] = f;
    finish_json(out, o, doc);
    return 0;
  }

  out << "space: " << serialize(q.spec) << "\n";
  if (low)
    out << "kostant (closed form): lambda = " << low->lambda.str() << ", energy = "
        << rat_str(low->energy * q.space.scale) << ", multiplicity = "
        << low->multiplicity.get_str() << "\n";
  else
    out << "kostant (closed form): not attained\n";
  out << "frobenius (Peter-Weyl): lambda = " << first.lambda.str()
      << ", energy = " << rat_str(first.energy) << ", dim = "
      << first.degeneracy.get_str() << ", branching multiplicity = "
      << first.frobenius_multiplicity << "\n";
  finish_text(out, o);
  return 0;
}

int run_gkrs(const Options& o, std::ostream& out, std::ostream&) {
  Query q = open_query(o);
  q.space.pair.transversal(o.weyl_limit);  // enumerate under the user's cap
  auto reports = gkrs_sweep(q.space.pair, Integer(o.dim_bound));
  std::size_t failed = 0;
  for (const auto& r : reports)
    if (!r.verified) ++failed;

  if (o.json) {
    ordered_json doc;
    doc["query"] = query_json(q, "gkrs-check");
    doc["query"]["dim_bound"] = o.dim_bound;
    doc["transversal_size"] = q.space.pair.transversal().size();
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json item;
      item["lambda"] = weight_json(r.lambda);
      item["dim"] = int_json(weyl_dimension(q.space.pair.g, r.lambda));
      item["verified"] = r.verified;
      arr.push_back(std::move(item));
    }
    doc["reports"] = arr;
    doc["checked"] = reports.size();
    doc["all_verified"] = failed == 0;
    finish_json(out, o, doc);
    return failed == 0 ? 0 : 3;
  }

  out << "space: " << serialize(q.spec) << "\n";
  out << "dim bound: " << o.dim_bound << "\n";
  out << "multiplet size |C|: " << q.space.pair.transversal().size() << "\n";
  for (const auto& r : reports)
    out << "lambda = " << r.lambda.str() << ", dim = "
        << weyl_dimension(q.space.pair.g, r.lambda).get_str() << ": "
        << (r.verified ? "verified" : "FAILED") << "\n";
  out << "checked " << reports.size() << " types: ";
  if (failed == 0)
    out << "all verified\n";
  else
    out << failed << " FAILED\n";
  finish_text(out, o);
  return failed == 0 ? 0 : 3;
}

int run_weyl_info(const Options& o, std::ostream& out, std::ostream&) {
  Query q = open_query(o);
  const EqualRankPair& pair = q.space.pair;
  const WeylGroup& wg = pair.weyl_g(o.weyl_limit);
  WeylGroup weta = enumerate_weyl(pair.eta, o.weyl_limit);
  const auto& transversal = pair.transversal(o.weyl_limit);

  if (o.json) {
    ordered_json doc;
    doc["query"] = query_json(q, "weyl-info");
    doc["weyl_g_order"] = wg.elements.size();
    doc["weyl_eta_order"] = weta.elements.size();
    doc["transversal_size"] = transversal.size();
    doc["rho_g"] = weight_json(pair.rho_g);
    doc["rho_eta"] = weight_json(pair.rho_eta);
    ordered_json roots = ordered_json::array();
    for (const auto& a : pair.m_positive) roots.push_back(weight_json(a));
    doc["m_positive_roots"] = roots;
    finish_json(out, o, doc);
    return 0;
  }

  out << "space: " << serialize(q.spec) << "\n";
  out << "|W_g| = " << wg.elements.size() << "\n";
  out << "|W_eta| = " << weta.elements.size() << "\n";
  out << "|C| = " << transversal.size() << "\n";
  out << "rho_g = " << pair.rho_g.str() << "\n";
  out << "rho_eta = " << pair.rho_eta.str() << "\n";
  out << "m positive roots (" << pair.m_positive.size() << "):";
  for (const auto& a : pair.m_positive) out << " " << a.str();
  out << "\n";
  finish_text(out, o);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"exact Laplacian spectra on equal-rank homogeneous spaces",
               "coset-spectra"};
  app.set_version_flag("--version", std::string(kArtifact));
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec_text,
                    "space spec, e.g. B3/D3;mu=1/2,1/2,1/2")
        ->required();
    sub->add_flag("--json", o.json, "emit a JSON report instead of text");
    sub->add_option("--scale", o.scale_text,
                    "energy prefactor p or p/q; overrides the spec's scale");
    sub->add_option("--weyl-limit", o.weyl_limit,
                    "fail if a Weyl group would exceed this many elements")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--provenance", o.provenance,
                  "append the normalization note and artifact version");
  };

  CLI::App* sp = app.add_subcommand(
      "spectrum", "first lines of the Laplacian spectrum on the mu-bundle");
  add_common(sp);
  sp->add_option("--lines", o.lines, "how many spectral lines to emit")
      ->check(CLI::PositiveNumber);

  CLI::App* lo = app.add_subcommand(
      "lowest", "lowest level, closed form and first spectral line, labeled");
  add_common(lo);

  CLI::App* gk = app.add_subcommand(
      "gkrs-check", "verify the multiplet identity for every type under a "
                    "dimension bound");
  add_common(gk);
  gk->add_option("--dim-bound", o.dim_bound,
                 "check all highest weights with dim at most this")
      ->check(CLI::NonNegativeNumber);

  CLI::App* wi = app.add_subcommand(
      "weyl-info", "group orders, transversal size and complement roots");
  add_common(wi);

  try {
    std::vector<const char*> argv;
    argv.push_back("coset-spectra");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (sp->parsed()) return run_spectrum(o, out, err);
    if (lo->parsed()) return run_lowest(o, out, err);
    if (gk->parsed()) return run_gkrs(o, out, err);
    return run_weyl_info(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace coset
