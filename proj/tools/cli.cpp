#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "haken/construction.hpp"
#include "haken/corpus.hpp"
#include "haken/error.hpp"
#include "haken/flag.hpp"
#include "haken/homology.hpp"
#include "haken/io.hpp"
#include "haken/isomorphism.hpp"
#include "haken/pattern.hpp"
#include "haken/surgery.hpp"

namespace haken::cli {

namespace {

struct Config {
  std::string format = "text";
  int mirror_limit = kDefaultMirrorLimit;
  std::uint64_t node_budget = 5'000'000;
  std::string input;
  std::string second;
  std::string out_path;
  std::string method = "all";
  std::string name = "cut";
  std::vector<std::string> mirrors;
  bool mirrors_given = false;
  std::string family;
  std::uint64_t seed = corpus::kDefaultSeed;
  int dim = 0;
};

using Row = std::vector<std::string>;

void write_tsv(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
  auto line = [&](const Row& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string joined(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string fvector_string(const Complex& k) {
  std::string s = "(";
  auto f = f_vector(k);
  for (std::size_t i = 1; i < f.size(); ++i) s += (i > 1 ? ", " : "") + std::to_string(f[i]);
  return s + ")";
}

class Runner {
 public:
  Runner(const Config& c, std::ostream& out, std::ostream& err) : c_(c), out_(out), err_(err) {}

  bool tsv() const { return c_.format == "tsv"; }

  Complex load_complex(const std::string& path) {
    std::vector<std::string> warnings;
    auto k = io::parse_complex(io::read_file(path), &warnings);
    for (const auto& w : warnings) err_ << "warning: " << path << ": " << w << '\n';
    return k;
  }

  PatternedComplex load_pattern(const std::string& path) {
    std::vector<std::string> warnings;
    auto p = io::parse_pattern(io::read_file(path), &warnings);
    for (const auto& w : warnings) err_ << "warning: " << path << ": " << w << '\n';
    return p;
  }

  int homology_cmd() {
    auto h = homology(load_complex(c_.input));
    if (!tsv()) {
      out_ << h.to_string();
      return kOk;
    }
    std::vector<Row> rows;
    for (std::size_t i = 0; i < h.betti.size(); ++i) {
      std::vector<std::string> t;
      for (const auto& x : h.torsion[i]) t.push_back(x.str());
      rows.push_back({std::to_string(i), std::to_string(h.betti[i]), joined(t)});
    }
    write_tsv(out_, {"degree", "betti", "torsion"}, rows);
    return kOk;
  }

  int is_ghs_cmd() {
    auto k = load_complex(c_.input);
    const int n = c_.dim > 0 ? c_.dim : k.dimension() + 1;
    const bool ghs = is_generalized_homology_sphere(k, n);
    if (tsv())
      write_tsv(out_, {"key", "value"}, {{"ghs", yes(ghs)}, {"dimension", std::to_string(n - 1)}});
    else
      out_ << "ghs: " << yes(ghs) << " (dimension " << n - 1 << ")\n";
    return ghs ? kOk : kViolation;
  }

  int flag_check_cmd() {
    auto k = load_complex(c_.input);
    auto r = flag_report(k);
    const auto lambda = charney_davis(k);
    if (tsv()) {
      std::vector<Row> rows = {{"flag", yes(r.is_flag)}, {"lambda", lambda.to_string()}};
      for (const auto& s : r.minimal_non_faces) rows.push_back({"minimal_non_face", s.to_string()});
      write_tsv(out_, {"key", "value"}, rows);
    } else {
      out_ << "flag: " << yes(r.is_flag) << ", λ = " << lambda.to_string() << '\n';
      for (const auto& s : r.minimal_non_faces) out_ << "minimal non-face: " << s.to_string() << '\n';
    }
    return r.is_flag ? kOk : kViolation;
  }

  int charney_davis_cmd() {
    const auto lambda = charney_davis(load_complex(c_.input));
    if (tsv())
      write_tsv(out_, {"key", "value"}, {{"lambda", lambda.to_string()}});
    else
      out_ << "λ = " << lambda.to_string() << '\n';
    return kOk;
  }

  int certify_cell_cmd() {
    auto k = load_complex(c_.input);
    const int n = c_.dim > 0 ? c_.dim : k.dimension() + 1;
    auto cert = certify_haken_cell_dual(k, n);
    if (tsv()) {
      write_tsv(out_, {"key", "value"}, {{"ghs", yes(cert.ghs)}, {"flag", yes(cert.flag)}, {"haken", yes(cert.haken)}});
    } else {
      out_ << "ghs: " << yes(cert.ghs) << "\nflag: " << yes(cert.flag) << "\nhaken: " << yes(cert.haken) << '\n';
    }
    return cert.haken ? kOk : kViolation;
  }

  int nerve_cmd() {
    auto nv = nerve(load_pattern(c_.input));
    if (!c_.out_path.empty()) io::write_file(c_.out_path, io::write_complex(nv.complex));
    if (tsv()) {
      std::vector<Row> rows;
      for (std::size_t i = 0; i < nv.facet_names.size(); ++i) rows.push_back({std::to_string(i), nv.facet_names[i]});
      write_tsv(out_, {"vertex", "facet"}, rows);
      return kOk;
    }
    for (std::size_t i = 0; i < nv.facet_names.size(); ++i) out_ << "vertex " << i << ": " << nv.facet_names[i] << '\n';
    out_ << "f-vector: " << fvector_string(nv.complex) << '\n';
    if (c_.out_path.empty()) out_ << io::write_complex(nv.complex);
    return kOk;
  }

  int chi_orb_cmd() {
    auto p = load_pattern(c_.input);
    std::vector<Row> rows;
    if (c_.method == "strata" || c_.method == "all") rows.push_back({"strata", orbifold_euler_strata(p).to_string()});
    if (c_.method == "poincare" || c_.method == "all")
      rows.push_back({"poincare", orbifold_euler_poincare(p).to_string()});
    if (c_.method == "nerve" || c_.method == "all") rows.push_back({"nerve", orbifold_euler_nerve(p).to_string()});
    const bool agree = std::all_of(rows.begin(), rows.end(), [&](const Row& r) { return r[1] == rows[0][1]; });
    if (tsv()) {
      write_tsv(out_, {"method", "chi_orb"}, rows);
    } else {
      for (const auto& r : rows) out_ << r[0] << ": " << r[1] << '\n';
      if (rows.size() > 1) out_ << "agree: " << yes(agree) << '\n';
    }
    return agree ? kOk : kViolation;
  }

  int useful_cmd() {
    auto r = usefulness_report(load_pattern(c_.input));
    std::vector<Row> rows = {{"facet_h1_trivial", yes(r.facet_h1_trivial)},
                             {"pairwise_connected", yes(r.pairwise_connected)},
                             {"triple_condition", yes(r.triple_condition)},
                             {"carrier_h1_trivial", yes(r.carrier_h1_trivial)},
                             {"verdict", r.verdict()}};
    if (tsv()) {
      for (const auto& f : r.failures) rows.push_back({"failure", f});
      write_tsv(out_, {"key", "value"}, rows);
    } else {
      for (const auto& row : rows) out_ << row[0] << ": " << row[1] << '\n';
      for (const auto& f : r.failures) out_ << "failure: " << f << '\n';
    }
    return r.verdict() == "not homology-useful" ? kViolation : kOk;
  }

  int cell_from_sphere_cmd() {
    auto sphere = load_complex(c_.input);
    if (c_.dim > 0 && c_.dim != sphere.dimension() + 1)
      throw InvalidArgument("--n " + std::to_string(c_.dim) + " does not match a sphere of dimension " +
                            std::to_string(sphere.dimension()));
    auto p = cell_from_flag_sphere(sphere);
    const bool round_trip = find_isomorphism(nerve(p).complex, sphere, c_.node_budget).isomorphic;
    const auto text = io::write_pattern(p);
    if (!c_.out_path.empty()) io::write_file(c_.out_path, text);
    if (tsv()) {
      write_tsv(out_, {"key", "value"},
                {{"facets", std::to_string(p.num_facets())},
                 {"top_simplices", std::to_string(p.carrier().maximal_simplices().size())},
                 {"round_trip", yes(round_trip)}});
    } else {
      out_ << "facets: " << p.num_facets() << "\ntop simplices: " << p.carrier().maximal_simplices().size()
           << "\nround trip: " << yes(round_trip) << '\n';
      if (c_.out_path.empty()) out_ << text;
    }
    return round_trip ? kOk : kViolation;
  }

  int double_cmd() {
    auto p = load_pattern(c_.input);
    auto d = c_.mirrors_given ? build_double(p, c_.mirrors, c_.mirror_limit) : build_double(p, c_.mirror_limit);
    if (!c_.out_path.empty()) io::write_file(c_.out_path, io::write_complex(d.complex));
    std::vector<Row> rows = {{"mirrors", joined(d.mirrors)},
                             {"vertices", std::to_string(d.complex.num_vertices())},
                             {"top_simplices", std::to_string(d.complex.maximal_simplices().size())},
                             {"chi", std::to_string(euler_characteristic(d.complex))},
                             {"closed", yes(d.closed)}};
    if (tsv()) {
      write_tsv(out_, {"key", "value"}, rows);
    } else {
      for (const auto& r : rows) out_ << r[0] << ": " << r[1] << '\n';
    }
    return kOk;
  }

  int verify_double_cmd() {
    auto r = verify_quotient_formula(load_pattern(c_.input), c_.mirror_limit);
    if (tsv()) {
      write_tsv(out_, {"key", "value"},
                {{"chi_double", std::to_string(r.chi_double)},
                 {"facets", std::to_string(r.mirrors)},
                 {"chi_orb", r.chi_orb.to_string()},
                 {"equal", yes(r.equal)}});
    } else {
      out_ << "χ(double) = " << r.chi_double << "\nfacets: " << r.mirrors << "\nχ^orb = " << r.chi_orb.to_string()
           << '\n'
           << r.chi_double << " = 2^" << r.mirrors << " · " << r.chi_orb.to_string() << ": " << yes(r.equal) << '\n';
    }
    return r.equal ? kOk : kViolation;
  }

  int cut_cmd() {
    auto p = load_pattern(c_.input);
    auto f = load_complex(c_.second);
    auto r = cut_open(p, f, c_.name);
    const auto text = io::write_pattern(r.result);
    if (!c_.out_path.empty()) io::write_file(c_.out_path, text);
    std::vector<std::string> sides;
    for (bool b : r.two_sided) sides.push_back(b ? "two-sided" : "one-sided");
    if (tsv()) {
      write_tsv(out_, {"key", "value"},
                {{"new_facets", joined(r.new_facets)},
                 {"sidedness", joined(sides)},
                 {"components", std::to_string(connected_components(r.result.carrier()).size())}});
    } else {
      out_ << "new facets: " << joined(r.new_facets) << "\nsidedness: " << joined(sides)
           << "\ncomponents: " << connected_components(r.result.carrier()).size() << '\n';
      if (c_.out_path.empty()) out_ << text;
    }
    return kOk;
  }

  int verify_cut_cmd() {
    auto r = verify_cut_invariance(load_pattern(c_.input), load_complex(c_.second), c_.name);
    std::vector<Row> rows = {{"strata", r.before.strata.to_string(), r.after.strata.to_string()},
                             {"poincare", r.before.poincare.to_string(), r.after.poincare.to_string()},
                             {"nerve", r.before.nerve.to_string(), r.after.nerve.to_string()}};
    bool ok = r.equal && (!r.closed_case || r.closed_identity);
    if (tsv()) {
      rows.push_back({"components", "", r.after_components.to_string()});
      write_tsv(out_, {"method", "before", "after"}, rows);
      return ok ? kOk : kViolation;
    }
    for (const auto& row : rows) out_ << row[0] << ": " << row[1] << " -> " << row[2] << '\n';
    out_ << "new facets: " << r.new_facets << '\n';
    if (r.closed_case) {
      out_ << "χ(M') − χ(F') + ½χ(F') = " << r.chi_cut << " − " << r.chi_new_boundary << " + ½·" << r.chi_new_boundary
           << " = χ(M) = " << r.chi_m << ": " << yes(r.closed_identity) << '\n';
    }
    out_ << "invariant: " << yes(ok) << '\n';
    return ok ? kOk : kViolation;
  }

  int run_hierarchy_cmd() {
    std::vector<std::string> warnings;
    auto steps = io::parse_ledger(io::read_file(c_.input), &warnings);
    for (const auto& w : warnings) err_ << "warning: " << c_.input << ": " << w << '\n';
    auto ledger = run_prehierarchy(load_pattern(c_.second), steps);
    auto cert = certify_hierarchy(ledger);
    std::vector<Row> rows;
    for (std::size_t k = 0; k < ledger.records.size(); ++k) {
      const auto& r = ledger.records[k];
      rows.push_back({std::to_string(k), std::to_string(r.cells), std::to_string(r.facets),
                      std::to_string(r.top_simplices), r.chi_orb.strata.to_string()});
    }
    if (tsv()) {
      write_tsv(out_, {"step", "cells", "facets", "top_simplices", "chi_orb"}, rows);
      return cert.certified ? kOk : kViolation;
    }
    out_ << "step\tcells\tfacets\tsimplices\tχ^orb\n";
    for (const auto& r : rows) out_ << joined(r, "\t") << '\n';
    out_ << "essentialness: assumed, not checked\n";
    for (std::size_t i = 0; i < cert.cells.size(); ++i) {
      const auto& t = cert.cells[i];
      out_ << "cell " << i << ": nerve f-vector " << fvector_string(t.nerve) << ", acyclic " << yes(t.acyclic)
           << ", ghs " << yes(t.ghs) << ", flag " << yes(t.flag) << ", λ = " << t.lambda.to_string() << '\n';
    }
    for (const auto& f : cert.failures) out_ << "failure: " << f << '\n';
    out_ << "certified: " << yes(cert.certified) << '\n';
    if (cert.closed_even) {
      out_ << "Σλ = " << cert.lambda_sum.to_string() << (cert.euler_matches ? " = " : " ≠ ") << "χ(M) = " << cert.chi_m0
           << "\n";
    } else {
      out_ << "Σλ = " << cert.lambda_sum.to_string() << ", Σχ^orb = " << ledger.terminal_sum.to_string()
           << " = χ^orb(M) = " << ledger.records.front().chi_orb.strata.to_string() << "\n";
    }
    return cert.certified ? kOk : kViolation;
  }

  int corpus_cmd() {
    std::vector<std::string> fams = c_.family == "all" ? corpus::families() : std::vector<std::string>{c_.family};
    std::vector<Row> rows;
    for (const auto& fam : fams) {
      auto files = corpus::generate(fam, c_.seed);
      std::filesystem::path dir;
      if (!c_.out_path.empty()) {
        dir = std::filesystem::path(c_.out_path) / (c_.family == "all" ? fam : std::string());
        std::filesystem::create_directories(dir);
      }
      for (const auto& [name, text] : files) {
        if (!c_.out_path.empty()) io::write_file((dir / name).string(), text);
        rows.push_back({fam, name});
      }
    }
    if (tsv()) {
      write_tsv(out_, {"family", "file"}, rows);
    } else {
      for (const auto& r : rows) out_ << r[0] << ": " << r[1] << '\n';
    }
    return kOk;
  }

 private:
  const Config& c_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact combinatorial topology of Haken manifolds", "haken"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--mirror-limit", c.mirror_limit, "Largest number of mirrors for an explicit double")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-budget", c.node_budget, "Node budget of the isomorphism search")->check(CLI::PositiveNumber);

  std::function<int(Runner&)> action;
  auto sub = [&](const char* name, const char* help, int (Runner::*fn)()) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&action, fn] { action = [fn](Runner& r) { return (r.*fn)(); }; });
    return s;
  };
  auto complex_in = [&](CLI::App* s) { s->add_option("complex", c.input, "Complex file")->required(); };
  auto pattern_in = [&](CLI::App* s) { s->add_option("pattern", c.input, "Pattern file")->required(); };

  complex_in(sub("homology", "Integral homology", &Runner::homology_cmd));
  auto* ghs = sub("is-ghs", "Generalized homology sphere test", &Runner::is_ghs_cmd);
  complex_in(ghs);
  ghs->add_option("--n", c.dim, "Sphere dimension plus one (default: dim + 1)")->check(CLI::PositiveNumber);
  complex_in(sub("flag-check", "Flag test with minimal non-faces", &Runner::flag_check_cmd));
  complex_in(sub("charney-davis", "Charney-Davis quantity", &Runner::charney_davis_cmd));
  auto* cert = sub("certify-cell", "Haken homotopy cell test of a dual nerve", &Runner::certify_cell_cmd);
  complex_in(cert);
  cert->add_option("--n", c.dim, "Cell dimension (default: dim + 1)")->check(CLI::PositiveNumber);
  auto* nv = sub("nerve", "Nerve of a boundary pattern", &Runner::nerve_cmd);
  pattern_in(nv);
  nv->add_option("--out", c.out_path, "Write the nerve to this complex file");
  auto* chi = sub("chi-orb", "Orbifold Euler characteristic", &Runner::chi_orb_cmd);
  pattern_in(chi);
  chi->add_option("--method", c.method, "strata, poincare, nerve or all")
      ->check(CLI::IsMember({"strata", "poincare", "nerve", "all"}));
  pattern_in(sub("useful", "Homology usefulness checks", &Runner::useful_cmd));
  auto* cell = sub("cell-from-sphere", "Patterned cell dual to a sphere", &Runner::cell_from_sphere_cmd);
  complex_in(cell);
  cell->add_option("--out", c.out_path, "Write the pattern to this file");
  cell->add_option("--n", c.dim, "Cell dimension (default: dim + 1)")->check(CLI::PositiveNumber);
  auto* dbl = sub("double", "Manifold double over mirror facets", &Runner::double_cmd);
  pattern_in(dbl);
  dbl->add_option("--mirrors", c.mirrors, "Comma-separated mirror facets (default: all)")->delimiter(',');
  dbl->add_option("--out", c.out_path, "Write the double to this complex file");
  pattern_in(sub("verify-double", "Check χ(double) = 2^l · χ^orb", &Runner::verify_double_cmd));
  for (auto [name, help, fn] : {std::tuple{"cut", "Cut a pattern open along a hypersurface", &Runner::cut_cmd},
                                std::tuple{"verify-cut", "Check χ^orb invariance of a cut", &Runner::verify_cut_cmd}}) {
    auto* s = sub(name, help, fn);
    pattern_in(s);
    s->add_option("hypersurface", c.second, "Complex file of the cut locus")->required();
    s->add_option("--name", c.name, "Name of the new facets");
    if (std::string(name) == "cut") s->add_option("--out", c.out_path, "Write the result to this pattern file");
  }
  auto* hier = sub("run-hierarchy", "Replay a cut ledger and certify its terminal cells", &Runner::run_hierarchy_cmd);
  hier->add_option("ledger", c.input, "Ledger file")->required();
  hier->add_option("--initial", c.second, "Pattern file of M0")->required();
  auto* corp = sub("corpus", "Generate corpus files", &Runner::corpus_cmd);
  std::vector<std::string> fams = corpus::families();
  fams.push_back("all");
  corp->add_option("--family", c.family, "Family name or all")->required()->check(CLI::IsMember(fams));
  corp->add_option("--seed", c.seed, "Random seed");
  corp->add_option("--out", c.out_path, "Output directory");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    c.mirrors_given = dbl->count("--mirrors") > 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Runner runner(c, out, err);
  try {
    return action(runner);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace haken::cli
