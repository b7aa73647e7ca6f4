#include "haken/surgery.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include <boost/container/small_vector.hpp>

#include "haken/error.hpp"
#include "haken/flag.hpp"
#include "haken/homology.hpp"

namespace haken {

namespace {

using Incidence = std::unordered_map<Simplex, boost::container::small_vector<std::uint32_t, 2>, SimplexHash>;

// (n-1)-face -> indices of the top simplices containing it.
Incidence codim_one_incidence(const Complex& k) {
  Incidence inc;
  const auto& tops = k.maximal_simplices();
  for (std::uint32_t i = 0; i < tops.size(); ++i)
    for (std::size_t j = 0; j < tops[i].size(); ++j) inc[tops[i].without_index(j)].push_back(i);
  return inc;
}

std::vector<Vertex> intersect_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

CutLocus check_cut_locus(const PatternedComplex& p, const Complex& f) {
  CutLocus c;
  c.subcomplex = f;
  const Complex& carrier = p.carrier();
  const int n = p.dimension();
  if (f.is_void() || f.vertices().empty()) {
    c.problems.push_back("cut locus is empty");
    return c;
  }
  if (!is_subcomplex(f, carrier)) {
    c.problems.push_back("cut locus is not a subcomplex of the carrier");
    return c;
  }
  c.full = is_full_subcomplex(f, carrier);
  if (!c.full) c.problems.push_back("cut locus is not a full subcomplex");

  c.hypersurface = f.is_pure() && f.dimension() == n - 1;
  if (!c.hypersurface) {
    c.problems.push_back("cut locus is not pure of dimension " + std::to_string(n - 1));
  } else {
    if (n >= 2 && !is_pseudomanifold(f, false)) {
      c.hypersurface = false;
      c.problems.push_back("cut locus branches: an (n-2)-face lies in more than two of its top faces");
    }
    auto inc = codim_one_incidence(carrier);
    for (const auto& t : f.maximal_simplices()) {
      auto it = inc.find(t);
      if (it == inc.end() || it->second.size() != 2) {
        c.hypersurface = false;
        c.problems.push_back("cut locus face " + t.to_string() + " lies on the boundary");
        break;
      }
    }
  }

  const Complex df = n >= 2 ? boundary_subcomplex(f) : Complex();
  c.proper = df == intersection(f, p.boundary());
  if (!c.proper) c.problems.push_back("cut locus is not proper: its boundary differs from its intersection with the boundary");

  c.transverse = true;
  for (const auto& s : strata(p)) {
    const int k = s.codimension();
    if (k == 0) continue;
    auto w = intersect_sorted(f.vertices(), s.carrier.vertices());
    if (w.empty()) continue;
    for (const auto& comp : connected_components(induced_subcomplex(carrier, w))) {
      if (comp.is_pure() && comp.dimension() == n - 1 - k) continue;
      c.transverse = false;
      c.problems.push_back("cut locus meets stratum {" + join(s.facet_set, ",") + "} in dimension " +
                           std::to_string(comp.dimension()) + ", expected " + std::to_string(n - 1 - k));
    }
  }
  return c;
}

CutResult cut_open(const PatternedComplex& p, const Complex& f, const std::string& name) {
  auto locus = check_cut_locus(p, f);
  if (!locus.valid()) throw CutError(join(locus.problems, "; "));

  const Complex& carrier = p.carrier();
  const auto& tops = carrier.maximal_simplices();
  const auto inc = codim_one_incidence(carrier);

  std::vector<Simplex::Storage> img(tops.size());
  for (std::size_t i = 0; i < tops.size(); ++i) img[i] = tops[i].labels();
  std::map<Vertex, Vertex> fresh_origin;
  Vertex fresh = carrier.max_label() + 1;

  for (Vertex v : f.vertices()) {
    auto star = carrier.maximal_containing(v);
    auto pos = [&](std::uint32_t idx) {
      return static_cast<std::size_t>(std::lower_bound(star.begin(), star.end(), idx) - star.begin());
    };
    UnionFind uf(star.size());
    for (std::size_t a = 0; a < star.size(); ++a) {
      const Simplex& s = tops[star[a]];
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] == v) continue;
        Simplex t = s.without_index(j);
        if (f.contains(t)) continue;
        for (std::uint32_t other : inc.at(t))
          if (other != star[a]) uf.unite(a, pos(other));
      }
    }
    std::map<std::size_t, Vertex> label_of_root;
    for (std::size_t a = 0; a < star.size(); ++a) {
      auto root = uf.find(a);
      if (!label_of_root.count(root)) {
        Vertex label = v;
        if (!label_of_root.empty()) {
          label = fresh++;
          fresh_origin[label] = v;
        }
        label_of_root[root] = label;
      }
      const Simplex& s = tops[star[a]];
      auto k = static_cast<std::size_t>(std::find(s.begin(), s.end(), v) - s.begin());
      img[star[a]][k] = label_of_root[root];
    }
  }

  // Image of a face t of the top simplex with index i.
  auto image = [&](const Simplex& t, std::uint32_t i) {
    const Simplex& s = tops[i];
    Simplex::Storage out;
    for (Vertex u : t) out.push_back(img[i][static_cast<std::size_t>(std::find(s.begin(), s.end(), u) - s.begin())]);
    return Simplex(std::move(out));
  };

  std::map<std::string, Complex> facets;
  for (const auto& [fname, g] : p.facets()) {
    std::vector<Simplex> images;
    for (const auto& t : g.maximal_simplices()) images.push_back(image(t, inc.at(t).front()));
    auto comps = connected_components(Complex(std::move(images)));
    if (comps.size() == 1) {
      facets.emplace(fname, std::move(comps.front()));
      continue;
    }
    for (std::size_t i = 0; i < comps.size(); ++i) facets.emplace(fname + "." + std::to_string(i), std::move(comps[i]));
  }

  std::vector<bool> two_sided;
  std::vector<std::string> new_names;
  auto f_comps = connected_components(f);
  for (std::size_t ci = 0; ci < f_comps.size(); ++ci) {
    std::vector<Simplex> images;
    for (const auto& t : f_comps[ci].maximal_simplices()) {
      const auto& pair = inc.at(t);
      images.push_back(image(t, std::min(pair[0], pair[1])));
      images.push_back(image(t, std::max(pair[0], pair[1])));
    }
    const Simplex first = images.front();
    auto sides = connected_components(Complex(std::move(images)));
    if (sides.size() > 2)
      throw CutError("cut locus component " + std::to_string(ci) + " splits into " + std::to_string(sides.size()) +
                     " pieces; it is not locally flat");
    const std::string prefix = f_comps.size() == 1 ? name : name + "." + std::to_string(ci);
    if (sides.size() == 1) {
      two_sided.push_back(false);
      new_names.push_back(prefix);
      facets.emplace(prefix, std::move(sides.front()));
      continue;
    }
    two_sided.push_back(true);
    if (!sides[0].has_vertex(first.front())) std::swap(sides[0], sides[1]);
    for (int side = 0; side < 2; ++side) {
      std::string fname = prefix + (side == 0 ? "+" : "-");
      if (facets.count(fname)) throw CutError("facet name " + fname + " is already in use");
      new_names.push_back(fname);
      facets.emplace(fname, std::move(sides[side]));
    }
  }
  if (facets.size() < new_names.size() + p.num_facets())
    throw CutError("new facet names collide with existing facets");

  std::vector<Simplex> new_tops;
  new_tops.reserve(img.size());
  for (auto& s : img) new_tops.emplace_back(std::move(s));
  Complex result_carrier(std::move(new_tops));
  std::map<Vertex, Vertex> origin;
  for (Vertex v : result_carrier.vertices()) {
    auto it = fresh_origin.find(v);
    origin[v] = it == fresh_origin.end() ? v : it->second;
  }

  PatternOptions options;
  options.subdivide_for_fullness = false;
  try {
    PatternedComplex result(std::move(result_carrier), std::move(facets), options);
    return CutResult{std::move(result), std::move(origin), std::move(two_sided), std::move(new_names)};
  } catch (const PatternError& e) {
    throw CutError(std::string("cut produced an invalid pattern: ") + e.what());
  }
}

std::vector<PatternedComplex> split_components(const PatternedComplex& p) {
  std::vector<PatternedComplex> out;
  for (auto& comp : connected_components(p.carrier())) {
    std::map<std::string, Complex> facets;
    for (const auto& [name, f] : p.facets())
      if (comp.has_vertex(f.vertices().front())) facets.emplace(name, f);
    out.emplace_back(std::move(comp), std::move(facets));
  }
  return out;
}

OrbifoldEuler orbifold_euler_all(const PatternedComplex& p) {
  return {orbifold_euler_strata(p), orbifold_euler_poincare(p), orbifold_euler_nerve(p)};
}

CutInvarianceReport verify_cut_invariance(const PatternedComplex& p, const Complex& f, const std::string& name) {
  CutInvarianceReport r;
  r.before = orbifold_euler_all(p);
  auto cut = cut_open(p, f, name);
  r.after = orbifold_euler_all(cut.result);
  for (const auto& c : split_components(cut.result)) r.after_components += orbifold_euler_strata(c);
  r.two_sided = cut.two_sided;
  r.new_facets = cut.new_facets.size();
  r.equal = r.before.agree() && r.after.agree() && r.before.strata == r.after.strata &&
            r.after_components == r.after.strata;

  r.closed_case = p.is_closed() && p.num_facets() == 0;
  if (r.closed_case) {
    std::vector<Complex> parts;
    for (const auto& fname : cut.new_facets) parts.push_back(cut.result.facet(fname));
    r.chi_m = euler_characteristic(p.carrier());
    r.chi_cut = euler_characteristic(cut.result.carrier());
    r.chi_new_boundary = euler_characteristic(union_of(parts));
    r.closed_identity =
        Dyadic(r.chi_cut - r.chi_new_boundary) + Dyadic(r.chi_new_boundary).scaled(-1) == Dyadic(r.chi_m);
  }
  return r;
}

namespace {

StageRecord record_stage(const PatternedComplex& p) {
  StageRecord r;
  auto comps = split_components(p);
  r.cells = comps.size();
  r.facets = p.num_facets();
  r.top_simplices = p.carrier().maximal_simplices().size();
  r.chi_orb = orbifold_euler_all(p);
  Dyadic sum;
  for (const auto& c : comps) sum += orbifold_euler_strata(c);
  r.additive = sum == r.chi_orb.strata;
  return r;
}

}  // namespace

HierarchyLedger run_prehierarchy(const PatternedComplex& initial, const std::vector<LedgerStep>& steps) {
  HierarchyLedger ledger;
  ledger.stages.push_back(initial);
  ledger.records.push_back(record_stage(initial));
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const std::string name = steps[k].name.empty() ? "cut" + std::to_string(k + 1) : steps[k].name;
    try {
      auto cut = cut_open(ledger.stages.back(), steps[k].cut, name);
      ledger.sidedness.push_back(cut.two_sided);
      ledger.stages.push_back(std::move(cut.result));
    } catch (const Error& e) {
      throw CutError("step " + std::to_string(k + 1) + ": " + e.what());
    }
    ledger.records.push_back(record_stage(ledger.stages.back()));
  }
  ledger.terminal = split_components(ledger.stages.back());
  for (const auto& c : ledger.terminal) ledger.terminal_sum += orbifold_euler_strata(c);
  ledger.chi_orb_constant = std::all_of(ledger.records.begin(), ledger.records.end(), [&](const StageRecord& r) {
    return r.chi_orb.agree() && r.additive && r.chi_orb.strata == ledger.records.front().chi_orb.strata;
  });
  return ledger;
}

HierarchyCertificate certify_hierarchy(const HierarchyLedger& ledger) {
  HierarchyCertificate h;
  for (std::size_t i = 0; i < ledger.terminal.size(); ++i) {
    const auto& c = ledger.terminal[i];
    TerminalCertificate t;
    const int n = c.dimension();
    t.nerve = nerve(c).complex;
    t.acyclic = homology(c.carrier()) == point_profile();
    t.ghs = is_generalized_homology_sphere(t.nerve, n);
    t.flag = flag_report(t.nerve).is_flag;
    t.lambda = charney_davis(t.nerve);
    const std::string label = "cell " + std::to_string(i);
    if (!t.acyclic) t.failures.push_back(label + ": carrier is not acyclic");
    if (!t.ghs) t.failures.push_back(label + ": nerve is not a homology " + std::to_string(n - 1) + "-sphere");
    if (!t.flag) t.failures.push_back(label + ": nerve is not flag");
    h.failures.insert(h.failures.end(), t.failures.begin(), t.failures.end());
    h.lambda_sum += t.lambda;
    h.cells.push_back(std::move(t));
  }
  const auto& m0 = ledger.stages.front();
  const int n = m0.dimension();
  h.chi_m0 = euler_characteristic(m0.carrier());
  h.closed_even = m0.is_closed() && m0.num_facets() == 0 && n % 2 == 0;
  if (h.closed_even) {
    h.euler_matches = Dyadic(h.chi_m0) == h.lambda_sum;
    h.sign_check = ((n / 2) % 2 ? -h.chi_m0 : h.chi_m0) >= 0;
    if (!h.euler_matches) h.failures.push_back("chi(M0) differs from the sum of lambda over the terminal cells");
  }
  if (!ledger.chi_orb_constant) h.failures.push_back("orbifold Euler characteristic changes along the ledger");
  if (ledger.terminal.empty()) h.failures.push_back("ledger has no terminal cells");
  h.certified = h.failures.empty();
  return h;
}

}  // namespace haken
