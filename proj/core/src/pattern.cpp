#include "haken/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "haken/error.hpp"
#include "haken/flag.hpp"
#include "haken/generators.hpp"
#include "haken/homology.hpp"

namespace haken {

namespace {

std::vector<Vertex> intersect_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isspace(c) != 0 || c == '[' || c == ']' || c == '#';
  });
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out + "}";
}

Dyadic minus_half_pow(int k) { return Dyadic(BigInt(k % 2 ? -1 : 1), static_cast<unsigned>(k)); }
Dyadic half_pow(int k) { return Dyadic(BigInt(1), static_cast<unsigned>(k)); }
int parity_sign(int n) { return n % 2 ? -1 : 1; }

// A nonempty intersection of facets together with its (full) carrier.
struct FacetSet {
  std::vector<int> indices;
  std::vector<Vertex> vertices;
  Complex carrier;
  std::vector<Complex> components;
};

// Every facet set with nonempty intersection, by size and then
// lexicographically. Components are validated against dimension n - k.
std::vector<FacetSet> facet_sets(const PatternedComplex& p) {
  const auto names = p.facet_names();
  const int n = p.dimension();
  std::vector<std::vector<Vertex>> vsets;
  for (const auto& name : names) vsets.push_back(p.facet(name).vertices());

  std::vector<FacetSet> all;
  std::vector<std::pair<std::vector<int>, std::vector<Vertex>>> level;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) level.push_back({{i}, vsets[i]});
  while (!level.empty()) {
    std::vector<std::pair<std::vector<int>, std::vector<Vertex>>> next;
    for (auto& [idx, verts] : level) {
      FacetSet fs;
      fs.carrier = induced_subcomplex(p.carrier(), verts);
      fs.components = connected_components(fs.carrier);
      const int k = static_cast<int>(idx.size());
      for (const auto& c : fs.components) {
        if (!c.is_pure() || c.dimension() != n - k) {
          std::vector<std::string> set_names;
          for (int i : idx) set_names.push_back(names[i]);
          std::ostringstream msg;
          msg << "facets " << join_names(set_names) << " intersect in a component of dimension "
              << c.dimension() << (c.is_pure() ? "" : " (not pure)") << ", expected " << (n - k);
          throw PatternError(msg.str());
        }
      }
      for (int j = idx.back() + 1; j < static_cast<int>(names.size()); ++j) {
        auto w = intersect_sorted(verts, vsets[j]);
        if (w.empty()) continue;
        auto ext = idx;
        ext.push_back(j);
        next.push_back({std::move(ext), std::move(w)});
      }
      fs.indices = std::move(idx);
      fs.vertices = std::move(verts);
      all.push_back(std::move(fs));
    }
    level = std::move(next);
  }
  return all;
}

}  // namespace

PatternedComplex::PatternedComplex(Complex carrier, std::map<std::string, Complex> facets,
                                   PatternOptions options)
    : carrier_(std::move(carrier)), facets_(std::move(facets)) {
  if (carrier_.is_void() || carrier_.dimension() < 1) throw PatternError("carrier must have dimension at least 1");
  if (!carrier_.is_pure()) throw PatternError("carrier is not pure");
  if (!is_pseudomanifold(carrier_, false))
    throw PatternError("carrier has a codimension-one face in more than two top simplices");
  if (options.check_manifold) {
    auto check = check_homology_manifold(carrier_, true);
    if (!check) throw PatternError("carrier is not a homology manifold: " + check.reason);
  }
  boundary_ = boundary_subcomplex(carrier_);
  const int n = carrier_.dimension();

  bool all_full = true;
  for (const auto& [name, f] : facets_) {
    if (!valid_name(name)) throw PatternError("invalid facet name '" + name + "'");
    if (f.is_void() || f.vertices().empty()) throw PatternError("facet " + name + " is empty");
    if (!f.is_pure() || f.dimension() != n - 1)
      throw PatternError("facet " + name + " is not pure of dimension " + std::to_string(n - 1));
    for (const auto& s : f.maximal_simplices())
      if (!boundary_.contains(s))
        throw PatternError("facet " + name + " contains " + s.to_string() + ", which is not a boundary face");
    if (!is_connected(f)) throw PatternError("facet " + name + " is not connected");
    if (!is_full_subcomplex(f, carrier_)) all_full = false;
  }

  if (!all_full) {
    if (!options.subdivide_for_fullness) throw PatternError("a facet is not a full subcomplex of the carrier");
    Subdivision sd(carrier_);
    for (auto& [name, f] : facets_) f = sd.lift(f);
    carrier_ = sd.complex();
    boundary_ = boundary_subcomplex(carrier_);
    subdivided_ = true;
    warnings_.push_back("carrier subdivided once so that every facet is a full subcomplex");
  }

  std::set<Simplex> covered;
  for (const auto& [name, f] : facets_)
    for (const auto& s : f.maximal_simplices()) covered.insert(s);
  const auto& bfaces = boundary_.is_void() ? std::vector<Simplex>{} : boundary_.faces(n - 1);
  complete_ = std::all_of(bfaces.begin(), bfaces.end(), [&](const Simplex& s) { return covered.count(s) > 0; });
  if (!complete_) warnings_.push_back("boundary pattern is incomplete: facets do not cover the boundary");
}

std::vector<std::string> PatternedComplex::facet_names() const {
  std::vector<std::string> out;
  out.reserve(facets_.size());
  for (const auto& [name, f] : facets_) out.push_back(name);
  return out;
}

const Complex& PatternedComplex::facet(const std::string& name) const {
  auto it = facets_.find(name);
  if (it == facets_.end()) throw InvalidArgument("no facet named " + name);
  return it->second;
}

PatternedComplex PatternedComplex::restricted_to(const std::vector<std::string>& names) const {
  std::map<std::string, Complex> kept;
  for (const auto& name : names) kept.emplace(name, facet(name));
  return PatternedComplex(carrier_, std::move(kept));
}

std::vector<Stratum> strata(const PatternedComplex& p) {
  const auto names = p.facet_names();
  std::vector<std::vector<Vertex>> vsets;
  for (const auto& name : names) vsets.push_back(p.facet(name).vertices());

  auto frontier_of = [&](const Complex& c, const std::vector<int>& in_set) {
    std::vector<Complex> parts;
    for (int g = 0; g < static_cast<int>(names.size()); ++g) {
      if (std::binary_search(in_set.begin(), in_set.end(), g)) continue;
      auto w = intersect_sorted(c.vertices(), vsets[g]);
      if (!w.empty()) parts.push_back(induced_subcomplex(p.carrier(), w));
    }
    return union_of(parts);
  };

  std::vector<Stratum> out;
  for (auto& c : connected_components(p.carrier())) {
    Stratum s;
    s.frontier = frontier_of(c, {});
    s.carrier = std::move(c);
    out.push_back(std::move(s));
  }
  for (auto& fs : facet_sets(p)) {
    std::vector<std::string> set_names;
    for (int i : fs.indices) set_names.push_back(names[i]);
    for (auto& c : fs.components) {
      Stratum s;
      s.facet_set = set_names;
      s.frontier = frontier_of(c, fs.indices);
      s.carrier = std::move(c);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Nerve nerve(const PatternedComplex& p) {
  Nerve out;
  out.facet_names = p.facet_names();
  out.strata_union.emplace(Simplex{}, p.carrier());
  std::vector<Simplex> simplices;
  for (auto& fs : facet_sets(p)) {
    Simplex s = Simplex::from_sorted(Simplex::Storage(fs.indices.begin(), fs.indices.end()));
    simplices.push_back(s);
    out.strata_union.emplace(std::move(s), std::move(fs.carrier));
  }
  out.complex = simplices.empty() ? Complex::empty_sphere() : Complex(std::move(simplices));
  return out;
}

Dyadic orbifold_euler_strata(const PatternedComplex& p) {
  Dyadic total;
  for (const auto& s : strata(p))
    total += half_pow(s.codimension()) * Dyadic(euler_characteristic(s.carrier) - euler_characteristic(s.frontier));
  return total;
}

Dyadic orbifold_euler_poincare(const PatternedComplex& p) {
  Dyadic total;
  for (const auto& s : strata(p)) total += minus_half_pow(s.codimension()) * Dyadic(euler_characteristic(s.carrier));
  return total * Dyadic(parity_sign(p.dimension()));
}

Dyadic orbifold_euler_nerve(const PatternedComplex& p) {
  const auto nv = nerve(p);
  Dyadic total;
  for (const auto& [sigma, s] : nv.strata_union)
    total += minus_half_pow(static_cast<int>(sigma.size())) * Dyadic(euler_characteristic(s));
  return total * Dyadic(parity_sign(p.dimension()));
}

std::string UsefulnessReport::verdict() const {
  if (!carrier_h1_trivial) return "usefulness undecided";
  return homology_useful ? "homology-useful" : "not homology-useful";
}

namespace {

bool h1_trivial(const Complex& k) {
  auto h = homology(k);
  if (h.betti.size() < 2) return true;
  return h.betti[1] == 0 && h.torsion[1].empty();
}

}  // namespace

UsefulnessReport usefulness_report(const PatternedComplex& p) {
  UsefulnessReport r;
  const auto names = p.facet_names();
  std::vector<std::vector<Vertex>> vsets;
  for (const auto& name : names) {
    const auto& f = p.facet(name);
    vsets.push_back(f.vertices());
    if (!h1_trivial(f)) {
      r.facet_h1_trivial = false;
      r.failures.push_back("facet " + name + " has nontrivial H1");
    }
  }
  const int l = static_cast<int>(names.size());
  std::vector<std::vector<std::vector<Vertex>>> pair(l, std::vector<std::vector<Vertex>>(l));
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      pair[i][j] = intersect_sorted(vsets[i], vsets[j]);
      if (pair[i][j].empty()) continue;
      if (!is_connected(induced_subcomplex(p.carrier(), pair[i][j]))) {
        r.pairwise_connected = false;
        r.failures.push_back("facets " + names[i] + " and " + names[j] + " meet in a disconnected set");
      }
    }
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      if (pair[i][j].empty()) continue;
      for (int k = j + 1; k < l; ++k) {
        if (pair[i][k].empty() || pair[j][k].empty()) continue;
        if (intersect_sorted(pair[i][j], vsets[k]).empty()) {
          r.triple_condition = false;
          r.failures.push_back("facets " + names[i] + ", " + names[j] + ", " + names[k] +
                               " meet pairwise but have no common point");
        }
      }
    }
  r.homology_useful = r.facet_h1_trivial && r.pairwise_connected && r.triple_condition;
  r.carrier_h1_trivial = h1_trivial(p.carrier());
  return r;
}

PatternedComplex cell_from_flag_sphere(const Complex& sphere) {
  if (sphere.is_void() || sphere.vertices().empty()) throw InvalidArgument("sphere has no vertices");
  const int n = sphere.dimension() + 1;
  if (!is_generalized_homology_sphere(sphere, n))
    throw InvalidArgument("input is not a generalized homology sphere");
  Subdivision sd(sphere);
  const Complex& lp = sd.complex();
  std::map<std::string, Complex> facets;
  for (Vertex v : sphere.vertices())
    facets.emplace("v" + std::to_string(v), star(lp, Simplex{sd.barycenter_of(Simplex{v})}));
  return PatternedComplex(cone(lp), std::move(facets));
}

namespace patterns {

PatternedComplex interval() {
  return PatternedComplex(gen::simplex(1), {{"a", Complex({Simplex{0}})}, {"b", Complex({Simplex{1}})}});
}

PatternedComplex simplex_cell(int n) {
  if (n < 1) throw InvalidArgument("simplex_cell requires n >= 1");
  std::map<std::string, Complex> facets;
  Simplex all = gen::simplex(n).maximal_simplices().front();
  for (int i = 0; i <= n; ++i) facets.emplace("f" + std::to_string(i), Complex({all.without_index(i)}));
  return PatternedComplex(gen::simplex(n), std::move(facets));
}

PatternedComplex square() {
  Complex carrier({Simplex{0, 1, 2}, Simplex{0, 2, 3}});
  return PatternedComplex(carrier, {{"s0", Complex({Simplex{0, 1}})},
                                    {"s1", Complex({Simplex{1, 2}})},
                                    {"s2", Complex({Simplex{2, 3}})},
                                    {"s3", Complex({Simplex{0, 3}})}});
}

PatternedComplex polygon_cell(int p) {
  if (p < 3 || p > 99) throw InvalidArgument("polygon_cell requires 3 <= p <= 99");
  std::map<std::string, Complex> facets;
  for (int i = 0; i < p; ++i) {
    std::string name = (i < 10 ? "s0" : "s") + std::to_string(i);
    facets.emplace(name, Complex({Simplex{i, (i + 1) % p}}));
  }
  return PatternedComplex(gen::disk_polygon(p), std::move(facets));
}

PatternedComplex grid_square(int m, int k) {
  auto id = [m](int i, int j) { return static_cast<Vertex>(i + (m + 1) * j); };
  std::vector<Simplex> bottom, right, top, left;
  for (int i = 0; i < m; ++i) {
    bottom.push_back(Simplex{id(i, 0), id(i + 1, 0)});
    top.push_back(Simplex{id(i, k), id(i + 1, k)});
  }
  for (int j = 0; j < k; ++j) {
    left.push_back(Simplex{id(0, j), id(0, j + 1)});
    right.push_back(Simplex{id(m, j), id(m, j + 1)});
  }
  return PatternedComplex(gen::grid_disk(m, k), {{"bottom", Complex(bottom)},
                                                 {"right", Complex(right)},
                                                 {"top", Complex(top)},
                                                 {"left", Complex(left)}});
}

PatternedComplex hemisphere(int p) {
  return PatternedComplex(gen::disk_polygon(p), {{"rim", gen::cycle(p)}});
}

PatternedComplex annulus(int m, int k) {
  std::vector<Simplex> inner, outer;
  for (int i = 0; i < m; ++i) {
    inner.push_back(Simplex{i, (i + 1) % m});
    outer.push_back(Simplex{i + m * k, (i + 1) % m + m * k});
  }
  return PatternedComplex(gen::annulus(m, k), {{"inner", Complex(inner)}, {"outer", Complex(outer)}});
}

PatternedComplex mobius() {
  Complex carrier = gen::mobius_strip();
  return PatternedComplex(carrier, {{"rim", boundary_subcomplex(carrier)}});
}

PatternedComplex bigon() {
  return PatternedComplex(gen::disk_polygon(4), {{"a", Complex({Simplex{0, 1}, Simplex{1, 2}})},
                                                 {"b", Complex({Simplex{2, 3}, Simplex{0, 3}})}});
}

PatternedComplex closed(const Complex& k) { return PatternedComplex(k, {}); }

PatternedComplex cube_cell(int n) { return cell_from_flag_sphere(gen::cross_polytope_boundary(n)); }

}  // namespace patterns

}  // namespace haken
