#include "haken/construction.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "haken/error.hpp"

namespace haken {

std::vector<std::string> vertex_stabilizer_set(const PatternedComplex& p, Vertex v) {
  if (!p.carrier().has_vertex(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not in the carrier");
  std::vector<std::string> out;
  for (const auto& [name, f] : p.facets())
    if (f.has_vertex(v)) out.push_back(name);
  return out;
}

namespace {

std::vector<std::string> ordered_mirrors(const PatternedComplex& p, const std::vector<std::string>& mirrors) {
  std::set<std::string> seen;
  for (const auto& m : mirrors) {
    if (!p.facets().count(m)) throw InvalidArgument("no facet named " + m);
    if (!seen.insert(m).second) throw InvalidArgument("mirror " + m + " listed twice");
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

DoubledComplex build_double(const PatternedComplex& p, const std::vector<std::string>& mirror_names,
                            int mirror_limit) {
  DoubledComplex d;
  d.mirrors = ordered_mirrors(p, mirror_names);
  const int m = static_cast<int>(d.mirrors.size());
  if (m > mirror_limit || m > 30)
    throw BudgetExceeded("double over " + std::to_string(m) + " mirrors exceeds the limit of " +
                         std::to_string(mirror_limit));
  for (const auto& name : d.mirrors)
    if (!is_full_subcomplex(p.facet(name), p.carrier()))
      throw PatternError("mirror " + name + " is not a full subcomplex");

  const Complex& carrier = p.carrier();
  const Vertex top = carrier.max_label();
  std::vector<std::uint32_t> mask(static_cast<std::size_t>(top) + 1, 0);
  for (int i = 0; i < m; ++i)
    for (Vertex v : p.facet(d.mirrors[i]).vertices()) mask[v] |= 1u << i;

  // Cosets of vertex v are the masks r with r & mask[v] == 0; their rank is
  // the value of the free bits of r read as a binary number.
  std::vector<Vertex> base(static_cast<std::size_t>(top) + 1, -1);
  Vertex next = 0;
  for (Vertex v : carrier.vertices()) {
    base[v] = next;
    const std::uint32_t count = 1u << (m - std::popcount(mask[v]));
    for (std::uint32_t r = 0; r < (1u << m); ++r) {
      if (r & mask[v]) continue;
      d.coset.push_back(r);
      d.origin.push_back(v);
    }
    next += static_cast<Vertex>(count);
  }
  auto label = [&](Vertex v, std::uint32_t g) {
    const std::uint32_t free = ~mask[v];
    std::uint32_t rank = 0;
    int bit = 0;
    for (int i = 0; i < m; ++i) {
      if (!(free >> i & 1u)) continue;
      if (g >> i & 1u) rank |= 1u << bit;
      ++bit;
    }
    return base[v] + static_cast<Vertex>(rank);
  };

  std::vector<Simplex> simplices;
  simplices.reserve(carrier.maximal_simplices().size() << m);
  for (std::uint32_t g = 0; g < (1u << m); ++g)
    for (const auto& s : carrier.maximal_simplices()) {
      Simplex::Storage img;
      for (Vertex v : s) img.push_back(label(v, g));
      simplices.emplace_back(std::move(img));
    }
  d.complex = Complex(std::move(simplices));

  d.action.assign(static_cast<std::size_t>(m), std::vector<Vertex>(d.origin.size()));
  for (int i = 0; i < m; ++i)
    for (std::size_t x = 0; x < d.origin.size(); ++x)
      d.action[i][x] = label(d.origin[x], d.coset[x] ^ (1u << i));
  d.closed = is_pseudomanifold(d.complex, true);
  return d;
}

DoubledComplex build_double(const PatternedComplex& p, int mirror_limit) {
  return build_double(p, p.facet_names(), mirror_limit);
}

PatternedComplex lifted_pattern(const DoubledComplex& d, const PatternedComplex& p) {
  std::map<std::string, Complex> facets;
  for (const auto& [name, f] : p.facets()) {
    if (std::binary_search(d.mirrors.begin(), d.mirrors.end(), name)) continue;
    std::vector<Vertex> pre;
    for (std::size_t x = 0; x < d.origin.size(); ++x)
      if (f.has_vertex(d.origin[x])) pre.push_back(static_cast<Vertex>(x));
    auto comps = connected_components(induced_subcomplex(d.complex, pre));
    if (comps.size() == 1) {
      facets.emplace(name, std::move(comps.front()));
      continue;
    }
    for (std::size_t i = 0; i < comps.size(); ++i) facets.emplace(name + "." + std::to_string(i), std::move(comps[i]));
  }
  return PatternedComplex(d.complex, std::move(facets));
}

QuotientReport verify_quotient_formula(const PatternedComplex& p, int mirror_limit) {
  QuotientReport r;
  auto d = build_double(p, mirror_limit);
  r.mirrors = static_cast<int>(d.mirrors.size());
  r.chi_double = euler_characteristic(d.complex);
  r.chi_orb = orbifold_euler_strata(p);
  r.equal = Dyadic(r.chi_double) == r.chi_orb.scaled(r.mirrors);
  return r;
}

Dyadic partial_quotient_chi(const PatternedComplex& p, const std::vector<std::string>& mirrors, int mirror_limit) {
  auto names = ordered_mirrors(p, mirrors);
  const int m = static_cast<int>(names.size());
  if (m > mirror_limit) return orbifold_euler_strata(p.restricted_to(names));
  auto d = build_double(p, names, mirror_limit);
  return Dyadic(euler_characteristic(d.complex)).scaled(-m);
}

}  // namespace haken
