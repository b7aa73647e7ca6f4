#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "haken/complex.hpp"
#include "haken/pattern.hpp"
#include "haken/surgery.hpp"

namespace haken::corpus {

inline constexpr std::uint64_t kDefaultSeed = 0;

struct NamedComplex {
  std::string name;
  Complex complex;
};

struct NamedPattern {
  std::string name;
  PatternedComplex pattern;
};

struct NamedLedger {
  std::string name;
  PatternedComplex initial;
  std::vector<LedgerStep> steps;
};

struct CutPair {
  std::string name;
  PatternedComplex pattern;
  Complex cut;
};

/// Cₘ * Cₙ for 4 ≤ m ≤ n ≤ 8 (flag 3-spheres).
std::vector<NamedComplex> join_spheres();
/// Barycentric subdivisions of small spheres: (∂Δ³)′, (∂Δ⁴)′, (C₃*C₃)′, ...
std::vector<NamedComplex> barycentric_spheres();
/// Flag 3-spheres obtained from joins and cross-polytopes by seeded edge subdivisions.
std::vector<NamedComplex> random_flag_spheres(std::uint64_t seed = kDefaultSeed, int count = 6);
/// All flag 3-spheres of the corpus.
std::vector<NamedComplex> flag_3spheres(std::uint64_t seed = kDefaultSeed);
/// Generalized homology spheres: cycles, simplex and cross-polytope
/// boundaries, suspensions and joins. Not all are flag.
std::vector<NamedComplex> base_spheres();
/// base_spheres, barycentric_spheres and random_flag_spheres.
std::vector<NamedComplex> ghs_spheres(std::uint64_t seed = kDefaultSeed);
/// Closed surfaces and the 3-torus.
std::vector<NamedComplex> closed_manifolds();

/// Polygon cells for p = 3..12.
std::vector<NamedPattern> polygon_cells();
std::vector<NamedPattern> patterns();

NamedLedger torus_ledger();
NamedLedger klein_ledger();
NamedLedger genus2_ledger();
NamedLedger torus3_ledger();
/// Square cut along a path around a corner: ends in a triangle and a pentagon.
NamedLedger corner_ledger();
std::vector<NamedLedger> ledgers();

std::vector<CutPair> cut_pairs();

std::vector<std::string> families();
/// Files (name, contents) of a family in canonical form, sorted by name.
/// Throws InvalidArgument for an unknown family.
std::vector<std::pair<std::string, std::string>> generate(const std::string& family,
                                                          std::uint64_t seed = kDefaultSeed);

}  // namespace haken::corpus
