#pragma once

#include <map>
#include <string>
#include <vector>

#include "haken/complex.hpp"
#include "haken/dyadic.hpp"

namespace haken {

struct PatternOptions {
  /// Barycentrically subdivide the carrier once (lifting the facets) when a
  /// facet is not a full subcomplex; otherwise such input is rejected.
  bool subdivide_for_fullness = true;
  /// Run the (slower) homology-manifold-with-boundary check on the carrier.
  bool check_manifold = false;
};

/// A triangulated compact n-manifold with a boundary pattern: named facets,
/// each a connected pure (n-1)-dimensional full subcomplex of the boundary.
class PatternedComplex {
 public:
  /// Throws PatternError when the carrier is not a pure pseudomanifold with
  /// boundary or a facet is malformed. Incomplete patterns are accepted with
  /// a warning.
  PatternedComplex(Complex carrier, std::map<std::string, Complex> facets, PatternOptions options = {});

  const Complex& carrier() const noexcept { return carrier_; }
  int dimension() const noexcept { return carrier_.dimension(); }
  const std::map<std::string, Complex>& facets() const noexcept { return facets_; }
  std::vector<std::string> facet_names() const;
  const Complex& facet(const std::string& name) const;
  std::size_t num_facets() const noexcept { return facets_.size(); }
  /// Closure of the (n-1)-faces lying in a single n-face.
  const Complex& boundary() const noexcept { return boundary_; }
  bool is_closed() const noexcept { return boundary_.is_void(); }
  /// The facets cover the boundary.
  bool is_complete() const noexcept { return complete_; }
  bool was_subdivided() const noexcept { return subdivided_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Same carrier, keeping only the named facets.
  PatternedComplex restricted_to(const std::vector<std::string>& names) const;

 private:
  Complex carrier_;
  std::map<std::string, Complex> facets_;
  Complex boundary_;
  bool complete_ = true;
  bool subdivided_ = false;
  std::vector<std::string> warnings_;
};

/// A connected component of a nonempty intersection of facets.
struct Stratum {
  std::vector<std::string> facet_set;  // sorted; empty for codimension 0
  Complex carrier;
  /// Union of the strata of larger codimension contained in this one.
  Complex frontier;
  int codimension() const noexcept { return static_cast<int>(facet_set.size()); }
};

/// All strata ordered by codimension, facet set, then smallest vertex.
/// Throws PatternError naming the facet set when an intersection component
/// is not pure of dimension n - k.
std::vector<Stratum> strata(const PatternedComplex& p);

/// Nerve of the boundary complex. Vertex i stands for facet_names[i].
struct Nerve {
  Complex complex;
  std::vector<std::string> facet_names;
  /// S_σ for every simplex of the nerve, including ∅ ↦ carrier.
  std::map<Simplex, Complex> strata_union;
};

Nerve nerve(const PatternedComplex& p);

/// Σ_S (1/2)^codim S · (χ(S) − χ(frontier S)).
Dyadic orbifold_euler_strata(const PatternedComplex& p);
/// (-1)^n Σ_S (-1/2)^codim S · χ(S).
Dyadic orbifold_euler_poincare(const PatternedComplex& p);
/// (-1)^n Σ_{σ ∈ L, σ = ∅ included} (-1/2)^{dim σ + 1} · χ(S_σ).
Dyadic orbifold_euler_nerve(const PatternedComplex& p);

struct UsefulnessReport {
  /// H₁(F) = 0 for every facet F (stand-in for simple connectivity).
  bool facet_h1_trivial = true;
  bool pairwise_connected = true;
  /// Pairwise meeting facet triples have a common point.
  bool triple_condition = true;
  bool homology_useful = true;
  /// When H₁(M) ≠ 0 the simply-connected criteria do not settle usefulness.
  bool carrier_h1_trivial = true;
  std::vector<std::string> failures;

  /// "homology-useful", "not homology-useful" or "usefulness undecided".
  std::string verdict() const;
};

UsefulnessReport usefulness_report(const PatternedComplex& p);

/// Cone(L') with one facet per vertex v of L, the closed star of v in L'
/// (named "v<label>"). Throws InvalidArgument when L is not a generalized
/// homology sphere.
PatternedComplex cell_from_flag_sphere(const Complex& sphere);

namespace patterns {

/// Single edge {0,1} with facets "a" = {0}, "b" = {1}.
PatternedComplex interval();
/// Δⁿ with facet "f<i>" opposite vertex i. Requires n ≥ 1.
PatternedComplex simplex_cell(int n);
/// Two triangles {0,1,2}, {0,2,3} with side facets "s0".."s3".
PatternedComplex square();
/// Cone over the p-cycle with side facets "s00", "s01", … Requires 3 ≤ p ≤ 99.
PatternedComplex polygon_cell(int p);
/// grid_disk(m, k) with facets "bottom", "right", "top", "left".
PatternedComplex grid_square(int m, int k);
/// Cone over the p-cycle with a single facet "rim".
PatternedComplex hemisphere(int p);
/// annulus(m, k) with facets "inner" (j = 0) and "outer" (j = k).
PatternedComplex annulus(int m, int k);
/// 5-vertex Möbius strip with the single facet "rim" (subdivided once by the loader).
PatternedComplex mobius();
/// Square disk with two facets meeting in two points.
PatternedComplex bigon();
/// Closed carrier, no facets.
PatternedComplex closed(const Complex& k);
/// Cubical n-cell: cell_from_flag_sphere of the cross-polytope boundary.
PatternedComplex cube_cell(int n);

}  // namespace patterns

}  // namespace haken
