#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "haken/complex.hpp"
#include "haken/dyadic.hpp"
#include "haken/pattern.hpp"

namespace haken {

/// Validation of a hypersurface subcomplex F of a patterned n-manifold.
struct CutLocus {
  Complex subcomplex;
  bool full = false;
  /// Pure of dimension n - 1, each (n-2)-face in at most two (n-1)-faces,
  /// and every (n-1)-face interior to the carrier.
  bool hypersurface = false;
  /// ∂F = F ∩ ∂M.
  bool proper = false;
  /// F meets every stratum of codimension k in a pure (n-1-k)-dimensional set.
  bool transverse = false;
  std::vector<std::string> problems;
  bool valid() const noexcept { return full && hypersurface && proper && transverse; }
};

CutLocus check_cut_locus(const PatternedComplex& p, const Complex& f);

struct CutResult {
  PatternedComplex result;
  /// New vertex -> vertex it was split from (identity off F).
  std::map<Vertex, Vertex> origin;
  /// One entry per connected component of F, in component order.
  std::vector<bool> two_sided;
  std::vector<std::string> new_facets;
};

/// Cuts P open along F by splitting every vertex of F into one copy per side.
///
/// Around a vertex v of F the top simplices containing v are grouped by
/// crossing the (n-1)-faces through v that are not in F; each group gets its
/// own copy of v. The first group keeps the label v, further copies get
/// fresh labels above max(carrier) in order of (v, group). A component C of F
/// contributes the facets "<name>+" and "<name>-" when two-sided and "<name>"
/// when one-sided; with several components the prefix becomes "<name>.<i>".
/// An old facet split into several pieces becomes "<facet>.0", "<facet>.1", ...
///
/// Throws CutError when F is not a valid cut locus or a new name collides.
CutResult cut_open(const PatternedComplex& p, const Complex& f, const std::string& name = "cut");

/// Connected components of the carrier, each with the facets it contains.
std::vector<PatternedComplex> split_components(const PatternedComplex& p);

struct OrbifoldEuler {
  Dyadic strata;
  Dyadic poincare;
  Dyadic nerve;
  bool agree() const { return strata == poincare && strata == nerve; }
};

OrbifoldEuler orbifold_euler_all(const PatternedComplex& p);

struct CutInvarianceReport {
  OrbifoldEuler before;
  OrbifoldEuler after;
  /// Sum of χ^orb over the components of the result (strata method).
  Dyadic after_components;
  std::vector<bool> two_sided;
  std::size_t new_facets = 0;
  bool equal = false;

  /// M closed without facets: χ(M') − χ(F') + ½χ(F') = χ(M), F' the new boundary.
  bool closed_case = false;
  std::int64_t chi_m = 0;
  std::int64_t chi_cut = 0;
  std::int64_t chi_new_boundary = 0;
  bool closed_identity = false;
};

CutInvarianceReport verify_cut_invariance(const PatternedComplex& p, const Complex& f,
                                          const std::string& name = "cut");

struct LedgerStep {
  /// Name given to the new facets; empty means "cut<k>" for step k.
  std::string name;
  Complex cut;
};

struct StageRecord {
  std::size_t cells = 0;
  std::size_t facets = 0;
  std::size_t top_simplices = 0;
  OrbifoldEuler chi_orb;
  /// χ^orb equals the sum over the components.
  bool additive = false;
};

struct HierarchyLedger {
  /// M_0, ..., M_m.
  std::vector<PatternedComplex> stages;
  std::vector<StageRecord> records;
  /// Per step: sidedness of each component of the cut.
  std::vector<std::vector<bool>> sidedness;
  /// Components of the last stage.
  std::vector<PatternedComplex> terminal;
  Dyadic terminal_sum;
  bool chi_orb_constant = false;
  /// Essentialness (π₁-injectivity) of the cuts is assumed, never checked.
  static constexpr bool essentialness_checked = false;
};

/// Replays the cuts in order. Throws CutError prefixed with the step index.
HierarchyLedger run_prehierarchy(const PatternedComplex& initial, const std::vector<LedgerStep>& steps);

struct TerminalCertificate {
  Complex nerve;
  bool acyclic = false;
  bool ghs = false;
  bool flag = false;
  Dyadic lambda;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

struct HierarchyCertificate {
  std::vector<TerminalCertificate> cells;
  Dyadic lambda_sum;
  /// M_0 closed and of even dimension.
  bool closed_even = false;
  std::int64_t chi_m0 = 0;
  /// χ(M_0) = Σλ when closed_even.
  bool euler_matches = true;
  /// (-1)^{n/2} χ(M_0) ≥ 0 when closed_even; reported, not required.
  bool sign_check = true;
  bool certified = false;
  std::vector<std::string> failures;
};

HierarchyCertificate certify_hierarchy(const HierarchyLedger& ledger);

}  // namespace haken
