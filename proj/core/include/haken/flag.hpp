#pragma once

#include <vector>

#include "haken/complex.hpp"
#include "haken/dyadic.hpp"

namespace haken {

struct FlagReport {
  bool is_flag = true;
  /// Cliques of the 1-skeleton of size ≥ 3 that are not faces although every
  /// proper subset is, in order of size and then lexicographically.
  std::vector<Simplex> minimal_non_faces;
  /// The size-3 entries of minimal_non_faces.
  std::vector<Simplex> empty_triangles;
};

FlagReport flag_report(const Complex& k);
bool has_empty_triangle(const Complex& k);
/// The complex is flag iff no link Lk(σ), σ ∈ K including ∅, contains an
/// empty triangle. Evaluated literally over all faces.
bool is_flag_via_links(const Complex& k);

/// λ(L) = Σ_{i=-1}^{dim} fᵢ · (-1/2)^{i+1}; zero for the void complex.
Dyadic charney_davis(const Complex& k);

struct CellCertificate {
  bool ghs = false;
  bool flag = false;
  bool haken = false;
};

/// Treats K as the dual nerve of a homotopy n-cell: the cell is Haken iff
/// K is a generalized homology (n-1)-sphere and K is flag.
CellCertificate certify_haken_cell_dual(const Complex& k, int n);

}  // namespace haken
