#pragma once

#include <optional>
#include <string>
#include <vector>

#include "haken/complex.hpp"
#include "haken/smith.hpp"

namespace haken {

/// Unreduced integral homology H₀ … H_dim.
struct HomologyProfile {
  std::vector<std::int64_t> betti;
  /// torsion[i] lists the invariant factors > 1 of Hᵢ in divisibility order.
  std::vector<std::vector<BigInt>> torsion;

  std::int64_t euler() const;
  /// Stable plain-text rendering, one "H<i> <group>" line per degree.
  std::string to_string() const;
  /// Equality up to trailing trivial degrees.
  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

/// ∂_d with rows indexed by faces(d-1) and columns by faces(d); d ≥ 1.
/// Sign of dropping the i-th vertex of the sorted tuple is (-1)^i.
SparseIntMatrix boundary_matrix(const Complex& k, int d);

HomologyProfile homology(const Complex& k);
/// Unreduced homology of S^d (d = -1 is the empty sphere).
HomologyProfile sphere_profile(int d);
/// Homology of a point.
HomologyProfile point_profile();

struct ManifoldCheck {
  bool ok = true;
  /// A simplex whose link has the wrong homology.
  std::optional<Simplex> witness;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

/// Closed polyhedral homology manifold: every link Lk(σ), σ ≠ ∅, has the
/// homology of S^{n-|σ|}. With `allow_boundary` a link may instead be acyclic.
/// Throws InvalidArgument for non-pure input.
ManifoldCheck check_homology_manifold(const Complex& k, bool allow_boundary = false);
bool is_homology_manifold(const Complex& k);
/// Closed homology manifold of dimension n-1 with the homology of S^{n-1}.
/// Only homology is certified; simple connectivity is not decided.
bool is_generalized_homology_sphere(const Complex& k, int n);

}  // namespace haken
