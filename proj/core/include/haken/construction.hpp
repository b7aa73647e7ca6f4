#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "haken/complex.hpp"
#include "haken/dyadic.hpp"
#include "haken/pattern.hpp"

namespace haken {

inline constexpr int kDefaultMirrorLimit = 12;

/// Names of the facets containing v. Throws InvalidArgument for an unknown vertex.
std::vector<std::string> vertex_stabilizer_set(const PatternedComplex& p, Vertex v);

/// (ℤ/2)^m double of a patterned complex over a set of mirror facets.
///
/// Group elements are m-bit masks (bit i = mirrors[i]). A vertex of the
/// double is a pair (coset of G_{S(v)}, v) where S(v) is the set of mirrors
/// through v; the coset is stored by its minimal representative, the mask
/// with every bit of S(v) cleared. Labels are 0..N-1 ordered by (v, coset).
struct DoubledComplex {
  Complex complex;
  std::vector<std::string> mirrors;
  std::vector<std::uint32_t> coset;  // by new label
  std::vector<Vertex> origin;        // by new label
  /// action[i][x] is the image of vertex x under the reflection in mirrors[i].
  std::vector<std::vector<Vertex>> action;
  /// Every (n-1)-face lies in exactly two n-faces.
  bool closed = false;
};

/// Mirrors are reordered to follow the facet order of `p`. Throws
/// InvalidArgument on an unknown or repeated name, PatternError on a non-full
/// mirror and BudgetExceeded when more than `mirror_limit` mirrors are given.
DoubledComplex build_double(const PatternedComplex& p, const std::vector<std::string>& mirrors,
                            int mirror_limit = kDefaultMirrorLimit);
/// Double over every facet.
DoubledComplex build_double(const PatternedComplex& p, int mirror_limit = kDefaultMirrorLimit);

/// Boundary pattern on the double whose facets are the components of the
/// preimages of the facets of `p` that are not mirrors. A preimage with
/// several components yields facets "<name>.0", "<name>.1", ...
PatternedComplex lifted_pattern(const DoubledComplex& d, const PatternedComplex& p);

struct QuotientReport {
  std::int64_t chi_double = 0;
  int mirrors = 0;
  Dyadic chi_orb;
  /// χ(double) = 2^l · χ^orb(P).
  bool equal = false;
};

QuotientReport verify_quotient_formula(const PatternedComplex& p, int mirror_limit = kDefaultMirrorLimit);

/// χ(double(P, mirrors)) / 2^m. Beyond the mirror limit the value is taken
/// from the strata formula on P restricted to the mirrors, without a build.
Dyadic partial_quotient_chi(const PatternedComplex& p, const std::vector<std::string>& mirrors,
                            int mirror_limit = kDefaultMirrorLimit);

}  // namespace haken
