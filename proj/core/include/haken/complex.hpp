#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "haken/simplex.hpp"

namespace haken {

/// A finite abstract simplicial complex, stored by its maximal simplices.
///
/// Two distinct "small" complexes exist: the void complex (no faces at all,
/// the default) and the complex {∅} whose only face is the empty simplex
/// (the (-1)-sphere, e.g. the link of a top simplex). Every other complex
/// contains ∅ as a face, so f₋₁ = 1.
///
/// Values are immutable. Face lists are computed lazily on first use and
/// shared between copies; the cache is filled under std::call_once, so a
/// Complex may be read from several threads.
class Complex {
 public:
  Complex();
  /// Builds the complex generated by `simplices`; non-maximal and repeated
  /// entries are discarded.
  explicit Complex(std::vector<Simplex> simplices);

  static Complex empty_sphere();

  const std::vector<Simplex>& maximal_simplices() const noexcept { return maximal_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return dim_; }
  bool is_void() const noexcept { return maximal_.empty(); }
  bool is_pure() const noexcept;
  bool has_vertex(Vertex v) const noexcept;
  Vertex max_label() const;
  Vertex min_label() const;

  /// Face membership (any subset of a maximal simplex, including ∅).
  bool contains(const Simplex& s) const;
  /// All d-dimensional faces in lexicographic order; empty for d outside [-1, dim].
  const std::vector<Simplex>& faces(int d) const;
  std::size_t num_faces(int d) const;
  /// Indices into maximal_simplices() of the maximal simplices containing v.
  std::span<const std::uint32_t> maximal_containing(Vertex v) const;
  /// Sorted neighbours of v in the 1-skeleton.
  std::span<const Vertex> neighbours(Vertex v) const;
  bool adjacent(Vertex a, Vertex b) const;

  friend bool operator==(const Complex& a, const Complex& b) noexcept {
    return a.maximal_ == b.maximal_;
  }

 private:
  struct Faces;
  struct Incidence;
  const Faces& face_cache() const;
  const Incidence& incidence() const;

  std::vector<Simplex> maximal_;
  std::vector<Vertex> vertices_;
  int dim_ = -1;
  std::shared_ptr<Faces> faces_;
  std::shared_ptr<Incidence> incidence_;
};

/// f-vector (f₋₁, f₀, …, f_dim); empty for the void complex.
std::vector<std::int64_t> f_vector(const Complex& k);
/// Σ_{i≥0} (-1)^i f_i.
std::int64_t euler_characteristic(const Complex& k);

/// {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}. Throws InvalidArgument if σ ∉ K.
Complex link(const Complex& k, const Simplex& sigma);
/// Closed star: all faces of simplices containing σ. Throws InvalidArgument if σ ∉ K.
Complex star(const Complex& k, const Simplex& sigma);
/// Join; the labels of `b` are shifted to start at max(a) + 1.
Complex join(const Complex& a, const Complex& b);
/// Cone with apex max(K) + 1 (apex 0 for complexes without vertices).
Complex cone(const Complex& k);
/// Suspension, i.e. join with two new vertices.
Complex suspension(const Complex& k);

/// Full subcomplex spanned by a vertex set.
Complex induced_subcomplex(const Complex& k, std::span<const Vertex> vertex_set);
bool is_subcomplex(const Complex& sub, const Complex& k);
/// Every simplex of `k` whose vertices lie in `sub` belongs to `sub`.
bool is_full_subcomplex(const Complex& sub, const Complex& k);
Complex skeleton(const Complex& k, int d);
Complex relabel(const Complex& k, const std::map<Vertex, Vertex>& mapping);
Complex union_of(std::span<const Complex> parts);
Complex intersection(const Complex& a, const Complex& b);
std::vector<Complex> connected_components(const Complex& k);
bool is_connected(const Complex& k);
/// Closure of the (n-1)-faces lying in exactly one n-face (n = dim K).
Complex boundary_subcomplex(const Complex& k);
/// Every (n-1)-face lies in at most two n-faces (exactly two when `closed`).
bool is_pseudomanifold(const Complex& k, bool closed);

/// Barycentric subdivision together with the face ↔ barycenter correspondence.
/// Barycenter labels are 0..N-1, assigned to the nonempty faces of K ordered
/// by (dimension, lexicographic).
class Subdivision {
 public:
  explicit Subdivision(const Complex& k);

  const Complex& complex() const noexcept { return complex_; }
  const Simplex& face_of(Vertex barycenter) const { return faces_.at(static_cast<std::size_t>(barycenter)); }
  Vertex barycenter_of(const Simplex& face) const;
  /// Image L' ⊆ K' of a subcomplex L ⊆ K.
  Complex lift(const Complex& sub) const;
  /// Subcomplex of K' spanned by chains whose faces all contain σ.
  Complex dual_cone(const Simplex& sigma) const;

 private:
  Complex source_;
  std::vector<Simplex> faces_;
  std::unordered_map<Simplex, Vertex, SimplexHash> index_;
  Complex complex_;
};

Complex barycentric_subdivision(const Complex& k);
/// Dual cone D(σ) ⊆ K'; throws InvalidArgument if σ ∉ K or σ = ∅.
Complex dual_cone(const Complex& k, const Simplex& sigma);
/// Stellar subdivision of an edge: the edge is replaced by a new vertex max(K)+1.
Complex subdivide_edge(const Complex& k, const Simplex& edge);

}  // namespace haken
