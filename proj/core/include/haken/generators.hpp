#pragma once

#include "haken/complex.hpp"

namespace haken::gen {

/// The full simplex Δⁿ on vertices 0..n. Requires n ≥ 0.
Complex simplex(int n);
/// ∂Δⁿ on vertices 0..n (an (n-1)-sphere). Requires n ≥ 1.
Complex simplex_boundary(int n);
/// p-cycle on vertices 0..p-1. Requires p ≥ 3.
Complex cycle(int p);
/// Boundary of the n-dimensional cross-polytope; ±eᵢ are labels 2i and 2i+1. Requires n ≥ 1.
Complex cross_polytope_boundary(int n);
/// Path with `edges` edges on vertices 0..edges. Requires edges ≥ 1.
Complex path(int edges);
/// Cone over a p-cycle: boundary labels 0..p-1, centre p. Requires p ≥ 3.
Complex disk_polygon(int p);

/// m×k torus grid, vertex (i, j) ↦ i + m·j, each square split along (i,j)-(i+1,j+1).
/// Requires m, k ≥ 3.
Complex grid_torus(int m, int k);
/// Klein bottle from the m×k grid with (x, y + k) ~ (-x, y); vertex (i, j) ↦ i + m·j.
/// The columns x = 0 and x = m/2 are the two one-sided circles. Requires m even,
/// m ≥ 4 and k ≥ 3.
Complex klein_bottle(int m = 6, int k = 4);
/// m×k annulus: cycle × path, vertex (i, j) ↦ i + m·j for 0 ≤ j ≤ k. Requires m ≥ 3, k ≥ 1.
Complex annulus(int m, int k = 1);
/// The 5-vertex Möbius strip {i, i+1, i+2} mod 5.
Complex mobius_strip();
/// The 7-vertex Möbius torus {i, i+1, i+3}, {i, i+2, i+3} mod 7; its 1-skeleton is K₇.
Complex torus_7();
/// The 6-vertex real projective plane (hemi-icosahedron).
Complex projective_plane_6();
/// m×m×m 3-torus, Freudenthal triangulation of each cube; vertex (i,j,k) ↦ i + m·j + m²·k.
/// Requires m ≥ 3.
Complex grid_torus3(int m);
/// (m+1)×(k+1) vertex grid disk, vertex (i, j) ↦ i + (m+1)·j. Requires m, k ≥ 1.
Complex grid_disk(int m, int k);
/// Connected sum: removes the top simplices `hole_a` of `a` and `hole_b` of `b`
/// and identifies their boundaries vertex-by-vertex in sorted order. Labels of
/// `b` not on the hole are shifted above max(a).
Complex connected_sum(const Complex& a, const Simplex& hole_a, const Complex& b, const Simplex& hole_b);
/// Closed orientable genus-2 surface: connected sum of two 6×6 grid tori.
Complex genus2_surface();

}  // namespace haken::gen
