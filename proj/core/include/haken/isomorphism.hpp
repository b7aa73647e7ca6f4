#pragma once

#include <cstdint>
#include <map>

#include "haken/complex.hpp"

namespace haken {

struct IsomorphismResult {
  bool isomorphic = false;
  /// Vertex bijection K₁ → K₂ carrying maximal simplices onto maximal simplices.
  std::map<Vertex, Vertex> witness;
  std::uint64_t nodes_visited = 0;
};

/// Backtracking search for a simplicial isomorphism, pruned by vertex degree,
/// number of incident maximal simplices and the f-vector of the vertex link.
/// Throws BudgetExceeded once more than `node_budget` partial maps are tried.
IsomorphismResult find_isomorphism(const Complex& a, const Complex& b,
                                   std::uint64_t node_budget = 5'000'000);

inline bool are_isomorphic(const Complex& a, const Complex& b,
                           std::uint64_t node_budget = 5'000'000) {
  return find_isomorphism(a, b, node_budget).isomorphic;
}

}  // namespace haken
