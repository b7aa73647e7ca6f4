#include "haken/isomorphism.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "haken/error.hpp"

namespace haken {
namespace {

using Signature = std::vector<std::int64_t>;

Signature vertex_signature(const Complex& k, Vertex v) {
  Signature sig;
  sig.push_back(static_cast<std::int64_t>(k.neighbours(v).size()));
  sig.push_back(static_cast<std::int64_t>(k.maximal_containing(v).size()));
  for (auto f : f_vector(link(k, Simplex{v}))) sig.push_back(f);
  return sig;
}

class Search {
 public:
  Search(const Complex& a, const Complex& b, std::uint64_t budget) : a_(a), b_(b), budget_(budget) {
    for (Vertex v : a.vertices()) sig_a_[v] = vertex_signature(a, v);
    for (Vertex v : b.vertices()) sig_b_[v] = vertex_signature(b, v);
    for (const auto& m : b.maximal_simplices()) max_b_.insert(m);
    order_vertices();
  }

  bool invariants_match() const {
    if (f_vector(a_) != f_vector(b_)) return false;
    std::vector<Signature> sa, sb;
    for (auto& [v, s] : sig_a_) sa.push_back(s);
    for (auto& [v, s] : sig_b_) sb.push_back(s);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  bool run() { return extend(0); }
  std::map<Vertex, Vertex> witness() const { return {forward_.begin(), forward_.end()}; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Connected BFS order so each new vertex is constrained by already mapped neighbours.
  void order_vertices() {
    std::unordered_set<Vertex> placed;
    for (Vertex start : a_.vertices()) {
      if (placed.count(start)) continue;
      std::vector<Vertex> queue{start};
      placed.insert(start);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order_.push_back(queue[i]);
        for (Vertex w : a_.neighbours(queue[i])) {
          if (placed.insert(w).second) queue.push_back(w);
        }
      }
    }
  }

  bool consistent(Vertex v, Vertex w) const {
    for (auto& [u, image] : forward_) {
      if (a_.adjacent(u, v) != b_.adjacent(image, w)) return false;
    }
    // every maximal simplex of a that is now completely mapped must land on a maximal simplex of b
    for (auto i : a_.maximal_containing(v)) {
      const auto& m = a_.maximal_simplices()[i];
      Simplex::Storage img;
      bool complete = true;
      for (Vertex x : m) {
        if (x == v) {
          img.push_back(w);
          continue;
        }
        auto it = forward_.find(x);
        if (it == forward_.end()) {
          complete = false;
          break;
        }
        img.push_back(it->second);
      }
      if (complete && !max_b_.count(Simplex(std::move(img)))) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w : b_.vertices()) {
      if (used_.count(w) || sig_a_.at(v) != sig_b_.at(w)) continue;
      if (++nodes_ > budget_) throw BudgetExceeded("isomorphism search exceeded node budget");
      if (!consistent(v, w)) continue;
      forward_[v] = w;
      used_.insert(w);
      if (extend(depth + 1)) return true;
      forward_.erase(v);
      used_.erase(w);
    }
    return false;
  }

  const Complex& a_;
  const Complex& b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<Vertex, Signature> sig_a_, sig_b_;
  std::unordered_set<Simplex, SimplexHash> max_b_;
  std::vector<Vertex> order_;
  std::unordered_map<Vertex, Vertex> forward_;
  std::unordered_set<Vertex> used_;
};

}  // namespace

IsomorphismResult find_isomorphism(const Complex& a, const Complex& b, std::uint64_t node_budget) {
  IsomorphismResult result;
  if (a.num_vertices() != b.num_vertices() ||
      a.maximal_simplices().size() != b.maximal_simplices().size()) {
    return result;
  }
  if (a.num_vertices() == 0) {
    result.isomorphic = (a == b);
    return result;
  }
  Search search(a, b, node_budget);
  if (!search.invariants_match()) return result;
  result.isomorphic = search.run();
  result.nodes_visited = search.nodes();
  if (result.isomorphic) result.witness = search.witness();
  return result;
}

}  // namespace haken
