#include "haken/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "haken/error.hpp"

namespace haken {

struct Complex::Faces {
  std::once_flag once;
  std::vector<std::vector<Simplex>> by_dim;  // index d + 1
};

struct Complex::Incidence {
  std::once_flag once;
  std::vector<std::vector<std::uint32_t>> containing;  // parallel to vertices_
  std::vector<std::vector<Vertex>> neighbours;
};

namespace {

const std::vector<Simplex>& no_simplices() {
  static const std::vector<Simplex> empty;
  return empty;
}

// Calls f on every k-subset of s (k >= 1), in lexicographic order.
template <typename F>
void for_each_subset(const Simplex& s, std::size_t k, F&& f) {
  const std::size_t n = s.size();
  if (k > n || k == 0) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Simplex::Storage buf(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) buf[i] = s[idx[i]];
    f(Simplex::from_sorted(buf));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Complex::Complex()
    : faces_(std::make_shared<Faces>()), incidence_(std::make_shared<Incidence>()) {}

Complex::Complex(std::vector<Simplex> simplices) : Complex() {
  if (simplices.empty()) return;
  std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

  if (simplices.front().size() == simplices.back().size()) {
    maximal_ = std::move(simplices);
  } else {
    std::unordered_map<Vertex, std::vector<std::uint32_t>> by_vertex;
    for (auto& s : simplices) {
      if (s.empty()) {
        if (maximal_.empty()) maximal_.push_back(s);
        continue;
      }
      const std::vector<std::uint32_t>* best = nullptr;
      bool unseen = false;
      for (Vertex v : s) {
        auto it = by_vertex.find(v);
        if (it == by_vertex.end()) {
          unseen = true;
          break;
        }
        if (!best || it->second.size() < best->size()) best = &it->second;
      }
      bool redundant = false;
      if (!unseen && best) {
        for (std::uint32_t i : *best) {
          if (s.is_subset_of(maximal_[i])) {
            redundant = true;
            break;
          }
        }
      }
      if (redundant) continue;
      const auto id = static_cast<std::uint32_t>(maximal_.size());
      for (Vertex v : s) by_vertex[v].push_back(id);
      maximal_.push_back(std::move(s));
    }
    std::sort(maximal_.begin(), maximal_.end());
  }

  std::vector<Vertex> verts;
  for (const auto& s : maximal_) {
    verts.insert(verts.end(), s.begin(), s.end());
    dim_ = std::max(dim_, s.dimension());
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  vertices_ = std::move(verts);
}

Complex Complex::empty_sphere() { return Complex(std::vector<Simplex>{Simplex{}}); }

bool Complex::is_pure() const noexcept {
  return std::all_of(maximal_.begin(), maximal_.end(),
                     [&](const Simplex& s) { return s.dimension() == dim_; });
}

bool Complex::has_vertex(Vertex v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Vertex Complex::max_label() const {
  if (vertices_.empty()) throw InvalidArgument("complex has no vertices");
  return vertices_.back();
}

Vertex Complex::min_label() const {
  if (vertices_.empty()) throw InvalidArgument("complex has no vertices");
  return vertices_.front();
}

const Complex::Faces& Complex::face_cache() const {
  std::call_once(faces_->once, [this] {
    auto& by_dim = faces_->by_dim;
    if (maximal_.empty()) return;
    by_dim.resize(static_cast<std::size_t>(dim_) + 2);
    by_dim[0].push_back(Simplex{});
    for (int d = 0; d <= dim_; ++d) {
      auto& out = by_dim[static_cast<std::size_t>(d) + 1];
      const auto k = static_cast<std::size_t>(d) + 1;
      for (const auto& m : maximal_) {
        for_each_subset(m, k, [&](Simplex s) { out.push_back(std::move(s)); });
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      out.shrink_to_fit();
    }
  });
  return *faces_;
}

const Complex::Incidence& Complex::incidence() const {
  std::call_once(incidence_->once, [this] {
    auto& inc = *incidence_;
    inc.containing.resize(vertices_.size());
    inc.neighbours.resize(vertices_.size());
    auto index_of = [this](Vertex v) {
      return static_cast<std::size_t>(
          std::lower_bound(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
    };
    for (std::uint32_t i = 0; i < maximal_.size(); ++i) {
      const auto& m = maximal_[i];
      for (Vertex v : m) {
        auto vi = index_of(v);
        inc.containing[vi].push_back(i);
        for (Vertex w : m) {
          if (w != v) inc.neighbours[vi].push_back(w);
        }
      }
    }
    for (auto& n : inc.neighbours) {
      std::sort(n.begin(), n.end());
      n.erase(std::unique(n.begin(), n.end()), n.end());
    }
  });
  return *incidence_;
}

std::span<const std::uint32_t> Complex::maximal_containing(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return {};
  const auto& inc = incidence();
  return inc.containing[static_cast<std::size_t>(it - vertices_.begin())];
}

std::span<const Vertex> Complex::neighbours(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return {};
  const auto& inc = incidence();
  return inc.neighbours[static_cast<std::size_t>(it - vertices_.begin())];
}

bool Complex::adjacent(Vertex a, Vertex b) const {
  auto n = neighbours(a);
  return std::binary_search(n.begin(), n.end(), b);
}

bool Complex::contains(const Simplex& s) const {
  if (maximal_.empty()) return false;
  if (s.empty()) return true;
  if (s.dimension() > dim_) return false;
  std::span<const std::uint32_t> best;
  bool first = true;
  for (Vertex v : s) {
    auto c = maximal_containing(v);
    if (c.empty()) return false;
    if (first || c.size() < best.size()) best = c;
    first = false;
  }
  return std::any_of(best.begin(), best.end(),
                     [&](std::uint32_t i) { return s.is_subset_of(maximal_[i]); });
}

const std::vector<Simplex>& Complex::faces(int d) const {
  if (d < -1 || d > dim_ || maximal_.empty()) return no_simplices();
  return face_cache().by_dim[static_cast<std::size_t>(d) + 1];
}

std::size_t Complex::num_faces(int d) const { return faces(d).size(); }

std::vector<std::int64_t> f_vector(const Complex& k) {
  std::vector<std::int64_t> f;
  if (k.is_void()) return f;
  for (int d = -1; d <= k.dimension(); ++d) f.push_back(static_cast<std::int64_t>(k.num_faces(d)));
  return f;
}

std::int64_t euler_characteristic(const Complex& k) {
  std::int64_t chi = 0;
  for (int d = 0; d <= k.dimension(); ++d) {
    const auto n = static_cast<std::int64_t>(k.num_faces(d));
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

namespace {

std::vector<std::uint32_t> maximal_containing_simplex(const Complex& k, const Simplex& sigma) {
  std::vector<std::uint32_t> out;
  if (sigma.empty()) {
    out.resize(k.maximal_simplices().size());
    std::iota(out.begin(), out.end(), 0u);
    return out;
  }
  std::span<const std::uint32_t> best;
  bool first = true;
  for (Vertex v : sigma) {
    auto c = k.maximal_containing(v);
    if (first || c.size() < best.size()) best = c;
    first = false;
  }
  for (auto i : best) {
    if (sigma.is_subset_of(k.maximal_simplices()[i])) out.push_back(i);
  }
  return out;
}

}  // namespace

Complex link(const Complex& k, const Simplex& sigma) {
  if (!k.contains(sigma)) throw InvalidArgument("link: simplex " + sigma.to_string() + " not in complex");
  std::vector<Simplex> parts;
  for (auto i : maximal_containing_simplex(k, sigma)) parts.push_back(k.maximal_simplices()[i].minus(sigma));
  return Complex(std::move(parts));
}

Complex star(const Complex& k, const Simplex& sigma) {
  if (!k.contains(sigma)) throw InvalidArgument("star: simplex " + sigma.to_string() + " not in complex");
  std::vector<Simplex> parts;
  for (auto i : maximal_containing_simplex(k, sigma)) parts.push_back(k.maximal_simplices()[i]);
  return Complex(std::move(parts));
}

Complex join(const Complex& a, const Complex& b) {
  if (a.is_void() || b.is_void()) return Complex();
  const Vertex start = a.num_vertices() ? a.max_label() + 1 : 0;
  const Vertex offset = start - (b.num_vertices() ? b.min_label() : 0);
  std::vector<Simplex> parts;
  parts.reserve(a.maximal_simplices().size() * b.maximal_simplices().size());
  for (const auto& s : a.maximal_simplices()) {
    for (const auto& t : b.maximal_simplices()) {
      Simplex::Storage v(s.labels());
      for (Vertex x : t) v.push_back(x + offset);
      parts.push_back(Simplex::from_sorted(std::move(v)));
    }
  }
  return Complex(std::move(parts));
}

Complex cone(const Complex& k) { return join(k, Complex({Simplex{0}})); }

Complex suspension(const Complex& k) { return join(k, Complex({Simplex{0}, Simplex{1}})); }

Complex induced_subcomplex(const Complex& k, std::span<const Vertex> vertex_set) {
  std::vector<Vertex> w(vertex_set.begin(), vertex_set.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  std::vector<Simplex> parts;
  std::unordered_set<std::uint32_t> seen;
  for (Vertex v : w) {
    for (auto i : k.maximal_containing(v)) {
      if (!seen.insert(i).second) continue;
      Simplex::Storage keep;
      for (Vertex x : k.maximal_simplices()[i]) {
        if (std::binary_search(w.begin(), w.end(), x)) keep.push_back(x);
      }
      parts.push_back(Simplex::from_sorted(std::move(keep)));
    }
  }
  return Complex(std::move(parts));
}

bool is_subcomplex(const Complex& sub, const Complex& k) {
  return std::all_of(sub.maximal_simplices().begin(), sub.maximal_simplices().end(),
                     [&](const Simplex& s) { return k.contains(s); });
}

bool is_full_subcomplex(const Complex& sub, const Complex& k) {
  if (!is_subcomplex(sub, k)) return false;
  const auto& w = sub.vertices();
  std::unordered_set<std::uint32_t> seen;
  for (Vertex v : w) {
    for (auto i : k.maximal_containing(v)) {
      if (!seen.insert(i).second) continue;
      Simplex::Storage keep;
      for (Vertex x : k.maximal_simplices()[i]) {
        if (std::binary_search(w.begin(), w.end(), x)) keep.push_back(x);
      }
      if (!sub.contains(Simplex::from_sorted(std::move(keep)))) return false;
    }
  }
  return true;
}

Complex skeleton(const Complex& k, int d) {
  if (d >= k.dimension()) return k;
  if (d < -1 || k.is_void()) return Complex();
  std::vector<Simplex> parts(k.faces(d));
  for (const auto& m : k.maximal_simplices()) {
    if (m.dimension() < d) parts.push_back(m);
  }
  return Complex(std::move(parts));
}

Complex relabel(const Complex& k, const std::map<Vertex, Vertex>& mapping) {
  std::vector<Simplex> parts;
  parts.reserve(k.maximal_simplices().size());
  for (const auto& m : k.maximal_simplices()) {
    Simplex::Storage v;
    for (Vertex x : m) {
      auto it = mapping.find(x);
      v.push_back(it == mapping.end() ? x : it->second);
    }
    parts.emplace_back(std::move(v));
  }
  return Complex(std::move(parts));
}

Complex union_of(std::span<const Complex> parts) {
  std::vector<Simplex> all;
  for (const auto& p : parts) all.insert(all.end(), p.maximal_simplices().begin(), p.maximal_simplices().end());
  return Complex(std::move(all));
}

Complex intersection(const Complex& a, const Complex& b) {
  std::vector<Simplex> parts;
  for (const auto& m : a.maximal_simplices()) {
    std::unordered_set<std::uint32_t> seen;
    for (Vertex v : m) {
      for (auto i : b.maximal_containing(v)) {
        if (seen.insert(i).second) parts.push_back(m.intersect(b.maximal_simplices()[i]));
      }
    }
  }
  return Complex(std::move(parts));
}

std::vector<Complex> connected_components(const Complex& k) {
  const auto& verts = k.vertices();
  if (verts.empty()) return {};
  auto index_of = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  UnionFind uf(verts.size());
  for (const auto& m : k.maximal_simplices()) {
    for (std::size_t i = 1; i < m.size(); ++i) uf.unite(index_of(m[0]), index_of(m[i]));
  }
  std::map<std::size_t, std::vector<Simplex>> groups;
  for (const auto& m : k.maximal_simplices()) {
    if (!m.empty()) groups[uf.find(index_of(m[0]))].push_back(m);
  }
  // union-find roots are the minimal vertex index of each class, so map order is by min vertex
  std::vector<Complex> out;
  for (auto& [root, parts] : groups) out.emplace_back(std::move(parts));
  return out;
}

bool is_connected(const Complex& k) { return connected_components(k).size() <= 1; }

namespace {

std::unordered_map<Simplex, int, SimplexHash> codim_one_counts(const Complex& k) {
  std::unordered_map<Simplex, int, SimplexHash> counts;
  const int n = k.dimension();
  for (const auto& m : k.maximal_simplices()) {
    if (m.dimension() != n) continue;
    for (std::size_t i = 0; i < m.size(); ++i) ++counts[m.without_index(i)];
  }
  return counts;
}

}  // namespace

Complex boundary_subcomplex(const Complex& k) {
  if (k.dimension() < 1) return Complex();
  std::vector<Simplex> parts;
  for (auto& [face, count] : codim_one_counts(k)) {
    if (count == 1) parts.push_back(face);
  }
  return Complex(std::move(parts));
}

bool is_pseudomanifold(const Complex& k, bool closed) {
  if (k.is_void() || !k.is_pure() || k.dimension() < 1) return false;
  for (auto& [face, count] : codim_one_counts(k)) {
    if (count > 2 || (closed && count != 2)) return false;
  }
  return true;
}

Subdivision::Subdivision(const Complex& k) : source_(k) {
  for (int d = 0; d <= k.dimension(); ++d) {
    for (const auto& f : k.faces(d)) {
      index_.emplace(f, static_cast<Vertex>(faces_.size()));
      faces_.push_back(f);
    }
  }
  complex_ = lift(k);
}

Vertex Subdivision::barycenter_of(const Simplex& face) const {
  auto it = index_.find(face);
  if (it == index_.end()) throw InvalidArgument("subdivision: " + face.to_string() + " is not a face");
  return it->second;
}

namespace {

// Emits, for every ordering of `free` vertices, the chain base ⊂ base+p0 ⊂ ... as barycenter labels.
template <typename Label>
void for_each_chain(const Simplex& base, Simplex free, Label&& label, std::vector<Simplex>& out) {
  Simplex::Storage order(free.begin(), free.end());
  do {
    Simplex::Storage chain;
    Simplex current = base;
    if (!current.empty()) chain.push_back(label(current));
    for (Vertex v : order) {
      current = current.with(v);
      chain.push_back(label(current));
    }
    out.emplace_back(std::move(chain));
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace

Complex Subdivision::lift(const Complex& sub) const {
  std::vector<Simplex> parts;
  auto label = [this](const Simplex& s) { return barycenter_of(s); };
  for (const auto& m : sub.maximal_simplices()) {
    if (m.empty()) continue;
    if (!source_.contains(m)) throw InvalidArgument("lift: " + m.to_string() + " is not a face");
    for_each_chain(Simplex{}, m, label, parts);
  }
  return Complex(std::move(parts));
}

Complex Subdivision::dual_cone(const Simplex& sigma) const {
  if (sigma.empty()) throw InvalidArgument("dual cone of the empty simplex");
  if (!source_.contains(sigma)) throw InvalidArgument("dual cone: " + sigma.to_string() + " not in complex");
  std::vector<Simplex> parts;
  auto label = [this](const Simplex& s) { return barycenter_of(s); };
  for (auto i : maximal_containing_simplex(source_, sigma)) {
    for_each_chain(sigma, source_.maximal_simplices()[i].minus(sigma), label, parts);
  }
  return Complex(std::move(parts));
}

Complex barycentric_subdivision(const Complex& k) { return Subdivision(k).complex(); }

Complex dual_cone(const Complex& k, const Simplex& sigma) {
  if (sigma.empty()) throw InvalidArgument("dual cone of the empty simplex");
  if (!k.contains(sigma)) throw InvalidArgument("dual cone: " + sigma.to_string() + " not in complex");
  return Subdivision(k).dual_cone(sigma);
}

Complex subdivide_edge(const Complex& k, const Simplex& edge) {
  if (edge.size() != 2 || !k.contains(edge)) throw InvalidArgument("subdivide_edge: " + edge.to_string() + " is not an edge");
  const Vertex w = k.max_label() + 1;
  std::vector<Simplex> parts;
  for (const auto& m : k.maximal_simplices()) {
    if (edge.is_subset_of(m)) {
      parts.push_back(m.minus(Simplex{edge[0]}).with(w));
      parts.push_back(m.minus(Simplex{edge[1]}).with(w));
    } else {
      parts.push_back(m);
    }
  }
  return Complex(std::move(parts));
}

}  // namespace haken
