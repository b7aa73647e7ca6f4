#include "haken/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "haken/error.hpp"

namespace haken::gen {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

int wrap(int x, int m) { return ((x % m) + m) % m; }

}  // namespace

Complex simplex(int n) {
  require(n >= 0, "simplex: n must be >= 0");
  Simplex::Storage v;
  for (int i = 0; i <= n; ++i) v.push_back(i);
  return Complex({Simplex::from_sorted(v)});
}

Complex simplex_boundary(int n) {
  require(n >= 1, "simplex_boundary: n must be >= 1");
  const Simplex top = simplex(n).maximal_simplices().front();
  std::vector<Simplex> parts;
  for (std::size_t i = 0; i < top.size(); ++i) parts.push_back(top.without_index(i));
  return Complex(std::move(parts));
}

Complex cycle(int p) {
  require(p >= 3, "cycle: p must be >= 3");
  std::vector<Simplex> parts;
  for (int i = 0; i < p; ++i) parts.push_back(Simplex{i, (i + 1) % p});
  return Complex(std::move(parts));
}

Complex cross_polytope_boundary(int n) {
  require(n >= 1 && n <= 20, "cross_polytope_boundary: n must be in [1, 20]");
  std::vector<Simplex> parts;
  for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
    Simplex::Storage v;
    for (int i = 0; i < n; ++i) v.push_back(2 * i + static_cast<int>((signs >> i) & 1u));
    parts.push_back(Simplex::from_sorted(v));
  }
  return Complex(std::move(parts));
}

Complex path(int edges) {
  require(edges >= 1, "path: needs at least one edge");
  std::vector<Simplex> parts;
  for (int i = 0; i < edges; ++i) parts.push_back(Simplex{i, i + 1});
  return Complex(std::move(parts));
}

Complex disk_polygon(int p) {
  require(p >= 3, "disk_polygon: p must be >= 3");
  std::vector<Simplex> parts;
  for (int i = 0; i < p; ++i) parts.push_back(Simplex{i, (i + 1) % p, p});
  return Complex(std::move(parts));
}

Complex grid_torus(int m, int k) {
  require(m >= 3 && k >= 3, "grid_torus: m and k must be >= 3");
  auto id = [&](int i, int j) { return wrap(i, m) + m * wrap(j, k); };
  std::vector<Simplex> parts;
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < m; ++i) {
      parts.push_back(Simplex{id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      parts.push_back(Simplex{id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  }
  return Complex(std::move(parts));
}

Complex klein_bottle(int m, int k) {
  require(m >= 4 && m % 2 == 0 && k >= 3, "klein_bottle: needs m even, m >= 4, k >= 3");
  auto id = [&](int x, int y) {
    const int w = (y >= 0) ? y / k : -((-y + k - 1) / k);
    const int yy = y - w * k;
    const int xx = (w % 2 != 0) ? -x : x;
    return wrap(xx, m) + m * yy;
  };
  std::vector<Simplex> parts;
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < m; ++i) {
      parts.push_back(Simplex{id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      parts.push_back(Simplex{id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  }
  return Complex(std::move(parts));
}

Complex annulus(int m, int k) {
  require(m >= 3 && k >= 1, "annulus: needs m >= 3, k >= 1");
  auto id = [&](int i, int j) { return wrap(i, m) + m * j; };
  std::vector<Simplex> parts;
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < m; ++i) {
      parts.push_back(Simplex{id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      parts.push_back(Simplex{id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  }
  return Complex(std::move(parts));
}

Complex mobius_strip() {
  std::vector<Simplex> parts;
  for (int i = 0; i < 5; ++i) parts.push_back(Simplex{i, (i + 1) % 5, (i + 2) % 5});
  return Complex(std::move(parts));
}

Complex torus_7() {
  std::vector<Simplex> parts;
  for (int i = 0; i < 7; ++i) {
    parts.push_back(Simplex{i, (i + 1) % 7, (i + 3) % 7});
    parts.push_back(Simplex{i, (i + 2) % 7, (i + 3) % 7});
  }
  return Complex(std::move(parts));
}

Complex projective_plane_6() {
  return Complex({Simplex{0, 1, 2}, Simplex{0, 2, 3}, Simplex{0, 3, 4}, Simplex{0, 4, 5},
                  Simplex{0, 5, 1}, Simplex{1, 2, 4}, Simplex{2, 3, 5}, Simplex{3, 4, 1},
                  Simplex{4, 5, 2}, Simplex{5, 1, 3}});
}

Complex grid_torus3(int m) {
  require(m >= 3, "grid_torus3: m must be >= 3");
  auto id = [&](std::array<int, 3> p) { return wrap(p[0], m) + m * wrap(p[1], m) + m * m * wrap(p[2], m); };
  std::vector<Simplex> parts;
  std::array<int, 3> axes{0, 1, 2};
  for (int z = 0; z < m; ++z) {
    for (int y = 0; y < m; ++y) {
      for (int x = 0; x < m; ++x) {
        std::array<int, 3> order = axes;
        do {
          std::array<int, 3> p{x, y, z};
          Simplex::Storage v{id(p)};
          for (int a : order) {
            ++p[static_cast<std::size_t>(a)];
            v.push_back(id(p));
          }
          parts.emplace_back(std::move(v));
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
  }
  return Complex(std::move(parts));
}

Complex grid_disk(int m, int k) {
  require(m >= 1 && k >= 1, "grid_disk: needs m, k >= 1");
  auto id = [&](int i, int j) { return i + (m + 1) * j; };
  std::vector<Simplex> parts;
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < m; ++i) {
      parts.push_back(Simplex{id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      parts.push_back(Simplex{id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  }
  return Complex(std::move(parts));
}

Complex connected_sum(const Complex& a, const Simplex& hole_a, const Complex& b, const Simplex& hole_b) {
  auto is_max = [](const Complex& k, const Simplex& s) {
    return std::binary_search(k.maximal_simplices().begin(), k.maximal_simplices().end(), s);
  };
  require(hole_a.size() == hole_b.size() && is_max(a, hole_a) && is_max(b, hole_b) &&
              hole_a.dimension() == a.dimension() && hole_b.dimension() == b.dimension(),
          "connected_sum: holes must be top simplices of equal dimension");
  const Vertex offset = a.max_label() + 1 - b.min_label();
  std::map<Vertex, Vertex> mapping;
  for (Vertex v : b.vertices()) mapping[v] = v + offset;
  for (std::size_t i = 0; i < hole_b.size(); ++i) mapping[hole_b[i]] = hole_a[i];
  std::vector<Simplex> parts;
  for (const auto& s : a.maximal_simplices()) {
    if (s != hole_a) parts.push_back(s);
  }
  for (const auto& s : b.maximal_simplices()) {
    if (s == hole_b) continue;
    Simplex::Storage v;
    for (Vertex x : s) v.push_back(mapping.at(x));
    parts.emplace_back(std::move(v));
  }
  return Complex(std::move(parts));
}

Complex genus2_surface() {
  const Complex t = grid_torus(6, 6);
  const Simplex hole{14, 15, 21};  // (2,2), (3,2), (3,3)
  return connected_sum(t, hole, t, hole);
}

}  // namespace haken::gen
