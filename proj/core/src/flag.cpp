#include "haken/flag.hpp"

#include <algorithm>

#include "haken/homology.hpp"

namespace haken {

FlagReport flag_report(const Complex& k) {
  FlagReport report;
  // Level-wise clique extension: a candidate of size s+1 is a face of size s
  // plus a larger vertex adjacent to all of it, kept only if every s-subset is
  // a face. Candidates that are not faces are exactly the minimal non-faces.
  for (int d = 1; d <= k.dimension(); ++d) {
    for (const auto& face : k.faces(d)) {
      for (Vertex w : k.neighbours(face.back())) {
        if (w <= face.back()) continue;
        const bool clique = std::all_of(face.begin(), face.end() - 1,
                                        [&](Vertex u) { return k.adjacent(u, w); });
        if (!clique) continue;
        const Simplex candidate = face.with(w);
        if (k.contains(candidate)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i + 1 < candidate.size() && minimal; ++i) {
          minimal = k.contains(candidate.without_index(i));
        }
        if (minimal) report.minimal_non_faces.push_back(candidate);
      }
    }
  }
  std::sort(report.minimal_non_faces.begin(), report.minimal_non_faces.end(),
            [](const Simplex& a, const Simplex& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  for (const auto& s : report.minimal_non_faces) {
    if (s.size() == 3) report.empty_triangles.push_back(s);
  }
  report.is_flag = report.minimal_non_faces.empty();
  return report;
}

bool has_empty_triangle(const Complex& k) {
  for (const auto& e : k.faces(1)) {
    const auto na = k.neighbours(e[0]);
    const auto nb = k.neighbours(e[1]);
    std::vector<Vertex> common;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
    for (Vertex w : common) {
      if (w > e[1] && !k.contains(e.with(w))) return true;
    }
  }
  return false;
}

bool is_flag_via_links(const Complex& k) {
  for (int d = -1; d <= k.dimension(); ++d) {
    for (const auto& sigma : k.faces(d)) {
      if (has_empty_triangle(d < 0 ? k : link(k, sigma))) return false;
    }
  }
  return true;
}

Dyadic charney_davis(const Complex& k) {
  Dyadic lambda;
  const auto f = f_vector(k);
  for (std::size_t j = 0; j < f.size(); ++j) {
    // entry j holds f_{j-1}; weight (-1/2)^j
    Dyadic term = Dyadic(f[j]) * Dyadic::pow2(-static_cast<int>(j));
    lambda += (j % 2 == 0) ? term : -term;
  }
  return lambda;
}

CellCertificate certify_haken_cell_dual(const Complex& k, int n) {
  CellCertificate c;
  c.ghs = is_generalized_homology_sphere(k, n);
  c.flag = flag_report(k).is_flag;
  c.haken = c.ghs && c.flag;
  return c;
}

}  // namespace haken
