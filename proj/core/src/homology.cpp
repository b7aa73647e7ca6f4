#include "haken/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "haken/error.hpp"

namespace haken {
namespace {

std::size_t significant_degrees(const HomologyProfile& h) {
  std::size_t n = std::max(h.betti.size(), h.torsion.size());
  while (n > 0) {
    const std::size_t i = n - 1;
    const bool zero_betti = i >= h.betti.size() || h.betti[i] == 0;
    const bool no_torsion = i >= h.torsion.size() || h.torsion[i].empty();
    if (!(zero_betti && no_torsion)) break;
    --n;
  }
  return n;
}

}  // namespace

std::int64_t HomologyProfile::euler() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) chi += (i % 2 == 0) ? betti[i] : -betti[i];
  return chi;
}

std::string HomologyProfile::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    s += "H" + std::to_string(i) + " ";
    std::vector<std::string> parts;
    if (betti[i] == 1) parts.push_back("Z");
    if (betti[i] > 1) parts.push_back("Z^" + std::to_string(betti[i]));
    if (i < torsion.size()) {
      for (const auto& t : torsion[i]) parts.push_back("Z/" + t.str());
    }
    if (parts.empty()) parts.push_back("0");
    for (std::size_t j = 0; j < parts.size(); ++j) s += (j ? " + " : "") + parts[j];
    s += '\n';
  }
  return s;
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
  const std::size_t n = significant_degrees(a);
  if (n != significant_degrees(b)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ba = i < a.betti.size() ? a.betti[i] : 0;
    const auto bb = i < b.betti.size() ? b.betti[i] : 0;
    if (ba != bb) return false;
    static const std::vector<BigInt> none;
    const auto& ta = i < a.torsion.size() ? a.torsion[i] : none;
    const auto& tb = i < b.torsion.size() ? b.torsion[i] : none;
    if (ta != tb) return false;
  }
  return true;
}

SparseIntMatrix boundary_matrix(const Complex& k, int d) {
  if (d < 1) throw InvalidArgument("boundary_matrix: degree must be >= 1");
  const auto& lower = k.faces(d - 1);
  const auto& upper = k.faces(d);
  std::unordered_map<Simplex, std::size_t, SimplexHash> row_of;
  row_of.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) row_of.emplace(lower[i], i);
  SparseIntMatrix m(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    for (std::size_t i = 0; i < upper[c].size(); ++i) {
      m.set(row_of.at(upper[c].without_index(i)), c, BigInt(i % 2 == 0 ? 1 : -1));
    }
  }
  return m;
}

HomologyProfile homology(const Complex& k) {
  HomologyProfile h;
  const int dim = k.dimension();
  if (dim < 0) return h;
  std::vector<SmithForm> snf(static_cast<std::size_t>(dim) + 2);  // snf[d] for ∂_d, d = 1..dim
  for (int d = 1; d <= dim; ++d) snf[static_cast<std::size_t>(d)] = smith_normal_form(boundary_matrix(k, d));
  for (int i = 0; i <= dim; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const auto rank_out = i >= 1 ? static_cast<std::int64_t>(snf[ui].rank) : 0;
    const auto rank_in = i + 1 <= dim ? static_cast<std::int64_t>(snf[ui + 1].rank) : 0;
    h.betti.push_back(static_cast<std::int64_t>(k.num_faces(i)) - rank_out - rank_in);
    h.torsion.push_back(i + 1 <= dim ? snf[ui + 1].torsion() : std::vector<BigInt>{});
  }
  return h;
}

HomologyProfile sphere_profile(int d) {
  HomologyProfile h;
  if (d < 0) return h;
  h.betti.assign(static_cast<std::size_t>(d) + 1, 0);
  h.torsion.assign(static_cast<std::size_t>(d) + 1, {});
  if (d == 0) {
    h.betti[0] = 2;
  } else {
    h.betti[0] = 1;
    h.betti[static_cast<std::size_t>(d)] = 1;
  }
  return h;
}

HomologyProfile point_profile() {
  HomologyProfile h;
  h.betti = {1};
  h.torsion = {{}};
  return h;
}

ManifoldCheck check_homology_manifold(const Complex& k, bool allow_boundary) {
  if (!k.is_pure()) throw InvalidArgument("homology manifold check needs a pure complex");
  ManifoldCheck result;
  const int n = k.dimension();
  const HomologyProfile point = point_profile();
  for (int d = 0; d < n; ++d) {
    const HomologyProfile sphere = sphere_profile(n - d - 1);
    for (const auto& sigma : k.faces(d)) {
      const HomologyProfile h = homology(link(k, sigma));
      if (h == sphere || (allow_boundary && h == point)) continue;
      result.ok = false;
      result.witness = sigma;
      result.reason = "link of " + sigma.to_string() + " is not a homology " +
                      (allow_boundary ? "sphere or ball" : "sphere") + " of dimension " +
                      std::to_string(n - d - 1);
      return result;
    }
  }
  return result;
}

bool is_homology_manifold(const Complex& k) { return check_homology_manifold(k).ok; }

bool is_generalized_homology_sphere(const Complex& k, int n) {
  if (n < 0 || k.is_void() || k.dimension() != n - 1 || !k.is_pure()) return false;
  return is_homology_manifold(k) && homology(k) == sphere_profile(n - 1);
}

}  // namespace haken
