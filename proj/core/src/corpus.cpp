#include "haken/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "haken/error.hpp"
#include "haken/generators.hpp"
#include "haken/io.hpp"

namespace haken::corpus {

namespace {

std::string join_name(int m, int n) { return "c" + std::to_string(m) + "_c" + std::to_string(n); }

Complex subdivided(const Complex& k) { return barycentric_subdivision(k); }

// Replays cuts chosen by the original coordinates of their vertices.
class LedgerBuilder {
 public:
  explicit LedgerBuilder(PatternedComplex initial) : initial_(initial), stage_(std::move(initial)) {
    for (Vertex v : stage_->carrier().vertices()) origin_[v] = v;
  }

  // Cuts along the induced subcomplex on the vertices whose original label
  // satisfies `keep`, discarding components of too small dimension.
  void cut(const std::function<bool(Vertex)>& keep) {
    std::vector<Vertex> w;
    for (Vertex v : stage_->carrier().vertices())
      if (keep(origin_.at(v))) w.push_back(v);
    const int n = stage_->dimension();
    std::vector<Complex> parts;
    for (auto& c : connected_components(induced_subcomplex(stage_->carrier(), w)))
      if (c.dimension() == n - 1) parts.push_back(std::move(c));
    Complex locus = union_of(parts);
    auto r = cut_open(*stage_, locus, "cut" + std::to_string(steps_.size() + 1));
    std::map<Vertex, Vertex> next;
    for (const auto& [v, o] : r.origin) next[v] = origin_.at(o);
    origin_ = std::move(next);
    steps_.push_back({"", std::move(locus)});
    stage_.emplace(std::move(r.result));
  }

  NamedLedger finish(std::string name) { return {std::move(name), initial_, steps_}; }

 private:
  PatternedComplex initial_;
  std::optional<PatternedComplex> stage_;
  std::map<Vertex, Vertex> origin_;
  std::vector<LedgerStep> steps_;
};

}  // namespace

std::vector<NamedComplex> join_spheres() {
  std::vector<NamedComplex> out;
  for (int m = 4; m <= 8; ++m)
    for (int n = m; n <= 8; ++n) out.push_back({join_name(m, n), join(gen::cycle(m), gen::cycle(n))});
  return out;
}

std::vector<NamedComplex> barycentric_spheres() {
  return {
      {"sd_c3", subdivided(gen::cycle(3))},
      {"sd_simplex_boundary3", subdivided(gen::simplex_boundary(3))},
      {"sd_simplex_boundary4", subdivided(gen::simplex_boundary(4))},
      {"sd_c3_c3", subdivided(join(gen::cycle(3), gen::cycle(3)))},
      {"sd_c3_c4", subdivided(join(gen::cycle(3), gen::cycle(4)))},
      {"sd_c4_c4", subdivided(join(gen::cycle(4), gen::cycle(4)))},
      {"sd_c4_c5", subdivided(join(gen::cycle(4), gen::cycle(5)))},
      {"sd_susp_simplex_boundary3", subdivided(suspension(gen::simplex_boundary(3)))},
  };
}

std::vector<NamedComplex> random_flag_spheres(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<std::string, Complex>> bases = {
      {"cross4", gen::cross_polytope_boundary(4)},
      {"c4_c5", join(gen::cycle(4), gen::cycle(5))},
      {"c5_c6", join(gen::cycle(5), gen::cycle(6))},
  };
  std::vector<NamedComplex> out;
  for (int i = 0; i < count; ++i) {
    const auto& [base_name, base] = bases[static_cast<std::size_t>(i) % bases.size()];
    Complex k = base;
    const int steps = 3 + static_cast<int>(rng() % 8);
    for (int s = 0; s < steps; ++s) {
      const auto& edges = k.faces(1);
      k = subdivide_edge(k, edges[rng() % edges.size()]);
    }
    out.push_back({"random_" + base_name + "_" + std::to_string(i), std::move(k)});
  }
  return out;
}

std::vector<NamedComplex> flag_3spheres(std::uint64_t seed) {
  auto out = join_spheres();
  out.push_back({"cross4", gen::cross_polytope_boundary(4)});
  for (auto& s : barycentric_spheres())
    if (s.complex.dimension() == 3) out.push_back(std::move(s));
  for (auto& s : random_flag_spheres(seed)) out.push_back(std::move(s));
  return out;
}

std::vector<NamedComplex> base_spheres() {
  std::vector<NamedComplex> out;
  for (int p = 3; p <= 8; ++p) out.push_back({"c" + std::to_string(p), gen::cycle(p)});
  for (int n = 2; n <= 5; ++n)
    out.push_back({"simplex_boundary" + std::to_string(n), gen::simplex_boundary(n)});
  for (int n = 2; n <= 5; ++n)
    out.push_back({"cross" + std::to_string(n), gen::cross_polytope_boundary(n)});
  out.push_back({"susp_c5", suspension(gen::cycle(5))});
  out.push_back({"susp_simplex_boundary3", suspension(gen::simplex_boundary(3))});
  out.push_back({"c3_c3", join(gen::cycle(3), gen::cycle(3))});
  out.push_back({"c3_c6", join(gen::cycle(3), gen::cycle(6))});
  for (auto& s : join_spheres()) out.push_back(std::move(s));
  return out;
}

std::vector<NamedComplex> ghs_spheres(std::uint64_t seed) {
  auto out = base_spheres();
  for (auto& s : barycentric_spheres()) out.push_back(std::move(s));
  for (auto& s : random_flag_spheres(seed)) out.push_back(std::move(s));
  return out;
}

std::vector<NamedComplex> closed_manifolds() {
  return {
      {"torus", gen::grid_torus(3, 3)},
      {"torus_4x5", gen::grid_torus(4, 5)},
      {"torus7", gen::torus_7()},
      {"klein", gen::klein_bottle(6, 4)},
      {"rp2", gen::projective_plane_6()},
      {"genus2", gen::genus2_surface()},
      {"torus3", gen::grid_torus3(3)},
  };
}

std::vector<NamedPattern> polygon_cells() {
  std::vector<NamedPattern> out;
  for (int p = 3; p <= 12; ++p)
    out.push_back({(p < 10 ? "polygon0" : "polygon") + std::to_string(p), patterns::polygon_cell(p)});
  return out;
}

std::vector<NamedPattern> patterns() {
  auto out = polygon_cells();
  out.push_back({"interval", patterns::interval()});
  out.push_back({"triangle", patterns::simplex_cell(2)});
  out.push_back({"tetrahedron", patterns::simplex_cell(3)});
  out.push_back({"simplex4", patterns::simplex_cell(4)});
  out.push_back({"square", patterns::square()});
  out.push_back({"grid_square", patterns::grid_square(3, 2)});
  out.push_back({"cube2", patterns::cube_cell(2)});
  out.push_back({"cube3", patterns::cube_cell(3)});
  out.push_back({"pentagon_dual", cell_from_flag_sphere(gen::cycle(5))});
  out.push_back({"tetrahedron_dual", cell_from_flag_sphere(gen::simplex_boundary(3))});
  out.push_back({"hemisphere", patterns::hemisphere(5)});
  out.push_back({"annulus", patterns::annulus(6, 1)});
  out.push_back({"annulus_inner", patterns::annulus(6, 2).restricted_to({"inner"})});
  out.push_back({"mobius", patterns::mobius()});
  out.push_back({"bigon", patterns::bigon()});
  out.push_back({"disk_arc", PatternedComplex(gen::disk_polygon(6), {{"arc", gen::path(3)}})});
  for (auto& m : closed_manifolds())
    if (m.name != "genus2" && m.name != "torus_4x5" && m.name != "torus7") out.push_back({m.name, patterns::closed(m.complex)});
  out.push_back({"octahedron", patterns::closed(gen::cross_polytope_boundary(3))});
  return out;
}

NamedLedger torus_ledger() {
  const int m = 3;
  LedgerBuilder b(patterns::closed(gen::grid_torus(m, m)));
  b.cut([&](Vertex v) { return v / m == 0; });  // row j = 0
  b.cut([&](Vertex v) { return v % m == 0; });  // column i = 0
  return b.finish("torus");
}

NamedLedger klein_ledger() {
  const int m = 6;
  LedgerBuilder b(patterns::closed(gen::klein_bottle(m, 4)));
  b.cut([&](Vertex v) { return v % m == 0; });  // one-sided column x = 0
  b.cut([&](Vertex v) { return v / m == 1; });  // row y = 1
  return b.finish("klein");
}

NamedLedger genus2_ledger() {
  // Labels of genus2_surface(): the first torus keeps i + 6j, the second is
  // shifted by 36 except on the identified hole {14, 15, 21}.
  const int m = 6;
  auto coord = [](Vertex v) { return v < 36 ? v : v - 36; };
  LedgerBuilder b(patterns::closed(gen::genus2_surface()));
  b.cut([&](Vertex v) { return v < 36 && coord(v) / m == 0; });
  b.cut([&](Vertex v) { return v >= 36 && coord(v) / m == 0; });
  b.cut([&](Vertex v) { return v < 36 && coord(v) % m == 0; });
  b.cut([&](Vertex v) { return v >= 36 && coord(v) % m == 0; });
  // Column 3 through the neck vertex (3,2) from one torus into the other.
  b.cut([&](Vertex v) {
    const Vertex c = coord(v);
    return c % m == 3 && c / m <= 2;
  });
  return b.finish("genus2");
}

NamedLedger torus3_ledger() {
  const int m = 3;
  LedgerBuilder b(patterns::closed(gen::grid_torus3(m)));
  b.cut([&](Vertex v) { return v / (m * m) == 0; });     // k = 0
  b.cut([&](Vertex v) { return v / m % m == 0; });       // j = 0
  b.cut([&](Vertex v) { return v % m == 0; });           // i = 0
  return b.finish("torus3");
}

NamedLedger corner_ledger() {
  // grid_square(2, 2): vertex (i, j) is i + 3j; the path (1,0)-(1,1)-(0,1).
  LedgerBuilder b(patterns::grid_square(2, 2));
  b.cut([](Vertex v) { return v == 1 || v == 4 || v == 3; });
  return b.finish("corner");
}

std::vector<NamedLedger> ledgers() {
  return {torus_ledger(), klein_ledger(), genus2_ledger(), torus3_ledger(), corner_ledger()};
}

std::vector<CutPair> cut_pairs() {
  std::vector<CutPair> out;
  for (const auto& l : ledgers()) {
    auto run = run_prehierarchy(l.initial, l.steps);
    for (std::size_t k = 0; k < l.steps.size(); ++k)
      out.push_back({l.name + "_step" + std::to_string(k + 1), run.stages[k], l.steps[k].cut});
  }
  auto octahedron = patterns::closed(gen::cross_polytope_boundary(3));
  out.push_back({"octahedron_equator", octahedron, induced_subcomplex(octahedron.carrier(), std::vector<Vertex>{0, 1, 2, 3})});
  auto cross4 = patterns::closed(gen::cross_polytope_boundary(4));
  out.push_back({"cross4_equator", cross4, induced_subcomplex(cross4.carrier(), std::vector<Vertex>{0, 1, 2, 3, 4, 5})});
  auto cross5 = patterns::closed(gen::cross_polytope_boundary(5));
  out.push_back({"cross5_equator", cross5,
                 induced_subcomplex(cross5.carrier(), std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7})});
  auto rp2 = patterns::closed(gen::projective_plane_6());
  out.push_back({"rp2_triangle", rp2, induced_subcomplex(rp2.carrier(), std::vector<Vertex>{0, 1, 3})});
  // grid_square(2, 1): vertex (i, j) is i + 3j; vertical arc i = 1.
  out.push_back({"square_vertical_arc", patterns::grid_square(2, 1), Complex({Simplex{1, 4}})});
  // annulus(6, 2): radial arc i = 0.
  out.push_back({"annulus_radial_arc", patterns::annulus(6, 2), Complex({Simplex{0, 6}, Simplex{6, 12}})});
  return out;
}

std::vector<std::string> families() {
  return {"join-spheres", "barycentric-spheres", "random-flag-spheres", "ghs-spheres", "closed-manifolds",
          "polygon-cells", "patterns", "ledgers"};
}

std::vector<std::pair<std::string, std::string>> generate(const std::string& family, std::uint64_t seed) {
  std::vector<std::pair<std::string, std::string>> files;
  auto add_complexes = [&](const std::vector<NamedComplex>& items) {
    for (const auto& c : items) files.push_back({c.name + ".cx", io::write_complex(c.complex)});
  };
  auto add_patterns = [&](const std::vector<NamedPattern>& items) {
    for (const auto& p : items) files.push_back({p.name + ".pattern", io::write_pattern(p.pattern)});
  };
  if (family == "join-spheres") {
    add_complexes(join_spheres());
  } else if (family == "barycentric-spheres") {
    add_complexes(barycentric_spheres());
  } else if (family == "random-flag-spheres") {
    add_complexes(random_flag_spheres(seed));
  } else if (family == "ghs-spheres") {
    add_complexes(ghs_spheres(seed));
  } else if (family == "closed-manifolds") {
    add_complexes(closed_manifolds());
  } else if (family == "polygon-cells") {
    add_patterns(polygon_cells());
  } else if (family == "patterns") {
    add_patterns(patterns());
  } else if (family == "ledgers") {
    for (const auto& l : ledgers()) {
      files.push_back({l.name + ".pattern", io::write_pattern(l.initial)});
      files.push_back({l.name + ".ledger", io::write_ledger(l.steps)});
    }
  } else {
    throw InvalidArgument("unknown corpus family '" + family + "'");
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace haken::corpus
