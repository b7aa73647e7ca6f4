#include <gtest/gtest.h>

#include <random>

#include "haken/complex.hpp"
#include "haken/error.hpp"
#include "haken/flag.hpp"
#include "haken/generators.hpp"
#include "haken/isomorphism.hpp"
#include "oracles.hpp"

using namespace haken;

namespace {

std::vector<std::pair<std::string, Complex>> generator_corpus() {
  return {
      {"simplex3", gen::simplex(3)},
      {"tetra", gen::simplex_boundary(3)},
      {"simplex_boundary4", gen::simplex_boundary(4)},
      {"c4", gen::cycle(4)},
      {"c7", gen::cycle(7)},
      {"octahedron", gen::cross_polytope_boundary(3)},
      {"cross4", gen::cross_polytope_boundary(4)},
      {"path3", gen::path(3)},
      {"disk6", gen::disk_polygon(6)},
      {"torus33", gen::grid_torus(3, 3)},
      {"torus7", gen::torus_7()},
      {"klein", gen::klein_bottle()},
      {"annulus", gen::annulus(5, 2)},
      {"mobius", gen::mobius_strip()},
      {"rp2", gen::projective_plane_6()},
      {"grid_disk", gen::grid_disk(3, 2)},
  };
}

Complex random_relabel(const Complex& k, std::uint64_t seed) {
  std::vector<Vertex> target(k.vertices().begin(), k.vertices().end());
  for (auto& t : target) t += 100;
  std::mt19937_64 rng(seed);
  std::shuffle(target.begin(), target.end(), rng);
  std::map<Vertex, Vertex> m;
  for (std::size_t i = 0; i < target.size(); ++i) m[k.vertices()[i]] = target[i];
  return relabel(k, m);
}

}  // namespace

TEST(Simplex, SortsAndRejectsDuplicates) {
  Simplex s{3, 1, 2};
  EXPECT_EQ(s.to_string(), "{1,2,3}");
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_THROW((Simplex{1, 1}), InvalidArgument);
  EXPECT_EQ(Simplex{}.dimension(), -1);
  EXPECT_TRUE((Simplex{1, 3}.is_subset_of(s)));
  EXPECT_EQ(s.without_index(0), (Simplex{2, 3}));
  EXPECT_EQ(s.minus(Simplex{2}), (Simplex{1, 3}));
}

TEST(Complex, VoidAndEmptySphereDiffer) {
  Complex v;
  Complex e = Complex::empty_sphere();
  EXPECT_TRUE(v.is_void());
  EXPECT_FALSE(e.is_void());
  EXPECT_EQ(v.dimension(), -1);
  EXPECT_EQ(e.dimension(), -1);
  EXPECT_TRUE(f_vector(v).empty());
  EXPECT_EQ(f_vector(e), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(euler_characteristic(e), 0);
}

TEST(Complex, DropsNonMaximalSimplices) {
  Complex k({Simplex{0, 1, 2}, Simplex{0, 1}, Simplex{3}, Simplex{0, 1, 2}});
  EXPECT_EQ(k.maximal_simplices().size(), 2u);
  EXPECT_EQ(k.vertices(), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(k.is_pure());
}

TEST(Complex, FacesOfTetrahedronBoundary) {
  auto k = gen::simplex_boundary(3);
  EXPECT_EQ(k.faces(2).size(), 4u);
  ASSERT_EQ(k.faces(-1).size(), 1u);
  EXPECT_TRUE(k.faces(-1).front().empty());
  EXPECT_TRUE(k.faces(3).empty());
  EXPECT_TRUE(k.faces(-2).empty());
}

TEST(Complex, MobiusTorusHas21Edges) {
  auto k = gen::torus_7();
  EXPECT_EQ(k.faces(1).size(), 21u);
  EXPECT_EQ(oracle::f_vector(k), (std::vector<std::int64_t>{1, 7, 21, 14}));
  EXPECT_EQ(euler_characteristic(k), 0);
}

TEST(Complex, FVectorExamples) {
  EXPECT_EQ(f_vector(gen::simplex_boundary(3)), (std::vector<std::int64_t>{1, 4, 6, 4}));
  EXPECT_EQ(f_vector(gen::cycle(4)), (std::vector<std::int64_t>{1, 4, 4}));
  EXPECT_EQ(f_vector(gen::cross_polytope_boundary(4)), (std::vector<std::int64_t>{1, 8, 24, 32, 16}));
  EXPECT_EQ(f_vector(gen::cycle(5)), (std::vector<std::int64_t>{1, 5, 5}));
  EXPECT_EQ(euler_characteristic(gen::simplex(0)), 1);
  EXPECT_EQ(euler_characteristic(gen::cross_polytope_boundary(3)), 2);
  EXPECT_EQ(euler_characteristic(gen::projective_plane_6()), 1);
}

TEST(Complex, FacesAgreeWithSubsetOracle) {
  for (const auto& [name, k] : generator_corpus()) {
    SCOPED_TRACE(name);
    EXPECT_EQ(f_vector(k), oracle::f_vector(k));
    EXPECT_EQ(euler_characteristic(k), oracle::euler(k));
    for (const auto& face : oracle::all_faces(k)) EXPECT_TRUE(k.contains(Simplex(std::span<const Vertex>(face))));
  }
}

TEST(Complex, LinkExamples) {
  auto oct = gen::cross_polytope_boundary(3);
  EXPECT_TRUE(are_isomorphic(link(oct, Simplex{0}), gen::cycle(4)));
  EXPECT_EQ(link(oct, Simplex{}), oct);
  auto l = link(gen::simplex_boundary(3), Simplex{0, 1});
  EXPECT_EQ(l, Complex({Simplex{2}, Simplex{3}}));
  EXPECT_EQ(link(gen::simplex_boundary(3), Simplex{0, 1, 2}), Complex::empty_sphere());
  EXPECT_THROW(link(gen::cycle(5), Simplex{0, 2}), InvalidArgument);
}

TEST(Complex, StarJoinCone) {
  auto st = star(gen::cycle(4), Simplex{0});
  EXPECT_TRUE(are_isomorphic(st, gen::path(2)));
  auto j = join(gen::cycle(4), gen::cycle(4));
  EXPECT_EQ(f_vector(j), (std::vector<std::int64_t>{1, 8, 24, 32, 16}));
  EXPECT_TRUE(flag_report(j).is_flag);
  auto c = cone(gen::simplex_boundary(2));
  EXPECT_EQ(euler_characteristic(c), 1);
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_THROW(star(gen::cycle(4), Simplex{0, 2}), InvalidArgument);
}

TEST(Complex, StarIsJoinOfSimplexAndLink) {
  for (const auto& [name, k] : generator_corpus()) {
    SCOPED_TRACE(name);
    for (int d = 0; d <= std::min(1, k.dimension()); ++d)
      for (const auto& s : k.faces(d)) {
        auto st = star(k, s);
        auto lk = link(k, s);
        std::vector<Simplex> parts;
        for (const auto& t : lk.maximal_simplices()) parts.push_back(t.unite(s));
        EXPECT_EQ(st, Complex(parts));
      }
  }
}

TEST(Complex, JoinConvolvesFVectors) {
  auto corpus = generator_corpus();
  for (std::size_t a = 0; a < corpus.size(); a += 3)
    for (std::size_t b = 1; b < corpus.size(); b += 4) {
      SCOPED_TRACE(corpus[a].first + " * " + corpus[b].first);
      auto fa = f_vector(corpus[a].second), fb = f_vector(corpus[b].second);
      std::vector<std::int64_t> conv(fa.size() + fb.size() - 1, 0);
      for (std::size_t i = 0; i < fa.size(); ++i)
        for (std::size_t j = 0; j < fb.size(); ++j) conv[i + j] += fa[i] * fb[j];
      EXPECT_EQ(f_vector(join(corpus[a].second, corpus[b].second)), conv);
    }
}

TEST(Complex, BarycentricSubdivision) {
  EXPECT_TRUE(are_isomorphic(barycentric_subdivision(gen::simplex(1)), gen::path(2)));
  EXPECT_TRUE(are_isomorphic(barycentric_subdivision(gen::simplex_boundary(2)), gen::cycle(6)));
  for (const auto& [name, k] : generator_corpus()) {
    SCOPED_TRACE(name);
    auto sd = barycentric_subdivision(k);
    EXPECT_EQ(euler_characteristic(sd), euler_characteristic(k));
    EXPECT_TRUE(flag_report(sd).is_flag);
    EXPECT_EQ(sd.num_vertices(), oracle::all_faces(k).size());
  }
}

TEST(Complex, DualCones) {
  auto tetra = gen::simplex_boundary(3);
  auto top = dual_cone(tetra, Simplex{0, 1, 2});
  EXPECT_EQ(top.num_vertices(), 1u);
  EXPECT_EQ(top.dimension(), 0);
  // Lk(v) is a 3-cycle; its subdivision a 6-cycle; the cone has 6 triangles.
  auto dv = dual_cone(tetra, Simplex{0});
  EXPECT_EQ(dv.faces(2).size(), 6u);
  EXPECT_TRUE(are_isomorphic(dv, cone(gen::cycle(6))));
  for (const auto& [name, k] : generator_corpus()) {
    SCOPED_TRACE(name);
    for (const auto& s : k.faces(0)) EXPECT_EQ(euler_characteristic(dual_cone(k, s)), 1);
  }
  EXPECT_THROW(dual_cone(tetra, Simplex{}), InvalidArgument);
  EXPECT_THROW(dual_cone(tetra, Simplex{0, 9}), InvalidArgument);
}

TEST(Complex, SubdivisionCorrespondence) {
  auto k = gen::cycle(5);
  Subdivision sd(k);
  for (int d = 0; d <= 1; ++d)
    for (const auto& s : k.faces(d)) EXPECT_EQ(sd.face_of(sd.barycenter_of(s)), s);
  auto lifted = sd.lift(Complex({Simplex{0, 1}}));
  EXPECT_EQ(lifted.num_vertices(), 3u);
  EXPECT_TRUE(is_full_subcomplex(lifted, sd.complex()));
}

TEST(Complex, InducedAndFull) {
  auto oct = gen::cross_polytope_boundary(3);
  auto eq = induced_subcomplex(oct, std::vector<Vertex>{0, 1, 2, 3});
  EXPECT_TRUE(are_isomorphic(eq, gen::cycle(4)));
  EXPECT_TRUE(is_full_subcomplex(eq, oct));
  EXPECT_FALSE(is_full_subcomplex(Complex({Simplex{0, 2}, Simplex{2, 1}}), gen::disk_polygon(3)));
  EXPECT_TRUE(induced_subcomplex(oct, std::vector<Vertex>{}).is_void());
}

TEST(Complex, ComponentsAndBoundary) {
  Complex two({Simplex{0, 1}, Simplex{5, 6, 7}});
  auto comps = connected_components(two);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], Complex({Simplex{0, 1}}));
  EXPECT_FALSE(is_connected(two));
  EXPECT_TRUE(are_isomorphic(boundary_subcomplex(gen::disk_polygon(5)), gen::cycle(5)));
  EXPECT_TRUE(boundary_subcomplex(gen::grid_torus(3, 3)).is_void());
  EXPECT_TRUE(is_pseudomanifold(gen::klein_bottle(), true));
  EXPECT_FALSE(is_pseudomanifold(gen::mobius_strip(), true));
  EXPECT_TRUE(is_pseudomanifold(gen::mobius_strip(), false));
}

TEST(Complex, SubdivideEdge) {
  auto k = subdivide_edge(gen::cross_polytope_boundary(4), Simplex{0, 2});
  EXPECT_EQ(k.num_vertices(), 9u);
  EXPECT_FALSE(k.contains(Simplex{0, 2}));
  EXPECT_TRUE(k.contains(Simplex{0, 8}));
  EXPECT_EQ(euler_characteristic(k), 0);
  EXPECT_TRUE(flag_report(k).is_flag);
}

TEST(Complex, GeneratorsRejectSmallParameters) {
  EXPECT_THROW(gen::cycle(2), InvalidArgument);
  EXPECT_THROW(gen::grid_torus(2, 3), InvalidArgument);
  EXPECT_THROW(gen::simplex_boundary(0), InvalidArgument);
  EXPECT_THROW(gen::klein_bottle(5, 4), InvalidArgument);
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(are_isomorphic(gen::cycle(4), random_relabel(gen::cycle(4), 1)));
  EXPECT_FALSE(are_isomorphic(gen::cycle(4), gen::cycle(5)));
  auto oct = gen::cross_polytope_boundary(3);
  auto r = find_isomorphism(oct, join(gen::cross_polytope_boundary(1), gen::cycle(4)));
  ASSERT_TRUE(r.isomorphic);
  EXPECT_EQ(r.witness.size(), 6u);
  EXPECT_EQ(relabel(oct, r.witness), join(gen::cross_polytope_boundary(1), gen::cycle(4)));
}

TEST(Isomorphism, ReflexiveSymmetricAndRelabelInvariant) {
  auto corpus = generator_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    SCOPED_TRACE(corpus[i].first);
    const auto& k = corpus[i].second;
    EXPECT_TRUE(are_isomorphic(k, k));
    auto r = random_relabel(k, 7 + i);
    EXPECT_TRUE(are_isomorphic(k, r));
    EXPECT_TRUE(are_isomorphic(r, k));
  }
  EXPECT_FALSE(are_isomorphic(gen::grid_torus(3, 3), gen::torus_7()));
  EXPECT_FALSE(are_isomorphic(gen::klein_bottle(6, 4), gen::grid_torus(6, 4)));
}

TEST(Isomorphism, BudgetGuard) {
  auto a = join(gen::cycle(8), gen::cycle(8));
  EXPECT_THROW(find_isomorphism(a, random_relabel(a, 3), 2), BudgetExceeded);
}
