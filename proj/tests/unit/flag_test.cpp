#include <gtest/gtest.h>

#include "haken/corpus.hpp"
#include "haken/flag.hpp"
#include "haken/generators.hpp"
#include "oracles.hpp"

using namespace haken;

namespace {

Dyadic lambda_join(int m, int n) {
  // (1 - m/4)(1 - n/4) = (4 - m)(4 - n) / 16
  return Dyadic(BigInt((4 - m) * (4 - n)), 4);
}

}  // namespace

TEST(Flag, TriangleBoundaryHasOneMinimalNonFace) {
  auto r = flag_report(gen::simplex_boundary(2));
  EXPECT_FALSE(r.is_flag);
  ASSERT_EQ(r.minimal_non_faces.size(), 1u);
  EXPECT_EQ(r.minimal_non_faces[0], (Simplex{0, 1, 2}));
  EXPECT_EQ(r.empty_triangles, r.minimal_non_faces);
  EXPECT_TRUE(has_empty_triangle(gen::simplex_boundary(2)));
}

TEST(Flag, SimplexBoundaryWithoutEmptyTriangleIsNotFlag) {
  auto k = gen::simplex_boundary(4);
  EXPECT_FALSE(has_empty_triangle(k));
  auto r = flag_report(k);
  EXPECT_FALSE(r.is_flag);
  ASSERT_EQ(r.minimal_non_faces.size(), 1u);
  EXPECT_EQ(r.minimal_non_faces[0].size(), 5u);
  EXPECT_TRUE(r.empty_triangles.empty());
  EXPECT_FALSE(is_flag_via_links(k));
}

TEST(Flag, FlagExamples) {
  EXPECT_TRUE(flag_report(gen::cycle(4)).is_flag);
  EXPECT_TRUE(flag_report(gen::cross_polytope_boundary(3)).is_flag);
  EXPECT_TRUE(flag_report(gen::cross_polytope_boundary(5)).is_flag);
  EXPECT_FALSE(flag_report(gen::torus_7()).is_flag);
  EXPECT_TRUE(flag_report(gen::grid_torus(4, 4)).is_flag);
  EXPECT_TRUE(flag_report(Complex::empty_sphere()).is_flag);
  EXPECT_TRUE(flag_report(Complex()).is_flag);
}

TEST(Flag, ThreeWaysAgreeOnCorpus) {
  std::vector<corpus::NamedComplex> all = corpus::ghs_spheres();
  for (auto& c : corpus::closed_manifolds()) all.push_back(c);
  int checked = 0;
  for (const auto& [name, k] : all) {
    if (k.num_vertices() > 16) continue;
    SCOPED_TRACE(name);
    const bool a = flag_report(k).is_flag;
    EXPECT_EQ(a, is_flag_via_links(k));
    EXPECT_EQ(a, oracle::is_flag(k));
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(CharneyDavis, Examples) {
  EXPECT_EQ(charney_davis(gen::cycle(4)), Dyadic(0));
  EXPECT_EQ(charney_davis(gen::cycle(5)), Dyadic(BigInt(-1), 2));
  EXPECT_EQ(charney_davis(gen::cross_polytope_boundary(4)), Dyadic(0));
  EXPECT_EQ(charney_davis(Complex::empty_sphere()), Dyadic(1));
  EXPECT_EQ(charney_davis(Complex()), Dyadic(0));
  EXPECT_EQ(charney_davis(gen::cycle(3)), Dyadic(BigInt(1), 2));
}

TEST(CharneyDavis, JoinFormula) {
  for (int m = 3; m <= 8; ++m)
    for (int n = 3; n <= 8; ++n) {
      auto j = join(gen::cycle(m), gen::cycle(n));
      EXPECT_EQ(charney_davis(j), lambda_join(m, n)) << m << "," << n;
      EXPECT_EQ(charney_davis(j), charney_davis(gen::cycle(m)) * charney_davis(gen::cycle(n)));
    }
}

TEST(CharneyDavis, MatchesFaceSumOracle) {
  for (const auto& [name, k] : corpus::ghs_spheres()) {
    SCOPED_TRACE(name);
    EXPECT_EQ(charney_davis(k), oracle::lambda(k));
  }
}

TEST(CharneyDavis, EvenDimensionalSpheresVanish) {
  for (const auto& [name, k] : corpus::ghs_spheres()) {
    if (k.dimension() % 2) continue;
    SCOPED_TRACE(name);
    EXPECT_EQ(charney_davis(k), Dyadic(0));
  }
}

TEST(CharneyDavis, FlagThreeSpheresNonNegative) {
  auto spheres = corpus::flag_3spheres();
  EXPECT_GE(spheres.size(), 25u);
  for (const auto& [name, k] : spheres) {
    SCOPED_TRACE(name);
    EXPECT_TRUE(flag_report(k).is_flag);
    EXPECT_GE(charney_davis(k), Dyadic(0));
  }
}

TEST(CellCertificate, Examples) {
  for (int n = 3; n <= 5; ++n) {
    auto c = certify_haken_cell_dual(gen::simplex_boundary(n), n);
    EXPECT_TRUE(c.ghs);
    EXPECT_FALSE(c.flag);
    EXPECT_FALSE(c.haken);
  }
  EXPECT_FALSE(certify_haken_cell_dual(gen::cycle(3), 2).haken);
  for (int p = 4; p <= 9; ++p) EXPECT_TRUE(certify_haken_cell_dual(gen::cycle(p), 2).haken);
  EXPECT_TRUE(certify_haken_cell_dual(gen::cross_polytope_boundary(3), 3).haken);
  // Right dimension is required.
  EXPECT_FALSE(certify_haken_cell_dual(gen::cycle(5), 3).haken);
  // Flag but not a sphere.
  auto t = certify_haken_cell_dual(gen::grid_torus(4, 4), 3);
  EXPECT_TRUE(t.flag);
  EXPECT_FALSE(t.ghs);
  EXPECT_FALSE(t.haken);
}

TEST(CellCertificate, SubdividedSpheresAreHaken) {
  for (const auto& [name, k] : corpus::base_spheres()) {
    SCOPED_TRACE(name);
    auto sd = barycentric_subdivision(k);
    EXPECT_TRUE(certify_haken_cell_dual(sd, sd.dimension() + 1).haken);
  }
}
