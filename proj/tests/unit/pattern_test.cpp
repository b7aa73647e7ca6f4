#include <gtest/gtest.h>

#include "haken/corpus.hpp"
#include "haken/error.hpp"
#include "haken/flag.hpp"
#include "haken/generators.hpp"
#include "haken/homology.hpp"
#include "haken/isomorphism.hpp"
#include "haken/pattern.hpp"

using namespace haken;

namespace {

Dyadic quarter() { return Dyadic(BigInt(1), 2); }

std::size_t count_codim(const std::vector<Stratum>& s, int k) {
  std::size_t n = 0;
  for (const auto& x : s) n += x.codimension() == k;
  return n;
}

}  // namespace

TEST(Pattern, RejectsMalformedInput) {
  auto disk = gen::disk_polygon(4);
  // Not in the boundary.
  EXPECT_THROW(PatternedComplex(disk, {{"a", Complex({Simplex{0, 4}})}}), PatternError);
  // Wrong dimension.
  EXPECT_THROW(PatternedComplex(disk, {{"a", Complex({Simplex{0}})}}), PatternError);
  // Disconnected facet.
  EXPECT_THROW(PatternedComplex(disk, {{"a", Complex({Simplex{0, 1}, Simplex{2, 3}})}}), PatternError);
  // Bad names.
  EXPECT_THROW(PatternedComplex(disk, {{"a b", Complex({Simplex{0, 1}})}}), PatternError);
  EXPECT_THROW(PatternedComplex(disk, {{"", Complex({Simplex{0, 1}})}}), PatternError);
  // Not a pseudomanifold.
  EXPECT_THROW(PatternedComplex(Complex({Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{0, 1, 4}}), {}), PatternError);
  EXPECT_THROW(PatternedComplex(Complex({Simplex{0, 1, 2}, Simplex{3, 4}}), {}), PatternError);
}

TEST(Pattern, IncompleteAndNonFullFacets) {
  auto disk = gen::disk_polygon(4);
  PatternedComplex p(disk, {{"a", Complex({Simplex{0, 1}})}});
  EXPECT_FALSE(p.is_complete());
  EXPECT_FALSE(p.warnings().empty());
  // Three sides of a triangle form a non-full facet; the loader subdivides once.
  PatternedComplex q(gen::simplex(2), {{"all", gen::simplex_boundary(2)}});
  EXPECT_TRUE(q.was_subdivided());
  EXPECT_EQ(q.carrier().maximal_simplices().size(), 6u);
  EXPECT_THROW(PatternedComplex(gen::simplex(2), {{"all", gen::simplex_boundary(2)}}, PatternOptions{false, false}),
               PatternError);
}

TEST(Pattern, StrataCounts) {
  auto t = strata(patterns::simplex_cell(2));
  EXPECT_EQ(t.size(), 7u);
  EXPECT_EQ(count_codim(t, 0), 1u);
  EXPECT_EQ(count_codim(t, 1), 3u);
  EXPECT_EQ(count_codim(t, 2), 3u);
  EXPECT_EQ(strata(patterns::square()).size(), 9u);
  auto cube = strata(patterns::cube_cell(3));
  EXPECT_EQ(cube.size(), 27u);
  EXPECT_EQ(count_codim(cube, 3), 8u);
  EXPECT_EQ(strata(patterns::interval()).size(), 3u);
}

TEST(Pattern, StrataOfBigonHaveTwoPointComponents) {
  auto s = strata(patterns::bigon());
  EXPECT_EQ(count_codim(s, 2), 2u);
  for (const auto& x : s)
    if (x.codimension() == 2) EXPECT_EQ(x.facet_set, (std::vector<std::string>{"a", "b"}));
}

TEST(Pattern, FrontierOfTopStratum) {
  auto s = strata(patterns::simplex_cell(2));
  ASSERT_EQ(s.front().codimension(), 0);
  EXPECT_TRUE(are_isomorphic(s.front().frontier, gen::simplex_boundary(2)));
  for (const auto& x : s)
    if (x.codimension() == 2) EXPECT_TRUE(x.frontier.is_void());
}

TEST(Pattern, NonPureIntersectionIsReported) {
  // Two facets meeting in an edge.
  PatternedComplex p(gen::disk_polygon(4), {{"a", Complex({Simplex{0, 1}, Simplex{1, 2}})},
                                            {"b", Complex({Simplex{1, 2}, Simplex{2, 3}})}});
  try {
    (void)strata(p);
    FAIL() << "expected PatternError";
  } catch (const PatternError& e) {
    EXPECT_NE(std::string(e.what()).find("{a,b}"), std::string::npos) << e.what();
  }
}

TEST(Pattern, NerveExamples) {
  EXPECT_TRUE(are_isomorphic(nerve(patterns::simplex_cell(2)).complex, gen::simplex_boundary(2)));
  EXPECT_TRUE(are_isomorphic(nerve(patterns::square()).complex, gen::cycle(4)));
  EXPECT_TRUE(are_isomorphic(nerve(patterns::cube_cell(3)).complex, gen::cross_polytope_boundary(3)));
  EXPECT_TRUE(are_isomorphic(nerve(patterns::simplex_cell(3)).complex, gen::simplex_boundary(3)));
  auto closed = nerve(patterns::closed(gen::grid_torus(3, 3)));
  EXPECT_EQ(closed.complex, Complex::empty_sphere());
  EXPECT_EQ(closed.strata_union.size(), 1u);
  auto n = nerve(patterns::square());
  EXPECT_EQ(n.facet_names, (std::vector<std::string>{"s0", "s1", "s2", "s3"}));
  EXPECT_EQ(n.strata_union.at(Simplex{}), patterns::square().carrier());
}

TEST(Pattern, OrbifoldEulerExamples) {
  EXPECT_EQ(orbifold_euler_strata(patterns::simplex_cell(2)), quarter());
  EXPECT_EQ(orbifold_euler_strata(patterns::square()), Dyadic(0));
  EXPECT_EQ(orbifold_euler_strata(patterns::interval()), Dyadic(0));
  EXPECT_EQ(orbifold_euler_strata(patterns::cube_cell(3)), Dyadic(0));
  EXPECT_EQ(orbifold_euler_strata(patterns::hemisphere(5)), Dyadic(1));
  EXPECT_EQ(orbifold_euler_strata(patterns::closed(gen::projective_plane_6())), Dyadic(1));
  // p-gon: 1 - p/2 + p/4 = 1 - p/4.
  for (int p = 3; p <= 12; ++p)
    EXPECT_EQ(orbifold_euler_strata(patterns::polygon_cell(p)), Dyadic(BigInt(4 - p), 2));
}

TEST(Pattern, ThreeFormulasAgreeOnCorpus) {
  auto all = corpus::patterns();
  EXPECT_GE(all.size(), 25u);
  for (const auto& [name, p] : all) {
    SCOPED_TRACE(name);
    const auto a = orbifold_euler_strata(p);
    EXPECT_EQ(a, orbifold_euler_poincare(p));
    EXPECT_EQ(a, orbifold_euler_nerve(p));
  }
}

TEST(Pattern, OddDimensionalCompletePatternsHaveZeroOrbifoldEuler) {
  for (const auto& [name, p] : corpus::patterns()) {
    if (p.dimension() % 2 == 0 || !p.is_complete()) continue;
    SCOPED_TRACE(name);
    EXPECT_EQ(orbifold_euler_strata(p), Dyadic(0));
  }
}

TEST(Pattern, NerveOfHakenCellIsLambda) {
  // For a cell the nerve formula reduces to (-1)^n λ(L).
  for (int p = 3; p <= 8; ++p)
    EXPECT_EQ(orbifold_euler_strata(patterns::polygon_cell(p)), charney_davis(gen::cycle(p)));
}

TEST(Usefulness, Examples) {
  auto r = usefulness_report(patterns::square());
  EXPECT_TRUE(r.homology_useful);
  EXPECT_EQ(r.verdict(), "homology-useful");
  auto b = usefulness_report(patterns::bigon());
  EXPECT_FALSE(b.pairwise_connected);
  EXPECT_EQ(b.verdict(), "not homology-useful");
  EXPECT_FALSE(b.failures.empty());
  auto a = usefulness_report(patterns::annulus(6, 1));
  EXPECT_FALSE(a.facet_h1_trivial);
  auto t = usefulness_report(patterns::closed(gen::grid_torus(3, 3)));
  EXPECT_FALSE(t.carrier_h1_trivial);
  EXPECT_EQ(t.verdict(), "usefulness undecided");
}

TEST(CellFromSphere, RoundTripsThroughNerve) {
  for (const auto& [name, l] : corpus::ghs_spheres()) {
    SCOPED_TRACE(name);
    auto cell = cell_from_flag_sphere(l);
    EXPECT_EQ(cell.num_facets(), l.num_vertices());
    EXPECT_TRUE(are_isomorphic(nerve(cell).complex, l));
    EXPECT_EQ(homology(cell.carrier()), point_profile());
  }
  EXPECT_THROW(cell_from_flag_sphere(gen::grid_torus(3, 3)), InvalidArgument);
}

TEST(CellFromSphere, FacetNamesFollowLabels) {
  auto cell = cell_from_flag_sphere(gen::cycle(4));
  EXPECT_EQ(cell.facet_names(), (std::vector<std::string>{"v0", "v1", "v2", "v3"}));
  EXPECT_TRUE(cell.is_complete());
}
