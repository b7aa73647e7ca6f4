#include <gtest/gtest.h>

#include <set>

#include "haken/construction.hpp"
#include "haken/corpus.hpp"
#include "haken/error.hpp"
#include "haken/generators.hpp"
#include "haken/homology.hpp"
#include "haken/isomorphism.hpp"

using namespace haken;

TEST(Stabilizer, VertexSets) {
  auto t = patterns::simplex_cell(2);
  EXPECT_EQ(vertex_stabilizer_set(t, 0), (std::vector<std::string>{"f1", "f2"}));
  EXPECT_THROW(vertex_stabilizer_set(t, 7), InvalidArgument);
  auto h = patterns::hemisphere(4);
  EXPECT_TRUE(vertex_stabilizer_set(h, 4).empty());
}

TEST(Double, IntervalIsFourEdgeCircle) {
  auto d = build_double(patterns::interval());
  EXPECT_TRUE(are_isomorphic(d.complex, gen::cycle(4)));
  EXPECT_EQ(euler_characteristic(d.complex), 0);
  EXPECT_TRUE(d.closed);
}

TEST(Double, TriangleIsOctahedron) {
  auto d = build_double(patterns::simplex_cell(2));
  EXPECT_EQ(d.complex.maximal_simplices().size(), 8u);
  EXPECT_EQ(euler_characteristic(d.complex), 2);
  EXPECT_TRUE(are_isomorphic(d.complex, gen::cross_polytope_boundary(3)));
  EXPECT_EQ(homology(d.complex), sphere_profile(2));
}

TEST(Double, SquareAndCubeAndHemisphere) {
  auto sq = build_double(patterns::square());
  EXPECT_EQ(euler_characteristic(sq.complex), 0);
  EXPECT_EQ(homology(sq.complex).betti, (std::vector<std::int64_t>{1, 2, 1}));
  auto cube = build_double(patterns::cube_cell(3));
  EXPECT_EQ(euler_characteristic(cube.complex), 0);
  EXPECT_TRUE(is_homology_manifold(cube.complex));
  auto h = build_double(patterns::hemisphere(5));
  EXPECT_EQ(euler_characteristic(h.complex), 2);
  EXPECT_EQ(homology(h.complex), sphere_profile(2));
}

TEST(Double, PartialMirrors) {
  auto sq = patterns::square();
  auto d = build_double(sq, {"s2", "s0"});
  EXPECT_EQ(d.mirrors, (std::vector<std::string>{"s0", "s2"}));
  EXPECT_EQ(euler_characteristic(d.complex), 0);
  EXPECT_FALSE(d.closed);
  EXPECT_EQ(partial_quotient_chi(sq, {"s0", "s2"}), Dyadic(0));
  auto t = patterns::simplex_cell(2);
  EXPECT_EQ(partial_quotient_chi(t, {"f0"}), Dyadic(BigInt(1), 1));
  auto none = build_double(t, std::vector<std::string>{});
  EXPECT_EQ(none.complex, t.carrier());
}

TEST(Double, Errors) {
  auto sq = patterns::square();
  EXPECT_THROW(build_double(sq, {"nope"}), InvalidArgument);
  EXPECT_THROW(build_double(sq, {"s0", "s0"}), InvalidArgument);
  EXPECT_THROW(build_double(sq, 3), BudgetExceeded);
}

TEST(Double, VertexCountIsOrbitSum) {
  for (const auto& [name, p] : corpus::patterns()) {
    if (p.num_facets() > 8) continue;
    SCOPED_TRACE(name);
    auto d = build_double(p);
    const auto m = static_cast<int>(p.num_facets());
    std::size_t expected = 0;
    for (Vertex v : p.carrier().vertices())
      expected += std::size_t{1} << (m - static_cast<int>(vertex_stabilizer_set(p, v).size()));
    EXPECT_EQ(d.complex.num_vertices(), expected);
    EXPECT_EQ(d.complex.maximal_simplices().size(), p.carrier().maximal_simplices().size() << m);
  }
}

TEST(Double, ActionIsByInvolutiveAutomorphisms) {
  for (const auto& [name, p] : corpus::patterns()) {
    if (p.num_facets() > 6 || p.num_facets() == 0) continue;
    SCOPED_TRACE(name);
    auto d = build_double(p);
    for (const auto& a : d.action) {
      std::map<Vertex, Vertex> m;
      for (std::size_t x = 0; x < a.size(); ++x) {
        EXPECT_EQ(a[static_cast<std::size_t>(a[x])], static_cast<Vertex>(x));
        m[static_cast<Vertex>(x)] = a[x];
        EXPECT_EQ(d.origin[static_cast<std::size_t>(a[x])], d.origin[x]);
      }
      EXPECT_EQ(relabel(d.complex, m), d.complex);
    }
    // Reflections commute.
    for (std::size_t i = 0; i < d.action.size(); ++i)
      for (std::size_t j = i + 1; j < d.action.size(); ++j)
        for (std::size_t x = 0; x < d.action[i].size(); ++x)
          EXPECT_EQ(d.action[i][static_cast<std::size_t>(d.action[j][x])], d.action[j][static_cast<std::size_t>(d.action[i][x])]);
  }
}

TEST(Double, CompletePatternsDoubleToClosedManifolds) {
  for (const auto& [name, p] : corpus::patterns()) {
    if (!p.is_complete() || p.num_facets() > 8) continue;
    SCOPED_TRACE(name);
    auto d = build_double(p);
    EXPECT_TRUE(d.closed);
    EXPECT_TRUE(is_homology_manifold(d.complex));
  }
}

TEST(Quotient, FormulaHoldsOnCorpus) {
  int checked = 0;
  for (const auto& [name, p] : corpus::patterns()) {
    if (p.num_facets() > 8) continue;
    SCOPED_TRACE(name);
    auto r = verify_quotient_formula(p);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(Dyadic(r.chi_double), r.chi_orb.scaled(r.mirrors));
    ++checked;
  }
  EXPECT_GE(checked, 25);
}

TEST(Quotient, PartialMirrorsMatchRestrictedPattern) {
  for (const auto& [name, p] : corpus::patterns()) {
    if (p.num_facets() < 2 || p.num_facets() > 6) continue;
    SCOPED_TRACE(name);
    auto names = p.facet_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::vector<std::string> sub;
      for (std::size_t j = 0; j < names.size(); ++j)
        if (j != i) sub.push_back(names[j]);
      EXPECT_EQ(partial_quotient_chi(p, sub), orbifold_euler_strata(p.restricted_to(sub)));
    }
  }
}

TEST(Quotient, FallbackBeyondLimit) {
  auto p = patterns::polygon_cell(12);
  auto names = p.facet_names();
  EXPECT_EQ(partial_quotient_chi(p, names, 4), orbifold_euler_strata(p));
  EXPECT_EQ(partial_quotient_chi(p, names, 4), Dyadic(-2));
}

TEST(LiftedPattern, UnmirroredFacetsLift) {
  auto sq = patterns::square();
  auto d = build_double(sq, {"s0"});
  auto lp = lifted_pattern(d, sq);
  // s1 and s3 meet the mirror s0 and are glued into one arc each; s2 splits into two copies.
  EXPECT_EQ(lp.num_facets(), 4u);
  auto names = lp.facet_names();
  EXPECT_TRUE(std::find(names.begin(), names.end(), "s2.0") != names.end());
  EXPECT_TRUE(std::find(names.begin(), names.end(), "s1") != names.end());
}
