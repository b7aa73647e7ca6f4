#include <gtest/gtest.h>

#include "haken/corpus.hpp"
#include "haken/error.hpp"
#include "haken/generators.hpp"
#include "haken/homology.hpp"
#include "haken/isomorphism.hpp"
#include "haken/surgery.hpp"

using namespace haken;

namespace {

Complex torus_row(int m, int k, int row) {
  std::vector<Vertex> vs;
  for (int i = 0; i < m; ++i) vs.push_back(i + m * row);
  (void)k;
  return induced_subcomplex(gen::grid_torus(m, k), vs);
}

}  // namespace

TEST(CutLocus, Validation) {
  auto t = patterns::closed(gen::grid_torus(3, 3));
  auto ok = check_cut_locus(t, torus_row(3, 3, 0));
  EXPECT_TRUE(ok.valid()) << (ok.problems.empty() ? "" : ok.problems.front());
  // A single edge of the torus is not closed up in the interior.
  auto edge = check_cut_locus(t, Complex({Simplex{0, 1}}));
  EXPECT_FALSE(edge.valid());
  // Not full: two sides of a triangle of the grid.
  auto sq = patterns::grid_square(2, 2);
  auto nf = check_cut_locus(sq, Complex({Simplex{1, 4}, Simplex{4, 3}, Simplex{1, 3}}));
  EXPECT_FALSE(nf.valid());
  // An arc ending in the interior is not proper.
  auto np = check_cut_locus(sq, Complex({Simplex{1, 4}}));
  EXPECT_FALSE(np.proper);
  EXPECT_THROW(cut_open(sq, Complex({Simplex{1, 4}})), CutError);
}

TEST(Cut, TorusAlongCircleGivesAnnulus) {
  auto t = patterns::closed(gen::grid_torus(3, 3));
  auto r = cut_open(t, torus_row(3, 3, 0), "c");
  EXPECT_EQ(homology(r.result.carrier()).betti, (std::vector<std::int64_t>{1, 1, 0}));
  EXPECT_EQ(r.result.num_facets(), 2u);
  EXPECT_EQ(r.new_facets, (std::vector<std::string>{"c+", "c-"}));
  ASSERT_EQ(r.two_sided.size(), 1u);
  EXPECT_TRUE(r.two_sided[0]);
  EXPECT_EQ(r.result.carrier().num_vertices(), 12u);
  for (const auto& [v, o] : r.origin) EXPECT_EQ(v < 9 ? v : o, o);
}

TEST(Cut, KleinAlongOneSidedCircleGivesOneFacet) {
  auto l = corpus::klein_ledger();
  auto r = cut_open(l.initial, l.steps[0].cut, "c");
  ASSERT_EQ(r.two_sided.size(), 1u);
  EXPECT_FALSE(r.two_sided[0]);
  EXPECT_EQ(r.new_facets, (std::vector<std::string>{"c"}));
  EXPECT_EQ(r.result.num_facets(), 1u);
  // K = RP² # RP² cut along the core of one cross-cap is a Möbius band: one boundary circle.
  EXPECT_EQ(euler_characteristic(r.result.carrier()), 0);
  EXPECT_EQ(connected_components(r.result.boundary()).size(), 1u);
  EXPECT_EQ(homology(r.result.carrier()).betti, (std::vector<std::int64_t>{1, 1, 0}));
}

TEST(Cut, FacetBookkeeping) {
  for (const auto& [name, p, f] : corpus::cut_pairs()) {
    SCOPED_TRACE(name);
    auto r = cut_open(p, f);
    std::size_t expected_new = 0;
    for (bool two : r.two_sided) expected_new += two ? 2 : 1;
    EXPECT_EQ(r.new_facets.size(), expected_new);
    EXPECT_GE(r.result.num_facets(), p.num_facets() + expected_new);
    for (const auto& n : r.new_facets) EXPECT_NO_THROW((void)r.result.facet(n));
  }
}

TEST(Cut, SeveralComponentsGetIndexedNames) {
  auto t = patterns::closed(gen::grid_torus(3, 4));
  std::vector<Vertex> vs;
  for (int i = 0; i < 3; ++i) vs.push_back(i), vs.push_back(i + 6);
  auto r = cut_open(t, induced_subcomplex(t.carrier(), vs), "c");
  EXPECT_EQ(r.new_facets, (std::vector<std::string>{"c.0+", "c.0-", "c.1+", "c.1-"}));
  EXPECT_EQ(split_components(r.result).size(), 2u);
}

TEST(Cut, NameCollisionIsRejected) {
  auto sq = patterns::grid_square(3, 1);
  auto once = cut_open(sq, Complex({Simplex{1, 5}}), "c");
  EXPECT_THROW(cut_open(once.result, Complex({Simplex{2, 6}}), "c"), CutError);
  EXPECT_NO_THROW(cut_open(once.result, Complex({Simplex{2, 6}}), "d"));
}

TEST(Cut, OrbifoldEulerIsInvariant) {
  auto pairs = corpus::cut_pairs();
  EXPECT_GE(pairs.size(), 10u);
  for (const auto& [name, p, f] : pairs) {
    SCOPED_TRACE(name);
    auto r = verify_cut_invariance(p, f);
    EXPECT_TRUE(r.before.agree());
    EXPECT_TRUE(r.after.agree());
    EXPECT_EQ(r.before.strata, r.after.strata);
    EXPECT_EQ(r.after.strata, r.after_components);
    EXPECT_TRUE(r.equal);
    if (r.closed_case) EXPECT_TRUE(r.closed_identity);
  }
}

TEST(Cut, ClosedIdentity) {
  auto t = patterns::closed(gen::grid_torus(3, 3));
  auto r = verify_cut_invariance(t, torus_row(3, 3, 0));
  ASSERT_TRUE(r.closed_case);
  EXPECT_EQ(r.chi_m, 0);
  EXPECT_EQ(r.chi_cut, 0);
  EXPECT_EQ(r.chi_new_boundary, 0);
  EXPECT_TRUE(r.closed_identity);
}

TEST(Hierarchy, TorusLedger) {
  auto l = corpus::torus_ledger();
  auto h = run_prehierarchy(l.initial, l.steps);
  ASSERT_EQ(h.stages.size(), 3u);
  EXPECT_EQ(h.records[0].facets, 0u);
  EXPECT_EQ(h.records[1].facets, 2u);
  EXPECT_EQ(h.records[2].facets, 4u);
  EXPECT_TRUE(h.chi_orb_constant);
  ASSERT_EQ(h.terminal.size(), 1u);
  EXPECT_EQ(h.terminal_sum, Dyadic(0));
  auto c = certify_hierarchy(h);
  EXPECT_TRUE(c.certified);
  EXPECT_TRUE(c.closed_even);
  EXPECT_EQ(c.lambda_sum, Dyadic(0));
  EXPECT_EQ(c.chi_m0, 0);
  ASSERT_EQ(c.cells.size(), 1u);
  EXPECT_TRUE(are_isomorphic(c.cells[0].nerve, gen::cycle(4)));
  EXPECT_FALSE(HierarchyLedger::essentialness_checked);
}

TEST(Hierarchy, Genus2Ledger) {
  auto l = corpus::genus2_ledger();
  auto c = certify_hierarchy(run_prehierarchy(l.initial, l.steps));
  EXPECT_TRUE(c.certified);
  EXPECT_EQ(c.lambda_sum, Dyadic(-2));
  EXPECT_EQ(c.chi_m0, -2);
  EXPECT_TRUE(c.euler_matches);
  // (-1)^1 · (-2) ≥ 0.
  EXPECT_TRUE(c.sign_check);
}

TEST(Hierarchy, KleinAndThreeTorus) {
  auto k = corpus::klein_ledger();
  auto ck = certify_hierarchy(run_prehierarchy(k.initial, k.steps));
  EXPECT_TRUE(ck.certified);
  EXPECT_EQ(ck.lambda_sum, Dyadic(0));
  auto t3 = corpus::torus3_ledger();
  auto h = run_prehierarchy(t3.initial, t3.steps);
  auto c = certify_hierarchy(h);
  EXPECT_TRUE(c.certified);
  EXPECT_FALSE(c.closed_even);
  EXPECT_EQ(c.lambda_sum, Dyadic(0));
  ASSERT_EQ(c.cells.size(), 1u);
  EXPECT_TRUE(are_isomorphic(c.cells[0].nerve, gen::cross_polytope_boundary(3)));
}

TEST(Hierarchy, NonFlagTerminalCellIsNotCertified) {
  auto l = corpus::corner_ledger();
  auto h = run_prehierarchy(l.initial, l.steps);
  auto c = certify_hierarchy(h);
  EXPECT_FALSE(c.certified);
  ASSERT_EQ(c.cells.size(), 2u);
  EXPECT_TRUE(h.chi_orb_constant);
  EXPECT_EQ(c.lambda_sum, Dyadic(0));
}

TEST(Hierarchy, BadStepIsReportedWithIndex) {
  auto l = corpus::torus_ledger();
  auto steps = l.steps;
  steps.push_back({"", Complex({Simplex{0, 1}})});
  try {
    (void)run_prehierarchy(l.initial, steps);
    FAIL() << "expected CutError";
  } catch (const CutError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("step 3", 0), 0u) << e.what();
  }
}
