#include <gtest/gtest.h>

#include "support.hpp"

using namespace bktest;

namespace {

ElementSet elems(const FiniteGroup& g, oracle::Mask m) {
  ElementSet s(g.order());
  for (auto x : oracle::members(m, g.order())) s.insert(x);
  return s;
}

}  // namespace

TEST(VerifyGroupAxioms, AcceptsC2) {
  auto g = verify_group_axioms({{0, 1}, {1, 0}});
  ASSERT_TRUE(g);
  EXPECT_EQ(g.value().order(), 2u);
  EXPECT_TRUE(g.value().is_abelian());
}

TEST(VerifyGroupAxioms, MaxTableHasNoInverses) {
  auto g = verify_group_axioms(table_of(3, [](Element a, Element b) { return std::max(a, b); }));
  ASSERT_FALSE(g);
  EXPECT_EQ(g.violation().axiom, "no-inverse");
  EXPECT_FALSE(g.violation().witness.empty());
}

TEST(VerifyGroupAxioms, PermutationCompositionIsNonabelianGroup) {
  auto g = verify_group_axioms(s3_table());
  ASSERT_TRUE(g);
  EXPECT_FALSE(g.value().is_abelian());
  EXPECT_EQ(identify_group(g.value()), "S3");
}

TEST(VerifyGroupAxioms, ReportsAssociativityWitness) {
  const Table2D loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  auto g = verify_group_axioms(loop);
  ASSERT_FALSE(g);
  EXPECT_EQ(g.violation().axiom, "not-associative");
  const auto& w = g.violation().witness;
  ASSERT_EQ(w.size(), 3u);
  EXPECT_NE(loop[loop[w[0]][w[1]]][w[2]], loop[w[0]][loop[w[1]][w[2]]]);
}

TEST(VerifyGroupAxioms, RejectsNonLatinAndMalformed) {
  EXPECT_FALSE(verify_group_axioms({{0, 1}, {1, 1}}));
  auto ragged = verify_group_axioms({{0, 1}, {1}});
  ASSERT_FALSE(ragged);
  EXPECT_EQ(ragged.violation().axiom, "malformed");
  EXPECT_FALSE(verify_group_axioms({{0, 5}, {5, 0}}));
}

TEST(VerifyGroupAxioms, NormalizesIdentityToZero) {
  // C3 with identity labelled 2.
  auto g = verify_group_axioms(table_of(3, [](Element a, Element b) { return (a + b + 1) % 3; }));
  ASSERT_TRUE(g);
  for (Element x = 0; x < 3; ++x) EXPECT_EQ(g.value().op(0, x), x);
}

TEST(Center, Examples) {
  EXPECT_TRUE(center(cyclic_group(4)).members.is_full());
  EXPECT_TRUE(center(c2x2()).members.is_full());
  const auto g = s3();
  EXPECT_EQ(mask_of(center(g).members), oracle::center(g.rows()));
  EXPECT_EQ(center(g).size(), 1u);
}

TEST(CommutatorSubgroup, Examples) {
  EXPECT_TRUE(commutator_subgroup(cyclic_group(6)).members.is_trivial());
  const auto g = s3();
  EXPECT_EQ(commutator_subgroup(g).size(), 3u);
  EXPECT_EQ(mask_of(commutator_subgroup(g).members), oracle::commutator_subgroup(g.rows()));
  const auto d4 = dihedral_group(4);
  EXPECT_EQ(commutator_subgroup(d4).members, center(d4).members);
  EXPECT_EQ(commutator_subgroup(d4).size(), 2u);
}

TEST(SubgroupClosure, Examples) {
  EXPECT_TRUE(subgroup_closure(cyclic_group(6), ElementSet(6)).members.is_trivial());
  EXPECT_EQ(subgroup_closure(cyclic_group(6), set_of(6, {2})).members, set_of(6, {0, 2, 4}));
  const auto g = s3();
  Element transposition = 0, three_cycle = 0;
  for (Element x = 1; x < 6; ++x) (g.element_order(x) == 2 ? transposition : three_cycle) = x;
  EXPECT_TRUE(subgroup_closure(g, set_of(6, {transposition, three_cycle})).members.is_full());
}

TEST(NormalClosure, Examples) {
  EXPECT_EQ(normal_closure(cyclic_group(8), set_of(8, {6})).members, set_of(8, {0, 2, 4, 6}));
  EXPECT_TRUE(normal_closure(s3(), ElementSet(6)).members.is_trivial());
  const auto g = s3();
  for (Element x = 1; x < 6; ++x)
    if (g.element_order(x) == 2) { EXPECT_TRUE(normal_closure(g, set_of(6, {x})).members.is_full()); }
}

TEST(AllNormalSubgroups, MatchesBruteForce) {
  EXPECT_EQ(all_normal_subgroups(cyclic_group(5)).size(), 2u);
  EXPECT_EQ(all_normal_subgroups(s3()).size(), 3u);
  EXPECT_EQ(all_normal_subgroups(c2x2()).size(), 5u);
  for (std::size_t n = 1; n <= kCatalogMaxOrder; ++n)
    for (const auto& [name, g] : small_groups(n)) {
      std::set<oracle::Mask> lib, ref;
      for (const auto& s : all_normal_subgroups(g)) lib.insert(mask_of(s.members));
      for (auto m : oracle::subgroups(g.rows(), true)) ref.insert(m);
      EXPECT_EQ(lib, ref) << name;
      std::set<oracle::Mask> all_lib, all_ref;
      for (const auto& s : all_subgroups(g)) all_lib.insert(mask_of(s.members));
      for (auto m : oracle::subgroups(g.rows(), false)) all_ref.insert(m);
      EXPECT_EQ(all_lib, all_ref) << name;
    }
}

TEST(AllNormalSubgroups, RespectsBound) {
  EXPECT_THROW(all_normal_subgroups(cyclic_group(20)), BoundExceeded);
  EXPECT_NO_THROW(all_normal_subgroups(cyclic_group(20), 20));
}

TEST(NormalClosure, IsIntersectionOfNormalSubgroupsContainingSeed) {
  for (std::size_t n : {6u, 8u, 12u})
    for (const auto& [name, g] : small_groups(n)) {
      const auto normals = oracle::subgroups(g.rows(), true);
      for (Element x = 0; x < n; ++x)
        for (Element y = x; y < n; ++y) {
          const oracle::Mask seed = (1u << x) | (1u << y);
          oracle::Mask expect = oracle::full(n);
          for (auto m : normals)
            if ((m & seed) == seed) expect &= m;
          EXPECT_EQ(mask_of(normal_closure(g, elems(g, seed)).members), expect) << name << ' ' << x << ' ' << y;
        }
    }
}

TEST(AutomorphismGroup, CountsMatchBruteForce) {
  EXPECT_EQ(automorphism_group(cyclic_group(2)).size(), 1u);
  EXPECT_EQ(automorphism_group(cyclic_group(3)).size(), 2u);
  EXPECT_EQ(automorphism_group(c2x2()).size(), 6u);
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& [name, g] : small_groups(n)) {
      const auto rows = g.rows();
      auto ref = oracle::automorphisms({&rows});
      std::vector<std::vector<Element>> lib;
      for (const auto& m : automorphism_group(g)) lib.push_back(m.map);
      std::sort(ref.begin(), ref.end());
      EXPECT_EQ(lib, ref) << name;
    }
}

TEST(AutomorphismGroup, ClosedUnderCompositionAndInverse) {
  for (const auto& [name, g] : small_groups(8)) {
    const auto auts = automorphism_group(g);
    std::set<std::vector<Element>> maps;
    for (const auto& a : auts) maps.insert(a.map);
    for (const auto& a : auts) {
      EXPECT_TRUE(maps.count(a.inverse().map)) << name;
      for (const auto& b : auts) EXPECT_TRUE(maps.count(a.after(b).map)) << name;
    }
  }
}

TEST(QuotientGroup, Examples) {
  const auto c4 = cyclic_group(4);
  EXPECT_EQ(quotient_group(c4, Subgroup{ElementSet::full(4), 4}).group.order(), 1u);
  const auto q = quotient_group(c4, Subgroup{set_of(4, {0, 2}), 4});
  EXPECT_EQ(q.group.order(), 2u);
  EXPECT_EQ(q.projection, (std::vector<Element>{0, 1, 0, 1}));
  const auto g = s3();
  const auto a3 = commutator_subgroup(g);
  const auto s = quotient_group(g, a3);
  EXPECT_EQ(identify_group(s.group), "C2");
  for (Element x = 0; x < 6; ++x) EXPECT_EQ(s.projection[x], a3.contains(x) ? 0u : 1u);
}

TEST(QuotientGroup, RejectsNonNormal) {
  const auto g = s3();
  for (Element x = 1; x < 6; ++x)
    if (g.element_order(x) == 2) {
      EXPECT_THROW(quotient_group(g, subgroup_closure(g, set_of(6, {x}))), InvalidInput);
      break;
    }
}

TEST(QuotientGroup, ProjectionIsSurjectiveHomomorphismWithKernelN) {
  for (std::size_t n = 1; n <= kCatalogMaxOrder; ++n)
    for (const auto& [name, g] : small_groups(n))
      for (const auto& nsub : all_normal_subgroups(g)) {
        const auto q = quotient_group(g, nsub);
        EXPECT_EQ(q.group.order() * nsub.size(), n);
        EXPECT_TRUE(verify_group_axioms(q.group.rows()));
        std::set<Element> image(q.projection.begin(), q.projection.end());
        EXPECT_EQ(image.size(), q.group.order());
        for (Element a = 0; a < n; ++a) {
          EXPECT_EQ(q.projection[a] == 0, nsub.contains(a));
          for (Element b = 0; b < n; ++b) EXPECT_EQ(q.projection[g.op(a, b)], q.group.op(q.projection[a], q.projection[b]));
        }
      }
}

TEST(Catalog, GroupsReverifyAndArePairwiseNonIsomorphic) {
  const std::vector<std::size_t> counts{0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5};
  for (std::size_t n = 1; n <= kCatalogMaxOrder; ++n) {
    const auto& gs = small_groups(n);
    EXPECT_EQ(gs.size(), counts[n]) << n;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      EXPECT_TRUE(verify_group_axioms(gs[i].group.rows()));
      EXPECT_EQ(small_group_index(gs[i].group), i);
      for (std::size_t j = i + 1; j < gs.size(); ++j) EXPECT_FALSE(group_isomorphism(gs[i].group, gs[j].group));
    }
  }
  EXPECT_THROW(small_groups(13), InvalidInput);
}

TEST(AbelianInvariants, Examples) {
  EXPECT_EQ(abelian_invariants(cyclic_group(12)), (std::vector<std::size_t>{12}));
  EXPECT_EQ(abelian_invariants(elementary_abelian(2, 3)), (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(abelian_invariants(direct_product(cyclic_group(6), cyclic_group(2))), (std::vector<std::size_t>{2, 6}));
  EXPECT_EQ(abelian_rank(elementary_abelian(3, 2)), 2u);
  EXPECT_EQ(abelian_rank(cyclic_group(6)), 1u);
  EXPECT_EQ(abelian_rank(cyclic_group(1)), 0u);
}

TEST(FrattiniSubgroup, Examples) {
  EXPECT_EQ(frattini_subgroup(cyclic_group(4)).members, set_of(4, {0, 2}));
  EXPECT_TRUE(frattini_subgroup(c2x2()).members.is_trivial());
  EXPECT_TRUE(frattini_subgroup(s3()).members.is_trivial());
  EXPECT_EQ(frattini_subgroup(dicyclic_group(2)).size(), 2u);
}
