#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace bktest;

namespace {

Table2D c4_table() { return table_of(4, [](Element a, Element b) { return (a + b) % 4; }); }

/// Inversion on C3 as a brace automorphism of trivial(C3).
std::vector<BraceMorphism> inversion_action() {
  return {BraceMorphism{{0, 1, 2}, 3, 3, true}, BraceMorphism{{0, 2, 1}, 3, 3, true}};
}

}  // namespace

TEST(VerifyBrace, TrivialC2) {
  const Table2D c2{{0, 1}, {1, 0}};
  auto b = verify_brace(c2, c2);
  ASSERT_TRUE(b);
  EXPECT_TRUE(b.value().is_trivial());
  EXPECT_TRUE(a2(b.value()).members.is_trivial());
}

TEST(VerifyBrace, RadicalRingModEight) {
  const auto a = ring_2z8z();
  EXPECT_EQ(a.order(), 4u);
  EXPECT_EQ(identify_group(a.additive()), "C4");
  EXPECT_EQ(identify_group(a.multiplicative()), "C2 x C2");
  // The circle operation is x + y + xy on residues.
  for (Element x = 0; x < 8; x += 2)
    for (Element y = 0; y < 8; y += 2) EXPECT_EQ(a.circ(r8(x), r8(y)), r8((x + y + x * y) % 8));
}

TEST(VerifyBrace, MutatedCircleEntryIsRejected) {
  const auto a = ring_2z8z();
  auto circle = a.multiplicative().rows();
  circle[1][1] = circle[1][2];
  auto b = verify_brace(a.additive().rows(), circle);
  ASSERT_FALSE(b);
  EXPECT_EQ(b.violation().axiom.rfind("circle:", 0), 0u) << b.violation().axiom;
}

TEST(VerifyBrace, CompatibilityWitness) {
  // Circle = C4 relabelled by swapping 1 and 2; fails the brace law.
  const std::vector<Element> p{0, 2, 1, 3};
  const auto add = c4_table();
  const auto circle = table_of(4, [&](Element a, Element b) { return p[(p[a] + p[b]) % 4]; });
  auto b = verify_brace(add, circle);
  ASSERT_FALSE(b);
  EXPECT_EQ(b.violation().axiom, "compatibility");
  const auto& w = b.violation().witness;
  ASSERT_EQ(w.size(), 3u);
  const Element x = w[0], y = w[1], z = w[2];
  const Element neg_x = (4 - x) % 4;
  EXPECT_NE(circle[x][add[y][z]], add[add[circle[x][y]][neg_x]][circle[x][z]]);
}

TEST(VerifyBrace, GroupFailuresAreTagged) {
  const auto loop = read_json_file(data_path("broken_assoc_brace.json"));
  const auto t = brace_tables_from_json(loop);
  auto b = verify_brace(t.add, t.circle);
  ASSERT_FALSE(b);
  EXPECT_EQ(b.violation().axiom, "additive:not-associative");
  EXPECT_EQ(b.violation().witness.size(), 3u);
  EXPECT_FALSE(verify_brace({{0, 1}, {1, 0}}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
}

TEST(VerifyBrace, IdentityIsRelabelledToZero) {
  // Trivial C3 with identity 1 in both tables.
  const auto t = table_of(3, [](Element a, Element b) { return (a + b + 2) % 3; });
  auto b = verify_brace(t, t);
  ASSERT_TRUE(b);
  for (Element x = 0; x < 3; ++x) EXPECT_EQ(b.value().plus(0, x), x);
}

TEST(TrivialBrace, Examples) {
  EXPECT_TRUE(trivial_brace(cyclic_group(2)).is_trivial());
  const auto s = trivial_brace(s3());
  EXPECT_FALSE(s.additive().is_abelian());
  const auto v = trivial_brace(c2x2());
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) EXPECT_EQ(v.lambda(a, b), b);
}

TEST(Star, Examples) {
  const auto s = trivial_brace(s3());
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) EXPECT_EQ(star(s, a, b), 0u);
  const auto a = ring_2z8z();
  // 2 * 2 = 4 as a ring product mod 8.
  EXPECT_EQ(star(a, r8(2), r8(2)), r8(4));
  for (Element x = 0; x < 8; x += 2)
    for (Element y = 0; y < 8; y += 2) EXPECT_EQ(star(a, r8(x), r8(y)), r8(x * y % 8));
  for (const auto& b : corpus(6))
    for (Element x = 0; x < b.order(); ++x) {
      EXPECT_EQ(b.star(0, x), 0u);
      EXPECT_EQ(b.star(x, 0), 0u);
    }
}

TEST(StarIdentities, Examples) {
  EXPECT_TRUE(check_star_identities(trivial_brace(s3())).passed());
  EXPECT_TRUE(check_star_identities(ring_2z8z()).passed());
  EXPECT_TRUE(check_lambda_laws(ring_2z8z()).passed());
}

TEST(StarIdentities, CorpusAgainstRawTables) {
  for (const auto& b : corpus(8)) {
    EXPECT_TRUE(check_star_identities(b).passed());
    EXPECT_TRUE(check_lambda_laws(b).passed());
    const auto r = raw(b);
    for (Element x = 0; x < b.order(); ++x)
      for (Element y = 0; y < b.order(); ++y) {
        ASSERT_EQ(b.lambda(x, y), r.lambda(x, y));
        ASSERT_EQ(b.star(x, y), r.star(x, y));
        ASSERT_EQ(b.lambda(x, b.lambda_inv(x, y)), y);
      }
  }
}

TEST(BraceIsomorphic, Examples) {
  const auto a = ring_2z8z();
  auto self = brace_isomorphic(a, a);
  ASSERT_TRUE(self);
  EXPECT_TRUE(is_brace_homomorphism(a, a, self->map));
  EXPECT_FALSE(brace_isomorphic(trivial_brace(cyclic_group(4)), trivial_brace(c2x2())));
  EXPECT_FALSE(brace_isomorphic(trivial_brace(cyclic_group(4)), a));
  const auto swapped = relabel_brace(a, {0, 3, 2, 1});
  auto iso = brace_isomorphic(a, swapped);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(iso->is_isomorphism);
  EXPECT_TRUE(is_bijection(iso->map, 4));
  EXPECT_TRUE(is_brace_homomorphism(a, swapped, iso->map));
  EXPECT_FALSE(brace_isomorphic(a, trivial_brace(cyclic_group(3))));
}

TEST(BraceIsomorphic, AgreesWithBruteForceOnSmallCorpus) {
  const auto all = corpus(6);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      if (all[i].order() != all[j].order()) continue;
      const auto ri = raw(all[i]), rj = raw(all[j]);
      const bool expect = oracle::isomorphic(ri.add, ri.circ, rj.add, rj.circ);
      auto f = brace_isomorphic(all[i], all[j]);
      EXPECT_EQ(f.has_value(), expect) << i << ' ' << j;
      EXPECT_EQ(brace_isomorphic(all[j], all[i]).has_value(), expect);
      if (f) { EXPECT_TRUE(is_brace_homomorphism(all[i], all[j], f->map)); }
      EXPECT_EQ(expect, i == j);
    }
}

TEST(DirectProduct, Examples) {
  const auto a = ring_2z8z();
  EXPECT_TRUE(brace_isomorphic(direct_product(a, zero_brace()), a));
  EXPECT_TRUE(brace_isomorphic(direct_product(trivial_brace(cyclic_group(2)), trivial_brace(cyclic_group(3))),
                               trivial_brace(cyclic_group(6))));
  const auto p = direct_product(a, trivial_brace(cyclic_group(2)));
  EXPECT_EQ(p.order(), 8u);
  EXPECT_EQ(a2(p).size(), 2u);
  // Index a * |B| + b, operations componentwise.
  for (Element x = 0; x < 8; ++x)
    for (Element y = 0; y < 8; ++y) {
      EXPECT_EQ(p.plus(x, y), a.plus(x / 2, y / 2) * 2 + (x + y) % 2);
      EXPECT_EQ(p.circ(x, y), a.circ(x / 2, y / 2) * 2 + (x + y) % 2);
    }
  EXPECT_THROW(direct_product(trivial_brace(cyclic_group(12)), trivial_brace(cyclic_group(12)), 100), BoundExceeded);
}

TEST(SemidirectProduct, IdentityActionIsDirectProduct) {
  const auto a = trivial_brace(cyclic_group(3)), b = trivial_brace(cyclic_group(2));
  std::vector<BraceMorphism> id(2, BraceMorphism{{0, 1, 2}, 3, 3, true});
  auto s = semidirect_product(a, b, id);
  ASSERT_TRUE(s);
  const auto d = direct_product(a, b);
  EXPECT_EQ(s.value().additive().rows(), d.additive().rows());
  EXPECT_EQ(s.value().multiplicative().rows(), d.multiplicative().rows());
}

TEST(SemidirectProduct, InversionGivesSymmetricCircleGroup) {
  auto s = semidirect_product(trivial_brace(cyclic_group(3)), trivial_brace(cyclic_group(2)), inversion_action());
  ASSERT_TRUE(s);
  EXPECT_EQ(s.value().order(), 6u);
  EXPECT_EQ(identify_group(s.value().additive()), "C6");
  EXPECT_EQ(identify_group(s.value().multiplicative()), "S3");
  EXPECT_TRUE(verify_brace(s.value().additive().rows(), s.value().multiplicative().rows()));
}

TEST(SemidirectProduct, RejectsBadActions) {
  const auto a = trivial_brace(cyclic_group(3)), b = trivial_brace(cyclic_group(2));
  // Not a homomorphism: theta(0) must be the identity.
  std::vector<BraceMorphism> bad(2, BraceMorphism{{0, 2, 1}, 3, 3, true});
  auto s = semidirect_product(a, b, bad);
  ASSERT_FALSE(s);
  EXPECT_FALSE(s.violation().axiom.empty());
  std::vector<BraceMorphism> not_aut{BraceMorphism{{0, 1, 2}, 3, 3, true}, BraceMorphism{{0, 0, 0}, 3, 3, false}};
  auto t = semidirect_product(a, b, not_aut);
  ASSERT_FALSE(t);
  EXPECT_EQ(t.violation().axiom, "theta-not-automorphism");
  EXPECT_FALSE(semidirect_product(a, b, {BraceMorphism{{0, 1, 2}, 3, 3, true}}));
}

TEST(BraceAutomorphismGroup, Examples) {
  EXPECT_EQ(brace_automorphism_group(trivial_brace(cyclic_group(3))).size(), 2u);
  EXPECT_EQ(brace_automorphism_group(trivial_brace(cyclic_group(2))).size(), 1u);
  const auto a = ring_2z8z();
  const auto auts = brace_automorphism_group(a);
  std::set<std::vector<Element>> maps;
  for (const auto& f : auts) maps.insert(f.map);
  for (const auto& f : auts)
    for (const auto& g : auts) EXPECT_TRUE(maps.count(f.after(g).map));
  const auto r = raw(a);
  EXPECT_EQ(auts.size(), oracle::automorphisms({&r.add, &r.circ}).size());
}

TEST(BraceAutomorphismGroup, MatchesBruteForceOnCorpus) {
  for (const auto& b : corpus(8)) {
    const auto r = raw(b);
    auto ref = oracle::automorphisms({&r.add, &r.circ});
    std::sort(ref.begin(), ref.end());
    std::vector<std::vector<Element>> lib;
    for (const auto& f : brace_automorphism_group(b)) lib.push_back(f.map);
    EXPECT_EQ(lib, ref);
  }
}

TEST(RelabelBrace, PreservesStructure) {
  const auto a = ring_2z8z();
  const std::vector<Element> p{0, 3, 2, 1};
  const auto b = relabel_brace(a, p);
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) {
      EXPECT_EQ(b.plus(p[x], p[y]), p[a.plus(x, y)]);
      EXPECT_EQ(b.circ(p[x], p[y]), p[a.circ(x, y)]);
    }
}
