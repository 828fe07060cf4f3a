#include <gtest/gtest.h>

#include <filesystem>

#include "support.hpp"

using namespace bktest;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<Element>> circle_cells(const BraceCatalog& c) {
  std::vector<std::vector<Element>> out;
  for (const auto& e : c.entries) out.push_back(e.brace.multiplicative().cells());
  return out;
}

}  // namespace

TEST(Enumerate, OrderOne) {
  const auto c = enumerate_braces(1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c.entries[0].brace.is_zero());
  EXPECT_EQ(enumerate_braces(1, EnumerationMethod::exhaustive).size(), 1u);
}

TEST(Enumerate, MethodsAgreeUpToOrderFive) {
  for (std::size_t n = 1; n <= kExhaustiveMaxOrder; ++n) {
    const auto h = enumerate_braces(n, EnumerationMethod::holomorph);
    const auto e = enumerate_braces(n, EnumerationMethod::exhaustive);
    EXPECT_EQ(h.size(), e.size()) << n;
    EXPECT_EQ(h.counts_by_additive, e.counts_by_additive) << n;
    // Each holomorph class matches exactly one exhaustive class.
    for (const auto& he : h.entries) {
      std::size_t matches = 0;
      for (const auto& ee : e.entries) matches += brace_isomorphic(he.brace, ee.brace).has_value();
      EXPECT_EQ(matches, 1u) << n;
    }
  }
}

TEST(Enumerate, PrimeOrdersGiveOnlyTheTrivialBrace) {
  for (std::size_t p : {2u, 3u, 5u, 7u, 11u}) {
    const auto c = enumerate_braces(p);
    ASSERT_EQ(c.size(), 1u) << p;
    EXPECT_TRUE(c.entries[0].brace.is_trivial());
    EXPECT_TRUE(brace_isomorphic(c.entries[0].brace, trivial_brace(cyclic_group(p))));
  }
}

TEST(Enumerate, EveryEntryVerifiesAndClassesAreDistinct) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto c = enumerate_braces(n);
    std::size_t total = 0;
    for (const auto& [name, k] : c.counts_by_additive) total += k;
    EXPECT_EQ(total, c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto& b = c.entries[i].brace;
      EXPECT_TRUE(verify_brace(b.additive().rows(), b.multiplicative().rows()));
      EXPECT_TRUE(check_star_identities(b).passed());
      EXPECT_EQ(small_group_index(b.additive()), c.entries[i].additive_index);
      for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_FALSE(brace_isomorphic(b, c.entries[j].brace)) << n;
    }
  }
}

TEST(Enumerate, ClassesDistinctByBruteForceUpToOrderSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto c = enumerate_braces(n);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const auto a = raw(c.entries[i].brace), b = raw(c.entries[j].brace);
        EXPECT_FALSE(oracle::isomorphic(a.add, a.circ, b.add, b.circ));
      }
  }
}

TEST(Enumerate, KnownBracesAppear) {
  const auto four = enumerate_braces(4);
  bool ring = false;
  for (const auto& e : four.entries) ring = ring || brace_isomorphic(e.brace, ring_2z8z()).has_value();
  EXPECT_TRUE(ring);
  const auto six = enumerate_braces(6);
  auto sd = semidirect_product(trivial_brace(cyclic_group(3)), trivial_brace(cyclic_group(2)),
                               {BraceMorphism{{0, 1, 2}, 3, 3, true}, BraceMorphism{{0, 2, 1}, 3, 3, true}});
  ASSERT_TRUE(sd);
  std::size_t hits = 0;
  for (const auto& e : six.entries) hits += brace_isomorphic(e.brace, sd.value()).has_value();
  EXPECT_EQ(hits, 1u);
}

TEST(Enumerate, OutputIsIndependentOfJobCount) {
  for (std::size_t n : {8u, 12u}) {
    const auto a = enumerate_braces(n, EnumerationMethod::holomorph, 1);
    const auto b = enumerate_braces(n, EnumerationMethod::holomorph, 4);
    EXPECT_EQ(circle_cells(a), circle_cells(b));
    EXPECT_EQ(a.counts_by_additive, b.counts_by_additive);
  }
}

TEST(Enumerate, RejectsUnsupportedOrders) {
  EXPECT_THROW(enumerate_braces(0), InvalidInput);
  EXPECT_THROW(enumerate_braces(13), InvalidInput);
  EXPECT_THROW(enumerate_braces(6, EnumerationMethod::exhaustive), InvalidInput);
  EXPECT_THROW(parse_method("regular"), InvalidInput);
  EXPECT_EQ(parse_method("exhaustive"), EnumerationMethod::exhaustive);
}

TEST(Cache, RoundTripsAndRejectsTampering) {
  const fs::path dir = fs::temp_directory_path() / "bracekit-cache-test";
  fs::remove_all(dir);
  CacheOptions opt;
  opt.directory = dir;
  const auto first = cached_enumerate(6, EnumerationMethod::holomorph, opt);
  const auto file = catalog_cache_file(dir, 6, EnumerationMethod::holomorph);
  ASSERT_TRUE(fs::exists(file));
  const auto second = cached_enumerate(6, EnumerationMethod::holomorph, opt);
  EXPECT_EQ(circle_cells(first), circle_cells(second));
  EXPECT_EQ(circle_cells(first), circle_cells(enumerate_braces(6)));

  auto j = read_json_file(file);
  EXPECT_TRUE(catalog_from_json(j, 6, EnumerationMethod::holomorph));
  EXPECT_FALSE(catalog_from_json(j, 6, EnumerationMethod::exhaustive));
  auto stale = j;
  stale["version"] = "0.0.0";
  EXPECT_FALSE(catalog_from_json(stale, 6, EnumerationMethod::holomorph));
  // A corrupted circle table must not be trusted.
  auto bad = j;
  bad["entries"][0]["circle"][1][1] = 0;
  bad["entries"][0]["circle"][1][2] = 0;
  EXPECT_FALSE(catalog_from_json(bad, 6, EnumerationMethod::holomorph));
  fs::remove_all(dir);
}
