#include <doctest.h>

#include <map>
#include <set>

#include "test_support.hpp"
#include "treecross/errors.hpp"
#include "treecross/tree_core.hpp"

using namespace treecross;
using treecross::testing::all_trees;

namespace {

std::vector<Edge> edges_of(const LabeledTree& t) { return {t.edges().begin(), t.edges().end()}; }

LabeledTree tree(int n, std::vector<Edge> edges) { return LabeledTree::from_edges(n, std::move(edges)); }

}  // namespace

TEST_CASE("prufer_decode examples") {
  CHECK(prufer_decode(PruferCode(4, {1, 1})) == tree(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(prufer_decode(PruferCode(3, {2})) == tree(3, {{1, 2}, {2, 3}}));
  CHECK(prufer_decode(PruferCode(4, {2, 3})) == tree(4, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(prufer_decode(PruferCode(2, {})) == tree(2, {{1, 2}}));
  CHECK(prufer_decode(PruferCode(1, {})).edges().empty());
}

TEST_CASE("prufer codes reject bad entries and lengths") {
  CHECK_THROWS_AS(PruferCode(4, {1, 5}), InvalidCode);
  CHECK_THROWS_AS(PruferCode(4, {0, 1}), InvalidCode);
  CHECK_THROWS_AS(PruferCode(4, {1}), InvalidCode);
  CHECK_THROWS_AS(PruferCode(2, {1}), InvalidCode);
}

TEST_CASE("prufer_encode examples") {
  CHECK(prufer_encode(tree(4, {{1, 2}, {1, 3}, {1, 4}})) == PruferCode(4, {1, 1}));
  CHECK(prufer_encode(tree(4, {{1, 2}, {2, 3}, {3, 4}})) == PruferCode(4, {2, 3}));
  CHECK(prufer_encode(tree(2, {{1, 2}})).code().empty());
}

TEST_CASE("trees reject wrong edge count, cycles and disconnection") {
  CHECK_THROWS_AS(LabeledTree::from_edges(4, {{1, 2}, {2, 3}}), InvalidTree);
  CHECK_THROWS_AS(LabeledTree::from_edges(4, {{1, 2}, {2, 3}, {1, 3}}), InvalidTree);
  CHECK_THROWS_AS(LabeledTree::from_edges(4, {{1, 2}, {1, 2}, {3, 4}}), InvalidTree);
  CHECK_THROWS_AS(LabeledTree::from_edges(3, {{1, 2}, {2, 4}}), InvalidTree);
}

TEST_CASE("bijection and Cayley count for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    std::set<LabeledTree> seen;
    std::uint64_t count = 0;
    auto stream = enumerate_trees(n);
    std::vector<Label> previous;
    while (auto t = stream.next()) {
      const PruferCode code = prufer_encode(*t);
      CHECK(prufer_decode(code) == *t);
      // lexicographic order of codes
      std::vector<Label> c(code.code().begin(), code.code().end());
      if (count > 0) CHECK(previous < c);
      previous = c;
      if (n <= 6) seen.insert(*t);
      ++count;
    }
    CHECK(from_u64(count) == tree_count(n));
    if (n <= 6) CHECK(from_u64(seen.size()) == tree_count(n));
  }
}

TEST_CASE("shards partition the code space") {
  std::uint64_t a = 0, b = 0;
  std::set<LabeledTree> all;
  auto s0 = enumerate_trees(5, 0, 2);
  while (auto t = s0.next()) {
    all.insert(*t);
    ++a;
  }
  auto s1 = enumerate_trees(5, 1, 2);
  while (auto t = s1.next()) {
    CHECK(all.count(*t) == 0);
    all.insert(*t);
    ++b;
  }
  CHECK(a + b == 125);
  CHECK(all.size() == 125);
  CHECK((a == 62 || a == 63));

  CHECK(enumerate_trees(3).range().size() == 3);
  CHECK(enumerate_trees(4).range().size() == 16);
  CHECK_THROWS_AS(enumerate_trees(5, 2, 2), ArgumentError);
  CHECK_THROWS_AS(enumerate_trees(5, 0, 0), ArgumentError);

  // more shards than codes still covers everything once
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < 7; ++s) total += shard_range(3, s, 7).size();
  CHECK(total == 3);
}

TEST_CASE("sample_tree determinism and small n") {
  Rng r1(42), r2(42);
  CHECK(sample_tree(5, r1) == sample_tree(5, r2));
  Rng r(9);
  CHECK(sample_tree(2, r) == tree(2, {{1, 2}}));
  CHECK(sample_tree(1, r).edges().empty());
}

TEST_CASE("sample_tree is uniform on 16 trees at n = 4") {
  constexpr int kDraws = 160000;
  Rng rng(2024);
  std::map<LabeledTree, int> freq;
  for (int i = 0; i < kDraws; ++i) ++freq[sample_tree(4, rng)];
  REQUIRE(freq.size() == 16);
  double chi2 = 0;
  const double expected = kDraws / 16.0;
  for (const auto& [t, c] : freq) {
    CHECK(std::abs(c / double(kDraws) - 1.0 / 16) <= 0.0024);
    chi2 += (c - expected) * (c - expected) / expected;
  }
  // 0.999 quantile of chi-square with 15 degrees of freedom
  CHECK(chi2 < 37.6973);
}

TEST_CASE("forest validation") {
  CHECK_THROWS_AS(Forest::from_components(5, {{{1, 2}}, {{2, 3}}}), InvalidForest);
  CHECK_THROWS_AS(Forest::from_components(5, {{{1, 2}, {2, 3}, {1, 3}}}), InvalidForest);
  CHECK_THROWS_AS(Forest::from_components(5, {{{1, 2}, {3, 4}}}), InvalidForest);
  CHECK_THROWS_AS(Forest::from_edges(4, {{1, 2}, {2, 3}, {3, 1}}), InvalidForest);
  const Forest f = Forest::from_edges(6, {{1, 2}, {2, 3}, {5, 6}});
  CHECK(f.num_components() == 2);
  CHECK(f.edges().size() == 3);
  const auto sizes = f.component_sizes();
  CHECK(std::multiset<int>(sizes.begin(), sizes.end()) == std::multiset<int>{2, 3});
}

TEST_CASE("count_trees_containing and forest_probability examples") {
  CHECK(count_trees_containing(4, Forest::from_edges(4, {{1, 2}})) == 8);
  CHECK(count_trees_containing(4, Forest::from_edges(4, {{1, 2}, {2, 3}})) == 3);
  CHECK(count_trees_containing(5, Forest::from_edges(5, {{1, 2}, {3, 4}})) == 20);
  CHECK(forest_probability(5, Forest::from_edges(5, {{1, 2}, {3, 4}})) == Rational(4, 25));
  CHECK(forest_probability(4, Forest::from_edges(4, {{1, 2}})) == Rational(1, 2));
  // spanning forest: the unique containing tree is itself
  CHECK(count_trees_containing(4, Forest::from_edges(4, {{1, 2}, {2, 3}, {3, 4}})) == 1);
  CHECK(forest_probability(4, Forest::from_edges(4, {{1, 2}, {2, 3}, {3, 4}})) == Rational(1, 16));
  // empty forest
  CHECK(count_trees_containing(6, Forest::from_edges(6, {})) == 1296);
  CHECK(forest_probability(6, Forest::from_edges(6, {})) == 1);
}

TEST_CASE("a crossing pair of edges has probability 4/n^2") {
  for (int n = 4; n <= 30; ++n) {
    const Forest f = Forest::from_edges(n, {{1, 3}, {2, 4}});
    CHECK(forest_probability(n, f) == make_rational(BigInt(4), BigInt(n * n)));
  }
}

TEST_CASE("contains_forest examples") {
  const LabeledTree star = tree(4, {{1, 2}, {1, 3}, {1, 4}});
  const LabeledTree path = tree(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(contains_forest(star, Forest::from_edges(4, {{1, 2}})));
  CHECK_FALSE(contains_forest(path, Forest::from_edges(4, {{1, 3}})));
  CHECK(contains_forest(path, Forest::from_edges(4, {})));
}

TEST_CASE("Pitman count matches brute force for every forest on n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const auto trees = all_trees(n);
    for (const auto& edges : testing::all_forest_edge_sets(n)) {
      const Forest f = Forest::from_edges(n, edges);
      CHECK(count_trees_containing(n, f) == from_u64(testing::brute_force_containing(trees, edges)));
    }
  }
}

TEST_CASE("independence of vertex-disjoint forests") {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 7;
    std::vector<Label> perm{1, 2, 3, 4, 5, 6, 7};
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform_below(i)]);
    const auto split = static_cast<std::ptrdiff_t>(rng.uniform_below(6) + 1);
    const std::vector<Label> left(perm.begin(), perm.begin() + split), right(perm.begin() + split, perm.end());
    const Forest f1 = Forest::from_edges(n, testing::random_forest_edges(n, left, 6, rng));
    const Forest f2 = Forest::from_edges(n, testing::random_forest_edges(n, right, 6, rng));
    const Forest both = f1.merged_with(f2);
    CHECK(forest_probability(n, both) == forest_probability(n, f1) * forest_probability(n, f2));
  }
}
