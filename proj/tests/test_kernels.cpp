#include <doctest.h>

#include <omp.h>

#include "treecross/geometry.hpp"
#include "treecross/kernels.hpp"

using namespace treecross;
using namespace treecross::kernels;

namespace {

Histogram trimmed(Histogram h) {
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

}  // namespace

TEST_CASE("parallel enumeration matches the serial reference") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const PointConfig convex = PointConfig::convex(n);
    CHECK(trimmed(crossing_histogram_parallel(convex, 4)) == trimmed(crossing_histogram_serial(convex)));
  }
  for (int n = 4; n <= 7; ++n) {
    const PointConfig coords = random_general_position(n, 100 + n, 200);
    CHECK(trimmed(crossing_histogram_parallel(coords, 3)) == trimmed(crossing_histogram_serial(coords)));
  }
}

TEST_CASE("shard histograms merge to the same total for any shard count") {
  const PointConfig c = PointConfig::convex(7);
  const CrossingTable table(c);
  const Histogram reference = trimmed(crossing_histogram_serial(c));
  for (std::uint64_t shards : {1, 2, 3, 5, 16}) {
    Histogram total;
    // merge in reverse order: addition must not care
    for (std::uint64_t s = shards; s-- > 0;) merge_histogram(total, crossing_histogram_shard(table, s, shards));
    CHECK(trimmed(total) == reference);
    CHECK(trimmed(crossing_histogram_parallel(c, shards)) == reference);
  }
}

TEST_CASE("multi-word crossing table") {
  // C(12,2) = 66 edges needs two words per row
  const PointConfig c = PointConfig::convex(12);
  const CrossingTable table(c);
  CHECK(table.words() == 2);
  Rng rng(3);
  std::vector<std::uint64_t> scratch(table.words());
  for (int i = 0; i < 200; ++i) {
    const LabeledTree t = sample_tree(12, rng);
    CHECK(table.count(t.edges(), scratch) == crossing_count(t, c).value);
  }
}

TEST_CASE("fast convex counter matches the pair scan") {
  Rng rng(11);
  for (int n : {2, 3, 4, 5, 9, 17, 64, 150}) {
    for (int i = 0; i < 30; ++i) {
      const LabeledTree t = sample_tree(n, rng);
      CHECK(convex_crossings_fast(n, t.edges()) == crossing_count(t, PointConfig::convex(n)).value);
    }
  }
}

TEST_CASE("side table matches the pair scan") {
  const PointConfig c = random_general_position(70, 8, 5000);
  const SideTable side(c);
  Rng rng(12);
  for (int i = 0; i < 30; ++i) {
    const LabeledTree t = sample_tree(70, rng);
    CHECK(side.count(t.edges()) == crossing_count(t, c).value);
  }
}

TEST_CASE("parallel sampling reproduces the serial reference draw for draw") {
  const std::uint64_t samples = 3 * kSampleChunk + 17;
  for (const PointConfig& c : {PointConfig::convex(25), random_general_position(25, 4, 300)}) {
    CHECK(sample_crossings_parallel(c, samples, 99) == sample_crossings_serial(c, samples, 99));
  }
  const PointConfig tiny = PointConfig::convex(3);
  CHECK(sample_crossings_parallel(tiny, 10, 1) == sample_crossings_serial(tiny, 10, 1));
}

TEST_CASE("sampling does not depend on the thread count") {
  const PointConfig c = PointConfig::convex(40);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = sample_crossings_parallel(c, 20000, 5);
  omp_set_num_threads(4);
  const auto four = sample_crossings_parallel(c, 20000, 5);
  omp_set_num_threads(saved);
  CHECK(one == four);
}

TEST_CASE("quadrilateral and segment-pair kernels agree with their references") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const PointConfig c = random_general_position(12 + static_cast<int>(seed), seed, 10000);
    const auto serial = convex_quadrilaterals_serial(c.points());
    CHECK(convex_quadrilaterals_parallel(c.points()) == serial);
    CHECK(crossing_segment_pairs_serial(c.points()) == serial);
    CHECK(crossing_segment_pairs_parallel(c.points()) == serial);
  }
}
