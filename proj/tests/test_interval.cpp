#include <random>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "zdst/interval.hpp"

using namespace zdst;

namespace {

Border b(double key, BorderKind kind, std::uint64_t id = 0) {
  return Border{key, kind, id};
}

}  // namespace

TEST_CASE("border order at equal keys follows the kind sequence") {
  // k) < [k < k] < (k
  CHECK(compare_borders(b(5.0, BorderKind::open_upper, 1),
                        b(5.0, BorderKind::closed_lower, 2)) ==
        std::strong_ordering::less);
  CHECK(compare_borders(b(5.0, BorderKind::closed_lower, 1),
                        b(5.0, BorderKind::closed_upper, 2)) ==
        std::strong_ordering::less);
  CHECK(compare_borders(b(5.0, BorderKind::closed_upper, 1),
                        b(5.0, BorderKind::open_lower, 2)) ==
        std::strong_ordering::less);
}

TEST_CASE("border order basics") {
  CHECK(compare_borders(b(3.0, BorderKind::closed_lower, 1),
                        b(3.0, BorderKind::closed_lower, 1)) ==
        std::strong_ordering::equal);
  // the key dominates the kind
  CHECK(compare_borders(b(2.0, BorderKind::open_lower, 1),
                        b(7.0, BorderKind::open_upper, 2)) ==
        std::strong_ordering::less);
  // segment id breaks full ties
  CHECK(compare_borders(b(3.0, BorderKind::closed_lower, 1),
                        b(3.0, BorderKind::closed_lower, 2)) ==
        std::strong_ordering::less);
}

TEST_CASE("border order is a total order on random borders") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> key(0, 5);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> id(0, 3);
  std::vector<Border> borders;
  for (int i = 0; i < 200; ++i)
    borders.push_back(b(static_cast<double>(key(rng)),
                        static_cast<BorderKind>(kind(rng)),
                        static_cast<std::uint64_t>(id(rng))));

  for (const Border& x : borders) {
    CHECK(compare_borders(x, x) == std::strong_ordering::equal);
    for (const Border& y : borders) {
      const auto xy = compare_borders(x, y);
      const auto yx = compare_borders(y, x);
      if (xy == std::strong_ordering::less) CHECK(yx == std::strong_ordering::greater);
      if (xy == std::strong_ordering::greater) CHECK(yx == std::strong_ordering::less);
      if (xy == std::strong_ordering::equal) CHECK(yx == std::strong_ordering::equal);
    }
  }
  // transitivity on sampled triples
  std::uniform_int_distribution<std::size_t> pick(0, borders.size() - 1);
  for (int i = 0; i < 5000; ++i) {
    const Border &x = borders[pick(rng)], &y = borders[pick(rng)],
                 &z = borders[pick(rng)];
    if (compare_borders(x, y) != std::strong_ordering::greater &&
        compare_borders(y, z) != std::strong_ordering::greater)
      CHECK(compare_borders(x, z) != std::strong_ordering::greater);
  }
}

TEST_CASE("query descent at the node key depends on the kind") {
  // a query for b passes right of "b)" and "[b" ...
  CHECK(query_descend(5.0, b(5.0, BorderKind::open_upper)) == Direction::right);
  CHECK(query_descend(5.0, b(5.0, BorderKind::closed_lower)) == Direction::right);
  // ... and left of "b]" and "(b"
  CHECK(query_descend(5.0, b(5.0, BorderKind::closed_upper)) == Direction::left);
  CHECK(query_descend(5.0, b(5.0, BorderKind::open_lower)) == Direction::left);
  // strict key comparisons are kind-independent
  for (int k = 0; k < 4; ++k) {
    CHECK(query_descend(4.0, b(5.0, static_cast<BorderKind>(k))) == Direction::left);
    CHECK(query_descend(6.0, b(5.0, static_cast<BorderKind>(k))) == Direction::right);
  }
}

TEST_CASE("stabbing_contains respects open and closed ends") {
  auto s1 = Segment::make(1, 2.0, BorderKind::closed_lower, 5.0,
                          BorderKind::open_upper, {1.0});
  CHECK(stabbing_contains(s1, 2.0));
  CHECK(stabbing_contains(s1, 3.0));
  CHECK_FALSE(stabbing_contains(s1, 5.0));
  auto s2 = Segment::make(2, 2.0, BorderKind::closed_lower, 5.0,
                          BorderKind::closed_upper, {1.0});
  CHECK(stabbing_contains(s2, 5.0));
  // [b,c] contains its own lower border value
  auto s3 = Segment::make(3, 1.0, BorderKind::closed_lower, 4.0,
                          BorderKind::closed_upper, {1.0});
  CHECK(stabbing_contains(s3, 1.0));
}

TEST_CASE("segment validation") {
  CHECK_NOTHROW(Segment::make(1, 2.0, BorderKind::closed_lower, 2.0,
                              BorderKind::closed_upper, {1.0}));  // [x,x]
  CHECK_THROWS_AS(Segment::make(1, 2.0, BorderKind::open_lower, 2.0,
                                BorderKind::open_upper, {1.0}),
                  std::invalid_argument);  // (x,x)
  CHECK_THROWS_AS(Segment::make(1, 2.0, BorderKind::closed_lower, 2.0,
                                BorderKind::open_upper, {1.0}),
                  std::invalid_argument);  // [x,x)
  CHECK_THROWS_AS(Segment::make(1, 2.0, BorderKind::open_lower, 2.0,
                                BorderKind::closed_upper, {1.0}),
                  std::invalid_argument);  // (x,x]
  CHECK_THROWS_AS(Segment::make(1, 5.0, BorderKind::closed_lower, 2.0,
                                BorderKind::closed_upper, {1.0}),
                  std::invalid_argument);  // inverted
  CHECK_THROWS_AS(Segment::make(1, std::nan(""), BorderKind::closed_lower, 2.0,
                                BorderKind::closed_upper, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Segment::make(1, 0.0, BorderKind::closed_lower,
                                std::numeric_limits<double>::infinity(),
                                BorderKind::closed_upper, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Segment::make(1, 1.0, BorderKind::open_upper, 2.0,
                                BorderKind::closed_upper, {1.0}),
                  std::invalid_argument);  // wrong kind side
}

TEST_CASE("descent and containment agree for every kind combination") {
  // contains(s, q) must hold exactly when q descends right at s.low and left
  // at s.high.
  const BorderKind lows[] = {BorderKind::closed_lower, BorderKind::open_lower};
  const BorderKind highs[] = {BorderKind::closed_upper, BorderKind::open_upper};
  for (BorderKind lo : lows) {
    for (BorderKind hi : highs) {
      auto s = Segment::make(9, 2.0, lo, 5.0, hi, {1.0});
      for (double q : {1.0, 2.0, 3.5, 5.0, 6.0}) {
        const bool via_descent =
            query_descend(q, s.low) == Direction::right &&
            query_descend(q, s.high) == Direction::left;
        CHECK(stabbing_contains(s, q) == via_descent);
        CHECK(stabbing_contains(s, q) == zdst::test::contains_via_cuts(s, q));
      }
      // degenerate equal-key segment, where legal
      if (lo == BorderKind::closed_lower && hi == BorderKind::closed_upper) {
        auto p = Segment::make(10, 3.0, lo, 3.0, hi, {1.0});
        for (double q : {2.0, 3.0, 4.0}) {
          const bool via_descent =
              query_descend(q, p.low) == Direction::right &&
              query_descend(q, p.high) == Direction::left;
          CHECK(stabbing_contains(p, q) == via_descent);
        }
      }
    }
  }
}

TEST_CASE("containment matches the cut arithmetic on random segments") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> key(0, 8);
  for (int i = 0; i < 2000; ++i) {
    double a = key(rng), c = key(rng);
    if (a > c) std::swap(a, c);
    BorderKind lo = (rng() & 1) ? BorderKind::closed_lower : BorderKind::open_lower;
    BorderKind hi = (rng() & 1) ? BorderKind::closed_upper : BorderKind::open_upper;
    if (a == c) {
      lo = BorderKind::closed_lower;
      hi = BorderKind::closed_upper;
    }
    const auto s = Segment::make(i, a, lo, c, hi, {1.0});
    for (double q : {a - 0.5, a, a + 0.25, (a + c) / 2, c - 0.25, c, c + 0.5})
      CHECK(stabbing_contains(s, q) == zdst::test::contains_via_cuts(s, q));
  }
}
