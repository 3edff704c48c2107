#include <doctest.h>

#include "socle/partition.hpp"

using namespace socle;

TEST_CASE("partition basics") {
  const Partition b{5, 3, 2};
  CHECK(b.weight() == 10);
  CHECK(b[1] == 5);
  CHECK(b[4] == 0);
  CHECK(transpose(b) == Partition{3, 3, 2, 1, 1});
  CHECK(transpose(transpose(b)) == b);
  CHECK(Partition{3, 0, 0} == Partition{3});
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK(Partition::from_unsorted({0, 2, 3}) == Partition{3, 2});
}

TEST_CASE("containment and skew boxes") {
  CHECK(contains({5, 3, 2}, {3, 1}));
  CHECK_FALSE(contains({3, 1}, {5}));
  const auto boxes = skew_boxes({5, 3, 2}, {3, 1});
  CHECK(boxes.size() == 6);
  CHECK(boxes.front() == Box{1, 3});
  CHECK(boxes.back() == Box{5, 1});
  CHECK(std::is_sorted(boxes.begin(), boxes.end()));
  CHECK_THROWS_AS(skew_boxes({3}, {4}), NotContained);
  CHECK(is_horizontal_strip({5, 3, 2}, {4, 2, 1}));
  CHECK_FALSE(is_horizontal_strip({5, 3, 2}, {3, 3, 2}));
}

TEST_CASE("partition enumeration matches the partition numbers") {
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == counts[n]);
  // number of subpartitions of a rectangle a^b is binom(a+b, a)
  CHECK(subpartitions({3, 3}).size() == 10);
  CHECK(subpartitions({2, 2, 2}).size() == 10);
  for (const auto& mu : subpartitions({5, 3, 2})) CHECK(contains({5, 3, 2}, mu));
}

TEST_CASE("parsing partitions and shapes") {
  CHECK(parse_partition("532") == Partition{5, 3, 2});
  CHECK(parse_partition("10,3") == Partition{10, 3});
  CHECK(parse_partition("()").empty());
  CHECK(parse_partition("").empty());
  CHECK_THROWS_AS(parse_partition("3,x"), ParseError);
  CHECK_THROWS_AS(parse_partition("23"), ParseError);
  const ShapeTriple s = parse_shape("42/532/31");
  CHECK(s.alpha == Partition{4, 2});
  CHECK(s.valid());
  CHECK(s.to_string() == "4,2/5,3,2/3,1");
  CHECK_THROWS_AS(parse_shape("42/532"), ParseError);
  CHECK_FALSE(parse_shape("4/532/31").valid());
}
