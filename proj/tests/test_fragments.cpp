#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "urlat/fragments.hpp"

using namespace urlat;
using testutil::el;

TEST_CASE("fragments are the coordinate selections") {
  std::vector<Element> f = fragments(el({"1", "0", "2"}));
  std::vector<Element> want{el({"0", "0", "0"}), el({"0", "0", "2"}), el({"1", "0", "0"}),
                            el({"1", "0", "2"})};
  std::sort(f.begin(), f.end());
  std::sort(want.begin(), want.end());
  CHECK(f == want);

  CHECK(fragments(el({"0", "0"})) == std::vector<Element>{el({"0", "0"})});

  std::vector<Element> atom = fragments(el({"5"}));
  std::sort(atom.begin(), atom.end());
  CHECK(atom == std::vector<Element>{el({"0"}), el({"5"})});
}

TEST_CASE("every fragment is disjoint from its complement") {
  Element x = el({"1", "-2", "1/2", "0", "3"});
  for (const Element& y : fragments(x)) {
    CHECK(is_disjoint(y, el_sub(x, y)));
    CHECK(el_leq(el_abs(y), el_abs(x)));
  }
  CHECK(fragments(x).size() == 16);
}

TEST_CASE("binary decompositions pair each fragment with its complement") {
  auto d2 = binary_decompositions(el({"2"}));
  REQUIRE(d2.size() == 2);
  for (const auto& [y, z] : d2) CHECK(el_add(y, z) == el({"2"}));

  CHECK(binary_decompositions(el({"1", "1"})).size() == 4);
  auto d0 = binary_decompositions(el({"0", "0", "0"}));
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].first == Element::zeros(3));
  CHECK(d0[0].second == Element::zeros(3));
}

TEST_CASE("partitions follow the set partitions of the support") {
  auto p12 = partitions(el({"1", "2"}));
  REQUIRE(p12.size() == 2);
  // one-block and two-block partitions, in refinement order
  CHECK(p12[0].blocks == std::vector<Element>{el({"1", "2"})});
  CHECK(p12[1].blocks == std::vector<Element>{el({"1", "0"}), el({"0", "2"})});

  CHECK(partitions(el({"3", "0", "0"})).size() == 1);
  CHECK(partitions(el({"1", "1", "1"})).size() == 5);

  auto p0 = partitions(Element::zeros(2));
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].blocks.empty());
}

TEST_CASE("partition blocks are nonzero, disjoint and sum to x") {
  Element x = el({"1", "0", "-2", "3", "1/2"});
  for (const Partition& p : partitions(x)) {
    Element sum = Element::zeros(x.dim());
    for (size_t a = 0; a < p.blocks.size(); ++a) {
      CHECK_FALSE(p.blocks[a].is_zero());
      for (size_t b = a + 1; b < p.blocks.size(); ++b) CHECK(is_disjoint(p.blocks[a], p.blocks[b]));
      sum = el_add(sum, p.blocks[a]);
    }
    CHECK(sum == x);
  }
}

TEST_CASE("refinement chains split one coordinate at a time") {
  Element x = el({"1", "2", "0", "4"});
  auto chain = refinement_chain(x);
  REQUIRE(chain.size() == 3);
  CHECK(chain.front().blocks == std::vector<Element>{x});
  CHECK(chain.back().blocks.size() == 3);
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    CHECK(refines(chain[i + 1], chain[i]));
    CHECK_FALSE(refines(chain[i], chain[i + 1]));
  }
  CHECK(refinement_chain(Element::zeros(2)).empty());
}

TEST_CASE("enumeration caps abort early") {
  EnumLimits tight;
  tight.fragment_cap = 2;
  tight.partition_cap = 2;
  Element x = el({"1", "2", "3"});
  CHECK_THROWS_AS(fragments(x, tight), CapExceeded);
  CHECK_THROWS_AS(binary_decompositions(x, tight), CapExceeded);
  CHECK_THROWS_AS(partitions(x, tight), CapExceeded);
  CHECK(fragments(el({"1", "2"}), tight).size() == 4);
}
