#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "urlat/extension.hpp"

using namespace urlat;
using testutil::el;
using testutil::q;
using testutil::sm;

namespace {

PartialOperator worked_table() {
  Element w = el({"1", "2", "0"});
  std::map<Element, Element> table;
  table[el({"0", "0", "0"})] = el({"0"});
  table[el({"1", "0", "0"})] = el({"1"});
  table[el({"0", "2", "0"})] = el({"2"});
  table[el({"1", "2", "0"})] = el({"3"});
  return PartialOperator(LateralIdeal::fragments_of(w), table, 1);
}

}  // namespace

TEST_CASE("fragment ideals decide membership coordinatewise") {
  LateralIdeal d = LateralIdeal::fragments_of(el({"1", "2", "0"}));
  CHECK(d.contains(el({"1", "0", "0"})));
  CHECK_FALSE(d.contains(el({"1", "1", "0"})));
  CHECK(d.contains(el({"0", "0", "0"})));
  CHECK_FALSE(d.contains(el({"1", "2", "5"})));
  auto mem = d.members();
  REQUIRE(mem);
  CHECK(mem->size() == 4);
}

TEST_CASE("order ideals are support conditions closed under scaling") {
  LateralIdeal d = LateralIdeal::order_ideal({el({"1", "0", "2"})});
  CHECK(d.contains(el({"100", "0", "-3"})));
  CHECK(d.contains(el({"0", "0", "0"})));
  CHECK_FALSE(d.contains(el({"0", "1", "0"})));
  CHECK_FALSE(d.members());  // not enumerable: infinitely many members
}

TEST_CASE("disjoint unions combine parts and keep the axioms") {
  LateralIdeal d = LateralIdeal::disjoint_union(
      {LateralIdeal::fragments_of(el({"1", "0", "0"})), LateralIdeal::fragments_of(el({"0", "2", "0"}))});
  CHECK(d.contains(el({"1", "2", "0"})));
  CHECK(d.contains(el({"0", "2", "0"})));
  CHECK_FALSE(d.contains(el({"1", "1", "0"})));

  auto mem = d.members();
  REQUIRE(mem);
  std::vector<Element> got = *mem;
  std::sort(got.begin(), got.end());
  std::vector<Element> want = fragments(el({"1", "2", "0"}));
  std::sort(want.begin(), want.end());
  CHECK(got == want);

  for (const Element& x : *mem) {
    for (const Element& y : fragments(x)) CHECK(d.contains(y));
    for (const Element& y : *mem)
      if (is_disjoint(x, y)) CHECK(d.contains(el_add(x, y)));
  }

  CHECK_THROWS_AS(LateralIdeal::disjoint_union({LateralIdeal::fragments_of(el({"1", "0"})),
                                                LateralIdeal::fragments_of(el({"2", "0"}))}),
                  PreconditionError);

  LateralIdeal single = LateralIdeal::disjoint_union({LateralIdeal::fragments_of(el({"3", "0"}))});
  CHECK(single.contains(el({"3", "0"})));
  CHECK_FALSE(single.contains(el({"0", "1"})));
}

TEST_CASE("partial operators validate their tables") {
  CHECK_NOTHROW(worked_table());

  // 0 must map to 0
  std::map<Element, Element> bad0;
  bad0[el({"0", "0"})] = el({"1"});
  bad0[el({"5", "0"})] = el({"1"});
  CHECK_THROWS_AS(PartialOperator(LateralIdeal::fragments_of(el({"5", "0"})), bad0, 1),
                  PreconditionError);

  // orthogonal additivity across disjoint members is enforced
  std::map<Element, Element> skew;
  skew[el({"0", "0"})] = el({"0"});
  skew[el({"1", "0"})] = el({"1"});
  skew[el({"0", "2"})] = el({"2"});
  skew[el({"1", "2"})] = el({"4"});
  CHECK_THROWS_AS(PartialOperator(LateralIdeal::fragments_of(el({"1", "2"})), skew, 1),
                  PreconditionError);

  // negative values break positivity
  std::map<Element, Element> neg;
  neg[el({"1", "0"})] = el({"-1"});
  CHECK_THROWS_AS(PartialOperator(LateralIdeal::fragments_of(el({"1", "0"})), neg, 1),
                  PreconditionError);

  // keys must belong to the domain
  std::map<Element, Element> stray;
  stray[el({"7", "0"})] = el({"1"});
  CHECK_THROWS_AS(PartialOperator(LateralIdeal::fragments_of(el({"1", "0"})), stray, 1),
                  PreconditionError);
}

TEST_CASE("minimal extension takes the fragment supremum over the domain") {
  PartialOperator part = worked_table();
  CHECK(minimal_extension_at(part, el({"1", "2", "5"})) == el({"3"}));
  CHECK(minimal_extension_at(part, el({"1", "3", "0"})) == el({"1"}));
  CHECK(minimal_extension_at(part, el({"7", "8", "9"})) == el({"0"}));
  // agreement on the whole domain
  auto mem = part.domain().members();
  REQUIRE(mem);
  for (const Element& y : *mem) CHECK(minimal_extension_at(part, y) == part.value_at(y));
  // monotone along fragment inclusion
  Element x = el({"1", "2", "9"});
  for (const Element& y : fragments(x))
    CHECK(el_leq(minimal_extension_at(part, y), minimal_extension_at(part, x)));
}

TEST_CASE("minimality holds against explicit extensions and flags impostors") {
  PartialOperator part = worked_table();
  // matrix extension matching the table, plus mass off the domain points
  UrysonOperator r(3, 1);
  r.set_entry(1, 1, sm({{"1", "1"}, {"4", "9"}}));
  r.set_entry(1, 2, sm({{"2", "2"}, {"3", "5"}}));
  r.set_entry(1, 3, sm({{"1", "7"}}));
  std::vector<Element> probes{el({"1", "2", "5"}), el({"1", "3", "0"}), el({"4", "0", "1"}),
                              el({"0", "0", "0"})};
  CHECK(check_minimality(part, r, probes));

  // disagreeing on a member is not an extension
  UrysonOperator bad = r;
  bad.set_entry(1, 1, sm({{"1", "1/2"}}));
  CHECK_THROWS_AS(check_minimality(part, bad, probes), PreconditionError);
}

TEST_CASE("band projection of a positive functional stabilizes the epsilon limit") {
  UrysonOperator phi(2, 1), t(2, 1);
  phi.set_entry(1, 1, sm({{"1", "1"}}));
  t.set_entry(1, 1, sm({{"1", "4"}}));
  t.set_entry(1, 2, sm({{"1", "6"}}));
  Element x = el({"1", "1"});
  CHECK(pi_band_projection_at(phi, t, x) == 4);

  // atoms: kept when charged, killed when not
  CHECK(pi_band_projection_at(phi, t, el({"1", "0"})) == 4);
  CHECK(pi_band_projection_at(phi, t, el({"0", "1"})) == 0);

  // projection is squeezed between 0 and T
  CHECK(pi_band_projection_at(phi, t, x) <= t.apply(x).coords[0]);
  CHECK(pi_band_projection_at(phi, t, x) >= 0);

  UrysonOperator negphi(2, 1);
  negphi.set_entry(1, 1, sm({{"1", "-1"}}));
  CHECK_THROWS_AS(pi_band_projection_at(negphi, t, x), PreconditionError);
}
