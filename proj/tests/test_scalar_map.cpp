#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "urlat/dominance.hpp"
#include "urlat/generators.hpp"

using namespace urlat;
using testutil::q;
using testutil::sm;
using testutil::sm_tailed;
using testutil::tail;

TEST_CASE("evaluation reads samples, tail points, and zero elsewhere") {
  ScalarMap f = sm({{"1", "5"}, {"-2", "3"}});
  CHECK(f.eval(q("1")) == 5);
  CHECK(f.eval(q("-2")) == 3);
  CHECK(f.eval(q("0")) == 0);
  CHECK(f.eval(q("7")) == 0);

  // value at the k-th tail point 1 + k is k
  ScalarMap g = sm_tailed({}, tail("1", "1", {"0", "1"}, "1"));
  CHECK(g.eval(q("7")) == 6);
  CHECK(g.eval(q("1")) == 0);
  CHECK(g.eval(q("3/2")) == 0);
  CHECK(g.eval(q("0")) == 0);

  ScalarMap h = sm_tailed({}, tail("1", "1/2", {"1", "1"}, "1/2"));
  // k = 4 at point 3: (1 + 4) * (1/2)^4
  CHECK(h.eval(q("3")) == q("5/16"));
}

TEST_CASE("construction normalizes degenerate shapes") {
  CHECK(sm({}).is_zero());
  CHECK(sm({{"1", "0"}}).is_zero());
  CHECK_FALSE(sm({{"1", "0"}, {"2", "3"}}).is_zero());

  // all-zero tail polynomial means no tail
  ScalarMap f = sm_tailed({}, tail("1", "1", {"0"}, "2"));
  CHECK(f.is_zero());
  CHECK_FALSE(f.tail());

  // ratio 0 collapses the tail to its first point
  ScalarMap g = sm_tailed({}, tail("2", "1", {"3"}, "0"));
  CHECK_FALSE(g.tail());
  CHECK(g.eval(q("2")) == 3);
  CHECK(g.eval(q("3")) == 0);

  // the tail lattice may not pass through 0
  CHECK_THROWS_AS(sm_tailed({}, tail("-2", "1", {"1"}, "1")), ParseError);
  CHECK_THROWS_AS(sm_tailed({}, tail("0", "1", {"1"}, "0")), ParseError);
  // negative-direction lattices never hit 0
  CHECK_NOTHROW(sm_tailed({}, tail("-1/2", "1", {"1"}, "1")));

  // sample points may not sit on the tail lattice
  CHECK_THROWS_AS(sm_tailed({{"3", "1"}}, tail("1", "1", {"1"}, "1")), ParseError);
  CHECK_NOTHROW(sm_tailed({{"3/2", "1"}}, tail("1", "1", {"1"}, "1")));

  CHECK_THROWS_AS(ScalarMap::from_points({{q("0"), q("1")}}), ParseError);
  ScalarMap z(std::map<Rat, Rat>{}, TailRule{q("1"), q("1"), {q("1")}, q("1")});
  CHECK(z.tail());
}

TEST_CASE("assemble folds colliding mass additively") {
  // a sample landing on the tail lattice folds into a materialized head
  ScalarMap f = ScalarMap::assemble({{q("2"), q("10")}}, tail("1", "1", {"0", "1"}, "1"));
  CHECK(f.eval(q("2")) == 11);  // tail value 1 plus folded 10
  CHECK(f.eval(q("3")) == 2);
  CHECK(f.eval(q("1")) == 0);

  // a sample past the fold point forces the whole head through it to materialize
  ScalarMap g = ScalarMap::assemble({{q("3"), q("1")}}, tail("1", "1", {"0", "1"}, "1"));
  CHECK(g.eval(q("1")) == 0);
  CHECK(g.eval(q("2")) == 1);
  CHECK(g.eval(q("3")) == 3);  // tail value 2 plus folded 1
  CHECK(g.eval(q("4")) == 3);  // shifted tail resumes
}

TEST_CASE("pointwise addition merges samples and aligned tails") {
  ScalarMap a = sm({{"1", "5"}});
  ScalarMap b = sm({{"1", "2"}, {"2", "1"}});
  ScalarMap c = sm_add(a, b);
  CHECK(c.eval(q("1")) == 7);
  CHECK(c.eval(q("2")) == 1);
  CHECK(c.samples().size() == 2);

  ScalarMap t1 = sm_tailed({}, tail("1", "1", {"0", "1"}, "1"));
  ScalarMap t2 = sm_tailed({}, tail("3", "1", {"2"}, "1"));
  ScalarMap s = sm_add(t1, t2);  // offset head folds into samples
  CHECK(s.eval(q("1")) == 0);
  CHECK(s.eval(q("2")) == 1);
  CHECK(s.eval(q("3")) == 4);
  CHECK(s.eval(q("10")) == 11);

  // cancellation of identical tails leaves a bounded map
  ScalarMap d = sm_sub(t1, t1);
  CHECK(d.is_zero());

  ScalarMap half = sm_tailed({}, tail("1", "1/2", {"1"}, "1"));
  CHECK_THROWS_AS(sm_add(t1, half), TailIncompatible);
  ScalarMap offgrid = sm_tailed({}, tail("4/3", "1", {"1"}, "1"));
  CHECK_THROWS_AS(sm_add(t1, offgrid), TailIncompatible);
  ScalarMap othr = sm_tailed({}, tail("1", "1", {"1"}, "2"));
  CHECK_THROWS_AS(sm_add(t1, othr), TailIncompatible);
}

TEST_CASE("scaling and negation act on samples and tail coefficients") {
  ScalarMap f = sm_tailed({{"-1", "4"}}, tail("1", "1", {"0", "1"}, "2"));
  ScalarMap g = sm_scale(f, q("-3/2"));
  CHECK(g.eval(q("-1")) == -6);
  CHECK(g.eval(q("2")) == q("-3"));  // k=1: 1*2 scaled by -3/2
  CHECK(sm_scale(f, q("0")).is_zero());
  CHECK(sm_scale(f, q("1")) == f);
}

TEST_CASE("modulus, min and max have exact closed forms") {
  CHECK(sm_abs(sm({{"1", "-3"}})) == sm({{"1", "3"}}));
  CHECK(sm_max(sm({{"1", "5"}}), sm({{"1", "2"}})) == sm({{"1", "5"}}));
  CHECK(sm_min(sm({{"1", "5"}}), sm({{"1", "2"}})) == sm({{"1", "2"}}));
  CHECK(sm_max(sm({{"1", "-5"}}), sm({})) == sm({}));
  CHECK(sm_min(sm({{"1", "-5"}, {"2", "7"}}), sm({})) == sm({{"1", "-5"}}));

  // sign-constant tails pass through the modulus
  ScalarMap neg = sm_tailed({}, tail("1", "1", {"-1", "-2"}, "3/2"));
  ScalarMap pos = sm_abs(neg);
  CHECK(pos.eval(q("2")) == q("9/2"));
  CHECK(pos.eval(q("1")) == 1);

  // sign-changing tails have no representable modulus
  ScalarMap wobble = sm_tailed({}, tail("1", "1", {"-3", "2"}, "1"));
  CHECK_THROWS_AS(sm_abs(wobble), TailIncompatible);
  CHECK_THROWS_AS(sm_max(wobble, sm({})), TailIncompatible);

  // min(f,g) + max(f,g) = f + g on a random pool
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    ScalarMap f = gen_sample_map(rng), g = gen_sample_map(rng);
    CHECK(sm_add(sm_min(f, g), sm_max(f, g)) == sm_add(f, g));
    CHECK(sm_abs(sm_abs(f)) == sm_abs(f));
    CHECK(sm_add(sm_max(f, sm({})), sm_scale(sm_max(sm_scale(f, q("-1")), sm({})), q("-1"))) == f);
  }
}

TEST_CASE("support queries and interval suprema") {
  ScalarMap f = sm({{"1", "5"}, {"-2", "3"}});
  CHECK(has_bounded_support(f));
  auto iv = support_interval(f);
  REQUIRE(iv);
  CHECK(iv->first == -2);
  CHECK(iv->second == 1);
  CHECK_FALSE(has_bounded_support(sm_tailed({}, tail("1", "1", {"1"}, "1"))));
  CHECK(has_bounded_support(sm({})));
  CHECK_FALSE(support_interval(sm({})));

  CHECK(sup_abs_on_interval(sm({{"1", "5"}, {"-2", "-7"}}), q("-3"), q("3")) == 7);
  CHECK(sup_abs_on_interval(sm({{"1", "5"}}), q("2"), q("3")) == 0);
  ScalarMap lin = sm_tailed({}, tail("1", "1", {"0", "1"}, "1"));
  CHECK(sup_abs_on_interval(lin, q("0"), q("5/2")) == 1);
  CHECK(sup_abs_on_interval(lin, q("0"), q("1000000")) == 999999);

  ScalarMap ind = indicator_of_support(f);
  CHECK(ind.eval(q("1")) == 1);
  CHECK(ind.eval(q("-2")) == 1);
  CHECK(ind.eval(q("3")) == 0);
  CHECK_THROWS_AS(indicator_of_support(lin), PreconditionError);
}

TEST_CASE("lattice overlap solves the congruence between tails") {
  TailRule base = tail("1", "1", {"1"}, "1");
  IndexOverlap full = lattice_overlap(base, base);
  CHECK(full.any);
  CHECK(full.mod == 1);

  IndexOverlap off = lattice_overlap(base, tail("4/3", "1", {"1"}, "1"));
  CHECK_FALSE(off.any);

  IndexOverlap half = lattice_overlap(base, tail("1", "2", {"1"}, "1"));
  CHECK(half.any);
  CHECK(half.mod == 2);
  CHECK(half.k0 == 0);

  IndexOverlap fine = lattice_overlap(base, tail("1", "1/2", {"1"}, "1"));
  CHECK(fine.any);
  CHECK(fine.mod == 1);
}

TEST_CASE("dominance certifies least constants and unbounded witnesses") {
  auto c_of = [](const DominanceResult& r) { return std::get<DominanceBounded>(r).c; };
  CHECK(c_of(dominance(sm({{"1", "5"}}), sm({{"1", "1"}}))) == 5);
  CHECK(c_of(dominance(sm({}), sm({{"1", "1"}}))) == 0);
  CHECK(c_of(dominance(sm({{"1", "-8"}, {"2", "1"}}), sm({{"1", "2"}, {"2", "1"}}))) == 4);

  // degree 1 over degree 0 on the same lattice is unbounded
  ScalarMap f = sm_tailed({}, tail("1", "1", {"0", "1"}, "1"));
  ScalarMap z = sm_tailed({}, tail("1", "1", {"1"}, "1"));
  DominanceResult r = dominance(f, z);
  auto* un = std::get_if<DominanceUnbounded>(&r);
  REQUIRE(un);
  for (unsigned long k = 1; k <= 5; ++k) {
    Rat p = un->witness(k);
    CHECK(rat_abs(f.eval(p)) > Rat(Int(k)) * z.eval(p));
  }

  // equal growth: least constant is the limit ratio when it exceeds the head
  ScalarMap f2 = sm_tailed({}, tail("1", "1", {"0", "3"}, "2"));
  ScalarMap z2 = sm_tailed({}, tail("1", "1", {"0", "1"}, "2"));
  CHECK(c_of(dominance(f2, z2)) == 3);

  // a sample point where z vanishes forces unboundedness
  DominanceResult bad = dominance(sm({{"5", "1"}}), sm({{"1", "1"}}));
  CHECK(std::get_if<DominanceUnbounded>(&bad));

  CHECK_THROWS_AS(dominance(sm({{"1", "1"}}), sm({{"1", "-1"}})), PreconditionError);
}

TEST_CASE("bounded support coincides with dominance over the own indicator") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    ScalarMap f = gen_sample_map(rng);
    if (f.is_zero()) continue;
    DominanceResult r = dominance(f, indicator_of_support(f));
    CHECK(std::get_if<DominanceBounded>(&r));
  }
  ScalarMap t = sm_tailed({}, tail("1", "1", {"1"}, "1"));
  ScalarMap ind = sm({{"1", "1"}});  // bounded stand-in: the tail escapes it
  DominanceResult esc = dominance(t, ind);
  CHECK(std::get_if<DominanceUnbounded>(&esc));
}

TEST_CASE("tail extrema over index ranges are exact") {
  // positive growing tail: max at the right end, min at the left
  ScalarMap f = sm_tailed({}, tail("1", "1", {"0", "1"}, "1"));
  CHECK(tail_abs_max_on_range(*f.tail(), 0, 10) == 10);
  CHECK(tail_abs_max_on_range(*f.tail(), 3, 1000000) == 1000000);

  // decaying tail: max at the left end
  ScalarMap g = sm_tailed({}, tail("1", "1", {"1"}, "1/2"));
  CHECK(tail_abs_max_on_range(*g.tail(), 2, 1000000) == q("1/4"));
}
