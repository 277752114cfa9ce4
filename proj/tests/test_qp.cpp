#include "doctest.h"
#include "skewqp/gen.hpp"
#include "skewqp/potential.hpp"

using namespace skewqp;

namespace {

// 3-cycle quiver: a: 2->1, b: 3->2, c: 1->3, plus a spare arrow d: 1->2.
Quiver triangle() {
  return Quiver({"1", "2", "3"},
                {Arrow{"a", 1, 0}, Arrow{"b", 2, 1}, Arrow{"c", 0, 2}, Arrow{"d", 0, 1}});
}

// Two vertices with a: x->y and parallel b, c: y->x; carries the length-4
// cycle (a, b, a, c) with a repeated arrow.
Quiver digon() {
  return Quiver({"x", "y"}, {Arrow{"a", 0, 1}, Arrow{"b", 1, 0}, Arrow{"c", 1, 0}});
}

}  // namespace

TEST_CASE("canonical cycles") {
  Quiver q = triangle();
  Path p1 = Path::of({q.arrow_id("b"), q.arrow_id("c"), q.arrow_id("a")});
  Cycle c1 = canonical_cycle(q, p1);
  CHECK(cycle_str(q, c1) == "a.b.c");
  Path p2 = Path::of({q.arrow_id("c"), q.arrow_id("a"), q.arrow_id("b")});
  CHECK(canonical_cycle(q, p2) == c1);
  CHECK(canonical_cycle(q, Path::of(c1.word())) == c1);  // idempotent

  Quiver loop({"v"}, {Arrow{"a", 0, 0}});
  Cycle cl = canonical_cycle(loop, Path::of({0, 0, 0}));
  CHECK(cycle_str(loop, cl) == "a.a.a");

  CHECK_THROWS_AS(canonical_cycle(q, Path::of({q.arrow_id("a")})), std::invalid_argument);
  CHECK_THROWS_AS(canonical_cycle(q, Path::of({q.arrow_id("a"), q.arrow_id("b")})),
                  std::invalid_argument);
  CHECK_THROWS_AS(canonical_cycle(q, Path::trivial(0)), std::invalid_argument);
}

TEST_CASE("cyclic derivative, single occurrence") {
  Quiver q = triangle();
  Potential w(3);
  w.add(q, Path::of({q.arrow_id("a"), q.arrow_id("b"), q.arrow_id("c")}), Cyclotomic::one(3));

  PathCombination da = cyclic_derivative(q, w, q.arrow_id("a"));
  REQUIRE(da.size() == 1);
  CHECK(path_str(q, da.terms().begin()->first) == "b.c");
  CHECK(da.terms().begin()->second.is_one());
  CHECK(da.is_relation(q));
  CHECK(path_tgt(q, da.terms().begin()->first) == q.src(q.arrow_id("a")));
  CHECK(path_src(q, da.terms().begin()->first) == q.tgt(q.arrow_id("a")));

  CHECK(cyclic_derivative(q, w, q.arrow_id("d")).is_zero());
  CHECK_THROWS_AS(cyclic_derivative(q, w, 99), std::invalid_argument);
}

TEST_CASE("cyclic derivative, repeated arrow") {
  Quiver q = digon();
  Potential w(1);
  w.add(q, Path::of({q.arrow_id("a"), q.arrow_id("b"), q.arrow_id("a"), q.arrow_id("c")}),
        Cyclotomic::one(1));
  PathCombination da = cyclic_derivative(q, w, q.arrow_id("a"));
  // The four rotations start twice with `a`; deleting it leaves b.a.c and c.a.b.
  PathCombination expected(1);
  expected.add(Path::of({q.arrow_id("b"), q.arrow_id("a"), q.arrow_id("c")}), Cyclotomic::one(1));
  expected.add(Path::of({q.arrow_id("c"), q.arrow_id("a"), q.arrow_id("b")}), Cyclotomic::one(1));
  CHECK(da == expected);
}

TEST_CASE("scaled derivative") {
  Quiver q = triangle();
  Potential w(3);
  w.add(q, Path::of({q.arrow_id("a"), q.arrow_id("b"), q.arrow_id("c")}), Cyclotomic::one(3));
  ArrowIdx a = q.arrow_id("a");

  CHECK(scaled_derivative(q, w, a, Cyclotomic::one(3)) == cyclic_derivative(q, w, a));

  PathCombination dz = scaled_derivative(q, w, a, Cyclotomic::zeta_pow(3, 1));
  PathCombination expected = cyclic_derivative(q, w, a);
  expected *= Cyclotomic::zeta_pow(3, 2);
  CHECK(dz == expected);

  PathCombination dm = scaled_derivative(q, w, a, -Cyclotomic::one(3));
  PathCombination neg = cyclic_derivative(q, w, a);
  neg *= -Cyclotomic::one(3);
  CHECK(dm == neg);

  CHECK_THROWS_AS(scaled_derivative(q, w, a, Cyclotomic::zero(3)), std::domain_error);
}

TEST_CASE("potential equality") {
  Quiver q = triangle();
  std::vector<ArrowIdx> abc = {q.arrow_id("a"), q.arrow_id("b"), q.arrow_id("c")};
  std::vector<ArrowIdx> cab = {q.arrow_id("c"), q.arrow_id("a"), q.arrow_id("b")};

  Potential w1(3), w2(3), w3(3);
  w1.add(q, Path::of(abc), Cyclotomic::one(3));
  w2.add(q, Path::of(cab), Cyclotomic::one(3));
  w3.add(q, Path::of(abc), Cyclotomic::zeta_pow(3, 1));
  CHECK(potential_equal(w1, w2));
  CHECK(!potential_equal(w1, w3));

  Potential w4 = w1;
  w4.add(q, Path::of(cab), Cyclotomic::zero(3));  // zero terms are dropped
  CHECK(potential_equal(w1, w4));

  Potential sum = w1;
  sum.add(q, Path::of(cab), -Cyclotomic::one(3));  // cancels to zero
  CHECK(sum.is_zero());

  CHECK_THROWS_AS(w1.add(q, Path::of({q.arrow_id("a"), q.arrow_id("d")}), Cyclotomic::one(3)),
                  std::invalid_argument);
}

TEST_CASE("jacobian relations") {
  Quiver q = triangle();
  Potential w(1);
  w.add(q, Path::of({q.arrow_id("a"), q.arrow_id("b"), q.arrow_id("c")}), Cyclotomic::one(1));
  auto rels = jacobian_relations(q, w);
  REQUIRE(rels.size() == 3);
  CHECK(q.arrow(rels[0].first).name == "a");
  CHECK(path_str(q, rels[0].second.terms().begin()->first) == "b.c");
  CHECK(q.arrow(rels[1].first).name == "b");
  CHECK(path_str(q, rels[1].second.terms().begin()->first) == "c.a");
  CHECK(q.arrow(rels[2].first).name == "c");
  CHECK(path_str(q, rels[2].second.terms().begin()->first) == "a.b");

  Potential empty(1);
  CHECK(jacobian_relations(q, empty).empty());

  // Every arrow of the s=4 triangular QP occurs in the potential.
  ExampleBundle bundle = gen_type_a(4);
  auto all = jacobian_relations(bundle.quiver, bundle.potential);
  CHECK(bundle.quiver.num_arrows() == 18);
  CHECK(all.size() == 18);
  for (const auto& [arrow, rel] : all) CHECK(rel.is_relation(bundle.quiver));
}

TEST_CASE("derivative is linear and counts occurrences") {
  Quiver q = triangle();
  std::vector<ArrowIdx> abc = {q.arrow_id("a"), q.arrow_id("b"), q.arrow_id("c")};
  Potential w1(3), w2(3);
  w1.add(q, Path::of(abc), Cyclotomic::zeta_pow(3, 1));
  w2.add(q, Path::of(abc), Cyclotomic(3, Rational(2, 5)));

  Potential sum(3);
  sum.add(q, Path::of(abc), Cyclotomic::zeta_pow(3, 1) + Cyclotomic(3, Rational(2, 5)));
  for (const char* name : {"a", "b", "c"}) {
    ArrowIdx a = q.arrow_id(name);
    PathCombination lhs = cyclic_derivative(q, sum, a);
    PathCombination rhs = cyclic_derivative(q, w1, a);
    rhs += cyclic_derivative(q, w2, a);
    CHECK(lhs == rhs);
  }

  // For a cycle with pairwise distinct arrows the term counts add up to the
  // cycle length.
  Potential w(1);
  w.add(q, Path::of(abc), Cyclotomic::one(1));
  size_t total = 0;
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) total += cyclic_derivative(q, w, a).size();
  CHECK(total == 3);
}
