#include <doctest.h>

#include "imprec/errors.hpp"
#include "imprec/generators.hpp"
#include "imprec/imp.hpp"
#include "test_util.hpp"

using namespace imprec;
using testutil::pv;
using testutil::rat;
using testutil::rows;
using testutil::rvec;

namespace {

GradedMorphism branch_g() {
  return GradedMorphism(Grade::single("a1", 2), FinSetObj(1), FinSetObj(3),
                        rows(2, 3, {"1", "0", "0", "1", "0", "0"}));
}
GradedMorphism branch_h(const std::string& site) {
  return GradedMorphism(Grade::single(site, 2), FinSetObj(1), FinSetObj(3),
                        rows(2, 3, {"1", "0", "0", "0", "0", "1"}));
}

const StochMatrix kOneUrn = rows(2, 3, {"1", "0", "0", "1/2", "0", "1/2"});
const StochMatrix kTwoUrns =
    rows(4, 3, {"1", "1/2", "1/2", "0", "0", "0", "1/2", "1/2", "0", "1/2", "0", "1/2"});

}  // namespace

TEST_CASE("generators") {
  CHECK(bernoulli().matrix == rows(1, 2, {"1/2", "1/2"}));
  CHECK(bernoulli().grade.empty());

  const auto k = knight("a", 2);
  CHECK(k.matrix == StochMatrix::identity(FinSetObj(2)));
  CHECK(k.grade == Grade::single("a", 2));
  CHECK(knight("u", 5).matrix == StochMatrix::identity(FinSetObj(5)));
  CHECK_THROWS_AS(knight("u", 1), DomainError);

  CHECK(choose(pv({"1", "0", "0"})).matrix == rows(1, 3, {"1", "0", "0"}));
  CHECK(choose(pv({"1/3", "2/3"})).matrix == rows(1, 2, {"1/3", "2/3"}));
}

TEST_CASE("grade carriers and restriction") {
  const Grade g = Grade::of({{"b", 3}, {"a", 2}});
  CHECK(g.carrier() == 6);
  CHECK(g.sites().front().name == "a");  // sorted by name
  const Grade sub = Grade::single("b", 3);
  // index 5 = (a=1, b=2) restricts to b=2
  CHECK(g.restrict_index(sub, 5) == 2);
  CHECK(g.restrict_index(Grade{}, 5) == 0);
  CHECK_THROWS_AS(Grade::of({{"a", 2}, {"a", 3}}), NameClashError);
  CHECK_THROWS_AS(Grade::disjoint_union(Grade::single("a", 2), Grade::single("a", 2)),
                  NameClashError);
  CHECK(Grade::merge_union(Grade::single("a", 2), Grade::single("a", 2)) ==
        Grade::single("a", 2));
  CHECK_THROWS_AS(Grade::merge_union(Grade::single("a", 2), Grade::single("a", 3)),
                  NameClashError);
}

TEST_CASE("grade maps must be surjective; morphism shapes are validated") {
  const StochMatrix collapse(FinSetObj(2), FinSetObj(2),
                             {ProbVector::dirac(1, 2).entries(), ProbVector::dirac(1, 2).entries()});
  CHECK_THROWS_AS(GradeMap(Grade::single("a", 2), Grade::single("b", 2), collapse), DomainError);
  CHECK_THROWS_AS(GradeMap(Grade::single("a", 2), Grade{}, StochMatrix::identity(FinSetObj(2))),
                  ShapeError);
  // matrix width must be carrier * dom
  CHECK_THROWS_AS(GradedMorphism(Grade::single("a", 2), FinSetObj(2), FinSetObj(2),
                                 StochMatrix::identity(FinSetObj(2))),
                  ShapeError);
  // regrading with a map into a different grade is rejected
  const auto u = GradeMap::identity(Grade::single("b", 2));
  CHECK_THROWS_AS(regrade(knight("a", 2), u), GradeMismatchError);
}

TEST_CASE("regrade along the identity is the identity") {
  const auto g = branch_g();
  CHECK(regrade(g, GradeMap::identity(g.grade)) == g);
}

TEST_CASE("weakening duplicates column blocks") {
  const Grade both = Grade::of({{"a1", 2}, {"a2", 2}});
  const auto lifted = weaken_to(branch_g(), both);
  CHECK(lifted.grade == both);
  CHECK(lifted.matrix.dom_size() == 4);
  // assignments (a1,a2) in order (0,0),(0,1),(1,0),(1,1): a2 is ignored
  CHECK(lifted.column(0, 0) == branch_g().column(0, 0));
  CHECK(lifted.column(1, 0) == branch_g().column(0, 0));
  CHECK(lifted.column(2, 0) == branch_g().column(1, 0));
  CHECK(lifted.column(3, 0) == branch_g().column(1, 0));

  // a morphism at the empty grade lifts to constant blocks
  const auto lifted_coin = weaken_to(bernoulli(), Grade::single("a1", 2));
  CHECK(lifted_coin.matrix == rows(2, 2, {"1/2", "1/2", "1/2", "1/2"}));
}

TEST_CASE("one-urn pipeline composite") {
  const auto branches = gcoproduct(branch_g(), branch_h("a1"));
  const auto prog = gcompose(branches, bernoulli());
  CHECK(prog.grade == Grade::single("a1", 2));
  CHECK(prog.matrix == kOneUrn);
  // unit law
  CHECK(gcompose(g_identity(FinSetObj(3)), prog) == prog);
  CHECK(gcompose(prog, g_identity(FinSetObj(1))) == prog);
}

TEST_CASE("two-urn pipeline composite via lifted branches") {
  const Grade both = Grade::of({{"a1", 2}, {"a2", 2}});
  const auto branches = gcoproduct(weaken_to(branch_g(), both), weaken_to(branch_h("a2"), both));
  CHECK(branches.matrix.dom_size() == 8);
  const auto prog = gcompose(branches, bernoulli());
  CHECK(prog.grade == both);
  CHECK(prog.matrix == kTwoUrns);
}

TEST_CASE("gcompose rejects name reuse in sequence") {
  CHECK_THROWS_AS(gcompose(gcoproduct(branch_g(), branch_h("a1")), knight("a1")),
                  NameClashError);
}

TEST_CASE("gtensor basic shapes") {
  const auto f = branch_g();
  const auto unit_f = gtensor(g_identity(FinSetObj(1)), f);
  CHECK(unit_f.matrix == f.matrix);
  CHECK(unit_f.grade == f.grade);

  const auto pair_draws = gtensor(knight("a1"), knight("a2"));
  CHECK(pair_draws.grade == Grade::of({{"a1", 2}, {"a2", 2}}));
  CHECK(pair_draws.matrix == StochMatrix::identity(FinSetObj(4)));

  const auto two_coins = gtensor(bernoulli(), bernoulli());
  CHECK(two_coins.grade.empty());
  CHECK(two_coins.matrix == kron(bernoulli().matrix, bernoulli().matrix));
  CHECK(two_coins.column(0, 0) == rvec({"1/4", "1/4", "1/4", "1/4"}));
}

TEST_CASE("gcoproduct cases") {
  CHECK(gcoproduct(g_point(1, 2), g_point(2, 2)) == g_identity(FinSetObj(2)));
  CHECK_THROWS_AS(gcoproduct(branch_g(), branch_h("a2")), GradeMismatchError);

  const auto f = branch_g();
  const auto ff = gcoproduct(f, f);
  for (long long w = 0; w < 2; ++w) {
    CHECK(ff.column(w, 0) == f.column(w, 0));
    CHECK(ff.column(w, 1) == f.column(w, 0));
  }
}

TEST_CASE("flips and site permutations") {
  const auto k = knight("a", 2);
  const auto flipped = regrade(k, GradeMap::flip(k.grade, "a"));
  CHECK(flipped.matrix == rows(2, 2, {"0", "1", "1", "0"}));
  CHECK_THROWS_AS(GradeMap::flip(Grade::single("a", 3), "a"), DomainError);
  const auto cycled = regrade(knight("a", 3),
                              GradeMap::site_permutation(Grade::single("a", 3), "a", {1, 2, 0}));
  CHECK(cycled.column(0, 0) == rvec({"0", "1", "0"}));
}

TEST_CASE("rename-induced grade maps duplicate knight columns") {
  const Grade big = Grade::of({{"a", 2}, {"b", 2}});
  const auto u = GradeMap::rename_induced(big, Grade::single("a", 2), {{"a", "a"}});
  const auto lifted = regrade(knight("a", 2), u);
  CHECK(lifted.grade == big);
  CHECK(lifted.column(0, 0) == rvec({"1", "0"}));
  CHECK(lifted.column(1, 0) == rvec({"1", "0"}));
  CHECK(lifted.column(2, 0) == rvec({"0", "1"}));
  CHECK(lifted.column(3, 0) == rvec({"0", "1"}));
}

TEST_CASE("graded interchange on random morphisms") {
  Rng rng(37);
  for (int it = 0; it < 15; ++it) {
    const int x = 1 + rng.below(2), x1 = 1 + rng.below(2), x2 = 1 + rng.below(2);
    const int y = 1 + rng.below(2), y1 = 1 + rng.below(2), y2 = 1 + rng.below(2);
    const auto f = random_graded_morphism(rng, random_grade(rng, 3, "a"), x, x1);
    const auto h = random_graded_morphism(rng, random_grade(rng, 3, "b"), x1, x2);
    const auto g = random_graded_morphism(rng, random_grade(rng, 3, "c"), y, y1);
    const auto k = random_graded_morphism(rng, random_grade(rng, 3, "d"), y1, y2);
    CHECK(gcompose(gtensor(h, k), gtensor(f, g)) == gtensor(gcompose(h, f), gcompose(k, g)));
  }
}

TEST_CASE("discarding any output is the weakened discard") {
  Rng rng(41);
  for (int it = 0; it < 20; ++it) {
    const int dom = 1 + rng.below(3), cod = 1 + rng.below(3);
    const auto f = random_graded_morphism(rng, random_grade(rng, 4, "a"), dom, cod);
    CHECK(gcompose(g_bang(f.cod), f) == weaken_to(g_bang(f.dom), f.grade));
  }
}

TEST_CASE("independent draws commute on the nose") {
  Rng rng(43);
  for (int it = 0; it < 15; ++it) {
    const int x = 1 + rng.below(2), x1 = 1 + rng.below(2);
    const int y = 1 + rng.below(2), y1 = 1 + rng.below(2);
    const auto f = random_graded_morphism(rng, random_grade(rng, 4, "a"), x, x1);
    const auto g = random_graded_morphism(rng, random_grade(rng, 4, "b"), y, y1);
    const auto f_then_g =
        gcompose(gtensor(g_identity(FinSetObj(x1)), g), gtensor(f, g_identity(FinSetObj(y))));
    const auto g_then_f =
        gcompose(gtensor(f, g_identity(FinSetObj(y1))), gtensor(g_identity(FinSetObj(x)), g));
    CHECK(f_then_g == g_then_f);
    CHECK(f_then_g == gtensor(f, g));
  }
}

TEST_CASE("mix_pointwise") {
  const auto m = mix_pointwise(g_point(1, 2), g_point(2, 2), rat("1/2"));
  CHECK(m.matrix == rows(1, 2, {"1/2", "1/2"}));
  CHECK_THROWS_AS(mix_pointwise(knight("a"), knight("b"), rat("1/2")), GradeMismatchError);
}
