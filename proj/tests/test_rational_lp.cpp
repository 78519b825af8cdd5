#include <doctest.h>

#include "imprec/errors.hpp"
#include "imprec/generators.hpp"
#include "imprec/linear.hpp"
#include "test_util.hpp"

using namespace imprec;
using testutil::rat;
using testutil::rvec;

namespace {

// Brute-force membership oracle: scan convex coefficients with all
// denominators up to max_denom. Sound for positives; used to cross-check
// the solver on small instances.
bool grid_member(const RatVector& point, const std::vector<RatVector>& gens, int max_denom) {
  const int k = static_cast<int>(gens.size());
  std::vector<int> counts(static_cast<std::size_t>(k), 0);
  for (int denom = 1; denom <= max_denom; ++denom) {
    // enumerate all ways to split denom into k nonnegative parts
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int left) -> bool {
      if (pos == k - 1) {
        parts[static_cast<std::size_t>(pos)] = left;
        RatVector acc(point.size(), Rational(0));
        for (int i = 0; i < k; ++i)
          acc = vec_add(acc, vec_scale(Rational(parts[static_cast<std::size_t>(i)], denom),
                                       gens[static_cast<std::size_t>(i)]));
        return acc == point;
      }
      for (int take = 0; take <= left; ++take) {
        parts[static_cast<std::size_t>(pos)] = take;
        if (self(self, pos + 1, left - take)) return true;
      }
      return false;
    };
    if (rec(rec, 0, denom)) return true;
  }
  return false;
}

bool satisfies(const FeasibilityProblem& p, const RatVector& x) {
  if (x.size() != p.vars) return false;
  for (const auto& v : x)
    if (v < 0) return false;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < p.vars; ++j) acc += p.rows[i][j] * x[j];
    if (acc != p.rhs[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("solve_feasible: identity case") {
  FeasibilityProblem p({rvec({"1"})}, rvec({"1"}));
  auto x = solve_feasible(p);
  REQUIRE(x.has_value());
  CHECK(*x == rvec({"1"}));
}

TEST_CASE("solve_feasible: symmetry forces the midpoint") {
  FeasibilityProblem p({rvec({"1", "1"}), rvec({"1", "-1"})}, rvec({"1", "0"}));
  auto x = solve_feasible(p);
  REQUIRE(x.has_value());
  CHECK(*x == rvec({"1/2", "1/2"}));
}

TEST_CASE("solve_feasible: convex combination coefficients, checked by substitution") {
  // (1/4,1/2,1/4) over the generators (1/2,1/2,0) and (0,1/2,1/2); the
  // coefficient system pins lambda = (1/2,1/2).
  FeasibilityProblem p(
      {rvec({"1/2", "0"}), rvec({"1/2", "1/2"}), rvec({"0", "1/2"}), rvec({"1", "1"})},
      rvec({"1/4", "1/2", "1/4", "1"}));
  auto x = solve_feasible(p);
  REQUIRE(x.has_value());
  CHECK(satisfies(p, *x));
  CHECK(*x == rvec({"1/2", "1/2"}));
}

TEST_CASE("solve_feasible: infeasible system") {
  FeasibilityProblem p({rvec({"1", "1"}), rvec({"1", "1"})}, rvec({"1", "2"}));
  CHECK_FALSE(solve_feasible(p).has_value());
}

TEST_CASE("solve_feasible rejects ragged input") {
  CHECK_THROWS_AS(FeasibilityProblem({rvec({"1", "0"}), rvec({"1"})}, rvec({"1", "1"})),
                  ShapeError);
}

TEST_CASE("in_convex_hull: point cases") {
  CHECK(in_convex_hull(rvec({"1"}), {rvec({"1"})}));
  CHECK(in_convex_hull(rvec({"1/2", "1/2"}), {rvec({"1", "0"}), rvec({"0", "1"})}));
}

TEST_CASE("in_convex_hull: (0,1/2,1/2) misses the three-generator hull") {
  // First coordinate forces lambda_1 = lambda_2 = lambda_3 = 0 because all
  // generators have positive mass there; weights cannot sum to 1.
  const std::vector<RatVector> gens{rvec({"1", "0", "0"}), rvec({"1/2", "1/2", "0"}),
                                    rvec({"1/2", "0", "1/2"})};
  const RatVector point = rvec({"0", "1/2", "1/2"});
  CHECK_FALSE(in_convex_hull(point, gens));
  CHECK_FALSE(grid_member(point, gens, 8));
}

TEST_CASE("in_convex_hull agrees with the grid oracle on random small instances") {
  Rng rng(7);
  for (int it = 0; it < 40; ++it) {
    const int dim = 2 + rng.below(2);
    const int k = 1 + rng.below(3);
    std::vector<RatVector> gens;
    for (int i = 0; i < k; ++i) gens.push_back(random_prob_vector(rng, dim).entries());
    const RatVector point = random_prob_vector(rng, dim).entries();
    if (grid_member(point, gens, 6)) CHECK(in_convex_hull(point, gens));
  }
}

TEST_CASE("in_convex_hull errors") {
  CHECK_THROWS_AS(in_convex_hull(rvec({"1"}), {}), DomainError);
  CHECK_THROWS_AS(in_convex_hull(rvec({"1"}), {rvec({"1", "0"})}), ShapeError);
}

TEST_CASE("in_convex_hull properties on random instances") {
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    const int dim = 2 + rng.below(3);
    const int k = 1 + rng.below(4);
    std::vector<RatVector> gens;
    for (int i = 0; i < k; ++i) gens.push_back(random_prob_vector(rng, dim).entries());
    for (const auto& g : gens) CHECK(in_convex_hull(g, gens));
    // permutation invariance
    std::vector<RatVector> shuffled(gens.rbegin(), gens.rend());
    const RatVector probe = random_prob_vector(rng, dim).entries();
    CHECK(in_convex_hull(probe, gens) == in_convex_hull(probe, shuffled));
  }
}

TEST_CASE("solve_feasible finds constructed-feasible systems") {
  Rng rng(19);
  for (int it = 0; it < 60; ++it) {
    const int vars = 1 + rng.below(4);
    const int cons = 1 + rng.below(4);
    RatVector witness;
    for (int j = 0; j < vars; ++j) witness.push_back(Rational(rng.below(5), 1 + rng.below(3)));
    std::vector<RatVector> rows;
    RatVector rhs;
    for (int i = 0; i < cons; ++i) {
      RatVector row;
      Rational b = 0;
      for (int j = 0; j < vars; ++j) {
        row.push_back(Rational(rng.below(9) - 4, 1 + rng.below(2)));
        b += row.back() * witness[static_cast<std::size_t>(j)];
      }
      rows.push_back(std::move(row));
      rhs.push_back(b);
    }
    FeasibilityProblem p(rows, rhs);
    auto x = solve_feasible(p);
    REQUIRE(x.has_value());
    CHECK(satisfies(p, *x));
  }
}

TEST_CASE("solve_feasible result always satisfies the system") {
  Rng rng(13);
  for (int it = 0; it < 60; ++it) {
    const int vars = 1 + rng.below(4);
    const int cons = 1 + rng.below(3);
    std::vector<RatVector> rows;
    for (int i = 0; i < cons; ++i) {
      RatVector row;
      for (int j = 0; j < vars; ++j) row.push_back(Rational(rng.below(7) - 3));
      rows.push_back(std::move(row));
    }
    RatVector rhs;
    for (int i = 0; i < cons; ++i) rhs.push_back(Rational(rng.below(5) - 2));
    FeasibilityProblem p(rows, rhs);
    if (auto x = solve_feasible(p)) CHECK(satisfies(p, *x));
  }
}

TEST_CASE("extreme_points_of: survivors minimal, hull preserved, idempotent") {
  Rng rng(17);
  for (int it = 0; it < 25; ++it) {
    const int dim = 2 + rng.below(3);
    const int k = 1 + rng.below(6);
    std::vector<RatVector> pts;
    for (int i = 0; i < k; ++i) pts.push_back(random_prob_vector(rng, dim).entries());
    const auto ext = extreme_points_of(pts);
    for (const auto& p : pts) CHECK(in_convex_hull(p, ext));
    for (std::size_t i = 0; i < ext.size(); ++i) {
      if (ext.size() == 1) break;
      std::vector<RatVector> others;
      for (std::size_t j = 0; j < ext.size(); ++j)
        if (j != i) others.push_back(ext[j]);
      CHECK_FALSE(in_convex_hull(ext[i], others));
    }
    CHECK(extreme_points_of(ext) == ext);
  }
}

TEST_CASE("rational formatting") {
  CHECK(to_string(rat("2/4")) == "1/2");
  CHECK(to_string(rat("3")) == "3");
  CHECK(to_string(rat("-6/4")) == "-3/2");
  CHECK(format_fixed(rat("1/2"), 6) == "0.500000");
  CHECK(format_fixed(rat("1/3"), 6) == "0.333333");
  CHECK(format_fixed(rat("2/3"), 6) == "0.666667");
  CHECK(format_fixed(rat("866025/1000000"), 6) == "0.866025");
  CHECK(format_fixed(rat("-1/8"), 2) == "-0.13");
  CHECK(format_fixed(rat("5"), 0) == "5");
  CHECK_THROWS_AS(rat("1/0"), DomainError);
  CHECK_THROWS_AS(rat("abc"), DomainError);
}
