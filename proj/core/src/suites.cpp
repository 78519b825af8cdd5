#include "imprec/suites.hpp"

#include <algorithm>

#include "imprec/bridge.hpp"
#include "imprec/errors.hpp"

namespace imprec {

bool LawSuiteReport::all_passed() const {
  if (laws.empty()) return false;
  for (const auto& [name, counts] : laws)
    if (!counts.all_passed()) return false;
  return true;
}

LawSuiteReport run_law_suite(std::uint64_t seed, int count) {
  LawSuiteReport report;
  report.seed = seed;
  report.count = count;
  Rng rng(seed);
  auto record = [&report](const std::string& law, bool ok) {
    auto& c = report.laws[law];
    (ok ? c.pass : c.fail) += 1;
  };
  for (int i = 0; i < count; ++i) {
    const Context ctx = random_context(rng);
    const int size_a = 2 + rng.below(2);
    const int size_b = 2 + rng.below(2);
    const int size_c = 2 + rng.below(2);
    const Type type_a = size_a == 2 ? Type::boolean() : Type::fin(size_a);
    const Type type_b = size_b == 2 ? Type::boolean() : Type::fin(size_b);

    {
      NamePool pool("k", 3);
      Context with_x = ctx;
      with_x.emplace_back("x", type_a);
      Context with_y = ctx;
      with_y.emplace_back("y", type_b);
      const TermPtr t = random_term(rng, ctx, size_a, 2, pool);
      const TermPtr u = random_term(rng, with_x, size_b, 1, pool);
      const TermPtr v = random_term(rng, with_y, size_c, 1, pool);
      record("associativity", check_associativity(ctx, t, u, v));
    }
    {
      NamePool pool("k", 3);
      Context with_xy = ctx;
      with_xy.emplace_back("x", type_a);
      with_xy.emplace_back("y", type_b);
      const TermPtr t = random_term(rng, ctx, size_a, 2, pool);
      const TermPtr u = random_term(rng, ctx, size_b, 1, pool);
      const TermPtr v = random_term(rng, with_xy, size_c, 1, pool);
      record("commutativity", check_commutativity(ctx, t, u, v));
    }
    {
      NamePool pool("k", 3);
      const TermPtr t = random_term(rng, ctx, size_a, 2, pool);
      const TermPtr u = random_term(rng, ctx, size_c, 2, pool);
      record("weakening", check_weakening(ctx, t, u));
    }
    {
      NamePool pool("k", 3);
      Context with_x = ctx;
      with_x.emplace_back("x", type_a);
      const TermPtr b = random_term(rng, ctx, 2, 1, pool);
      const TermPtr t = random_term(rng, ctx, size_a, 1, pool);
      const TermPtr u = random_term(rng, with_x, size_c, 1, pool);
      const TermPtr v = random_term(rng, with_x, size_c, 1, pool);
      record("hoisting", check_hoisting(ctx, b, t, u, v));
    }
  }
  return report;
}

namespace {

/// image(star) == rhs, decided by mutual hull inclusion over the raw
/// columns of star. Avoids enumerating the vertices of the large column
/// set, which equality via canonical forms would require.
bool decoupled_image_matches(const GradedMorphism& star, const CredalSet& rhs) {
  std::vector<RatVector> columns;
  columns.reserve(static_cast<std::size_t>(star.carrier()));
  for (long long w = 0; w < star.carrier(); ++w) columns.push_back(star.column(w, 0));
  std::sort(columns.begin(), columns.end(), lex_less);
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

  std::vector<RatVector> rhs_gens;
  rhs_gens.reserve(rhs.extremes().size());
  for (const auto& e : rhs.extremes()) rhs_gens.push_back(e.entries());

  for (const auto& c : columns)
    if (!in_convex_hull(c, rhs_gens)) return false;
  for (const auto& e : rhs_gens)
    if (!in_convex_hull(e, columns)) return false;
  return true;
}

}  // namespace

OplaxSuiteReport run_oplax_suite(std::uint64_t seed, int count) {
  OplaxSuiteReport report;
  report.seed = seed;
  report.count = count;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int mid = 1 + rng.below(4);
    const int out = 1 + rng.below(4);
    const Grade gf = random_grade(rng, 4, "a");
    const Grade gg = random_grade(rng, 4, "b");
    const GradedMorphism f = random_graded_morphism(rng, gf, 1, mid);
    const GradedMorphism g = random_graded_morphism(rng, gg, mid, out);
    bool included = true;
    try {
      const OplaxReport cmp = oplax_compare(g, f);
      if (cmp.strict) ++report.strict;
      const bool same = decoupled_image_matches(decoupled_compose(g, f), cmp.rhs.images.front());
      (same ? report.decoupled_image.pass : report.decoupled_image.fail) += 1;
    } catch (const InvariantViolation&) {
      included = false;
      report.decoupled_image.fail += 1;
    }
    (included ? report.inclusion.pass : report.inclusion.fail) += 1;
  }
  return report;
}

KanSuiteReport run_kan_suite(std::uint64_t seed, int count) {
  KanSuiteReport report;
  report.seed = seed;
  report.count = count;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int m = 1 + rng.below(5);
    const int n = 1 + rng.below(4);
    const StochMatrix f = random_stoch_matrix(rng, m, n);

    // A second presentation of the same set: shuffle the columns and pad
    // with convex combinations of them.
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) order[static_cast<std::size_t>(j)] = j;
    for (int j = m - 1; j > 0; --j)
      std::swap(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(rng.below(j + 1))]);
    std::vector<RatVector> cols;
    for (int j = 0; j < m; ++j) cols.push_back(f.column(order[static_cast<std::size_t>(j)]));
    const int extra = rng.below(3);
    for (int e = 0; e < extra; ++e) {
      const auto weights = random_prob_vector(rng, m).entries();
      RatVector mixcol(static_cast<std::size_t>(n), Rational(0));
      for (int j = 0; j < m; ++j)
        mixcol = vec_add(mixcol, vec_scale(weights[static_cast<std::size_t>(j)], f.column(j)));
      cols.push_back(std::move(mixcol));
    }
    const StochMatrix f2(FinSetObj(static_cast<int>(cols.size())), f.cod(), cols);

    bool ok = true;
    try {
      const ExtremeFactorization w = factor_through_extremes(f, f2);
      ok = compose(w.vertices, w.to_vertices_left) == f &&
           compose(w.vertices, w.to_vertices_right) == f2 &&
           is_surjective(w.to_vertices_left) && is_surjective(w.to_vertices_right);
    } catch (const Error&) {
      ok = false;
    } catch (const InvariantViolation&) {
      ok = false;
    }
    (ok ? report.factorization.pass : report.factorization.fail) += 1;
  }
  return report;
}

FaithfulSuiteReport run_faithful_suite(std::uint64_t seed, int count) {
  FaithfulSuiteReport report;
  report.seed = seed;
  report.count = count;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const Grade grade = random_grade(rng, 4, "a");
    const int dom = 1 + rng.below(3);
    const int cod = 1 + rng.below(3);
    const GradedMorphism f = random_graded_morphism(rng, grade, dom, cod);
    (encode_recover_roundtrip(f) ? report.roundtrip.pass : report.roundtrip.fail) += 1;
  }
  return report;
}

}  // namespace imprec
