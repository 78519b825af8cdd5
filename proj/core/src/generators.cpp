#include "imprec/generators.hpp"

#include "imprec/errors.hpp"

namespace imprec {

std::uint64_t Rng::next() {
  // splitmix64; stable across standard libraries.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::below(int n) {
  if (n <= 0) throw DomainError("Rng::below needs a positive bound");
  return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

ProbVector random_prob_vector(Rng& rng, int dim) {
  RatVector weights(static_cast<std::size_t>(dim));
  Rational sum = 0;
  while (sum == 0) {
    sum = 0;
    for (int i = 0; i < dim; ++i) {
      weights[static_cast<std::size_t>(i)] = rng.below(5);
      sum += weights[static_cast<std::size_t>(i)];
    }
  }
  for (auto& w : weights) w /= sum;
  return ProbVector(std::move(weights));
}

StochMatrix random_stoch_matrix(Rng& rng, int m, int n) {
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) cols.push_back(random_prob_vector(rng, n).entries());
  return StochMatrix(FinSetObj(m), FinSetObj(n), std::move(cols));
}

StochMatrix random_surjective_matrix(Rng& rng, int m, int n) {
  if (m < n) throw DomainError("surjective matrix needs dom >= cod");
  std::vector<int> slots(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) slots[static_cast<std::size_t>(i)] = i;
  for (int i = m - 1; i > 0; --i) std::swap(slots[static_cast<std::size_t>(i)],
                                            slots[static_cast<std::size_t>(rng.below(i + 1))]);
  std::vector<RatVector> cols(static_cast<std::size_t>(m));
  for (int j = 0; j < n; ++j)
    cols[static_cast<std::size_t>(slots[static_cast<std::size_t>(j)])] =
        ProbVector::dirac(j + 1, n).entries();
  for (int j = n; j < m; ++j)
    cols[static_cast<std::size_t>(slots[static_cast<std::size_t>(j)])] =
        random_prob_vector(rng, n).entries();
  return StochMatrix(FinSetObj(m), FinSetObj(n), std::move(cols));
}

Grade random_grade(Rng& rng, int max_carrier, const std::string& name_prefix) {
  std::vector<ChoiceSite> sites;
  long long carrier = 1;
  int index = 0;
  const int site_count = rng.below(3);  // 0, 1 or 2 sites
  for (int k = 0; k < site_count; ++k) {
    const int arity = 2 + rng.below(3);
    if (carrier * arity > max_carrier) break;
    carrier *= arity;
    sites.push_back(ChoiceSite{name_prefix + std::to_string(index++), arity});
  }
  return Grade::of(std::move(sites));
}

GradedMorphism random_graded_morphism(Rng& rng, const Grade& grade, int dom, int cod) {
  const int width = static_cast<int>(grade.carrier()) * dom;
  return GradedMorphism(grade, FinSetObj(dom), FinSetObj(cod),
                        random_stoch_matrix(rng, width, cod));
}

std::optional<std::string> NamePool::fresh() {
  if (used_ >= budget_) return std::nullopt;
  return prefix_ + std::to_string(used_++);
}

namespace {

Type type_of_size(int size) { return size == 2 ? Type::boolean() : Type::fin(size); }

TermPtr random_leaf(Rng& rng, const Context& ctx, int target_size, NamePool& pool) {
  for (;;) {
    switch (rng.below(5)) {
      case 0: {  // constructor
        const int i = 1 + rng.below(target_size);
        if (target_size == 2) return i == 1 ? mk_true() : mk_false();
        if (target_size == 3) return i == 1 ? mk_r() : (i == 2 ? mk_g() : mk_b());
        return mk_inj(i, target_size);
      }
      case 1:
        return mk_choose(random_prob_vector(rng, target_size).entries());
      case 2: {
        if (target_size != 2) break;
        return mk_bernoulli();
      }
      case 3: {
        std::vector<std::string> candidates;
        for (const auto& [name, type] : ctx)
          if (type.size() == target_size) candidates.push_back(name);
        if (candidates.empty()) break;
        return mk_var(candidates[static_cast<std::size_t>(rng.below(
            static_cast<int>(candidates.size())))]);
      }
      case 4: {
        if (target_size > 3) break;
        const auto name = pool.fresh();
        if (!name) break;
        return mk_knight(*name, target_size);
      }
    }
  }
}

}  // namespace

TermPtr random_term(Rng& rng, const Context& ctx, int target_size, int depth, NamePool& pool) {
  if (depth <= 0) return random_leaf(rng, ctx, target_size, pool);
  switch (rng.below(4)) {
    case 0: {  // if
      TermPtr cond = random_term(rng, ctx, 2, depth - 1, pool);
      TermPtr then_b = random_term(rng, ctx, target_size, depth - 1, pool);
      TermPtr else_b = random_term(rng, ctx, target_size, depth - 1, pool);
      return mk_if(std::move(cond), std::move(then_b), std::move(else_b));
    }
    case 1: {  // let
      const int bound_size = 2 + rng.below(2);
      const std::string var = "v" + std::to_string(rng.below(100000));
      TermPtr bound = random_term(rng, ctx, bound_size, depth - 1, pool);
      Context extended = ctx;
      extended.emplace_back(var, type_of_size(bound_size));
      TermPtr body = random_term(rng, extended, target_size, depth - 1, pool);
      return mk_let(var, std::move(bound), std::move(body));
    }
    default:
      return random_leaf(rng, ctx, target_size, pool);
  }
}

Context random_context(Rng& rng, int max_vars) {
  Context ctx;
  const int n = rng.below(max_vars + 1);
  for (int i = 0; i < n; ++i) ctx.emplace_back("c" + std::to_string(i), type_of_size(2 + rng.below(2)));
  return ctx;
}

}  // namespace imprec
