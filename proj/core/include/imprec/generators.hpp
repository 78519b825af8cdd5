#pragma once

#include <cstdint>
#include <optional>

#include "imprec/elaborate.hpp"
#include "imprec/imp.hpp"

namespace imprec {

/// Deterministic pseudo-random source. Only raw engine output is used, so
/// streams are identical across platforms and standard libraries for a
/// fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next();
  /// Uniform in [0, n).
  int below(int n);
  bool coin() { return below(2) == 0; }

 private:
  std::uint64_t state_;
};

ProbVector random_prob_vector(Rng& rng, int dim);
StochMatrix random_stoch_matrix(Rng& rng, int m, int n);
/// Requires m >= n; plants a Dirac column on every codomain point.
StochMatrix random_surjective_matrix(Rng& rng, int m, int n);

/// A grade with carrier <= max_carrier, site names drawn from the prefix.
Grade random_grade(Rng& rng, int max_carrier, const std::string& name_prefix);
GradedMorphism random_graded_morphism(Rng& rng, const Grade& grade, int dom, int cod);

/// Fresh knight names with a budget, so generated programs stay within a
/// bounded number of urns.
class NamePool {
 public:
  NamePool(std::string prefix, int budget) : prefix_(std::move(prefix)), budget_(budget) {}
  std::optional<std::string> fresh();

 private:
  std::string prefix_;
  int budget_;
  int used_ = 0;
};

/// A well-scoped random program of the requested outcome size (2 or 3).
/// Knight draws come from the pool; every generated name is distinct, so
/// the result is well graded in any sequencing position.
TermPtr random_term(Rng& rng, const Context& ctx, int target_size, int depth, NamePool& pool);

Context random_context(Rng& rng, int max_vars = 2);

}  // namespace imprec
