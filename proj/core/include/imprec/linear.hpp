#pragma once

#include <optional>
#include <vector>

#include "imprec/rational.hpp"

namespace imprec {

/// Equality-constrained feasibility over the nonnegative orthant:
/// find lambda >= 0 with A lambda = b, all entries exact rationals.
struct FeasibilityProblem {
  std::vector<RatVector> rows;  // each of length vars
  RatVector rhs;                // length = rows.size()
  std::size_t vars = 0;

  FeasibilityProblem(std::vector<RatVector> rows_, RatVector rhs_);
};

/// Phase-one simplex over exact rationals with Bland's rule, so it always
/// terminates and is deterministic for a fixed input. Returns a feasible
/// point or nullopt.
std::optional<RatVector> solve_feasible(const FeasibilityProblem& p);

/// True iff `point` is a convex combination of `generators` (exact test).
/// Throws DomainError on an empty generator list, ShapeError on dimension
/// mismatch.
bool in_convex_hull(const RatVector& point, const std::vector<RatVector>& generators);

/// The convex coefficients expressing `point` over `generators`, when they
/// exist.
std::optional<RatVector> convex_coefficients(const RatVector& point,
                                             const std::vector<RatVector>& generators);

/// Minimal generating subset of a finite point set: each survivor is not a
/// convex combination of the other survivors, and the convex hull is
/// unchanged. Result is deduplicated and sorted lexicographically; the
/// minimal set is unique so the output does not depend on input order.
std::vector<RatVector> extreme_points_of(std::vector<RatVector> points);

}  // namespace imprec
