#include "imprec/linear.hpp"

#include <algorithm>

#include "imprec/errors.hpp"

namespace imprec {

FeasibilityProblem::FeasibilityProblem(std::vector<RatVector> rows_, RatVector rhs_)
    : rows(std::move(rows_)), rhs(std::move(rhs_)) {
  if (rows.size() != rhs.size())
    throw ShapeError("constraint matrix and right-hand side disagree");
  vars = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows)
    if (row.size() != vars) throw ShapeError("ragged constraint matrix");
}

namespace {

// Exact division with a divisibility check; integer pivoting guarantees
// exactness, so a nonzero remainder means a bug.
Integer exact_div(const Integer& num, const Integer& den) {
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw InvariantViolation("integer pivot division left a remainder");
  return q;
}

/// Phase-one simplex with integer pivoting over an integral system
/// A lambda = b, lambda >= 0. The tableau holds integers whose true values
/// are entry/det, so a pivot costs multiplications and one exact division
/// instead of rational gcd traffic. Bland's rule on entering and leaving
/// indices guarantees termination. Rows are flipped up front so the
/// right-hand side starts nonnegative; the artificial basis is [A | I | b].
std::optional<RatVector> int_phase_one(std::vector<std::vector<Integer>> a,
                                       std::vector<Integer> b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  if (m == 0) return RatVector(n, Rational(0));

  const std::size_t cols = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
    a[i].resize(cols, Integer(0));
    a[i][n + i] = 1;
  }
  Integer det = 1;

  // Reduced-cost row (times det) for min sum(artificials): -column_sum on
  // the original columns, zero on the artificials.
  std::vector<Integer> rc(cols, Integer(0));
  for (std::size_t j = 0; j < n; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < m; ++i) s += a[i][j];
    rc[j] = -s;
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (rc[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    // Ratio test by cross-multiplication; ties go to the smallest basic
    // variable.
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i][enter] <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      const Integer lhs = b[i] * a[leave][enter];
      const Integer rhs = b[leave] * a[i][enter];
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) {
      // Phase one is bounded below by zero, so a negative reduced cost
      // always admits a positive pivot entry.
      throw InvariantViolation("phase-one simplex found an unbounded direction");
    }

    const Integer piv = a[leave][enter];
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const Integer factor = a[i][enter];
      if (factor == 0) {
        if (det != piv) {
          for (std::size_t j = 0; j < cols; ++j)
            if (a[i][j] != 0) a[i][j] = exact_div(a[i][j] * piv, det);
          if (b[i] != 0) b[i] = exact_div(b[i] * piv, det);
        }
        continue;
      }
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = exact_div(a[i][j] * piv - factor * a[leave][j], det);
      b[i] = exact_div(b[i] * piv - factor * b[leave], det);
    }
    const Integer cost_factor = rc[enter];
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost_factor != 0)
        rc[j] = exact_div(rc[j] * piv - cost_factor * a[leave][j], det);
      else if (rc[j] != 0)
        rc[j] = exact_div(rc[j] * piv, det);
    }
    det = piv;
    basis[leave] = enter;
  }

  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n && b[i] != 0) return std::nullopt;

  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = Rational(b[i], det);
  return x;
}

/// Points on a shared integer grid: entry/denom are the true coordinates.
struct IntegerGrid {
  std::vector<std::vector<Integer>> points;
  Integer denom = 1;
};

IntegerGrid integerize(const std::vector<RatVector>& points) {
  IntegerGrid grid;
  for (const auto& p : points)
    for (const auto& v : p)
      grid.denom = boost::multiprecision::lcm(grid.denom, Integer(denominator(v)));
  grid.points.reserve(points.size());
  for (const auto& p : points) {
    std::vector<Integer> q;
    q.reserve(p.size());
    for (const auto& v : p) q.push_back(numerator(v) * (grid.denom / denominator(v)));
    grid.points.push_back(std::move(q));
  }
  return grid;
}

/// Convex coefficients of grid point `target` over the grid points at
/// `gens`, or nullopt. Works entirely on the shared integer grid.
std::optional<RatVector> grid_coefficients(const IntegerGrid& grid,
                                           const std::vector<std::size_t>& gens,
                                           std::size_t target) {
  const std::size_t d = grid.points[target].size();
  std::vector<std::vector<Integer>> rows(d + 1, std::vector<Integer>(gens.size()));
  std::vector<Integer> rhs(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) rows[i][k] = grid.points[gens[k]][i];
    rhs[i] = grid.points[target][i];
  }
  for (std::size_t k = 0; k < gens.size(); ++k) rows[d][k] = 1;
  rhs[d] = 1;
  return int_phase_one(std::move(rows), std::move(rhs));
}

void check_hull_arguments(const RatVector& point, const std::vector<RatVector>& generators) {
  if (generators.empty())
    throw DomainError("convex-hull membership needs at least one generator");
  for (const auto& g : generators)
    if (g.size() != point.size()) throw ShapeError("generator dimension differs from point");
}

}  // namespace

std::optional<RatVector> solve_feasible(const FeasibilityProblem& p) {
  const std::size_t m = p.rows.size();
  if (m == 0) return RatVector(p.vars, Rational(0));
  std::vector<std::vector<Integer>> rows(m);
  std::vector<Integer> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    Integer scale = denominator(p.rhs[i]);
    for (const auto& v : p.rows[i])
      scale = boost::multiprecision::lcm(scale, Integer(denominator(v)));
    rows[i].reserve(p.vars);
    for (const auto& v : p.rows[i]) rows[i].push_back(numerator(v) * (scale / denominator(v)));
    rhs[i] = numerator(p.rhs[i]) * (scale / denominator(p.rhs[i]));
  }
  return int_phase_one(std::move(rows), std::move(rhs));
}

bool in_convex_hull(const RatVector& point, const std::vector<RatVector>& generators) {
  return convex_coefficients(point, generators).has_value();
}

std::optional<RatVector> convex_coefficients(const RatVector& point,
                                             const std::vector<RatVector>& generators) {
  check_hull_arguments(point, generators);
  std::vector<RatVector> all = generators;
  all.push_back(point);
  const IntegerGrid grid = integerize(all);
  std::vector<std::size_t> gens(generators.size());
  for (std::size_t k = 0; k < gens.size(); ++k) gens[k] = k;
  return grid_coefficients(grid, gens, generators.size());
}

std::vector<RatVector> extreme_points_of(std::vector<RatVector> points) {
  if (points.empty()) throw DomainError("extreme points of an empty set");
  const std::size_t d = points.front().size();
  for (const auto& p : points)
    if (p.size() != d) throw ShapeError("mixed dimensions in point set");
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() == 1) return points;

  const IntegerGrid grid = integerize(points);
  auto member = [&grid](const std::vector<std::size_t>& gens, std::size_t target) {
    return grid_coefficients(grid, gens, target).has_value();
  };

  // Filter pass: drop any point inside the hull of the survivors so far.
  // The survivor hull always equals the hull of the processed prefix, so
  // every drop is final; survivors may still contain non-extremes.
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    if (!kept.empty() && member(kept, i)) continue;
    kept.push_back(i);
  }

  // Minimization pass: a redundant survivor stays redundant after other
  // redundant survivors are removed, so one sweep reaches the unique
  // minimal generating set.
  std::size_t i = 0;
  while (i < kept.size() && kept.size() > 1) {
    std::vector<std::size_t> others;
    others.reserve(kept.size() - 1);
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (k != i) others.push_back(kept[k]);
    if (member(others, kept[i])) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  std::vector<RatVector> ext;
  ext.reserve(kept.size());
  for (const std::size_t k : kept) ext.push_back(points[k]);
  return ext;
}

}  // namespace imprec
