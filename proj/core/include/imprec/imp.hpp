#pragma once

#include "imprec/grade.hpp"

namespace imprec {

/// A morphism dom -> cod at a grade: concretely a stochastic matrix out of
/// carrier(grade) x dom, columns enumerated with the carrier assignment
/// most significant. Reading a column at assignment w gives the behaviour
/// of the morphism once the named draws have resolved to w.
struct GradedMorphism {
  Grade grade;
  FinSetObj dom;
  FinSetObj cod;
  StochMatrix matrix;

  GradedMorphism(Grade grade_, FinSetObj dom_, FinSetObj cod_, StochMatrix matrix_);

  long long carrier() const { return grade.carrier(); }
  /// Column for carrier assignment `w` and input `x`.
  RatVector column(long long w, int x) const;
  const Rational& at(int row, long long w, int x) const {
    return matrix.at(row, static_cast<int>(w) * dom.size + x);
  }

  /// Grade, shape and entries (labels ignored).
  bool operator==(const GradedMorphism& o) const;
  bool operator!=(const GradedMorphism& o) const { return !(*this == o); }
};

GradedMorphism g_identity(const FinSetObj& x);
GradedMorphism g_bang(const FinSetObj& x);
GradedMorphism g_copy(const FinSetObj& x);
/// Lift an ungraded stochastic matrix to the empty grade.
GradedMorphism g_plain(StochMatrix m);
/// Constant morphism 1 -> n at the Dirac on i (1-based).
GradedMorphism g_point(int i, int n);

/// Fair coin: 1 -> 2 at the empty grade, the column (1/2, 1/2).
GradedMorphism bernoulli();
/// Arbitrary exact probabilistic choice: 1 -> n at the empty grade.
GradedMorphism choose(const ProbVector& p);
/// Named one-shot nondeterministic draw: 1 -> arity at grade {name:arity},
/// the identity matrix read against the carrier.
GradedMorphism knight(const std::string& name, int arity = 2);

/// Reindex along a grade map u : eps -> gamma, turning a morphism at gamma
/// into one at eps by precomposing u on the carrier.
GradedMorphism regrade(const GradedMorphism& f, const GradeMap& u);

/// Reindex along the canonical projection from a larger grade.
GradedMorphism weaken_to(const GradedMorphism& f, const Grade& larger);

/// Composition g . f for f : X -> Y at gamma, g : Y -> Z at eps, with
/// disjoint names. The result lives at the sorted union of the two grades;
/// each combined assignment resolves f by its gamma part and g by its eps
/// part.
GradedMorphism gcompose(const GradedMorphism& g, const GradedMorphism& f);

/// Monoidal product, at the sorted union of the (disjoint) grades.
GradedMorphism gtensor(const GradedMorphism& f, const GradedMorphism& g);

/// Copairing [f, g] : X + Y -> Z of morphisms at one shared grade. Callers
/// weaken both sides to a common grade first; no implicit weakening here.
GradedMorphism gcoproduct(const GradedMorphism& f, const GradedMorphism& g);

/// Pointwise convex mixture of two parallel morphisms at the same grade.
GradedMorphism mix_pointwise(const GradedMorphism& f, const GradedMorphism& g,
                             const Rational& r);

}  // namespace imprec
