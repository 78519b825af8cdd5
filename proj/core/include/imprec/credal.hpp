#pragma once

#include "imprec/finstoch.hpp"
#include "imprec/linear.hpp"

namespace imprec {

/// A finitely generated convex subset of the probability simplex, stored
/// by generators together with the canonical form: the unique minimal
/// generating set (the extreme points), sorted lexicographically. The
/// canonical form is computed eagerly at construction, so equality and
/// subset tests are decidable and sharing is read-only. Credal sets are
/// never empty.
class CredalSet {
 public:
  CredalSet(int dim, std::vector<ProbVector> generators);

  static CredalSet singleton(ProbVector p);
  /// {dirac_i} in dimension n (1-based i).
  static CredalSet unit(int i, int n);
  /// The whole simplex: hull of all Dirac vectors.
  static CredalSet full_simplex(int n);

  int dim() const { return dim_; }
  const std::vector<ProbVector>& generators() const { return generators_; }
  const std::vector<ProbVector>& extremes() const { return extremes_; }

  bool operator==(const CredalSet& o) const;
  bool operator!=(const CredalSet& o) const { return !(*this == o); }

 private:
  int dim_;
  std::vector<ProbVector> generators_;
  std::vector<ProbVector> extremes_;
};

/// {p +_r q | p in S, q in T}: generated by the pairwise mixtures.
CredalSet mix(const CredalSet& s, const CredalSet& t, const Rational& r);

/// Convex closure of the union.
CredalSet join(const CredalSet& s, const CredalSet& t);

/// Exact inclusion: every extreme of s lies in the hull of t.
bool subset(const CredalSet& s, const CredalSet& t);

/// Extreme points in canonical order; identical to s.extremes().
std::vector<ProbVector> extreme_points(const CredalSet& s);

/// A Kleisli morphism for the convex powerset: one credal set per input.
struct KlMorphism {
  FinSetObj dom;
  FinSetObj cod;
  std::vector<CredalSet> images;  // images.size() == dom.size, each of dim cod.size

  KlMorphism(FinSetObj dom_, FinSetObj cod_, std::vector<CredalSet> images_);

  bool operator==(const KlMorphism& o) const;
  bool operator!=(const KlMorphism& o) const { return !(*this == o); }
};

/// The identity Kleisli morphism: i -> {dirac_i}.
KlMorphism kl_unit(int m);

/// Kleisli extension: f^*(X) joins, over the extreme points x of X, the
/// weighted Minkowski sums  sum_i x_i * f(i).
CredalSet kleisli_extend(const KlMorphism& f, const CredalSet& x);

/// Composition g^* . f, pointwise over the domain of f.
KlMorphism kl_compose(const KlMorphism& g, const KlMorphism& f);

/// Pointwise inclusion order on Kleisli morphisms.
bool kl_leq(const KlMorphism& f, const KlMorphism& g);

}  // namespace imprec
