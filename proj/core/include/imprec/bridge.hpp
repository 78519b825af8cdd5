#pragma once

#include "imprec/credal.hpp"
#include "imprec/imp.hpp"

namespace imprec {

/// Credal set of distributions a point morphism can realize: the hull of
/// its matrix columns. Requires dom = 1. Invariant under surjective
/// regrading of the argument.
CredalSet image(const GradedMorphism& f);

/// Pointwise image: input i is sent to the hull of the columns
/// {f(w, i) : w over the carrier}. Identity-on-objects; preserves
/// identities and copairings exactly, and composition op-laxly.
KlMorphism pointwise_image(const GradedMorphism& f);

/// Both sides of the op-lax comparison for one composable pair:
/// lhs = pointwise_image(g . f), rhs = pointwise_image(g) . pointwise_image(f).
/// The inclusion lhs <= rhs holds for every valid input; `strict` records
/// whether some component inclusion is proper.
struct OplaxReport {
  KlMorphism lhs;
  KlMorphism rhs;
  std::vector<bool> pointwise_subset;
  bool strict = false;
};

/// Computes the report; an inclusion failure is an InvariantViolation (it
/// would mean a bug, not a legitimate outcome).
OplaxReport oplax_compare(const GradedMorphism& g, const GradedMorphism& f);

/// The enlarged composite of g : m -> n after a point f : 1 -> m, whose
/// grade has one fresh copy of g's sites per intermediate point, so each
/// intermediate may resolve g's draws independently. Its image equals the
/// Kleisli composite of the pointwise images; the ordinary composite's
/// image is contained in it.
GradedMorphism decoupled_compose(const GradedMorphism& g, const GradedMorphism& f);

/// Factorization of two column presentations of one credal set through the
/// matrix of its extreme points: vertices . to_vertices_left = f and
/// vertices . to_vertices_right = f2 hold exactly, and both factor maps are
/// surjective.
struct ExtremeFactorization {
  FinSetObj vertex_obj;           // one point per extreme of the shared hull
  StochMatrix to_vertices_left;   // f.dom -> vertex_obj
  StochMatrix to_vertices_right;  // f2.dom -> vertex_obj
  StochMatrix vertices;           // vertex_obj -> cod; columns are the extremes
};

/// Requires image(f) = image(f2) and each extreme realized as an exact
/// column of both inputs; violations are DomainErrors. Internal failures to
/// validate the factorization are InvariantViolations.
ExtremeFactorization factor_through_extremes(const StochMatrix& f, const StochMatrix& f2);

/// Injectivity witness for the image map on morphisms with a fixed
/// presentation: mixes each column half-and-half with a private marker
/// outcome, takes the image, and reads the original columns back off the
/// marked extreme points. Returns true iff recovery is exact.
bool encode_recover_roundtrip(const GradedMorphism& f);

}  // namespace imprec
