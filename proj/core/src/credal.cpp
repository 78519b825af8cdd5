#include "imprec/credal.hpp"

#include <algorithm>

#include "imprec/errors.hpp"

namespace imprec {

namespace {

std::vector<RatVector> raw(const std::vector<ProbVector>& ps) {
  std::vector<RatVector> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.entries());
  return out;
}

}  // namespace

CredalSet::CredalSet(int dim, std::vector<ProbVector> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ < 1) throw DomainError("credal set dimension must be >= 1");
  if (generators_.empty()) throw DomainError("credal sets are nonempty: at least one generator");
  for (const auto& g : generators_)
    if (g.dim() != dim_) throw ShapeError("generator dimension differs from credal set");
  for (const auto& v : extreme_points_of(raw(generators_))) extremes_.emplace_back(v);
}

CredalSet CredalSet::singleton(ProbVector p) {
  const int d = p.dim();
  return CredalSet(d, {std::move(p)});
}

CredalSet CredalSet::unit(int i, int n) { return singleton(ProbVector::dirac(i, n)); }

CredalSet CredalSet::full_simplex(int n) {
  std::vector<ProbVector> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) gens.push_back(ProbVector::dirac(i, n));
  return CredalSet(n, std::move(gens));
}

bool CredalSet::operator==(const CredalSet& o) const {
  return dim_ == o.dim_ && extremes_ == o.extremes_;
}

CredalSet mix(const CredalSet& s, const CredalSet& t, const Rational& r) {
  if (s.dim() != t.dim()) throw ShapeError("mixing credal sets of different dimensions");
  if (r < 0 || r > 1) throw DomainError("mixing weight outside [0,1]");
  std::vector<ProbVector> gens;
  gens.reserve(s.extremes().size() * t.extremes().size());
  for (const auto& p : s.extremes())
    for (const auto& q : t.extremes()) gens.push_back(convex_comb(p, q, r));
  return CredalSet(s.dim(), std::move(gens));
}

CredalSet join(const CredalSet& s, const CredalSet& t) {
  if (s.dim() != t.dim()) throw ShapeError("joining credal sets of different dimensions");
  std::vector<ProbVector> gens = s.extremes();
  gens.insert(gens.end(), t.extremes().begin(), t.extremes().end());
  return CredalSet(s.dim(), std::move(gens));
}

bool subset(const CredalSet& s, const CredalSet& t) {
  if (s.dim() != t.dim()) throw ShapeError("comparing credal sets of different dimensions");
  const auto hull = raw(t.extremes());
  for (const auto& e : s.extremes())
    if (!in_convex_hull(e.entries(), hull)) return false;
  return true;
}

std::vector<ProbVector> extreme_points(const CredalSet& s) { return s.extremes(); }

KlMorphism::KlMorphism(FinSetObj dom_, FinSetObj cod_, std::vector<CredalSet> images_)
    : dom(std::move(dom_)), cod(std::move(cod_)), images(std::move(images_)) {
  if (static_cast<int>(images.size()) != dom.size)
    throw ShapeError("one credal set per domain point required");
  for (const auto& s : images)
    if (s.dim() != cod.size) throw ShapeError("image dimension differs from codomain");
}

bool KlMorphism::operator==(const KlMorphism& o) const {
  return dom.size == o.dom.size && cod.size == o.cod.size && images == o.images;
}

KlMorphism kl_unit(int m) {
  std::vector<CredalSet> images;
  images.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) images.push_back(CredalSet::unit(i, m));
  return KlMorphism(FinSetObj(m), FinSetObj(m), std::move(images));
}

CredalSet kleisli_extend(const KlMorphism& f, const CredalSet& x) {
  if (x.dim() != f.dom.size) throw ShapeError("extension argument dimension mismatch");
  const int n = f.cod.size;
  std::vector<ProbVector> out_gens;
  for (const auto& ext : x.extremes()) {
    // Weighted Minkowski sum over the support of this extreme point,
    // pruned to extreme points after every step to keep generator counts
    // at the true vertex counts.
    std::vector<RatVector> acc{RatVector(static_cast<std::size_t>(n), Rational(0))};
    for (int i = 0; i < f.dom.size; ++i) {
      const Rational& w = ext.at(i);
      if (w == 0) continue;
      std::vector<RatVector> next;
      next.reserve(acc.size() * f.images[static_cast<std::size_t>(i)].extremes().size());
      for (const auto& v : acc)
        for (const auto& g : f.images[static_cast<std::size_t>(i)].extremes())
          next.push_back(vec_add(v, vec_scale(w, g.entries())));
      acc = extreme_points_of(std::move(next));
    }
    for (auto& v : acc) out_gens.emplace_back(std::move(v));
  }
  return CredalSet(n, std::move(out_gens));
}

KlMorphism kl_compose(const KlMorphism& g, const KlMorphism& f) {
  if (f.cod.size != g.dom.size) throw ShapeError("Kleisli composition shape mismatch");
  std::vector<CredalSet> images;
  images.reserve(f.images.size());
  for (const auto& s : f.images) images.push_back(kleisli_extend(g, s));
  return KlMorphism(f.dom, g.cod, std::move(images));
}

bool kl_leq(const KlMorphism& f, const KlMorphism& g) {
  if (f.dom.size != g.dom.size || f.cod.size != g.cod.size)
    throw ShapeError("comparing Kleisli morphisms of different shapes");
  for (int i = 0; i < f.dom.size; ++i)
    if (!subset(f.images[static_cast<std::size_t>(i)], g.images[static_cast<std::size_t>(i)]))
      return false;
  return true;
}

}  // namespace imprec
