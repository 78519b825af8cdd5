#include "imprec/bridge.hpp"

#include <algorithm>
#include <map>

#include "imprec/errors.hpp"

namespace imprec {

CredalSet image(const GradedMorphism& f) {
  if (f.dom.size != 1) throw DomainError("image is defined for morphisms out of 1");
  std::vector<ProbVector> gens;
  gens.reserve(static_cast<std::size_t>(f.carrier()));
  for (long long w = 0; w < f.carrier(); ++w) gens.emplace_back(f.column(w, 0));
  return CredalSet(f.cod.size, std::move(gens));
}

KlMorphism pointwise_image(const GradedMorphism& f) {
  std::vector<CredalSet> images;
  images.reserve(static_cast<std::size_t>(f.dom.size));
  for (int x = 0; x < f.dom.size; ++x) {
    std::vector<ProbVector> gens;
    gens.reserve(static_cast<std::size_t>(f.carrier()));
    for (long long w = 0; w < f.carrier(); ++w) gens.emplace_back(f.column(w, x));
    images.emplace_back(f.cod.size, std::move(gens));
  }
  return KlMorphism(f.dom, f.cod, std::move(images));
}

OplaxReport oplax_compare(const GradedMorphism& g, const GradedMorphism& f) {
  OplaxReport report{pointwise_image(gcompose(g, f)),
                     kl_compose(pointwise_image(g), pointwise_image(f)),
                     {},
                     false};
  for (int i = 0; i < report.lhs.dom.size; ++i) {
    const auto& l = report.lhs.images[static_cast<std::size_t>(i)];
    const auto& r = report.rhs.images[static_cast<std::size_t>(i)];
    const bool inc = subset(l, r);
    report.pointwise_subset.push_back(inc);
    if (!inc)
      throw InvariantViolation("composed image escaped the composite of images");
    if (l != r) report.strict = true;
  }
  return report;
}

GradedMorphism decoupled_compose(const GradedMorphism& g, const GradedMorphism& f) {
  if (f.dom.size != 1) throw DomainError("decoupled composition needs a point as first stage");
  if (f.cod.size != g.dom.size) throw ShapeError("decoupled composition shape mismatch");
  const int m = f.cod.size;

  // One private copy of g's sites per intermediate point.
  std::vector<ChoiceSite> sites = f.grade.sites();
  for (int i = 1; i <= m; ++i)
    for (const auto& s : g.grade.sites())
      sites.push_back(ChoiceSite{s.name + "@" + std::to_string(i), s.arity});
  const Grade big = Grade::of(std::move(sites));

  const long long cw = big.carrier();
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(cw));
  for (long long w = 0; w < cw; ++w) {
    const auto values = big.decode(w);
    std::map<std::string, int> by_name;
    for (std::size_t k = 0; k < big.sites().size(); ++k) by_name[big.sites()[k].name] = values[k];

    const long long u = [&] {
      std::vector<int> vs;
      vs.reserve(f.grade.sites().size());
      for (const auto& s : f.grade.sites()) vs.push_back(by_name.at(s.name));
      return f.grade.encode(vs);
    }();

    RatVector col(static_cast<std::size_t>(g.cod.size), Rational(0));
    for (int y = 0; y < m; ++y) {
      const Rational& fy = f.at(y, u, 0);
      if (fy == 0) continue;
      std::vector<int> vs;
      vs.reserve(g.grade.sites().size());
      for (const auto& s : g.grade.sites())
        vs.push_back(by_name.at(s.name + "@" + std::to_string(y + 1)));
      const long long v = g.grade.encode(vs);
      for (int z = 0; z < g.cod.size; ++z) col[static_cast<std::size_t>(z)] += g.at(z, v, y) * fy;
    }
    cols.push_back(std::move(col));
  }
  StochMatrix matrix(FinSetObj(static_cast<int>(cw)), g.cod, std::move(cols));
  return GradedMorphism(big, FinSetObj(1), g.cod, std::move(matrix));
}

ExtremeFactorization factor_through_extremes(const StochMatrix& f, const StochMatrix& f2) {
  if (f.cod_size() != f2.cod_size()) throw ShapeError("the two presentations target different sets");
  const int n = f.cod_size();

  auto columns = [](const StochMatrix& m) {
    std::vector<ProbVector> cols;
    cols.reserve(static_cast<std::size_t>(m.dom_size()));
    for (int j = 0; j < m.dom_size(); ++j) cols.emplace_back(m.column(j));
    return cols;
  };
  const CredalSet left_image(n, columns(f));
  const CredalSet right_image(n, columns(f2));
  if (left_image != right_image)
    throw DomainError("the two presentations generate different credal sets");

  const auto& extremes = left_image.extremes();
  auto realized = [&extremes](const StochMatrix& m) {
    for (const auto& e : extremes) {
      bool found = false;
      for (int j = 0; j < m.dom_size() && !found; ++j) found = (m.column(j) == e.entries());
      if (!found) return false;
    }
    return true;
  };
  if (!realized(f) || !realized(f2))
    throw DomainError("an extreme point is not realized as an exact column");

  std::vector<RatVector> vertex_cols;
  std::vector<RatVector> hull;
  for (const auto& e : extremes) {
    vertex_cols.push_back(e.entries());
    hull.push_back(e.entries());
  }
  const FinSetObj vertex_obj(static_cast<int>(extremes.size()));
  StochMatrix vertices(vertex_obj, f.cod(), vertex_cols);

  auto factor = [&](const StochMatrix& m) {
    std::vector<RatVector> cols;
    cols.reserve(static_cast<std::size_t>(m.dom_size()));
    for (int j = 0; j < m.dom_size(); ++j) {
      auto coeffs = convex_coefficients(m.column(j), hull);
      if (!coeffs)
        throw InvariantViolation("column not expressible over the shared extreme points");
      cols.push_back(std::move(*coeffs));
    }
    return StochMatrix(m.dom(), vertex_obj, std::move(cols));
  };
  ExtremeFactorization out{vertex_obj, factor(f), factor(f2), std::move(vertices)};

  if (compose(out.vertices, out.to_vertices_left) != f ||
      compose(out.vertices, out.to_vertices_right) != f2)
    throw InvariantViolation("factorization does not reproduce the inputs");
  if (!is_surjective(out.to_vertices_left) || !is_surjective(out.to_vertices_right))
    throw InvariantViolation("factor map is not surjective");
  return out;
}

bool encode_recover_roundtrip(const GradedMorphism& f) {
  const int n = f.cod.size;
  const int k = f.matrix.dom_size();  // carrier * dom
  const Rational half(1, 2);

  // Column j is mixed with a marker outcome n+j, so every column becomes an
  // extreme point of the image that can be identified afterwards.
  std::vector<RatVector> marked;
  marked.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    RatVector col(static_cast<std::size_t>(n + k), Rational(0));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = half * f.matrix.at(i, j);
    col[static_cast<std::size_t>(n + j)] = half;
    marked.push_back(std::move(col));
  }

  const auto extremes = extreme_points_of(marked);
  if (static_cast<int>(extremes.size()) != k) return false;

  for (int j = 0; j < k; ++j) {
    const RatVector* found = nullptr;
    for (const auto& e : extremes) {
      if (e[static_cast<std::size_t>(n + j)] != 0) {
        if (found) return false;
        found = &e;
      }
    }
    if (!found || (*found)[static_cast<std::size_t>(n + j)] != half) return false;
    for (int i = 0; i < n; ++i)
      if (2 * (*found)[static_cast<std::size_t>(i)] != f.matrix.at(i, j)) return false;
  }
  return true;
}

}  // namespace imprec
