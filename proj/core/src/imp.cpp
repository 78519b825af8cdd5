#include "imprec/imp.hpp"

#include "imprec/errors.hpp"

namespace imprec {

GradedMorphism::GradedMorphism(Grade grade_, FinSetObj dom_, FinSetObj cod_, StochMatrix matrix_)
    : grade(std::move(grade_)), dom(std::move(dom_)), cod(std::move(cod_)), matrix(std::move(matrix_)) {
  if (matrix.dom_size() != grade.carrier() * dom.size)
    throw ShapeError("matrix width differs from carrier * dom");
  if (matrix.cod_size() != cod.size) throw ShapeError("matrix height differs from cod");
}

RatVector GradedMorphism::column(long long w, int x) const {
  return matrix.column(static_cast<int>(w) * dom.size + x);
}

bool GradedMorphism::operator==(const GradedMorphism& o) const {
  return grade == o.grade && dom.size == o.dom.size && cod.size == o.cod.size &&
         matrix == o.matrix;
}

GradedMorphism g_identity(const FinSetObj& x) {
  return GradedMorphism(Grade{}, x, x, StochMatrix::identity(x));
}

GradedMorphism g_bang(const FinSetObj& x) {
  return GradedMorphism(Grade{}, x, FinSetObj(1), StochMatrix::bang(x));
}

GradedMorphism g_copy(const FinSetObj& x) {
  return GradedMorphism(Grade{}, x, FinSetObj(x.size * x.size), copy_matrix(x));
}

GradedMorphism g_plain(StochMatrix m) {
  FinSetObj dom = m.dom();
  FinSetObj cod = m.cod();
  return GradedMorphism(Grade{}, std::move(dom), std::move(cod), std::move(m));
}

GradedMorphism g_point(int i, int n) {
  return GradedMorphism(Grade{}, FinSetObj(1), FinSetObj(n),
                        StochMatrix(FinSetObj(1), FinSetObj(n),
                                    {ProbVector::dirac(i, n).entries()}));
}

GradedMorphism bernoulli() {
  return GradedMorphism(Grade{}, FinSetObj(1), FinSetObj(2),
                        StochMatrix(FinSetObj(1), FinSetObj(2),
                                    {RatVector{Rational(1, 2), Rational(1, 2)}}));
}

GradedMorphism choose(const ProbVector& p) {
  return GradedMorphism(Grade{}, FinSetObj(1), FinSetObj(p.dim()),
                        StochMatrix(FinSetObj(1), FinSetObj(p.dim()), {p.entries()}));
}

GradedMorphism knight(const std::string& name, int arity) {
  if (arity < 2) throw DomainError("knight arity must be >= 2");
  const Grade g = Grade::single(name, arity);
  return GradedMorphism(g, FinSetObj(1), FinSetObj(arity),
                        StochMatrix::identity(FinSetObj(arity)));
}

GradedMorphism regrade(const GradedMorphism& f, const GradeMap& u) {
  if (u.dst() != f.grade)
    throw GradeMismatchError("grade map target differs from the morphism's grade");
  StochMatrix m = compose(f.matrix, kron(u.matrix(), StochMatrix::identity(f.dom)));
  return GradedMorphism(u.src(), f.dom, f.cod, std::move(m));
}

GradedMorphism weaken_to(const GradedMorphism& f, const Grade& larger) {
  if (larger == f.grade) return f;
  if (!larger.contains_all(f.grade))
    throw GradeMismatchError("weakening target does not extend the morphism's grade");
  // Projection regrades only select columns; equals
  // regrade(f, GradeMap::projection(larger, f.grade)).
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(larger.carrier()) *
               static_cast<std::size_t>(f.dom.size));
  for (long long w = 0; w < larger.carrier(); ++w) {
    const long long u = larger.restrict_index(f.grade, w);
    for (int x = 0; x < f.dom.size; ++x) cols.push_back(f.column(u, x));
  }
  StochMatrix m(FinSetObj(static_cast<int>(larger.carrier()) * f.dom.size), f.cod,
                std::move(cols));
  return GradedMorphism(larger, f.dom, f.cod, std::move(m));
}

GradedMorphism gcompose(const GradedMorphism& g, const GradedMorphism& f) {
  if (f.cod.size != g.dom.size) throw ShapeError("graded composition shape mismatch");
  const Grade combined = Grade::disjoint_union(f.grade, g.grade);
  const long long cw = combined.carrier();
  const int xs = f.dom.size;
  const int ys = f.cod.size;
  const int zs = g.cod.size;
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(cw * xs));
  for (long long w = 0; w < cw; ++w) {
    const long long u = combined.restrict_index(f.grade, w);
    const long long v = combined.restrict_index(g.grade, w);
    for (int x = 0; x < xs; ++x) {
      RatVector col(static_cast<std::size_t>(zs), Rational(0));
      for (int y = 0; y < ys; ++y) {
        const Rational& fy = f.at(y, u, x);
        if (fy == 0) continue;
        for (int z = 0; z < zs; ++z) {
          const Rational& gz = g.at(z, v, y);
          if (gz != 0) col[static_cast<std::size_t>(z)] += gz * fy;
        }
      }
      cols.push_back(std::move(col));
    }
  }
  StochMatrix m(FinSetObj(static_cast<int>(cw) * xs), g.cod, std::move(cols));
  return GradedMorphism(combined, f.dom, g.cod, std::move(m));
}

GradedMorphism gtensor(const GradedMorphism& f, const GradedMorphism& g) {
  const Grade combined = Grade::disjoint_union(f.grade, g.grade);
  const long long cw = combined.carrier();
  const FinSetObj dom(f.dom.size * g.dom.size);
  const FinSetObj cod(f.cod.size * g.cod.size);
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(cw * dom.size));
  for (long long w = 0; w < cw; ++w) {
    const long long u = combined.restrict_index(f.grade, w);
    const long long v = combined.restrict_index(g.grade, w);
    for (int x = 0; x < f.dom.size; ++x) {
      for (int y = 0; y < g.dom.size; ++y) {
        RatVector col(static_cast<std::size_t>(cod.size), Rational(0));
        for (int i1 = 0; i1 < f.cod.size; ++i1) {
          const Rational& left = f.at(i1, u, x);
          if (left == 0) continue;
          for (int i2 = 0; i2 < g.cod.size; ++i2) {
            const Rational& right = g.at(i2, v, y);
            if (right != 0)
              col[static_cast<std::size_t>(i1 * g.cod.size + i2)] = left * right;
          }
        }
        cols.push_back(std::move(col));
      }
    }
  }
  StochMatrix m(FinSetObj(static_cast<int>(cw) * dom.size), cod, std::move(cols));
  return GradedMorphism(combined, dom, cod, std::move(m));
}

GradedMorphism gcoproduct(const GradedMorphism& f, const GradedMorphism& g) {
  if (f.grade != g.grade)
    throw GradeMismatchError("copairing requires equal grades; weaken first");
  if (f.cod.size != g.cod.size) throw ShapeError("copairing codomain mismatch");
  const long long cw = f.carrier();
  const FinSetObj dom(f.dom.size + g.dom.size);
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(cw * dom.size));
  for (long long w = 0; w < cw; ++w) {
    for (int d = 0; d < dom.size; ++d) {
      cols.push_back(d < f.dom.size ? f.column(w, d) : g.column(w, d - f.dom.size));
    }
  }
  StochMatrix m(FinSetObj(static_cast<int>(cw) * dom.size), f.cod, std::move(cols));
  return GradedMorphism(f.grade, dom, f.cod, std::move(m));
}

GradedMorphism mix_pointwise(const GradedMorphism& f, const GradedMorphism& g,
                             const Rational& r) {
  if (f.grade != g.grade) throw GradeMismatchError("pointwise mixture requires equal grades");
  if (f.dom.size != g.dom.size || f.cod.size != g.cod.size)
    throw ShapeError("pointwise mixture shape mismatch");
  if (r < 0 || r > 1) throw DomainError("mixing weight outside [0,1]");
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(f.matrix.dom_size()));
  for (int j = 0; j < f.matrix.dom_size(); ++j) {
    RatVector col(static_cast<std::size_t>(f.cod.size));
    for (int i = 0; i < f.cod.size; ++i)
      col[static_cast<std::size_t>(i)] = r * f.matrix.at(i, j) + (1 - r) * g.matrix.at(i, j);
    cols.push_back(std::move(col));
  }
  StochMatrix m(FinSetObj(f.matrix.dom_size()), f.cod, std::move(cols));
  return GradedMorphism(f.grade, f.dom, f.cod, std::move(m));
}

}  // namespace imprec
