#include "imprec/finstoch.hpp"

#include <algorithm>
#include <unordered_set>

#include "imprec/errors.hpp"

namespace imprec {

FinSetObj::FinSetObj(int n) : size(n) {
  if (n < 1) throw DomainError("finite set must have size >= 1");
}

FinSetObj::FinSetObj(int n, std::vector<std::string> labels_) : size(n), labels(std::move(labels_)) {
  if (n < 1) throw DomainError("finite set must have size >= 1");
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n)
      throw DomainError("label count differs from size");
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n) throw DomainError("labels must be distinct");
  }
}

ProbVector::ProbVector(RatVector entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("probability vector must have dimension >= 1");
  Rational sum = 0;
  for (const auto& e : entries_) {
    if (e < 0) throw DomainError("probability vector entry is negative");
    sum += e;
  }
  if (sum != 1) throw DomainError("probability vector entries must sum to 1");
}

ProbVector ProbVector::dirac(int i, int n) {
  if (i < 1 || i > n) throw DomainError("dirac index out of range");
  RatVector e(static_cast<std::size_t>(n), Rational(0));
  e[static_cast<std::size_t>(i - 1)] = 1;
  return ProbVector(std::move(e));
}

ProbVector ProbVector::uniform(int n) {
  if (n < 1) throw DomainError("uniform dimension out of range");
  return ProbVector(RatVector(static_cast<std::size_t>(n), Rational(1, n)));
}

ProbVector convex_comb(const ProbVector& p, const ProbVector& q, const Rational& r) {
  if (p.dim() != q.dim()) throw ShapeError("convex combination of different dimensions");
  if (r < 0 || r > 1) throw DomainError("mixing weight outside [0,1]");
  RatVector e(static_cast<std::size_t>(p.dim()));
  for (int i = 0; i < p.dim(); ++i) e[static_cast<std::size_t>(i)] = r * p.at(i) + (1 - r) * q.at(i);
  return ProbVector(std::move(e));
}

StochMatrix::StochMatrix(FinSetObj dom, FinSetObj cod, std::vector<RatVector> columns)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  if (static_cast<int>(columns.size()) != dom_.size)
    throw ShapeError("column count differs from domain size");
  entries_.assign(static_cast<std::size_t>(dom_.size) * static_cast<std::size_t>(cod_.size),
                  Rational(0));
  for (int j = 0; j < dom_.size; ++j) {
    const auto& col = columns[static_cast<std::size_t>(j)];
    if (static_cast<int>(col.size()) != cod_.size)
      throw ShapeError("column length differs from codomain size");
    Rational sum = 0;
    for (int i = 0; i < cod_.size; ++i) {
      if (col[static_cast<std::size_t>(i)] < 0)
        throw DomainError("stochastic matrix entry is negative");
      sum += col[static_cast<std::size_t>(i)];
      entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dom_.size) +
               static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
    }
    if (sum != 1) throw DomainError("matrix column does not sum to 1");
  }
}

StochMatrix StochMatrix::from_rows(FinSetObj dom, FinSetObj cod, std::vector<RatVector> rows) {
  if (static_cast<int>(rows.size()) != cod.size)
    throw ShapeError("row count differs from codomain size");
  std::vector<RatVector> cols(static_cast<std::size_t>(dom.size),
                              RatVector(static_cast<std::size_t>(cod.size)));
  for (int i = 0; i < cod.size; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != dom.size)
      throw ShapeError("row length differs from domain size");
    for (int j = 0; j < dom.size; ++j)
      cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return StochMatrix(std::move(dom), std::move(cod), std::move(cols));
}

StochMatrix StochMatrix::identity(const FinSetObj& n) {
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(n.size));
  for (int j = 0; j < n.size; ++j) cols.push_back(ProbVector::dirac(j + 1, n.size).entries());
  return StochMatrix(n, n, std::move(cols));
}

StochMatrix StochMatrix::bang(const FinSetObj& m) {
  std::vector<RatVector> cols(static_cast<std::size_t>(m.size), RatVector{Rational(1)});
  return StochMatrix(m, FinSetObj(1), std::move(cols));
}

StochMatrix StochMatrix::from_function(const FinSetObj& dom, const FinSetObj& cod,
                                       const std::vector<int>& image) {
  if (static_cast<int>(image.size()) != dom.size)
    throw ShapeError("function table length differs from domain size");
  std::vector<RatVector> cols;
  cols.reserve(image.size());
  for (int j = 0; j < dom.size; ++j) {
    const int v = image[static_cast<std::size_t>(j)];
    if (v < 0 || v >= cod.size) throw DomainError("function value out of range");
    cols.push_back(ProbVector::dirac(v + 1, cod.size).entries());
  }
  return StochMatrix(dom, cod, std::move(cols));
}

RatVector StochMatrix::column(int col) const {
  RatVector out(static_cast<std::size_t>(cod_.size));
  for (int i = 0; i < cod_.size; ++i) out[static_cast<std::size_t>(i)] = at(i, col);
  return out;
}

bool StochMatrix::operator==(const StochMatrix& o) const {
  return dom_.size == o.dom_.size && cod_.size == o.cod_.size && entries_ == o.entries_;
}

StochMatrix compose(const StochMatrix& g, const StochMatrix& f) {
  if (f.cod_size() != g.dom_size()) throw ShapeError("composition shape mismatch");
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(f.dom_size()));
  for (int j = 0; j < f.dom_size(); ++j) {
    RatVector col(static_cast<std::size_t>(g.cod_size()), Rational(0));
    for (int y = 0; y < f.cod_size(); ++y) {
      const Rational& w = f.at(y, j);
      if (w == 0) continue;
      for (int z = 0; z < g.cod_size(); ++z) col[static_cast<std::size_t>(z)] += g.at(z, y) * w;
    }
    cols.push_back(std::move(col));
  }
  return StochMatrix(f.dom(), g.cod(), std::move(cols));
}

namespace {

FinSetObj product_obj(const FinSetObj& a, const FinSetObj& b) {
  return FinSetObj(a.size * b.size);
}

}  // namespace

StochMatrix kron(const StochMatrix& f, const StochMatrix& g) {
  const FinSetObj dom = product_obj(f.dom(), g.dom());
  const FinSetObj cod = product_obj(f.cod(), g.cod());
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(dom.size));
  for (int j1 = 0; j1 < f.dom_size(); ++j1) {
    for (int j2 = 0; j2 < g.dom_size(); ++j2) {
      RatVector col(static_cast<std::size_t>(cod.size));
      for (int i1 = 0; i1 < f.cod_size(); ++i1)
        for (int i2 = 0; i2 < g.cod_size(); ++i2)
          col[static_cast<std::size_t>(i1 * g.cod_size() + i2)] = f.at(i1, j1) * g.at(i2, j2);
      cols.push_back(std::move(col));
    }
  }
  return StochMatrix(dom, cod, std::move(cols));
}

StochMatrix coproduct(const StochMatrix& f, const StochMatrix& g) {
  if (f.cod_size() != g.cod_size()) throw ShapeError("copairing codomain mismatch");
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(f.dom_size() + g.dom_size()));
  for (int j = 0; j < f.dom_size(); ++j) cols.push_back(f.column(j));
  for (int j = 0; j < g.dom_size(); ++j) cols.push_back(g.column(j));
  return StochMatrix(FinSetObj(f.dom_size() + g.dom_size()), f.cod(), std::move(cols));
}

StochMatrix copy_matrix(const FinSetObj& n) {
  std::vector<int> image(static_cast<std::size_t>(n.size));
  for (int i = 0; i < n.size; ++i) image[static_cast<std::size_t>(i)] = i * n.size + i;
  return StochMatrix::from_function(n, FinSetObj(n.size * n.size), image);
}

StochMatrix swap_matrix(const FinSetObj& m, const FinSetObj& n) {
  std::vector<int> image(static_cast<std::size_t>(m.size * n.size));
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < n.size; ++b)
      image[static_cast<std::size_t>(a * n.size + b)] = b * m.size + a;
  return StochMatrix::from_function(FinSetObj(m.size * n.size), FinSetObj(n.size * m.size), image);
}

bool is_surjective(const StochMatrix& f) {
  // A column summing to 1 with entry 1 at row j is the Dirac at j.
  for (int j = 0; j < f.cod_size(); ++j) {
    bool hit = false;
    for (int i = 0; i < f.dom_size() && !hit; ++i) hit = (f.at(j, i) == 1);
    if (!hit) return false;
  }
  return true;
}

}  // namespace imprec
