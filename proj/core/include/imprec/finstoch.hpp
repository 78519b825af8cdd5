#pragma once

#include <string>
#include <vector>

#include "imprec/rational.hpp"

namespace imprec {

/// A finite set with a fixed enumeration. Labels are display metadata only;
/// all semantics go through `size`. Two objects are equal when both size and
/// labels agree.
struct FinSetObj {
  int size = 1;
  std::vector<std::string> labels;  // empty, or exactly `size` distinct names

  FinSetObj() = default;
  explicit FinSetObj(int n);
  FinSetObj(int n, std::vector<std::string> labels_);

  bool operator==(const FinSetObj& o) const { return size == o.size && labels == o.labels; }
  bool operator!=(const FinSetObj& o) const { return !(*this == o); }
};

/// Nonnegative rational entries summing to exactly 1.
class ProbVector {
 public:
  explicit ProbVector(RatVector entries);

  static ProbVector dirac(int i, int n);  // 1-based index
  static ProbVector uniform(int n);

  int dim() const { return static_cast<int>(entries_.size()); }
  const RatVector& entries() const { return entries_; }
  const Rational& at(int i) const { return entries_[static_cast<std::size_t>(i)]; }

  bool operator==(const ProbVector& o) const { return entries_ == o.entries_; }
  bool operator!=(const ProbVector& o) const { return !(*this == o); }

 private:
  RatVector entries_;
};

/// r*p + (1-r)*q, with r in [0,1].
ProbVector convex_comb(const ProbVector& p, const ProbVector& q, const Rational& r);

/// Column-stochastic matrix: a morphism dom -> cod with cod.size rows and
/// dom.size columns, every column a probability vector. Entries are stored
/// row-major.
class StochMatrix {
 public:
  StochMatrix(FinSetObj dom, FinSetObj cod, std::vector<RatVector> columns);

  static StochMatrix from_rows(FinSetObj dom, FinSetObj cod, std::vector<RatVector> rows);
  static StochMatrix identity(const FinSetObj& n);
  /// The unique morphism to the terminal object: one all-ones row.
  static StochMatrix bang(const FinSetObj& m);
  /// 0/1 matrix of a function dom -> cod given by images (0-based).
  static StochMatrix from_function(const FinSetObj& dom, const FinSetObj& cod,
                                   const std::vector<int>& image);

  const FinSetObj& dom() const { return dom_; }
  const FinSetObj& cod() const { return cod_; }
  int dom_size() const { return dom_.size; }
  int cod_size() const { return cod_.size; }

  const Rational& at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(dom_.size) +
                    static_cast<std::size_t>(col)];
  }
  RatVector column(int col) const;

  /// Shape and entries; labels are ignored.
  bool operator==(const StochMatrix& o) const;
  bool operator!=(const StochMatrix& o) const { return !(*this == o); }

 private:
  StochMatrix() = default;
  FinSetObj dom_;
  FinSetObj cod_;
  RatVector entries_;
};

/// Matrix product g*f, defined when f.cod and g.dom have equal size.
StochMatrix compose(const StochMatrix& g, const StochMatrix& f);

/// Kronecker product. Product sets are enumerated mixed-radix row-major
/// over the ordered factor list, first factor most significant.
StochMatrix kron(const StochMatrix& f, const StochMatrix& g);

/// Copairing [f, g]: (m+n) -> k by concatenating columns.
StochMatrix coproduct(const StochMatrix& f, const StochMatrix& g);

/// n -> n x n; column i is the Dirac at (i,i).
StochMatrix copy_matrix(const FinSetObj& n);

/// The symmetry m x n -> n x m as a permutation matrix.
StochMatrix swap_matrix(const FinSetObj& m, const FinSetObj& n);

/// True iff every codomain point is hit by some Dirac column.
bool is_surjective(const StochMatrix& f);

}  // namespace imprec
