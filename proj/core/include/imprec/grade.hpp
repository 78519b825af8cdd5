#pragma once

#include <map>
#include <string>
#include <vector>

#include "imprec/finstoch.hpp"

namespace imprec {

/// One named nondeterministic choice: an urn with `arity` distinguishable
/// balls, drawn exactly once per run.
struct ChoiceSite {
  std::string name;
  int arity = 2;  // >= 2

  bool operator==(const ChoiceSite& o) const { return name == o.name && arity == o.arity; }
  bool operator<(const ChoiceSite& o) const {
    return name < o.name || (name == o.name && arity < o.arity);
  }
};

/// A finite set of named choice sites. Sites are kept sorted by name, so
/// equal name sets always produce the same carrier enumeration and the
/// coherence reindexings between unions of disjoint grades are identities.
class Grade {
 public:
  Grade() = default;  // empty grade, carrier 1
  static Grade single(const std::string& name, int arity);
  static Grade of(std::vector<ChoiceSite> sites);

  const std::vector<ChoiceSite>& sites() const { return sites_; }
  bool empty() const { return sites_.empty(); }
  bool contains(const std::string& name) const;
  int arity_of(const std::string& name) const;  // DomainError if absent

  /// Product of the site arities; 1 for the empty grade. The carrier is
  /// enumerated mixed-radix over the sorted site list, first site most
  /// significant.
  long long carrier() const;
  FinSetObj carrier_obj() const;

  bool disjoint_with(const Grade& o) const;
  /// Union requiring disjoint name sets; throws NameClashError.
  static Grade disjoint_union(const Grade& a, const Grade& b);
  /// Union where a shared name denotes the same site; conflicting arities
  /// throw NameClashError.
  static Grade merge_union(const Grade& a, const Grade& b);
  /// True iff every site of `sub` occurs here with the same arity.
  bool contains_all(const Grade& sub) const;

  std::vector<int> decode(long long index) const;
  long long encode(const std::vector<int>& values) const;
  /// Image of a carrier index under the canonical projection onto a
  /// subgrade (drop the sites not in `sub`).
  long long restrict_index(const Grade& sub, long long index) const;

  bool operator==(const Grade& o) const { return sites_ == o.sites_; }
  bool operator!=(const Grade& o) const { return !(*this == o); }

 private:
  std::vector<ChoiceSite> sites_;
};

/// A morphism of grades: a surjective stochastic matrix between carriers,
/// oriented src -> dst so that it reindexes morphisms at grade dst to
/// morphisms at grade src.
class GradeMap {
 public:
  GradeMap(Grade src, Grade dst, StochMatrix matrix);

  static GradeMap identity(const Grade& g);
  /// Canonical projection carrier(from) -> carrier(onto) for onto <= from.
  static GradeMap projection(const Grade& from, const Grade& onto);
  /// Swap the two ball labels of a binary site (arity 2 only).
  static GradeMap flip(const Grade& g, const std::string& site);
  /// Relabel the balls of one site by a permutation of 0..arity-1.
  static GradeMap site_permutation(const Grade& g, const std::string& site,
                                   const std::vector<int>& perm);
  /// The map induced by renaming sites: dst site `d` reads the value of src
  /// site `rename[d]` (a deterministic surjection of carriers; arities must
  /// match). This is the nominal-injection fragment of the grade category.
  static GradeMap rename_induced(const Grade& src, const Grade& dst,
                                 const std::map<std::string, std::string>& rename);

  const Grade& src() const { return src_; }
  const Grade& dst() const { return dst_; }
  const StochMatrix& matrix() const { return matrix_; }

 private:
  Grade src_;
  Grade dst_;
  StochMatrix matrix_;
};

}  // namespace imprec
