#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "imprec/rational.hpp"

namespace imprec {

/// Surface types. Sizes drive the semantics; two types are interchangeable
/// when their sizes agree (the target category is skeletal), so `bool`,
/// `fin(2)` and `1+1` denote the same object.
class Type {
 public:
  static Type unit();
  static Type boolean();
  static Type three();
  static Type fin(int n);
  static Type sum(std::vector<Type> parts);
  static Type prod(std::vector<Type> parts);

  long long size() const;
  std::string show() const;

  bool same_size(const Type& o) const { return size() == o.size(); }

 private:
  enum class Kind { Unit, Bool, Three, Fin, Sum, Prod };
  Kind kind_ = Kind::Unit;
  int fin_size_ = 0;
  std::vector<Type> parts_;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct TVar {
  std::string name;
};
struct TLet {
  std::string var;
  TermPtr bound;
  TermPtr body;
};
struct TIf {
  TermPtr cond;
  TermPtr then_branch;
  TermPtr else_branch;
};
struct TPair {
  std::vector<TermPtr> items;  // >= 2
};
struct TBernoulli {};
struct TChoose {
  RatVector weights;
};
struct TKnight {
  std::string name;
  int arity = 2;
};
struct TCtor {
  int index = 1;  // 1-based
  Type type;
  std::string shown;  // surface spelling: "true", "r", "inj 2 of 4", ...
};
struct TFlip {
  std::string site;
  TermPtr body;
};

struct Term {
  std::variant<TVar, TLet, TIf, TPair, TBernoulli, TChoose, TKnight, TCtor, TFlip> node;
};

TermPtr mk_var(std::string name);
TermPtr mk_let(std::string var, TermPtr bound, TermPtr body);
TermPtr mk_if(TermPtr cond, TermPtr then_branch, TermPtr else_branch);
TermPtr mk_pair(std::vector<TermPtr> items);
TermPtr mk_bernoulli();
TermPtr mk_choose(RatVector weights);
TermPtr mk_knight(std::string name, int arity = 2);
TermPtr mk_ctor(int index, Type type, std::string shown);
TermPtr mk_flip(std::string site, TermPtr body);

TermPtr mk_true();
TermPtr mk_false();
TermPtr mk_r();
TermPtr mk_g();
TermPtr mk_b();
TermPtr mk_inj(int index, int of);

/// if bernoulli then t else u
TermPtr prob_mix(TermPtr t, TermPtr u);
/// if knight(site) then t else u
TermPtr named_mix(const std::string& site, TermPtr t, TermPtr u);

std::set<std::string> free_vars(const TermPtr& t);

/// Source text that parses back to an equal tree.
std::string pretty(const TermPtr& t);

bool term_equal(const TermPtr& a, const TermPtr& b);

}  // namespace imprec
