#include "imprec/ast.hpp"

#include <sstream>

#include "imprec/errors.hpp"

namespace imprec {

Type Type::unit() { return Type{}; }

Type Type::boolean() {
  Type t;
  t.kind_ = Kind::Bool;
  return t;
}

Type Type::three() {
  Type t;
  t.kind_ = Kind::Three;
  return t;
}

Type Type::fin(int n) {
  if (n < 1) throw DomainError("fin type needs size >= 1");
  Type t;
  t.kind_ = Kind::Fin;
  t.fin_size_ = n;
  return t;
}

Type Type::sum(std::vector<Type> parts) {
  if (parts.empty()) throw DomainError("sum type needs at least one part");
  Type t;
  t.kind_ = Kind::Sum;
  t.parts_ = std::move(parts);
  return t;
}

Type Type::prod(std::vector<Type> parts) {
  if (parts.empty()) throw DomainError("product type needs at least one part");
  Type t;
  t.kind_ = Kind::Prod;
  t.parts_ = std::move(parts);
  return t;
}

long long Type::size() const {
  switch (kind_) {
    case Kind::Unit:
      return 1;
    case Kind::Bool:
      return 2;
    case Kind::Three:
      return 3;
    case Kind::Fin:
      return fin_size_;
    case Kind::Sum: {
      long long s = 0;
      for (const auto& p : parts_) s += p.size();
      return s;
    }
    case Kind::Prod: {
      long long s = 1;
      for (const auto& p : parts_) s *= p.size();
      return s;
    }
  }
  return 1;
}

std::string Type::show() const {
  switch (kind_) {
    case Kind::Unit:
      return "Unit";
    case Kind::Bool:
      return "Bool";
    case Kind::Three:
      return "Three";
    case Kind::Fin:
      return "Fin(" + std::to_string(fin_size_) + ")";
    case Kind::Sum:
    case Kind::Prod: {
      std::string sep = kind_ == Kind::Sum ? " + " : " * ";
      std::string out = "(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += sep;
        out += parts_[i].show();
      }
      return out + ")";
    }
  }
  return "Unit";
}

TermPtr mk_var(std::string name) { return std::make_shared<Term>(Term{TVar{std::move(name)}}); }
TermPtr mk_let(std::string var, TermPtr bound, TermPtr body) {
  return std::make_shared<Term>(Term{TLet{std::move(var), std::move(bound), std::move(body)}});
}
TermPtr mk_if(TermPtr cond, TermPtr then_branch, TermPtr else_branch) {
  return std::make_shared<Term>(
      Term{TIf{std::move(cond), std::move(then_branch), std::move(else_branch)}});
}
TermPtr mk_pair(std::vector<TermPtr> items) {
  if (items.size() < 2) throw DomainError("tuples need at least two components");
  return std::make_shared<Term>(Term{TPair{std::move(items)}});
}
TermPtr mk_bernoulli() { return std::make_shared<Term>(Term{TBernoulli{}}); }
TermPtr mk_choose(RatVector weights) {
  return std::make_shared<Term>(Term{TChoose{std::move(weights)}});
}
TermPtr mk_knight(std::string name, int arity) {
  return std::make_shared<Term>(Term{TKnight{std::move(name), arity}});
}
TermPtr mk_ctor(int index, Type type, std::string shown) {
  return std::make_shared<Term>(Term{TCtor{index, std::move(type), std::move(shown)}});
}
TermPtr mk_flip(std::string site, TermPtr body) {
  return std::make_shared<Term>(Term{TFlip{std::move(site), std::move(body)}});
}

TermPtr mk_true() { return mk_ctor(1, Type::boolean(), "true"); }
TermPtr mk_false() { return mk_ctor(2, Type::boolean(), "false"); }
TermPtr mk_r() { return mk_ctor(1, Type::three(), "r"); }
TermPtr mk_g() { return mk_ctor(2, Type::three(), "g"); }
TermPtr mk_b() { return mk_ctor(3, Type::three(), "b"); }
TermPtr mk_inj(int index, int of) {
  return mk_ctor(index, Type::fin(of),
                 "inj " + std::to_string(index) + " of " + std::to_string(of));
}

TermPtr prob_mix(TermPtr t, TermPtr u) { return mk_if(mk_bernoulli(), std::move(t), std::move(u)); }
TermPtr named_mix(const std::string& site, TermPtr t, TermPtr u) {
  return mk_if(mk_knight(site, 2), std::move(t), std::move(u));
}

namespace {

void collect_free(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TVar>) {
          if (!bound.count(node.name)) out.insert(node.name);
        } else if constexpr (std::is_same_v<T, TLet>) {
          collect_free(node.bound, bound, out);
          const bool fresh = bound.insert(node.var).second;
          collect_free(node.body, bound, out);
          if (fresh) bound.erase(node.var);
        } else if constexpr (std::is_same_v<T, TIf>) {
          collect_free(node.cond, bound, out);
          collect_free(node.then_branch, bound, out);
          collect_free(node.else_branch, bound, out);
        } else if constexpr (std::is_same_v<T, TPair>) {
          for (const auto& item : node.items) collect_free(item, bound, out);
        } else if constexpr (std::is_same_v<T, TFlip>) {
          collect_free(node.body, bound, out);
        }
      },
      t->node);
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

namespace {

void print(const TermPtr& t, std::ostream& os) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TVar>) {
          os << node.name;
        } else if constexpr (std::is_same_v<T, TLet>) {
          os << node.var << " <- ";
          print(node.bound, os);
          os << " ; ";
          print(node.body, os);
        } else if constexpr (std::is_same_v<T, TIf>) {
          os << "if ";
          print(node.cond, os);
          os << " then (";
          print(node.then_branch, os);
          os << ") else (";
          print(node.else_branch, os);
          os << ")";
        } else if constexpr (std::is_same_v<T, TPair>) {
          os << "(";
          for (std::size_t i = 0; i < node.items.size(); ++i) {
            if (i) os << ", ";
            print(node.items[i], os);
          }
          os << ")";
        } else if constexpr (std::is_same_v<T, TBernoulli>) {
          os << "bernoulli";
        } else if constexpr (std::is_same_v<T, TChoose>) {
          os << "choose [";
          for (std::size_t i = 0; i < node.weights.size(); ++i) {
            if (i) os << ", ";
            os << to_string(node.weights[i]);
          }
          os << "]";
        } else if constexpr (std::is_same_v<T, TKnight>) {
          os << "knight(" << node.name;
          if (node.arity != 2) os << ":" << node.arity;
          os << ")";
        } else if constexpr (std::is_same_v<T, TCtor>) {
          os << node.shown;
        } else if constexpr (std::is_same_v<T, TFlip>) {
          os << "flip(" << node.site << ")(";
          print(node.body, os);
          os << ")";
        }
      },
      t->node);
}

}  // namespace

std::string pretty(const TermPtr& t) {
  std::ostringstream os;
  print(t, os);
  return os.str();
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& na) {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b->node);
        if constexpr (std::is_same_v<T, TVar>) {
          return na.name == nb.name;
        } else if constexpr (std::is_same_v<T, TLet>) {
          return na.var == nb.var && term_equal(na.bound, nb.bound) &&
                 term_equal(na.body, nb.body);
        } else if constexpr (std::is_same_v<T, TIf>) {
          return term_equal(na.cond, nb.cond) && term_equal(na.then_branch, nb.then_branch) &&
                 term_equal(na.else_branch, nb.else_branch);
        } else if constexpr (std::is_same_v<T, TPair>) {
          if (na.items.size() != nb.items.size()) return false;
          for (std::size_t i = 0; i < na.items.size(); ++i)
            if (!term_equal(na.items[i], nb.items[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, TBernoulli>) {
          return true;
        } else if constexpr (std::is_same_v<T, TChoose>) {
          return na.weights == nb.weights;
        } else if constexpr (std::is_same_v<T, TKnight>) {
          return na.name == nb.name && na.arity == nb.arity;
        } else if constexpr (std::is_same_v<T, TCtor>) {
          return na.index == nb.index && na.type.size() == nb.type.size();
        } else if constexpr (std::is_same_v<T, TFlip>) {
          return na.site == nb.site && term_equal(na.body, nb.body);
        }
      },
      a->node);
}

}  // namespace imprec
