#include "imprec/elaborate.hpp"

#include <algorithm>

#include "imprec/errors.hpp"

namespace imprec {

namespace {

long long ctx_size(const Context& ctx) {
  long long s = 1;
  for (const auto& [name, type] : ctx) s *= type.size();
  return s;
}

FinSetObj ctx_obj(const Context& ctx) { return FinSetObj(static_cast<int>(ctx_size(ctx))); }

/// Last binding wins (shadowing).
std::size_t lookup(const Context& ctx, const std::string& name) {
  for (std::size_t i = ctx.size(); i-- > 0;)
    if (ctx[i].first == name) return i;
  throw TypeError("unbound variable: " + name);
}

/// Value of the variable at `pos` encoded in a context index (first
/// binding most significant).
int ctx_value_at(const Context& ctx, long long index, std::size_t pos) {
  int value = 0;
  for (std::size_t i = ctx.size(); i-- > 0;) {
    const long long s = ctx[i].second.size();
    const int v = static_cast<int>(index % s);
    index /= s;
    if (i == pos) value = v;
  }
  return value;
}

struct Inferred {
  Type type;
  Grade grade;
};

ProbVector choose_vector(const RatVector& weights) {
  if (weights.empty()) throw TypeError("choose needs at least one weight");
  for (const auto& w : weights)
    if (w < 0) throw TypeError("choose weights must be nonnegative");
  Rational sum = 0;
  for (const auto& w : weights) sum += w;
  if (sum != 1) throw TypeError("choose weights must sum to 1");
  return ProbVector(weights);
}

Inferred infer_node(const TermPtr& t, const Context& ctx) {
  return std::visit(
      [&](const auto& node) -> Inferred {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TVar>) {
          return {ctx[lookup(ctx, node.name)].second, Grade{}};
        } else if constexpr (std::is_same_v<T, TLet>) {
          const Inferred bound = infer_node(node.bound, ctx);
          Context extended = ctx;
          extended.emplace_back(node.var, bound.type);
          const Inferred body = infer_node(node.body, extended);
          return {body.type, Grade::disjoint_union(bound.grade, body.grade)};
        } else if constexpr (std::is_same_v<T, TIf>) {
          const Inferred cond = infer_node(node.cond, ctx);
          if (cond.type.size() != 2)
            throw TypeError("if scrutinee must be a two-element type, got " + cond.type.show());
          const Inferred then_b = infer_node(node.then_branch, ctx);
          const Inferred else_b = infer_node(node.else_branch, ctx);
          if (then_b.type.size() != else_b.type.size())
            throw TypeError("branch types differ: " + then_b.type.show() + " vs " +
                            else_b.type.show());
          const Grade w = Grade::merge_union(then_b.grade, else_b.grade);
          return {then_b.type, Grade::disjoint_union(cond.grade, w)};
        } else if constexpr (std::is_same_v<T, TPair>) {
          std::vector<Type> types;
          Grade grade;
          for (const auto& item : node.items) {
            const Inferred part = infer_node(item, ctx);
            types.push_back(part.type);
            grade = Grade::disjoint_union(grade, part.grade);
          }
          return {Type::prod(std::move(types)), grade};
        } else if constexpr (std::is_same_v<T, TBernoulli>) {
          return {Type::boolean(), Grade{}};
        } else if constexpr (std::is_same_v<T, TChoose>) {
          const auto p = choose_vector(node.weights);
          return {p.dim() == 2 ? Type::boolean() : Type::fin(p.dim()), Grade{}};
        } else if constexpr (std::is_same_v<T, TKnight>) {
          if (node.arity < 2) throw TypeError("knight arity must be >= 2");
          return {node.arity == 2 ? Type::boolean() : Type::fin(node.arity),
                  Grade::single(node.name, node.arity)};
        } else if constexpr (std::is_same_v<T, TCtor>) {
          if (node.index < 1 || node.index > node.type.size())
            throw TypeError("constructor index out of range");
          return {node.type, Grade{}};
        } else {
          static_assert(std::is_same_v<T, TFlip>);
          const Inferred body = infer_node(node.body, ctx);
          if (!body.grade.contains(node.site))
            throw GradeMismatchError("flip site " + node.site + " not drawn in the body");
          if (body.grade.arity_of(node.site) != 2)
            throw TypeError("flip needs a binary site");
          return {body.type, body.grade};
        }
      },
      t->node);
}

GradedMorphism elab(const TermPtr& t, const Context& ctx);

GradedMorphism elab_generator(const GradedMorphism& gen, const Context& ctx) {
  return gcompose(gen, g_bang(ctx_obj(ctx)));
}

// The let/if/tuple clauses below compute the composite columns directly
// instead of materializing copy/tensor intermediates; the categorical
// pipelines they collapse are pinned against them in the test suite.

// x <- bound ; body  ==  body . (Gamma (x) bound) . copy
GradedMorphism elab_let(const GradedMorphism& bound, const GradedMorphism& body,
                        const FinSetObj& gamma) {
  const Grade combined = Grade::disjoint_union(bound.grade, body.grade);
  const int a = bound.cod.size;
  const int out = body.cod.size;
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(combined.carrier()) *
               static_cast<std::size_t>(gamma.size));
  for (long long w = 0; w < combined.carrier(); ++w) {
    const long long wt = combined.restrict_index(bound.grade, w);
    const long long wu = combined.restrict_index(body.grade, w);
    for (int c = 0; c < gamma.size; ++c) {
      RatVector col(static_cast<std::size_t>(out), Rational(0));
      for (int v = 0; v < a; ++v) {
        const Rational& weight = bound.at(v, wt, c);
        if (weight == 0) continue;
        for (int o = 0; o < out; ++o) {
          const Rational& entry = body.at(o, wu, c * a + v);
          if (entry != 0) col[static_cast<std::size_t>(o)] += weight * entry;
        }
      }
      cols.push_back(std::move(col));
    }
  }
  StochMatrix m(FinSetObj(static_cast<int>(combined.carrier()) * gamma.size), body.cod,
                std::move(cols));
  return GradedMorphism(combined, gamma, body.cod, std::move(m));
}

// if cond then t else e  ==  [t, e] . (cond (x) Gamma) . copy, with both
// branches already weakened to a common grade.
GradedMorphism elab_if(const GradedMorphism& cond, const GradedMorphism& then_b,
                       const GradedMorphism& else_b, const FinSetObj& gamma) {
  const Grade combined = Grade::disjoint_union(cond.grade, then_b.grade);
  const int out = then_b.cod.size;
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(combined.carrier()) *
               static_cast<std::size_t>(gamma.size));
  for (long long w = 0; w < combined.carrier(); ++w) {
    const long long wb = combined.restrict_index(cond.grade, w);
    const long long ww = combined.restrict_index(then_b.grade, w);
    for (int c = 0; c < gamma.size; ++c) {
      const Rational& p_then = cond.at(0, wb, c);
      const Rational& p_else = cond.at(1, wb, c);
      RatVector col(static_cast<std::size_t>(out), Rational(0));
      for (int o = 0; o < out; ++o) {
        if (p_then != 0) col[static_cast<std::size_t>(o)] += p_then * then_b.at(o, ww, c);
        if (p_else != 0) col[static_cast<std::size_t>(o)] += p_else * else_b.at(o, ww, c);
      }
      cols.push_back(std::move(col));
    }
  }
  StochMatrix m(FinSetObj(static_cast<int>(combined.carrier()) * gamma.size), then_b.cod,
                std::move(cols));
  return GradedMorphism(combined, gamma, then_b.cod, std::move(m));
}

// (t1, ..., tk)  ==  (t1 (x) ... (x) tk) . copy^(k-1)
GradedMorphism elab_pair(const std::vector<GradedMorphism>& parts, const FinSetObj& gamma) {
  Grade combined;
  long long out = 1;
  for (const auto& part : parts) {
    combined = Grade::disjoint_union(combined, part.grade);
    out *= part.cod.size;
  }
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(combined.carrier()) *
               static_cast<std::size_t>(gamma.size));
  for (long long w = 0; w < combined.carrier(); ++w) {
    std::vector<long long> wk;
    wk.reserve(parts.size());
    for (const auto& part : parts) wk.push_back(combined.restrict_index(part.grade, w));
    for (int c = 0; c < gamma.size; ++c) {
      RatVector col{Rational(1)};
      for (std::size_t k = 0; k < parts.size(); ++k) {
        const int ak = parts[k].cod.size;
        RatVector next(col.size() * static_cast<std::size_t>(ak), Rational(0));
        for (std::size_t i = 0; i < col.size(); ++i) {
          if (col[i] == 0) continue;
          for (int e = 0; e < ak; ++e) {
            const Rational& entry = parts[k].at(e, wk[k], c);
            if (entry != 0) next[i * static_cast<std::size_t>(ak) +
                                 static_cast<std::size_t>(e)] = col[i] * entry;
          }
        }
        col = std::move(next);
      }
      cols.push_back(std::move(col));
    }
  }
  StochMatrix m(FinSetObj(static_cast<int>(combined.carrier()) * gamma.size),
                FinSetObj(static_cast<int>(out)), std::move(cols));
  return GradedMorphism(combined, gamma, FinSetObj(static_cast<int>(out)), std::move(m));
}

GradedMorphism elab(const TermPtr& t, const Context& ctx) {
  const FinSetObj gamma = ctx_obj(ctx);
  return std::visit(
      [&](const auto& node) -> GradedMorphism {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TVar>) {
          const std::size_t pos = lookup(ctx, node.name);
          const int target = static_cast<int>(ctx[pos].second.size());
          std::vector<int> image(static_cast<std::size_t>(gamma.size));
          for (long long c = 0; c < gamma.size; ++c)
            image[static_cast<std::size_t>(c)] = ctx_value_at(ctx, c, pos);
          return g_plain(StochMatrix::from_function(gamma, FinSetObj(target), image));
        } else if constexpr (std::is_same_v<T, TLet>) {
          const GradedMorphism bound = elab(node.bound, ctx);
          Context extended = ctx;
          extended.emplace_back(node.var, Type::fin(bound.cod.size));
          const GradedMorphism body = elab(node.body, extended);
          return elab_let(bound, body, gamma);
        } else if constexpr (std::is_same_v<T, TIf>) {
          const GradedMorphism cond = elab(node.cond, ctx);
          const GradedMorphism then_b = elab(node.then_branch, ctx);
          const GradedMorphism else_b = elab(node.else_branch, ctx);
          const Grade w = Grade::merge_union(then_b.grade, else_b.grade);
          return elab_if(cond, weaken_to(then_b, w), weaken_to(else_b, w), gamma);
        } else if constexpr (std::is_same_v<T, TPair>) {
          std::vector<GradedMorphism> parts;
          parts.reserve(node.items.size());
          for (const auto& item : node.items) parts.push_back(elab(item, ctx));
          return elab_pair(parts, gamma);
        } else if constexpr (std::is_same_v<T, TBernoulli>) {
          return elab_generator(bernoulli(), ctx);
        } else if constexpr (std::is_same_v<T, TChoose>) {
          return elab_generator(choose(choose_vector(node.weights)), ctx);
        } else if constexpr (std::is_same_v<T, TKnight>) {
          return elab_generator(knight(node.name, node.arity), ctx);
        } else if constexpr (std::is_same_v<T, TCtor>) {
          infer_node(t, ctx);
          return elab_generator(g_point(node.index, static_cast<int>(node.type.size())), ctx);
        } else {
          static_assert(std::is_same_v<T, TFlip>);
          const GradedMorphism body = elab(node.body, ctx);
          if (!body.grade.contains(node.site))
            throw GradeMismatchError("flip site " + node.site + " not drawn in the body");
          return regrade(body, GradeMap::flip(body.grade, node.site));
        }
      },
      t->node);
}

}  // namespace

TypedTerm infer(const TermPtr& term, const Context& context) {
  const Inferred res = infer_node(term, context);
  return TypedTerm{term, context, res.type, res.grade};
}

GradedMorphism elaborate_imp(const TypedTerm& tt) { return elab(tt.term, tt.context); }

namespace {

CredalSet cp_scatter(const CredalSet& s, const std::vector<int>& image, int new_dim) {
  std::vector<ProbVector> gens;
  gens.reserve(s.extremes().size());
  for (const auto& e : s.extremes()) {
    RatVector v(static_cast<std::size_t>(new_dim), Rational(0));
    for (int i = 0; i < s.dim(); ++i)
      v[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] += e.at(i);
    gens.emplace_back(std::move(v));
  }
  return CredalSet(new_dim, std::move(gens));
}

/// CP(A) x CP(B) -> CP(A x B): resolve the side named by `order` last.
CredalSet cp_pair(const CredalSet& s, const CredalSet& t, EvalOrder order) {
  const int a = s.dim();
  const int b = t.dim();
  const int ab = a * b;
  if (order == EvalOrder::LeftFirst) {
    std::vector<CredalSet> images;
    images.reserve(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) {
      std::vector<int> image(static_cast<std::size_t>(b));
      for (int j = 0; j < b; ++j) image[static_cast<std::size_t>(j)] = i * b + j;
      images.push_back(cp_scatter(t, image, ab));
    }
    return kleisli_extend(KlMorphism(FinSetObj(a), FinSetObj(ab), std::move(images)), s);
  }
  std::vector<CredalSet> images;
  images.reserve(static_cast<std::size_t>(b));
  for (int j = 0; j < b; ++j) {
    std::vector<int> image(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) image[static_cast<std::size_t>(i)] = i * b + j;
    images.push_back(cp_scatter(s, image, ab));
  }
  return kleisli_extend(KlMorphism(FinSetObj(b), FinSetObj(ab), std::move(images)), t);
}

KlMorphism cp_walk(const TermPtr& t, const Context& ctx, EvalOrder order) {
  const int dm = static_cast<int>(ctx_size(ctx));
  auto tabulate = [&](int cod, auto&& fn) {
    std::vector<CredalSet> images;
    images.reserve(static_cast<std::size_t>(dm));
    for (int c = 0; c < dm; ++c) images.push_back(fn(c));
    return KlMorphism(FinSetObj(dm), FinSetObj(cod), std::move(images));
  };
  return std::visit(
      [&](const auto& node) -> KlMorphism {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TVar>) {
          const std::size_t pos = lookup(ctx, node.name);
          const int target = static_cast<int>(ctx[pos].second.size());
          return tabulate(target, [&](int c) {
            return CredalSet::unit(ctx_value_at(ctx, c, pos) + 1, target);
          });
        } else if constexpr (std::is_same_v<T, TLet>) {
          const Type bound_type = infer_node(node.bound, ctx).type;
          const int a = static_cast<int>(bound_type.size());
          const KlMorphism bound = cp_walk(node.bound, ctx, order);
          Context extended = ctx;
          extended.emplace_back(node.var, bound_type);
          const KlMorphism body = cp_walk(node.body, extended, order);
          const int cod = body.cod.size;
          return tabulate(cod, [&](int c) {
            std::vector<CredalSet> images;
            images.reserve(static_cast<std::size_t>(a));
            for (int v = 0; v < a; ++v)
              images.push_back(body.images[static_cast<std::size_t>(c * a + v)]);
            return kleisli_extend(KlMorphism(FinSetObj(a), FinSetObj(cod), std::move(images)),
                                  bound.images[static_cast<std::size_t>(c)]);
          });
        } else if constexpr (std::is_same_v<T, TIf>) {
          const KlMorphism cond = cp_walk(node.cond, ctx, order);
          const KlMorphism then_b = cp_walk(node.then_branch, ctx, order);
          const KlMorphism else_b = cp_walk(node.else_branch, ctx, order);
          const int cod = then_b.cod.size;
          return tabulate(cod, [&](int c) {
            const KlMorphism branch(
                FinSetObj(2), FinSetObj(cod),
                {then_b.images[static_cast<std::size_t>(c)],
                 else_b.images[static_cast<std::size_t>(c)]});
            return kleisli_extend(branch, cond.images[static_cast<std::size_t>(c)]);
          });
        } else if constexpr (std::is_same_v<T, TPair>) {
          std::vector<KlMorphism> parts;
          parts.reserve(node.items.size());
          for (const auto& item : node.items) parts.push_back(cp_walk(item, ctx, order));
          KlMorphism acc = parts.front();
          for (std::size_t i = 1; i < parts.size(); ++i) {
            const int cod = acc.cod.size * parts[i].cod.size;
            const auto& rhs = parts[i];
            acc = tabulate(cod, [&](int c) {
              return cp_pair(acc.images[static_cast<std::size_t>(c)],
                             rhs.images[static_cast<std::size_t>(c)], order);
            });
          }
          return acc;
        } else if constexpr (std::is_same_v<T, TBernoulli>) {
          return tabulate(2, [&](int) { return CredalSet::singleton(ProbVector::uniform(2)); });
        } else if constexpr (std::is_same_v<T, TChoose>) {
          const auto p = choose_vector(node.weights);
          return tabulate(p.dim(), [&](int) { return CredalSet::singleton(p); });
        } else if constexpr (std::is_same_v<T, TKnight>) {
          // Names are invisible here; every draw ranges over the whole simplex.
          return tabulate(node.arity, [&](int) { return CredalSet::full_simplex(node.arity); });
        } else if constexpr (std::is_same_v<T, TCtor>) {
          const int size = static_cast<int>(node.type.size());
          return tabulate(size, [&](int) { return CredalSet::unit(node.index, size); });
        } else {
          static_assert(std::is_same_v<T, TFlip>);
          return cp_walk(node.body, ctx, order);
        }
      },
      t->node);
}

}  // namespace

TermPtr reorder_independent_lets(const TermPtr& t) {
  return std::visit(
      [&](const auto& node) -> TermPtr {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TLet>) {
          TermPtr bound = reorder_independent_lets(node.bound);
          TermPtr body = reorder_independent_lets(node.body);
          if (const auto* inner = std::get_if<TLet>(&body->node)) {
            // swap only when neither binding reads the other's variable,
            // so no reference is captured by the hoisted binder
            if (inner->var != node.var && !free_vars(inner->bound).count(node.var) &&
                !free_vars(bound).count(inner->var)) {
              return mk_let(inner->var, inner->bound,
                            reorder_independent_lets(mk_let(node.var, bound, inner->body)));
            }
          }
          return mk_let(node.var, std::move(bound), std::move(body));
        } else if constexpr (std::is_same_v<T, TIf>) {
          return mk_if(reorder_independent_lets(node.cond),
                       reorder_independent_lets(node.then_branch),
                       reorder_independent_lets(node.else_branch));
        } else if constexpr (std::is_same_v<T, TPair>) {
          std::vector<TermPtr> items;
          items.reserve(node.items.size());
          for (const auto& item : node.items) items.push_back(reorder_independent_lets(item));
          return mk_pair(std::move(items));
        } else if constexpr (std::is_same_v<T, TFlip>) {
          return mk_flip(node.site, reorder_independent_lets(node.body));
        } else {
          return t;
        }
      },
      t->node);
}

KlMorphism elaborate_cp(const TypedTerm& tt, EvalOrder order) {
  const TermPtr term =
      order == EvalOrder::RightFirst ? reorder_independent_lets(tt.term) : tt.term;
  return cp_walk(term, tt.context, order);
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("law side condition violated: " + what);
}

void require_fresh(const Context& ctx, const std::string& name) {
  for (const auto& [n, type] : ctx)
    require(n != name, "context already binds " + name);
}

GradedMorphism denote(const TermPtr& t, const Context& ctx) { return elaborate_imp(infer(t, ctx)); }

}  // namespace

bool check_associativity(const Context& ctx, const TermPtr& t, const TermPtr& u,
                         const TermPtr& v) {
  require_fresh(ctx, "x");
  require_fresh(ctx, "y");
  require(!free_vars(v).count("x"), "x must not be free in v");
  const TermPtr lhs = mk_let("x", t, mk_let("y", u, v));
  const TermPtr rhs = mk_let("y", mk_let("x", t, u), v);
  return denote(lhs, ctx) == denote(rhs, ctx);
}

bool check_commutativity(const Context& ctx, const TermPtr& t, const TermPtr& u,
                         const TermPtr& v) {
  require_fresh(ctx, "x");
  require_fresh(ctx, "y");
  require(!free_vars(u).count("x"), "x must not be free in u");
  require(!free_vars(t).count("y"), "y must not be free in t");
  const TermPtr lhs = mk_let("x", t, mk_let("y", u, v));
  const TermPtr rhs = mk_let("y", u, mk_let("x", t, v));
  return denote(lhs, ctx) == denote(rhs, ctx);
}

bool check_weakening(const Context& ctx, const TermPtr& t, const TermPtr& u) {
  require_fresh(ctx, "x");
  require(!free_vars(u).count("x"), "x must not be free in u");
  const GradedMorphism lhs = denote(mk_let("x", t, u), ctx);
  const GradedMorphism rhs = weaken_to(denote(u, ctx), lhs.grade);
  return lhs == rhs;
}

bool check_hoisting(const Context& ctx, const TermPtr& b, const TermPtr& t, const TermPtr& u,
                    const TermPtr& v) {
  require_fresh(ctx, "x");
  require(!free_vars(b).count("x"), "x must not be free in the scrutinee");
  const TermPtr lhs = mk_if(b, mk_let("x", t, u), mk_let("x", t, v));
  const TermPtr rhs = mk_let("x", t, mk_if(b, u, v));
  return denote(lhs, ctx) == denote(rhs, ctx);
}

}  // namespace imprec
