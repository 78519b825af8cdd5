#pragma once

#include <utility>

#include "imprec/ast.hpp"
#include "imprec/bridge.hpp"
#include "imprec/credal.hpp"
#include "imprec/imp.hpp"

namespace imprec {

using Context = std::vector<std::pair<std::string, Type>>;

/// A term together with its context, inferred type and synthesized grade.
/// Grade synthesis: draws and constants carry the empty grade, knight(a:k)
/// carries {a:k}, sequencing takes the disjoint union, and an if-branch
/// pair is weakened to the union of the branch grades (a name shared by
/// the two branches is the same urn; the branches exclude each other, so
/// one draw serves both).
struct TypedTerm {
  TermPtr term;
  Context context;
  Type type;
  Grade grade;
};

TypedTerm infer(const TermPtr& term, const Context& context = {});

/// Denotation in the graded category: a morphism [[context]] -> [[type]]
/// at the synthesized grade. Closed terms give dom = 1.
GradedMorphism elaborate_imp(const TypedTerm& tt);

enum class EvalOrder {
  LeftFirst,   // bindings run in program order
  RightFirst,  // later independent bindings run first; tuples right-to-left
};

/// Denotation in the Kleisli category of the convex powerset. Names are
/// ignored: every knight draws from the whole simplex independently, so
/// this semantics is sensitive to evaluation order, which is exactly what
/// the order flag exposes.
KlMorphism elaborate_cp(const TypedTerm& tt, EvalOrder order = EvalOrder::LeftFirst);

/// The binding reordering used by EvalOrder::RightFirst: hoists a later
/// binding over an earlier one whenever it does not depend on it.
TermPtr reorder_independent_lets(const TermPtr& t);

enum class Law { Associativity, Commutativity, Weakening, Hoisting };

/// x <- t ; y <- u ; v   ==   y <- (x <- t ; u) ; v
/// with u typed in context+x and v in context+y (x not free in v).
bool check_associativity(const Context& ctx, const TermPtr& t, const TermPtr& u,
                         const TermPtr& v);

/// x <- t ; y <- u ; v   ==   y <- u ; x <- t ; v
/// with x not free in u and y not free in t.
bool check_commutativity(const Context& ctx, const TermPtr& t, const TermPtr& u,
                         const TermPtr& v);

/// x <- t ; u   ==   u  weakened by the projection, for x not free in u.
bool check_weakening(const Context& ctx, const TermPtr& t, const TermPtr& u);

/// if b then (x <- t ; u) else (x <- t ; v)   ==   x <- t ; if b then u else v
/// with x not free in b.
bool check_hoisting(const Context& ctx, const TermPtr& b, const TermPtr& t, const TermPtr& u,
                    const TermPtr& v);

}  // namespace imprec
