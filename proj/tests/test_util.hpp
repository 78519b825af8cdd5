#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "imprec/elaborate.hpp"
#include "imprec/parser.hpp"

namespace testutil {

inline imprec::Rational rat(const std::string& s) { return imprec::rational_from_string(s); }

inline imprec::RatVector rvec(std::initializer_list<const char*> xs) {
  imprec::RatVector v;
  for (const char* x : xs) v.push_back(rat(x));
  return v;
}

inline imprec::ProbVector pv(std::initializer_list<const char*> xs) {
  return imprec::ProbVector(rvec(xs));
}

inline imprec::StochMatrix rows(int m, int n, std::initializer_list<const char*> entries) {
  std::vector<imprec::RatVector> rws;
  imprec::RatVector row;
  for (const char* e : entries) {
    row.push_back(rat(e));
    if (static_cast<int>(row.size()) == m) {
      rws.push_back(row);
      row.clear();
    }
  }
  return imprec::StochMatrix::from_rows(imprec::FinSetObj(m), imprec::FinSetObj(n), rws);
}

inline imprec::GradedMorphism denote(const std::string& source) {
  return imprec::elaborate_imp(imprec::infer(imprec::parse(source)));
}

inline imprec::GradedMorphism denote_in(const std::string& source, const imprec::Context& ctx) {
  return imprec::elaborate_imp(imprec::infer(imprec::parse(source), ctx));
}

inline imprec::GradedMorphism denote_term(const imprec::TermPtr& t) {
  return imprec::elaborate_imp(imprec::infer(t));
}

// Sources used across suites: the two worked programs whose graded
// denotations are fixed by hand, and the endpoints of the equational
// rewrite chain between them.
inline const char* kSharedUrn =
    "z <- bernoulli ; if z then (x <- knight(a1) ; if x then r else g)"
    " else (y <- knight(a1) ; if y then r else b)";
inline const char* kSplitUrns =
    "z <- bernoulli ; if z then (x <- knight(a1) ; if x then r else g)"
    " else (y <- knight(a2) ; if y then r else b)";
inline const char* kUrnThenCoin =
    "x <- knight(a1) ; z <- bernoulli ;"
    " if z then (if x then r else g) else (if x then r else b)";
inline const char* kTwoUrnsThenCoin =
    "x <- knight(a1) ; y <- knight(a2) ; z <- bernoulli ;"
    " if z then (if x then r else g) else (if y then r else b)";
inline const char* kDerivationStart =
    "z <- bernoulli ; if z then (x <- knight(a1) ; if x then r else g)"
    " else (x <- knight(a2) ; if x then r else b)";

}  // namespace testutil
