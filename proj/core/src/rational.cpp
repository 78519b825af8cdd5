#include "imprec/rational.hpp"

#include <algorithm>
#include <sstream>

#include "imprec/errors.hpp"

namespace imprec {

std::string to_string(const Rational& r) {
  // GMP prints canonical form and already omits "/1".
  return r.str();
}

Rational rational_from_string(std::string_view s) {
  if (s.empty()) throw DomainError("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(s)));
    }
    Integer num{std::string(s.substr(0, slash))};
    Integer den{std::string(s.substr(slash + 1))};
    if (den == 0) throw DomainError("zero denominator in rational literal");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw DomainError("malformed rational literal: " + std::string(s));
  }
}

std::string format_fixed(const Rational& r, int digits) {
  Integer pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  Integer num = numerator(r) * pow10;
  const Integer den = denominator(r);
  const bool neg = num < 0;
  if (neg) num = -num;
  // round half away from zero
  Integer q = num / den;
  if ((num % den) * 2 >= den) ++q;
  Integer ip = q / pow10;
  Integer fp = q % pow10;
  std::ostringstream out;
  if (neg && (ip != 0 || fp != 0)) out << '-';
  out << ip.str();
  if (digits > 0) {
    std::string frac = fp.str();
    out << '.' << std::string(digits - frac.size(), '0') << frac;
  }
  return out.str();
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

RatVector vec_add(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw ShapeError("vector dimensions differ");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector vec_scale(const Rational& c, const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

}  // namespace imprec
