#pragma once

#include <string>
#include <utility>
#include <vector>

#include "imprec/credal.hpp"

namespace imprec {

/// Barycentric embedding of a three-outcome distribution into the plane,
/// with corners g = (0,0), b = (1,0) and r = (1/2, 866025/1000000). All
/// coordinates stay rational; rounding happens only when rendering.
std::pair<Rational, Rational> barycentric_point(const ProbVector& p);

/// The extreme points of a three-outcome credal set, embedded, in
/// canonical (lexicographic) order.
std::vector<std::pair<Rational, Rational>> barycentric_points(const CredalSet& s);

/// SVG of the probability triangle with corners labelled r/g/b and the
/// credal region drawn on top: a dot for a single point, a segment for two
/// extreme points, a filled polygon otherwise. Coordinates are rendered at
/// six decimals from the exact rationals.
std::string simplex_svg(const CredalSet& s);

}  // namespace imprec
