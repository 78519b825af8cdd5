#include "imprec/plot.hpp"

#include <algorithm>
#include <sstream>

#include "imprec/errors.hpp"

namespace imprec {

namespace {

const Rational kTopY(866025, 1000000);  // triangle height, six-decimal sqrt(3)/2
const Rational kScale(480);
const Rational kMargin(40);

Rational svg_x(const Rational& x) { return kMargin + x * kScale; }
Rational svg_y(const Rational& y) { return kMargin + (kTopY - y) * kScale; }

std::string coord(const Rational& x, const Rational& y) {
  return format_fixed(svg_x(x), 6) + "," + format_fixed(svg_y(y), 6);
}

using Pt = std::pair<Rational, Rational>;

/// Boundary (counterclockwise) order of a convex polygon's vertices:
/// exact angular sort around the centroid using halfplane + cross sign.
std::vector<Pt> boundary_order(std::vector<Pt> pts) {
  Rational cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += p.first;
    cy += p.second;
  }
  cx /= static_cast<int>(pts.size());
  cy /= static_cast<int>(pts.size());
  auto half = [&](const Pt& p) {
    const Rational dy = p.second - cy;
    const Rational dx = p.first - cx;
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const Pt& a, const Pt& b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    const Rational cross =
        (a.first - cx) * (b.second - cy) - (a.second - cy) * (b.first - cx);
    if (cross != 0) return cross > 0;
    return a < b;
  });
  return pts;
}

}  // namespace

std::pair<Rational, Rational> barycentric_point(const ProbVector& p) {
  if (p.dim() != 3) throw DomainError("barycentric embedding needs three outcomes");
  // corners: g = (0,0), b = (1,0), r = (1/2, kTopY)
  const Rational x = p.at(2) + p.at(0) / 2;
  const Rational y = p.at(0) * kTopY;
  return {x, y};
}

std::vector<std::pair<Rational, Rational>> barycentric_points(const CredalSet& s) {
  if (s.dim() != 3) throw DomainError("barycentric embedding needs three outcomes");
  std::vector<Pt> out;
  out.reserve(s.extremes().size());
  for (const auto& e : s.extremes()) out.push_back(barycentric_point(e));
  return out;
}

std::string simplex_svg(const CredalSet& s) {
  const auto pts = barycentric_points(s);
  std::ostringstream svg;
  const std::string width = format_fixed(2 * kMargin + kScale, 6);
  const std::string height = format_fixed(2 * kMargin + kTopY * kScale, 6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <polygon class=\"simplex\" points=\"" << coord(Rational(0), Rational(0)) << " "
      << coord(Rational(1), Rational(0)) << " " << coord(Rational(1, 2), kTopY)
      << "\" fill=\"none\" stroke=\"#808080\" stroke-width=\"1.5\"/>\n";
  svg << "  <text x=\"" << format_fixed(svg_x(Rational(1, 2)), 6) << "\" y=\""
      << format_fixed(svg_y(kTopY) - 10, 6) << "\" text-anchor=\"middle\">r</text>\n";
  svg << "  <text x=\"" << format_fixed(svg_x(Rational(0)) - 12, 6) << "\" y=\""
      << format_fixed(svg_y(Rational(0)) + 6, 6) << "\" text-anchor=\"end\">g</text>\n";
  svg << "  <text x=\"" << format_fixed(svg_x(Rational(1)) + 12, 6) << "\" y=\""
      << format_fixed(svg_y(Rational(0)) + 6, 6) << "\" text-anchor=\"start\">b</text>\n";
  if (pts.size() == 1) {
    svg << "  <circle class=\"region\" cx=\"" << format_fixed(svg_x(pts[0].first), 6)
        << "\" cy=\"" << format_fixed(svg_y(pts[0].second), 6)
        << "\" r=\"4\" fill=\"#334155\"/>\n";
  } else if (pts.size() == 2) {
    svg << "  <polyline class=\"region\" points=\"" << coord(pts[0].first, pts[0].second) << " "
        << coord(pts[1].first, pts[1].second)
        << "\" fill=\"none\" stroke=\"#334155\" stroke-width=\"3\"/>\n";
  } else {
    svg << "  <polygon class=\"region\" points=\"";
    const auto ordered = boundary_order(pts);
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      if (i) svg << " ";
      svg << coord(ordered[i].first, ordered[i].second);
    }
    svg << "\" fill=\"#33415533\" stroke=\"#334155\" stroke-width=\"2\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace imprec
