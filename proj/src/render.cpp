#include "tlbasis/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace tlbasis {

namespace {

// Fixed two-decimal coordinates keep the output reproducible.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

constexpr double kSize = 400.0;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 150.0;
constexpr double kLabelRadius = 172.0;

struct Point {
  double x, y;
};

Point on_circle(int k, int points, double radius) {
  const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * (k - 1) / points;
  return {kCenter + radius * std::cos(angle), kCenter + radius * std::sin(angle)};
}

}  // namespace

std::string render_svg(const NoncrossingPartition& x) {
  const int points = x.rank() + 1;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kSize) << "\" height=\"" << num(kSize)
    << "\" viewBox=\"0 0 " << num(kSize) << ' ' << num(kSize) << "\">\n";
  s << "  <circle cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter) << "\" r=\"" << num(kRadius)
    << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (const auto& block : x.polygons()) {
    if (block.size() == 2) {
      const Point a = on_circle(block[0], points, kRadius);
      const Point b = on_circle(block[1], points, kRadius);
      s << "  <line class=\"edge\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\""
        << num(b.y) << "\" stroke=\"#1f4e79\" stroke-width=\"3\"/>\n";
      continue;
    }
    s << "  <polygon class=\"block\" points=\"";
    for (std::size_t k = 0; k < block.size(); ++k) {
      const Point p = on_circle(block[k], points, kRadius);
      s << (k ? " " : "") << num(p.x) << ',' << num(p.y);
    }
    s << "\" fill=\"#9dc3e6\" fill-opacity=\"0.7\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  }
  for (int k = 1; k <= points; ++k) {
    const Point p = on_circle(k, points, kRadius);
    const Point l = on_circle(k, points, kLabelRadius);
    s << "  <circle class=\"vertex\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"4\" fill=\"#000000\"/>\n";
    s << "  <text x=\"" << num(l.x) << "\" y=\"" << num(l.y)
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << k
      << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string render_svg(const TLDiagram& d) {
  const int points = d.rank() + 1;
  constexpr double kStep = 50.0, kMargin = 40.0, kTop = 40.0, kBottom = 200.0;
  const double width = 2 * kMargin + kStep * (points - 1);
  const double height = kBottom + kTop;
  auto px = [&](int label) { return kMargin + kStep * (label - 1); };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
    << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  s << "  <rect x=\"" << num(kMargin / 2) << "\" y=\"" << num(kTop) << "\" width=\"" << num(width - kMargin)
    << "\" height=\"" << num(kBottom - kTop) << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (const auto& [a, b] : d.pairs()) {
    const double xa = px(d.label(a)), xb = px(d.label(b));
    const double ya = d.is_top(a) ? kTop : kBottom, yb = d.is_top(b) ? kTop : kBottom;
    s << "  <path class=\"chord\" d=\"M " << num(xa) << ' ' << num(ya);
    if (d.is_top(a) != d.is_top(b)) {
      s << " L " << num(xb) << ' ' << num(yb);
    } else {
      const double depth = std::abs(xb - xa) * 0.6 * (d.is_top(a) ? 1 : -1);
      s << " C " << num(xa) << ' ' << num(ya + depth) << ' ' << num(xb) << ' ' << num(yb + depth) << ' ' << num(xb)
        << ' ' << num(yb);
    }
    s << "\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  }
  for (int p = 0; p < d.points(); ++p) {
    const double x = px(d.label(p));
    const double y = d.is_top(p) ? kTop : kBottom;
    s << "  <circle class=\"vertex\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"4\" fill=\"#000000\"/>\n";
    s << "  <text x=\"" << num(x) << "\" y=\"" << num(d.is_top(p) ? y - 14 : y + 20)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << point_label(d, p) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace tlbasis
