#include "domroots/svgplot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "domroots/report.hpp"

namespace domroots {

namespace {

std::string fixed2(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  std::string s(buf, res.ptr);
  return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* curve_colour(const std::string& component) {
  if (component == "C12") return "#1f77b4";
  if (component == "C13") return "#2ca02c";
  if (component == "C23") return "#9467bd";
  return "#1f77b4";
}

}  // namespace

std::string render_svg(const SvgPlot& plot) {
  const double x0 = plot.lower_left.real(), y0 = plot.lower_left.imag();
  const double x1 = plot.upper_right.real(), y1 = plot.upper_right.imag();
  if (!(x1 > x0 && y1 > y0)) throw std::invalid_argument("render_svg: empty window");
  const double w = plot.pixels, h = plot.pixels;
  const double margin = 30;
  const double sx = (w - 2 * margin) / (x1 - x0), sy = (h - 2 * margin) / (y1 - y0);
  auto px = [&](double x) { return fixed2(margin + (x - x0) * sx); };
  auto py = [&](double y) { return fixed2(h - margin - (y - y0) * sy); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.pixels << "\" height=\"" << plot.pixels
     << "\" viewBox=\"0 0 " << plot.pixels << ' ' << plot.pixels << "\">\n";
  os << "<title>" << escape(plot.title) << "</title>\n";
  os << "<defs><clipPath id=\"window\"><rect x=\"" << fixed2(margin) << "\" y=\"" << fixed2(margin) << "\" width=\""
     << fixed2(w - 2 * margin) << "\" height=\"" << fixed2(h - 2 * margin) << "\"/></clipPath></defs>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << plot.pixels << "\" height=\"" << plot.pixels << "\" fill=\"white\"/>\n";
  os << "<g clip-path=\"url(#window)\">\n";
  if (y0 < 0 && y1 > 0)
    os << "<line class=\"axis\" x1=\"" << px(x0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x1) << "\" y2=\"" << py(0)
       << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  if (x0 < 0 && x1 > 0)
    os << "<line class=\"axis\" x1=\"" << px(0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(y1)
       << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  if (plot.circle_radius) {
    os << "<ellipse class=\"bound\" cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" rx=\"" << fixed2(*plot.circle_radius * sx)
       << "\" ry=\"" << fixed2(*plot.circle_radius * sy) << "\" fill=\"none\" stroke=\"#d62728\" stroke-dasharray=\"6 4\""
       << " data-radius=\"" << format_number(*plot.circle_radius) << "\"/>\n";
  }
  for (const LimitPolyline& line : plot.curves) {
    if (line.points.size() < 2) continue;
    os << "<polyline class=\"limit " << escape(line.component) << "\" fill=\"none\" stroke=\""
       << curve_colour(line.component) << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < line.points.size(); ++i)
      os << (i ? " " : "") << px(line.points[i].real()) << ',' << py(line.points[i].imag());
    os << "\"/>\n";
  }
  for (const auto& z : plot.roots)
    os << "<circle class=\"root\" cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag())
       << "\" r=\"2.5\" fill=\"black\"/>\n";
  for (const auto& z : plot.special_points)
    os << "<circle class=\"special\" cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag())
       << "\" r=\"4\" fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"2\"/>\n";
  os << "</g>\n";
  os << "<text x=\"" << fixed2(margin) << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">"
     << escape(plot.title) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

SvgPlot family_plot(const FamilyId& id, const SolverOptions& options) {
  if (id.kind == FamilyKind::CoronaBF) throw std::invalid_argument("plots are available for friendship and book graphs");
  SvgPlot plot;
  const RootSet rs = all_roots(family_poly(id), options, id.name());
  for (const auto& r : rs.roots) plot.roots.push_back(r.value.to_std());
  double extent = 3.0;
  for (const auto& z : plot.roots) extent = std::max({extent, std::abs(z.real() + 1) + 0.5, std::abs(z.imag()) + 0.5});
  if (id.kind == FamilyKind::Friendship) {
    const double radius = explicit_bound(id.n).to_double();
    plot.circle_radius = radius;
    extent = std::max(extent, radius + 0.5);
    plot.title = "Zeros of D(" + id.name() + ", z) with |z| = 1 + sqrt(" + std::to_string(id.n) + "/ln 2)";
    plot.curves = friendship_limit_polylines(801, std::ceil(extent) + 1);
    plot.special_points = {{0.0, 0.0}};
  } else {
    plot.title = "Zeros of D(" + id.name() + ", z) with the limit curves C12, C13, C23";
    plot.curves = book_limit_polylines(801, std::ceil(extent) + 1);
    plot.special_points = {{0.0, 0.0}, {-0.5, 0.0}};
  }
  extent = std::ceil(extent);
  plot.lower_left = {-1 - extent, -extent};
  plot.upper_right = {-1 + extent, extent};
  return plot;
}

}  // namespace domroots
