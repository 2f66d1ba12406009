#pragma once

/**
 * @file svgplot.hpp
 * @brief Deterministic SVG root plots with limit curves overlaid.
 */

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "domroots/complexroots.hpp"
#include "domroots/families.hpp"
#include "domroots/limitsets.hpp"

namespace domroots {

struct SvgPlot {
  std::string title;
  std::complex<double> lower_left{-1, -1};
  std::complex<double> upper_right{1, 1};
  std::vector<std::complex<double>> roots;
  std::vector<LimitPolyline> curves;
  std::vector<std::complex<double>> special_points;
  std::optional<double> circle_radius;  ///< centred at the origin
  int pixels = 640;
};

/// Same input, same bytes: coordinates are written with fixed two-decimal
/// formatting and no timestamps or ids.
std::string render_svg(const SvgPlot& plot);

/// Roots of a friendship or book polynomial with its limit curves; the
/// friendship plot also carries the circle |z| = 1 + sqrt(n / ln 2).
SvgPlot family_plot(const FamilyId& id, const SolverOptions& options = {});

}  // namespace domroots
