#pragma once

/**
 * @file limitsets.hpp
 * @brief Limits of zeros for sequences f_n = sum_j alpha_j lambda_j^n.
 *
 * A point z is a limit of zeros iff either two of the |lambda_j(z)| tie and
 * strictly exceed all others, or a single |lambda_j(z)| is strictly largest
 * and alpha_j(z) = 0. This module classifies points against that criterion,
 * samples the resulting curves, and measures how far computed root clouds
 * sit from them.
 */

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "domroots/exactpoly.hpp"

namespace domroots {

struct ExpPolyTerm {
  IntPolynomial alpha;
  IntPolynomial lambda;
};

class ExpPolyFamily {
 public:
  /// Validates that every alpha and lambda is nonzero and that no two lambdas
  /// differ by a unimodular constant factor.
  explicit ExpPolyFamily(std::vector<ExpPolyTerm> terms, std::string name = "family");

  const std::vector<ExpPolyTerm>& terms() const { return terms_; }
  const std::string& name() const { return name_; }
  /// sum_j alpha_j lambda_j^n, expanded exactly.
  IntPolynomial member(unsigned n) const;
  /// Common roots of every member: roots of gcd(f_1, ..., f_{k+1}).
  const std::vector<std::complex<double>>& persistent_roots() const { return persistent_; }

 private:
  std::vector<ExpPolyTerm> terms_;
  std::string name_;
  std::vector<std::complex<double>> persistent_;
};

/// True if lambda_i = c lambda_j for a constant c with |c| = 1.
bool unimodular_multiple(const IntPolynomial& a, const IntPolynomial& b);

/// alpha = (2x+1, x^2, -2), lambda = (x(x+2), (x+1)^2, x)
ExpPolyFamily book_family();
/// alpha = (1, x), lambda = (x(x+2), (x+1)^2)
ExpPolyFamily friendship_family();

enum class Verdict {
  TiedDominantPair,       ///< two moduli tie and strictly dominate
  VanishingDominantAlpha,  ///< unique dominant modulus with alpha = 0
  SpecialPoint,           ///< root of every member
  BoundaryTie,            ///< three or more moduli tie at the top; not decided
  NotOnLimitSet,
};

std::string to_string(Verdict v);

struct LimitClassification {
  std::complex<double> point;
  Verdict verdict = Verdict::NotOnLimitSet;
  /// (|lambda_j(z)|, j) sorted by decreasing modulus.
  std::vector<std::pair<double, int>> moduli;
  /// Term indices of the tied pair (TiedDominantPair), ascending.
  std::optional<std::pair<int, int>> tied;
  /// Index of the strict maximum when there is one.
  std::optional<int> dominant;
  /// |alpha(z)| at the dominant index.
  double dominant_alpha = 0;
  /// Gap between the top modulus (or tied pair) and the next one.
  double margin = 0;

  bool on_limit_set() const {
    return verdict == Verdict::TiedDominantPair || verdict == Verdict::VanishingDominantAlpha ||
           verdict == Verdict::SpecialPoint;
  }
};

inline constexpr double kAnalyticEps = 1e-9;
inline constexpr double kSampleEps = 1e-6;

LimitClassification classify_point(const ExpPolyFamily& fam, std::complex<double> z, double eps = kAnalyticEps);

/// Samples of the three curve components of the book limit set plus its two
/// isolated points.
struct BookComponents {
  std::vector<std::complex<double>> c12;  ///< (a+1)^2 - b^2 = 1/2 with |x+1|^2 >= |x|
  std::vector<std::complex<double>> c13;  ///< (a+2)^2 + b^2 = 1 with |x| >= |x+1|^2
  std::vector<std::complex<double>> c23;  ///< ((a+1)^2+b^2)^2 = a^2+b^2 with |x+2| <= 1
  std::vector<std::complex<double>> special{{0.0, 0.0}, {-0.5, 0.0}};
};

/**
 * Parametric samples: the hyperbola by its imaginary part b in [-b_max, b_max],
 * the circle by angle, the quartic by polar angle about the origin. Samples
 * within eps of a dominance boundary are dropped; every kept sample is
 * re-validated by classify_point.
 */
BookComponents book_limit_components(int resolution, double b_max = 3.0, double eps = kSampleEps);

/// The same samples as connected runs, for drawing. A run ends where the
/// dominance filter drops a sample.
struct LimitPolyline {
  std::string component;
  std::vector<std::complex<double>> points;
};
std::vector<LimitPolyline> book_limit_polylines(int resolution, double b_max = 3.0, double eps = kSampleEps);
/// Both branches of the hyperbola |x(x+2)| = |x+1|^2, the friendship limit curve.
std::vector<LimitPolyline> friendship_limit_polylines(int resolution, double b_max = 3.0, double eps = kSampleEps);

/// Residual of each Cartesian curve equation at a point.
double hyperbola_residual(std::complex<double> z);  // (a+1)^2 - b^2 - 1/2
double circle_residual(std::complex<double> z);     // (a+2)^2 + b^2 - 1
double quartic_residual(std::complex<double> z);    // ((a+1)^2+b^2)^2 - (a^2+b^2)

/// a + b sqrt(d) with rational a, b and squarefree d > 1 (or b = 0).
class QuadraticSurd {
 public:
  QuadraticSurd(mpq_class a = 0, mpq_class b = 0, long d = 1);

  const mpq_class& rational() const { return a_; }
  const mpq_class& surd_coeff() const { return b_; }
  long radicand() const { return d_; }

  int sign() const;
  double to_double() const;
  std::string to_string() const;

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd abs(const QuadraticSurd& x);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() == 0; }

 private:
  mpq_class a_, b_;
  long d_;
};

struct RealIntersection {
  std::string label;      ///< e.g. "(-3-sqrt5)/2"
  std::string component;  ///< "C12", "C13", "C23" or "special"
  QuadraticSurd value;
  std::string equation;  ///< defining equation checked exactly
  bool equation_holds = false;
  /// Dominance inequality of the component, evaluated exactly; the margin is
  /// (dominating side) - (dominated side).
  std::string dominance;
  bool dominance_holds = false;
  QuadraticSurd dominance_margin;
  LimitClassification classification;
};

/**
 * Real-axis points where the book limit-set curves meet the real line:
 * 0, -1/2, -1 +- 1/sqrt2, -1, -3 and (-3 - sqrt5)/2, each checked against its
 * curve equation and dominance condition in exact surd arithmetic.
 */
std::vector<RealIntersection> book_real_intersections();

/// (-3 + sqrt5)/2 solves the C23 equation but fails |x+2| <= 1.
RealIntersection book_c23_excluded_candidate();

/**
 * Generic limit-set sampler: scans horizontal and vertical grid lines over a
 * window, locates sign changes of |lambda_i| - |lambda_j| for each pair, refines
 * them by bisection and keeps crossings where the pair strictly dominates.
 * Isolated points (vanishing dominant alpha, persistent roots) are appended.
 */
std::vector<std::complex<double>> sample_limit_set(const ExpPolyFamily& fam, std::complex<double> lower_left,
                                                   std::complex<double> upper_right, int lines,
                                                   double eps = kSampleEps);

struct RootCloudDistance {
  int n = 0;
  double max_distance = 0;  ///< over non-excluded nonzero roots
  double mean_distance = 0;
  /// Same maximum restricted to roots with |z| <= compact_radius. The largest
  /// roots escape to infinity as n grows, so only this restricted value can
  /// be expected to shrink.
  double compact_radius = 2.5;
  double max_distance_compact = 0;
  std::size_t roots_measured = 0;
  std::size_t limit_samples = 0;
};

/// Largest distance from a nonzero, non-persistent root of f_n to the sampled
/// limit set. The window covers the root cloud with a margin.
RootCloudDistance root_cloud_distance(const ExpPolyFamily& fam, int n, int lines = 600, double compact_radius = 2.5);

}  // namespace domroots
