#pragma once

/**
 * @file complexroots.hpp
 * @brief Complete complex root sets by simultaneous (Aberth) iteration, and
 *        the modulus bounds for friendship-graph roots.
 */

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "domroots/exactpoly.hpp"
#include "domroots/mpreal.hpp"

namespace domroots {

struct ComplexRoot {
  Complex value;
  double residual = 0;   ///< |p(z)| / max|c_i|
  int multiplicity = 1;  ///< size of the cluster this root belongs to
};

struct RootSet {
  std::string label;
  std::vector<ComplexRoot> roots;  ///< one entry per root counted with multiplicity, sorted by (re, im)
  mpfr_prec_t precision_bits = 0;
  unsigned zero_multiplicity = 0;
  int sweeps = 0;                      ///< simultaneous-iteration sweeps used
  std::vector<std::string> anomalies;  ///< nonzero clusters, reported not fatal

  std::size_t size() const { return roots.size(); }
  double max_modulus() const;
  double max_residual() const;
};

class RootSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverOptions {
  mpfr_prec_t precision_bits = 256;
  int max_sweeps = 500;
  double phase_offset = 0.4;        ///< radians, breaks the symmetry of the start circle
  double cluster_tolerance = 1e-6;  ///< relative
  double residual_tolerance = 1e-10;
};

/**
 * All complex roots of p. Roots at x = 0 are removed exactly and re-appended
 * with their exact multiplicity; the rest start on an equiangular circle and
 * are iterated in double precision, then at `precision_bits`, then polished by
 * Newton steps. Throws RootSolveError if residuals stay above tolerance.
 */
RootSet all_roots(const IntPolynomial& p, const SolverOptions& options = {}, const std::string& label = "p");

/// max over roots z of the distance from conj(z) to the nearest root.
double conjugate_symmetry_error(const RootSet& roots);
/// Max coefficientwise error of prod(x - z_i) against p / lead(p), relative
/// to max(|coefficient|, 1).
double reconstruction_error(const RootSet& roots, const IntPolynomial& p);

struct ModulusCheck {
  bool ok = true;
  double slack = 0;  ///< n - (|z|-1)^2 ln|z|, or n when |z| <= 1
};

/// (|z| - 1)^2 ln|z| <= n for |z| > 1, vacuous otherwise.
ModulusCheck modulus_bound_check(std::complex<double> z, int n);
ModulusCheck modulus_bound_check(const Complex& z, int n);

/// 1 + sqrt(n / ln 2)
Real explicit_bound(int n, mpfr_prec_t precision = 128);
/// The unique R > 1 with (R - 1)^2 ln R = n, by bisection to 1e-10 or better.
Real implicit_radius(int n, mpfr_prec_t precision = 128);

struct ModulusReport {
  int n = 0;
  double max_modulus = 0;
  double explicit_bound = 0;
  double implicit_radius = 0;
  bool implicit_ok = true;      ///< every root passes modulus_bound_check
  bool within_explicit = true;  ///< every |z| <= explicit bound
  bool within_implicit = true;  ///< every |z| <= implicit radius
  double min_slack = 0;
};

ModulusReport modulus_report(int n, const SolverOptions& options = {});
std::vector<ModulusReport> modulus_table(const std::vector<int>& n_values, const SolverOptions& options = {});

}  // namespace domroots
