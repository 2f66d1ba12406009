#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#include <gmpxx.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "domroots/exactpoly.hpp"
#include "domroots/graphs.hpp"

namespace oracle {

using domroots::IntPolynomial;

// Schoolbook product written against a std::map, independent of mul().
inline IntPolynomial naive_mul(const IntPolynomial& p, const IntPolynomial& q) {
  std::map<int, mpz_class> acc;
  for (int i = 0; i <= p.degree(); ++i)
    for (int j = 0; j <= q.degree(); ++j) acc[i + j] += p.coeffs()[i] * q.coeffs()[j];
  std::vector<mpz_class> c(acc.empty() ? 0 : acc.rbegin()->first + 1);
  for (auto& [k, v] : acc) c[k] = v;
  return IntPolynomial(c);
}

// Value by summing c_k x^k with explicit powers.
inline mpq_class eval_powers(const IntPolynomial& p, const mpq_class& x) {
  mpq_class sum = 0, xk = 1;
  for (const auto& c : p.coeffs()) {
    sum += c * xk;
    xk *= x;
  }
  return sum;
}

inline int sgn_q(const mpq_class& v) { return sgn(v); }

// Count of distinct real roots of a squarefree polynomial in [lo, hi], found
// by exact sign changes on a uniform rational grid with `steps` cells. Grid
// points that hit a root exactly are counted once. Only trustworthy when every
// pair of roots is separated by more than one cell.
inline int grid_sign_changes(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi, int steps) {
  int count = 0;
  int prev = sgn_q(eval_powers(p, lo));
  if (prev == 0) ++count;
  for (int i = 1; i <= steps; ++i) {
    mpq_class x = lo + (hi - lo) * mpq_class(i, steps);
    x.canonicalize();
    const int s = sgn_q(eval_powers(p, x));
    if (s == 0)
      ++count;
    else if (prev != 0 && s != prev)
      ++count;
    prev = s;
  }
  return count;
}

// Brute-force domination polynomial by a direct closed-neighbourhood test on
// every subset. Exponential and slow, but shares nothing with the library's
// split-table oracle.
inline IntPolynomial naive_dompoly(const domroots::Graph& g) {
  const int n = g.order();
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool dominating = true;
    for (int v = 0; v < n && dominating; ++v) {
      if (s >> v & 1) continue;
      bool hit = false;
      for (int u : g.neighbors(v)) hit = hit || (s >> u & 1);
      dominating = hit;
    }
    if (dominating) c[static_cast<std::size_t>(__builtin_popcountll(s))] += 1;
  }
  return IntPolynomial(c);
}

// Companion-matrix eigenvalues in double precision (Eigen).
inline std::vector<std::complex<double>> companion_roots(const IntPolynomial& p) {
  const int d = p.degree();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  const double lead = p.leading().get_d();
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) m(i, d - 1) = -p.coeffs()[static_cast<std::size_t>(i)].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

// Greedy nearest matching distance between two root multisets.
inline double match_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0;
  for (const auto& z : a) {
    auto best = std::min_element(b.begin(), b.end(),
                                 [&](const auto& u, const auto& v) { return std::abs(u - z) < std::abs(v - z); });
    worst = std::max(worst, std::abs(*best - z));
    b.erase(best);
  }
  return worst;
}

inline IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long max_coeff) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-max_coeff, max_coeff);
  std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPolynomial(c);
}

}  // namespace oracle
