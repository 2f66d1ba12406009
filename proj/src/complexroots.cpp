#include "domroots/complexroots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "domroots/families.hpp"

namespace domroots {

namespace {

using cd = std::complex<double>;

double log_abs(const mpz_class& z) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(std::abs(m)) + static_cast<double>(e) * std::numbers::ln2;
}

// Geometric mean of the root moduli, |c_0 / c_d|^(1/d).
double start_radius(const IntPolynomial& q) {
  const int d = q.degree();
  const double lr = (log_abs(q.coeffs().front()) - log_abs(q.leading())) / d;
  return std::exp(lr);
}

bool double_sweeps(const std::vector<double>& c, std::vector<cd>& z, int max_sweeps, int& sweeps) {
  const std::size_t d = z.size();
  std::vector<cd> w(d);
  double best = INFINITY;
  int stalled = 0;
  while (sweeps < max_sweeps) {
    ++sweeps;
    double worst = 0;
    for (std::size_t k = 0; k < d; ++k) {
      cd pv = c.back();
      cd dv = 0;
      for (std::size_t i = c.size() - 1; i-- > 0;) {
        dv = dv * z[k] + pv;
        pv = pv * z[k] + c[i];
      }
      if (pv == cd(0)) {
        w[k] = 0;
        continue;
      }
      const cd ratio = pv / dv;
      cd s = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      w[k] = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w[k].real()) || !std::isfinite(w[k].imag())) return false;
      worst = std::max(worst, std::abs(w[k]) / std::max(std::abs(z[k]), 1.0));
    }
    for (std::size_t k = 0; k < d; ++k) z[k] -= w[k];
    // Double precision only has to land inside the basin of the
    // high-precision phase.
    if (worst < 1e-10) return true;
    // No progress: cancellation in the expanded coefficients swamps double
    // precision, so hand over to the multiprecision phase.
    if (worst < best) {
      best = worst;
      stalled = 0;
    } else if (++stalled >= 10) {
      return true;
    }
  }
  return true;
}

struct Horner {
  Complex value;
  Complex deriv;
};

Horner horner(const std::vector<Real>& c, const Complex& z) {
  const mpfr_prec_t prec = z.precision();
  Horner h{Complex(Real(c.back()), Real(prec)), Complex(prec)};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    h.deriv = h.deriv * z + h.value;
    h.value = h.value * z;
    h.value.re += c[i];
  }
  return h;
}

// Real roots come out of the complex iteration with a tiny spurious imaginary
// part. The number of distinct real roots is known exactly from a Sturm count,
// so when every root is simple that many roots closest to the axis are
// put on it, provided they are already within 2^(-prec/4) of it relative to
// their size. Anything else is left alone and noted.
void snap_real_roots(RootSet& out, const IntPolynomial& q, const IntPolynomial& p, const Real& scale,
                     const std::string& label) {
  if (out.roots.empty()) return;
  for (const auto& r : out.roots)
    if (r.multiplicity > 1) return;
  const int real_count = count_real_roots(q);
  std::vector<std::pair<double, std::size_t>> off_axis;
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    const cd z = out.roots[i].value.to_std();
    off_axis.emplace_back(std::abs(z.imag()) / std::max(1.0, std::abs(z)), i);
  }
  std::sort(off_axis.begin(), off_axis.end());
  const double threshold = std::ldexp(1.0, -static_cast<int>(out.precision_bits / 4));
  const auto k = static_cast<std::size_t>(real_count);
  const bool separated = k <= off_axis.size() && (k == 0 || off_axis[k - 1].first <= threshold) &&
                         (k == off_axis.size() || off_axis[k].first > threshold);
  if (!separated) {
    out.anomalies.push_back(label + ": " + std::to_string(real_count) +
                            " real roots by Sturm count do not separate cleanly from the complex ones");
    return;
  }
  for (std::size_t j = 0; j < k; ++j) {
    ComplexRoot& r = out.roots[off_axis[j].second];
    r.value.im = Real(r.value.re.precision());
    r.residual = (abs(eval_complex(p, r.value)) / scale).to_double();
  }
}

}  // namespace

double RootSet::max_modulus() const {
  double m = 0;
  for (const auto& r : roots) m = std::max(m, abs(r.value).to_double());
  return m;
}

double RootSet::max_residual() const {
  double m = 0;
  for (const auto& r : roots) m = std::max(m, r.residual);
  return m;
}

RootSet all_roots(const IntPolynomial& p, const SolverOptions& opt, const std::string& label) {
  if (p.degree() < 1) throw std::invalid_argument("all_roots needs a polynomial of degree at least 1");
  if (opt.precision_bits < 53) throw std::invalid_argument("all_roots needs at least 53 bits of precision");
  const mpfr_prec_t prec = opt.precision_bits;

  RootSet out;
  out.label = label;
  out.precision_bits = prec;
  out.zero_multiplicity = p.zero_multiplicity();
  const IntPolynomial q = p.divided_by_x_power(out.zero_multiplicity);
  const int d = q.degree();

  std::vector<Complex> z;
  if (d > 0) {
    const double r0 = start_radius(q);
    std::vector<cd> start(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
      start[static_cast<std::size_t>(k)] = std::polar(r0, 2 * std::numbers::pi * k / d + opt.phase_offset);

    std::vector<double> cdbl;
    bool finite = true;
    for (const auto& c : q.coeffs()) {
      cdbl.push_back(c.get_d());
      finite = finite && std::isfinite(cdbl.back());
    }
    std::vector<cd> zd = start;
    if (!finite || !double_sweeps(cdbl, zd, opt.max_sweeps / 2, out.sweeps)) zd = start;

    std::vector<Real> c;
    for (const auto& v : q.coeffs()) c.emplace_back(v, prec);
    for (const auto& v : zd) z.emplace_back(v, prec);

    const Real one(1.0, prec);
    // Cubic convergence: one sweep after a step of 2^(-prec/3) reaches the
    // working precision.
    const Real stop = ldexp_one(-static_cast<long>(prec) / 3, prec);
    bool final_sweep = false;
    std::vector<Complex> w(z.size(), Complex(prec));
    while (out.sweeps < opt.max_sweeps) {
      ++out.sweeps;
      Real worst(prec);
      for (std::size_t k = 0; k < z.size(); ++k) {
        Horner h = horner(c, z[k]);
        if (h.value.re.is_zero() && h.value.im.is_zero()) {
          w[k] = Complex(prec);
          continue;
        }
        Complex ratio = h.value / h.deriv;
        Complex s(prec);
        for (std::size_t j = 0; j < z.size(); ++j)
          if (j != k) s = s + Complex(one, Real(prec)) / (z[k] - z[j]);
        w[k] = ratio / (Complex(one, Real(prec)) - ratio * s);
        Real rel = abs(w[k]) / std::max(abs(z[k]), one);
        if (rel > worst) worst = rel;
      }
      for (std::size_t k = 0; k < z.size(); ++k) z[k] = z[k] - w[k];
      if (final_sweep) break;
      if (worst < stop) final_sweep = true;
    }
    // Newton polish, accepted only when it lowers |q(z)|.
    for (auto& zk : z) {
      for (int it = 0; it < 3; ++it) {
        Horner h = horner(c, zk);
        if (h.deriv.re.is_zero() && h.deriv.im.is_zero()) break;
        Complex cand = zk - h.value / h.deriv;
        if (norm(eval_complex(q, cand)) < norm(h.value))
          zk = std::move(cand);
        else
          break;
      }
    }
  }

  Real scale(prec);
  for (const auto& v : p.coeffs()) {
    Real a = abs(Real(v, prec));
    if (a > scale) scale = a;
  }
  for (auto& zk : z) {
    ComplexRoot r{zk, (abs(eval_complex(p, zk)) / scale).to_double(), 1};
    out.roots.push_back(std::move(r));
  }

  // Cluster nonzero roots to estimate multiplicity.
  const std::size_t m = out.roots.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::vector<cd> zs;
  for (const auto& r : out.roots) zs.push_back(r.value.to_std());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::abs(zs[i] - zs[j]) <= opt.cluster_tolerance * std::max(1.0, std::abs(zs[i]))) parent[find(i)] = find(j);
  std::vector<int> size(m, 0);
  for (std::size_t i = 0; i < m; ++i) ++size[find(i)];
  for (std::size_t i = 0; i < m; ++i) {
    out.roots[i].multiplicity = size[find(i)];
    if (find(i) == i && size[i] > 1) {
      std::ostringstream os;
      os << label << ": cluster of " << size[i] << " roots near " << zs[i].real() << (zs[i].imag() < 0 ? "-" : "+")
         << std::abs(zs[i].imag()) << "i";
      out.anomalies.push_back(os.str());
    }
  }

  snap_real_roots(out, q, p, scale, label);

  double worst = 0;
  for (const auto& r : out.roots) worst = std::max(worst, r.residual);
  if (!(worst < opt.residual_tolerance)) {
    std::ostringstream os;
    os << "root solver did not converge for " << label << " (degree " << p.degree() << ") after " << out.sweeps
       << " sweeps: worst relative residual " << worst;
    throw RootSolveError(os.str());
  }

  for (unsigned i = 0; i < out.zero_multiplicity; ++i)
    out.roots.push_back({Complex(prec), 0.0, static_cast<int>(out.zero_multiplicity)});

  std::stable_sort(out.roots.begin(), out.roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    if (a.value.re != b.value.re) return a.value.re < b.value.re;
    return a.value.im < b.value.im;
  });
  return out;
}

double conjugate_symmetry_error(const RootSet& roots) {
  double worst = 0;
  for (const auto& a : roots.roots) {
    const cd c = std::conj(a.value.to_std());
    double best = INFINITY;
    for (const auto& b : roots.roots) best = std::min(best, std::abs(b.value.to_std() - c));
    worst = std::max(worst, best);
  }
  return worst;
}

double reconstruction_error(const RootSet& roots, const IntPolynomial& p) {
  const mpfr_prec_t prec = roots.precision_bits;
  std::vector<Complex> prod{Complex(Real(1.0, prec), Real(prec))};
  for (const auto& r : roots.roots) {
    std::vector<Complex> next(prod.size() + 1, Complex(prec));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] = next[i + 1] + prod[i];
      next[i] = next[i] - prod[i] * r.value;
    }
    prod = std::move(next);
  }
  if (static_cast<int>(prod.size()) != p.degree() + 1) return INFINITY;
  const Real lead(p.leading(), prec);
  const Real one(1.0, prec);
  double worst = 0;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    const Real target = Real(p.coeffs()[i], prec) / lead;
    const Complex diff = prod[i] - Complex(target, Real(prec));
    const Real rel = abs(diff) / std::max(abs(target), one);
    worst = std::max(worst, rel.to_double());
  }
  return worst;
}

ModulusCheck modulus_bound_check(std::complex<double> z, int n) {
  const double r = std::abs(z);
  if (r <= 1) return {true, static_cast<double>(n)};
  const double lhs = (r - 1) * (r - 1) * std::log(r);
  return {lhs <= n, n - lhs};
}

ModulusCheck modulus_bound_check(const Complex& z, int n) {
  const mpfr_prec_t prec = z.precision();
  const Real r = abs(z);
  const Real one(1.0, prec);
  if (r <= one) return {true, static_cast<double>(n)};
  const Real lhs = (r - one) * (r - one) * log(r);
  const Real slack = Real(static_cast<long>(n), prec) - lhs;
  return {slack.sign() >= 0, slack.to_double()};
}

Real explicit_bound(int n, mpfr_prec_t precision) {
  if (n < 1) throw std::invalid_argument("explicit_bound: n must be at least 1");
  const Real two(2.0, precision);
  return Real(1.0, precision) + sqrt(Real(static_cast<long>(n), precision) / log(two));
}

Real implicit_radius(int n, mpfr_prec_t precision) {
  if (n < 1) throw std::invalid_argument("implicit_radius: n must be at least 1");
  const Real one(1.0, precision);
  const Real target(static_cast<long>(n), precision);
  auto lhs = [&](const Real& r) { return (r - one) * (r - one) * log(r); };
  Real lo = one;
  Real hi = explicit_bound(n, precision) + one;
  if (!(lhs(hi) > target)) throw std::runtime_error("implicit_radius: bracket failed");
  const Real width = ldexp_one(-std::min<long>(100, static_cast<long>(precision) - 10), precision);
  const Real two(2.0, precision);
  while (hi - lo > width) {
    Real mid = (lo + hi) / two;
    if (lhs(mid) > target)
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) / two;
}

ModulusReport modulus_report(int n, const SolverOptions& options) {
  const IntPolynomial& p = family_poly(FamilyId::friendship(n));
  const RootSet rs = all_roots(p, options, FamilyId::friendship(n).name());
  ModulusReport rep;
  rep.n = n;
  rep.max_modulus = rs.max_modulus();
  const Real eb = explicit_bound(n);
  const Real ir = implicit_radius(n);
  rep.explicit_bound = eb.to_double();
  rep.implicit_radius = ir.to_double();
  rep.min_slack = static_cast<double>(n);
  for (const auto& r : rs.roots) {
    const ModulusCheck c = modulus_bound_check(r.value, n);
    rep.implicit_ok = rep.implicit_ok && c.ok;
    rep.min_slack = std::min(rep.min_slack, c.slack);
    const Real mod = abs(r.value);
    rep.within_explicit = rep.within_explicit && mod <= eb;
    rep.within_implicit = rep.within_implicit && mod <= ir;
  }
  return rep;
}

std::vector<ModulusReport> modulus_table(const std::vector<int>& n_values, const SolverOptions& options) {
  std::vector<ModulusReport> out;
  out.reserve(n_values.size());
  for (int n : n_values) out.push_back(modulus_report(n, options));
  return out;
}

}  // namespace domroots
