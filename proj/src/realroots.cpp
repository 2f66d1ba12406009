#include "domroots/realroots.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "domroots/families.hpp"

namespace domroots {

namespace {

void require_even(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and at least 2, got " + std::to_string(n));
}

void require_unit_interval(const Real& t) {
  if (t.sign() <= 0 || t >= Real(1.0, t.precision()))
    throw std::domain_error("argument must lie in the open interval (0, 1), got " + t.str(12));
}

using RealFn = std::function<Real(const Real&)>;

// Zero of a strictly increasing f on (lo, hi) with f(lo) < 0 < f(hi).
// Bisection to width 1e-3, then Newton falling back to bisection whenever the
// step leaves the bracket; stops near the working precision.
Real increasing_zero(const RealFn& f, const RealFn& df, Real lo, Real hi, mpfr_prec_t prec) {
  const Real two(2.0, prec);
  const Real coarse(1e-3, prec);
  while (hi - lo > coarse) {
    Real mid = (lo + hi) / two;
    if (f(mid).sign() < 0)
      lo = mid;
    else
      hi = mid;
  }
  Real x = (lo + hi) / two;
  const Real stop = ldexp_one(-static_cast<long>(prec) + 8, prec);
  for (int iter = 0; iter < 200; ++iter) {
    Real fx = f(x);
    if (fx.is_zero()) return x;
    if (fx.sign() < 0)
      lo = x;
    else
      hi = x;
    Real step = fx / df(x);
    Real next = x - step;
    if (!(next > lo && next < hi) || !next.is_finite()) {
      next = (lo + hi) / two;
      step = x - next;
    }
    x = std::move(next);
    if (abs(step) <= stop * (abs(x) + Real(1.0, prec))) break;
  }
  return x;
}

// Sign of p at x + offset, evaluated at working precision.
int sign_near(const IntPolynomial& p, const Real& x, double offset) {
  return eval_real(p, x + Real(offset, x.precision())).sign();
}

}  // namespace

Real phi(int n, const Real& t) {
  require_even(n);
  require_unit_interval(t);
  const mpfr_prec_t p = t.precision();
  const Real one(1.0, p);
  return Real(2L * n, p) * log(t) - Real(static_cast<long>(n - 1), p) * log(one - t) -
         Real(static_cast<long>(n), p) * log(one + t);
}

Real phi_prime(int n, const Real& t) {
  require_even(n);
  require_unit_interval(t);
  const mpfr_prec_t p = t.precision();
  const Real one(1.0, p);
  return Real(2L * n, p) / t + Real(static_cast<long>(n - 1), p) / (one - t) - Real(static_cast<long>(n), p) / (one + t);
}

Real psi(int n, const Real& s) {
  require_even(n);
  require_unit_interval(s);
  const mpfr_prec_t p = s.precision();
  const Real one(1.0, p);
  return Real(2L * n, p) * log(s) - Real(static_cast<long>(n), p) * log(one - s) -
         Real(static_cast<long>(n - 1), p) * log(one + s);
}

Real psi_prime(int n, const Real& s) {
  require_even(n);
  require_unit_interval(s);
  const mpfr_prec_t p = s.precision();
  const Real one(1.0, p);
  return Real(2L * n, p) / s + Real(static_cast<long>(n), p) / (one - s) - Real(static_cast<long>(n - 1), p) / (one + s);
}

Real FriendshipRealRoots::t() const { return x_plus + Real(1.0, x_plus.precision()); }
Real FriendshipRealRoots::s() const { return -(x_minus + Real(1.0, x_minus.precision())); }

FriendshipRealRoots solve_friendship_real_roots(int n, double tol, mpfr_prec_t precision) {
  require_even(n);
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (precision < 64) throw std::invalid_argument("precision must be at least 64 bits");

  // Start just inside (0, 1): phi and psi tend to -inf at 0 and +inf at 1.
  Real lo = ldexp_one(-60, precision);
  Real hi = Real(1.0, precision) - ldexp_one(-60, precision);
  if (!(phi(n, lo).sign() < 0 && phi(n, hi).sign() > 0) || !(psi(n, lo).sign() < 0 && psi(n, hi).sign() > 0))
    throw std::runtime_error("phi/psi bracket failed for n = " + std::to_string(n));

  Real t = increasing_zero([n](const Real& v) { return phi(n, v); }, [n](const Real& v) { return phi_prime(n, v); },
                           lo, hi, precision);
  Real s = increasing_zero([n](const Real& v) { return psi(n, v); }, [n](const Real& v) { return psi_prime(n, v); },
                           lo, hi, precision);

  const IntPolynomial& p = family_poly(FamilyId::friendship(n));
  const IntPolynomial dp = derivative(p);
  FriendshipRealRoots r;
  r.n = n;
  r.x_plus = t - Real(1.0, precision);
  r.x_minus = -(Real(1.0, precision) + s);
  r.residual_plus = abs(eval_real(p, r.x_plus));
  r.residual_minus = abs(eval_real(p, r.x_minus));
  r.derivative_plus = eval_real(dp, r.x_plus);
  r.derivative_minus = eval_real(dp, r.x_minus);
  r.certified_count = count_real_roots(p);

  // Bracket certificate: D(F_n) changes sign across each root within tol.
  const double h = tol / 2;
  if (sign_near(p, r.x_plus, -h) * sign_near(p, r.x_plus, h) >= 0 ||
      sign_near(p, r.x_minus, -h) * sign_near(p, r.x_minus, h) >= 0)
    throw std::runtime_error("friendship root bracket of width tol not certified for n = " + std::to_string(n));
  return r;
}

MonotoneReport assess_monotone(std::vector<MonotoneRow> rows) {
  MonotoneReport rep;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (auto& r : rows) {
    r.gap_minus = std::abs(r.x_minus - (-1.0 - inv_sqrt2));
    r.gap_plus = std::abs(r.x_plus - (-1.0 + inv_sqrt2));
    if (!(r.x_plus + 1.0 > inv_sqrt2))
      rep.failures.push_back("t_n > 1/sqrt2 fails at n=" + std::to_string(r.n));
    if (!(-(r.x_minus + 1.0) < inv_sqrt2))
      rep.failures.push_back("s_n < 1/sqrt2 fails at n=" + std::to_string(r.n));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    const std::string pair = "(n=" + std::to_string(a.n) + ", n=" + std::to_string(b.n) + ")";
    if (!(b.x_minus < a.x_minus)) rep.failures.push_back("x_minus not strictly decreasing at " + pair);
    if (!(b.x_plus < a.x_plus)) rep.failures.push_back("x_plus not strictly decreasing at " + pair);
    if (!(b.gap_minus < a.gap_minus)) rep.failures.push_back("gap to -1-1/sqrt2 not strictly decreasing at " + pair);
    if (!(b.gap_plus < a.gap_plus)) rep.failures.push_back("gap to -1+1/sqrt2 not strictly decreasing at " + pair);
  }
  rep.rows = std::move(rows);
  return rep;
}

MonotoneReport monotone_convergence_report(const std::vector<int>& even_ns, double tol, mpfr_prec_t precision) {
  if (even_ns.size() < 2) throw std::invalid_argument("monotone_convergence_report needs at least two values of n");
  for (std::size_t i = 0; i < even_ns.size(); ++i) {
    require_even(even_ns[i]);
    if (i > 0 && even_ns[i] < even_ns[i - 1]) throw std::invalid_argument("n values must be ascending");
  }
  std::vector<MonotoneRow> rows;
  for (int n : even_ns) {
    auto r = solve_friendship_real_roots(n, tol, precision);
    rows.push_back({n, r.x_minus.to_double(), r.x_plus.to_double(), 0, 0});
  }
  return assess_monotone(std::move(rows));
}

std::vector<RealRoot> real_roots(const IntPolynomial& p, const Bound& a, const Bound& b, double tol,
                                 mpfr_prec_t precision) {
  if (p.is_zero()) throw std::domain_error("real_roots of the zero polynomial");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  const IntPolynomial sf = squarefree_part(p);
  const IntPolynomial dsf = derivative(sf);
  const SturmChain chain(sf);
  const mpq_class coarse(1, 1024);
  std::vector<RealRoot> out;
  for (RootInterval iv : isolate_real_roots(sf, a, b, coarse)) {
    // Shrink until neither endpoint is a root, keeping exactly one root in (lo, hi].
    bool exact = false;
    while (true) {
      if (sign_at(sf, iv.hi) == 0) {
        exact = true;
        break;
      }
      if (sign_at(sf, iv.lo) != 0 && iv.hi - iv.lo <= coarse) break;
      mpq_class mid = (iv.lo + iv.hi) / 2;
      if (chain.count(Bound::at(iv.lo), Bound::at(mid)) == 1)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
    RealRoot root{Real(iv.hi, precision), Real(precision), iv};
    if (!exact) {
      const int s_lo = sign_at(sf, iv.lo);
      const RealFn f = [&](const Real& x) { return s_lo < 0 ? eval_real(sf, x) : -eval_real(sf, x); };
      const RealFn df = [&](const Real& x) { return s_lo < 0 ? eval_real(dsf, x) : -eval_real(dsf, x); };
      root.value = increasing_zero(f, df, Real(iv.lo, precision), Real(iv.hi, precision), precision);
      const double h = tol / 2;
      if (sign_near(sf, root.value, -h) * sign_near(sf, root.value, h) >= 0)
        throw std::runtime_error("real root bracket of width tol not certified near " + root.value.str(12));
    }
    root.residual = abs(eval_real(p, root.value));
    out.push_back(std::move(root));
  }
  return out;
}

BookRealRoots book_real_roots(int n, double tol, mpfr_prec_t precision) {
  if (n < 1) throw std::invalid_argument("book_real_roots: n must be at least 1");
  const IntPolynomial& p = family_poly(FamilyId::book(n));
  BookRealRoots r;
  r.n = n;
  r.zero_multiplicity = p.zero_multiplicity();
  const IntPolynomial reduced = p.divided_by_x_power(r.zero_multiplicity);
  r.roots = real_roots(reduced, Bound::neg_inf(), Bound::pos_inf(), tol, precision);
  const mpq_class minus_two(-2), minus_half(-1, 2);
  for (auto& root : r.roots) {
    root.residual = abs(eval_real(p, root.value));
    // Classify by exact isolating interval (lo, hi]; hi decides when the
    // interval does not straddle a breakpoint.
    const Real v = root.value;
    if (v <= Real(minus_two, precision))
      ++r.below_minus_two;
    else if (v <= Real(minus_half, precision))
      ++r.middle;
    else if (v.sign() < 0)
      ++r.near_zero;
    else
      ++r.positive;
  }
  if (n % 2 == 0) r.existence_holds = r.below_minus_two >= 1 && r.near_zero >= 1;
  // The open-interval claims exclude the endpoints themselves.
  for (const auto& root : r.roots)
    if (root.value == Real(minus_two, precision) || root.value == Real(minus_half, precision)) r.existence_holds = false;
  return r;
}

std::string to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::Consistent:
      return "CONSISTENT";
    case ConjectureStatus::Inconsistent:
      return "INCONSISTENT";
    case ConjectureStatus::Separate:
      return "SEPARATE";
  }
  return "?";
}

std::vector<ConjectureRow> conjecture_book_real_check(int n_max, double tol, mpfr_prec_t precision) {
  if (n_max < 2) throw std::invalid_argument("conjecture_book_real_check: n_max must be at least 2");
  std::vector<ConjectureRow> out;
  for (int n = 1; n <= n_max; ++n) {
    ConjectureRow row;
    row.n = n;
    row.roots = book_real_roots(n, tol, precision);
    const IntPolynomial& p = family_poly(FamilyId::book(n));
    // Repeated nonzero real roots appear as nonzero real roots of gcd(p, p').
    const IntPolynomial g = gcd(p, derivative(p));
    const IntPolynomial g_nonzero = g.divided_by_x_power(g.zero_multiplicity());
    row.nonzero_roots_simple = g_nonzero.degree() < 1 || count_real_roots(g_nonzero) == 0;
    const int distinct_nonzero = static_cast<int>(row.roots.roots.size());
    row.real_roots_with_multiplicity =
        static_cast<int>(row.roots.zero_multiplicity) + (row.nonzero_roots_simple ? distinct_nonzero : -1);

    std::ostringstream detail;
    detail << "zero multiplicity " << row.roots.zero_multiplicity << "; nonzero roots in (-inf,-2]: "
           << row.roots.below_minus_two << ", (-2,-1/2]: " << row.roots.middle
           << ", (-1/2,0): " << row.roots.near_zero << ", (0,inf): " << row.roots.positive;
    row.detail = detail.str();

    if (n == 1) {
      row.pattern = "n=1";
      row.status = ConjectureStatus::Separate;
    } else {
      const bool base = row.roots.zero_multiplicity == 2 && row.nonzero_roots_simple && row.roots.middle == 0 &&
                        row.roots.positive == 0 && distinct_nonzero == 2;
      if (n % 2 == 0) {
        row.pattern = "even";
        row.status = base && row.roots.below_minus_two == 1 && row.roots.near_zero == 1
                         ? ConjectureStatus::Consistent
                         : ConjectureStatus::Inconsistent;
      } else {
        row.pattern = "odd";
        row.status = base && row.roots.below_minus_two == 0 && row.roots.near_zero == 2
                         ? ConjectureStatus::Consistent
                         : ConjectureStatus::Inconsistent;
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace domroots
