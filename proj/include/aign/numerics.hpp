#pragma once

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace aign::numerics {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

// Raised when the adaptive integrator exhausts its subdivision budget.
// Carries the best estimate so callers can still inspect it.
class quadrature_error : public std::runtime_error {
 public:
  quadrature_error(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadResult& best() const noexcept { return best_; }

 private:
  QuadResult best_;
};

// Standard normal cdf. Total on finite reals, accurate in both tails.
double std_normal_cdf(double x);

// log Phi(x). Stable arbitrarily deep into the lower tail, where
// std_normal_cdf underflows to 0.
double std_normal_log_cdf(double x);

// Exponential integral E1(x) = int_x^inf e^{-t}/t dt for x > 0.
// Ei(-x) = -E1(x).
double exp_integral_E1(double x);

// e^x E1(x); finite for all x > 0, including where e^x alone overflows.
double exp_integral_E1_scaled(double x);

// Adaptive Gauss-Kronrod (G7,K15) integration of f over [lo, hi].
// hi may be +infinity: the tail is folded onto [0,1) with t = lo + u/(1-u),
// so one adaptive engine serves both finite and semi-infinite ranges.
QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadratureSpec& spec = {});

// As integrate(), but throws quadrature_error instead of returning a
// non-converged result.
double integrate_or_throw(const std::function<double(double)>& f, double lo,
                          double hi, const QuadratureSpec& spec = {});

// Bisection on a sign-changing bracket [lo, hi]; returns the midpoint of the
// final bracket once its width is <= tol. Throws std::domain_error when
// f(lo) and f(hi) do not differ in sign.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol);

// -p ln p - (1-p) ln(1-p) in nats, with 0 ln 0 := 0.
// Throws std::domain_error for p outside [0, 1].
double binary_entropy(double p);

}  // namespace aign::numerics
