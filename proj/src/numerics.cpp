#include "aign/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

namespace aign::numerics {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kLn2Pi = 1.8378770664093454836;  // ln(2*pi)
constexpr double kEulerGamma = 0.57721566490153286061;

// Gauss 7 / Kronrod 15 nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
};

// One (G7,K15) panel over [a, b] with the QUADPACK error heuristic.
template <class F>
PanelEstimate gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double fsum = fv1[j] + fv2[j];
    if (j % 2 == 1) result_gauss += kWg[(j - 1) / 2] * fsum;
    result_kronrod += kWgk[j] * fsum;
  }

  const double mean = result_kronrod * 0.5;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }
  resasc *= std::abs(half);

  double err = std::abs((result_kronrod - result_gauss) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  return {result_kronrod * half, err};
}

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

QuadResult adapt(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec) {
  QuadResult out;
  if (lo == hi) {
    out.converged = true;
    return out;
  }

  std::priority_queue<Segment> heap;
  auto first = gk15(f, lo, hi);
  heap.push({lo, hi, first.value, first.error});
  double total = first.value;
  double total_err = first.error;
  int splits = 0;

  auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

  while (total_err > tolerance() && splits < spec.max_subdivisions) {
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at floating-point resolution; put it back and stop
      heap.push(worst);
      break;
    }
    auto left = gk15(f, worst.a, mid);
    auto right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push({worst.a, mid, left.value, left.error});
    heap.push({mid, worst.b, right.value, right.error});
    ++splits;
  }

  out.value = total;
  out.error_estimate = total_err;
  out.subdivisions = splits;
  out.converged = total_err <= tolerance();
  return out;
}

// E1 by alternating series, for 0 < x <= 1.
double e1_series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= x / k;
    const double contrib = (k % 2 == 1 ? term : -term) / k;
    sum += contrib;
    if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// Modified Lentz continued fraction; returns e^x E1(x), for x > 1.
double e1_cf_scaled(double x) {
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h;
}

}  // namespace

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double std_normal_log_cdf(double x) {
  if (x > 0.0) return std::log1p(-std_normal_cdf(-x));
  if (x >= -36.0) return std::log(std_normal_cdf(x));
  // deep tail: ln Phi(x) = -x^2/2 - ln(-x) - ln(2pi)/2 + ln(1 - 1/x^2 + 3/x^4 - ...)
  const double z = -x;
  const double iz2 = 1.0 / (z * z);
  const double series = 1.0 + iz2 * (-1.0 + iz2 * (3.0 + iz2 * (-15.0 + iz2 * 105.0)));
  return -0.5 * z * z - std::log(z) - 0.5 * kLn2Pi + std::log(series);
}

double exp_integral_E1(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_E1: requires x > 0");
  if (x <= 1.0) return e1_series(x);
  return e1_cf_scaled(x) * std::exp(-x);
}

double exp_integral_E1_scaled(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_E1_scaled: requires x > 0");
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return e1_cf_scaled(x);
}

QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadratureSpec& spec) {
  if (spec.abs_tol <= 0.0 || spec.rel_tol <= 0.0 || spec.max_subdivisions < 1) {
    throw std::domain_error("integrate: invalid QuadratureSpec");
  }
  if (std::isinf(hi)) {
    // t = lo + u/(1-u) maps [0,1) onto [lo, inf)
    auto g = [&f, lo](double u) {
      const double w = 1.0 - u;
      return f(lo + u / w) / (w * w);
    };
    return adapt(g, 0.0, 1.0, spec);
  }
  if (lo > hi) {
    QuadResult r = integrate(f, hi, lo, spec);
    r.value = -r.value;
    return r;
  }
  return adapt(f, lo, hi, spec);
}

double integrate_or_throw(const std::function<double(double)>& f, double lo,
                          double hi, const QuadratureSpec& spec) {
  QuadResult r = integrate(f, lo, hi, spec);
  if (!r.converged) {
    throw quadrature_error("integrate: tolerance not reached after " +
                               std::to_string(r.subdivisions) + " subdivisions",
                           r);
  }
  return r.value;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol) {
  if (!(tol > 0.0)) throw std::domain_error("bisect_root: tol must be > 0");
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::domain_error("bisect_root: no sign change over [lo, hi]");
  }
  for (int i = 0; i < 200 && (hi - lo) > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binary_entropy: p must lie in [0, 1]");
  }
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
  return h;
}

}  // namespace aign::numerics
