#include "aign/ig.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aign/numerics.hpp"

namespace aign::ig {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_valid(double mu, double lambda) {
  if (!(mu > 0.0) || !std::isfinite(mu) || !(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("IgParams: mu and lambda must be positive and finite");
  }
}
}  // namespace

IgParams::IgParams(double mu_, double lambda_) : mu(mu_), lambda(lambda_) {
  require_valid(mu, lambda);
}

double IgParams::stddev() const { return std::sqrt(variance()); }

double pdf(double x, const IgParams& p) {
  if (x <= 0.0) return 0.0;
  const double dev = x - p.mu;
  return std::sqrt(p.lambda / (kTwoPi * x * x * x)) *
         std::exp(-p.lambda * dev * dev / (2.0 * p.mu * p.mu * x));
}

double cdf(double x, const IgParams& p) {
  if (x <= 0.0) return 0.0;
  const double s = std::sqrt(p.lambda / x);
  const double z1 = s * (x / p.mu - 1.0);
  const double z2 = s * (x / p.mu + 1.0);
  // exp(2 lambda/mu) * Phi(-z2) evaluated in log space; the two factors can
  // individually overflow/underflow long before their product does
  const double log_term2 = 2.0 * p.lambda / p.mu + numerics::std_normal_log_cdf(-z2);
  const double value = numerics::std_normal_cdf(z1) + std::exp(log_term2);
  return value < 1.0 ? value : 1.0;
}

double mode(const IgParams& p) {
  const double r = p.mu / p.lambda;  // mu/lambda
  return p.mu * (std::sqrt(1.0 + 2.25 * r * r) - 1.5 * r);
}

double entropy(const IgParams& p) {
  const double r = 2.0 * p.lambda / p.mu;
  return 0.5 * std::log(kTwoPi * p.mu * p.mu * p.mu / p.lambda) + 0.5 -
         1.5 * numerics::exp_integral_E1_scaled(r);
}

double sample(const IgParams& p, Rng& rng) {
  // Michael-Schucany-Haas transform. The larger quadratic root is computed
  // first (no cancellation); the smaller follows from the root product mu^2.
  const double z = rng.normal();
  const double t = p.mu * z * z;
  const double big =
      p.mu + (p.mu / (2.0 * p.lambda)) * (t + std::sqrt(t * (4.0 * p.lambda + t)));
  const double small = p.mu * p.mu / big;
  return rng.uniform() <= p.mu / (p.mu + small) ? small : big;
}

IgParams from_link(double distance, double velocity, double sigma2) {
  if (!(velocity > 0.0)) {
    throw std::domain_error(
        "from_link: hitting-time model requires positive drift velocity");
  }
  if (!(distance > 0.0) || !(sigma2 > 0.0)) {
    throw std::domain_error("from_link: distance and sigma2 must be > 0");
  }
  return IgParams(distance / velocity, distance * distance / sigma2);
}

std::optional<IgParams> sum_params(const IgParams& a, const IgParams& b) {
  const double ra = a.lambda / (a.mu * a.mu);
  const double rb = b.lambda / (b.mu * b.mu);
  if (std::abs(ra - rb) > 1e-9 * std::max(ra, rb)) return std::nullopt;
  const double mu = a.mu + b.mu;
  return IgParams(mu, ra * mu * mu);
}

double upper_quantile_bound(const IgParams& p, double tail_mass) {
  double t = p.mu + 8.0 * p.stddev();
  for (int i = 0; i < 80 && 1.0 - cdf(t, p) > tail_mass; ++i) t *= 1.5;
  return t;
}

}  // namespace aign::ig
