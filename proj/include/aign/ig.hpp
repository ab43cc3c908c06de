#pragma once

#include <optional>

#include "aign/rng.hpp"

namespace aign::ig {

// Parameters of an inverse-Gaussian first-hitting-time law: mean mu and
// shape lambda, both in seconds and strictly positive.
struct IgParams {
  double mu;
  double lambda;

  IgParams(double mu_, double lambda_);

  double mean() const { return mu; }
  double variance() const { return mu * mu * mu / lambda; }
  double stddev() const;
};

// Density sqrt(lambda/(2 pi x^3)) exp(-lambda (x-mu)^2 / (2 mu^2 x)); 0 for x <= 0.
double pdf(double x, const IgParams& p);

// Closed-form cdf via the standard normal cdf. Stable for large lambda/mu,
// where the exp(2 lambda/mu) factor alone would overflow.
double cdf(double x, const IgParams& p);

// Location of the density maximum.
double mode(const IgParams& p);

// Differential entropy in nats:
//   h = ln(2 pi mu^3 / lambda)/2 + (3/2) e^{2 lambda/mu} Ei(-2 lambda/mu) + 1/2.
double entropy(const IgParams& p);

// Exact transform sampler (one normal variate, one uniform accept branch).
double sample(const IgParams& p, Rng& rng);

// Hitting-time parameters of a drift-diffusion link: mu = distance/velocity,
// lambda = distance^2/sigma2. Throws for velocity <= 0 (no positive drift).
IgParams from_link(double distance, double velocity, double sigma2);

// Sum of two independent IG variables is IG again iff lambda/mu^2 matches
// (relative tolerance 1e-9). Returns the summed parameters, or nullopt when
// the sum leaves the family.
std::optional<IgParams> sum_params(const IgParams& a, const IgParams& b);

// Smallest grid-friendly t with 1 - cdf(t) <= tail_mass; used to pick
// truncation points for integrals and tabulation.
double upper_quantile_bound(const IgParams& p, double tail_mass);

}  // namespace aign::ig
