#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aign/exec.hpp"
#include "aign/ig.hpp"

namespace aign::channel {

// Physical three-link network: information link (transmitter->receiver,
// distance d, drift v_i) and the two clock links (clock->transmitter d_t,
// clock->receiver d_r, both with drift v_c), in a medium with diffusion
// variance sigma2.
struct Topology {
  double d;
  double d_t;
  double d_r;
  double v_i;
  double v_c;
  double sigma2;

  Topology(double d_, double d_t_, double d_r_, double v_i_, double v_c_,
           double sigma2_);

  // Convenience for configs specified by diffusion coefficient D: sigma2 = D/2.
  static double sigma2_from_diffusion(double diffusion_coefficient) {
    return diffusion_coefficient / 2.0;
  }
};

struct LinkSet {
  ig::IgParams n;    // information link delay N
  ig::IgParams e_t;  // clock -> transmitter delay E_T
  ig::IgParams e_r;  // clock -> receiver delay E_R
};

struct LinkOptions {
  // Reproduces the alternate clock-receiver shape convention
  // lambda_r = d_r / sigma2 (instead of d_r^2 / sigma2) for auditability.
  bool paper_literal_lambda_r = false;
};

LinkSet derive_links(const Topology& t, const LinkOptions& opt = {});

// Tabulation grid for the numerical distribution of S = N + E_T.
struct GridSpec {
  double t_max;
  double step;
};

// step = (mu_n + mu_t)/4096, t_max = mean + 12 standard deviations of the sum.
GridSpec default_sum_grid(const ig::IgParams& n, const ig::IgParams& e_t);

// Raised when a tabulated distribution fails to capture enough probability
// mass on its grid.
class coverage_error : public std::runtime_error {
 public:
  coverage_error(const std::string& what, double captured)
      : std::runtime_error(what), captured_(captured) {}
  double captured_mass() const noexcept { return captured_; }

 private:
  double captured_;
};

// Distribution of S = N + E_T: analytic IG when the shape ratios match,
// otherwise a tabulated numerical convolution on a uniform grid.
class SumDist {
 public:
  static SumDist analytic(const ig::IgParams& p);
  static SumDist tabulated(double step, std::vector<double> pdf_values);

  bool is_analytic() const { return analytic_.has_value(); }
  const ig::IgParams& analytic_params() const { return *analytic_; }

  double step() const { return step_; }
  double t_max() const { return step_ * static_cast<double>(pdf_.size() - 1); }
  const std::vector<double>& pdf_grid() const { return pdf_; }
  const std::vector<double>& cdf_grid() const { return cdf_; }
  double captured_mass() const;

  double mean_estimate() const;  // first moment (exact mu for the analytic branch)

 private:
  SumDist() = default;
  std::optional<ig::IgParams> analytic_;
  double step_ = 0.0;
  std::vector<double> pdf_;  // values at k*step, k = 0..K
  std::vector<double> cdf_;  // trapezoidal cumulative at the same points
};

// Pointwise convolution integral h[k] = sum_j f1[j] f2[k-j] * step on a
// uniform grid (trapezoidal in the inner index). The parallel kernel splits
// over output indices and is bit-identical to the serial reference.
std::vector<double> convolve_pdf_grid(const std::vector<double>& f1,
                                      const std::vector<double>& f2, double step,
                                      Exec exec = Exec::Parallel);
std::vector<double> convolve_pdf_grid_serial(const std::vector<double>& f1,
                                             const std::vector<double>& f2,
                                             double step);

// Numerical convolution of the two IG densities on the grid; throws
// coverage_error if the captured mass falls below 1 - 1e-4.
SumDist tabulate_sum(const ig::IgParams& n, const ig::IgParams& e_t,
                     const GridSpec& grid, Exec exec = Exec::Parallel);

// Analytic IG sum when representable, tabulated convolution otherwise.
SumDist sum_distribution(const ig::IgParams& n, const ig::IgParams& e_t,
                         const GridSpec& grid, Exec exec = Exec::Parallel);
SumDist sum_distribution(const ig::IgParams& n, const ig::IgParams& e_t,
                         Exec exec = Exec::Parallel);

// Differential entropy of S in nats. Closed form on the analytic branch,
// -sum pdf ln(pdf) * step on the tabulated branch (0 ln 0 := 0).
double sum_entropy(const SumDist& s);

double sum_cdf(const SumDist& s, double t);

}  // namespace aign::channel
