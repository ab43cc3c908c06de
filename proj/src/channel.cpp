#include "aign/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace aign::channel {

Topology::Topology(double d_, double d_t_, double d_r_, double v_i_, double v_c_,
                   double sigma2_)
    : d(d_), d_t(d_t_), d_r(d_r_), v_i(v_i_), v_c(v_c_), sigma2(sigma2_) {
  auto ok = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!ok(d) || !ok(d_t) || !ok(d_r) || !ok(sigma2)) {
    throw std::domain_error("Topology: distances and sigma2 must be positive and finite");
  }
  if (!ok(v_i) || !ok(v_c)) {
    throw std::domain_error("Topology: drift velocities must be positive and finite");
  }
}

LinkSet derive_links(const Topology& t, const LinkOptions& opt) {
  ig::IgParams e_r = ig::from_link(t.d_r, t.v_c, t.sigma2);
  if (opt.paper_literal_lambda_r) {
    e_r = ig::IgParams(t.d_r / t.v_c, t.d_r / t.sigma2);
  }
  return LinkSet{ig::from_link(t.d, t.v_i, t.sigma2),
                 ig::from_link(t.d_t, t.v_c, t.sigma2), e_r};
}

GridSpec default_sum_grid(const ig::IgParams& n, const ig::IgParams& e_t) {
  const double mean = n.mu + e_t.mu;
  const double sd = std::sqrt(n.variance() + e_t.variance());
  return GridSpec{mean + 12.0 * sd, mean / 4096.0};
}

SumDist SumDist::analytic(const ig::IgParams& p) {
  SumDist s;
  s.analytic_ = p;
  return s;
}

SumDist SumDist::tabulated(double step, std::vector<double> pdf_values) {
  if (!(step > 0.0)) throw std::domain_error("SumDist: grid step must be > 0");
  if (pdf_values.size() < 2) throw std::domain_error("SumDist: grid too short");
  SumDist s;
  s.step_ = step;
  s.pdf_ = std::move(pdf_values);
  s.cdf_.resize(s.pdf_.size());
  s.cdf_[0] = 0.0;
  for (std::size_t k = 1; k < s.pdf_.size(); ++k) {
    s.cdf_[k] = s.cdf_[k - 1] + 0.5 * (s.pdf_[k - 1] + s.pdf_[k]) * step;
  }
  return s;
}

double SumDist::captured_mass() const {
  if (is_analytic()) return 1.0;
  return cdf_.back();
}

double SumDist::mean_estimate() const {
  if (is_analytic()) return analytic_->mu;
  double m = 0.0;
  for (std::size_t k = 1; k + 1 < pdf_.size(); ++k) {
    m += static_cast<double>(k) * step_ * pdf_[k];
  }
  const std::size_t last = pdf_.size() - 1;
  m += 0.5 * static_cast<double>(last) * step_ * pdf_[last];
  return m * step_;
}

std::vector<double> convolve_pdf_grid_serial(const std::vector<double>& f1,
                                             const std::vector<double>& f2,
                                             double step) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(std::min(f1.size(), f2.size()));
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (std::ptrdiff_t k = 1; k < n; ++k) {
    double acc = 0.5 * (f1[0] * f2[k] + f1[k] * f2[0]);
    for (std::ptrdiff_t j = 1; j < k; ++j) acc += f1[j] * f2[k - j];
    out[k] = acc * step;
  }
  return out;
}

std::vector<double> convolve_pdf_grid(const std::vector<double>& f1,
                                      const std::vector<double>& f2, double step,
                                      Exec exec) {
  if (exec == Exec::Serial) return convolve_pdf_grid_serial(f1, f2, step);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(std::min(f1.size(), f2.size()));
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t k = 1; k < n; ++k) {
    double acc = 0.5 * (f1[0] * f2[k] + f1[k] * f2[0]);
    for (std::ptrdiff_t j = 1; j < k; ++j) acc += f1[j] * f2[k - j];
    out[k] = acc * step;
  }
  return out;
}

SumDist tabulate_sum(const ig::IgParams& n, const ig::IgParams& e_t,
                     const GridSpec& grid, Exec exec) {
  if (!(grid.step > 0.0) || !(grid.t_max > grid.step)) {
    throw std::domain_error("tabulate_sum: grid requires step > 0 and t_max > step");
  }
  const auto points = static_cast<std::size_t>(std::ceil(grid.t_max / grid.step)) + 1;
  std::vector<double> f1(points), f2(points);
  for (std::size_t k = 0; k < points; ++k) {
    const double x = static_cast<double>(k) * grid.step;
    f1[k] = ig::pdf(x, n);
    f2[k] = ig::pdf(x, e_t);
  }
  SumDist s = SumDist::tabulated(grid.step, convolve_pdf_grid(f1, f2, grid.step, exec));
  const double mass = s.captured_mass();
  if (mass < 1.0 - 1e-4) {
    throw coverage_error("tabulate_sum: grid captured only " + std::to_string(mass) +
                             " probability mass; increase t_max",
                         mass);
  }
  return s;
}

SumDist sum_distribution(const ig::IgParams& n, const ig::IgParams& e_t,
                         const GridSpec& grid, Exec exec) {
  if (auto p = ig::sum_params(n, e_t)) return SumDist::analytic(*p);
  return tabulate_sum(n, e_t, grid, exec);
}

SumDist sum_distribution(const ig::IgParams& n, const ig::IgParams& e_t, Exec exec) {
  return sum_distribution(n, e_t, default_sum_grid(n, e_t), exec);
}

double sum_entropy(const SumDist& s) {
  if (s.is_analytic()) return ig::entropy(s.analytic_params());
  double h = 0.0;
  for (double p : s.pdf_grid()) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h * s.step();
}

double sum_cdf(const SumDist& s, double t) {
  if (t <= 0.0) return 0.0;
  if (s.is_analytic()) return ig::cdf(t, s.analytic_params());
  const auto& cdf = s.cdf_grid();
  if (t >= s.t_max()) return std::min(cdf.back(), 1.0);
  const double pos = t / s.step();
  const auto k = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(k);
  const double v = cdf[k] + frac * (cdf[k + 1] - cdf[k]);
  return std::min(v, 1.0);
}

}  // namespace aign::channel
