#include "kksym/metric.hpp"

#include <cmath>
#include <sstream>

namespace kksym {

namespace {

bool all_finite(const Coordinates& x) {
  return std::isfinite(x.t) && std::isfinite(x.r) && std::isfinite(x.theta) &&
         std::isfinite(x.phi) && std::isfinite(x.psi);
}

}  // namespace

void MetricParams::validate() const {
  if (!(std::isfinite(mass) && std::isfinite(charge) && std::isfinite(r_inf)))
    throw std::invalid_argument("metric parameters must be finite");
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  if (charge < 0.0) throw std::invalid_argument("charge must be non-negative");
  if (mass * mass < charge * charge)
    throw std::invalid_argument("M^2 >= q^2 required for real horizon radii");
  if (!(r_inf > 0.0)) throw std::invalid_argument("r_inf must be positive");
  if (!(outer_horizon() < r_inf))
    throw std::invalid_argument("outer horizon must lie inside the coordinate range (r+ < r_inf)");
}

double lapse_f(double r, const MetricParams& p) {
  if (!std::isfinite(r)) throw std::domain_error("lapse_f: non-finite radius");
  if (!(r > 0.0)) throw std::domain_error("lapse_f: radius must be positive");
  return detail::lapse_f_impl(r, p);
}

double lapse_f_prime(double r, const MetricParams& p) {
  if (!std::isfinite(r)) throw std::domain_error("lapse_f_prime: non-finite radius");
  if (!(r > 0.0)) throw std::domain_error("lapse_f_prime: radius must be positive");
  const double r2 = r * r;
  return 4.0 * p.mass / (r2 * r) - 4.0 * p.charge * p.charge / (r2 * r2 * r);
}

double squash_k(double r, const MetricParams& p) {
  if (!std::isfinite(r)) throw std::domain_error("squash_k: non-finite radius");
  if (r < 0.0) throw std::domain_error("squash_k: radius must be non-negative");
  if (std::abs(r - p.r_inf) < kRInfGuardFraction * p.r_inf)
    throw pole_error("squash_k: radius inside the guard band around r_inf");
  return detail::squash_k_impl(r, p);
}

double squash_k_prime(double r, const MetricParams& p) {
  if (!std::isfinite(r)) throw std::domain_error("squash_k_prime: non-finite radius");
  if (std::abs(r - p.r_inf) < kRInfGuardFraction * p.r_inf)
    throw pole_error("squash_k_prime: radius inside the guard band around r_inf");
  const double rinf2 = p.r_inf * p.r_inf;
  const double numer = detail::lapse_f_impl(p.r_inf, p) * rinf2 * rinf2;
  const double d = r * r - rinf2;
  return -4.0 * numer * r / (d * d * d);
}

void validate_point(const Coordinates& x, const MetricParams& p) {
  if (!all_finite(x)) throw std::domain_error("coordinates must be finite");
  if (!(x.r > 0.0)) throw std::domain_error("radius must be positive");
  if (x.r >= p.r_inf * (1.0 - kRInfGuardFraction))
    throw pole_error("radius inside the guard band around r_inf");
  constexpr double pi = 3.14159265358979323846;
  if (x.theta < kThetaGuard || x.theta > pi - kThetaGuard)
    throw coordinate_singularity_error("theta within the polar guard band");
  if (std::abs(detail::lapse_f_impl(x.r, p)) < kHorizonGuard)
    throw horizon_error("point inside the horizon guard band (metric degenerate)");
}

MetricTensor metric_at(const Coordinates& x, const MetricParams& p) {
  validate_point(x, p);
  const auto m = detail::metric_components<double>(x.r, x.theta, p);
  MetricTensor g = MetricTensor::Zero();
  g(kCoordT, kCoordT) = m.tt;
  g(kCoordR, kCoordR) = m.rr;
  g(kCoordTheta, kCoordTheta) = m.thth;
  g(kCoordPhi, kCoordPhi) = m.phph;
  g(kCoordPhi, kCoordPsi) = m.phps;
  g(kCoordPsi, kCoordPhi) = m.phps;
  g(kCoordPsi, kCoordPsi) = m.psps;
  return g;
}

MetricTensor inverse_metric_at(const Coordinates& x, const MetricParams& p) {
  validate_point(x, p);
  const auto m = detail::metric_components<double>(x.r, x.theta, p);
  const double det = m.phph * m.psps - m.phps * m.phps;
  if (det == 0.0)
    throw coordinate_singularity_error("phi-psi block singular");
  MetricTensor gi = MetricTensor::Zero();
  gi(kCoordT, kCoordT) = 1.0 / m.tt;
  gi(kCoordR, kCoordR) = 1.0 / m.rr;
  gi(kCoordTheta, kCoordTheta) = 1.0 / m.thth;
  gi(kCoordPhi, kCoordPhi) = m.psps / det;
  gi(kCoordPhi, kCoordPsi) = -m.phps / det;
  gi(kCoordPsi, kCoordPhi) = -m.phps / det;
  gi(kCoordPsi, kCoordPsi) = m.phph / det;
  return gi;
}

std::array<MetricTensor, 5> metric_derivatives_at(const Coordinates& x, const MetricParams& p) {
  validate_point(x, p);
  using D = Dual<2>;
  const auto m = detail::metric_components<D>(D::seeded(x.r, 0), D::seeded(x.theta, 1), p);
  std::array<MetricTensor, 5> dg;
  for (auto& slice : dg) slice = MetricTensor::Zero();
  auto fill = [&dg](int mu, int nu, const D& c) {
    dg[kCoordR](mu, nu) = dg[kCoordR](nu, mu) = c.der[0];
    dg[kCoordTheta](mu, nu) = dg[kCoordTheta](nu, mu) = c.der[1];
  };
  fill(kCoordT, kCoordT, m.tt);
  fill(kCoordR, kCoordR, m.rr);
  fill(kCoordTheta, kCoordTheta, m.thth);
  fill(kCoordPhi, kCoordPhi, m.phph);
  fill(kCoordPhi, kCoordPsi, m.phps);
  fill(kCoordPsi, kCoordPsi, m.psps);
  return dg;
}

}  // namespace kksym
