#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "kksym/dual.hpp"
#include "kksym/errors.hpp"

namespace kksym {

/// Coordinate slots of the five-dimensional charged squashed Kaluza-Klein
/// spacetime, in the fixed order used by every tensor in this library.
enum Coord : int { kCoordT = 0, kCoordR = 1, kCoordTheta = 2, kCoordPhi = 3, kCoordPsi = 4 };

inline constexpr int kDim = 5;

inline constexpr double kThetaGuard = 1e-6;        // clamp of the polar-angle domain
inline constexpr double kHorizonGuard = 1e-10;     // reject points with |f(r)| below this
inline constexpr double kRInfGuardFraction = 1e-6; // reject r within this fraction of r_inf

struct MetricParams {
  double mass = 1.0;    // M, geometric units
  double charge = 0.5;  // q, geometric units
  double r_inf = 10.0;  // squashing radius

  /// Outer horizon radius r+ = sqrt(M + sqrt(M^2 - q^2)).
  double outer_horizon() const {
    return std::sqrt(mass + std::sqrt(mass * mass - charge * charge));
  }

  /// Throws std::invalid_argument unless M > 0, M^2 >= q^2, q >= 0 and the
  /// outer horizon lies strictly inside the coordinate range (r+ < r_inf).
  void validate() const;
};

struct Coordinates {
  double t = 0.0;
  double r = 5.0;
  double theta = 1.5707963267948966;
  double phi = 0.0;
  double psi = 0.0;
};

using MetricTensor = Eigen::Matrix<double, 5, 5>;

namespace detail {

/// f(r) = 1 - 2M/r^2 + q^2/r^4
template <typename T>
T lapse_f_impl(const T& r, const MetricParams& p) {
  const T r2 = r * r;
  return 1.0 - (2.0 * p.mass) / r2 + (p.charge * p.charge) / (r2 * r2);
}

/// k(r) = f(r_inf) r_inf^4 / (r^2 - r_inf^2)^2
template <typename T>
T squash_k_impl(const T& r, const MetricParams& p) {
  const double rinf2 = p.r_inf * p.r_inf;
  const double numer = lapse_f_impl(p.r_inf, p) * rinf2 * rinf2;
  const T d = r * r - rinf2;
  return numer / (d * d);
}

/// The structurally nonzero metric components. Everything else vanishes;
/// the only off-diagonal coupling is the phi-psi block.
template <typename T>
struct MetricComponents {
  T tt, rr, thth, phph, phps, psps;
};

template <typename T>
MetricComponents<T> metric_components(const T& r, const T& theta, const MetricParams& p) {
  using std::cos;
  using std::sin;
  const T f = lapse_f_impl(r, p);
  const T k = squash_k_impl(r, p);
  const T quarter_r2 = r * r * 0.25;
  const T st = sin(theta);
  const T ct = cos(theta);
  MetricComponents<T> m;
  m.tt = -f;
  m.rr = k * k / f;
  m.thth = quarter_r2 * k;
  m.phph = quarter_r2 * (k * st * st + ct * ct);
  m.phps = quarter_r2 * ct;
  m.psps = quarter_r2;
  return m;
}

}  // namespace detail

/// f(r) = 1 - 2M/r^2 + q^2/r^4. Throws std::domain_error on non-finite or
/// non-positive r.
double lapse_f(double r, const MetricParams& p);

/// Closed-form f'(r) = 4M/r^3 - 4q^2/r^5. Kept alongside the propagated
/// derivative so the two routes can be checked against each other.
double lapse_f_prime(double r, const MetricParams& p);

/// k(r) = f(r_inf) r_inf^4 / (r^2 - r_inf^2)^2 for 0 <= r < r_inf.
/// Throws pole_error inside the guard band around r = r_inf.
double squash_k(double r, const MetricParams& p);

/// Closed-form k'(r) = -4 f(r_inf) r_inf^4 r / (r^2 - r_inf^2)^3.
double squash_k_prime(double r, const MetricParams& p);

/// Rejects points outside the usable chart: non-finite entries, r outside
/// (0, r_inf) or inside the r_inf guard band, theta within kThetaGuard of a
/// pole, or |f(r)| below the horizon guard.
void validate_point(const Coordinates& x, const MetricParams& p);

/// Covariant metric g_{mu nu} at x. Symmetric; the only off-diagonal entry
/// is g_{phi psi}.
MetricTensor metric_at(const Coordinates& x, const MetricParams& p);

/// Inverse metric, using the diagonal t,r,theta blocks and the closed-form
/// 2x2 inverse of the phi-psi block.
MetricTensor inverse_metric_at(const Coordinates& x, const MetricParams& p);

/// Exact first partials d g_{mu nu} / d x^lambda, indexed by lambda.
/// Computed by forward-mode propagation through the closed forms; the t,
/// phi and psi slices are identically zero.
std::array<MetricTensor, 5> metric_derivatives_at(const Coordinates& x, const MetricParams& p);

}  // namespace kksym
