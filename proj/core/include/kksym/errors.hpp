#pragma once

#include <stdexcept>

namespace kksym {

/// Evaluation point sits inside the horizon guard band (|lapse| too small).
struct horizon_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Squashing function evaluated at (or too close to) its pole r = r_inf.
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Polar-angle coordinate singularity (theta at 0 or pi).
struct coordinate_singularity_error : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace kksym
