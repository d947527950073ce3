#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kksym/metric.hpp"

namespace kksym {

/// Extended variable slots for coefficient functions on (s, x)-space:
/// the curve parameter s followed by the five spacetime coordinates.
enum Var : int { kVarS = 0, kVarT = 1, kVarR = 2, kVarTheta = 3, kVarPhi = 4, kVarPsi = 5 };

inline constexpr int kVarCount = 6;

using Point6 = std::array<double, 6>;

inline Point6 to_point6(double s, const Coordinates& x) {
  return {s, x.t, x.r, x.theta, x.phi, x.psi};
}

/// A scalar coefficient function of (s, x) drawn from a closed set of
/// analytic building blocks, exposing exact first and second partials.
class ScalarField {
 public:
  virtual ~ScalarField() = default;
  virtual double value(const Point6& p) const = 0;
  virtual double d1(int var, const Point6& p) const = 0;
  virtual double d2(int var_a, int var_b, const Point6& p) const = 0;
  virtual bool depends_on(int var) const = 0;
  virtual bool is_zero() const { return false; }
};

using FieldPtr = std::shared_ptr<const ScalarField>;

/// Angular factors available to the rotational generators. Products of one
/// phi factor and one theta factor (with a real coefficient) cover every
/// coefficient appearing in the symmetry algebra of this spacetime.
enum class PhiFactor { kOne, kSin, kCos };
enum class ThetaFactor { kOne, kCot, kCsc };

FieldPtr zero_field();
FieldPtr constant_field(double c);
FieldPtr coordinate_field(Var v);
FieldPtr trig_field(double coefficient, PhiFactor u, ThetaFactor w);
FieldPtr scaled_field(double c, FieldPtr f);
FieldPtr sum_field(std::vector<std::pair<double, FieldPtr>> terms);
FieldPtr product_field(FieldPtr a, FieldPtr b);

/// Derivative view d f / d var. Its own second partials would need third
/// partials of the operand and are deliberately unsupported.
FieldPtr partial_field(FieldPtr f, int var);

/// A point vector field xi(s,x) d/ds + eta^alpha(s,x) d/dx^alpha.
class VectorField {
 public:
  VectorField();  // zero field
  VectorField(std::string label, FieldPtr xi, std::array<FieldPtr, 5> eta);

  /// Coefficient of the extended variable: slot 0 is xi, slots 1..5 are
  /// eta^t .. eta^psi.
  const ScalarField& coeff(int extended_var) const { return *coeffs_[extended_var]; }
  const FieldPtr& coeff_ptr(int extended_var) const { return coeffs_[extended_var]; }
  const ScalarField& xi() const { return *coeffs_[0]; }
  const ScalarField& eta(int alpha) const { return *coeffs_[alpha + 1]; }

  /// True when the field has no d/ds part and no coefficient depends on s,
  /// i.e. it is an ordinary vector field on spacetime.
  bool spacetime_only() const;

  const std::string& label() const { return label_; }
  VectorField with_label(std::string label) const;

 private:
  std::string label_;
  std::array<FieldPtr, kVarCount> coeffs_;
};

/// Componentwise linear combination sum_i c_i X_i.
VectorField linear_combination(std::string label,
                               const std::vector<std::pair<double, const VectorField*>>& terms);

}  // namespace kksym
