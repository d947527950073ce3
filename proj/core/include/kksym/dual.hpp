#pragma once

#include <array>
#include <cmath>

namespace kksym {

/// Forward-mode derivative propagation: a value together with N partial
/// derivatives. Nesting the base scalar (Dual<N, Dual<M>>) propagates
/// second-order partials through the same closed-form expressions.
template <int N, typename B = double>
struct Dual {
  B val{};
  std::array<B, N> der{};

  Dual() = default;
  Dual(const B& v) : val(v) {}  // implicit lift from the base scalar

  static Dual seeded(const B& v, int slot) {
    Dual d(v);
    d.der[slot] = B(1.0);
    return d;
  }
};

template <int N, typename B>
Dual<N, B> operator-(const Dual<N, B>& a) {
  Dual<N, B> r;
  r.val = -a.val;
  for (int i = 0; i < N; ++i) r.der[i] = -a.der[i];
  return r;
}

template <int N, typename B>
Dual<N, B> operator+(const Dual<N, B>& a, const Dual<N, B>& b) {
  Dual<N, B> r;
  r.val = a.val + b.val;
  for (int i = 0; i < N; ++i) r.der[i] = a.der[i] + b.der[i];
  return r;
}

template <int N, typename B>
Dual<N, B> operator-(const Dual<N, B>& a, const Dual<N, B>& b) {
  Dual<N, B> r;
  r.val = a.val - b.val;
  for (int i = 0; i < N; ++i) r.der[i] = a.der[i] - b.der[i];
  return r;
}

template <int N, typename B>
Dual<N, B> operator*(const Dual<N, B>& a, const Dual<N, B>& b) {
  Dual<N, B> r;
  r.val = a.val * b.val;
  for (int i = 0; i < N; ++i) r.der[i] = a.der[i] * b.val + a.val * b.der[i];
  return r;
}

template <int N, typename B>
Dual<N, B> operator/(const Dual<N, B>& a, const Dual<N, B>& b) {
  Dual<N, B> r;
  r.val = a.val / b.val;
  for (int i = 0; i < N; ++i) r.der[i] = (a.der[i] - r.val * b.der[i]) / b.val;
  return r;
}

template <int N, typename B>
Dual<N, B> operator+(const Dual<N, B>& a, double b) {
  Dual<N, B> r = a;
  r.val = a.val + b;
  return r;
}
template <int N, typename B>
Dual<N, B> operator+(double a, const Dual<N, B>& b) {
  return b + a;
}

template <int N, typename B>
Dual<N, B> operator-(const Dual<N, B>& a, double b) {
  Dual<N, B> r = a;
  r.val = a.val - b;
  return r;
}
template <int N, typename B>
Dual<N, B> operator-(double a, const Dual<N, B>& b) {
  return -(b - a);
}

template <int N, typename B>
Dual<N, B> operator*(const Dual<N, B>& a, double b) {
  Dual<N, B> r;
  r.val = a.val * b;
  for (int i = 0; i < N; ++i) r.der[i] = a.der[i] * b;
  return r;
}
template <int N, typename B>
Dual<N, B> operator*(double a, const Dual<N, B>& b) {
  return b * a;
}

template <int N, typename B>
Dual<N, B> operator/(const Dual<N, B>& a, double b) {
  return a * (1.0 / b);
}
template <int N, typename B>
Dual<N, B> operator/(double a, const Dual<N, B>& b) {
  return Dual<N, B>(B(a)) / b;
}

template <int N, typename B>
Dual<N, B> sin(const Dual<N, B>& a) {
  using std::cos;
  using std::sin;
  Dual<N, B> r;
  r.val = sin(a.val);
  const B c = cos(a.val);
  for (int i = 0; i < N; ++i) r.der[i] = c * a.der[i];
  return r;
}

template <int N, typename B>
Dual<N, B> cos(const Dual<N, B>& a) {
  using std::cos;
  using std::sin;
  Dual<N, B> r;
  r.val = cos(a.val);
  const B s = sin(a.val);
  for (int i = 0; i < N; ++i) r.der[i] = -(s * a.der[i]);
  return r;
}

template <int N, typename B>
Dual<N, B> sqrt(const Dual<N, B>& a) {
  using std::sqrt;
  Dual<N, B> r;
  r.val = sqrt(a.val);
  const B half_inv = 0.5 / r.val;
  for (int i = 0; i < N; ++i) r.der[i] = half_inv * a.der[i];
  return r;
}

/// Strips all derivative slots, returning the innermost double value.
inline double scalar_value(double x) { return x; }
template <int N, typename B>
double scalar_value(const Dual<N, B>& x) {
  return scalar_value(x.val);
}

}  // namespace kksym
