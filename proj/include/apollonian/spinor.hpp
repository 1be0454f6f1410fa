#pragma once

// Tangency spinors. A spinor is a complex number u = m + n i, equivalently
// the column [m, n]. For an ordered pair of tangent disks with curvatures A, B
// and centers w1, w2 the spinor satisfies u^2 = (w2 - w1) A B; it is defined
// up to sign and stored here in the canonical branch (m > 0, or m = 0, n >= 0).

#include "apollonian/minkowski.hpp"

namespace apollonian {

template <class T>
struct Spinor {
  T m{};
  T n{};

  friend bool operator==(const Spinor&, const Spinor&) = default;

  friend Spinor operator+(const Spinor& a, const Spinor& b) { return {a.m + b.m, a.n + b.n}; }
  friend Spinor operator-(const Spinor& a, const Spinor& b) { return {a.m - b.m, a.n - b.n}; }
  friend Spinor operator-(const Spinor& a) { return {-a.m, -a.n}; }
  friend Spinor operator*(int s, const Spinor& a) { return s >= 0 ? a : -a; }
};

/// A point of the complex plane, used for u^2 and for z A B.
template <class T>
struct Complex {
  T re{};
  T im{};

  friend bool operator==(const Complex&, const Complex&) = default;
};

template <class T>
struct TangencySpinor {
  Symbol<T> source;
  Symbol<T> target;
  Spinor<T> spinor;
};

/// Scalar product g(u, v) = m_u m_v + n_u n_v.
template <class T>
T g(const Spinor<T>& u, const Spinor<T>& v) {
  return u.m * v.m + u.n * v.n;
}

/// Symplectic product omega(u, v) = det[u v] = m_u n_v - m_v n_u.
template <class T>
T omega(const Spinor<T>& u, const Spinor<T>& v) {
  return u.m * v.n - v.m * u.n;
}

template <class T>
T norm_squared(const Spinor<T>& u) {
  return g(u, u);
}

/// u' = i u, i.e. (m, n) -> (-n, m).
template <class T>
Spinor<T> conjugate(const Spinor<T>& u) {
  return {-u.n, u.m};
}

template <class T>
Complex<T> square(const Spinor<T>& u) {
  return {u.m * u.m - u.n * u.n, T(2) * u.m * u.n};
}

template <class T>
bool spinor_equal(const Spinor<T>& a, const Spinor<T>& b, const Tolerance<T>& tol = {}) {
  const double scale = std::sqrt(std::max(to_double(norm_squared(a)), to_double(norm_squared(b))));
  return tol.equal(a.m, b.m, scale) && tol.equal(a.n, b.n, scale);
}

template <class T>
bool complex_equal(const Complex<T>& a, const Complex<T>& b, const Tolerance<T>& tol = {}) {
  const double scale = std::max({std::abs(to_double(a.re)), std::abs(to_double(a.im)),
                                 std::abs(to_double(b.re)), std::abs(to_double(b.im))});
  return tol.equal(a.re, b.re, scale) && tol.equal(a.im, b.im, scale);
}

/// Principal root in the canonical branch. Exact mode throws NotExactSquare
/// when z is not the square of a Gaussian rational.
template <class T>
Spinor<T> complex_sqrt(const Complex<T>& z);

/// z A B for the ordered pair, computed from symbols without division:
/// (A x_t - B x_s, A y_t - B y_s).
template <class T>
Complex<T> spinor_square(const Symbol<T>& source, const Symbol<T>& target);

/// Throws NotTangent, or NotExactSquare (exact mode) for irrational spinors.
template <class T>
TangencySpinor<T> tangency_spinor(const Symbol<T>& source, const Symbol<T>& target,
                                  const Tolerance<T>& tol = {});

template <class T>
PythagoreanTriple<T> euclid_to_triple(const Spinor<T>& u) {
  return {u.m * u.m - u.n * u.n, T(2) * u.m * u.n, u.m * u.m + u.n * u.n};
}

/// Inverse of euclid_to_triple up to sign: sqrt(a + b i).
template <class T>
Spinor<T> triple_to_spinor(const PythagoreanTriple<T>& t, const Tolerance<T>& tol = {});

// Both products are returned raw; the laws only fix them up to sign.

/// omega(a, b) for spinors from one disk C to two others of a tangent triple;
/// |result| = |C|.
template <class T>
T curvature_from_spinors(const Spinor<T>& a, const Spinor<T>& b) {
  return omega(a, b);
}

/// g(a, b); |result| is the curvature of the circle through the three
/// tangency points, sqrt(AB + BC + CA).
template <class T>
T midcircle_from_spinors(const Spinor<T>& a, const Spinor<T>& b) {
  return g(a, b);
}

}  // namespace apollonian
