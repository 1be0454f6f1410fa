#pragma once

// Disks in the plane as unit space-like vectors of R^{3;1} in the isotropic
// basis (xi1, xi2, beta, gamma) with
//
//   <v, w> = -xi1 xi1' - xi2 xi2' + (beta gamma' + beta' gamma) / 2.
//
// A disk of signed radius r centered at (x, y) maps to
//   (x/r, y/r, 1/r, (x^2 + y^2 - r^2)/r),
// and its symbol "x_dot,y_dot/beta" keeps the first three components. The
// outer disk of a packing carries a negative radius, so tangent disks always
// satisfy <v, w> = 1.

#include <compare>
#include <string>

#include "apollonian/scalar.hpp"

namespace apollonian {

template <class T>
struct Disk {
  T center_x{};
  T center_y{};
  T radius{};  // signed; negative for an outer disk
};

template <class T>
struct Symbol {
  T x_dot{};
  T y_dot{};
  T beta{};

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Canonical ordering used for deterministic output: (beta, x_dot, y_dot).
template <class T>
bool symbol_less(const Symbol<T>& a, const Symbol<T>& b) {
  if (a.beta != b.beta) return a.beta < b.beta;
  if (a.x_dot != b.x_dot) return a.x_dot < b.x_dot;
  return a.y_dot < b.y_dot;
}

template <class T>
struct MinkowskiVector {
  T xi1{};
  T xi2{};
  T beta{};
  T gamma{};

  friend bool operator==(const MinkowskiVector&, const MinkowskiVector&) = default;

  MinkowskiVector& operator+=(const MinkowskiVector& o) {
    xi1 += o.xi1;
    xi2 += o.xi2;
    beta += o.beta;
    gamma += o.gamma;
    return *this;
  }
  friend MinkowskiVector operator+(MinkowskiVector a, const MinkowskiVector& b) { return a += b; }
  friend MinkowskiVector operator-(const MinkowskiVector& a, const MinkowskiVector& b) {
    return {a.xi1 - b.xi1, a.xi2 - b.xi2, a.beta - b.beta, a.gamma - b.gamma};
  }
  friend MinkowskiVector operator*(const T& k, const MinkowskiVector& a) {
    return {k * a.xi1, k * a.xi2, k * a.beta, k * a.gamma};
  }
};

template <class T>
struct PythagoreanTriple {
  T a{};
  T b{};
  T c{};

  friend bool operator==(const PythagoreanTriple&, const PythagoreanTriple&) = default;
};

template <class T>
MinkowskiVector<T> disk_to_vector(const Disk<T>& d);

template <class T>
Disk<T> symbol_to_disk(const Symbol<T>& s);

template <class T>
Symbol<T> disk_to_symbol(const Disk<T>& d);

template <class T>
Symbol<T> vector_to_symbol(const MinkowskiVector<T>& v, const Tolerance<T>& tol = {});

template <class T>
MinkowskiVector<T> symbol_to_vector(const Symbol<T>& s);

template <class T>
T minkowski_inner(const MinkowskiVector<T>& v, const MinkowskiVector<T>& w);

template <class T>
bool is_unit_spacelike(const MinkowskiVector<T>& v, const Tolerance<T>& tol = {});

template <class T>
bool tangency_test(const MinkowskiVector<T>& v, const MinkowskiVector<T>& w,
                   const Tolerance<T>& tol = {});

/// v ⋈ w = (b1 x2 - b2 x1, b1 y2 - b2 y1, b1 + b2) in reduced coordinates.
/// For tangent unit vectors the result is null, i.e. a^2 + b^2 = c^2.
/// Throws NotTangent otherwise.
template <class T>
PythagoreanTriple<T> bowtie(const MinkowskiVector<T>& v, const MinkowskiVector<T>& w,
                            const Tolerance<T>& tol = {});

template <class T>
bool is_pythagorean(const PythagoreanTriple<T>& t, const Tolerance<T>& tol = {});

/// Center as plane coordinates.
template <class T>
T center_x(const Symbol<T>& s) {
  return s.x_dot / s.beta;
}
template <class T>
T center_y(const Symbol<T>& s) {
  return s.y_dot / s.beta;
}

/// "x,y/beta" grammar, each token an optionally-signed rational.
template <class T>
Symbol<T> parse_symbol(std::string_view text);

template <class T>
std::string format_symbol(const Symbol<T>& s);

}  // namespace apollonian
