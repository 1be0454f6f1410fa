#pragma once

#include <array>
#include <utility>

#include "apollonian/minkowski.hpp"

namespace apollonian {

/// Four mutually tangent disks. Order matters: reflections are tracked by index.
template <class T>
struct DescartesQuadruple {
  std::array<MinkowskiVector<T>, 4> disks;

  friend bool operator==(const DescartesQuadruple&, const DescartesQuadruple&) = default;
};

/// (A + B + C + D)^2 == 2 (A^2 + B^2 + C^2 + D^2)
template <class T>
bool descartes_identity(const T& a, const T& b, const T& c, const T& d, const Tolerance<T>& tol = {});

/// Pairwise tangency (<v_i, v_j> = 1, i != j), unit normalization and the
/// curvature identity.
template <class T>
bool validate_quadruple(const DescartesQuadruple<T>& q, const Tolerance<T>& tol = {});

/// Both curvatures completing a tangent triple: A + B + C ± 2 sqrt(AB + BC + CA),
/// returned as (plus, minus). Throws NegativeDiscriminant, or NotExactSquare in
/// exact mode when the root is irrational.
template <class T>
std::pair<T, T> solve_descartes(const T& a, const T& b, const T& c, const Tolerance<T>& tol = {});

/// Replace disk `index` by 2 (sum of the other three) - disk, on all four
/// Minkowski components. An involution at fixed index.
template <class T>
DescartesQuadruple<T> boyd_reflect(const DescartesQuadruple<T>& q, int index);

/// The reflected vector alone.
template <class T>
MinkowskiVector<T> reflected_disk(const MinkowskiVector<T>& a, const MinkowskiVector<T>& b,
                                  const MinkowskiVector<T>& c, const MinkowskiVector<T>& d) {
  return T(2) * (a + b + c) - d;
}

}  // namespace apollonian
