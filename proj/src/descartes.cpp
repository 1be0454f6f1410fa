#include "apollonian/descartes.hpp"

#include "apollonian/error.hpp"

namespace apollonian {

template <class T>
bool descartes_identity(const T& a, const T& b, const T& c, const T& d, const Tolerance<T>& tol) {
  const T sum = a + b + c + d;
  const T lhs = sum * sum;
  const T rhs = T(2) * (a * a + b * b + c * c + d * d);
  return tol.equal(lhs, rhs, to_double(rhs));
}

template <class T>
bool validate_quadruple(const DescartesQuadruple<T>& q, const Tolerance<T>& tol) {
  for (int i = 0; i < 4; ++i) {
    if (!is_unit_spacelike(q.disks[i], tol)) return false;
    for (int j = i + 1; j < 4; ++j)
      if (!tangency_test(q.disks[i], q.disks[j], tol)) return false;
  }
  return descartes_identity(q.disks[0].beta, q.disks[1].beta, q.disks[2].beta, q.disks[3].beta, tol);
}

template <class T>
std::pair<T, T> solve_descartes(const T& a, const T& b, const T& c, const Tolerance<T>& tol) {
  T disc = a * b + b * c + c * a;
  if (disc < T(0)) {
    if constexpr (is_exact_v<T>) {
      throw Error(ErrorKind::NegativeDiscriminant, "AB + BC + CA = " + format_scalar(disc) + " < 0");
    } else {
      // Round-off below zero on a tangent (double-root) triple.
      if (!tol.is_zero(disc, std::max({a * a, b * b, c * c})))
        throw Error(ErrorKind::NegativeDiscriminant, "AB + BC + CA = " + format_scalar(disc) + " < 0");
      disc = 0;
    }
  }
  const auto root = exact_sqrt(disc);
  if (!root)
    throw Error(ErrorKind::NotExactSquare,
                "sqrt(AB + BC + CA) = sqrt(" + format_scalar(disc) + ") is irrational; use float mode");
  const T s = a + b + c;
  return {s + T(2) * *root, s - T(2) * *root};
}

template <class T>
DescartesQuadruple<T> boyd_reflect(const DescartesQuadruple<T>& q, int index) {
  if (index < 0 || index > 3) throw Error(ErrorKind::InvalidRoot, "reflection index out of range");
  DescartesQuadruple<T> out = q;
  const auto& d = q.disks;
  out.disks[index] = reflected_disk(d[(index + 1) % 4], d[(index + 2) % 4], d[(index + 3) % 4], d[index]);
  return out;
}

#define APOLLONIAN_INSTANTIATE(T)                                                                  \
  template bool descartes_identity(const T&, const T&, const T&, const T&, const Tolerance<T>&);   \
  template bool validate_quadruple(const DescartesQuadruple<T>&, const Tolerance<T>&);             \
  template std::pair<T, T> solve_descartes(const T&, const T&, const T&, const Tolerance<T>&);     \
  template DescartesQuadruple<T> boyd_reflect(const DescartesQuadruple<T>&, int);

APOLLONIAN_INSTANTIATE(Rational)
APOLLONIAN_INSTANTIATE(double)

}  // namespace apollonian
