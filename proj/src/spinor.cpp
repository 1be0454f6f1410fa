#include "apollonian/spinor.hpp"

#include <complex>

#include "apollonian/error.hpp"

namespace apollonian {

namespace {

Spinor<Rational> sqrt_exact(const Complex<Rational>& z) {
  const Rational& p = z.re;
  const Rational& q = z.im;
  auto fail = [&] {
    return Error(ErrorKind::NotExactSquare,
                 format_scalar(p) + " + " + format_scalar(q) + "i is not a Gaussian-rational square");
  };
  const auto modulus = exact_sqrt(Rational(p * p + q * q));
  if (!modulus) throw fail();
  const auto m = exact_sqrt(Rational((*modulus + p) / 2));
  const auto n = exact_sqrt(Rational((*modulus - p) / 2));
  if (!m || !n) throw fail();
  // m >= 0 here; the sign of n follows q (n alone carries it when m = 0, q = 0).
  Spinor<Rational> u{*m, q < 0 ? Rational(-*n) : *n};
  return u;
}

Spinor<double> sqrt_float(const Complex<double>& z) {
  const std::complex<double> r = std::sqrt(std::complex<double>(z.re, z.im));
  Spinor<double> u{r.real(), r.imag()};
  if (u.m < 0 || (u.m == 0 && u.n < 0)) u = -u;
  if (u.m == 0) u.m = 0.0;  // drop negative zero
  return u;
}

}  // namespace

template <class T>
Spinor<T> complex_sqrt(const Complex<T>& z) {
  if constexpr (is_exact_v<T>) {
    return sqrt_exact(z);
  } else {
    return sqrt_float(z);
  }
}

template <class T>
Complex<T> spinor_square(const Symbol<T>& source, const Symbol<T>& target) {
  return {source.beta * target.x_dot - target.beta * source.x_dot,
          source.beta * target.y_dot - target.beta * source.y_dot};
}

template <class T>
TangencySpinor<T> tangency_spinor(const Symbol<T>& source, const Symbol<T>& target,
                                  const Tolerance<T>& tol) {
  if (!tangency_test(symbol_to_vector(source), symbol_to_vector(target), tol))
    throw Error(ErrorKind::NotTangent,
                format_symbol(source) + " and " + format_symbol(target) + " are not tangent");
  try {
    return {source, target, complex_sqrt(spinor_square(source, target))};
  } catch (const Error& e) {
    throw Error(e.kind(), "spinor of (" + format_symbol(source) + ", " + format_symbol(target) +
                              "): " + e.detail());
  }
}

template <class T>
Spinor<T> triple_to_spinor(const PythagoreanTriple<T>& t, const Tolerance<T>& tol) {
  if (t.c < T(0) || !is_pythagorean(t, tol))
    throw Error(ErrorKind::NotPythagorean, "(" + format_scalar(t.a) + ", " + format_scalar(t.b) +
                                               ", " + format_scalar(t.c) + ") is not a Pythagorean triple");
  return complex_sqrt(Complex<T>{t.a, t.b});
}

#define APOLLONIAN_INSTANTIATE(T)                                                                 \
  template Spinor<T> complex_sqrt(const Complex<T>&);                                             \
  template Complex<T> spinor_square(const Symbol<T>&, const Symbol<T>&);                          \
  template TangencySpinor<T> tangency_spinor(const Symbol<T>&, const Symbol<T>&,                  \
                                             const Tolerance<T>&);                                \
  template Spinor<T> triple_to_spinor(const PythagoreanTriple<T>&, const Tolerance<T>&);

APOLLONIAN_INSTANTIATE(Rational)
APOLLONIAN_INSTANTIATE(double)

}  // namespace apollonian
