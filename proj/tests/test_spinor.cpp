#include <doctest.h>

#include "common.hpp"

using namespace testing;

namespace {

Spinor<Q> sp(int m, int n) { return {Q(m), Q(n)}; }

}  // namespace

TEST_SUITE("spinor") {
  TEST_CASE("products") {
    CHECK(g(sp(1, 0), sp(0, 1)) == 0);
    CHECK(g(sp(2, 1), sp(2, 1)) == 5);
    CHECK(g(sp(2, 1), conjugate(sp(2, 1))) == 0);
    CHECK(omega(sp(2, 1), sp(1, 2)) == 3);
    CHECK(omega(sp(1, 0), sp(0, 1)) == 1);
    CHECK(omega(sp(7, -3), sp(7, -3)) == 0);
    CHECK(norm_squared(sp(0, 0)) == 0);
    CHECK(norm_squared(sp(-3, 4)) == 25);
  }

  TEST_CASE("conjugate is multiplication by i") {
    CHECK(conjugate(sp(1, 0)) == sp(0, 1));
    CHECK(conjugate(sp(2, 1)) == sp(-1, 2));
    CHECK(conjugate(conjugate(sp(3, 4))) == sp(-3, -4));
  }

  TEST_CASE("complex_sqrt canonical branch") {
    CHECK(complex_sqrt(Complex<Q>{Q(3), Q(4)}) == sp(2, 1));
    CHECK(complex_sqrt(Complex<Q>{Q(1), Q(0)}) == sp(1, 0));
    CHECK(complex_sqrt(Complex<Q>{Q(0), Q(2)}) == sp(1, 1));
    CHECK(complex_sqrt(Complex<Q>{Q(-1), Q(0)}) == sp(0, 1));
    CHECK(complex_sqrt(Complex<Q>{Q(0), Q(-2)}) == sp(1, -1));
    CHECK(complex_sqrt(Complex<Q>{q("-7/36"), q("24/36")}) == Spinor<Q>{q("1/2"), q("2/3")});
    CHECK(kind_of([] { complex_sqrt(Complex<Q>{Q(2), Q(0)}); }) == ErrorKind::NotExactSquare);
    CHECK(kind_of([] { complex_sqrt(Complex<Q>{Q(1), Q(1)}); }) == ErrorKind::NotExactSquare);
  }

  TEST_CASE("complex_sqrt in float mode") {
    const auto u = complex_sqrt(Complex<double>{3.0, 4.0});
    CHECK(u.m == doctest::Approx(2.0));
    CHECK(u.n == doctest::Approx(1.0));
    const auto v = complex_sqrt(Complex<double>{-4.0, 0.0});
    CHECK(v.m == doctest::Approx(0.0));
    CHECK(v.n == doctest::Approx(2.0));
  }

  TEST_CASE("tangency spinors of the window") {
    const auto t = tangency_spinor(sym("-1,0/2"), sym("0,2/3"));
    CHECK(t.spinor == sp(2, 1));
    CHECK(norm_squared(t.spinor) == 5);
    const auto outer = tangency_spinor(sym("0,0/-1"), sym("-1,0/2"));
    CHECK(outer.spinor == sp(1, 0));
    CHECK(norm_squared(outer.spinor) == 1);

    const auto back = tangency_spinor(sym("0,2/3"), sym("-1,0/2"));
    const auto sq = square(back.spinor);
    const auto fwd = square(t.spinor);
    CHECK(sq == Complex<Q>{-fwd.re, -fwd.im});
    CHECK((back.spinor == conjugate(t.spinor) || back.spinor == -conjugate(t.spinor)));

    CHECK(kind_of([] { tangency_spinor(sym("-1,0/2"), sym("3,4/6")); }) == ErrorKind::NotTangent);
  }

  TEST_CASE("Euclid parametrisation") {
    CHECK(euclid_to_triple(sp(2, 1)) == PythagoreanTriple<Q>{Q(3), Q(4), Q(5)});
    CHECK(euclid_to_triple(sp(1, 0)) == PythagoreanTriple<Q>{Q(1), Q(0), Q(1)});
    CHECK(euclid_to_triple(sp(-2, -1)) == PythagoreanTriple<Q>{Q(3), Q(4), Q(5)});
    CHECK(triple_to_spinor(PythagoreanTriple<Q>{Q(3), Q(4), Q(5)}) == sp(2, 1));
    CHECK(triple_to_spinor(PythagoreanTriple<Q>{Q(1), Q(0), Q(1)}) == sp(1, 0));
    CHECK(triple_to_spinor(PythagoreanTriple<Q>{Q(-1), Q(0), Q(1)}) == sp(0, 1));
    CHECK(kind_of([] { triple_to_spinor(PythagoreanTriple<Q>{Q(3), Q(4), Q(6)}); }) == ErrorKind::NotPythagorean);
    CHECK(kind_of([] { triple_to_spinor(PythagoreanTriple<Q>{Q(3), Q(4), Q(-5)}); }) ==
          ErrorKind::NotPythagorean);
  }

  TEST_CASE("spinor products on the window triple {2, 2, 3}") {
    // From the upper curvature-3 disk towards both curvature-2 disks.
    const auto a = tangency_spinor(sym("0,2/3"), sym("-1,0/2")).spinor;
    const auto b = tangency_spinor(sym("0,2/3"), sym("1,0/2")).spinor;
    CHECK(a == sp(1, -2));
    CHECK(b == sp(2, -1));
    CHECK(abs_value(curvature_from_spinors(a, b)) == 3);
    CHECK(abs_value(midcircle_from_spinors(a, b)) == 4);
    CHECK(curvature_from_spinors(a, -b) == -curvature_from_spinors(a, b));
    CHECK(curvature_from_spinors(a, a) == 0);
    const Q gg = g(a, b) * g(a, b);
    const Q ww = omega(a, b) * omega(a, b);
    CHECK(gg + ww == norm_squared(a) * norm_squared(b));
    CHECK(gg + ww == 25);
  }

  TEST_CASE("spinor sums identify the completions") {
    const auto a = tangency_spinor(sym("0,2/3"), sym("-1,0/2")).spinor;
    const auto b = tangency_spinor(sym("0,2/3"), sym("1,0/2")).spinor;
    CHECK(square(a + b) == spinor_square(sym("0,2/3"), sym("0,4/15")));
    CHECK(square(a - b) == spinor_square(sym("0,2/3"), sym("0,0/-1")));
  }

  TEST_CASE("u1^2 g(u2,u3) + u2^2 g(u3,u1) + u3^2 g(u1,u2) vanishes exactly for u1 + u2 + u3 = 0") {
    for (int m1 = -3; m1 <= 3; ++m1)
      for (int n1 = -3; n1 <= 3; ++n1)
        for (int m2 = -3; m2 <= 3; ++m2)
          for (int n2 = -3; n2 <= 3; ++n2) {
            const auto u1 = sp(m1, n1);
            const auto u2 = sp(m2, n2);
            const auto u3 = -(u1 + u2);
            const auto s1 = square(u1), s2 = square(u2), s3 = square(u3);
            const Q g23 = g(u2, u3), g31 = g(u3, u1), g12 = g(u1, u2);
            CHECK(s1.re * g23 + s2.re * g31 + s3.re * g12 == 0);
            CHECK(s1.im * g23 + s2.im * g31 + s3.im * g12 == 0);
          }
  }
}
