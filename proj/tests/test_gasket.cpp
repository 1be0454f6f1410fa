#include <doctest.h>

#include "common.hpp"
#include "oracle.hpp"

using namespace testing;

namespace {

std::vector<std::string> symbols(const Packing<Q>& p) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(format_symbol(p.symbol(static_cast<int>(i))));
  return out;
}

DescartesQuadruple<Q> window_root() { return preset<Q>("apollonian-window"); }

}  // namespace

TEST_SUITE("descartes") {
  TEST_CASE("identity and validation") {
    CHECK(descartes_identity(Q(-1), Q(2), Q(2), Q(3)));
    CHECK(descartes_identity(Q(2), Q(3), Q(6), Q(23)));
    CHECK_FALSE(descartes_identity(Q(1), Q(1), Q(1), Q(1)));
    CHECK(validate_quadruple(window_root()));
    const DescartesQuadruple<Q> ones{{vec("0,0/1"), vec("1,0/1"), vec("0,1/1"), vec("1,1/1")}};
    CHECK_FALSE(validate_quadruple(ones));
    const DescartesQuadruple<Q> small{{vec("-1,0/2"), vec("0,2/3"), vec("-3,4/6"), vec("-8,12/23")}};
    CHECK(validate_quadruple(small));
  }

  TEST_CASE("solve_descartes") {
    CHECK(solve_descartes(Q(2), Q(2), Q(3)) == std::pair(Q(15), Q(-1)));
    CHECK(solve_descartes(Q(-1), Q(2), Q(2)) == std::pair(Q(3), Q(3)));
    CHECK(solve_descartes(Q(0), Q(0), Q(0)) == std::pair(Q(0), Q(0)));
    CHECK(solve_descartes(Q(2), Q(3), Q(6)) == std::pair(Q(23), Q(-1)));
    CHECK(kind_of([] { solve_descartes(Q(-1), Q(-1), Q(1)); }) == ErrorKind::NegativeDiscriminant);
    CHECK(kind_of([] { solve_descartes(Q(1), Q(1), Q(1)); }) == ErrorKind::NotExactSquare);
    const auto [p, m] = solve_descartes(1.0, 1.0, 1.0);
    CHECK(p == doctest::Approx(3.0 + 2.0 * std::sqrt(3.0)));
    CHECK(m == doctest::Approx(3.0 - 2.0 * std::sqrt(3.0)));
  }

  TEST_CASE("boyd_reflect") {
    const auto root = window_root();
    const auto top = boyd_reflect(root, 0);
    CHECK(vector_to_symbol(top.disks[0]) == sym("0,4/15"));
    CHECK(validate_quadruple(top));
    CHECK(boyd_reflect(top, 0) == root);
    const auto mirror = boyd_reflect(root, 3);
    CHECK(vector_to_symbol(mirror.disks[3]) == sym("0,-2/3"));
    CHECK(validate_quadruple(mirror));
    for (int i = 0; i < 4; ++i) CHECK(boyd_reflect(boyd_reflect(root, i), i) == root);
  }
}

TEST_SUITE("gasket") {
  TEST_CASE("preset") {
    const auto root = window_root();
    CHECK(validate_quadruple(root));
    CHECK(root.disks[0].beta == -1);
    CHECK(root.disks[1].beta == 2);
    CHECK(root.disks[2].beta == 2);
    CHECK(root.disks[3].beta == 3);
    CHECK(kind_of([] { preset<Q>("nonsense"); }) == ErrorKind::UnknownPreset);
  }

  TEST_CASE("window to curvature 3") {
    const auto p = window(3);
    CHECK(curvature_list(*p) == std::vector<long>{-1, 2, 2, 3, 3});
    CHECK(p->quadruples.size() == 2);
  }

  TEST_CASE("window to curvature 15") {
    const auto p = window(15);
    // Frozen from the curvature-only oracle and the symbol recursion.
    CHECK(curvature_list(*p) ==
          std::vector<long>{-1, 2, 2, 3, 3, 6, 6, 6, 6, 11, 11, 11, 11, 14, 14, 14, 14, 15, 15});
    CHECK(symbols(*p) == std::vector<std::string>{"0,0/-1", "-1,0/2", "1,0/2", "0,-2/3", "0,2/3", "-3,-4/6",
                                                  "-3,4/6", "3,-4/6", "3,4/6", "-8,-6/11", "-8,6/11",
                                                  "8,-6/11", "8,6/11", "-5,-12/14", "-5,12/14", "5,-12/14",
                                                  "5,12/14", "0,-4/15", "0,4/15"});
    CHECK(p->integral);
  }

  TEST_CASE("packing invariants") {
    const auto p = window(50);
    CHECK(p->size() == 69);
    for (std::size_t qi = 0; qi < p->quadruples.size(); ++qi) CHECK(validate_quadruple(p->quadruple(qi)));
    for (std::size_t i = 1; i < p->size(); ++i)
      CHECK(symbol_less(p->symbol(static_cast<int>(i - 1)), p->symbol(static_cast<int>(i))));
    for (std::size_t i = 0; i < p->size(); ++i) {
      const auto& prov = p->provenance[i];
      if (prov.parent_quadruple < 0) continue;
      // The child disk completes the parent's other three disks.
      auto parent = p->quadruple(static_cast<std::size_t>(prov.parent_quadruple));
      const auto child = boyd_reflect(parent, prov.reflected_index).disks[prov.reflected_index];
      CHECK(child == p->disks[i]);
    }
    int roots = 0;
    for (const auto& prov : p->provenance) roots += prov.parent_quadruple < 0;
    CHECK(roots == 4);
    CHECK(p->quadruples[0] == QuadIds{0, 1, 2, 4});
  }

  TEST_CASE("curvature multisets match the brute-force oracle") {
    for (int bound : {3, 15, 50, 100, 200}) {
      CAPTURE(bound);
      const auto expected = oracle::curvatures({-1, 2, 2, 3}, bound);
      const auto p = window(bound);
      const auto got = curvature_list(*p);
      CHECK(std::vector<std::int64_t>(got.begin(), got.end()) == expected);
    }
    CHECK(oracle::curvatures({-1, 2, 2, 3}, 100).size() == 169);
  }

  TEST_CASE("rational root with non-integral symbols") {
    // (-2, 3, 6, 7): outer radius 1/2, rational but not integral symbols.
    const DescartesQuadruple<Q> root{{vec("0,0/-2"), vec("(1/2),0/3"), vec("-2,0/6"), vec("(-3/2),2/7")}};
    REQUIRE(validate_quadruple(root));
    const auto p = generate(root, Q(60));
    const auto expected = oracle::curvatures({-2, 3, 6, 7}, 60);
    const auto got = curvature_list(p);
    CHECK(std::vector<std::int64_t>(got.begin(), got.end()) == expected);
    CHECK_FALSE(p.integral);
  }

  TEST_CASE("serial and parallel generation agree") {
    for (int bound : {15, 100, 300}) {
      CAPTURE(bound);
      CHECK(*window(bound, Execution::serial) == *window(bound, Execution::parallel));
    }
  }

  TEST_CASE("bound below the children keeps the root") {
    const DescartesQuadruple<Q> root{{vec("-1,0/2"), vec("0,2/3"), vec("-3,4/6"), vec("-8,12/23")}};
    const auto p = generate(root, Q(23));
    CHECK(p.size() == 4);
    CHECK(p.quadruples.size() == 1);
    CHECK(p.integral);
  }

  TEST_CASE("generation errors") {
    CHECK(kind_of([] { generate(window_root(), Q(2)); }) == ErrorKind::InvalidBound);
    const DescartesQuadruple<Q> bad{{vec("0,0/1"), vec("1,0/1"), vec("0,1/1"), vec("1,1/1")}};
    CHECK(kind_of([&] { generate(bad, Q(10)); }) == ErrorKind::InvalidRoot);
  }

  TEST_CASE("integrality") {
    CHECK(window(100)->integral);
    // Window scaled by 1/pi: curvatures become multiples of pi.
    const double pi = 3.14159265358979323846;
    const auto root = preset<double>("apollonian-window");
    DescartesQuadruple<double> scaled;
    for (int i = 0; i < 4; ++i) {
      const auto& v = root.disks[i];
      scaled.disks[i] = disk_to_vector(Disk<double>{v.xi1 / v.beta / pi, v.xi2 / v.beta / pi, 1.0 / v.beta / pi});
    }
    const auto p = generate(scaled, 3.0 * pi);
    CHECK_FALSE(p.integral);
    CHECK(p.size() == 5);
  }

  TEST_CASE("float generation matches exact generation") {
    const auto exact = window(100);
    const auto approx = generate(preset<double>("apollonian-window"), 100.0);
    REQUIRE(approx.size() == exact->size());
    for (std::size_t i = 0; i < approx.size(); ++i) {
      CHECK(approx.disks[i].beta == doctest::Approx(exact->disks[i].beta.convert_to<double>()));
      CHECK(approx.disks[i].xi1 == doctest::Approx(exact->disks[i].xi1.convert_to<double>()));
    }
    CHECK(approx.quadruples == exact->quadruples);
    CHECK(approx.integral);
  }

  TEST_CASE("tangent pairs and triples") {
    const auto p = window(3);
    const auto pairs = tangent_pairs(p->quadruples);
    CHECK(pairs.size() == 9);
    const auto triples = tangent_triples(p->quadruples);
    CHECK(triples.size() == 7);
    for (const auto& t : triples) {
      CHECK(t.ids[0] < t.ids[1]);
      CHECK(t.ids[1] < t.ids[2]);
    }
  }
}
