#include <doctest.h>

#include <algorithm>

#include "common.hpp"

using namespace testing;

namespace {

Spinor<Q> sp(int m, int n) { return {Q(m), Q(n)}; }

std::shared_ptr<const Packing<Q>> root_only() {
  const auto root = preset<Q>("apollonian-window");
  std::array<Symbol<Q>, 4> symbols;
  std::vector<Symbol<Q>> disks;
  for (int i = 0; i < 4; ++i) {
    symbols[i] = vector_to_symbol(root.disks[i]);
    disks.push_back(symbols[i]);
  }
  std::sort(disks.begin(), disks.end(), symbol_less<Q>);
  return std::make_shared<const Packing<Q>>(assemble_packing(symbols, Q(3), disks, {{0, 1, 2, 3}}, {}));
}

// Copy of the network with one stored spinor replaced.
SpinorNetwork<Q> tampered(const SpinorNetwork<Q>& net, int s, int t, const Spinor<Q>& u) {
  auto entries = net.entries();
  for (auto& e : entries)
    if (e.source == s && e.target == t) e.spinor = u;
  return SpinorNetwork<Q>(net.packing_ptr(), entries);
}

}  // namespace

TEST_SUITE("network") {
  TEST_CASE("build_network") {
    const auto root = build_network(root_only());
    CHECK(root.entries().size() == 12);

    const auto p = window(15);
    const auto net = build_network(p);
    const int left = id_of(*p, "-1,0/2");
    const int top = id_of(*p, "0,2/3");
    CHECK(net.spinor(left, top) == sp(2, 1));
    CHECK(net.entries().size() == 2 * net.pairs().size());
    for (const auto& e : net.entries())
      CHECK(norm_squared(e.spinor) == p->disks[e.source].beta + p->disks[e.target].beta);
    CHECK_FALSE(net.find(left, id_of(*p, "5,12/14")).has_value());
    CHECK(kind_of([&] { net.spinor(left, id_of(*p, "5,12/14")); }) == ErrorKind::NotTangent);
  }

  TEST_CASE("serial and parallel networks agree") {
    const auto p = window(200);
    CHECK(build_network(p, Execution::serial).entries() == build_network(p, Execution::parallel).entries());
  }

  TEST_CASE("irrational spinors are rejected in exact mode") {
    // The window scaled by 2: curvatures -1/2, 1, 1, 3/2.
    const DescartesQuadruple<Q> root{{vec("0,0/(-1/2)"), vec("-1,0/1"), vec("1,0/1"), vec("0,2/(3/2)")}};
    REQUIRE(validate_quadruple(root));
    const auto p = std::make_shared<const Packing<Q>>(generate(root, q("3/2")));
    CHECK(kind_of([&] { build_network(p); }) == ErrorKind::NotExactSquare);

    const DescartesQuadruple<double> froot{{symbol_to_vector(parse_symbol<double>("0,0/-0.5")),
                                            symbol_to_vector(parse_symbol<double>("-1,0/1")),
                                            symbol_to_vector(parse_symbol<double>("1,0/1")),
                                            symbol_to_vector(parse_symbol<double>("0,2/1.5"))}};
    const auto fp = std::make_shared<const Packing<double>>(generate(froot, 1.5));
    const auto fnet = build_network(fp);
    CHECK(verify_all(fnet).ok());
  }

  TEST_CASE("harmonize_curl") {
    const auto p = window(15);
    const auto net = build_network(p);
    const int outer = id_of(*p, "0,0/-1"), left = id_of(*p, "-1,0/2"), right = id_of(*p, "1,0/2");
    const auto choice = harmonize_curl(net, {outer, left, right});
    CHECK(choice.spinors == std::vector<Spinor<Q>>{sp(2, 0), sp(1, 0), sp(1, 0)});
    CHECK(choice.epsilons == std::vector<int>{1, -1, -1});

    const auto big = build_network(window(50));
    for (const auto& t : big.triples()) CHECK_NOTHROW(harmonize_curl(big, {t.ids[0], t.ids[1], t.ids[2]}));

    const auto bad = tampered(net, left, right, sp(2, 1));
    CHECK(kind_of([&] { harmonize_curl(bad, {outer, left, right}); }) == ErrorKind::CurlViolation);
  }

  TEST_CASE("perturbed triple has no vanishing sign choice") {
    const auto a = parse_symbol<double>("-1,0/2");
    const auto b = parse_symbol<double>("1,0/2");
    auto c = parse_symbol<double>("0,2/3");
    c.y_dot += 1e-3;
    const std::vector<Spinor<double>> us{complex_sqrt(spinor_square(b, c)), complex_sqrt(spinor_square(c, a)),
                                         complex_sqrt(spinor_square(a, b))};
    CHECK_FALSE(vanishing_signs(us, Tolerance<double>{}).has_value());
  }

  TEST_CASE("harmonize_div") {
    const auto p = window(15);
    const auto net = build_network(p);
    const int top = id_of(*p, "0,2/3");
    const QuadIds quad = p->quadruples[0];
    const auto div = harmonize_div(net, quad, top);
    CHECK(div.inward.spinors.size() == 3);
    for (const auto* choice : {&div.inward, &div.outward}) {
      Spinor<Q> sum;
      for (std::size_t k = 0; k < 3; ++k) sum = sum + choice->epsilons[k] * choice->spinors[k];
      CHECK(sum == Spinor<Q>{});
    }

    const auto big = build_network(window(50));
    for (const auto& qd : big.packing().quadruples)
      for (int c : qd) CHECK_NOTHROW(harmonize_div(big, qd, c));

    const auto zeroed = tampered(net, id_of(*p, "0,0/-1"), top, Spinor<Q>{});
    CHECK(kind_of([&] { harmonize_div(zeroed, quad, top); }) == ErrorKind::DivViolation);
    CHECK(kind_of([&] { harmonize_div(net, quad, id_of(*p, "3,4/6")); }) == ErrorKind::NotAConfiguration);
  }

  TEST_CASE("additivity picks the completion") {
    const auto p = window(15);
    const auto net = build_network(p);
    const int top = id_of(*p, "0,2/3"), left = id_of(*p, "-1,0/2"), right = id_of(*p, "1,0/2");
    const auto a = net.spinor(top, left);
    const auto b = net.spinor(top, right);
    const auto plus = additivity_child(net, top, left, a, right, b);
    CHECK(plus.spinor == sp(3, -3));
    CHECK(plus.id == id_of(*p, "0,4/15"));
    const auto minus = additivity_child(net, top, left, a, right, -b);
    CHECK(minus.id == id_of(*p, "0,0/-1"));
    CHECK(norm_squared(plus.spinor) == 3 + 15);
    CHECK(norm_squared(minus.spinor) == 3 - 1);
    CHECK(kind_of([&] { additivity_child(net, top, left, a, right, a); }) == ErrorKind::NoMatchingDisk);

    const auto comps = completions(net, top, left, right);
    std::vector<Q> betas{comps[0].beta, comps[1].beta};
    std::sort(betas.begin(), betas.end());
    CHECK(betas == std::vector<Q>{Q(-1), Q(15)});
    CHECK(kind_of([&] { completions(net, top, left, id_of(*p, "3,4/6")); }) == ErrorKind::NotAConfiguration);
  }

  TEST_CASE("Stern-Brocot tree inside the curvature-2 disk") {
    const auto p = window(30);
    const auto net = build_network(p);
    const int center = id_of(*p, "-1,0/2"), outer = id_of(*p, "0,0/-1"), top = id_of(*p, "0,2/3");
    const auto tree = stern_brocot_tree(net, center, outer, top, 2);
    REQUIRE(tree.size() == 5);
    std::vector<std::string> disks;
    for (const auto& node : tree) disks.push_back(format_symbol(p->symbol(node.disk)));
    CHECK(disks == std::vector<std::string>{"0,0/-1", "0,2/3", "-3,4/6", "-8,6/11", "-8,12/23"});
    CHECK(tree[2].depth == 1);
    CHECK(tree[2].left_parent == 0);
    CHECK(tree[2].right_parent == 1);
    for (const auto& node : tree) {
      CHECK(norm_squared(node.spinor) == p->disks[center].beta + p->disks[node.disk].beta);
      CHECK(square(node.spinor) == spinor_square(p->symbol(center), p->symbol(node.disk)));
      if (node.depth > 0)
        CHECK(node.spinor == tree[node.left_parent].spinor + tree[node.right_parent].spinor);
    }

    CHECK(stern_brocot_tree(net, center, outer, top, 0).size() == 2);
    const auto sp15 = window(15);
    const auto shallow = build_network(sp15);
    CHECK(kind_of([&] {
            stern_brocot_tree(shallow, id_of(*sp15, "-1,0/2"), id_of(*sp15, "0,0/-1"), id_of(*sp15, "0,2/3"), 2);
          }) == ErrorKind::NoMatchingDisk);
  }

  TEST_CASE("transport signs") {
    const auto p = window(15);
    const auto net = build_network(p);
    const int top = id_of(*p, "0,2/3"), left = id_of(*p, "-1,0/2"), right = id_of(*p, "1,0/2");
    const int cap = id_of(*p, "0,4/15"), outer = id_of(*p, "0,0/-1");
    CHECK(transport_sign(net, top, left, right, cap) == 1);
    CHECK(transport_sign(net, top, left, right, outer) == -1);
    CHECK(transport_sign(net, top, left, right, cap) * transport_sign(net, top, right, left, cap) == 1);
    CHECK(kind_of([&] { transport_sign(net, top, left, right, id_of(*p, "3,4/6")); }) ==
          ErrorKind::NotAConfiguration);
  }

  TEST_CASE("three-step transport around an inner circle") {
    // Inner circle X = the curvature-15 disk inside {top, left, right}.
    const auto p = window(15);
    const auto net = build_network(p);
    const int x = id_of(*p, "0,4/15");
    const int a = id_of(*p, "0,2/3"), b = id_of(*p, "-1,0/2"), c = id_of(*p, "1,0/2");
    // Each step over the third neighbour: the long arc, twice around in total.
    const int long_way =
        transport_sign(net, x, a, c, b) * transport_sign(net, x, c, b, a) * transport_sign(net, x, b, a, c);
    CHECK(long_way == 1);
    // Each step over the gap disk between the two neighbours: once around.
    auto gap = [&](int s, int t, int third) {
      const auto comps = completions(net, x, s, t);
      return comps[0] == p->disks[third] ? comps[1] : comps[0];
    };
    const int once = transport_sign(net, x, a, b, gap(a, b, c)) * transport_sign(net, x, b, c, gap(b, c, a)) *
                     transport_sign(net, x, c, a, gap(c, a, b));
    CHECK(once == -1);
  }

  TEST_CASE("ccw arcs") {
    using C = Complex<Q>;
    const C east{Q(1), Q(0)}, north{Q(0), Q(1)}, west{Q(-1), Q(0)}, south{Q(0), Q(-1)};
    CHECK(inside_ccw_arc(east, C{Q(1), Q(1)}, north));
    CHECK_FALSE(inside_ccw_arc(north, C{Q(1), Q(1)}, east));
    CHECK(inside_ccw_arc(north, south, east));
    CHECK(inside_ccw_arc(east, north, west));
    CHECK_FALSE(inside_ccw_arc(east, south, west));
    CHECK(inside_ccw_arc(east, west, east));
    CHECK_FALSE(inside_ccw_arc(east, east, east));
  }

  TEST_CASE("neighbor chains") {
    const auto p = window(50);
    const auto net = build_network(p);
    const int top = id_of(*p, "0,2/3");
    const auto chain = neighbor_chain(net, top);
    CHECK(chain.size() == net.neighbors(top).size());
    CHECK(chain.front() == *std::min_element(chain.begin(), chain.end()));
    for (std::size_t i = 0; i < chain.size(); ++i) CHECK(net.tangent(chain[i], chain[(i + 1) % chain.size()]));

    const auto empty = std::make_shared<const Packing<Q>>(assemble_packing(
        std::array<Symbol<Q>, 4>{sym("0,0/-1"), sym("-1,0/2"), sym("1,0/2"), sym("0,2/3")}, Q(3),
        {sym("0,0/-1"), sym("-1,0/2"), sym("1,0/2"), sym("0,2/3")}, {}, {}));
    const SpinorNetwork<Q> bare(empty, {});
    CHECK(kind_of([&] { neighbor_chain(bare, 0); }) == ErrorKind::NoClosedChain);
    CHECK(kind_of([&] { loop_holonomy(bare, 0); }) == ErrorKind::NoClosedChain);
  }

  TEST_CASE("loop holonomy") {
    const auto p = window(50);
    const auto net = build_network(p);
    int loops = 0;
    for (int id = 0; id < static_cast<int>(p->size()); ++id) {
      CAPTURE(format_symbol(p->symbol(id)));
      const auto h = loop_holonomy(net, id);
      CHECK(h.value == -1);
      CHECK(loop_holonomy(net, id, 2).value == 1);
      CHECK(loop_holonomy(net, id, 3).value == -1);
      const int n = static_cast<int>(h.loop.size());
      for (int start = 1; start < n; ++start) CHECK(loop_holonomy(net, id, 1, start).value == -1);

      // Reversed traversal: clockwise neighbours, each over the same gap disk.
      auto chain = neighbor_chain(net, id);
      int reversed = 1;
      for (int i = n - 1; i >= 0; --i) {
        const int from = chain[(i + 1) % n], to = chain[i];
        reversed *= transport_sign(net, id, from, to, gap_completion(net, id, to, from));
      }
      CHECK(reversed == -1);
      ++loops;
    }
    CHECK(loops == 69);
  }
}
