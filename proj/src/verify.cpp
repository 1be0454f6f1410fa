#include "apollonian/verify.hpp"

#include <algorithm>
#include <functional>

#include "apollonian/error.hpp"

namespace apollonian {

namespace {

using Check = std::function<std::optional<std::string>(std::size_t)>;

LawResult run_law(std::string name, const std::vector<std::vector<int>>& cases, Execution execution,
                  const Check& check) {
  std::vector<std::optional<std::string>> outcome(cases.size());
  for_each_index(cases.size(), execution, [&](std::size_t i) {
    try {
      outcome[i] = check(i);
    } catch (const Error& e) {
      outcome[i] = std::string(to_string(e.kind())) + ": " + e.detail();
    }
  });
  LawResult r{std::move(name), cases.size(), 0, std::nullopt};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!outcome[i]) {
      ++r.passed;
    } else if (!r.first_failure) {
      r.first_failure = LawFailure{cases[i], *outcome[i]};
    }
  }
  return r;
}

template <class T>
Symbol<T> symbol_of(const MinkowskiVector<T>& v) {
  return {v.xi1, v.xi2, v.beta};
}

template <class T>
std::string spinor_text(const Spinor<T>& u) {
  return "(" + format_scalar(u.m) + ", " + format_scalar(u.n) + ")";
}

double magnitude(std::initializer_list<double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names{
      "normalization", "tangency", "descartes",  "spinor_definition",     "norm",
      "spinor_integrality", "curl", "div",      "curvature",             "curvature_orientation",
      "midcircle",     "pythagorean_identity", "additivity", "spinor_descartes"};
  return names;
}

bool VerificationReport::ok() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.failed();
  return n;
}

const LawResult* VerificationReport::law(std::string_view name) const {
  for (const auto& l : laws)
    if (l.name == name) return &l;
  return nullptr;
}

template <class T>
VerificationReport verify_all(const SpinorNetwork<T>& net, Execution execution) {
  const auto& packing = net.packing();
  const auto& disks = packing.disks;
  const auto& tol = net.tolerance();
  VerificationReport report;
  report.mode = mode_of_v<T>;

  auto stored = [&](int s, int t) -> std::optional<Spinor<T>> { return net.find(s, t); };
  auto missing = [](int s, int t) {
    return "no spinor stored for (" + std::to_string(s) + ", " + std::to_string(t) + ")";
  };

  // Configurations.
  std::vector<std::vector<int>> singles(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i) singles[i] = {static_cast<int>(i)};

  std::vector<std::vector<int>> pairs;
  for (const auto& [a, b] : net.pairs()) pairs.push_back({a, b});

  std::vector<std::vector<int>> ordered;
  for (const auto& [a, b] : net.pairs()) {
    ordered.push_back({a, b});
    ordered.push_back({b, a});
  }
  std::sort(ordered.begin(), ordered.end());

  std::vector<std::vector<int>> quads;
  for (const auto& q : packing.quadruples) {
    std::vector<int> ids(q.begin(), q.end());
    std::sort(ids.begin(), ids.end());
    quads.push_back(std::move(ids));
  }
  std::sort(quads.begin(), quads.end());
  quads.erase(std::unique(quads.begin(), quads.end()), quads.end());

  std::vector<std::vector<int>> centered;  // center first, then the other three
  for (const auto& q : quads)
    for (int c : q) {
      std::vector<int> ids{c};
      for (int x : q)
        if (x != c) ids.push_back(x);
      centered.push_back(std::move(ids));
    }
  std::sort(centered.begin(), centered.end());

  std::vector<std::vector<int>> triples;
  for (const auto& t : net.triples()) triples.push_back({t.ids.begin(), t.ids.end()});

  std::vector<std::vector<int>> sourced;  // source C, then A < B
  for (const auto& t : triples)
    for (int k = 0; k < 3; ++k) {
      std::vector<int> ids{t[k]};
      for (int j = 0; j < 3; ++j)
        if (j != k) ids.push_back(t[j]);
      sourced.push_back(std::move(ids));
    }
  std::sort(sourced.begin(), sourced.end());

  // Spinors a = (C -> A), b = (C -> B) of a sourced triple.
  struct Pair {
    Spinor<T> a, b;
  };
  auto spinors_of = [&](const std::vector<int>& ids, std::optional<std::string>& error) -> std::optional<Pair> {
    auto a = stored(ids[0], ids[1]);
    auto b = stored(ids[0], ids[2]);
    if (!a) error = missing(ids[0], ids[1]);
    else if (!b) error = missing(ids[0], ids[2]);
    if (!a || !b) return std::nullopt;
    return Pair{*a, *b};
  };
  auto curvatures = [&](const std::vector<int>& ids) {
    return std::array<T, 3>{disks[ids[0]].beta, disks[ids[1]].beta, disks[ids[2]].beta};
  };

  auto& laws = report.laws;

  laws.push_back(run_law("normalization", singles, execution, [&](std::size_t i) -> std::optional<std::string> {
    const auto& v = disks[i];
    if (is_unit_spacelike(v, tol)) return std::nullopt;
    return "<v, v> = " + format_scalar(minkowski_inner(v, v)) + ", expected -1";
  }));

  laws.push_back(run_law("tangency", pairs, execution, [&](std::size_t i) -> std::optional<std::string> {
    const auto& v = disks[pairs[i][0]];
    const auto& w = disks[pairs[i][1]];
    if (tangency_test(v, w, tol)) return std::nullopt;
    return "<v, w> = " + format_scalar(minkowski_inner(v, w)) + ", expected 1";
  }));

  laws.push_back(run_law("descartes", quads, execution, [&](std::size_t i) -> std::optional<std::string> {
    const auto& ids = quads[i];
    const DescartesQuadruple<T> q{{disks[ids[0]], disks[ids[1]], disks[ids[2]], disks[ids[3]]}};
    if (!descartes_identity(q.disks[0].beta, q.disks[1].beta, q.disks[2].beta, q.disks[3].beta, tol))
      return std::string("curvatures violate (A+B+C+D)^2 = 2(A^2+B^2+C^2+D^2)");
    if (!validate_quadruple(q, tol)) return std::string("disks are not a normalized mutually tangent quadruple");
    return std::nullopt;
  }));

  laws.push_back(run_law("spinor_definition", ordered, execution, [&](std::size_t i) -> std::optional<std::string> {
    const int s = ordered[i][0], t = ordered[i][1];
    const auto u = stored(s, t);
    if (!u) return missing(s, t);
    const auto expected = spinor_square(packing.symbol(s), packing.symbol(t));
    if (complex_equal(square(*u), expected, tol)) return std::nullopt;
    return "u^2 != z A B for u = " + spinor_text(*u);
  }));

  laws.push_back(run_law("norm", ordered, execution, [&](std::size_t i) -> std::optional<std::string> {
    const int s = ordered[i][0], t = ordered[i][1];
    const auto u = stored(s, t);
    if (!u) return missing(s, t);
    const T sum = disks[s].beta + disks[t].beta;
    if (tol.equal(norm_squared(*u), sum, magnitude({to_double(disks[s].beta), to_double(disks[t].beta)})))
      return std::nullopt;
    return "|u|^2 = " + format_scalar(norm_squared(*u)) + ", A + B = " + format_scalar(sum);
  }));

  static const std::vector<std::vector<int>> none;
  laws.push_back(run_law("spinor_integrality", packing.integral ? ordered : none, execution,
                         [&](std::size_t i) -> std::optional<std::string> {
                           const int s = ordered[i][0], t = ordered[i][1];
                           const auto u = stored(s, t);
                           if (!u) return missing(s, t);
                           if (is_integer(u->m) && is_integer(u->n)) return std::nullopt;
                           return "spinor " + spinor_text(*u) + " is not integral";
                         }));

  laws.push_back(run_law("curl", triples, execution, [&](std::size_t i) -> std::optional<std::string> {
    harmonize_curl(net, {triples[i][0], triples[i][1], triples[i][2]});
    return std::nullopt;
  }));

  laws.push_back(run_law("div", centered, execution, [&](std::size_t i) -> std::optional<std::string> {
    const auto& ids = centered[i];
    harmonize_div(net, QuadIds{ids[0], ids[1], ids[2], ids[3]}, ids[0]);
    return std::nullopt;
  }));

  laws.push_back(run_law("curvature", sourced, execution, [&](std::size_t i) -> std::optional<std::string> {
    std::optional<std::string> error;
    const auto p = spinors_of(sourced[i], error);
    if (!p) return error;
    const T c = abs_value(disks[sourced[i][0]].beta);
    const T w = omega(p->a, p->b);
    if (tol.equal(abs_value(w), c)) return std::nullopt;
    return "omega(a, b) = " + format_scalar(w) + ", |C| = " + format_scalar(c);
  }));

  laws.push_back(
      run_law("curvature_orientation", sourced, execution, [&](std::size_t i) -> std::optional<std::string> {
        const auto& ids = sourced[i];
        std::optional<std::string> error;
        const auto p = spinors_of(ids, error);
        if (!p) return error;
        const auto& vc = disks[ids[0]];
        const T c = abs_value(vc.beta);
        const auto da = tangency_direction(vc, disks[ids[1]]);
        const auto db = tangency_direction(vc, disks[ids[2]]);
        for (const auto& d : completions(net, ids[0], ids[1], ids[2])) {
          const int sigma = transport_sign(net, ids[0], ids[1], ids[2], d);
          // Orient the pair counterclockwise across the gap that d fills.
          const bool a_first = inside_ccw_arc(da, tangency_direction(vc, d), db);
          const T w = a_first ? omega(p->a, sigma * p->b) : omega(p->b, sigma * p->a);
          if (!tol.equal(w, c))
            return "over " + format_symbol(symbol_of(d)) + ": oriented omega = " + format_scalar(w) +
                   ", |C| = " + format_scalar(c);
        }
        return std::nullopt;
      }));

  laws.push_back(run_law("midcircle", sourced, execution, [&](std::size_t i) -> std::optional<std::string> {
    std::optional<std::string> error;
    const auto p = spinors_of(sourced[i], error);
    if (!p) return error;
    const auto [c, a, b] = curvatures(sourced[i]);
    const T gg = g(p->a, p->b) * g(p->a, p->b);
    const T sym = a * b + b * c + c * a;
    if (tol.equal(gg, sym, magnitude({to_double(a * b), to_double(b * c), to_double(c * a)})))
      return std::nullopt;
    return "g(a, b)^2 = " + format_scalar(gg) + ", AB + BC + CA = " + format_scalar(sym);
  }));

  laws.push_back(
      run_law("pythagorean_identity", sourced, execution, [&](std::size_t i) -> std::optional<std::string> {
        std::optional<std::string> error;
        const auto p = spinors_of(sourced[i], error);
        if (!p) return error;
        const T gv = g(p->a, p->b);
        const T wv = omega(p->a, p->b);
        const T lhs = gv * gv + wv * wv;
        const T rhs = norm_squared(p->a) * norm_squared(p->b);
        if (tol.equal(lhs, rhs)) return std::nullopt;
        return "g^2 + omega^2 = " + format_scalar(lhs) + ", |a|^2 |b|^2 = " + format_scalar(rhs);
      }));

  laws.push_back(run_law("additivity", sourced, execution, [&](std::size_t i) -> std::optional<std::string> {
    const auto& ids = sourced[i];
    std::optional<std::string> error;
    const auto p = spinors_of(ids, error);
    if (!p) return error;
    const auto plus = additivity_child(net, ids[0], ids[1], p->a, ids[2], p->b);
    const auto minus = additivity_child(net, ids[0], ids[1], p->a, ids[2], -p->b);
    if (plus.disk == minus.disk) return "a + b and a - b land on the same disk " + format_symbol(symbol_of(plus.disk));
    return std::nullopt;
  }));

  laws.push_back(
      run_law("spinor_descartes", sourced, execution, [&](std::size_t i) -> std::optional<std::string> {
        const auto& ids = sourced[i];
        std::optional<std::string> error;
        const auto p = spinors_of(ids, error);
        if (!p) return error;
        const auto [c, a, b] = curvatures(ids);
        const T two_g = T(2) * abs_value(g(p->a, p->b));
        const T sym = a * b + b * c + c * a;
        const double scale = magnitude({to_double(a), to_double(b), to_double(c)});
        for (const auto& d : completions(net, ids[0], ids[1], ids[2])) {
          const T excess = d.beta - a - b - c;
          if (!tol.equal(two_g, abs_value(excess), scale))
            return "2|g(a, b)| = " + format_scalar(two_g) + ", |D - A - B - C| = " + format_scalar(abs_value(excess)) +
                   " for D = " + format_scalar(d.beta);
          if (!tol.equal(excess * excess, T(4) * sym, scale * scale))
            return "(D - A - B - C)^2 != 4(AB + BC + CA) for D = " + format_scalar(d.beta);
        }
        return std::nullopt;
      }));

  return report;
}

template VerificationReport verify_all(const SpinorNetwork<Rational>&, Execution);
template VerificationReport verify_all(const SpinorNetwork<double>&, Execution);

}  // namespace apollonian
