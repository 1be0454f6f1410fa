#include "apollonian/minkowski.hpp"

#include "apollonian/error.hpp"

namespace apollonian {

template <class T>
MinkowskiVector<T> disk_to_vector(const Disk<T>& d) {
  if (d.radius == T(0)) throw Error(ErrorKind::ZeroRadius, "disk radius is zero");
  const T& r = d.radius;
  return {d.center_x / r, d.center_y / r, T(1) / r,
          (d.center_x * d.center_x + d.center_y * d.center_y - r * r) / r};
}

template <class T>
Disk<T> symbol_to_disk(const Symbol<T>& s) {
  if (s.beta == T(0)) throw Error(ErrorKind::ZeroCurvature, "symbol has zero curvature");
  return {s.x_dot / s.beta, s.y_dot / s.beta, T(1) / s.beta};
}

template <class T>
Symbol<T> disk_to_symbol(const Disk<T>& d) {
  const auto v = disk_to_vector(d);
  return {v.xi1, v.xi2, v.beta};
}

template <class T>
Symbol<T> vector_to_symbol(const MinkowskiVector<T>& v, const Tolerance<T>& tol) {
  if (!is_unit_spacelike(v, tol))
    throw Error(ErrorKind::NotUnitSpacelike, "vector is not normalized to <v,v> = -1");
  return {v.xi1, v.xi2, v.beta};
}

template <class T>
MinkowskiVector<T> symbol_to_vector(const Symbol<T>& s) {
  if (s.beta == T(0)) throw Error(ErrorKind::ZeroCurvature, "symbol has zero curvature");
  return {s.x_dot, s.y_dot, s.beta, (s.x_dot * s.x_dot + s.y_dot * s.y_dot - T(1)) / s.beta};
}

template <class T>
T minkowski_inner(const MinkowskiVector<T>& v, const MinkowskiVector<T>& w) {
  return -v.xi1 * w.xi1 - v.xi2 * w.xi2 + (v.beta * w.gamma + w.beta * v.gamma) / T(2);
}

template <class T>
bool is_unit_spacelike(const MinkowskiVector<T>& v, const Tolerance<T>& tol) {
  return tol.equal(minkowski_inner(v, v), T(-1));
}

template <class T>
bool tangency_test(const MinkowskiVector<T>& v, const MinkowskiVector<T>& w, const Tolerance<T>& tol) {
  return tol.equal(minkowski_inner(v, w), T(1));
}

template <class T>
PythagoreanTriple<T> bowtie(const MinkowskiVector<T>& v, const MinkowskiVector<T>& w,
                            const Tolerance<T>& tol) {
  if (!is_unit_spacelike(v, tol) || !is_unit_spacelike(w, tol) || !tangency_test(v, w, tol))
    throw Error(ErrorKind::NotTangent, "bowtie needs two tangent unit space-like vectors");
  return {v.beta * w.xi1 - w.beta * v.xi1, v.beta * w.xi2 - w.beta * v.xi2, v.beta + w.beta};
}

template <class T>
bool is_pythagorean(const PythagoreanTriple<T>& t, const Tolerance<T>& tol) {
  const T cc = t.c * t.c;
  return tol.equal(t.a * t.a + t.b * t.b, cc, to_double(cc));
}

namespace {

std::string_view strip_parens(std::string_view t) {
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') return t.substr(1, t.size() - 2);
  return t;
}

// Index of the first occurrence of c outside parentheses, scanning from the
// front (or the back when reverse is set).
std::size_t find_top_level(std::string_view s, char c, bool reverse) {
  int depth = 0;
  std::size_t found = std::string_view::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == c && depth == 0) {
      found = i;
      if (!reverse) break;
    }
  }
  return found;
}

}  // namespace

template <class T>
Symbol<T> parse_symbol(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorKind::ParseError, "symbol must look like 'x,y/beta': '" + std::string(text) + "'");
  };
  const auto comma = find_top_level(text, ',', false);
  if (comma == std::string_view::npos) throw fail();
  std::string_view x = text.substr(0, comma);
  std::string_view rest = text.substr(comma + 1);
  const auto slash = find_top_level(rest, '/', true);
  if (slash == std::string_view::npos) throw fail();
  std::string_view y = rest.substr(0, slash);
  std::string_view b = rest.substr(slash + 1);
  if (x.empty() || y.empty() || b.empty()) throw fail();
  Symbol<T> sym{parse_scalar<T>(strip_parens(x)), parse_scalar<T>(strip_parens(y)),
                parse_scalar<T>(strip_parens(b))};
  if (sym.beta == T(0)) throw Error(ErrorKind::ZeroCurvature, "symbol has zero curvature");
  return sym;
}

template <class T>
std::string format_symbol(const Symbol<T>& s) {
  auto token = [](const T& v) {
    std::string t = format_scalar(v);
    return t.find('/') == std::string::npos ? t : "(" + t + ")";
  };
  return token(s.x_dot) + "," + token(s.y_dot) + "/" + token(s.beta);
}

#define APOLLONIAN_INSTANTIATE(T)                                                                 \
  template MinkowskiVector<T> disk_to_vector(const Disk<T>&);                                     \
  template Disk<T> symbol_to_disk(const Symbol<T>&);                                              \
  template Symbol<T> disk_to_symbol(const Disk<T>&);                                              \
  template Symbol<T> vector_to_symbol(const MinkowskiVector<T>&, const Tolerance<T>&);            \
  template MinkowskiVector<T> symbol_to_vector(const Symbol<T>&);                                 \
  template T minkowski_inner(const MinkowskiVector<T>&, const MinkowskiVector<T>&);               \
  template bool is_unit_spacelike(const MinkowskiVector<T>&, const Tolerance<T>&);                \
  template bool tangency_test(const MinkowskiVector<T>&, const MinkowskiVector<T>&,               \
                              const Tolerance<T>&);                                               \
  template PythagoreanTriple<T> bowtie(const MinkowskiVector<T>&, const MinkowskiVector<T>&,      \
                                       const Tolerance<T>&);                                      \
  template bool is_pythagorean(const PythagoreanTriple<T>&, const Tolerance<T>&);                 \
  template Symbol<T> parse_symbol(std::string_view);                                              \
  template std::string format_symbol(const Symbol<T>&);

APOLLONIAN_INSTANTIATE(Rational)
APOLLONIAN_INSTANTIATE(double)

}  // namespace apollonian
