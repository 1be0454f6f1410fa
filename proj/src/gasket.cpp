#include "apollonian/gasket.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "apollonian/error.hpp"

namespace apollonian {

namespace {

// Dedup key: exact symbols, or float symbols snapped to a grid of
// eps * max(1, |beta|).
template <class T>
struct KeyOf;

template <>
struct KeyOf<Rational> {
  struct Less {
    bool operator()(const Symbol<Rational>& a, const Symbol<Rational>& b) const {
      return symbol_less(a, b);
    }
  };
  using Map = std::map<Symbol<Rational>, int, Less>;
  static Symbol<Rational> make(const Symbol<Rational>& s, double) { return s; }
};

template <>
struct KeyOf<double> {
  using Key = std::array<long long, 3>;
  using Map = std::map<Key, int>;
  static Key make(const Symbol<double>& s, double eps) {
    const double step = eps * std::max(1.0, std::abs(s.beta));
    return {std::llround(s.beta / step), std::llround(s.x_dot / step), std::llround(s.y_dot / step)};
  }
};

template <class T>
Symbol<T> symbol_of(const MinkowskiVector<T>& v) {
  return {v.xi1, v.xi2, v.beta};
}

struct FrontierItem {
  QuadIds ids;
  int last;  // slot produced by the reflection that created this quadruple
  int quad_index;
};

template <class T>
void sort_packing(Packing<T>& p) {
  std::vector<int> order(p.disks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return symbol_less(symbol_of(p.disks[a]), symbol_of(p.disks[b]));
  });
  std::vector<int> new_id(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<int>(i);

  std::vector<MinkowskiVector<T>> disks;
  std::vector<Provenance> provenance;
  disks.reserve(order.size());
  provenance.reserve(order.size());
  for (int old : order) {
    disks.push_back(std::move(p.disks[old]));
    provenance.push_back(p.provenance[old]);
  }
  p.disks = std::move(disks);
  p.provenance = std::move(provenance);
  for (auto& q : p.quadruples)
    for (auto& id : q) id = new_id[id];
}

}  // namespace

template <class T>
std::optional<int> Packing<T>::find(const Symbol<T>& s) const {
  if constexpr (is_exact_v<T>) {
    auto it = std::lower_bound(disks.begin(), disks.end(), s, [](const MinkowskiVector<T>& v, const Symbol<T>& key) {
      return symbol_less(symbol_of(v), key);
    });
    if (it != disks.end() && symbol_of(*it) == s) return static_cast<int>(it - disks.begin());
    return std::nullopt;
  } else {
    const double margin = tolerance.eps * std::max(1.0, std::abs(s.beta));
    auto it = std::lower_bound(disks.begin(), disks.end(), s.beta - margin,
                               [](const MinkowskiVector<T>& v, double b) { return v.beta < b; });
    for (; it != disks.end() && it->beta <= s.beta + margin; ++it) {
      const double scale = std::abs(s.beta);
      if (tolerance.equal(it->xi1, s.x_dot, scale) && tolerance.equal(it->xi2, s.y_dot, scale) &&
          tolerance.equal(it->beta, s.beta, scale))
        return static_cast<int>(it - disks.begin());
    }
    return std::nullopt;
  }
}

template <class T>
Packing<T> generate(const DescartesQuadruple<T>& root, const T& max_curvature, const GenerateOptions& options) {
  const Tolerance<T> tol{options.tolerance};
  if (!validate_quadruple(root, tol))
    throw Error(ErrorKind::InvalidRoot, "root is not a Descartes configuration");
  for (const auto& v : root.disks)
    if (abs_value(v.beta) > max_curvature && !tol.equal(abs_value(v.beta), max_curvature))
      throw Error(ErrorKind::InvalidBound, "max curvature " + format_scalar(max_curvature) +
                                               " is below root curvature " + format_scalar(v.beta));

  Packing<T> p;
  p.root = root;
  p.max_curvature = max_curvature;
  p.tolerance = tol;

  typename KeyOf<T>::Map index;
  for (int i = 0; i < 4; ++i) {
    auto [it, inserted] = index.emplace(KeyOf<T>::make(symbol_of(root.disks[i]), options.tolerance), i);
    if (!inserted) throw Error(ErrorKind::InvalidRoot, "root contains a repeated disk");
    p.disks.push_back(root.disks[i]);
    p.provenance.push_back({});
  }
  p.quadruples.push_back({0, 1, 2, 3});

  std::set<QuadIds> seen_quads{{0, 1, 2, 3}};
  std::vector<FrontierItem> frontier{{{0, 1, 2, 3}, -1, 0}};

  // Keep curvature comparisons in the field; float mode allows round-off.
  auto keeps = [&](const T& child, const T& replaced) {
    const bool descends = child >= replaced || tol.equal(child, replaced);
    const bool bounded = abs_value(child) <= max_curvature || tol.equal(abs_value(child), max_curvature);
    return descends && bounded;
  };

  while (!frontier.empty()) {
    std::vector<std::array<std::optional<MinkowskiVector<T>>, 4>> children(frontier.size());

    for_each_index(frontier.size(), options.execution, [&](std::size_t i) {
      const FrontierItem& item = frontier[i];
      for (int j = 0; j < 4; ++j) {
        if (j == item.last) continue;
        const auto& ids = item.ids;
        const auto& replaced = p.disks[ids[j]];
        MinkowskiVector<T> child = reflected_disk(p.disks[ids[(j + 1) % 4]], p.disks[ids[(j + 2) % 4]],
                                                  p.disks[ids[(j + 3) % 4]], replaced);
        if (!keeps(child.beta, replaced.beta)) continue;
        if (options.check_reflections) {
          DescartesQuadruple<T> q{{p.disks[ids[0]], p.disks[ids[1]], p.disks[ids[2]], p.disks[ids[3]]}};
          q.disks[j] = child;
          if (!validate_quadruple(q, tol))
            throw Error(ErrorKind::ReflectionInvariant,
                        "reflection produced an invalid quadruple at " + format_symbol(symbol_of(child)));
        }
        children[i][j] = std::move(child);
      }
    });

    // Merge in frontier order so ids do not depend on scheduling.
    std::vector<FrontierItem> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (int j = 0; j < 4; ++j) {
        auto& child = children[i][j];
        if (!child) continue;
        const int id = static_cast<int>(p.disks.size());
        auto [it, inserted] = index.emplace(KeyOf<T>::make(symbol_of(*child), options.tolerance), id);
        if (inserted) {
          p.disks.push_back(std::move(*child));
          p.provenance.push_back({frontier[i].quad_index, j});
        }
        QuadIds ids = frontier[i].ids;
        ids[j] = it->second;
        QuadIds sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        if (!seen_quads.insert(sorted).second) continue;
        const int qi = static_cast<int>(p.quadruples.size());
        p.quadruples.push_back(ids);
        next.push_back({ids, j, qi});
      }
    }
    frontier = std::move(next);
  }

  sort_packing(p);
  p.integral = is_integral(p);
  return p;
}

template <class T>
DescartesQuadruple<T> preset(std::string_view name) {
  if (name == "apollonian-window") {
    return {{symbol_to_vector(Symbol<T>{T(0), T(0), T(-1)}), symbol_to_vector(Symbol<T>{T(-1), T(0), T(2)}),
             symbol_to_vector(Symbol<T>{T(1), T(0), T(2)}), symbol_to_vector(Symbol<T>{T(0), T(2), T(3)})}};
  }
  throw Error(ErrorKind::UnknownPreset, "unknown preset '" + std::string(name) + "'");
}

template <class T>
bool is_integral(const Packing<T>& p) {
  return std::all_of(p.disks.begin(), p.disks.end(), [](const MinkowskiVector<T>& v) {
    return is_integer(v.xi1) && is_integer(v.xi2) && is_integer(v.beta);
  });
}

template <class T>
Packing<T> assemble_packing(const std::array<Symbol<T>, 4>& root, const T& max_curvature,
                            const std::vector<Symbol<T>>& disks, std::vector<QuadIds> quadruples,
                            std::vector<Provenance> provenance, double tolerance) {
  Packing<T> p;
  for (int i = 0; i < 4; ++i) p.root.disks[i] = symbol_to_vector(root[i]);
  p.max_curvature = max_curvature;
  p.tolerance = Tolerance<T>{tolerance};
  p.disks.reserve(disks.size());
  for (const auto& s : disks) p.disks.push_back(symbol_to_vector(s));
  for (std::size_t i = 1; i < p.disks.size(); ++i)
    if (symbol_less(symbol_of(p.disks[i]), symbol_of(p.disks[i - 1])))
      throw Error(ErrorKind::ParseError, "disks are not sorted by (beta, x, y)");
  const int n = static_cast<int>(p.disks.size());
  for (const auto& q : quadruples)
    for (int id : q)
      if (id < 0 || id >= n) throw Error(ErrorKind::UnknownDisk, "quadruple refers to disk " + std::to_string(id));
  p.quadruples = std::move(quadruples);
  if (provenance.empty()) provenance.resize(p.disks.size());
  if (provenance.size() != p.disks.size())
    throw Error(ErrorKind::ParseError, "provenance length does not match disk count");
  p.provenance = std::move(provenance);
  p.integral = is_integral(p);
  return p;
}

std::vector<std::array<int, 2>> tangent_pairs(const std::vector<QuadIds>& quadruples) {
  std::vector<std::array<int, 2>> pairs;
  pairs.reserve(quadruples.size() * 6);
  for (const auto& q : quadruples)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) pairs.push_back({std::min(q[i], q[j]), std::max(q[i], q[j])});
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<TangentTriple> tangent_triples(const std::vector<QuadIds>& quadruples) {
  std::vector<TangentTriple> triples;
  triples.reserve(quadruples.size() * 4);
  for (std::size_t qi = 0; qi < quadruples.size(); ++qi) {
    const auto& q = quadruples[qi];
    for (int skip = 0; skip < 4; ++skip) {
      std::array<int, 3> ids{};
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) ids[k++] = q[i];
      std::sort(ids.begin(), ids.end());
      triples.push_back({ids, q[skip], static_cast<int>(qi)});
    }
  }
  std::stable_sort(triples.begin(), triples.end(),
                   [](const TangentTriple& a, const TangentTriple& b) { return a.ids < b.ids; });
  triples.erase(std::unique(triples.begin(), triples.end(),
                            [](const TangentTriple& a, const TangentTriple& b) { return a.ids == b.ids; }),
                triples.end());
  return triples;
}

#define APOLLONIAN_INSTANTIATE(T)                                                                      \
  template struct Packing<T>;                                                                          \
  template Packing<T> generate(const DescartesQuadruple<T>&, const T&, const GenerateOptions&);        \
  template DescartesQuadruple<T> preset(std::string_view);                                             \
  template bool is_integral(const Packing<T>&);                                                        \
  template Packing<T> assemble_packing(const std::array<Symbol<T>, 4>&, const T&,                      \
                                       const std::vector<Symbol<T>>&, std::vector<QuadIds>,            \
                                       std::vector<Provenance>, double);

APOLLONIAN_INSTANTIATE(Rational)
APOLLONIAN_INSTANTIATE(double)

}  // namespace apollonian
