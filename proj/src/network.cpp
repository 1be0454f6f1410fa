#include "apollonian/network.hpp"

#include <algorithm>

#include "apollonian/error.hpp"

namespace apollonian {

namespace {

template <class T>
Symbol<T> symbol_of(const MinkowskiVector<T>& v) {
  return {v.xi1, v.xi2, v.beta};
}

template <class T>
T cross(const Complex<T>& p, const Complex<T>& q) {
  return p.re * q.im - p.im * q.re;
}

template <class T>
T dot(const Complex<T>& p, const Complex<T>& q) {
  return p.re * q.re + p.im * q.im;
}

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
template <class T>
int half_plane(const Complex<T>& p) {
  return (p.im > T(0) || (p.im == T(0) && p.re > T(0))) ? 0 : 1;
}

template <class T>
bool angle_less(const Complex<T>& p, const Complex<T>& q) {
  const int hp = half_plane(p);
  const int hq = half_plane(q);
  if (hp != hq) return hp < hq;
  return cross(p, q) > T(0);
}

}  // namespace

template <class T>
bool inside_ccw_arc(const Complex<T>& p, const Complex<T>& q, const Complex<T>& r) {
  const T pr = cross(p, r);
  if (pr > T(0)) return cross(p, q) > T(0) && cross(q, r) > T(0);
  if (pr < T(0)) return !(cross(r, q) >= T(0) && cross(q, p) >= T(0));
  if (dot(p, r) > T(0)) return !(cross(p, q) == T(0) && dot(p, q) > T(0));
  return cross(p, q) > T(0);
}

namespace {

std::string pair_name(int a, int b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

}  // namespace

template <class T>
SpinorNetwork<T>::SpinorNetwork(std::shared_ptr<const Packing<T>> packing, std::vector<NetworkEntry<T>> entries)
    : packing_(std::move(packing)), entries_(std::move(entries)) {
  if (!packing_) throw Error(ErrorKind::EmptyPacking, "network needs a packing");
  const int n = static_cast<int>(packing_->size());
  for (const auto& e : entries_)
    if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n)
      throw Error(ErrorKind::UnknownDisk, "spinor refers to unknown pair " + pair_name(e.source, e.target));
  std::sort(entries_.begin(), entries_.end(), [](const NetworkEntry<T>& a, const NetworkEntry<T>& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  pairs_ = tangent_pairs(packing_->quadruples);
  triples_ = tangent_triples(packing_->quadruples);
  adjacency_.resize(packing_->size());
  for (const auto& [a, b] : pairs_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

template <class T>
std::optional<Spinor<T>> SpinorNetwork<T>::find(int source, int target) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(source, target),
                             [](const NetworkEntry<T>& e, const std::pair<int, int>& key) {
                               return std::pair(e.source, e.target) < key;
                             });
  if (it != entries_.end() && it->source == source && it->target == target) return it->spinor;
  return std::nullopt;
}

template <class T>
const Spinor<T>& SpinorNetwork<T>::spinor(int source, int target) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(source, target),
                             [](const NetworkEntry<T>& e, const std::pair<int, int>& key) {
                               return std::pair(e.source, e.target) < key;
                             });
  if (it == entries_.end() || it->source != source || it->target != target)
    throw Error(ErrorKind::NotTangent, "no spinor stored for " + pair_name(source, target));
  return it->spinor;
}

template <class T>
bool SpinorNetwork<T>::tangent(int a, int b) const {
  if (a < 0 || a >= static_cast<int>(adjacency_.size())) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

template <class T>
const std::vector<int>& SpinorNetwork<T>::neighbors(int id) const {
  if (id < 0 || id >= static_cast<int>(adjacency_.size()))
    throw Error(ErrorKind::UnknownDisk, "disk " + std::to_string(id) + " is not in the packing");
  return adjacency_[id];
}

template <class T>
std::optional<TangentTriple> SpinorNetwork<T>::triple(int a, int b, int c) const {
  std::array<int, 3> key{a, b, c};
  std::sort(key.begin(), key.end());
  auto it = std::lower_bound(triples_.begin(), triples_.end(), key,
                             [](const TangentTriple& t, const std::array<int, 3>& k) { return t.ids < k; });
  if (it != triples_.end() && it->ids == key) return *it;
  return std::nullopt;
}

template <class T>
SpinorNetwork<T> build_network(std::shared_ptr<const Packing<T>> packing, Execution execution) {
  if (!packing || packing->size() == 0) throw Error(ErrorKind::EmptyPacking, "packing has no disks");
  const auto pairs = tangent_pairs(packing->quadruples);
  std::vector<NetworkEntry<T>> entries(pairs.size() * 2);
  const auto& tol = packing->tolerance;
  for_each_index(pairs.size(), execution, [&](std::size_t i) {
    const auto [a, b] = pairs[i];
    const auto sa = packing->symbol(a);
    const auto sb = packing->symbol(b);
    entries[2 * i] = {a, b, tangency_spinor(sa, sb, tol).spinor};
    entries[2 * i + 1] = {b, a, tangency_spinor(sb, sa, tol).spinor};
  });
  return SpinorNetwork<T>(std::move(packing), std::move(entries));
}

template <class T>
std::optional<std::vector<int>> vanishing_signs(const std::vector<Spinor<T>>& spinors, const Tolerance<T>& tol) {
  if (spinors.empty()) return std::vector<int>{};
  const std::size_t free = spinors.size() - 1;
  double scale = 0.0;
  for (const auto& u : spinors) scale = std::max(scale, std::sqrt(to_double(norm_squared(u))));
  for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
    std::vector<int> eps{1};
    Spinor<T> sum = spinors[0];
    for (std::size_t k = 0; k < free; ++k) {
      const int e = (mask >> (free - 1 - k)) & 1 ? -1 : 1;
      eps.push_back(e);
      sum = e > 0 ? sum + spinors[k + 1] : sum - spinors[k + 1];
    }
    if (tol.is_zero(sum.m, scale) && tol.is_zero(sum.n, scale)) return eps;
  }
  return std::nullopt;
}

template <class T>
SignChoice<T> harmonize_curl(const SpinorNetwork<T>& net, const std::array<int, 3>& t) {
  std::vector<Spinor<T>> spinors{net.spinor(t[1], t[2]), net.spinor(t[2], t[0]), net.spinor(t[0], t[1])};
  auto eps = vanishing_signs(spinors, net.tolerance());
  if (!eps)
    throw Error(ErrorKind::CurlViolation, "no sign choice makes the spinors of triple (" + std::to_string(t[0]) +
                                              ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) +
                                              ") sum to zero");
  return {std::move(*eps), std::move(spinors)};
}

template <class T>
DivChoice<T> harmonize_div(const SpinorNetwork<T>& net, const QuadIds& quad, int center) {
  if (std::find(quad.begin(), quad.end(), center) == quad.end())
    throw Error(ErrorKind::NotAConfiguration, "center is not part of the quadruple");
  std::vector<Spinor<T>> in;
  std::vector<Spinor<T>> out;
  for (int id : quad) {
    if (id == center) continue;
    in.push_back(net.spinor(id, center));
    out.push_back(net.spinor(center, id));
  }
  auto ein = vanishing_signs(in, net.tolerance());
  auto eout = vanishing_signs(out, net.tolerance());
  if (!ein || !eout)
    throw Error(ErrorKind::DivViolation, std::string("no vanishing sign choice for the ") +
                                             (!ein ? "inward" : "outward") + " spinors into disk " +
                                             std::to_string(center));
  return {{std::move(*ein), std::move(in)}, {std::move(*eout), std::move(out)}};
}

template <class T>
std::array<MinkowskiVector<T>, 2> completions(const SpinorNetwork<T>& net, int a, int b, int c) {
  const auto t = net.triple(a, b, c);
  if (!t)
    throw Error(ErrorKind::NotAConfiguration, "disks " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                                  std::to_string(c) + " are not a recorded tangent triple");
  const auto& disks = net.packing().disks;
  const auto& d = disks[t->completion];
  return {d, reflected_disk(disks[t->ids[0]], disks[t->ids[1]], disks[t->ids[2]], d)};
}

template <class T>
AdditivityResult<T> additivity_child(const SpinorNetwork<T>& net, int from, int toward_a, const Spinor<T>& a,
                                     int toward_b, const Spinor<T>& b) {
  const auto candidates = completions(net, from, toward_a, toward_b);
  const Spinor<T> sum = a + b;
  const auto source = net.packing().symbol(from);
  for (const auto& d : candidates) {
    if (complex_equal(square(sum), spinor_square(source, symbol_of(d)), net.tolerance()))
      return {sum, d, net.packing().find(symbol_of(d))};
  }
  throw Error(ErrorKind::NoMatchingDisk, "a + b is not a tangency spinor for either completion of (" +
                                             std::to_string(from) + ", " + std::to_string(toward_a) + ", " +
                                             std::to_string(toward_b) + ")");
}

template <class T>
std::vector<SternBrocotNode<T>> stern_brocot_tree(const SpinorNetwork<T>& net, int center, int left, int right,
                                                  int depth) {
  if (depth < 0) throw Error(ErrorKind::InvalidBound, "depth must be non-negative");
  if (!net.tangent(center, left) || !net.tangent(center, right) || !net.tangent(left, right))
    throw Error(ErrorKind::NotAConfiguration, "center, left and right must be mutually tangent");
  const auto& packing = net.packing();
  const auto& tol = net.tolerance();
  const auto& vc = packing.disks[center];

  auto comps = completions(net, center, left, right);
  if (comps[1].beta > comps[0].beta) std::swap(comps[0], comps[1]);
  const MinkowskiVector<T>& first = comps[0];

  const Spinor<T> a = net.spinor(center, left);
  Spinor<T> b = net.spinor(center, right);
  if (!(additivity_child(net, center, left, a, right, b).disk == first)) b = -b;

  std::vector<SternBrocotNode<T>> nodes{{a, left, 0, -1, -1}, {b, right, 0, -1, -1}};
  struct Gap {
    int left_node;
    int right_node;
    MinkowskiVector<T> opposite;  // the completion already outside this gap
  };
  std::vector<Gap> gaps{{0, 1, comps[1]}};
  const auto source = packing.symbol(center);

  for (int level = 1; level <= depth; ++level) {
    std::vector<Gap> next;
    for (const auto& gap : gaps) {
      const auto& vl = packing.disks[nodes[gap.left_node].disk];
      const auto& vr = packing.disks[nodes[gap.right_node].disk];
      const MinkowskiVector<T> child = reflected_disk(vc, vl, vr, gap.opposite);
      const Spinor<T> s = nodes[gap.left_node].spinor + nodes[gap.right_node].spinor;
      if (!complex_equal(square(s), spinor_square(source, symbol_of(child)), tol))
        throw Error(ErrorKind::NoMatchingDisk, "mediant spinor does not match the inscribed disk " +
                                                   format_symbol(symbol_of(child)));
      const auto id = packing.find(symbol_of(child));
      if (!id)
        throw Error(ErrorKind::NoMatchingDisk, "inscribed disk " + format_symbol(symbol_of(child)) +
                                                   " lies beyond the generated curvature bound");
      const int node = static_cast<int>(nodes.size());
      nodes.push_back({s, *id, level, gap.left_node, gap.right_node});
      next.push_back({gap.left_node, node, vr});
      next.push_back({node, gap.right_node, vl});
    }
    gaps = std::move(next);
  }
  return nodes;
}

template <class T>
int transport_sign(const SpinorNetwork<T>& net, int source, int from_target, int to_target,
                   const MinkowskiVector<T>& over) {
  const auto& packing = net.packing();
  const auto& tol = net.tolerance();
  const auto& vc = packing.disks.at(source);
  const auto& va = packing.disks.at(from_target);
  const auto& vb = packing.disks.at(to_target);
  if (!validate_quadruple(DescartesQuadruple<T>{{vc, va, vb, over}}, tol))
    throw Error(ErrorKind::NotAConfiguration, "transport needs a Descartes configuration");
  const Spinor<T>& a = net.spinor(source, from_target);
  const Spinor<T>& b = net.spinor(source, to_target);
  const Spinor<T> d = tangency_spinor(packing.symbol(source), symbol_of(over), tol).spinor;
  for (int sigma : {1, -1}) {
    const Spinor<T> s = sigma > 0 ? a + b : a - b;
    if (spinor_equal(s, d, tol) || spinor_equal(s, -d, tol)) return sigma;
  }
  throw Error(ErrorKind::NotAConfiguration, "neither a + b nor a - b matches the spinor over the given disk");
}

template <class T>
int transport_sign(const SpinorNetwork<T>& net, int source, int from_target, int to_target, int over) {
  return transport_sign(net, source, from_target, to_target, net.packing().disks.at(over));
}

template <class T>
Complex<T> tangency_direction(const MinkowskiVector<T>& disk, const MinkowskiVector<T>& neighbor) {
  // tangency point = center + r (w2 - w1) / (r + r') = center + (w2 - w1) B / (A + B)
  const T k = neighbor.beta / (disk.beta + neighbor.beta);
  return {(neighbor.xi1 / neighbor.beta - disk.xi1 / disk.beta) * k,
          (neighbor.xi2 / neighbor.beta - disk.xi2 / disk.beta) * k};
}

template <class T>
std::vector<int> neighbor_chain(const SpinorNetwork<T>& net, int around) {
  std::vector<int> chain = net.neighbors(around);
  if (chain.size() < 3)
    throw Error(ErrorKind::NoClosedChain, "disk " + std::to_string(around) + " has fewer than three neighbors");
  const auto& disks = net.packing().disks;
  const auto& center = disks[around];
  std::vector<std::pair<Complex<T>, int>> keyed;
  keyed.reserve(chain.size());
  for (int id : chain) keyed.emplace_back(tangency_direction(center, disks[id]), id);
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return angle_less(x.first, y.first); });
  for (std::size_t i = 0; i < keyed.size(); ++i) chain[i] = keyed[i].second;
  std::rotate(chain.begin(), std::min_element(chain.begin(), chain.end()), chain.end());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const int p = chain[i];
    const int q = chain[(i + 1) % chain.size()];
    if (!net.tangent(p, q))
      throw Error(ErrorKind::NoClosedChain, "neighbors " + pair_name(p, q) + " of disk " + std::to_string(around) +
                                                " are consecutive but not tangent");
  }
  return chain;
}

template <class T>
MinkowskiVector<T> gap_completion(const SpinorNetwork<T>& net, int around, int p, int q) {
  const auto& disks = net.packing().disks;
  const auto& center = disks[around];
  const auto dp = tangency_direction(center, disks[p]);
  const auto dq = tangency_direction(center, disks[q]);
  for (const auto& d : completions(net, around, p, q))
    if (inside_ccw_arc(dp, tangency_direction(center, d), dq)) return d;
  throw Error(ErrorKind::NotAConfiguration, "no completion lies between neighbors " + pair_name(p, q));
}

template <class T>
Holonomy loop_holonomy(const SpinorNetwork<T>& net, int around, int windings, int start) {
  if (windings < 1) throw Error(ErrorKind::InvalidBound, "windings must be positive");
  auto chain = neighbor_chain(net, around);
  const auto n = chain.size();
  std::rotate(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(((start % n) + n) % n), chain.end());
  Holonomy h;
  for (int w = 0; w < windings; ++w) {
    for (std::size_t i = 0; i < n; ++i) {
      const int p = chain[i];
      const int q = chain[(i + 1) % n];
      h.value *= transport_sign(net, around, p, q, gap_completion(net, around, p, q));
      h.loop.push_back(p);
    }
  }
  return h;
}

#define APOLLONIAN_INSTANTIATE(T)                                                                           \
  template class SpinorNetwork<T>;                                                                          \
  template std::optional<std::vector<int>> vanishing_signs(const std::vector<Spinor<T>>&, const Tolerance<T>&); \
  template SpinorNetwork<T> build_network(std::shared_ptr<const Packing<T>>, Execution);                    \
  template SignChoice<T> harmonize_curl(const SpinorNetwork<T>&, const std::array<int, 3>&);                \
  template DivChoice<T> harmonize_div(const SpinorNetwork<T>&, const QuadIds&, int);                        \
  template std::array<MinkowskiVector<T>, 2> completions(const SpinorNetwork<T>&, int, int, int);           \
  template AdditivityResult<T> additivity_child(const SpinorNetwork<T>&, int, int, const Spinor<T>&, int,   \
                                                const Spinor<T>&);                                          \
  template std::vector<SternBrocotNode<T>> stern_brocot_tree(const SpinorNetwork<T>&, int, int, int, int);  \
  template int transport_sign(const SpinorNetwork<T>&, int, int, int, const MinkowskiVector<T>&);           \
  template int transport_sign(const SpinorNetwork<T>&, int, int, int, int);                                 \
  template bool inside_ccw_arc(const Complex<T>&, const Complex<T>&, const Complex<T>&);               \
  template Complex<T> tangency_direction(const MinkowskiVector<T>&, const MinkowskiVector<T>&);             \
  template std::vector<int> neighbor_chain(const SpinorNetwork<T>&, int);                                   \
  template MinkowskiVector<T> gap_completion(const SpinorNetwork<T>&, int, int, int);                       \
  template Holonomy loop_holonomy(const SpinorNetwork<T>&, int, int, int);

APOLLONIAN_INSTANTIATE(Rational)
APOLLONIAN_INSTANTIATE(double)

}  // namespace apollonian
