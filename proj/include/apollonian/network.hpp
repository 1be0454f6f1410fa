#pragma once

// Spinor layer over a packing. Every ordered tangent pair (s, t) carries the
// canonical-branch spinor with u^2 = z A B. Signs are never fixed globally
// (a single loop around a disk flips the sign), so harmonization results are
// returned per configuration.

#include <memory>
#include <optional>
#include <vector>

#include "apollonian/gasket.hpp"
#include "apollonian/spinor.hpp"

namespace apollonian {

template <class T>
struct NetworkEntry {
  int source;
  int target;
  Spinor<T> spinor;

  friend bool operator==(const NetworkEntry&, const NetworkEntry&) = default;
};

template <class T>
class SpinorNetwork {
 public:
  /// Entries may come in any order; they are sorted by (source, target).
  SpinorNetwork(std::shared_ptr<const Packing<T>> packing, std::vector<NetworkEntry<T>> entries);

  const Packing<T>& packing() const { return *packing_; }
  const std::shared_ptr<const Packing<T>>& packing_ptr() const { return packing_; }
  const Tolerance<T>& tolerance() const { return packing_->tolerance; }

  const std::vector<NetworkEntry<T>>& entries() const { return entries_; }
  const std::vector<std::array<int, 2>>& pairs() const { return pairs_; }
  const std::vector<TangentTriple>& triples() const { return triples_; }

  std::optional<Spinor<T>> find(int source, int target) const;
  /// Throws NotTangent when the pair carries no spinor.
  const Spinor<T>& spinor(int source, int target) const;

  bool tangent(int a, int b) const;
  /// Disks tangent to `id`, ascending.
  const std::vector<int>& neighbors(int id) const;
  /// Triple record for three mutually tangent ids (any order).
  std::optional<TangentTriple> triple(int a, int b, int c) const;

 private:
  std::shared_ptr<const Packing<T>> packing_;
  std::vector<NetworkEntry<T>> entries_;
  std::vector<std::array<int, 2>> pairs_;
  std::vector<TangentTriple> triples_;
  std::vector<std::vector<int>> adjacency_;
};

/// Spinors for every ordered tangent pair of the packing. Throws
/// NotExactSquare (exact mode) naming the offending pair.
template <class T>
SpinorNetwork<T> build_network(std::shared_ptr<const Packing<T>> packing,
                               Execution execution = Execution::parallel);

/// Signs for a vanishing sum; epsilons[0] is always +1 (a global flip is
/// identified with the original choice).
template <class T>
struct SignChoice {
  std::vector<int> epsilons;
  std::vector<Spinor<T>> spinors;  // canonical spinors the signs apply to
};

/// Signs (first +1) making sum eps_i u_i vanish, tried in lexicographic
/// order with +1 before -1; nullopt if none does.
template <class T>
std::optional<std::vector<int>> vanishing_signs(const std::vector<Spinor<T>>& spinors, const Tolerance<T>& tol = {});

/// Cyclic spinors of a tangent triple (2->3, 3->1, 1->2). Throws
/// CurlViolation when no sign choice vanishes.
template <class T>
SignChoice<T> harmonize_curl(const SpinorNetwork<T>& net, const std::array<int, 3>& triple);

template <class T>
struct DivChoice {
  SignChoice<T> inward;   // spinors X -> center
  SignChoice<T> outward;  // spinors center -> X
};

/// Spinors from the other three disks of the quadruple into `center`, and
/// the reversed ones. Throws DivViolation when either orientation fails.
template <class T>
DivChoice<T> harmonize_div(const SpinorNetwork<T>& net, const QuadIds& quad, int center);

/// The two disks completing a tangent triple: the one recorded with the
/// triple and its Boyd reflection. Throws NotAConfiguration if the three
/// disks are not a recorded tangent triple.
template <class T>
std::array<MinkowskiVector<T>, 2> completions(const SpinorNetwork<T>& net, int a, int b, int c);

template <class T>
struct AdditivityResult {
  Spinor<T> spinor;
  MinkowskiVector<T> disk;
  std::optional<int> id;  // set when the disk belongs to the packing
};

/// c = a + b for signed spinors a (from -> toward_a) and b (from -> toward_b);
/// identifies which completion D of the triple satisfies c^2 = z_CD C D.
/// Throws NoMatchingDisk when neither does.
template <class T>
AdditivityResult<T> additivity_child(const SpinorNetwork<T>& net, int from, int toward_a, const Spinor<T>& a,
                                     int toward_b, const Spinor<T>& b);

template <class T>
struct SternBrocotNode {
  Spinor<T> spinor;  // signed; the sum of the two parent spinors
  int disk;
  int depth;         // 0 for the two initial disks
  int left_parent;   // node indices, -1 for the initial disks
  int right_parent;
};

/// Iterated additivity between `left` and `right` around `center`. The first
/// inscribed disk is the completion of {center, left, right} with the larger
/// curvature. Nodes are listed breadth first. Throws NoMatchingDisk when a
/// node's disk lies outside the generated packing.
template <class T>
std::vector<SternBrocotNode<T>> stern_brocot_tree(const SpinorNetwork<T>& net, int center, int left, int right,
                                                  int depth);

/// Sign sigma with a + sigma b = ±d, where a, b, d are the canonical spinors
/// from `source` to `from_target`, `to_target` and the disk `over`. Throws
/// NotAConfiguration unless the four disks are a Descartes configuration.
template <class T>
int transport_sign(const SpinorNetwork<T>& net, int source, int from_target, int to_target,
                   const MinkowskiVector<T>& over);

template <class T>
int transport_sign(const SpinorNetwork<T>& net, int source, int from_target, int to_target, int over);

/// Vector from the center of `disk` towards its tangency point with
/// `neighbor`, up to a positive factor.
template <class T>
Complex<T> tangency_direction(const MinkowskiVector<T>& disk, const MinkowskiVector<T>& neighbor);

/// q lies strictly inside the counterclockwise arc from direction p to
/// direction r (the full circle minus p when p and r coincide).
template <class T>
bool inside_ccw_arc(const Complex<T>& p, const Complex<T>& q, const Complex<T>& r);

/// Neighbors of `around` ordered counterclockwise by tangency point, starting
/// from the first one in id order. Throws NoClosedChain unless consecutive
/// neighbors are tangent and there are at least three.
template <class T>
std::vector<int> neighbor_chain(const SpinorNetwork<T>& net, int around);

/// Completion of {around, p, q} touching `around` inside the ccw arc from
/// p's tangency point to q's.
template <class T>
MinkowskiVector<T> gap_completion(const SpinorNetwork<T>& net, int around, int p, int q);

struct Holonomy {
  std::vector<int> loop;  // neighbors in transport order, repeated per winding
  int value = 1;
};

/// Product of transport signs around the closed neighbor chain of `around`,
/// each step over the gap disk between consecutive neighbors. `start`
/// rotates the base point; `windings` repeats the loop.
template <class T>
Holonomy loop_holonomy(const SpinorNetwork<T>& net, int around, int windings = 1, int start = 0);

}  // namespace apollonian
