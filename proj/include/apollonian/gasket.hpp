#pragma once

// Fractal completion of a root Descartes quadruple. Generation is a
// breadth-first closure under Boyd reflections with a descent rule: a child
// is kept when its curvature is at least that of the disk it replaces and
// |beta| stays within the bound, and the index just produced is never
// reflected again. Ties (equal curvatures) only happen for triples with
// AB + BC + CA = 0, such as the window's {-1, 2, 2}, whose two completions
// are the mirror curvature-3 disks.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "apollonian/descartes.hpp"
#include "apollonian/parallel.hpp"

namespace apollonian {

using QuadIds = std::array<int, 4>;

/// Where a disk came from: the quadruple that was reflected and the slot
/// that was replaced. Root disks have parent_quadruple = -1.
struct Provenance {
  int parent_quadruple = -1;
  int reflected_index = -1;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

template <class T>
struct Packing {
  DescartesQuadruple<T> root;
  T max_curvature{};
  std::vector<MinkowskiVector<T>> disks;  // sorted by (beta, x_dot, y_dot)
  std::vector<QuadIds> quadruples;        // quadruples[0] is the root, in root order
  std::vector<Provenance> provenance;     // one entry per disk
  bool integral = false;
  Tolerance<T> tolerance{};

  std::size_t size() const { return disks.size(); }

  Symbol<T> symbol(int id) const {
    const auto& v = disks.at(static_cast<std::size_t>(id));
    return {v.xi1, v.xi2, v.beta};
  }

  DescartesQuadruple<T> quadruple(std::size_t q) const {
    const auto& ids = quadruples.at(q);
    return {{disks[ids[0]], disks[ids[1]], disks[ids[2]], disks[ids[3]]}};
  }

  /// Id of the disk with this symbol (tolerant match in float mode).
  std::optional<int> find(const Symbol<T>& s) const;

  friend bool operator==(const Packing& a, const Packing& b) {
    return a.root == b.root && a.max_curvature == b.max_curvature && a.disks == b.disks &&
           a.quadruples == b.quadruples && a.provenance == b.provenance && a.integral == b.integral;
  }
};

struct GenerateOptions {
  Execution execution = Execution::parallel;
  /// Validate every reflected quadruple (normalization, pairwise tangency,
  /// curvature identity). Throws ReflectionInvariant on failure.
  bool check_reflections = true;
  double tolerance = default_tolerance;
};

/// Throws InvalidRoot for an invalid quadruple, InvalidBound when the bound
/// is below a root curvature.
template <class T>
Packing<T> generate(const DescartesQuadruple<T>& root, const T& max_curvature,
                    const GenerateOptions& options = {});

/// Known roots. "apollonian-window": 0,0/-1; -1,0/2; 1,0/2; 0,2/3.
template <class T>
DescartesQuadruple<T> preset(std::string_view name);

template <class T>
bool is_integral(const Packing<T>& p);

/// Rebuild a packing from stored data (e.g. JSON). Disks keep the given
/// order so quadruple ids stay valid; gamma is recomputed from each symbol.
template <class T>
Packing<T> assemble_packing(const std::array<Symbol<T>, 4>& root, const T& max_curvature,
                            const std::vector<Symbol<T>>& disks, std::vector<QuadIds> quadruples,
                            std::vector<Provenance> provenance, double tolerance = default_tolerance);

/// Unordered tangent pairs (i < j) appearing in some quadruple, sorted.
std::vector<std::array<int, 2>> tangent_pairs(const std::vector<QuadIds>& quadruples);

/// A mutually tangent triple (sorted ids) with one completing disk taken
/// from a recorded quadruple.
struct TangentTriple {
  std::array<int, 3> ids;
  int completion;
  int quadruple;
};

/// Every mutually tangent triple contained in a recorded quadruple, sorted
/// by ids, each listed once.
std::vector<TangentTriple> tangent_triples(const std::vector<QuadIds>& quadruples);

}  // namespace apollonian
