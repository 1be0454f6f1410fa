#pragma once

// Law suite over a spinor network. Every law is evaluated per
// configuration (disk, pair, triple or quadruple); checks are pure and run in
// parallel, and the report keeps counts plus the lexicographically first
// failing configuration so it does not depend on scheduling.

#include <optional>
#include <string>
#include <vector>

#include "apollonian/network.hpp"

namespace apollonian {

struct LawFailure {
  std::vector<int> ids;  // disk ids of the configuration
  std::string detail;

  friend bool operator==(const LawFailure&, const LawFailure&) = default;
};

struct LawResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::optional<LawFailure> first_failure;

  std::size_t failed() const { return checked - passed; }
  friend bool operator==(const LawResult&, const LawResult&) = default;
};

struct VerificationReport {
  NumericMode mode = NumericMode::exact;
  std::vector<LawResult> laws;  // fixed order, see law_names()

  bool ok() const;
  std::size_t failures() const;
  /// nullptr for an unknown name.
  const LawResult* law(std::string_view name) const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// normalization, tangency, descartes, spinor_definition, norm,
/// spinor_integrality, curl, div, curvature, curvature_orientation,
/// midcircle, pythagorean_identity, additivity, spinor_descartes.
const std::vector<std::string>& law_names();

template <class T>
VerificationReport verify_all(const SpinorNetwork<T>& net, Execution execution = Execution::parallel);

}  // namespace apollonian
