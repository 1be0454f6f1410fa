#pragma once

// JSON persistence. Scalars are written as strings: "p/q" in exact mode,
// shortest round-trip decimals in float mode. Loaders also accept plain JSON
// numbers. Malformed documents raise ParseError.

#include <memory>
#include <string>
#include <string_view>

#include "apollonian/verify.hpp"

namespace apollonian {

/// Mode recorded in a packing document ("exact" or "float").
NumericMode packing_mode(std::string_view json_text);

std::string_view to_string(NumericMode mode);
NumericMode parse_mode(std::string_view text);

template <class T>
std::string dump_packing(const Packing<T>& p);

/// Disks keep their stored order; gamma is recomputed from each symbol.
template <class T>
Packing<T> load_packing(std::string_view json_text, double tolerance = default_tolerance);

/// [{"source": id, "target": id, "m": "...", "n": "..."}, ...]
template <class T>
std::string dump_network(const SpinorNetwork<T>& net);

template <class T>
SpinorNetwork<T> load_network(std::shared_ptr<const Packing<T>> packing, std::string_view json_text);

std::string dump_report(const VerificationReport& report);
VerificationReport load_report(std::string_view json_text);

template <class T>
std::string dump_symbol(const Symbol<T>& s);

/// {"source": symbol, "target": symbol, "m": "...", "n": "..."}
template <class T>
std::string dump_tangency_spinor(const TangencySpinor<T>& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace apollonian
