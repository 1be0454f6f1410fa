#pragma once

#include <memory>
#include <string>
#include <vector>

#include "apollonian/error.hpp"
#include "apollonian/io.hpp"
#include "apollonian/svg.hpp"
#include "apollonian/verify.hpp"

namespace testing {

using namespace apollonian;
using Q = Rational;

inline Q q(const char* text) { return parse_scalar<Q>(text); }
inline Symbol<Q> sym(const char* text) { return parse_symbol<Q>(text); }
inline MinkowskiVector<Q> vec(const char* text) { return symbol_to_vector(sym(text)); }

inline std::shared_ptr<const Packing<Q>> window(int bound, Execution exec = Execution::parallel) {
  GenerateOptions opts;
  opts.execution = exec;
  return std::make_shared<const Packing<Q>>(generate(preset<Q>("apollonian-window"), Q(bound), opts));
}

inline int id_of(const Packing<Q>& p, const char* symbol) {
  const auto id = p.find(sym(symbol));
  if (!id) throw std::runtime_error(std::string("missing disk ") + symbol);
  return *id;
}

inline std::vector<long> curvature_list(const Packing<Q>& p) {
  std::vector<long> out;
  for (const auto& v : p.disks) out.push_back(v.beta.convert_to<long>());
  std::sort(out.begin(), out.end());
  return out;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected an apollonian::Error");
}

}  // namespace testing
