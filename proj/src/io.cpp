#include "apollonian/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "apollonian/error.hpp"

namespace apollonian {

using Json = nlohmann::ordered_json;

namespace {

template <class T>
Json scalar_json(const T& x) {
  return format_scalar(x);
}

template <class T>
T scalar_from(const Json& j) {
  if (j.is_string()) return parse_scalar<T>(j.get<std::string>());
  if (j.is_number_integer()) return T(j.get<long long>());
  if (j.is_number()) {
    if constexpr (is_exact_v<T>) {
      // A JSON float in an exact document is taken at its decimal spelling.
      return parse_scalar<T>(j.dump());
    } else {
      return j.get<double>();
    }
  }
  throw Error(ErrorKind::ParseError, "expected a number or numeric string, got " + j.dump());
}

template <class T>
Json symbol_json(const Symbol<T>& s) {
  return Json{{"x", scalar_json(s.x_dot)}, {"y", scalar_json(s.y_dot)}, {"beta", scalar_json(s.beta)}};
}

template <class T>
Symbol<T> symbol_from(const Json& j) {
  if (j.is_string()) return parse_symbol<T>(j.get<std::string>());
  return {scalar_from<T>(j.at("x")), scalar_from<T>(j.at("y")), scalar_from<T>(j.at("beta"))};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

// Wraps document-shape errors (missing keys, wrong types) as ParseError.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace

std::string_view to_string(NumericMode mode) { return mode == NumericMode::exact ? "exact" : "float"; }

NumericMode parse_mode(std::string_view text) {
  if (text == "exact") return NumericMode::exact;
  if (text == "float") return NumericMode::floating;
  throw Error(ErrorKind::ParseError, "unknown mode '" + std::string(text) + "'");
}

NumericMode packing_mode(std::string_view json_text) {
  const Json j = parse_json(json_text);
  return guarded([&] { return parse_mode(j.at("mode").get<std::string>()); });
}

template <class T>
std::string dump_packing(const Packing<T>& p) {
  Json j;
  j["mode"] = std::string(to_string(mode_of_v<T>));
  Json root = Json::array();
  for (const auto& v : p.root.disks) root.push_back(symbol_json(Symbol<T>{v.xi1, v.xi2, v.beta}));
  j["root"] = std::move(root);
  j["max_curvature"] = scalar_json(p.max_curvature);
  Json disks = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) disks.push_back(symbol_json(p.symbol(static_cast<int>(i))));
  j["disks"] = std::move(disks);
  Json quads = Json::array();
  for (const auto& q : p.quadruples) quads.push_back(Json(q));
  j["quadruples"] = std::move(quads);
  Json prov = Json::array();
  for (const auto& pr : p.provenance) prov.push_back(Json::array({pr.parent_quadruple, pr.reflected_index}));
  j["provenance"] = std::move(prov);
  j["integral"] = p.integral;
  return j.dump(2) + "\n";
}

template <class T>
Packing<T> load_packing(std::string_view json_text, double tolerance) {
  const Json j = parse_json(json_text);
  return guarded([&] {
    if (j.contains("mode") && parse_mode(j.at("mode").get<std::string>()) != mode_of_v<T>)
      throw Error(ErrorKind::ParseError, "packing was written in " + j.at("mode").get<std::string>() + " mode");
    const auto& root_json = j.at("root");
    if (!root_json.is_array() || root_json.size() != 4)
      throw Error(ErrorKind::ParseError, "root must list four symbols");
    std::array<Symbol<T>, 4> root;
    for (int i = 0; i < 4; ++i) root[i] = symbol_from<T>(root_json[i]);
    std::vector<Symbol<T>> disks;
    for (const auto& d : j.at("disks")) disks.push_back(symbol_from<T>(d));
    std::vector<QuadIds> quads;
    for (const auto& q : j.at("quadruples")) quads.push_back(q.get<QuadIds>());
    std::vector<Provenance> prov;
    if (j.contains("provenance"))
      for (const auto& pr : j.at("provenance")) prov.push_back({pr.at(0).get<int>(), pr.at(1).get<int>()});
    return assemble_packing(root, scalar_from<T>(j.at("max_curvature")), disks, std::move(quads), std::move(prov),
                            tolerance);
  });
}

template <class T>
std::string dump_network(const SpinorNetwork<T>& net) {
  Json j = Json::array();
  for (const auto& e : net.entries())
    j.push_back(Json{{"source", e.source}, {"target", e.target}, {"m", scalar_json(e.spinor.m)},
                     {"n", scalar_json(e.spinor.n)}});
  return j.dump(2) + "\n";
}

template <class T>
SpinorNetwork<T> load_network(std::shared_ptr<const Packing<T>> packing, std::string_view json_text) {
  const Json j = parse_json(json_text);
  auto entries = guarded([&] {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "network must be a list of spinors");
    std::vector<NetworkEntry<T>> out;
    out.reserve(j.size());
    for (const auto& e : j)
      out.push_back({e.at("source").get<int>(), e.at("target").get<int>(),
                     Spinor<T>{scalar_from<T>(e.at("m")), scalar_from<T>(e.at("n"))}});
    return out;
  });
  return SpinorNetwork<T>(std::move(packing), std::move(entries));
}

std::string dump_report(const VerificationReport& report) {
  Json laws;
  for (const auto& l : report.laws) {
    Json failure = nullptr;
    if (l.first_failure) failure = Json{{"ids", l.first_failure->ids}, {"detail", l.first_failure->detail}};
    laws[l.name] = Json{{"checked", l.checked}, {"passed", l.passed}, {"first_failure", failure}};
  }
  Json j;
  j["mode"] = std::string(to_string(report.mode));
  j["failures"] = report.failures();
  j["laws"] = std::move(laws);
  return j.dump(2) + "\n";
}

VerificationReport load_report(std::string_view json_text) {
  const Json j = parse_json(json_text);
  return guarded([&] {
    VerificationReport r;
    r.mode = parse_mode(j.at("mode").get<std::string>());
    for (const auto& [name, l] : j.at("laws").items()) {
      LawResult law{name, l.at("checked").get<std::size_t>(), l.at("passed").get<std::size_t>(), std::nullopt};
      const auto& f = l.at("first_failure");
      if (!f.is_null()) law.first_failure = LawFailure{f.at("ids").get<std::vector<int>>(), f.at("detail")};
      r.laws.push_back(std::move(law));
    }
    return r;
  });
}

template <class T>
std::string dump_symbol(const Symbol<T>& s) {
  return symbol_json(s).dump();
}

template <class T>
std::string dump_tangency_spinor(const TangencySpinor<T>& t) {
  return Json{{"source", symbol_json(t.source)},
              {"target", symbol_json(t.target)},
              {"m", scalar_json(t.spinor.m)},
              {"n", scalar_json(t.spinor.n)}}
      .dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << contents;
}

#define APOLLONIAN_INSTANTIATE(T)                                                              \
  template std::string dump_packing(const Packing<T>&);                                        \
  template Packing<T> load_packing(std::string_view, double);                                  \
  template std::string dump_network(const SpinorNetwork<T>&);                                  \
  template SpinorNetwork<T> load_network(std::shared_ptr<const Packing<T>>, std::string_view); \
  template std::string dump_symbol(const Symbol<T>&);                                          \
  template std::string dump_tangency_spinor(const TangencySpinor<T>&);

APOLLONIAN_INSTANTIATE(Rational)
APOLLONIAN_INSTANTIATE(double)

}  // namespace apollonian
