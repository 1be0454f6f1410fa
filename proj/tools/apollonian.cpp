// apollonian: command-line front end.
//
//   apollonian gasket gen --preset apollonian-window --max-curv 50 --out packing.json
//   apollonian spinors build --packing packing.json --out network.json
//   apollonian verify --packing packing.json --report report.json
//   apollonian render --packing packing.json --labels symbol --out fig.svg
//   apollonian triple --pair "-1,0/2" "0,2/3"
//   apollonian holonomy --packing packing.json --around "0,2/3"
//   apollonian descartes solve --curvatures 2,2,3
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input (a JSON
// error object is written to stderr).

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apollonian/error.hpp"
#include "apollonian/io.hpp"
#include "apollonian/svg.hpp"

using namespace apollonian;

namespace {

struct Options {
  std::string mode = "exact";
  double tol = default_tolerance;
  bool serial = false;

  // gasket gen
  std::string preset;
  std::vector<std::string> root;
  std::string max_curv;
  std::string out;

  std::string packing;
  std::string network;
  std::string report;

  // render
  std::string labels = "curvature";
  std::vector<double> viewport;
  std::vector<int> annotate;
  double font_scale = 1.0;
  double stroke_scale = 1.0;
  int width = 800;

  std::vector<std::string> pair;
  bool json = false;

  std::string around;
  int windings = 1;
  int start = 0;

  std::string curvatures;
};

int fail(std::string_view kind, const std::string& message) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << "\n";
  return 2;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) std::cout << text;
  else write_file(o.out, text);
}

Execution execution(const Options& o) { return o.serial ? Execution::serial : Execution::parallel; }

template <class T>
std::shared_ptr<const Packing<T>> load_packing_file(const Options& o) {
  return std::make_shared<const Packing<T>>(load_packing<T>(read_file(o.packing), o.tol));
}

template <class T>
SpinorNetwork<T> network_for(const Options& o, std::shared_ptr<const Packing<T>> p) {
  if (o.network.empty()) return build_network(std::move(p), execution(o));
  return load_network(std::move(p), read_file(o.network));
}

template <class T>
int gasket_gen(const Options& o) {
  DescartesQuadruple<T> root;
  if (!o.preset.empty()) {
    root = preset<T>(o.preset);
  } else {
    if (o.root.size() != 4) throw Error(ErrorKind::ParseError, "--root needs four symbols");
    for (int i = 0; i < 4; ++i) root.disks[i] = symbol_to_vector(parse_symbol<T>(o.root[i]));
  }
  GenerateOptions opts;
  opts.execution = execution(o);
  opts.tolerance = o.tol;
  emit(o, dump_packing(generate(root, parse_scalar<T>(o.max_curv), opts)));
  return 0;
}

template <class T>
int spinors_build(const Options& o) {
  emit(o, dump_network(build_network(load_packing_file<T>(o), execution(o))));
  return 0;
}

template <class T>
int verify(const Options& o) {
  const auto report = verify_all(network_for(o, load_packing_file<T>(o)), execution(o));
  const std::string text = dump_report(report);
  if (!o.report.empty()) write_file(o.report, text);
  for (const auto& l : report.laws)
    std::cout << l.name << ": " << l.passed << "/" << l.checked << (l.first_failure ? "  FAIL " + l.first_failure->detail : "")
              << "\n";
  std::cout << (report.ok() ? "all laws hold" : std::to_string(report.failures()) + " failures") << "\n";
  return report.ok() ? 0 : 1;
}

template <class T>
int render(const Options& o) {
  auto p = load_packing_file<T>(o);
  std::optional<SpinorNetwork<T>> net;
  if (!o.network.empty()) net.emplace(load_network(p, read_file(o.network)));
  RenderSpec spec;
  spec.labels = parse_label_mode(o.labels);
  if (!o.viewport.empty()) {
    if (o.viewport.size() != 4) throw Error(ErrorKind::ParseError, "--viewport needs x_min,y_min,x_max,y_max");
    spec.viewport = Viewport{o.viewport[0], o.viewport[1], o.viewport[2], o.viewport[3]};
  }
  spec.annotate = o.annotate;
  spec.font_scale = o.font_scale;
  spec.stroke_scale = o.stroke_scale;
  spec.width_px = o.width;
  emit(o, render_svg(*p, net ? &*net : nullptr, spec));
  return 0;
}

template <class T>
int triple(const Options& o) {
  const Tolerance<T> tol{o.tol};
  const auto s = parse_symbol<T>(o.pair.at(0));
  const auto t = parse_symbol<T>(o.pair.at(1));
  const auto tri = bowtie(symbol_to_vector(s), symbol_to_vector(t), tol);
  const auto u = triple_to_spinor(tri, tol);
  if (o.json) {
    nlohmann::ordered_json j{{"source", format_symbol(s)},
                             {"target", format_symbol(t)},
                             {"triple", {format_scalar(tri.a), format_scalar(tri.b), format_scalar(tri.c)}},
                             {"spinor", {format_scalar(u.m), format_scalar(u.n)}}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "triple (" << format_scalar(tri.a) << ", " << format_scalar(tri.b) << ", " << format_scalar(tri.c)
              << ")\n";
    std::cout << "spinor (" << format_scalar(u.m) << ", " << format_scalar(u.n) << ")\n";
  }
  return 0;
}

template <class T>
int holonomy(const Options& o) {
  auto p = load_packing_file<T>(o);
  int id = -1;
  const bool numeric = !o.around.empty() && o.around.find_first_not_of("0123456789") == std::string::npos;
  if (numeric) {
    id = std::stoi(o.around);
    if (id >= static_cast<int>(p->size())) throw Error(ErrorKind::UnknownDisk, "no disk " + o.around);
  } else {
    const auto found = p->find(parse_symbol<T>(o.around));
    if (!found) throw Error(ErrorKind::UnknownDisk, "no disk " + o.around + " in the packing");
    id = *found;
  }
  const auto net = build_network(p, execution(o));
  const auto h = loop_holonomy(net, id, o.windings, o.start);
  std::cout << "around " << format_symbol(p->symbol(id)) << "\n";
  std::cout << "loop";
  for (std::size_t i = 0; i < h.loop.size() && i < net.neighbors(id).size(); ++i)
    std::cout << " " << format_symbol(p->symbol(h.loop[i]));
  std::cout << "\nwindings " << o.windings << "\nholonomy " << (h.value > 0 ? "+1" : "-1") << "\n";
  return 0;
}

template <class T>
int descartes(const Options& o) {
  std::vector<T> k;
  std::string_view rest = o.curvatures;
  while (true) {
    const auto comma = rest.find(',');
    k.push_back(parse_scalar<T>(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (k.size() != 3) throw Error(ErrorKind::ParseError, "--curvatures needs exactly three values");
  const Tolerance<T> tol{o.tol};
  const auto [plus, minus] = solve_descartes(k[0], k[1], k[2], tol);
  const T sum = plus + minus;
  const T twice = T(2) * (k[0] + k[1] + k[2]);
  std::cout << "plus " << format_scalar(plus) << "\n";
  std::cout << "minus " << format_scalar(minus) << "\n";
  std::cout << "D + D' = " << format_scalar(sum) << ", 2(A + B + C) = " << format_scalar(twice)
            << (tol.equal(sum, twice) ? " ok" : " MISMATCH") << "\n";
  return 0;
}

template <class T>
int dispatch(const CLI::App& app, const Options& o) {
  if (app.got_subcommand("gasket")) return gasket_gen<T>(o);
  if (app.got_subcommand("spinors")) return spinors_build<T>(o);
  if (app.got_subcommand("verify")) return verify<T>(o);
  if (app.got_subcommand("render")) return render<T>(o);
  if (app.got_subcommand("triple")) return triple<T>(o);
  if (app.got_subcommand("holonomy")) return holonomy<T>(o);
  if (app.got_subcommand("descartes")) return descartes<T>(o);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Apollonian packings with tangency spinors"};
  app.require_subcommand(1);
  app.add_option("--mode", o.mode, "Arithmetic: exact (GMP rationals) or float")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", o.tol, "Relative tolerance for float mode");
  app.add_flag("--serial", o.serial, "Run kernels on one thread");

  auto* gasket = app.add_subcommand("gasket", "Packing generation");
  gasket->require_subcommand(1);
  auto* gen = gasket->add_subcommand("gen", "Generate a packing from a root quadruple");
  auto* roots = gen->add_option_group("root");
  roots->add_option("--preset", o.preset, "Named root (apollonian-window)");
  roots->add_option("--root", o.root, "Four symbols x,y/beta")->expected(4);
  roots->require_option(1);
  gen->add_option("--max-curv", o.max_curv, "Curvature bound on |beta|")->required();
  gen->add_option("--out", o.out, "Output file (default stdout)");

  auto* spinors = app.add_subcommand("spinors", "Spinor networks");
  spinors->require_subcommand(1);
  auto* build = spinors->add_subcommand("build", "Spinors for every tangent pair");
  build->add_option("--packing", o.packing)->required();
  build->add_option("--out", o.out);

  auto* ver = app.add_subcommand("verify", "Check every law over a packing");
  ver->add_option("--packing", o.packing)->required();
  ver->add_option("--network", o.network);
  ver->add_option("--report", o.report);

  auto* ren = app.add_subcommand("render", "Draw a packing as SVG");
  ren->add_option("--packing", o.packing)->required();
  ren->add_option("--network", o.network);
  ren->add_option("--labels", o.labels)->check(CLI::IsMember({"curvature", "symbol", "spinor", "none"}));
  ren->add_option("--viewport", o.viewport, "x_min,y_min,x_max,y_max")->delimiter(',');
  ren->add_option("--annotate", o.annotate, "Disk ids for spinor arrows")->delimiter(',');
  ren->add_option("--font-scale", o.font_scale);
  ren->add_option("--stroke-scale", o.stroke_scale);
  ren->add_option("--width", o.width);
  ren->add_option("--out", o.out);

  auto* tri = app.add_subcommand("triple", "Pythagorean triple and spinor of a tangent pair");
  tri->add_option("--pair", o.pair, "Two symbols")->expected(2)->required();
  tri->add_flag("--json", o.json);

  auto* hol = app.add_subcommand("holonomy", "Sign holonomy around a disk");
  hol->add_option("--packing", o.packing)->required();
  hol->add_option("--around", o.around, "Disk id or symbol")->required();
  hol->add_option("--windings", o.windings);
  hol->add_option("--start", o.start);

  auto* desc = app.add_subcommand("descartes", "Descartes theorem");
  desc->require_subcommand(1);
  auto* solve = desc->add_subcommand("solve", "Both completions of a tangent triple");
  solve->add_option("--curvatures", o.curvatures, "A,B,C")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("ParseError", e.what());
  }

  try {
    NumericMode mode = parse_mode(o.mode);
    if (!o.packing.empty()) mode = packing_mode(read_file(o.packing));
    return mode == NumericMode::exact ? dispatch<Rational>(app, o) : dispatch<double>(app, o);
  } catch (const Error& e) {
    return fail(to_string(e.kind()), e.detail());
  } catch (const std::exception& e) {
    return fail("ParseError", e.what());
  }
}
