#include "apollonian/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "apollonian/error.hpp"

namespace apollonian {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Circle {
  double x, y, r;
  bool outer;
};

template <class T>
Circle circle_of(const MinkowskiVector<T>& v) {
  return {to_double(T(v.xi1 / v.beta)), to_double(T(v.xi2 / v.beta)), std::abs(1.0 / to_double(v.beta)),
          v.beta < T(0)};
}

void text(std::ostringstream& out, double x, double y, double size, const std::string& body) {
  out << "    <text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << num(size) << "\">"
      << escape(body) << "</text>\n";
}

}  // namespace

LabelMode parse_label_mode(std::string_view text) {
  if (text == "curvature") return LabelMode::curvature;
  if (text == "symbol") return LabelMode::symbol;
  if (text == "spinor") return LabelMode::spinor;
  if (text == "none") return LabelMode::none;
  throw Error(ErrorKind::ParseError, "unknown label mode '" + std::string(text) + "'");
}

template <class T>
std::string render_svg(const Packing<T>& p, const SpinorNetwork<T>* net, const RenderSpec& spec) {
  if (p.size() == 0) throw Error(ErrorKind::EmptyPacking, "nothing to render");

  std::vector<Circle> circles;
  circles.reserve(p.size());
  for (const auto& v : p.disks) circles.push_back(circle_of(v));

  Viewport vp;
  if (spec.viewport) {
    vp = *spec.viewport;
  } else {
    vp = {circles[0].x - circles[0].r, circles[0].y - circles[0].r, circles[0].x + circles[0].r,
          circles[0].y + circles[0].r};
    for (const auto& c : circles) {
      vp.x_min = std::min(vp.x_min, c.x - c.r);
      vp.y_min = std::min(vp.y_min, c.y - c.r);
      vp.x_max = std::max(vp.x_max, c.x + c.r);
      vp.y_max = std::max(vp.y_max, c.y + c.r);
    }
    const double margin = 0.02 * std::max(vp.x_max - vp.x_min, vp.y_max - vp.y_min);
    vp = {vp.x_min - margin, vp.y_min - margin, vp.x_max + margin, vp.y_max + margin};
  }
  const double w = vp.x_max - vp.x_min;
  const double h = vp.y_max - vp.y_min;
  if (!(w > 0.0) || !(h > 0.0) || !std::isfinite(w) || !std::isfinite(h) || spec.width_px <= 0)
    throw Error(ErrorKind::DegenerateViewport, "viewport must have positive area");
  const double unit = std::max(w, h);
  const double min_font = 0.004 * unit;

  std::optional<SpinorNetwork<T>> own;
  if (spec.labels == LabelMode::spinor && !net) {
    own.emplace(build_network(std::make_shared<const Packing<T>>(p)));
    net = &*own;
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width_px << "\" height=\""
      << num(std::round(spec.width_px * h / w)) << "\" viewBox=\"" << num(vp.x_min) << " " << num(-vp.y_max) << " "
      << num(w) << " " << num(h) << "\">\n";
  if (spec.labels == LabelMode::spinor) {
    out << "  <defs>\n"
           "    <marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\" "
           "markerHeight=\"5\" orient=\"auto\">\n"
           "      <path d=\"M0,0 L10,5 L0,10 z\" fill=\"#b03030\"/>\n"
           "    </marker>\n"
           "  </defs>\n";
  }

  out << "  <g stroke=\"#1f3b57\" stroke-width=\"" << num(0.002 * unit * spec.stroke_scale) << "\">\n";
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const auto& c = circles[i];
    out << "    <circle id=\"d" << i << "\" cx=\"" << num(c.x) << "\" cy=\"" << num(-c.y) << "\" r=\"" << num(c.r)
        << "\" fill=\"" << (c.outer ? "none" : "#dce9f5") << "\"/>\n";
  }
  out << "  </g>\n";

  if (spec.labels == LabelMode::curvature || spec.labels == LabelMode::symbol) {
    out << "  <g font-family=\"serif\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#111111\">\n";
    for (std::size_t i = 0; i < circles.size(); ++i) {
      const auto& c = circles[i];
      if (c.outer) continue;
      const auto s = p.symbol(static_cast<int>(i));
      if (spec.labels == LabelMode::curvature) {
        const std::string label = format_scalar(s.beta);
        const double size = spec.font_scale * c.r * std::min(0.9, 1.8 / static_cast<double>(label.size()));
        if (size < min_font) continue;
        text(out, c.x, -c.y, size, label);
      } else {
        const std::string top = format_scalar(s.x_dot) + "," + format_scalar(s.y_dot);
        const std::string bottom = format_scalar(s.beta);
        const double len = static_cast<double>(std::max(top.size(), bottom.size()));
        const double size = spec.font_scale * c.r * std::min(0.6, 1.6 / len);
        if (size < min_font) continue;
        text(out, c.x, -c.y - 0.6 * size, size, top);
        const double half = 0.3 * size * len;
        out << "    <line x1=\"" << num(c.x - half) << "\" y1=\"" << num(-c.y) << "\" x2=\"" << num(c.x + half)
            << "\" y2=\"" << num(-c.y) << "\" stroke=\"#111111\" stroke-width=\"" << num(0.06 * size) << "\"/>\n";
        text(out, c.x, -c.y + 0.6 * size, size, bottom);
      }
    }
    out << "  </g>\n";
  }

  if (spec.labels == LabelMode::spinor) {
    std::vector<int> ids = spec.annotate;
    if (ids.empty())
      for (std::size_t i = 0; i < circles.size(); ++i) ids.push_back(static_cast<int>(i));
    out << "  <g font-family=\"serif\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#b03030\" "
           "stroke=\"#b03030\">\n";
    for (int id : ids) {
      if (id < 0 || id >= static_cast<int>(circles.size()))
        throw Error(ErrorKind::UnknownDisk, "cannot annotate disk " + std::to_string(id));
      const auto& c = circles[id];
      const double size = spec.font_scale * 0.18 * std::min(c.r, 0.5 * unit);
      if (size < min_font) continue;
      for (int nb : net->neighbors(id)) {
        const auto u = net->find(id, nb);
        if (!u) continue;
        const auto d = tangency_direction(p.disks[id], p.disks[nb]);
        const double dx = to_double(d.re);
        const double dy = to_double(d.im);
        out << "    <line x1=\"" << num(c.x) << "\" y1=\"" << num(-c.y) << "\" x2=\"" << num(c.x + 0.9 * dx)
            << "\" y2=\"" << num(-(c.y + 0.9 * dy)) << "\" stroke-width=\"" << num(0.05 * size)
            << "\" marker-end=\"url(#head)\"/>\n";
        out << "    <text x=\"" << num(c.x + 0.65 * dx) << "\" y=\"" << num(-(c.y + 0.65 * dy)) << "\" font-size=\""
            << num(size) << "\" stroke=\"none\">" << escape(format_scalar(u->m) + "," + format_scalar(u->n))
            << "</text>\n";
      }
    }
    out << "  </g>\n";
  }

  out << "</svg>\n";
  return out.str();
}

template std::string render_svg(const Packing<Rational>&, const SpinorNetwork<Rational>*, const RenderSpec&);
template std::string render_svg(const Packing<double>&, const SpinorNetwork<double>*, const RenderSpec&);

}  // namespace apollonian
