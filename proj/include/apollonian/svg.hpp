#pragma once

// SVG 1.1 rendering of a packing. The plane is y-up and SVG is y-down, so
// every plane point (x, y) is written as (x, -y) and the viewBox is flipped
// to match; text therefore stays upright. Numbers are printed with 12
// significant digits and disks are emitted in id order, so the output is
// byte-for-byte deterministic.
//
// Label modes: curvature prints beta at the center; symbol prints the stacked
// fraction "x,y" over beta; spinor draws, for each annotated disk, an arrow
// from its center to every tangency point with the spinor "m,n" beside the
// arrow head.

#include <optional>
#include <string>
#include <vector>

#include "apollonian/network.hpp"

namespace apollonian {

enum class LabelMode { curvature, symbol, spinor, none };

LabelMode parse_label_mode(std::string_view text);

struct Viewport {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;
};

struct RenderSpec {
  LabelMode labels = LabelMode::curvature;
  /// Defaults to the bounding box of all disks plus a small margin.
  std::optional<Viewport> viewport;
  double stroke_scale = 1.0;
  double font_scale = 1.0;
  /// Disks that get spinor arrows; empty means every disk.
  std::vector<int> annotate;
  int width_px = 800;
};

/// Throws EmptyPacking or DegenerateViewport. Spinor labels without a network
/// build one on the fly.
template <class T>
std::string render_svg(const Packing<T>& p, const SpinorNetwork<T>* net, const RenderSpec& spec);

}  // namespace apollonian
