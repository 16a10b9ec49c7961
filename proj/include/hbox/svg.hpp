#pragma once

#include "hbox/intersection.hpp"

#include <span>
#include <string>
#include <vector>

namespace hbox {

struct SvgRect {
  double x, y, width, height;
  std::string stroke;
  bool filled;  // solid members get a translucent fill
};

struct SvgCircle {
  double cx, cy, r;
  std::string fill;
};

// Stroke-only rectangles for a planar family, plus marked points. Output is
// a pure function of the input.
struct SvgScene {
  double width = 600;
  double height = 600;
  std::vector<SvgRect> rects;
  std::vector<SvgCircle> circles;

  std::string str() const;
};

// Throws InputError unless f has dimension 2.
SvgScene render_svg(const Family& f, std::span<const Point> marks = {});

}  // namespace hbox
