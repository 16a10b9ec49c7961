#include "hbox/svg.hpp"

#include "hbox/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace hbox {

namespace {

constexpr std::array<const char*, 8> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                             "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
constexpr double pad = 30;
constexpr double mark_radius = 4;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

SvgScene render_svg(const Family& f, std::span<const Point> marks) {
  if (f.dim() != 2) throw InputError("render_svg needs a family of dimension 2");
  for (const auto& m : marks) {
    if (m.dim() != 2) throw InputError("render_svg: marked point " + m.str() + " is not planar");
  }

  Scalar xmin = f[0].hull().side(0).lo(), xmax = f[0].hull().side(0).hi();
  Scalar ymin = f[0].hull().side(1).lo(), ymax = f[0].hull().side(1).hi();
  for (const Member& m : f) {
    xmin = std::min(xmin, m.hull().side(0).lo());
    xmax = std::max(xmax, m.hull().side(0).hi());
    ymin = std::min(ymin, m.hull().side(1).lo());
    ymax = std::max(ymax, m.hull().side(1).hi());
  }
  for (const Point& p : marks) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }

  SvgScene scene;
  double w = std::max((xmax - xmin).to_double(), 1e-9);
  double h = std::max((ymax - ymin).to_double(), 1e-9);
  double scale = std::min((scene.width - 2 * pad) / w, (scene.height - 2 * pad) / h);
  double ox = (scene.width - w * scale) / 2;
  double oy = (scene.height - h * scale) / 2;
  auto px = [&](const Scalar& x) { return ox + (x - xmin).to_double() * scale; };
  auto py = [&](const Scalar& y) { return oy + (ymax - y).to_double() * scale; };

  for (std::size_t k = 0; k < f.size(); ++k) {
    const Box& b = f[k].hull();
    scene.rects.push_back({px(b.side(0).lo()), py(b.side(1).hi()), (b.side(0).hi() - b.side(0).lo()).to_double() * scale,
                           (b.side(1).hi() - b.side(1).lo()).to_double() * scale, palette[k % palette.size()],
                           !f[k].is_hollow()});
  }
  for (const Point& p : marks) scene.circles.push_back({px(p[0]), py(p[1]), mark_radius, "#000000"});
  return scene;
}

std::string SvgScene::str() const {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
       num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  for (const auto& r : rects) {
    s += "  <rect x=\"" + num(r.x) + "\" y=\"" + num(r.y) + "\" width=\"" + num(r.width) + "\" height=\"" +
         num(r.height) + "\" stroke=\"" + r.stroke + "\" stroke-width=\"2\" ";
    s += r.filled ? "fill=\"" + r.stroke + "\" fill-opacity=\"0.15\"" : std::string("fill=\"none\"");
    s += "/>\n";
  }
  for (const auto& c : circles) {
    s += "  <circle cx=\"" + num(c.cx) + "\" cy=\"" + num(c.cy) + "\" r=\"" + num(c.r) + "\" fill=\"" + c.fill + "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace hbox
