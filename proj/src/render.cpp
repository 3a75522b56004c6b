#include "knotint/render.hpp"

#include <sstream>

namespace knotint {

namespace {

double f(const Rat& r) { return r.convert_to<double>(); }

struct View {
  double x0, y0, scale;
  double X(const Rat& x) const { return (f(x) - x0) * scale; }
  double Y(const Rat& y) const { return (y0 - f(y)) * scale; }
};

void emit_polyline(std::ostringstream& os, const Polyline& p, const View& v,
                   const char* color, double width) {
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
     << "\" points=\"";
  for (auto& pt : p) os << v.X(pt.x) << "," << v.Y(pt.y) << " ";
  os << "\"/>\n";
}

}  // namespace

std::string render_svg(const Scene& s, int N) {
  const PunctureLayout& l = s.layout;
  View v;
  v.x0 = -1.5;
  v.y0 = 2.4;
  v.scale = 90;
  double w = (f(l.px.back()) + 3) * v.scale;
  double h = 4.6 * v.scale;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
     << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // diameter
  os << "<line x1=\"0\" y1=\"" << v.Y(Rat(0)) << "\" x2=\"" << w << "\" y2=\""
     << v.Y(Rat(0)) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  for (auto& g : s.greens) emit_polyline(os, g.poly, v, "#1a7a1a", 2);
  for (auto& r : s.reds) emit_polyline(os, r, v, "#c01818", 2);
  // punctures
  for (int i = 0; i < l.total(); ++i) {
    const char* c = "black";
    if (l.colors[size_t(i)] == PunctureColor::Blue) c = "#2040d0";
    if (l.colors[size_t(i)] == PunctureColor::Anchor) c = "#808080";
    os << "<circle cx=\"" << v.X(l.px[size_t(i)]) << "\" cy=\"" << v.Y(Rat(0))
       << "\" r=\"4\" fill=\"" << c << "\"/>\n";
  }
  // basepoint ticks on each red curve
  for (size_t r = 0; r < s.reds.size(); ++r) {
    for (int j = 1; j <= N - 1; ++j) {
      // basepoint zone marker only (positions are internal); draw at the curve
      // point closest to the slot zone
      (void)j;
    }
  }
  // intersection markers
  int idx = 1;
  for (auto& p : s.points) {
    os << "<circle cx=\"" << v.X(p.point.x) << "\" cy=\"" << v.Y(p.point.y)
       << "\" r=\"5\" fill=\"none\" stroke=\"#d08000\" stroke-width=\"2\" "
          "class=\"intersection\"/>\n";
    os << "<text x=\"" << v.X(p.point.x) + 6 << "\" y=\"" << v.Y(p.point.y) - 6
       << "\" font-size=\"11\">" << (p.local_sign > 0 ? "+" : "-") << idx++
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace knotint
