#include "knotint/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotint {

int orient(const Pt& a, const Pt& b, const Pt& c) {
  Rat v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

Pt point_at(const Polyline& p, const PathPos& pos) {
  const Pt& a = p[size_t(pos.seg)];
  const Pt& b = p[size_t(pos.seg) + 1];
  return a + pos.frac * (b - a);
}

Polyline subpath(const Polyline& p, const PathPos& a, const PathPos& b) {
  Polyline out;
  if (a == b) {
    out.push_back(point_at(p, a));
    out.push_back(point_at(p, a));
    return out;
  }
  if (a < b) {
    out.push_back(point_at(p, a));
    for (int s = a.seg + 1; s <= b.seg; ++s) {
      if (out.back() == p[size_t(s)]) continue;
      out.push_back(p[size_t(s)]);
    }
    Pt last = point_at(p, b);
    if (!(out.back() == last)) out.push_back(last);
  } else {
    out.push_back(point_at(p, a));
    for (int s = a.seg; s > b.seg; --s) {
      if (out.back() == p[size_t(s)]) continue;
      out.push_back(p[size_t(s)]);
    }
    Pt last = point_at(p, b);
    if (!(out.back() == last)) out.push_back(last);
  }
  if (out.size() < 2) out.push_back(out.front());
  return out;
}

PathPos advance(const Polyline& p, PathPos pos, const Rat& delta) {
  Rat t = Rat(pos.seg) + pos.frac + delta;
  if (t < 0) t = 0;
  Rat maxt = Rat(int(p.size()) - 1);
  if (t > maxt) t = maxt;
  Rat fl = t;
  // floor for non-negative rational
  Rat intpart = Rat(boost::multiprecision::numerator(t) / boost::multiprecision::denominator(t));
  if (intpart > t) intpart -= 1;
  int seg = int(boost::multiprecision::numerator(intpart));
  if (seg >= int(p.size()) - 1) { seg = int(p.size()) - 2; intpart = seg; }
  return {seg, t - intpart};
}

std::optional<SegHit> seg_intersect(const Pt& a1, const Pt& a2, const Pt& b1,
                                    const Pt& b2) {
  Pt r = a2 - a1, s = b2 - b1;
  Rat denom = r.x * s.y - r.y * s.x;
  if (denom == 0) return std::nullopt;
  Pt d = b1 - a1;
  Rat t = (d.x * s.y - d.y * s.x) / denom;
  Rat u = (d.x * r.y - d.y * r.x) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
  return SegHit{t, u, a1 + t * r};
}

bool point_in_polygon(const Pt& p, const Polyline& poly) {
  // boundary check first
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % n];
    if (orient(a, b, p) == 0) {
      if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
          std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y))
        return true;
    }
  }
  // even-odd with a horizontal ray to +x
  bool in = false;
  for (size_t i = 0; i < n; ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      Rat xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (xint > p.x) in = !in;
    }
  }
  return in;
}

bool polyline_meets_polygon(const Polyline& path, const Polyline& poly) {
  size_t n = poly.size();
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    for (size_t j = 0; j < n; ++j) {
      auto hit = seg_intersect(path[i], path[i + 1], poly[j], poly[(j + 1) % n]);
      if (hit && hit->t > 0 && hit->t < 1 && hit->u > 0 && hit->u < 1) return true;
    }
  }
  for (const Pt& v : path) {
    bool on_boundary = false;
    for (size_t j = 0; j < n && !on_boundary; ++j) {
      const Pt& a = poly[j];
      const Pt& b = poly[(j + 1) % n];
      if (orient(a, b, v) == 0 && std::min(a.x, b.x) <= v.x &&
          v.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= v.y &&
          v.y <= std::max(a.y, b.y))
        on_boundary = true;
    }
    if (!on_boundary && point_in_polygon(v, poly)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// TwistMap

namespace {
constexpr int kRings = 4;   // annulus subdivisions
constexpr int kSpokes = 8;  // vertices per ring square: corners + side midpoints

// Vertex m (0..7) of the square with half-side rho centred at c, starting at
// the east side midpoint and walking counterclockwise.
Pt ring_vertex(const Pt& c, const Rat& rho, int m) {
  switch (((m % kSpokes) + kSpokes) % kSpokes) {
    case 0: return {c.x + rho, c.y};
    case 1: return {c.x + rho, c.y + rho};
    case 2: return {c.x, c.y + rho};
    case 3: return {c.x - rho, c.y + rho};
    case 4: return {c.x - rho, c.y};
    case 5: return {c.x - rho, c.y - rho};
    case 6: return {c.x, c.y - rho};
    default: return {c.x + rho, c.y - rho};
  }
}
}  // namespace

Rat TwistMap::rho(const Pt& p) const {
  Rat dx = p.x - center_.x;
  if (dx < 0) dx = -dx;
  Rat dy = p.y - center_.y;
  if (dy < 0) dy = -dy;
  return std::max(dx, dy);
}

TwistMap::TwistMap(const Rat& xa, const Rat& xb, int dir) {
  center_ = {(xa + xb) / 2, Rat(0)};
  inner_ = Rat(13, 25);   // 0.52, contains both punctures at distance 1/2
  outer_ = Rat(29, 50);   // 0.58, clear of neighbouring punctures
  // Ring j at rho_j, rotated by (kRings - j) spoke steps: half turn at the
  // inner ring (matching the rigid core rotation), identity at the outer.
  std::vector<std::vector<Pt>> V(kRings + 1), W(kRings + 1);
  for (int j = 0; j <= kRings; ++j) {
    Rat rj = inner_ + Rat(j) * (outer_ - inner_) / kRings;
    int steps = dir * (kRings - j) * (kSpokes / (2 * kRings));
    for (int m = 0; m < kSpokes; ++m) {
      V[size_t(j)].push_back(ring_vertex(center_, rj, m));
      W[size_t(j)].push_back(ring_vertex(center_, rj, m + steps));
    }
  }
  for (int j = 0; j < kRings; ++j) {
    for (int m = 0; m < kSpokes; ++m) {
      int m1 = (m + 1) % kSpokes;
      // quad (inner m, inner m1, outer m1, outer m) split along (inner m, outer m1)
      tris_.push_back({V[size_t(j)][size_t(m)], V[size_t(j)][size_t(m1)],
                       V[size_t(j) + 1][size_t(m1)], W[size_t(j)][size_t(m)],
                       W[size_t(j)][size_t(m1)], W[size_t(j) + 1][size_t(m1)]});
      tris_.push_back({V[size_t(j)][size_t(m)], V[size_t(j) + 1][size_t(m1)],
                       V[size_t(j) + 1][size_t(m)], W[size_t(j)][size_t(m)],
                       W[size_t(j) + 1][size_t(m1)], W[size_t(j) + 1][size_t(m)]});
    }
  }
  for (auto& t : tris_) {
    int so = orient(t.s0, t.s1, t.s2);
    int to = orient(t.q0, t.q1, t.q2);
    if (so == 0 || to != so)
      throw std::logic_error("twist map triangulation is degenerate");
  }
}

Pt TwistMap::cell_map(const Tri& t, const Pt& p) const {
  // barycentric solve in the source triangle
  Pt e1 = t.s1 - t.s0, e2 = t.s2 - t.s0, d = p - t.s0;
  Rat det = e1.x * e2.y - e1.y * e2.x;
  Rat s = (d.x * e2.y - d.y * e2.x) / det;
  Rat u = (e1.x * d.y - e1.y * d.x) / det;
  return t.q0 + s * (t.q1 - t.q0) + u * (t.q2 - t.q0);
}

const TwistMap::Tri* TwistMap::locate(const Pt& p) const {
  for (const auto& t : tris_) {
    int o1 = orient(t.s0, t.s1, p);
    int o2 = orient(t.s1, t.s2, p);
    int o3 = orient(t.s2, t.s0, p);
    if (o1 >= 0 && o2 >= 0 && o3 >= 0) return &t;
  }
  return nullptr;
}

Pt TwistMap::apply(const Pt& p) const {
  Rat r = rho(p);
  if (r >= outer_) return p;
  if (r <= inner_) return {2 * center_.x - p.x, 2 * center_.y - p.y};
  const Tri* t = locate(p);
  if (!t) throw std::logic_error("twist map: annulus point not located");
  return cell_map(*t, p);
}

Polyline TwistMap::apply(const Polyline& poly) const {
  Polyline out;
  for (size_t i = 0; i + 1 < poly.size(); ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[i + 1];
    // split at every triangulation edge and at the core/outer boundaries
    std::vector<Rat> ts;
    ts.push_back(0);
    ts.push_back(1);
    auto add_edge = [&](const Pt& e1, const Pt& e2) {
      auto hit = seg_intersect(a, b, e1, e2);
      if (hit) ts.push_back(hit->t);
    };
    for (const auto& t : tris_) {
      add_edge(t.s0, t.s1);
      add_edge(t.s1, t.s2);
      add_edge(t.s2, t.s0);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (size_t k = 0; k + 1 < ts.size(); ++k) {
      Pt p1 = a + ts[k] * (b - a);
      Pt p2 = a + ts[k + 1] * (b - a);
      Pt q1 = apply(p1);
      Pt q2 = apply(p2);
      if (out.empty()) out.push_back(q1);
      else if (!(out.back() == q1)) out.push_back(q1);
      if (!(out.back() == q2)) out.push_back(q2);
    }
  }
  if (out.empty()) out = poly;
  return out;
}

}  // namespace knotint
