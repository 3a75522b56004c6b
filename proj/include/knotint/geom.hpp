// Exact piecewise-linear plane geometry over the rationals.
//
// Curves in the punctured disc are polylines with mpq coordinates; the braid
// generators act through an explicit PL homeomorphism supported on a small
// square annulus around the two punctures being twisted.

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <vector>

namespace knotint {

using Rat = boost::multiprecision::mpq_rational;

struct Pt {
  Rat x, y;
  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
};

inline Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator*(const Rat& s, const Pt& a) { return {s * a.x, s * a.y}; }

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
int orient(const Pt& a, const Pt& b, const Pt& c);

using Polyline = std::vector<Pt>;

// Position along a polyline: point = lerp(pts[seg], pts[seg+1], frac).
struct PathPos {
  int seg = 0;
  Rat frac = 0;
  friend bool operator<(const PathPos& a, const PathPos& b) {
    return a.seg != b.seg ? a.seg < b.seg : a.frac < b.frac;
  }
  friend bool operator==(const PathPos& a, const PathPos& b) {
    return a.seg == b.seg && a.frac == b.frac;
  }
};

Pt point_at(const Polyline& p, const PathPos& pos);

// Sub-polyline from a to b; walks backwards when b < a.
Polyline subpath(const Polyline& p, const PathPos& a, const PathPos& b);

// Moves a position forward (delta > 0) or backward along the polyline by a
// parameter amount measured in segment fractions.
PathPos advance(const Polyline& p, PathPos pos, const Rat& delta);

struct SegHit {
  Rat t, u;  // parameters on segment 1 and 2, each in [0,1]
  Pt point;
};

// Intersection of segments (a1,a2) and (b1,b2).  Returns a hit only for
// non-parallel segments whose intersection lies within both closed ranges.
std::optional<SegHit> seg_intersect(const Pt& a1, const Pt& a2, const Pt& b1,
                                    const Pt& b2);

// Even-odd test; the polygon is given by its vertex cycle (closing edge
// implied).  Points on the boundary count as inside.
bool point_in_polygon(const Pt& p, const Polyline& poly);

// Does any segment of `path` properly cross the closed polygon boundary,
// or any vertex of `path` lie strictly inside it?  Used for bigon emptiness.
bool polyline_meets_polygon(const Polyline& path, const Polyline& poly);

// ---------------------------------------------------------------------------
// Half-twist map.
//
// A PL homeomorphism of the plane supported on the square of half-side
// `outer` centred midway between the punctures (xa,0) and (xb,0), xb = xa+1:
// rigid 180-degree rotation inside the `inner` square, interpolated through a
// triangulated square annulus, identity outside.  dir=+1 rotates the inner
// square counterclockwise relative to the annulus shear.

class TwistMap {
 public:
  TwistMap(const Rat& xa, const Rat& xb, int dir);

  Pt apply(const Pt& p) const;
  // Maps a polyline exactly, subdividing segments at the cell boundaries of
  // the underlying triangulation.
  Polyline apply(const Polyline& poly) const;

 private:
  struct Tri {
    Pt s0, s1, s2;  // source triangle
    Pt q0, q1, q2;  // image triangle
  };

  Pt cell_map(const Tri& t, const Pt& p) const;
  const Tri* locate(const Pt& p) const;
  Rat rho(const Pt& p) const;

  Pt center_;
  Rat inner_, outer_;
  std::vector<Tri> tris_;
};

}  // namespace knotint
