#include "knotint/curves.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "knotint/calib.hpp"

namespace knotint {

namespace {

const Rat kLobeHalf(3, 10);    // lobe reach around its puncture
const Rat kLegLean(1, 50);     // x lean of near-vertical green legs
const Rat kChordBase(9, 20);   // innermost |height| of canonical chords
const Rat kChordSpan(13, 200); // extra height used by nesting
const Rat kWindowPad(7, 20);   // crossings keep this distance from punctures
const Rat kFootBase(1, 100);   // germ foot offset
const Rat kFootStep(1, 250);

Rat interval_lo(const PunctureLayout& l, int i) {
  return i == 0 ? l.px.front() - 1 : l.px[size_t(i) - 1];
}
Rat interval_hi(const PunctureLayout& l, int i) {
  return i == l.total() ? l.px.back() + 1 : l.px[size_t(i)];
}

// Interval holding the basepoint zone: just right of black n-1.
int slot_interval(const PunctureLayout& l) { return l.n; }

}  // namespace

int PunctureLayout::interval_of(const Rat& x) const {
  int c = 0;
  for (const Rat& p : px) {
    if (p == x) throw std::logic_error("curve crosses the diameter at a puncture");
    if (p < x) ++c;
  }
  return c;
}

PunctureLayout make_layout(int n, LayoutMode mode) {
  if (n < 2) throw std::invalid_argument("layout needs n >= 2");
  PunctureLayout l;
  l.mode = mode;
  l.n = n;
  l.black.assign(size_t(2 * n - 1), -1);
  auto add = [&](PunctureColor c) {
    l.px.push_back(Rat(int(l.px.size())));
    l.colors.push_back(c);
    return int(l.px.size()) - 1;
  };
  for (int j = 0; j < n; ++j) l.black[size_t(j)] = add(PunctureColor::Black);
  switch (mode) {
    case LayoutMode::Gamma:
      // right region interleaves blue punctures with the right-hand blacks:
      // q_{n-1}, b_n, q_{n-2}, b_{n+1}, ..., q_1, b_{2n-2}, q_n
      l.blue.assign(size_t(n + 1), -1);
      for (int t = 0; t < n - 1; ++t) {
        l.blue[size_t(n - 1 - t)] = add(PunctureColor::Blue);
        l.black[size_t(n + t)] = add(PunctureColor::Black);
      }
      l.blue[size_t(n)] = add(PunctureColor::Blue);
      break;
    case LayoutMode::Alexander:
      for (int j = n; j <= 2 * n - 2; ++j) l.black[size_t(j)] = add(PunctureColor::Black);
      break;
    case LayoutMode::Lambda:
      l.anchor = add(PunctureColor::Anchor);
      for (int j = n; j <= 2 * n - 2; ++j) l.black[size_t(j)] = add(PunctureColor::Black);
      break;
  }
  l.side_threshold = Rat(n) - Rat(1, 2);
  return l;
}

CurveWord reduce(const CurveWord& w) {
  CurveWord r = w;
  bool changed = true;
  while (changed) {
    changed = false;
    auto& c = r.crossings;
    for (size_t i = 0; i + 1 < c.size(); ++i) {
      if (c[i] == c[i + 1]) {
        c.erase(c.begin() + long(i), c.begin() + long(i) + 2);
        changed = true;
        break;
      }
    }
    if (!changed && r.circle && c.size() >= 2 && c.front() == c.back()) {
      c.pop_back();
      c.erase(c.begin());
      r.start_half = -r.start_half;  // merged chord lies in the other half
      changed = true;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Green supports

std::vector<GreenCircle> green_supports(const PunctureLayout& l) {
  std::vector<GreenCircle> out;
  int n = l.n;
  for (int k = 1; k <= n - 1; ++k) {
    GreenCircle g;
    g.k = k;
    g.punct_left = l.black[size_t(k)];
    g.punct_right = l.black[size_t(2 * n - 1 - k)];
    Rat xl = l.px[size_t(g.punct_left)];
    Rat xr = l.px[size_t(g.punct_right)];
    Rat A = xl - kLobeHalf, B = xl + kLobeHalf;
    Rat C = xr - kLobeHalf, D = xr + kLobeHalf;
    g.lobe_depth = Rat(3, 20) + Rat(n - k, 4 * n);
    Rat ht = Rat(3, 5) + Rat(3 * (n - 1 - k), 10 * n);
    Rat hr = ht + Rat(3, 20 * n);
    Rat dep = -g.lobe_depth;
    Pt M{(A + D) / 2, hr};
    g.poly = {M,
              {A - kLegLean, hr},
              {A, Rat(0)},
              {A + kLegLean, dep},
              {B - kLegLean, dep},
              {B, Rat(0)},
              {B + kLegLean, ht},
              {C - kLegLean, ht},
              {C, Rat(0)},
              {C + kLegLean, dep},
              {D - kLegLean, dep},
              {D, Rat(0)},
              {D + kLegLean, hr},
              M};
    Rat ax = xl + Rat(3, 20);
    g.attach_left = {3, (ax - g.poly[3].x) / (g.poly[4].x - g.poly[3].x)};
    Rat axr = xr - Rat(3, 20);
    g.attach_right = {9, (axr - g.poly[9].x) / (g.poly[10].x - g.poly[9].x)};
    out.push_back(std::move(g));
  }
  return out;
}

CurveWord green_circle_word(const PunctureLayout& l, int k) {
  int n = l.n;
  Rat xl = l.px[size_t(l.black[size_t(k)])];
  Rat xr = l.px[size_t(l.black[size_t(2 * n - 1 - k)])];
  CurveWord w;
  w.circle = true;
  w.start_half = -1;  // first chord (A -> B) runs under the left puncture
  w.crossings = {l.interval_of(xl - kLobeHalf), l.interval_of(xl + kLobeHalf),
                 l.interval_of(xr - kLobeHalf), l.interval_of(xr + kLobeHalf)};
  return w;
}

CurveDiagram standard_supports(const PunctureLayout& l) {
  CurveDiagram d;
  d.layout = l;
  d.interval_order.assign(size_t(l.total()) + 1, {});
  for (int k = 1; k <= l.n - 1; ++k) {
    Component c;
    c.word.from = l.black[size_t(k)];
    c.word.to = l.black[size_t(2 * l.n - 1 - k)];
    c.word.start_half = -1;
    c.tag = k;
    d.comps.push_back(c);
  }
  return d;
}

CurveDiagram statesum_supports(const PunctureLayout& l, int N,
                               const std::vector<int>& bar_i) {
  if (l.mode != LayoutMode::Lambda)
    throw std::invalid_argument("statesum supports need the lambda layout");
  if (int(bar_i.size()) != l.n - 1)
    throw std::invalid_argument("multi-index size must be n-1");
  CurveDiagram d;
  d.layout = l;
  d.interval_order.assign(size_t(l.total()) + 1, {});
  std::vector<std::pair<int, int>> fan;
  for (int k = 1; k <= l.n - 1; ++k) {
    int ik = bar_i[size_t(k) - 1];
    if (ik < 0 || ik > N - 1) throw std::invalid_argument("multi-index out of range");
    if (ik > 0) {
      Component c;
      c.word.from = l.black[size_t(k)];
      c.word.to = l.anchor;
      c.word.start_half = -1;
      c.multiplicity = ik;
      c.tag = k;
      fan.emplace_back(int(d.comps.size()), 1);
      d.comps.push_back(c);
    }
    if (N - 1 - ik > 0) {
      Component c;
      c.word.from = l.black[size_t(2 * l.n - 1 - k)];
      c.word.to = l.anchor;
      c.word.start_half = -1;
      c.multiplicity = N - 1 - ik;
      c.tag = -k;
      fan.emplace_back(int(d.comps.size()), 1);
      d.comps.push_back(c);
    }
  }
  if (!fan.empty()) d.germ_order[l.anchor] = fan;
  return d;
}

// ---------------------------------------------------------------------------
// Canonical embedding

namespace {

struct AnchorKey {
  Rat x;
  int sub = 0;  // orders germ anchors sharing a puncture
  friend bool operator<(const AnchorKey& a, const AnchorKey& b) {
    return a.x != b.x ? a.x < b.x : a.sub < b.sub;
  }
  friend bool operator==(const AnchorKey& a, const AnchorKey& b) {
    return a.x == b.x && a.sub == b.sub;
  }
};

struct Chord {
  int comp = 0;
  int half = 1;
  AnchorKey lo, hi;
  int depth = 0;
};

}  // namespace

std::vector<Polyline> embed_diagram(const CurveDiagram& d) {
  const PunctureLayout& l = d.layout;
  int M = l.total();

  // crossing x positions from the interval orders
  std::map<std::pair<int, int>, Rat> xpos;  // (comp, crossing idx) -> x
  for (int iv = 0; iv <= M; ++iv) {
    const auto& order = d.interval_order[size_t(iv)];
    if (order.empty()) continue;
    Rat wlo = interval_lo(l, iv) + kWindowPad;
    Rat whi = interval_hi(l, iv) - kWindowPad;
    if (iv == slot_interval(l)) whi = interval_lo(l, iv) + Rat(2, 5);
    int cnt = int(order.size());
    for (int r = 0; r < cnt; ++r)
      xpos[order[size_t(r)]] = wlo + (whi - wlo) * Rat(r + 1, cnt + 1);
  }
  for (size_t ci = 0; ci < d.comps.size(); ++ci)
    for (size_t j = 0; j < d.comps[ci].word.crossings.size(); ++j)
      if (!xpos.count({int(ci), int(j)}))
        throw std::logic_error("crossing missing from interval order");

  // arc ends: other-anchor x, direction, sub key, foot x
  struct EndInfo {
    int punct = -1;
    int dir = 0;
    Rat other;
    int sub = 0;
    Rat foot_x;
  };
  std::map<std::pair<int, int>, EndInfo> ends;  // (comp, end 0/1)
  {
    std::vector<std::pair<std::pair<int, int>, EndInfo>> list;
    for (size_t ci = 0; ci < d.comps.size(); ++ci) {
      const CurveWord& w = d.comps[ci].word;
      if (w.circle) continue;
      int m = int(w.crossings.size());
      EndInfo e0, e1;
      e0.punct = w.from;
      e1.punct = w.to;
      e0.other = m > 0 ? xpos.at({int(ci), 0}) : l.px[size_t(w.to)];
      e1.other = m > 0 ? xpos.at({int(ci), m - 1}) : l.px[size_t(w.from)];
      e0.dir = e0.other > l.px[size_t(w.from)] ? 1 : -1;
      e1.dir = e1.other > l.px[size_t(w.to)] ? 1 : -1;
      list.push_back({{int(ci), 0}, e0});
      list.push_back({{int(ci), 1}, e1});
    }
    // group by (puncture, dir); rank widest chord first
    std::stable_sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      const EndInfo &A = a.second, &B = b.second;
      if (A.punct != B.punct) return A.punct < B.punct;
      if (A.dir != B.dir) return A.dir < B.dir;
      if (A.other != B.other) return A.dir > 0 ? A.other > B.other : A.other < B.other;
      return a.first < b.first;
    });
    size_t i = 0;
    while (i < list.size()) {
      size_t j = i;
      while (j < list.size() && list[j].second.punct == list[i].second.punct &&
             list[j].second.dir == list[i].second.dir)
        ++j;
      int cnt = int(j - i);
      for (size_t t = i; t < j; ++t) {
        EndInfo& e = list[t].second;
        int rank = int(t - i);  // 0 = widest
        e.sub = e.dir * (rank + 1);
        e.foot_x = l.px[size_t(e.punct)] +
                   Rat(e.dir) * (kFootBase + Rat(cnt - 1 - rank) * kFootStep);
        ends[list[t].first] = e;
      }
      i = j;
    }
  }

  // chords
  std::vector<Chord> chords;
  std::vector<std::vector<int>> comp_chords(d.comps.size());
  for (size_t ci = 0; ci < d.comps.size(); ++ci) {
    const CurveWord& w = d.comps[ci].word;
    int m = int(w.crossings.size());
    auto cross_key = [&](int idx) { return AnchorKey{xpos.at({int(ci), idx}), 0}; };
    auto germ_key = [&](int end) {
      const EndInfo& e = ends.at({int(ci), end});
      return AnchorKey{l.px[size_t(e.punct)], e.sub};
    };
    int nch = w.circle ? m : m + 1;
    for (int j = 0; j < nch; ++j) {
      Chord ch;
      ch.comp = int(ci);
      ch.half = (j % 2 == 0) ? w.start_half : -w.start_half;
      AnchorKey a, b;
      if (w.circle) {
        a = cross_key(j);
        b = cross_key((j + 1) % m);
      } else {
        a = (j == 0) ? germ_key(0) : cross_key(j - 1);
        b = (j == m) ? germ_key(1) : cross_key(j);
      }
      if (b < a) std::swap(a, b);
      ch.lo = a;
      ch.hi = b;
      comp_chords[ci].push_back(int(chords.size()));
      chords.push_back(ch);
    }
  }

  // nesting depths per half
  int maxdepth = 0;
  for (auto& a : chords) {
    for (auto& b : chords) {
      if (&a == &b || a.half != b.half) continue;
      bool lo_le = (b.lo < a.lo) || (b.lo == a.lo);
      bool hi_le = (a.hi < b.hi) || (a.hi == b.hi);
      if (lo_le && hi_le && !(b.lo == a.lo && a.hi == b.hi)) ++a.depth;
      if (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi)
        throw std::logic_error("interleaved chords in one half-disc");
    }
    maxdepth = std::max(maxdepth, a.depth);
  }
  auto height = [&](int chord_id) {
    const Chord& c = chords[size_t(chord_id)];
    Rat h = kChordBase + kChordSpan * Rat(maxdepth + 1 - c.depth, maxdepth + 2);
    return c.half > 0 ? h : -h;
  };

  // assemble polylines
  std::vector<Polyline> polys;
  for (size_t ci = 0; ci < d.comps.size(); ++ci) {
    const CurveWord& w = d.comps[ci].word;
    const auto& cc = comp_chords[ci];
    Polyline poly;
    if (!w.circle) {
      poly.push_back({l.px[size_t(w.from)], Rat(0)});
      poly.push_back({ends.at({int(ci), 0}).foot_x, height(cc.front())});
      for (size_t j = 0; j + 1 < cc.size(); ++j) {
        Rat xc = xpos.at({int(ci), int(j)});
        poly.push_back({xc, height(cc[j])});
        poly.push_back({xc, height(cc[j + 1])});
      }
      poly.push_back({ends.at({int(ci), 1}).foot_x, height(cc.back())});
      poly.push_back({l.px[size_t(w.to)], Rat(0)});
    } else {
      int m = int(w.crossings.size());
      if (m < 2) throw std::logic_error("trivial circle in diagram");
      for (int j = 0; j < m; ++j) {
        Rat xc = xpos.at({int(ci), j});
        poly.push_back({xc, height(cc[size_t((j + m - 1) % m)])});
        poly.push_back({xc, height(cc[size_t(j)])});
      }
      poly.push_back(poly.front());
    }
    polys.push_back(std::move(poly));
  }
  return polys;
}

// ---------------------------------------------------------------------------
// Extraction and reduction

namespace {

struct RawCross {
  Rat x;
  int interval;
};

// Crossings of an oriented polyline with the axis, in traversal order.
// Endpoints at punctures are not crossings; vertices exactly on the axis are
// collapsed to a single crossing when the sign flips across the touch.
std::vector<RawCross> axis_crossings(const PunctureLayout& l, const Polyline& poly,
                                     bool closed) {
  auto ysign = [](const Pt& p) { return p.y > 0 ? 1 : (p.y < 0 ? -1 : 0); };
  std::vector<RawCross> out;
  int prev_sign = ysign(poly.front());
  std::optional<Rat> zero_x;
  if (prev_sign == 0 && !closed) zero_x.reset();  // arc starts at a puncture
  size_t nseg = poly.size() - 1;
  for (size_t i = 0; i < nseg; ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[i + 1];
    int sa = ysign(a), sb = ysign(b);
    if (sa == 0 && sb == 0 && !(a == b))
      throw std::logic_error("curve runs along the diameter");
    if (sb == 0) {
      if (!zero_x) zero_x = b.x;
      continue;
    }
    if (sa == 0) {
      if (prev_sign != 0 && sb != prev_sign) {
        Rat x = zero_x ? *zero_x : a.x;
        out.push_back({x, l.interval_of(x)});
      }
      prev_sign = sb;
      zero_x.reset();
      continue;
    }
    if (sa != sb) {
      Rat t = a.y / (a.y - b.y);
      Rat x = a.x + t * (b.x - a.x);
      out.push_back({x, l.interval_of(x)});
    }
    prev_sign = sb;
  }
  return out;
}

int first_nonzero_half(const Polyline& poly) {
  for (size_t i = 1; i < poly.size(); ++i) {
    if (poly[i].y > 0) return 1;
    if (poly[i].y < 0) return -1;
  }
  throw std::logic_error("degenerate flat component");
}

struct AngularLess {
  Pt base;
  bool operator()(const Pt& a, const Pt& b) const {
    auto cls = [&](const Pt& v) {
      Rat dx = v.x - base.x, dy = v.y - base.y;
      if (dy == 0) return dx > 0 ? 0 : 2;
      return dy > 0 ? 1 : 3;
    };
    int ca = cls(a), cb = cls(b);
    if (ca != cb) return ca < cb;
    return orient(base, a, b) > 0;
  }
};

}  // namespace

CurveDiagram extract_diagram(const PunctureLayout& layout,
                             const std::vector<Component>& comps,
                             const std::vector<Polyline>& polys) {
  CurveDiagram d;
  d.layout = layout;
  d.comps = comps;
  d.interval_order.assign(size_t(layout.total()) + 1, {});

  struct Node {
    Rat x;
    int interval;
    int orig;  // position along the curve before reduction
    bool dead = false;
  };
  std::vector<std::vector<Node>> nodes(comps.size());
  std::vector<int> init_sign(comps.size(), 0);
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    CurveWord& w = d.comps[ci].word;
    const Polyline& poly = polys[ci];
    if (!w.circle) {
      auto match = [&](const Pt& p) {
        for (int j = 0; j < layout.total(); ++j)
          if (layout.px[size_t(j)] == p.x && p.y == 0) return j;
        throw std::logic_error("arc endpoint is not a puncture");
      };
      w.from = match(poly.front());
      w.to = match(poly.back());
      w.start_half = first_nonzero_half(poly);
    } else {
      init_sign[ci] = poly.front().y > 0 ? 1 : -1;
      if (poly.front().y == 0) throw std::logic_error("circle polyline starts on the axis");
    }
    auto raw = axis_crossings(layout, poly, w.circle);
    for (size_t t = 0; t < raw.size(); ++t)
      nodes[ci].push_back({raw[t].x, raw[t].interval, int(t), false});
  }

  auto interval_nodes = [&](int iv) {
    std::vector<Node*> v;
    for (auto& vec : nodes)
      for (auto& n : vec)
        if (!n.dead && n.interval == iv) v.push_back(&n);
    std::sort(v.begin(), v.end(), [](Node* a, Node* b) { return a->x < b->x; });
    return v;
  };
  auto alive = [&](size_t ci) {
    std::vector<Node*> v;
    for (auto& n : nodes[ci])
      if (!n.dead) v.push_back(&n);
    return v;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // bigons with the diameter: consecutive along the curve and adjacent in
    // the interval order
    for (size_t ci = 0; ci < comps.size() && !changed; ++ci) {
      auto v = alive(ci);
      size_t m = v.size();
      if (m < 2) continue;
      size_t limit = d.comps[ci].word.circle ? m : m - 1;
      for (size_t j = 0; j < limit && !changed; ++j) {
        Node* a = v[j];
        Node* b = v[(j + 1) % m];
        if (a->interval != b->interval) continue;
        auto iv = interval_nodes(a->interval);
        long ia = std::find(iv.begin(), iv.end(), a) - iv.begin();
        long ib = std::find(iv.begin(), iv.end(), b) - iv.begin();
        if (std::labs(ia - ib) == 1) {
          a->dead = b->dead = true;
          changed = true;
        }
      }
    }
    if (changed) continue;
    // corner triangles at arc endpoints
    for (size_t ci = 0; ci < comps.size() && !changed; ++ci) {
      CurveWord& w = d.comps[ci].word;
      if (w.circle) continue;
      auto v = alive(ci);
      if (v.empty()) continue;
      auto removable = [&](Node* nd, int punct) {
        auto iv = interval_nodes(nd->interval);
        if (nd->interval == punct) return iv.back() == nd;        // left of puncture
        if (nd->interval == punct + 1) return iv.front() == nd;   // right of puncture
        return false;
      };
      if (removable(v.front(), w.from)) {
        v.front()->dead = true;
        w.start_half = -w.start_half;
        changed = true;
        break;
      }
      if (removable(v.back(), w.to)) {
        v.back()->dead = true;
        changed = true;
        break;
      }
    }
  }

  // rebuild words
  std::vector<int> rot(comps.size(), 0);
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    CurveWord& w = d.comps[ci].word;
    w.crossings.clear();
    auto v = alive(ci);
    for (auto* n : v) w.crossings.push_back(n->interval);
    if (w.circle) {
      if (w.crossings.empty())
        throw std::logic_error("circle component became trivial");
      // half of the chord after the first surviving crossing
      int p0 = v.front()->orig;
      w.start_half = -init_sign[ci] * ((p0 % 2 == 0) ? 1 : -1);
      // canonical rotation: lexicographically least (crossing, half) cycle
      int m = int(w.crossings.size());
      auto key = [&](int r) {
        std::vector<std::pair<int, int>> seq;
        for (int j = 0; j < m; ++j)
          seq.emplace_back(w.crossings[size_t((r + j) % m)],
                           ((j % 2 == 0) ? 1 : -1) * (((r % 2 == 0) ? 1 : -1) * w.start_half));
        return seq;
      };
      int best = 0;
      auto bestk = key(0);
      for (int r = 1; r < m; ++r) {
        auto kr = key(r);
        if (kr < bestk) {
          bestk = kr;
          best = r;
        }
      }
      rot[ci] = best;
      std::rotate(w.crossings.begin(), w.crossings.begin() + best, w.crossings.end());
      if (best % 2 == 1) w.start_half = -w.start_half;
    }
  }

  // interval orders with indices into the reduced, rotated words
  std::vector<std::pair<Rat, std::pair<int, int>>> all;
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    auto v = alive(ci);
    int mm = int(v.size());
    for (int t = 0; t < mm; ++t) {
      int idx = t;
      if (d.comps[ci].word.circle && mm > 0) idx = (t - rot[ci] + mm) % mm;
      all.push_back({v[size_t(t)]->x, {int(ci), idx}});
    }
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t t = 0; t + 1 < all.size(); ++t)
    if (all[t].first == all[t + 1].first)
      throw std::logic_error("coincident diameter crossings");
  for (auto& [x, id] : all)
    d.interval_order[size_t(layout.interval_of(x))].push_back(id);

  // germ fans at shared punctures, in angular order
  std::map<int, std::vector<std::pair<Pt, std::pair<int, int>>>> fans;
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    const CurveWord& w = d.comps[ci].word;
    if (w.circle) continue;
    fans[w.from].push_back({polys[ci][1], {int(ci), 0}});
    fans[w.to].push_back({polys[ci][polys[ci].size() - 2], {int(ci), 1}});
  }
  for (auto& [p, fan] : fans) {
    if (fan.size() < 2) continue;
    Pt base{layout.px[size_t(p)], Rat(0)};
    std::stable_sort(fan.begin(), fan.end(), [&](const auto& a, const auto& b) {
      return AngularLess{base}(a.first, b.first);
    });
    auto& dst = d.germ_order[p];
    for (auto& e : fan) dst.push_back(e.second);
  }
  return d;
}

bool CurveDiagram::same_isotopy_class(const CurveDiagram& o) const {
  if (comps.size() != o.comps.size()) return false;
  for (size_t i = 0; i < comps.size(); ++i)
    if (!(comps[i] == o.comps[i])) return false;
  return interval_order == o.interval_order && germ_order == o.germ_order;
}

CurveDiagram act_generator(const CurveDiagram& d, int i, int sign) {
  const PunctureLayout& l = d.layout;
  if (i < 1 || i > l.n - 1)
    throw std::invalid_argument("generator index outside the braid-active zone");
  auto polys = embed_diagram(d);
  TwistMap tw(l.px[size_t(i) - 1], l.px[size_t(i)],
              sign >= 0 ? calibration().twist_dir : -calibration().twist_dir);
  for (auto& p : polys) p = tw.apply(p);
  return extract_diagram(l, d.comps, polys);
}

CurveDiagram act_braid(const CurveDiagram& d, const BraidWord& b) {
  if (b.strands != d.layout.n)
    throw std::invalid_argument("braid strand count does not match the layout");
  CurveDiagram cur = d;
  for (int letter : b.letters)
    cur = act_generator(cur, std::abs(letter), letter > 0 ? 1 : -1);
  return cur;
}

// ---------------------------------------------------------------------------
// Scene: intersections in minimal position

namespace {

std::vector<IntersectionPoint> pair_crossings(const Polyline& red, int red_comp,
                                              const GreenCircle& g,
                                              const PunctureLayout& l) {
  std::vector<IntersectionPoint> out;
  for (size_t i = 0; i + 1 < red.size(); ++i) {
    for (size_t j = 0; j + 1 < g.poly.size(); ++j) {
      auto hit = seg_intersect(red[i], red[i + 1], g.poly[j], g.poly[j + 1]);
      if (!hit) continue;
      if (hit->t == 0 || hit->t == 1 || hit->u == 0 || hit->u == 1)
        throw std::logic_error("degenerate red-green contact");
      IntersectionPoint p;
      p.red_comp = red_comp;
      p.green_k = g.k;
      p.pos_red = {int(i), hit->t};
      p.pos_green = {int(j), hit->u};
      p.point = hit->point;
      p.right_side = hit->point.x > l.side_threshold;
      Pt rd = red[i + 1] - red[i];
      Pt gd = g.poly[j + 1] - g.poly[j];
      Rat cr = rd.x * gd.y - rd.y * gd.x;
      p.local_sign = (cr > 0 ? 1 : -1) * calibration().sign_local;
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IntersectionPoint& a, const IntersectionPoint& b) {
              return a.pos_red < b.pos_red;
            });
  return out;
}

// Offset of a green sub-arc to one side, L-infinity normalised to stay
// rational.
Polyline offset_arc(const Polyline& arc, int side, const Rat& lam) {
  std::vector<Pt> normals;
  for (size_t i = 0; i + 1 < arc.size(); ++i) {
    Pt dvec = arc[i + 1] - arc[i];
    Pt perp{-dvec.y * side, dvec.x * side};
    Rat ax = perp.x < 0 ? -perp.x : perp.x;
    Rat ay = perp.y < 0 ? -perp.y : perp.y;
    Rat norm = std::max(ax, ay);
    if (norm == 0) {
      normals.push_back({Rat(0), Rat(0)});
      continue;
    }
    normals.push_back({perp.x * lam / norm, perp.y * lam / norm});
  }
  Polyline out;
  out.push_back(arc.front() + normals.front());
  for (size_t i = 1; i + 1 < arc.size(); ++i) {
    Pt mid{(normals[i - 1].x + normals[i].x) / 2,
           (normals[i - 1].y + normals[i].y) / 2};
    out.push_back(arc[i] + mid);
  }
  out.push_back(arc.back() + normals.back());
  return out;
}

}  // namespace

Scene build_scene(const CurveDiagram& d) {
  Scene s;
  s.layout = d.layout;
  s.diagram = d;
  s.reds = embed_diagram(d);
  s.greens = green_supports(d.layout);

  auto all_crossings = [&]() {
    std::vector<IntersectionPoint> pts;
    for (size_t r = 0; r < s.reds.size(); ++r)
      for (auto& g : s.greens) {
        auto v = pair_crossings(s.reds[r], int(r), g, s.layout);
        pts.insert(pts.end(), v.begin(), v.end());
      }
    return pts;
  };

  const Rat eps(1, 1000);
  bool changed = true;
  int guard = 0;
  while (changed) {
    changed = false;
    if (++guard > 1000) throw std::logic_error("bigon removal did not terminate");
    auto pts = all_crossings();
    for (size_t r = 0; r < s.reds.size() && !changed; ++r) {
      for (auto& g : s.greens) {
        if (changed) break;
        std::vector<const IntersectionPoint*> rg;
        for (auto& p : pts)
          if (p.red_comp == int(r) && p.green_k == g.k) rg.push_back(&p);
        if (rg.size() < 2) continue;
        std::sort(rg.begin(), rg.end(),
                  [](auto* a, auto* b) { return a->pos_red < b->pos_red; });
        for (size_t t = 0; t + 1 < rg.size() && !changed; ++t) {
          const IntersectionPoint* u = rg[t];
          const IntersectionPoint* v = rg[t + 1];
          // candidate green arc between the two params, not through the max
          PathPos ga = u->pos_green, gb = v->pos_green;
          bool blocked = false;
          for (auto& q : pts) {
            if (&q == u || &q == v) continue;
            if (q.green_k != g.k) continue;
            if (std::min(ga, gb) < q.pos_green && q.pos_green < std::max(ga, gb)) {
              blocked = true;
              break;
            }
          }
          if (blocked) continue;
          Polyline redpiece = subpath(s.reds[r], u->pos_red, v->pos_red);
          Polyline greenpiece = subpath(g.poly, ga, gb);
          Polyline polygon = redpiece;
          for (size_t q = greenpiece.size() - 1; q-- > 1;)
            polygon.push_back(greenpiece[q]);
          bool empty = true;
          for (int pz = 0; pz < s.layout.total() && empty; ++pz)
            if (point_in_polygon({s.layout.px[size_t(pz)], Rat(0)}, polygon))
              empty = false;
          for (size_t r2 = 0; r2 < s.reds.size() && empty; ++r2) {
            if (r2 == r) continue;
            if (polyline_meets_polygon(s.reds[r2], polygon)) empty = false;
          }
          for (auto& g2 : s.greens) {
            if (!empty) break;
            if (g2.k == g.k) continue;
            if (polyline_meets_polygon(g2.poly, polygon)) empty = false;
          }
          if (!empty) continue;
          PathPos ub = advance(s.reds[r], u->pos_red, -eps);
          PathPos va = advance(s.reds[r], v->pos_red, eps);
          Polyline before = subpath(s.reds[r], {0, Rat(0)}, ub);
          Polyline after =
              subpath(s.reds[r], va, {int(s.reds[r].size()) - 2, Rat(1)});
          if (polyline_meets_polygon(before, polygon) ||
              polyline_meets_polygon(after, polygon))
            continue;
          Pt approach = point_at(s.reds[r], ub);
          Pt gdir = greenpiece[1] - greenpiece[0];
          int side = orient(greenpiece[0], greenpiece[0] + gdir, approach);
          if (side == 0) continue;
          size_t before_cnt = rg.size();
          Polyline detour = offset_arc(greenpiece, side, Rat(1, 2000));
          Polyline newred = before;
          for (auto& pp : detour) newred.push_back(pp);
          for (auto& pp : after) newred.push_back(pp);
          auto check = pair_crossings(newred, int(r), g, s.layout);
          if (check.size() + 2 != before_cnt) continue;
          s.reds[r] = newred;
          changed = true;
        }
      }
    }
  }
  s.points = all_crossings();
  std::sort(s.points.begin(), s.points.end(),
            [](const IntersectionPoint& a, const IntersectionPoint& b) {
              if (a.red_comp != b.red_comp) return a.red_comp < b.red_comp;
              return a.pos_red < b.pos_red;
            });
  return s;
}

std::vector<IntersectionPoint> curve_intersections(const Scene& s, int red_comp,
                                                   int green_k) {
  std::vector<IntersectionPoint> out;
  for (auto& p : s.points)
    if (p.red_comp == red_comp && p.green_k == green_k) out.push_back(p);
  return out;
}

std::string dump_word(const CurveWord& w) {
  std::ostringstream os;
  if (w.circle)
    os << "circle(" << (w.start_half > 0 ? 'U' : 'L') << "):";
  else
    os << "arc(" << w.from << "," << w.to << ";" << (w.start_half > 0 ? 'U' : 'L')
       << "):";
  for (int c : w.crossings) os << " " << c;
  return os.str();
}

}  // namespace knotint
