#include "knotint/trace.hpp"

#include <algorithm>
#include <stdexcept>

#include "knotint/calib.hpp"

namespace knotint {

namespace {

// Signed crossings of the path with the vertical line x = xs.  Reports each
// crossing through cb(y_at_crossing, direction) where direction is +1 when x
// increases.  Runs of vertices exactly on the line use the last touching
// point's y.
template <typename F>
void sweep_line(const Polyline& path, const Rat& xs, F&& cb) {
  int prev_side = 0;  // -1, 0, +1 relative to xs
  Rat touch_y = 0;
  auto side_of = [&](const Rat& x) { return x > xs ? 1 : (x < xs ? -1 : 0); };
  prev_side = side_of(path.front().x);
  bool pending = prev_side == 0;
  if (pending) touch_y = path.front().y;
  int before = 0;  // side before a zero-run
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const Pt& a = path[i];
    const Pt& b = path[i + 1];
    int sb = side_of(b.x);
    int sa = side_of(a.x);
    if (sa != 0 && sb != 0 && sa != sb) {
      Rat t = (xs - a.x) / (b.x - a.x);
      cb(a.y + t * (b.y - a.y), sb);
      prev_side = sb;
      continue;
    }
    if (sb == 0) {
      if (sa != 0) before = sa;
      touch_y = b.y;
      pending = true;
      continue;
    }
    if (sa == 0) {
      if (pending && before != 0 && sb != before) cb(touch_y, sb);
      pending = false;
      prev_side = sb;
      continue;
    }
    prev_side = sb;
  }
  (void)prev_side;
}

}  // namespace

std::vector<long long> ray_windings(const PunctureLayout& l, const LoopTrace& t) {
  std::vector<long long> w(size_t(l.total()), 0);
  for (const Move& mv : t.moves) {
    for (int p = 0; p < l.total(); ++p) {
      sweep_line(mv.path, l.px[size_t(p)], [&](const Rat& y, int dir) {
        if (y < 0) w[size_t(p)] += (dir > 0 ? -1 : 1);
        if (y == 0) throw std::logic_error("path passes through a puncture");
      });
    }
  }
  return w;
}

std::pair<long long, long long> winding_profile(const PunctureLayout& l,
                                                const LoopTrace& t) {
  auto w = ray_windings(l, t);
  long long first_n = 0, last_nm1 = 0, blue = 0;
  int n = l.n;
  for (int j = 0; j < n; ++j) first_n += w[size_t(l.black[size_t(j)])];
  for (int j = n; j <= 2 * n - 2; ++j) last_nm1 += w[size_t(l.black[size_t(j)])];
  for (int id : l.blue)
    if (id >= 0) blue += w[size_t(id)];
  const Calibration& c = calibration();
  return {c.wind_x * (first_n - last_nm1), c.wind_y * blue};
}

long long braid_exponent(const LoopTrace& t) {
  std::vector<Pt> pos = t.start;
  long long total = 0;
  const Calibration& c = calibration();
  for (const Move& mv : t.moves) {
    for (int q = 0; q < t.particles; ++q) {
      if (q == mv.particle) continue;
      const Pt& st = pos[size_t(q)];
      sweep_line(mv.path, st.x, [&](const Rat& y, int dir) {
        int above;
        if (y > st.y) above = 1;
        else if (y < st.y) above = -1;
        else {
          // shared-track tie: index-offset strands
          int mk = t.strand_key[size_t(mv.particle)];
          int sk = t.strand_key[size_t(q)];
          if (mk == sk) throw std::logic_error("coincident strands with equal keys");
          above = c.offset_side * (mk < sk ? 1 : -1);
        }
        total += c.braid_sign * dir * above;
      });
    }
    pos[size_t(mv.particle)] = mv.path.back();
  }
  return total;
}

bool trace_closed(const LoopTrace& t) {
  std::vector<Pt> pos = t.start;
  for (const Move& mv : t.moves) {
    if (!(point_at(mv.path, {0, Rat(0)}) == pos[size_t(mv.particle)])) return false;
    pos[size_t(mv.particle)] = mv.path.back();
  }
  auto key = [](const Pt& p) { return std::make_pair(p.x, p.y); };
  std::vector<std::pair<Rat, Rat>> a, b;
  for (auto& p : pos) a.push_back(key(p));
  for (auto& p : t.start) b.push_back(key(p));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace knotint
