#include "knotint/intersect.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>

#include "knotint/calib.hpp"

namespace knotint {

namespace {

const Rat kSlotDelta(1, 1048576);  // pile slot spacing, in path parameter units

// Positions of one component's chosen points, in order along the curve.
std::vector<int> comp_points(const Scene& s, int comp) {
  std::vector<int> ids;
  for (size_t i = 0; i < s.points.size(); ++i)
    if (s.points[i].red_comp == comp) ids.push_back(int(i));
  return ids;  // scene points are sorted by (comp, pos_red)
}

std::vector<int> circle_points(const Scene& s, int k) {
  std::vector<int> ids;
  for (size_t i = 0; i < s.points.size(); ++i)
    if (s.points[i].green_k == k) ids.push_back(int(i));
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return s.points[size_t(a)].pos_green < s.points[size_t(b)].pos_green;
  });
  return ids;
}

// Unique crossing of a polyline with the vertical line x = bx.
PathPos locate_vertical(const Polyline& poly, const Rat& bx) {
  std::optional<PathPos> found;
  for (size_t i = 0; i + 1 < poly.size(); ++i) {
    const Rat& xa = poly[i].x;
    const Rat& xb = poly[i + 1].x;
    if (xa == bx || xb == bx) throw std::logic_error("basepoint hits a vertex");
    if ((xa < bx) == (xb < bx)) continue;
    if (found) throw std::logic_error("basepoint line crossed twice");
    found = PathPos{int(i), (bx - xa) / (xb - xa)};
  }
  if (!found) throw std::logic_error("basepoint line not crossed");
  return *found;
}

void append_path(Polyline& path, const Polyline& piece) {
  for (const Pt& p : piece) {
    if (!path.empty() && path.back() == p) continue;
    path.push_back(p);
  }
}

struct LoopContext {
  const Scene* scene = nullptr;
  std::vector<int> red_loads;
  std::vector<int> ordinal_base;             // comp -> first particle ordinal
  std::vector<std::vector<PathPos>> bp_pos;  // comp -> load positions
  std::vector<std::vector<Pt>> bp_pt;
  int particles = 0;
};

LoopContext make_context(const Scene& s, const std::vector<int>& red_loads) {
  LoopContext ctx;
  ctx.scene = &s;
  ctx.red_loads = red_loads;
  const PunctureLayout& l = s.layout;
  int n = l.n;
  int F = int(s.reds.size());
  ctx.ordinal_base.resize(size_t(F), 0);
  ctx.bp_pos.resize(size_t(F));
  ctx.bp_pt.resize(size_t(F));
  int ord = 0;
  for (int r = 0; r < F; ++r) {
    ctx.ordinal_base[size_t(r)] = ord;
    ord += red_loads[size_t(r)];
    const CurveWord& w = s.diagram.comps[size_t(r)].word;
    bool right_family =
        l.mode == LayoutMode::Lambda && l.px[size_t(w.from)] > l.px[size_t(l.anchor)];
    for (int c = 1; c <= red_loads[size_t(r)]; ++c) {
      Rat bx;
      if (right_family) {
        bx = Rat(n) + Rat(35, 100) +
             Rat(8, 100) * Rat((c - 1) * (F + 1) + r + 1, (red_loads[size_t(r)] + 1) * (F + 1));
      } else {
        bx = Rat(n - 1) + Rat(41, 100) +
             Rat(8, 100) * Rat((c - 1) * (F + 1) + r + 1, (red_loads[size_t(r)] + 1) * (F + 1));
      }
      PathPos pos = locate_vertical(s.reds[size_t(r)], bx);
      ctx.bp_pos[size_t(r)].push_back(pos);
      ctx.bp_pt[size_t(r)].push_back(point_at(s.reds[size_t(r)], pos));
    }
  }
  ctx.particles = ord;
  return ctx;
}

Rat corridor_height(int k, bool right) {
  return Rat(1) + Rat(k, 10) + (right ? Rat(1, 20) : Rat(0));
}

const GreenCircle& circle_of(const Scene& s, int k) {
  for (auto& g : s.greens)
    if (g.k == k) return g;
  throw std::logic_error("missing green circle");
}

}  // namespace

std::vector<MultiPoint> enumerate_multipoints(const Scene& s,
                                              const std::vector<int>& red_loads,
                                              int circle_load, long long budget) {
  int np = int(s.points.size());
  int ncirc = s.layout.n - 1;
  std::vector<MultiPoint> out;
  std::vector<int> mult(size_t(np), 0);
  std::vector<int> red_left = red_loads;
  std::vector<int> circ_left(size_t(ncirc), circle_load);
  // points grouped by red comp (scene order), assigned in order
  std::function<void(int)> rec = [&](int i) {
    if (i == np) {
      for (int v : red_left)
        if (v != 0) return;
      for (int v : circ_left)
        if (v != 0) return;
      if ((long long)out.size() >= budget)
        throw CapExceeded("multipoint budget exceeded");
      MultiPoint mp;
      mp.mult = mult;
      out.push_back(std::move(mp));
      return;
    }
    const IntersectionPoint& p = s.points[size_t(i)];
    int r = p.red_comp;
    int c = p.green_k - 1;
    int cap = std::min(red_left[size_t(r)], circ_left[size_t(c)]);
    // remaining capacity prune: the rest of this comp's points must be able to
    // absorb red_left if we assign 0 here (cheap overestimate: skip)
    for (int m = 0; m <= cap; ++m) {
      mult[size_t(i)] = m;
      red_left[size_t(r)] -= m;
      circ_left[size_t(c)] -= m;
      rec(i + 1);
      red_left[size_t(r)] += m;
      circ_left[size_t(c)] += m;
    }
    mult[size_t(i)] = 0;
  };
  rec(0);
  // the geometry admits at most one right-side point per red curve
  for (auto& mp : out) {
    std::vector<int> rcount(red_loads.size(), 0);
    for (int i = 0; i < np; ++i)
      if (mp.mult[size_t(i)] > 0 && s.points[size_t(i)].right_side)
        rcount[size_t(s.points[size_t(i)].red_comp)]++;
    for (int v : rcount)
      if (v > 1) throw std::logic_error("multiple right-side points on one curve");
  }
  return out;
}

std::vector<CompColouring> component_colourings(int load,
                                                const std::vector<int>& sizes,
                                                bool force_top_block) {
  std::vector<CompColouring> out;
  std::vector<int> pool;
  for (int i = 1; i <= load; ++i) pool.push_back(i);
  int nb = int(sizes.size());
  std::vector<std::vector<int>> blocks(size_t(nb));
  std::function<void(int, std::vector<int>&)> rec = [&](int bi,
                                                        std::vector<int>& rest) {
    if (bi == nb) {
      if (rest.empty()) out.push_back(blocks);
      return;
    }
    int sz = sizes[size_t(bi)];
    // choose sz elements of rest for this block
    int m = int(rest.size());
    std::vector<int> idx(size_t(sz));
    std::function<void(int, int)> choose = [&](int start, int got) {
      if (got == sz) {
        blocks[size_t(bi)].clear();
        std::vector<int> remaining;
        std::vector<bool> used(size_t(m), false);
        for (int t = 0; t < sz; ++t) {
          blocks[size_t(bi)].push_back(rest[size_t(idx[size_t(t)])]);
          used[size_t(idx[size_t(t)])] = true;
        }
        for (int t = 0; t < m; ++t)
          if (!used[size_t(t)]) remaining.push_back(rest[size_t(t)]);
        rec(bi + 1, remaining);
        return;
      }
      for (int t = start; t < m; ++t) {
        idx[size_t(got)] = t;
        choose(t + 1, got + 1);
      }
    };
    choose(0, 0);
  };
  rec(0, pool);
  if (force_top_block && nb > 0) {
    std::vector<CompColouring> filtered;
    for (auto& col : out) {
      const auto& lastb = col.back();
      bool ok = true;
      for (size_t t = 0; t < lastb.size(); ++t)
        if (lastb[t] != load - int(lastb.size()) + 1 + int(t)) ok = false;
      if (ok) filtered.push_back(col);
    }
    return filtered;
  }
  return out;
}

namespace {

// per-comp data of a multipoint: point ids (in pos_red order) and sizes
struct CompAssign {
  std::vector<int> pts;
  std::vector<int> sizes;
  bool right_last = false;
};

std::vector<CompAssign> split_assignment(const Scene& s, const MultiPoint& mp,
                                         size_t ncomp) {
  std::vector<CompAssign> as(ncomp);
  for (size_t r = 0; r < ncomp; ++r) {
    for (int id : comp_points(s, int(r))) {
      if (mp.mult[size_t(id)] == 0) continue;
      as[r].pts.push_back(id);
      as[r].sizes.push_back(mp.mult[size_t(id)]);
    }
    if (!as[r].pts.empty())
      as[r].right_last = s.points[size_t(as[r].pts.back())].right_side;
  }
  return as;
}

}  // namespace

long long count_colourings(const Scene& s, const MultiPoint& mp,
                           const std::vector<int>& red_loads, bool gamma_rule) {
  auto as = split_assignment(s, mp, red_loads.size());
  long long total = 1;
  for (size_t r = 0; r < as.size(); ++r) {
    auto cols = component_colourings(red_loads[r], as[r].sizes,
                                     gamma_rule && as[r].right_last);
    total *= (long long)cols.size();
  }
  return total;
}

LoopTrace build_loop(const Scene& s, const MultiPoint& mp,
                     const std::vector<CompColouring>& col,
                     const std::vector<int>& red_loads, bool circle_supply_rule) {
  const PunctureLayout& l = s.layout;
  LoopContext ctx = make_context(s, red_loads);
  auto as = split_assignment(s, mp, red_loads.size());

  LoopTrace t;
  t.particles = ctx.particles;
  t.strand_key.resize(size_t(ctx.particles));
  for (int r = 0; r < int(red_loads.size()); ++r)
    for (int c = 0; c < red_loads[size_t(r)]; ++c) {
      t.start.push_back(ctx.bp_pt[size_t(r)][size_t(c)]);
      t.strand_key[size_t(ctx.ordinal_base[size_t(r)] + c)] =
          ctx.ordinal_base[size_t(r)] + c;
    }

  // map point id -> index among its comp's chosen points (block index)
  std::map<int, int> block_index;
  for (auto& a : as)
    for (size_t i = 0; i < a.pts.size(); ++i) block_index[a.pts[size_t(i)]] = int(i);

  // forward legs: circles in order, instances along the circle minus max
  std::vector<std::vector<int>> occupants(s.points.size());
  std::vector<int> next_supply(red_loads.size(), 0);
  const Calibration& cal = calibration();
  for (int k = 1; k <= l.n - 1; ++k) {
    const GreenCircle& g = circle_of(s, k);
    for (int id : circle_points(s, k)) {
      int m = mp.mult[size_t(id)];
      if (m == 0) continue;
      const IntersectionPoint& p = s.points[size_t(id)];
      int r = p.red_comp;
      for (int c = 0; c < m; ++c) {
        int particle;
        if (circle_supply_rule) {
          particle = ctx.ordinal_base[size_t(k - 1)] + next_supply[size_t(k - 1)]++;
        } else {
          int copy = col[size_t(r)][size_t(block_index.at(id))][size_t(c)];
          particle = ctx.ordinal_base[size_t(r)] + copy - 1;
        }
        int slot = cal.pile_arrival_order ? c : m - 1 - c;
        PathPos slot_pos = advance(s.reds[size_t(r)], p.pos_red, kSlotDelta * slot);
        // rise, corridor, descend, walk, dock
        int self = circle_supply_rule ? k - 1 : r;
        Pt bp = ctx.bp_pt[size_t(self)][size_t(
            particle - ctx.ordinal_base[size_t(self)])];
        Rat ch = corridor_height(k, p.right_side);
        PathPos attach = p.right_side ? g.attach_right : g.attach_left;
        Pt attach_pt = point_at(g.poly, attach);
        Polyline path;
        path.push_back(bp);
        path.push_back({bp.x, ch});
        path.push_back({attach_pt.x, ch});
        path.push_back(attach_pt);
        append_path(path, subpath(g.poly, attach, p.pos_green));
        if (!(slot_pos == p.pos_red))
          append_path(path, subpath(s.reds[size_t(r)], p.pos_red, slot_pos));
        t.moves.push_back({particle, std::move(path)});
        if (int(occupants[size_t(id)].size()) <= slot)
          occupants[size_t(id)].resize(size_t(m), -1);
        occupants[size_t(id)][size_t(slot)] = particle;
      }
    }
  }

  // return legs: along the red curves to the coloured basepoints
  for (size_t r = 0; r < red_loads.size(); ++r) {
    const CompAssign& a = as[r];
    for (size_t i = 0; i < a.pts.size(); ++i) {
      int id = a.pts[i];
      int m = a.sizes[i];
      const IntersectionPoint& p = s.points[size_t(id)];
      std::vector<int> targets = col[r][i];
      std::sort(targets.begin(), targets.end());
      if (!cal.return_ascending) std::reverse(targets.begin(), targets.end());
      for (int c = 0; c < m; ++c) {
        int particle = occupants[size_t(id)][size_t(c)];
        if (particle < 0) throw std::logic_error("unoccupied pile slot");
        int target;
        if (circle_supply_rule) {
          target = targets[size_t(c)];
        } else {
          target = particle - ctx.ordinal_base[r] + 1;  // own basepoint
        }
        PathPos slot_pos = advance(s.reds[r], p.pos_red, kSlotDelta * c);
        Polyline path = subpath(s.reds[r], slot_pos, ctx.bp_pos[r][size_t(target - 1)]);
        t.moves.push_back({particle, std::move(path)});
      }
    }
  }
  return t;
}

std::pair<int, InvariantPoly> grade_point(const Scene& s, const MultiPoint& mp,
                                          const std::vector<int>& red_loads,
                                          bool gamma_rule) {
  auto as = split_assignment(s, mp, red_loads.size());
  int eps = 1;
  for (size_t i = 0; i < s.points.size(); ++i) {
    int m = mp.mult[i];
    if (m % 2 != 0 && s.points[i].local_sign < 0) eps = -eps;
  }
  // colourings per component
  std::vector<std::vector<CompColouring>> per_comp;
  for (size_t r = 0; r < red_loads.size(); ++r)
    per_comp.push_back(component_colourings(red_loads[r], as[r].sizes,
                                            gamma_rule && as[r].right_last));
  InvariantPoly P;
  std::vector<CompColouring> current(red_loads.size());
  std::function<void(size_t)> rec = [&](size_t r) {
    if (r == red_loads.size()) {
      LoopTrace t = build_loop(s, mp, current, red_loads, gamma_rule);
      auto [xe, ye] = winding_profile(s.layout, t);
      long long de = braid_exponent(t);
      P.add_term({0, int(xe), int(ye), int(de)}, 1);
      return;
    }
    for (auto& c : per_comp[r]) {
      current[r] = c;
      rec(r + 1);
    }
  };
  rec(0);
  return {eps, P};
}

GradedResult gamma_invariant(const BraidWord& b, int N, const Caps& caps) {
  auto t0 = std::chrono::steady_clock::now();
  GradedResult res;
  res.n = b.strands;
  res.N = N;
  res.braid = b;
  if (N < 2) throw std::invalid_argument("colour N must be >= 2");
  if (b.strands == 1) {
    res.gamma = InvariantPoly::one();
    return res;
  }
  int n = b.strands;
  PunctureLayout layout = make_layout(n, LayoutMode::Gamma);
  CurveDiagram d = act_braid(standard_supports(layout), b);
  Scene s = build_scene(d);
  std::vector<int> loads(size_t(n - 1), N - 1);
  auto mps = enumerate_multipoints(s, loads, N - 1, caps.multipoint_budget);
  InvariantPoly sum;
  for (auto& mp : mps) {
    auto [eps, P] = grade_point(s, mp, loads, true);
    PointTerm pt;
    pt.mp = mp;
    pt.eps = eps;
    pt.P = P;
    res.per_point.push_back(pt);
    if (eps < 0) sum = sum - P;
    else sum = sum + P;
  }
  int e = (n - 1) * (N - 1);
  Monomial4 pref{-writhe(b) - (n - 1), 0, -e, 0};
  res.gamma = sum.scaled(pref, (e % 2 == 0) ? Int(1) : Int(-1));
  res.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

InvariantPoly lambda_invariant(const BraidWord& b, int N, const Caps& caps) {
  if (N < 2) throw std::invalid_argument("colour N must be >= 2");
  if (b.strands == 1) return InvariantPoly::one();
  int n = b.strands;
  PunctureLayout layout = make_layout(n, LayoutMode::Lambda);
  InvariantPoly total;
  std::vector<int> bar(size_t(n - 1), 0);
  while (true) {
    // one state of the multi-index
    CurveDiagram d0 = statesum_supports(layout, N, bar);
    InvariantPoly contrib;
    if (!d0.comps.empty()) {
      CurveDiagram d = act_braid(d0, b);
      Scene s = build_scene(d);
      std::vector<int> loads;
      for (auto& c : s.diagram.comps) loads.push_back(c.multiplicity);
      auto mps = enumerate_multipoints(s, loads, N - 1, caps.multipoint_budget);
      for (auto& mp : mps) {
        auto [eps, P] = grade_point(s, mp, loads, false);
        if (eps < 0) contrib = contrib - P;
        else contrib = contrib + P;
      }
    } else if (N == 1) {
      contrib = InvariantPoly::one();
    }
    int isum = std::accumulate(bar.begin(), bar.end(), 0);
    total = total + contrib.scaled({0, 0, 0, -isum}, 1);
    // next multi-index
    int pos = 0;
    while (pos < n - 1 && bar[size_t(pos)] == N - 1) {
      bar[size_t(pos)] = 0;
      ++pos;
    }
    if (pos == n - 1) break;
    bar[size_t(pos)]++;
  }
  for (auto& [m, c] : total.terms)
    if (m.y != 0) throw std::logic_error("state sum produced a blue winding");
  Monomial4 pref{-writhe(b) - (n - 1), 0, 0, 0};
  return total.scaled(pref, 1);
}

LaurentPoly alexander_fast(const BraidWord& b, const Caps& caps) {
  if (b.strands == 1) return LaurentPoly::constant('x', 1);
  int n = b.strands;
  PunctureLayout layout = make_layout(n, LayoutMode::Alexander);
  CurveDiagram d = act_braid(standard_supports(layout), b);
  Scene s = build_scene(d);
  std::vector<int> loads(size_t(n - 1), 1);
  auto mps = enumerate_multipoints(s, loads, 1, caps.multipoint_budget);
  LaurentPoly sum('x');
  sum.half_exponents = true;
  for (auto& mp : mps) {
    auto [eps, P] = grade_point(s, mp, loads, true);
    for (auto& [m, c] : P.terms) {
      Int coef = c * eps;
      if (m.d % 2 != 0) coef = -coef;  // configuration-space sign carries (-1)^d
      sum.add_term(2 * m.x + writhe(b) + (n - 1), coef);
    }
  }
  if (n % 2 == 0) sum = -sum;  // (-1)^(n-1)
  // prefer integer exponents when the closure is a knot
  bool all_even = true;
  for (auto& [e, c] : sum.terms)
    if (e % 2 != 0) all_even = false;
  if (all_even) {
    LaurentPoly out('x');
    for (auto& [e, c] : sum.terms) out.add_term(e / 2, c);
    return out;
  }
  return sum;
}

IdentityReport verify_identity(const BraidWord& b, int N, const Caps& caps) {
  IdentityReport rep;
  rep.lhs = gamma_invariant(b, N, caps).gamma.substitute_y_minus_d();
  rep.rhs = lambda_invariant(b, N, caps);
  rep.diff = rep.lhs - rep.rhs;
  rep.equal = rep.diff.is_zero();
  return rep;
}

}  // namespace knotint
