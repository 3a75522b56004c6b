// Curves in the punctured disc up to isotopy.
//
// Components are encoded by their ordered crossings with the horizontal
// diameter (interval indices between punctures), together with the left-right
// order of crossings inside each interval.  That data determines a canonical
// PL embedding; braid generators act by an exact PL half-twist on the
// embedding, after which crossings are re-extracted and reduced (bigons with
// the diameter and corner triangles at punctures are removed).

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotint/braid.hpp"
#include "knotint/geom.hpp"

namespace knotint {

enum class LayoutMode { Gamma, Alexander, Lambda };
enum class PunctureColor { Black, Blue, Anchor };

// Punctures sit at integer x positions on the diameter.  Interval i is the
// open interval between puncture i-1 and puncture i (0 and M are the
// boundary-adjacent intervals).
struct PunctureLayout {
  LayoutMode mode = LayoutMode::Gamma;
  int n = 2;                       // braid strand count
  std::vector<Rat> px;             // x position per puncture
  std::vector<PunctureColor> colors;
  std::vector<int> black;          // black label j (0..2n-2) -> puncture id
  std::vector<int> blue;           // blue label k (1..n) -> puncture id; gamma only
  int anchor = -1;                 // lambda only
  Rat side_threshold;              // x beyond this is the "right half"

  int total() const { return int(px.size()); }
  int interval_of(const Rat& x) const;   // index of the interval containing x
};

// Modes per the pipeline: Gamma carries 2n-1 black + n blue punctures,
// Alexander the 2n-1 black ones only, Lambda 2n-1 black plus the interior
// anchor puncture the state-sum arcs are pushed to.
PunctureLayout make_layout(int n, LayoutMode mode);

struct CurveWord {
  bool circle = false;
  int from = -1, to = -1;          // puncture ids (arcs only)
  int start_half = -1;             // +1 upper, -1 lower: half of the first chord
  std::vector<int> crossings;      // diameter interval indices

  bool operator==(const CurveWord&) const = default;
};

// Removes consecutive equal crossings (cyclically for circles) until none
// remain.  Idempotent; elimination order does not matter.
CurveWord reduce(const CurveWord& w);

struct Component {
  CurveWord word;
  int multiplicity = 1;
  int tag = 0;                     // bookkeeping label (red curve index / family id)

  bool operator==(const Component&) const = default;
};

// The moving (red) system: reduced words plus the interval order data that
// pins the embedding of a multi-component system.
struct CurveDiagram {
  PunctureLayout layout;
  std::vector<Component> comps;
  // interval index -> crossings in left-to-right order, as (comp, crossing idx)
  std::vector<std::vector<std::pair<int, int>>> interval_order;
  // puncture id -> arc ends in fan order, as (comp, end) with end 0=from 1=to
  std::map<int, std::vector<std::pair<int, int>>> germ_order;

  bool same_isotopy_class(const CurveDiagram& o) const;
};

// Canonical embedding of the diagram, one polyline per component, oriented
// from `from` to `to` (circles start at their first crossing).
std::vector<Polyline> embed_diagram(const CurveDiagram& d);

// Rebuilds the combinatorial state from embedded geometry.
CurveDiagram extract_diagram(const PunctureLayout& layout,
                             const std::vector<Component>& comps,
                             const std::vector<Polyline>& polys);

// Half-twist of braid-active punctures (i-1, i); generator index i in
// 1..n-1, sign ±1.  Output is reduced and canonical.
CurveDiagram act_generator(const CurveDiagram& d, int i, int sign);
CurveDiagram act_braid(const CurveDiagram& d, const BraidWord& b);

// ---------------------------------------------------------------------------
// Fixed green supports.

struct GreenCircle {
  int k = 1;                        // circle index, 1..n-1
  int punct_left = 0, punct_right = 0;  // enclosed punctures (ids)
  Polyline poly;       // closed; starts and ends at the maximal point
  PathPos attach_left;              // eta_k target, on the left lobe bottom
  PathPos attach_right;             // eta'_k target, on the right lobe bottom
  Rat lobe_depth;
};

std::vector<GreenCircle> green_supports(const PunctureLayout& layout);
CurveWord green_circle_word(const PunctureLayout& layout, int k);

// Standard red supports: arc from black k to black 2n-1-k for k=1..n-1,
// below the diameter; multiplicity N-1 basepoint slots each.
CurveDiagram standard_supports(const PunctureLayout& layout);

// State-sum supports on the lambda layout: for each k, an arc family from
// black k to the anchor with multiplicity i_k and one from black 2n-1-k to
// the anchor with multiplicity N-1-i_k (zero-multiplicity families omitted).
CurveDiagram statesum_supports(const PunctureLayout& lambda_layout, int N,
                               const std::vector<int>& bar_i);

// ---------------------------------------------------------------------------
// Intersections in minimal position.

struct IntersectionPoint {
  int red_comp = 0;
  int green_k = 1;
  PathPos pos_red;
  PathPos pos_green;
  Pt point;
  bool right_side = false;
  int local_sign = 1;
};

// Embedded scene: red polylines after braiding (and bigon removal) plus the
// fixed greens and all pairwise intersection points.
struct Scene {
  PunctureLayout layout;
  CurveDiagram diagram;
  std::vector<Polyline> reds;
  std::vector<GreenCircle> greens;
  std::vector<IntersectionPoint> points;  // sorted by (red_comp, pos_red)
};

// Builds the scene: embeds, removes red-green bigons (discs with no puncture
// and no other curve inside), extracts transverse intersection points.
Scene build_scene(const CurveDiagram& d);

// Points of one pair, ordered along the red curve.
std::vector<IntersectionPoint> curve_intersections(const Scene& s, int red_comp,
                                                   int green_k);

std::string dump_word(const CurveWord& w);

}  // namespace knotint
