// Loops in the symmetric power as particle schedules.
//
// A loop is stored as an ordered list of moves; each move walks one particle
// along an explicit path while the others stand still.  The three grading
// counters are computed from the schedule: windings around puncture classes
// (signed crossings of the downward rays below punctures) and the exponent
// sum of the braid traced by the particles (signed strand crossings under
// projection to the diameter).

#pragma once

#include <vector>

#include "knotint/curves.hpp"
#include "knotint/geom.hpp"

namespace knotint {

struct Move {
  int particle = 0;
  Polyline path;
};

struct LoopTrace {
  int particles = 0;
  std::vector<Pt> start;            // initial position per particle
  std::vector<Move> moves;
  std::vector<int> strand_key;      // offset rank per particle (colouring index)
};

// Signed crossings of the ray below each puncture, summed over the schedule;
// a crossing walked right-to-left counts +1.  Returns one value per puncture.
std::vector<long long> ray_windings(const PunctureLayout& l, const LoopTrace& t);

// (xExp, yExp) of the loop per the grading: x counts the first n black
// punctures minus the last n-1, y the blue punctures, both via calibration
// signs.
std::pair<long long, long long> winding_profile(const PunctureLayout& l,
                                                const LoopTrace& t);

// Exponent sum of the braid traced by the particles.  Ties (a mover passing a
// station lying exactly on its track) are resolved by the strand keys, which
// realise the index-offset parallel strand convention.
long long braid_exponent(const LoopTrace& t);

// Verifies the trace returns to its starting configuration as a set.
bool trace_closed(const LoopTrace& t);

}  // namespace knotint
