// Orientation and sign conventions.
//
// The geometric model leaves a handful of binary choices open (twist
// handedness, ray-crossing signs, local intersection sign, strand offset
// conventions at multiple points).  They were fixed once against the exact
// trefoil and 8_19 vectors plus the state-sum identity and are frozen here.
// The crosscheck command can flip one of them at runtime as a negative
// control.

#pragma once

namespace knotint {

struct Calibration {
  int twist_dir = -1;      // geometric rotation direction of a positive generator
  int sign_local = -1;     // global factor on local intersection signs
  int wind_x = -1;         // sign of the black-puncture winding counter
  int wind_y = -1;         // sign of the blue-puncture winding counter
  int braid_sign = -1;     // sign of the diagonal (strand crossing) counter
  int offset_side = +1;    // which side index-offset parallel strands sit on
  bool pile_arrival_order = true;  // pile slots filled in arrival order
  bool return_ascending = true;    // colouring blocks consumed in ascending order
};

Calibration& calibration();

}  // namespace knotint
