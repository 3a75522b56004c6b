#include "knotint/calib.hpp"

namespace knotint {

Calibration& calibration() {
  static Calibration c;
  return c;
}

}  // namespace knotint
