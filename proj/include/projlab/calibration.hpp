#pragma once

#include <array>
#include <string>

namespace projlab {

/// Frozen slack/calibration constants; shipped as a versioned defaults file
/// and echoed into every run manifest.
struct CalibrationConstants {
  std::string version = "1";
  double c_rast = 10.0;                     // rasterization slack on inequality checks
  double c_cal = 1.0;                       // capture-bound calibration
  std::array<double, 3> wongkew_c{8.0, 8.0, 8.0};  // c_j, j = 1..3
  double c_f_max = 16.0;                    // (delta,s) verifier ceiling
};

CalibrationConstants default_calibration();
CalibrationConstants load_calibration(const std::string& path);  // throws ParseError/IoError
void write_calibration(const CalibrationConstants& c, const std::string& path);

}  // namespace projlab
