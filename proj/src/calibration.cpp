#include "projlab/calibration.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "projlab/errors.hpp"

namespace projlab {

using nlohmann::json;

CalibrationConstants default_calibration() { return CalibrationConstants{}; }

CalibrationConstants load_calibration(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("calibration file: ") + e.what());
  }
  CalibrationConstants c;
  c.version = j.value("version", c.version);
  c.c_rast = j.value("c_rast", c.c_rast);
  c.c_cal = j.value("c_cal", c.c_cal);
  c.c_f_max = j.value("c_f_max", c.c_f_max);
  if (j.contains("wongkew_c")) {
    if (!j["wongkew_c"].is_array() || j["wongkew_c"].size() != 3)
      throw Error(ErrorCode::ParseError, "wongkew_c must be a 3-array");
    for (std::size_t i = 0; i < 3; ++i) c.wongkew_c[i] = j["wongkew_c"][i].get<double>();
  }
  return c;
}

void write_calibration(const CalibrationConstants& c, const std::string& path) {
  json j;
  j["version"] = c.version;
  j["c_rast"] = c.c_rast;
  j["c_cal"] = c.c_cal;
  j["wongkew_c"] = {c.wongkew_c[0], c.wongkew_c[1], c.wongkew_c[2]};
  j["c_f_max"] = c.c_f_max;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace projlab
