#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "projlab/calibration.hpp"
#include "projlab/family.hpp"

namespace projlab {

/// Deterministic float formatting shared by CSV and SVG emitters.
std::string fmt_double(double v);

/// 64-bit FNV-1a digest of a file's bytes, hex-encoded; throws IoError.
std::string file_digest(const std::string& path);

nlohmann::json check_report_to_json(const CheckReport& rep);
nlohmann::json exponent_report_to_json(const ExponentReport& rep);
nlohmann::json calibration_to_json(const CalibrationConstants& c);

/// Run manifest: config echo, calibration echo, input digests, output list,
/// per-stage records. Identical (config, seed, inputs) reproduce identical
/// numeric payloads; only the timestamps differ between runs.
class RunManifest {
 public:
  RunManifest(std::string command, nlohmann::json config_echo,
              const CalibrationConstants& calibration);

  void add_input(const std::string& path);
  void add_output(const std::string& path);
  void add_record(const std::string& stage, nlohmann::json record);
  void finish_and_write(const std::string& path);

 private:
  nlohmann::json j_;
  std::vector<std::string> outputs_;
};

}  // namespace projlab
