#include "projlab/report_io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "projlab/errors.hpp"

namespace projlab {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::uint64_t h = 0xcbf29ce484222325ull;
  char buf[1 << 14];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ull;
    }
    if (!in) break;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
  return out;
}

namespace {

json poly_json(const Poly& p) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).str());
  if (p.is_zero()) arr.push_back("0");
  return arr;
}

json witness_json(const WitnessMatrix& w) {
  json j;
  j["d"] = w.d.str();
  json a = json::array(), b = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    json ra = json::array(), rb = json::array();
    for (std::size_t c = 0; c < 2; ++c) {
      ra.push_back(w.k[r][c].a.str());
      rb.push_back(w.k[r][c].b.str());
    }
    a.push_back(ra);
    b.push_back(rb);
  }
  j["rational_part"] = a;
  j["sqrt_part"] = b;
  return j;
}

}  // namespace

json exponent_report_to_json(const ExponentReport& rep) {
  json j;
  j["B"] = rep.B;
  j["N"] = rep.N;
  j["alpha"] = rep.alpha.str();
  if (rep.beta) j["beta"] = rep.beta->str();
  if (rep.p) j["p"] = rep.p->str();
  j["dim_bound"] = rep.dim_bound.str();
  return j;
}

json check_report_to_json(const CheckReport& rep) {
  json j;
  j["wronskian_ok"] = rep.wronskian.ok;
  j["wronskian_roots_in_01"] = rep.wronskian.roots_in_01;
  j["wronskian_det"] = poly_json(rep.wronskian.det);
  j["frame_independent"] = rep.frame_independent;
  j["subspace_ok"] = rep.subspace_ok;
  if (rep.witness) j["witness"] = witness_json(*rep.witness);
  if (rep.line_dies) j["line_dies"] = *rep.line_dies;
  if (rep.dying_line) {
    json l = json::array();
    for (const auto& x : *rep.dying_line) l.push_back(x.str());
    j["dying_line"] = l;
  }
  json minors = json::array();
  for (const auto& m : rep.minors.minors) minors.push_back(poly_json(m));
  j["minors"] = minors;
  j["B"] = rep.minors.B;
  j["exponents"] = exponent_report_to_json(rep.exponents);
  return j;
}

json calibration_to_json(const CalibrationConstants& c) {
  json j;
  j["version"] = c.version;
  j["c_rast"] = c.c_rast;
  j["c_cal"] = c.c_cal;
  j["wongkew_c"] = {c.wongkew_c[0], c.wongkew_c[1], c.wongkew_c[2]};
  j["c_f_max"] = c.c_f_max;
  return j;
}

RunManifest::RunManifest(std::string command, json config_echo,
                         const CalibrationConstants& calibration) {
  j_["artifact"] = "projlab";
  j_["version"] = "0.1.0";
  j_["command"] = std::move(command);
  j_["config"] = std::move(config_echo);
  j_["calibration"] = calibration_to_json(calibration);
  j_["inputs"] = json::array();
  j_["outputs"] = json::array();
  j_["records"] = json::object();
  auto now = std::chrono::system_clock::now().time_since_epoch();
  j_["started_unix_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
}

void RunManifest::add_input(const std::string& path) {
  json e;
  e["path"] = path;
  e["fnv1a64"] = file_digest(path);
  j_["inputs"].push_back(e);
}

void RunManifest::add_output(const std::string& path) {
  outputs_.push_back(path);
  j_["outputs"].push_back(path);
}

void RunManifest::add_record(const std::string& stage, json record) {
  j_["records"][stage] = std::move(record);
}

void RunManifest::finish_and_write(const std::string& path) {
  auto now = std::chrono::system_clock::now().time_since_epoch();
  j_["finished_unix_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << j_.dump(2) << "\n";
}

}  // namespace projlab
