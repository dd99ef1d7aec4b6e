#include "projlab/familyio.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "projlab/errors.hpp"

namespace projlab {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Poly parse_poly(const json& arr, const std::string& where) {
  if (!arr.is_array())
    throw Error(ErrorCode::ParseError, where + ": polynomial must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : arr) {
    if (!c.is_string())
      throw Error(ErrorCode::ParseError,
                  where + ": coefficients must be rational strings (floats are refused)");
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  return Poly(std::move(coeffs));
}

json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).str());
  if (p.is_zero()) arr.push_back("0");
  return arr;
}

std::array<Poly, 4> parse_row(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 4)
    throw Error(ErrorCode::ParseError, "family row '" + key + "' must be 4 polynomials");
  std::array<Poly, 4> row;
  for (std::size_t i = 0; i < 4; ++i)
    row[i] = parse_poly(j[key][i], key + "[" + std::to_string(i) + "]");
  return row;
}

}  // namespace

FamilySpec parse_family_json(const std::string& text, const std::string& default_name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("family file: ") + e.what());
  }
  std::string name = j.value("name", default_name);
  return FamilySpec::create(parse_row(j, "b1"), parse_row(j, "b2"), name);
}

FamilySpec parse_family_file(const std::string& path) {
  std::string stem = std::filesystem::path(path).stem().string();
  return parse_family_json(read_file(path), stem);
}

void write_family_file(const FamilySpec& f, const std::string& path) {
  json j;
  j["name"] = f.name;
  j["b1"] = json::array();
  j["b2"] = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    j["b1"].push_back(poly_to_json(f.b1[i]));
    j["b2"].push_back(poly_to_json(f.b2[i]));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

SemialgebraicSpec parse_surface_file(const std::string& path, int complexity_max) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("surface file: ") + e.what());
  }
  SemialgebraicSpec s;
  s.name = j.value("name", std::filesystem::path(path).stem().string());
  if (!j.contains("constraints") || !j["constraints"].is_array() || j["constraints"].empty())
    throw Error(ErrorCode::ParseError, "surface file needs a constraints array");
  for (const auto& cj : j["constraints"]) {
    Constraint con;
    std::string rel = cj.value("relation", "ge0");
    if (rel == "ge0")
      con.rel = Relation::ge0;
    else if (rel == "eq_thick")
      con.rel = Relation::eq_thick;
    else
      throw Error(ErrorCode::ParseError, "unknown relation '" + rel + "'");
    if (!cj.contains("monomials") || !cj["monomials"].is_array())
      throw Error(ErrorCode::ParseError, "constraint needs a monomials array");
    std::vector<TriMono> monos;
    for (const auto& mj : cj["monomials"]) {
      if (!mj.contains("e") || !mj["e"].is_array() || mj["e"].size() != 3)
        throw Error(ErrorCode::ParseError, "monomial needs an exponent triple e");
      if (!mj.contains("c") || !mj["c"].is_string())
        throw Error(ErrorCode::ParseError,
                    "monomial coefficient must be a rational string");
      TriMono m;
      for (std::size_t i = 0; i < 3; ++i) {
        int e = mj["e"][i].get<int>();
        if (e < 0) throw Error(ErrorCode::ParseError, "negative exponent");
        m.e[i] = e;
      }
      m.c = Rational::parse(mj["c"].get<std::string>());
      monos.push_back(m);
    }
    con.q = TriPoly(std::move(monos));
    s.constraints.push_back(std::move(con));
  }
  if (s.complexity() > complexity_max)
    throw Error(ErrorCode::ParseError, "surface complexity " +
                                           std::to_string(s.complexity()) +
                                           " exceeds the configured maximum " +
                                           std::to_string(complexity_max));
  return s;
}

void write_surface_file(const SemialgebraicSpec& s, const std::string& path) {
  json j;
  j["name"] = s.name;
  j["constraints"] = json::array();
  for (const auto& con : s.constraints) {
    json cj;
    cj["relation"] = con.rel == Relation::ge0 ? "ge0" : "eq_thick";
    cj["monomials"] = json::array();
    for (const auto& m : con.q.monomials()) {
      json mj;
      mj["e"] = {m.e[0], m.e[1], m.e[2]};
      mj["c"] = m.c.str();
      cj["monomials"].push_back(mj);
    }
    j["constraints"].push_back(cj);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace projlab
