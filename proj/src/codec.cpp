#include "leech/codec.hpp"

#include <fstream>
#include <sstream>

namespace leech::codec {

Json encode(const Int& x) { return x.get_str(); }
Json encode(const Rat& x) { return x.get_str(); }

Json encode(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

Json encode(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

Json encode(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(encode(m.row_vector(i)));
  return a;
}

Json encode(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(encode(m.row_vector(i)));
  return a;
}

Rat decode_rat(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  throw std::invalid_argument("expected a rational encoded as a string");
}

Int decode_int(const Json& j) {
  Rat r = decode_rat(j);
  if (!is_integral(r)) throw std::invalid_argument("expected an integer, got " + r.get_str());
  return r.get_num();
}

RatVector decode_rat_vector(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  RatVector v;
  for (const auto& x : j) v.push_back(decode_rat(x));
  return v;
}

IntVector decode_int_vector(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  IntVector v;
  for (const auto& x : j) v.push_back(decode_int(x));
  return v;
}

RatMatrix decode_rat_matrix(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rows");
  std::vector<RatVector> rows;
  for (const auto& r : j) rows.push_back(decode_rat_vector(r));
  return RatMatrix::from_rows(rows);
}

IntMatrix decode_int_matrix(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(decode_int_vector(r));
  return IntMatrix::from_rows(rows);
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << doc.dump(1) << '\n';
}

}  // namespace leech::codec
