#include "symleib/table_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symleib {

using nlohmann::json;

json table_to_json(const StructureTable& t) {
  json products = json::array();
  for (int i = 1; i <= t.dim(); ++i)
    for (int j = 1; j <= t.dim(); ++j) {
      json coeffs = json::object();
      for (int k = 1; k <= t.dim(); ++k)
        if (!t.at(i, j, k).is_zero()) coeffs[std::to_string(k)] = t.at(i, j, k).str();
      if (!coeffs.empty()) products.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  return {{"dim", t.dim()}, {"products", products}};
}

namespace {

int read_index(const json& obj, const char* key, int n) {
  if (!obj.contains(key)) throw std::invalid_argument(std::string("product entry lacks \"") + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("\"") + key + "\" must be an integer");
  int x = v.get<int>();
  if (x < 1 || x > n) throw std::invalid_argument(std::string("\"") + key + "\" out of range 1.." + std::to_string(n));
  return x;
}

Rational read_coeff(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw std::invalid_argument("coefficient must be an integer or a \"p/q\" string, got " + v.dump());
}

}  // namespace

StructureTable table_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("structure table must be a JSON object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer()) throw std::invalid_argument("missing integer \"dim\"");
  int n = j.at("dim").get<int>();
  if (n < 1 || n > 8) throw std::invalid_argument("\"dim\" must be in 1..8");
  StructureTable t(n);
  if (!j.contains("products")) return t;
  const json& ps = j.at("products");
  if (!ps.is_array()) throw std::invalid_argument("\"products\" must be an array");
  std::set<std::pair<int, int>> seen;
  for (const json& p : ps) {
    if (!p.is_object()) throw std::invalid_argument("product entries must be objects");
    int a = read_index(p, "i", n), b = read_index(p, "j", n);
    if (!seen.insert({a, b}).second)
      throw std::invalid_argument("duplicate product (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (!p.contains("coeffs") || !p.at("coeffs").is_object()) throw std::invalid_argument("product lacks \"coeffs\" object");
    for (const auto& [key, val] : p.at("coeffs").items()) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw std::invalid_argument("coefficient key \"" + key + "\" is not a basis index");
      }
      if (k < 1 || k > n) throw std::invalid_argument("coefficient index " + key + " out of range");
      t.set(a, b, k, read_coeff(val));
    }
  }
  return t;
}

std::string dump_table(const StructureTable& t) { return table_to_json(t).dump(2) + "\n"; }

StructureTable parse_table(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return table_from_json(j);
}

StructureTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str());
}

}  // namespace symleib
