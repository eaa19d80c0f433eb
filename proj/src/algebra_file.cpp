#include "leibrack/algebra_file.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace leibrack {

namespace {

using nlohmann::json;

Rational parse_coefficient(const json &v, const std::string &where) {
  try {
    if (v.is_number_integer())
      return Rational(v.get<long>());
    if (v.is_string())
      return Rational::parse(v.get<std::string>());
  } catch (const std::exception &e) {
    throw ParseError(where + ": bad coefficient: " + e.what());
  }
  throw ParseError(where + ": coefficient must be an integer or a \"p/q\" string");
}

std::size_t parse_index(const json &v, std::size_t dim, const std::string &where) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(where + ": index must be a non-negative integer");
  const auto i = v.get<std::size_t>();
  if (i >= dim)
    throw ParseError(where + ": index " + std::to_string(i) + " out of range for dim " + std::to_string(dim));
  return i;
}

std::size_t parse_index_key(const std::string &key, std::size_t dim, const std::string &where) {
  std::size_t pos = 0;
  unsigned long long i = 0;
  try {
    i = std::stoull(key, &pos);
  } catch (const std::exception &) {
    throw ParseError(where + ": value key \"" + key + "\" is not a basis index");
  }
  if (pos != key.size() || key.empty() || key[0] == '-' || key[0] == '+')
    throw ParseError(where + ": value key \"" + key + "\" is not a basis index");
  if (i >= dim)
    throw ParseError(where + ": value key " + key + " out of range for dim " + std::to_string(dim));
  return static_cast<std::size_t>(i);
}

void reject_unknown_keys(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
  for (const auto &[key, _] : obj.items())
    if (!allowed.count(key))
      throw ParseError(where + ": unknown field \"" + key + "\"");
}

} // namespace

LeibnizAlgebra parse_algebra_text(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError("top level must be an object");
  reject_unknown_keys(doc, {"dim", "basis", "brackets"}, "document");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
    throw ParseError("\"dim\" must be a non-negative integer");
  const auto dim = doc["dim"].get<std::size_t>();

  std::vector<std::string> names;
  if (doc.contains("basis")) {
    const json &b = doc["basis"];
    if (!b.is_array() || b.size() != dim)
      throw ParseError("\"basis\" must be a list of dim names");
    std::set<std::string> seen;
    for (const auto &name : b) {
      if (!name.is_string())
        throw ParseError("basis names must be strings");
      if (!seen.insert(name.get<std::string>()).second)
        throw ParseError("duplicate basis name \"" + name.get<std::string>() + "\"");
      names.push_back(name.get<std::string>());
    }
  }

  std::vector<Rational> c(dim * dim * dim, Rational(0));
  if (!doc.contains("brackets"))
    throw ParseError("missing \"brackets\" list");
  {
    const json &br = doc["brackets"];
    if (!br.is_array())
      throw ParseError("\"brackets\" must be a list");
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t r = 0; r < br.size(); ++r) {
      const json &rec = br[r];
      const std::string where = "brackets[" + std::to_string(r) + "]";
      if (!rec.is_object() || !rec.contains("left") || !rec.contains("right") || !rec.contains("value"))
        throw ParseError(where + ": needs left, right and value");
      reject_unknown_keys(rec, {"left", "right", "value"}, where);
      const std::size_t i = parse_index(rec["left"], dim, where + ".left");
      const std::size_t j = parse_index(rec["right"], dim, where + ".right");
      if (!pairs.insert({i, j}).second)
        throw ParseError(where + ": bracket (" + std::to_string(i) + ", " + std::to_string(j) + ") given twice");
      if (!rec["value"].is_object())
        throw ParseError(where + ".value must map basis indices to coefficients");
      for (const auto &[key, coef] : rec["value"].items()) {
        const std::size_t k = parse_index_key(key, dim, where + ".value");
        c[(i * dim + j) * dim + k] = parse_coefficient(coef, where + ".value[" + key + "]");
      }
    }
  }
  return LeibnizAlgebra(dim, std::move(c), std::move(names));
}

LeibnizAlgebra parse_algebra_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_algebra_text(os.str());
}

std::string serialize_algebra(const LeibnizAlgebra &alg) {
  nlohmann::ordered_json doc;
  const std::size_t n = alg.dim();
  doc["dim"] = n;
  doc["basis"] = alg.basis_names();
  doc["brackets"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      nlohmann::ordered_json value = nlohmann::ordered_json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (!alg.structure_constant(i, j, k).is_zero())
          value[std::to_string(k)] = alg.structure_constant(i, j, k).str();
      if (value.empty())
        continue;
      nlohmann::ordered_json rec;
      rec["left"] = i;
      rec["right"] = j;
      rec["value"] = std::move(value);
      doc["brackets"].push_back(std::move(rec));
    }
  return doc.dump(2) + "\n";
}

} // namespace leibrack
