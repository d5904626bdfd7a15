#include "k3lat/config.hpp"

#include "k3lat/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace k3lat {

namespace {

using nlohmann::json;

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool valid_name(const std::string& s) {
  if (s.empty() || !is_name_start(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), is_name_char);
}

long long int_field(const json& v, const std::string& field) {
  if (!v.is_number_integer())
    throw ConfigError("config: '" + field + "' must be an integer");
  return v.get<long long>();
}

// a class given either as an expression string or as a coordinate array
IntVec resolve_class(const json& v, const std::vector<std::string>& names,
                     const std::string& field, std::string* rendered) {
  if (v.is_string()) {
    *rendered = v.get<std::string>();
    return parse_class_expr(*rendered, names);
  }
  if (v.is_array()) {
    if (v.size() != names.size())
      throw ConfigError("config: '" + field + "' must have " +
                        std::to_string(names.size()) + " coordinates");
    IntVec out(names.size());
    for (size_t i = 0; i < names.size(); ++i)
      out[i] = Int(int_field(v[i], field));
    *rendered = coords_str(out);
    return out;
  }
  throw ConfigError("config: '" + field +
                    "' must be a class expression or a coordinate array");
}

}  // namespace

IntVec parse_class_expr(const std::string& expr,
                        const std::vector<std::string>& names) {
  auto fail = [&](const std::string& msg) {
    return ConfigError("class expression '" + expr + "': " + msg);
  };
  IntVec out(names.size(), Int(0));
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i])))
      ++i;
  };

  skip_ws();
  if (i == expr.size()) throw fail("empty expression");
  Int sign = 1;
  if (expr[i] == '+') {
    ++i;
  } else if (expr[i] == '-') {
    sign = -1;
    ++i;
  }
  for (;;) {
    skip_ws();
    Int coeff = 1;
    if (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
      size_t start = i;
      while (i < expr.size() &&
             std::isdigit(static_cast<unsigned char>(expr[i])))
        ++i;
      coeff = Int(expr.substr(start, i - start));
      skip_ws();
    }
    if (i == expr.size() || !is_name_start(expr[i]))
      throw fail("expected a class name");
    size_t start = i;
    while (i < expr.size() && is_name_char(expr[i])) ++i;
    std::string name = expr.substr(start, i - start);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw fail("unknown class name '" + name + "'");
    out[static_cast<size_t>(it - names.begin())] += sign * coeff;

    skip_ws();
    if (i == expr.size()) break;
    if (expr[i] == '+')
      sign = 1;
    else if (expr[i] == '-')
      sign = -1;
    else
      throw fail(std::string("unexpected character '") + expr[i] + "'");
    ++i;
  }
  return out;
}

Config parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ConfigError("config: top level must be a JSON object");

  static const std::set<std::string> known = {
      "schema",        "gram",              "basis_names", "ample",
      "polarizations", "search_degree_max", "orbit_count"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key()))
      throw ConfigError("config: unknown key '" + it.key() + "'");

  if (!doc.contains("schema"))
    throw ConfigError("config: missing 'schema'");
  if (int_field(doc["schema"], "schema") != 1)
    throw ConfigError("config: unsupported schema version " +
                      doc["schema"].dump() + " (expected 1)");

  if (!doc.contains("gram") || !doc["gram"].is_array() || doc["gram"].empty())
    throw ConfigError("config: 'gram' must be a non-empty array of rows");
  const json& gram = doc["gram"];
  size_t n = gram.size();
  Config cfg;
  cfg.gram = IntMatrix(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (!gram[i].is_array() || gram[i].size() != n)
      throw ConfigError("config: 'gram' must be a square matrix");
    for (size_t j = 0; j < n; ++j)
      cfg.gram.at(i, j) = Int(int_field(gram[i][j], "gram"));
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (cfg.gram.at(i, j) != cfg.gram.at(j, i))
        throw ConfigError("config: 'gram' must be symmetric");

  if (!doc.contains("basis_names") || !doc["basis_names"].is_array() ||
      doc["basis_names"].size() != n)
    throw ConfigError(
        "config: 'basis_names' must list one name per basis vector");
  for (const json& v : doc["basis_names"]) {
    if (!v.is_string() || !valid_name(v.get<std::string>()))
      throw ConfigError(
          "config: basis names must be identifiers ([A-Za-z][A-Za-z0-9_]*)");
    cfg.basis_names.push_back(v.get<std::string>());
  }
  if (std::set<std::string>(cfg.basis_names.begin(), cfg.basis_names.end())
          .size() != n)
    throw ConfigError("config: basis names must be distinct");

  if (!doc.contains("ample")) throw ConfigError("config: missing 'ample'");
  cfg.ample =
      resolve_class(doc["ample"], cfg.basis_names, "ample", &cfg.ample_name);

  if (doc.contains("polarizations")) {
    if (!doc["polarizations"].is_array())
      throw ConfigError("config: 'polarizations' must be an array");
    for (const json& v : doc["polarizations"]) {
      std::string name;
      cfg.polarizations.push_back(
          resolve_class(v, cfg.basis_names, "polarizations", &name));
      cfg.polarization_names.push_back(name);
    }
  }

  if (doc.contains("search_degree_max")) {
    long long d = int_field(doc["search_degree_max"], "search_degree_max");
    if (d < 1 || d > 1000000)
      throw ConfigError("config: 'search_degree_max' must be in [1, 10^6]");
    cfg.search_degree_max = static_cast<int>(d);
  }
  if (doc.contains("orbit_count")) {
    long long c = int_field(doc["orbit_count"], "orbit_count");
    if (c < 1 || c > 100000)
      throw ConfigError("config: 'orbit_count' must be in [1, 10^5]");
    cfg.orbit_count = static_cast<int>(c);
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace k3lat
