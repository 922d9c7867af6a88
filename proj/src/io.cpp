#include "gil/io.hpp"

#include <fstream>
#include <sstream>

#include "gil/errors.hpp"

namespace gil {

namespace {

using njson = nlohmann::json;

int get_count(const njson& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("missing or non-integer \"") + key + "\"");
  }
  return j[key].get<int>();
}

// Flattens a [d0][d1][d2] nested table of indices.
std::vector<int> flatten_table(const njson& j, const char* key, int d0, int d1, int d2) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing table \"") + key + "\"");
  }
  const njson& t = j[key];
  if (static_cast<int>(t.size()) != d0) {
    throw ShapeError(std::string(key) + " has " + std::to_string(t.size()) +
                     " outer entries, expected " + std::to_string(d0));
  }
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(d0) * d1 * d2);
  for (int i = 0; i < d0; ++i) {
    const njson& row = t[i];
    if (!row.is_array() || static_cast<int>(row.size()) != d1) {
      throw ShapeError(std::string(key) + "[" + std::to_string(i) + "] must have " +
                       std::to_string(d1) + " entries");
    }
    for (int k = 0; k < d1; ++k) {
      const njson& cell = row[k];
      if (!cell.is_array() || static_cast<int>(cell.size()) != d2) {
        throw ShapeError(std::string(key) + "[" + std::to_string(i) + "][" + std::to_string(k) +
                         "] must have " + std::to_string(d2) + " entries");
      }
      for (int l = 0; l < d2; ++l) {
        if (!cell[l].is_number_integer()) {
          throw ParseError(std::string(key) + "[" + std::to_string(i) + "][" + std::to_string(k) +
                           "][" + std::to_string(l) + "] is not an integer");
        }
        flat.push_back(cell[l].get<int>());
      }
    }
  }
  return flat;
}

std::vector<std::string> get_labels(const njson& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j[key].is_array()) throw ParseError(std::string(key) + " must be an array of strings");
  std::vector<std::string> out;
  for (const njson& e : j[key]) {
    if (!e.is_string()) throw ParseError(std::string(key) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

GammaSemigroup structure_from_json(const njson& j) {
  if (!j.is_object()) throw ParseError("structure payload must be a JSON object");
  const int n = get_count(j, "n");
  const int m = get_count(j, "m");
  if (n < 1 || m < 1) throw ShapeError("n and m must be positive");
  std::vector<int> s = flatten_table(j, "s_table", n, m, n);
  std::vector<int> g = flatten_table(j, "g_table", m, n, m);
  return GammaSemigroup::build(n, m, std::move(s), std::move(g), get_labels(j, "s_labels"),
                               get_labels(j, "g_labels"));
}

nlohmann::ordered_json structure_to_json(const GammaSemigroup& g) {
  nlohmann::ordered_json out;
  out["n"] = g.n();
  out["m"] = g.m();
  nlohmann::ordered_json s = nlohmann::ordered_json::array();
  for (int a = 0; a < g.n(); ++a) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int ga = 0; ga < g.m(); ++ga) {
      nlohmann::ordered_json cell = nlohmann::ordered_json::array();
      for (int b = 0; b < g.n(); ++b) cell.push_back(g.s_table()[GammaSemigroup::s_index(g.n(), g.m(), a, ga, b)]);
      row.push_back(std::move(cell));
    }
    s.push_back(std::move(row));
  }
  out["s_table"] = std::move(s);
  nlohmann::ordered_json t = nlohmann::ordered_json::array();
  for (int al = 0; al < g.m(); ++al) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int a = 0; a < g.n(); ++a) {
      nlohmann::ordered_json cell = nlohmann::ordered_json::array();
      for (int be = 0; be < g.m(); ++be) cell.push_back(g.g_table()[GammaSemigroup::g_index(g.n(), g.m(), al, a, be)]);
      row.push_back(std::move(cell));
    }
    t.push_back(std::move(row));
  }
  out["g_table"] = std::move(t);
  if (!g.s_labels().empty()) out["s_labels"] = g.s_labels();
  if (!g.g_labels().empty()) out["g_labels"] = g.g_labels();
  return out;
}

Grade grade_from_json(const njson& j) {
  if (j.is_string()) return Grade::parse(j.get<std::string>());
  if (j.is_number_integer()) return Grade(Rational(j.get<std::int64_t>()));
  throw ParseError("grades must be exact: use \"p/q\" or decimal strings, not binary floats");
}

IFSubset ifs_from_json(const njson& j) {
  if (!j.is_object() || !j.contains("mu") || !j.contains("nu") || !j["mu"].is_array() ||
      !j["nu"].is_array()) {
    throw ParseError("IF subset payload needs \"mu\" and \"nu\" arrays");
  }
  std::vector<Grade> mu, nu;
  for (const njson& e : j["mu"]) mu.push_back(grade_from_json(e));
  for (const njson& e : j["nu"]) nu.push_back(grade_from_json(e));
  return IFSubset(std::move(mu), std::move(nu));
}

nlohmann::ordered_json ifs_to_json(const IFSubset& a) {
  nlohmann::ordered_json out;
  nlohmann::ordered_json mu = nlohmann::ordered_json::array();
  nlohmann::ordered_json nu = nlohmann::ordered_json::array();
  for (int x = 0; x < a.size(); ++x) {
    mu.push_back(a.mu(x).str());
    nu.push_back(a.nu(x).str());
  }
  out["mu"] = std::move(mu);
  out["nu"] = std::move(nu);
  return out;
}

CrispSubset subset_from_json(const njson& j, int universe) {
  if (!j.is_object() || !j.contains("set") || !j["set"].is_array()) {
    throw ParseError("subset payload needs a \"set\" array of indices");
  }
  CrispSubset m = CrispSubset::empty(universe);
  for (const njson& e : j["set"]) {
    if (!e.is_number_integer()) throw ParseError("subset elements must be integers");
    m.add(e.get<int>());
  }
  return m;
}

nlohmann::ordered_json subset_to_json(const CrispSubset& m) {
  nlohmann::ordered_json out;
  out["set"] = m.elements();
  return out;
}

nlohmann::ordered_json parse_json_text(const std::string& text, const std::string& origin) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + origin);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::ordered_json read_json_file(const std::string& path) {
  return parse_json_text(read_text_file(path), path);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out.good()) throw Error("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out.good()) throw Error("write failed: " + path);
}

}  // namespace gil
