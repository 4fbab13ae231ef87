#include "fixture_io.hpp"

#include "torusdual/errors.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <fstream>
#include <limits>

namespace torusdual::cli {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path, "missing field '" + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_array()) throw SchemaError(path + "/" + key, "expected an array");
  return v;
}

std::size_t index_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string string_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

Json module_to_json(const std::string& name, const GModule& m) {
  std::size_t free = 0;
  while (free < m.rank() && sgn(m.moduli()[free]) == 0) ++free;
  Json torsion = Json::array();
  for (std::size_t i = free; i < m.rank(); ++i) {
    if (sgn(m.moduli()[i]) == 0) throw InternalInconsistency("export: module " + name + " lists torsion before free coordinates");
    torsion.push_back(integer_to_json(m.moduli()[i]));
  }
  Json action = Json::array();
  for (Element g : m.group().generators()) action.push_back({{"generator", g}, {"matrix", matrix_to_json(m.action(g))}});
  return {{"name", name}, {"free_rank", free}, {"torsion", torsion}, {"action", action}};
}

GModule module_from_json(const Json& j, const GroupPtr& group, const std::string& path) {
  const std::size_t free = index_from_json(field(j, "free_rank", path), path + "/free_rank");
  const Json& torsion = array_field(j, "torsion", path);
  IntVector moduli(free);
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    Integer t = integer_from_json(torsion[i], path + "/torsion/" + std::to_string(i));
    if (t < 1) throw SchemaError(path + "/torsion/" + std::to_string(i), "torsion orders must be positive");
    moduli.push_back(t);
  }
  const Json& action = array_field(j, "action", path);
  std::vector<std::pair<Element, IntMatrix>> gens;
  for (std::size_t k = 0; k < action.size(); ++k) {
    const std::string p = path + "/action/" + std::to_string(k);
    const Element g = index_from_json(field(action[k], "generator", p), p + "/generator");
    if (g >= group->order()) throw SchemaError(p + "/generator", "element index out of range");
    IntMatrix m = matrix_from_json(field(action[k], "matrix", p), p + "/matrix");
    if (m.rows() != moduli.size() || m.cols() != moduli.size())
      throw SchemaError(p + "/matrix", "expected a " + std::to_string(moduli.size()) + " x " +
                                           std::to_string(moduli.size()) + " matrix");
    gens.emplace_back(g, std::move(m));
  }
  try {
    return GModule::from_generators(group, std::move(moduli), gens);
  } catch (const Error& e) {
    throw SchemaError(path + "/action", e.what());
  }
}

GroupPtr group_from_json(const Json& j, const std::string& path) {
  try {
    if (j.contains("table")) {
      const Json& t = array_field(j, "table", path);
      std::vector<std::vector<Element>> table;
      for (std::size_t a = 0; a < t.size(); ++a) {
        const std::string p = path + "/table/" + std::to_string(a);
        if (!t[a].is_array()) throw SchemaError(p, "expected an array");
        std::vector<Element> row;
        for (std::size_t b = 0; b < t[a].size(); ++b) row.push_back(index_from_json(t[a][b], p + "/" + std::to_string(b)));
        table.push_back(std::move(row));
      }
      std::vector<std::string> labels;
      if (j.contains("labels"))
        for (std::size_t a = 0; a < j["labels"].size(); ++a)
          labels.push_back(string_from_json(j["labels"][a], path + "/labels/" + std::to_string(a)));
      return std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
    }
    if (j.contains("permutations")) {
      const Json& ps = array_field(j, "permutations", path);
      std::vector<Permutation> perms;
      for (std::size_t k = 0; k < ps.size(); ++k) {
        const std::string p = path + "/permutations/" + std::to_string(k);
        if (!ps[k].is_array()) throw SchemaError(p, "expected an array");
        Permutation perm;
        for (std::size_t i = 0; i < ps[k].size(); ++i) perm.push_back(index_from_json(ps[k][i], p + "/" + std::to_string(i)));
        perms.push_back(std::move(perm));
      }
      return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(perms));
    }
  } catch (const ContractViolation& e) {
    throw SchemaError(path, e.what());
  }
  throw SchemaError(path, "expected 'table' or 'permutations'");
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw SchemaError(path, "expected an integer");
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of rows");
  if (j.empty()) return IntMatrix(0, 0);
  std::vector<IntVector> rows;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (!j[i].is_array()) throw SchemaError(p, "expected a row array");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) throw SchemaError(p, "row has " + std::to_string(j[i].size()) + " entries, expected " + std::to_string(cols));
    IntVector row;
    for (std::size_t k = 0; k < cols; ++k) row.push_back(integer_from_json(j[i][k], p + "/" + std::to_string(k)));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, cols);
}

QmodZ fraction_from_json(const Json& j, const std::string& path) {
  const std::string s = string_from_json(j, path);
  QmodZ q;
  try {
    q = QmodZ::parse(s);
  } catch (const ContractViolation& e) {
    throw SchemaError(path, e.what());
  }
  if (q.to_string() != s) throw SchemaError(path, "fraction \"" + s + "\" is not reduced with 0 <= p < q");
  return q;
}

Json fixture_to_json(const TorusFixture& fix) {
  const FiniteGroup& g = fix.group();
  Json table = Json::array();
  for (const auto& row : g.table()) table.push_back(row);
  const Cochain& u = fix.weil.cocycle();
  Json values = Json::array();
  for (Element a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < g.order(); ++b) {
      Json v = Json::array();
      for (const Integer& x : u.value({a, b})) v.push_back(integer_to_json(x));
      row.push_back(std::move(v));
    }
    values.push_back(std::move(row));
  }
  return {{"schema_version", fixture_schema_version},
          {"name", fix.name},
          {"description", fix.description},
          {"group", {{"table", table}, {"labels", g.labels()}}},
          {"modules", Json::array({module_to_json("L", fix.lattice), module_to_json("C", fix.formation_module())})},
          {"cocycles", Json::array({{{"name", "u"}, {"module", "C"}, {"values", values}}})},
          {"torus", {{"lattice", "L"}, {"formation_module", "C"}, {"fundamental_class", "u"}, {"formation", fix.formation}}}};
}

TorusFixture fixture_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("", "expected an object");
  const Json& version = field(j, "schema_version", "");
  if (!version.is_number_integer() || version.get<int>() != fixture_schema_version)
    throw SchemaError("/schema_version", "unsupported schema version (expected " + std::to_string(fixture_schema_version) + ")");
  if (j.contains("builtin")) {
    try {
      return builtin_fixture(string_from_json(j["builtin"], "/builtin"));
    } catch (const ContractViolation& e) {
      throw SchemaError("/builtin", e.what());
    }
  }
  const std::string name = string_from_json(field(j, "name", ""), "/name");
  const std::string description = j.contains("description") ? string_from_json(j["description"], "/description") : "";
  GroupPtr group = group_from_json(field(j, "group", ""), "/group");

  std::map<std::string, GModule> modules;
  const Json& mods = array_field(j, "modules", "");
  for (std::size_t k = 0; k < mods.size(); ++k) {
    const std::string p = "/modules/" + std::to_string(k);
    modules.emplace(string_from_json(field(mods[k], "name", p), p + "/name"), module_from_json(mods[k], group, p));
  }
  const Json& torus = field(j, "torus", "");
  auto module_named = [&](const std::string& key) -> const GModule& {
    const std::string n = string_from_json(field(torus, key, "/torus"), "/torus/" + key);
    auto it = modules.find(n);
    if (it == modules.end()) throw SchemaError("/torus/" + key, "no module named '" + n + "'");
    return it->second;
  };
  const GModule& lattice = module_named("lattice");
  const GModule& c = module_named("formation_module");
  if (!lattice.is_free()) throw SchemaError("/torus/lattice", "the character lattice must be free");

  const std::string cocycle_name = string_from_json(field(torus, "fundamental_class", "/torus"), "/torus/fundamental_class");
  const Json& cocycles = array_field(j, "cocycles", "");
  std::optional<Cochain> u;
  for (std::size_t k = 0; k < cocycles.size(); ++k) {
    const std::string p = "/cocycles/" + std::to_string(k);
    if (string_from_json(field(cocycles[k], "name", p), p + "/name") != cocycle_name) continue;
    const Json& values = array_field(cocycles[k], "values", p);
    const std::size_t n = group->order();
    if (values.size() != n) throw SchemaError(p + "/values", "expected " + std::to_string(n) + " rows");
    Cochain table(n, 2, c.rank());
    for (Element a = 0; a < n; ++a) {
      const std::string pa = p + "/values/" + std::to_string(a);
      if (!values[a].is_array() || values[a].size() != n) throw SchemaError(pa, "expected " + std::to_string(n) + " entries");
      for (Element b = 0; b < n; ++b) {
        const std::string pb = pa + "/" + std::to_string(b);
        const Json& v = values[a][b];
        if (!v.is_array() || v.size() != c.rank()) throw SchemaError(pb, "expected a vector of length " + std::to_string(c.rank()));
        IntVector x;
        for (std::size_t i = 0; i < v.size(); ++i) x.push_back(integer_from_json(v[i], pb + "/" + std::to_string(i)));
        table.set({a, b}, x);
      }
    }
    u = std::move(table);
  }
  if (!u) throw SchemaError("/torus/fundamental_class", "no cocycle named '" + cocycle_name + "'");
  const bool formation = torus.contains("formation") ? torus["formation"].get<bool>() : true;
  try {
    return {name, description, lattice, ExtensionGroup(c, *u), formation};
  } catch (const ContractViolation& e) {
    throw SchemaError("/cocycles", e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

TorusFixture load_fixture(const std::string& spec) {
  for (const auto& n : builtin_fixture_names())
    if (n == spec) return builtin_fixture(spec);
  if (!std::filesystem::exists(spec)) return builtin_fixture(spec);  // throws, listing built-ins
  Json j = read_json_file(spec);
  try {
    return fixture_from_json(j);
  } catch (const SchemaError& e) {
    throw SchemaError(e.path(), std::string(spec) + ": " + e.what());
  }
}

}  // namespace torusdual::cli
