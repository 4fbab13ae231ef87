#include "commands.hpp"

#include "fixture_io.hpp"
#include "log.hpp"
#include "suites.hpp"
#include "torusdual/duality.hpp"
#include "torusdual/errors.hpp"
#include "torusdual/homology.hpp"
#include "torusdual/intlin.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace torusdual::cli {

namespace {

void write_json(const Json& j, const Output& o) {
  if (!o.json_path) return;
  if (*o.json_path == "-") {
    o.out << dump(j);
    return;
  }
  std::ofstream f(*o.json_path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + *o.json_path);
  f << dump(j);
}

bool text_wanted(const Output& o) { return !(o.json_path && *o.json_path == "-"); }

int parse_int(const std::string& s, const std::string& whole) {
  int v = 0;
  const char* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("invalid degree range '" + whole + "' (expected a..b)");
  return v;
}

Json qvector_json(const QVector& v) {
  Json a = Json::array();
  for (const QmodZ& q : v) a.push_back(q.to_string());
  return a;
}

QVector generator_value(const Json& v, std::size_t rank, const std::string& path) {
  QVector out;
  if (v.is_string()) {
    if (rank != 1) throw SchemaError(path, "expected an array of " + std::to_string(rank) + " fractions");
    out.push_back(fraction_from_json(v, path));
    return out;
  }
  if (!v.is_array() || v.size() != rank) throw SchemaError(path, "expected an array of " + std::to_string(rank) + " fractions");
  for (std::size_t j = 0; j < rank; ++j) out.push_back(fraction_from_json(v[j], path + "/" + std::to_string(j)));
  return out;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

DegreeRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("invalid degree range '" + text + "' (expected a..b)");
  return {parse_int(text.substr(0, dots), text), parse_int(text.substr(dots + 2), text)};
}

int cmd_tate(const std::string& fixture, const std::string& module, const DegreeRange& range, const Output& o) {
  const TorusFixture fix = load_fixture(fixture);
  const auto mods = fix.modules();
  const GModule* m = nullptr;
  std::string names;
  for (const auto& [name, mod] : mods) {
    names += (names.empty() ? "" : ", ") + name;
    if (name == module) m = &mod;
  }
  if (!m) throw UsageError("unknown module '" + module + "' for fixture " + fix.name + " (available: " + names + ")");

  Json rows = Json::array();
  if (!range.empty()) {
    std::size_t cap = 1;
    for (int i : {range.first, range.last}) cap = std::max<std::size_t>(cap, i >= 0 ? i : -i - 1);
    const BarComplex bar(*m, cap);
    for (int i = range.first; i <= range.last; ++i) {
      log_debug("tate degree " + std::to_string(i));
      rows.push_back({{"degree", i}, {"group", bar.tate(i).group().to_string()}});
    }
  }
  Json j = report_header("tate");
  j["fixture"] = fix.name;
  j["module"] = module;
  j["range"] = {range.first, range.last};
  j["table"] = rows;
  if (text_wanted(o)) {
    o.out << "fixture " << fix.name << ", module " << module << '\n';
    for (const auto& row : rows) o.out << "  H^" << row["degree"].get<int>() << " = " << row["group"].get<std::string>() << '\n';
  }
  write_json(j, o);
  return exit_ok;
}

std::vector<SuiteResult> verify_fixtures(const std::vector<TorusFixture>& fixtures, const std::string& suite, unsigned jobs) {
  if (!is_suite_name(suite)) throw UsageError("unknown suite '" + suite + "' (use tn, fox-vs-bar, five-term, diagram-a, theorem1, kernel or all)");
  std::vector<std::vector<SuiteResult>> per(fixtures.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < fixtures.size();) per[i] = run_suites(fixtures[i], suite);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, fixtures.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<SuiteResult> all;
  for (auto& v : per) all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  sort_results(all);
  return all;
}

int cmd_verify(const std::vector<std::string>& fixtures, const std::string& suite, unsigned jobs, const Output& o) {
  if (fixtures.empty()) throw UsageError("verify needs at least one fixture");
  std::vector<TorusFixture> loaded;
  for (const auto& f : fixtures) loaded.push_back(load_fixture(f));
  const auto results = verify_fixtures(loaded, suite, jobs);
  if (text_wanted(o)) o.out << render_text(results);
  write_json(verify_report(results, {o.timing}), o);
  return exit_code(results);
}

int cmd_duality(const std::string& fixture, const std::string& cocycle_file, const Output& o) {
  const TorusFixture fix = load_fixture(fixture);
  const Json input = read_json_file(cocycle_file);
  std::unique_ptr<DualityContext> ctx;
  try {
    ctx = std::make_unique<DualityContext>(fix);
  } catch (const HypothesisFailure& e) {
    throw UsageError("fixture " + fix.name + " does not satisfy the Tate-Nakayama hypotheses: " + e.what());
  }
  const Presentation& p = ctx->homology().presentation();
  const std::size_t rank = ctx->lattice_dual().rank();
  QVector f = zero_qvector(p.generators.size() * rank);
  auto place = [&](std::size_t s, const QVector& v) {
    for (std::size_t j = 0; j < rank; ++j) f[s * rank + j] = v[j];
  };
  if (!input.is_object() || !input.contains("values")) throw SchemaError("", "expected an object with 'values'");
  const Json& values = input["values"];
  if (values.is_array()) {
    if (values.size() != p.generators.size())
      throw SchemaError("/values", "expected " + std::to_string(p.generators.size()) + " generator values");
    for (std::size_t s = 0; s < values.size(); ++s) place(s, generator_value(values[s], rank, "/values/" + std::to_string(s)));
  } else if (values.is_object()) {
    for (const auto& [label, v] : values.items()) {
      std::size_t s = 0;
      while (s < p.generators.size() && p.generators[s].label != label) ++s;
      if (s == p.generators.size()) {
        std::string known;
        for (const auto& g : p.generators) known += (known.empty() ? "" : ", ") + g.label;
        throw SchemaError("/values/" + label, "no generator named '" + label + "' (available: " + known + ")");
      }
      place(s, generator_value(v, rank, "/values/" + label));
    }
  } else {
    throw SchemaError("/values", "expected an array or an object keyed by generator label");
  }
  if (auto bad = ctx->cocycles().failing_relator(f))
    throw UsageError("values do not define a cocycle: relator " + p.relators[*bad].label + " fails");

  const QVector psi = ctx->psi(f);
  Json j = report_header("duality");
  j["fixture"] = fix.name;
  j["hom_g_l_c"] = ctx->hom_g_l_c().group().to_string();
  j["coboundary"] = ctx->cocycles().is_coboundary(f);
  j["psi"] = qvector_json(psi);
  if (text_wanted(o)) {
    o.out << "Hom_G(L, C) = " << ctx->hom_g_l_c().group().to_string() << '\n';
    for (std::size_t k = 0; k < psi.size(); ++k) o.out << "  Psi(f)(phi_" << k + 1 << ") = " << psi[k].to_string() << '\n';
    if (psi.empty()) o.out << "  Psi(f) = 0 (no generators)\n";
  }
  write_json(j, o);
  return exit_ok;
}

int cmd_snf(const std::string& matrix_file, const Output& o) {
  const Json input = read_json_file(matrix_file);
  const Json& rows = input.is_object() ? input.value("matrix", Json()) : input;
  const std::string path = input.is_object() ? "/matrix" : "";
  const IntMatrix m = matrix_from_json(rows, path);
  const SmithDecomposition s = snf(m);
  Json factors = Json::array();
  for (const Integer& d : s.invariant_factors) factors.push_back(integer_to_json(d));
  Json j = report_header("snf");
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["U"] = matrix_to_json(s.U);
  j["D"] = matrix_to_json(s.D);
  j["V"] = matrix_to_json(s.V);
  j["rank"] = s.rank;
  j["invariant_factors"] = factors;
  if (text_wanted(o)) {
    o.out << "U =\n" << s.U.to_string() << "\nD =\n" << s.D.to_string() << "\nV =\n" << s.V.to_string() << "\nfactors = (";
    for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) o.out << (i ? ", " : "") << s.invariant_factors[i].get_str();
    o.out << ")\n";
  }
  write_json(j, o);
  return exit_ok;
}

int cmd_export(const std::string& fixture, const std::optional<std::string>& path, std::ostream& out) {
  const Json j = fixture_to_json(load_fixture(fixture));
  if (!path || *path == "-") {
    out << dump(j);
    return exit_ok;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + *path);
  f << dump(j);
  return exit_ok;
}

int cmd_fixtures(std::ostream& out) {
  for (const auto& name : builtin_fixture_names()) {
    const TorusFixture f = builtin_fixture(name);
    out << name << "  " << f.description << '\n';
  }
  return exit_ok;
}

}  // namespace torusdual::cli
