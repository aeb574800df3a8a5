#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reebforge/bounds.hpp"
#include "reebforge/error.hpp"
#include "reebforge/fiber_power.hpp"
#include "reebforge/fixtures.hpp"
#include "reebforge/io.hpp"
#include "reebforge/reeb.hpp"
#include "reebforge/reeb_graph.hpp"

namespace reebforge::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t default_cell_cap() {
  const char* env = std::getenv("REEBFORGE_CELL_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCellCap;
  std::size_t used = 0;
  unsigned long long cap = 0;
  try {
    cap = std::stoull(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string_view(env).size() || cap == 0) {
    throw UsageError(std::string("REEBFORGE_CELL_CAP must be a positive integer, got \"") + env + "\"");
  }
  return static_cast<std::size_t>(cap);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text << '\n';
}

// Map inputs are used as they are; function inputs are cut along their
// levels and mapped onto the path of distinct values.
SimplicialMap load_map(const std::string& path) {
  if (sniff_document(path) == DocumentKind::Function) return level_subdivision(read_function(path)).map;
  if (sniff_document(path) != DocumentKind::Map) throw UsageError(path + " is not a map or function file");
  return read_map(path);
}

Json as_json(const std::string& report) { return Json::parse(report); }

struct Options {
  std::string input;
  std::string output;
  // reeb
  bool graph = false, space = false, dot = false, detail = false;
  // fiber-power / verify
  std::size_t p = 1;
  std::string method = "cellular";
  std::optional<std::size_t> cell_cap;
  std::optional<std::size_t> descent;
  std::string target = "reeb";
  bool b1 = false, quotient = false;
  unsigned threads = 1;
  // bounds
  std::string bound;
  std::optional<std::uint64_t> s, d, k, n, m, c;
  std::vector<std::string> polys;
  std::string compare;
  // fixtures
  std::string fixture;
  std::vector<std::string> params;
};

FiberPowerMethod parse_method(const std::string& name) {
  return name == "nerve" ? FiberPowerMethod::Nerve : FiberPowerMethod::Cellular;
}

int cmd_betti(const Options& o, std::ostream& out) {
  const auto kind = sniff_document(o.input);
  if (kind != DocumentKind::Complex) throw UsageError(o.input + " is not a complex file");
  emit(betti_report(betti(read_complex(o.input))), o.output, out);
  return kOk;
}

int cmd_reeb(const Options& o, std::ostream& out) {
  const auto kind = sniff_document(o.input);
  if (kind == DocumentKind::Complex) throw UsageError(o.input + " is not a map or function file");
  const bool graph = o.graph || (!o.space && kind == DocumentKind::Function);
  if (o.dot && !graph) throw UsageError("--dot needs a Reeb graph (--graph with a function file)");
  if (graph) {
    if (kind != DocumentKind::Function) throw UsageError("--graph needs a function file");
    const ReebGraph g = reeb_graph(read_function(o.input));
    emit(o.dot ? reeb_graph_dot(g) : reeb_graph_report(g), o.output, out);
    return kOk;
  }
  const SimplicialMap f = load_map(o.input);
  const ReebComplex r = reeb_space(f, {.build_quotient_map = false});
  emit(reeb_space_report(r, f.codomain(), o.detail), o.output, out);
  return kOk;
}

int cmd_fiber_power(const Options& o, std::ostream& out) {
  const SimplicialMap f = load_map(o.input);
  const std::size_t cap = o.cell_cap ? *o.cell_cap : default_cell_cap();
  const BettiVector b = fiber_power_betti(f, o.p, parse_method(o.method), cap);
  Json j;
  j["p"] = o.p;
  j["factors"] = o.p + 1;
  j["method"] = o.method;
  const Json report = as_json(betti_report(b));
  for (const auto& [key, value] : report.items()) j[key] = value;
  emit(j.dump(2), o.output, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!o.descent && !o.b1 && !o.quotient) {
    throw UsageError("verify needs at least one of --descent, --b1, --quotient");
  }
  const SimplicialMap f = load_map(o.input);
  Json checks = Json::object();
  bool pass = true;
  if (o.descent) {
    DescentOptions options;
    options.cell_cap = o.cell_cap ? *o.cell_cap : default_cell_cap();
    options.method = parse_method(o.method);
    options.threads = o.threads;
    const auto target = o.target == "image" ? DescentTarget::Image : DescentTarget::Reeb;
    const DescentReport r = descent_check(f, target, *o.descent, options);
    checks["descent"] = as_json(descent_report(r));
    pass = pass && r.holds();
  }
  if (o.b1) {
    const B1Report r = b1_inequality_check(f);
    checks["b1"] = as_json(b1_report(r));
    pass = pass && r.holds();
  }
  if (o.quotient) {
    const QuotientReport r = verify_quotient(f);
    checks["quotient"] = as_json(quotient_report(r));
    pass = pass && r.ok();
  }
  Json j;
  j["checks"] = std::move(checks);
  j["pass"] = pass;
  emit(j.dump(2), o.output, out);
  return pass ? kOk : kCheckFailed;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  struct Param {
    const char* name;
    const std::optional<std::uint64_t>* value;
  };
  const std::vector<Param> all = {{"s", &o.s}, {"d", &o.d}, {"k", &o.k},
                                  {"n", &o.n}, {"m", &o.m}, {"c", &o.c}};
  auto take = [&](std::initializer_list<const char*> wanted) {
    std::vector<std::pair<std::string, std::uint64_t>> params;
    for (const Param& p : all) {
      const bool is_wanted = std::any_of(wanted.begin(), wanted.end(),
                                         [&](const char* w) { return std::string_view(w) == p.name; });
      if (is_wanted && !p.value->has_value()) {
        throw UsageError("bound " + o.bound + " needs --" + p.name);
      }
      if (!is_wanted && p.value->has_value()) {
        throw UsageError("bound " + o.bound + " does not take --" + p.name);
      }
      if (is_wanted) params.emplace_back(p.name, **p.value);
    }
    if (!o.polys.empty()) throw UsageError("--poly only applies to the univariate count");
    if (!o.compare.empty() && o.bound != "reeb") throw UsageError("--compare only applies to bound reeb");
    return params;
  };
  auto value_of = [](const std::vector<std::pair<std::string, std::uint64_t>>& params, std::size_t i) {
    return params[i].second;
  };

  if (o.bound == "univariate") {
    for (const Param& p : all) {
      if (p.value->has_value()) throw UsageError(std::string("univariate does not take --") + p.name);
    }
    if (o.polys.empty()) throw UsageError("univariate needs at least one --poly");
    std::vector<Polynomial> polys;
    int degree = 0;
    for (const auto& text : o.polys) {
      polys.push_back(Polynomial::parse(text));
      degree = std::max(degree, polys.back().degree());
    }
    const std::size_t count = univariate_sign_components(polys);
    Json j;
    j["bound_name"] = "univariate_sign_components";
    j["polynomials"] = o.polys;
    j["value"] = std::to_string(count);
    // The sign-component bound needs d >= 1; constants have none anyway.
    const BigInt bound = bound_sign_components(polys.size(), std::max(degree, 1), 1);
    j["bound_sign_components"] = to_string(bound);
    j["within_bound"] = BigInt(static_cast<unsigned long>(count)) <= bound;
    emit(j.dump(2), o.output, out);
    return BigInt(static_cast<unsigned long>(count)) <= bound ? kOk : kCheckFailed;
  }

  if (o.bound == "closed") {
    const auto p = take({"s", "d", "k"});
    emit(bound_report("closed", p, bound_closed(value_of(p, 0), value_of(p, 1), value_of(p, 2))), o.output, out);
  } else if (o.bound == "general") {
    const auto p = take({"s", "d", "k"});
    emit(bound_report("general", p, bound_general(value_of(p, 0), value_of(p, 1), value_of(p, 2))), o.output, out);
  } else if (o.bound == "sign-components") {
    const auto p = take({"s", "d", "k"});
    emit(bound_report("sign-components", p,
                      bound_sign_components(value_of(p, 0), value_of(p, 1), value_of(p, 2))),
         o.output, out);
  } else {
    const auto p = take({"s", "d", "n", "m", "c"});
    const BigInt value = bound_reeb(value_of(p, 0), value_of(p, 1), value_of(p, 2), value_of(p, 3), value_of(p, 4));
    Json j = as_json(bound_report("reeb", p, value));
    if (!o.compare.empty()) {
      // Reported only: the exponent constant is the caller's guess, so this
      // comparison never decides the exit status.
      const SimplicialMap f = load_map(o.compare);
      const BettiVector b = betti(*reeb_space(f, {.build_quotient_map = false}).realization);
      Json cmp;
      cmp["b_reeb"] = b.total();
      cmp["within_bound"] = BigInt(static_cast<unsigned long>(b.total())) <= value;
      j["comparison"] = std::move(cmp);
    }
    emit(j.dump(2), o.output, out);
  }
  return kOk;
}

int cmd_fixtures_list(std::ostream& out, const std::string& output) {
  Json list = Json::array();
  for (const FixtureInfo& info : fixture_catalog()) {
    Json j;
    j["name"] = info.name;
    j["description"] = info.description;
    j["params"] = info.defaults;
    list.push_back(std::move(j));
  }
  emit(list.dump(2), output, out);
  return kOk;
}

int cmd_fixtures_emit(const Options& o, std::ostream& out) {
  FixtureSpec spec{o.fixture, {}};
  for (const std::string& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got " + kv);
    const std::string value = kv.substr(eq + 1);
    std::size_t used = 0;
    long long parsed = 0;
    try {
      parsed = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (value.empty() || used != value.size()) throw UsageError("--param value must be an integer: " + kv);
    spec.params[kv.substr(0, eq)] = parsed;
  }
  const Fixture fixture = make_fixture(spec);
  const std::filesystem::path dir = o.output.empty() ? std::filesystem::path(".") : std::filesystem::path(o.output);
  std::filesystem::create_directories(dir);
  Json written = Json::array();
  auto write = [&](const std::string& suffix, const std::string& text) {
    const std::filesystem::path path = dir / (o.fixture + suffix);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path.string());
    file << text << '\n';
    written.push_back(path.string());
  };
  if (fixture.complex) write(".complex.json", write_complex(*fixture.complex));
  if (fixture.map) write(".map.json", write_map(*fixture.map));
  if (fixture.function) write(".function.json", write_function(*fixture.function));
  Json j;
  j["fixture"] = o.fixture;
  j["written"] = std::move(written);
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Reeb graphs, Reeb spaces and fiber-power checks for simplicial maps"};
  app.name("reebforge");
  app.require_subcommand(1);

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of a complex file");
  betti_cmd->add_option("complex", o.input, "Complex file")->required()->check(CLI::ExistingFile);
  betti_cmd->add_option("-o,--output", o.output, "Write the report here instead of stdout");

  auto* reeb_cmd = app.add_subcommand("reeb", "Reeb graph of a function or Reeb space of a map");
  reeb_cmd->add_option("input", o.input, "Map or function file")->required()->check(CLI::ExistingFile);
  auto* graph_flag = reeb_cmd->add_flag("--graph", o.graph, "Reeb graph (function input)");
  reeb_cmd->add_flag("--space", o.space, "Reeb space")->excludes(graph_flag);
  reeb_cmd->add_flag("--dot", o.dot, "Emit the Reeb graph in DOT");
  reeb_cmd->add_flag("--detail", o.detail, "Include strata table and realization (space only)");
  reeb_cmd->add_option("-o,--output", o.output, "Write the report here instead of stdout");

  auto* fp_cmd = app.add_subcommand("fiber-power", "Betti numbers of the (p+1)-fold fiber power");
  fp_cmd->add_option("input", o.input, "Map or function file")->required()->check(CLI::ExistingFile);
  fp_cmd->add_option("-p,--p", o.p, "Number of extra factors (p >= 0)")->capture_default_str();
  fp_cmd->add_option("--method", o.method, "cellular or nerve")
      ->check(CLI::IsMember({"cellular", "nerve"}))
      ->capture_default_str();
  fp_cmd->add_option("--cell-cap", o.cell_cap, "Maximum number of cells or nerve simplices")
      ->check(CLI::PositiveNumber);
  fp_cmd->add_option("-o,--output", o.output, "Write the report here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Check the descent, b1 and quotient properties");
  verify_cmd->add_option("input", o.input, "Map or function file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--descent", o.descent, "Check the descent inequality for p <= P");
  verify_cmd->add_option("--target", o.target, "Descent target: image or reeb")
      ->check(CLI::IsMember({"image", "reeb"}))
      ->capture_default_str();
  verify_cmd->add_flag("--b1", o.b1, "Check b1(Reeb) <= b1(domain) per component");
  verify_cmd->add_flag("--quotient", o.quotient, "Check the quotient map");
  verify_cmd->add_option("--method", o.method, "Fiber powers by cellular or nerve model")
      ->check(CLI::IsMember({"cellular", "nerve"}))
      ->capture_default_str();
  verify_cmd->add_option("--cell-cap", o.cell_cap, "Maximum number of cells or nerve simplices")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", o.threads, "Worker threads for fiber powers")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  verify_cmd->add_option("-o,--output", o.output, "Write the report here instead of stdout");

  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate a Betti-number bound exactly");
  bounds_cmd->add_option("name", o.bound, "closed, general, sign-components, reeb or univariate")
      ->required()
      ->check(CLI::IsMember({"closed", "general", "sign-components", "reeb", "univariate"}));
  for (auto [flag, target] : {std::pair{"--s", &o.s}, std::pair{"--d", &o.d}, std::pair{"--k", &o.k},
                              std::pair{"--n", &o.n}, std::pair{"--m", &o.m}, std::pair{"--c", &o.c}}) {
    bounds_cmd->add_option(flag, *target)->check(CLI::PositiveNumber);
  }
  bounds_cmd->add_option("--poly", o.polys, "Polynomial in X (univariate; repeatable)");
  bounds_cmd->add_option("--compare", o.compare, "Map file whose Reeb space is compared (reeb only)")
      ->check(CLI::ExistingFile);
  bounds_cmd->add_option("-o,--output", o.output, "Write the report here instead of stdout");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "List or emit built-in fixtures");
  fixtures_cmd->require_subcommand(1);
  auto* list_cmd = fixtures_cmd->add_subcommand("list", "List fixtures and their parameters");
  list_cmd->add_option("-o,--output", o.output, "Write the list here instead of stdout");
  auto* emit_cmd = fixtures_cmd->add_subcommand("emit", "Write a fixture as complex/map/function files");
  emit_cmd->add_option("name", o.fixture, "Fixture name")->required();
  emit_cmd->add_option("--param", o.params, "key=value (repeatable)");
  emit_cmd->add_option("-o,--output", o.output, "Output directory (default: current directory)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (betti_cmd->parsed()) return cmd_betti(o, out);
    if (reeb_cmd->parsed()) return cmd_reeb(o, out);
    if (fp_cmd->parsed()) return cmd_fiber_power(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (bounds_cmd->parsed()) return cmd_bounds(o, out);
    if (list_cmd->parsed()) return cmd_fixtures_list(out, o.output);
    return cmd_fixtures_emit(o, out);
  } catch (const Error& e) {
    err << "reebforge: " << e.what() << '\n';
    return e.kind() == ErrorKind::BudgetExceeded ? kBudgetExceeded : kUsageError;
  } catch (const UsageError& e) {
    err << "reebforge: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "reebforge: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "reebforge: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace reebforge::cli
