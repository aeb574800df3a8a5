#include "reebforge/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "reebforge/error.hpp"

namespace reebforge {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void structure_error(std::string_view source, const std::string& where,
                                  const std::string& what) {
  throw Error(ErrorKind::ParseError, std::string(source) + ": " + where + ": " + what);
}

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Byte offset -> line and column (both 1-based).
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (auto cut = message.find("parse error"); cut != std::string::npos) message = message.substr(cut);
    throw Error(ErrorKind::ParseError, std::string(source) + ": line " + std::to_string(line) +
                                           ", column " + std::to_string(column) + ": " + message);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void require_object(const Json& j, std::string_view source, const std::string& where) {
  if (!j.is_object()) structure_error(source, where, "expected an object");
}

void reject_unknown(const Json& j, std::initializer_list<std::string_view> allowed,
                    std::string_view source, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      structure_error(source, where, "unknown field \"" + key + "\"");
    }
  }
}

std::uint64_t as_index(const Json& j, std::string_view source, const std::string& where) {
  const bool negative = j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0;
  if (!j.is_number_integer() || negative) {
    structure_error(source, where, "expected a non-negative integer");
  }
  const auto v = j.get<std::uint64_t>();
  if (v > 0xffffffffu) structure_error(source, where, "integer too large");
  return v;
}

Rational as_rational(const Json& j, std::string_view source, const std::string& where) {
  if (j.is_number_integer()) {
    return Rational(BigInt(j.dump()));
  }
  if (!j.is_string()) structure_error(source, where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    structure_error(source, where, e.what());
  }
}

SimplicialComplex complex_from_json(const Json& j, std::string_view source, const std::string& where) {
  require_object(j, source, where);
  reject_unknown(j, {"ambient_dim", "vertex_count", "vertices", "simplices", "close_faces"}, source,
                 where);
  std::vector<Point> coords;
  std::optional<std::size_t> ambient;
  if (j.contains("ambient_dim")) ambient = as_index(j["ambient_dim"], source, where + "/ambient_dim");
  if (j.contains("vertices")) {
    const Json& vs = j["vertices"];
    if (!vs.is_array()) structure_error(source, where + "/vertices", "expected an array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string at = where + "/vertices/" + std::to_string(i);
      if (!vs[i].is_array()) structure_error(source, at, "expected a coordinate array");
      Point p;
      for (std::size_t c = 0; c < vs[i].size(); ++c) {
        p.push_back(as_rational(vs[i][c], source, at + "/" + std::to_string(c)));
      }
      if (ambient && p.size() != *ambient) {
        throw Error(ErrorKind::InconsistentCoordinates,
                    std::string(source) + ": " + at + ": expected " + std::to_string(*ambient) +
                        " coordinates, got " + std::to_string(p.size()));
      }
      coords.push_back(std::move(p));
    }
  }
  if (!j.contains("simplices")) structure_error(source, where, "missing field \"simplices\"");
  const Json& ss = j["simplices"];
  if (!ss.is_array()) structure_error(source, where + "/simplices", "expected an array");
  std::vector<Simplex> simplices;
  std::size_t max_vertex_plus_one = 0;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const std::string at = where + "/simplices/" + std::to_string(i);
    if (!ss[i].is_array()) structure_error(source, at, "expected an array of vertex ids");
    Simplex s;
    for (std::size_t c = 0; c < ss[i].size(); ++c) {
      s.push_back(static_cast<Vertex>(as_index(ss[i][c], source, at + "/" + std::to_string(c))));
      max_vertex_plus_one = std::max<std::size_t>(max_vertex_plus_one, s.back() + 1);
    }
    simplices.push_back(std::move(s));
  }
  std::size_t vertex_count = max_vertex_plus_one;
  if (!coords.empty()) vertex_count = coords.size();
  if (j.contains("vertex_count")) {
    vertex_count = as_index(j["vertex_count"], source, where + "/vertex_count");
    if (!coords.empty() && coords.size() != vertex_count) {
      throw Error(ErrorKind::InconsistentCoordinates,
                  std::string(source) + ": vertex_count disagrees with the number of vertices");
    }
  }
  bool close = false;
  if (j.contains("close_faces")) {
    if (!j["close_faces"].is_boolean()) structure_error(source, where + "/close_faces", "expected a boolean");
    close = j["close_faces"].get<bool>();
  }
  return SimplicialComplex::validate(vertex_count, std::move(simplices),
                                     close ? FaceClosure::Complete : FaceClosure::Require,
                                     std::move(coords));
}

SimplicialComplex complex_field(const Json& j, const char* field, const std::filesystem::path& base_dir,
                                std::string_view source) {
  if (!j.contains(field)) structure_error(source, "", std::string("missing field \"") + field + "\"");
  const Json& v = j[field];
  if (v.is_string()) {
    const std::filesystem::path path = base_dir / v.get<std::string>();
    return complex_from_json(parse_json(read_file(path), path.string()), path.string(), "");
  }
  return complex_from_json(v, source, std::string("/") + field);
}

Json complex_to_json(const SimplicialComplex& k) {
  Json j;
  if (k.has_coordinates()) {
    j["ambient_dim"] = k.ambient_dim();
    Json vs = Json::array();
    for (const Point& p : k.coordinates()) {
      Json row = Json::array();
      for (const Rational& x : p) row.push_back(to_string(x));
      vs.push_back(std::move(row));
    }
    j["vertices"] = std::move(vs);
  } else {
    j["vertex_count"] = k.vertex_count();
  }
  Json ss = Json::array();
  for (SimplexId id = 0; id < k.size(); ++id) {
    const auto s = k.simplex(id);
    ss.push_back(Json(std::vector<Vertex>(s.begin(), s.end())));
  }
  j["simplices"] = std::move(ss);
  return j;
}

Json betti_json(const BettiVector& b) {
  Json j;
  j["betti"] = b.b;
  j["total"] = b.total();
  j["euler"] = b.euler();
  return j;
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace

SimplicialComplex parse_complex(std::string_view text, std::string_view source) {
  return complex_from_json(parse_json(text, source), source, "");
}

SimplicialMap parse_map(std::string_view text, const std::filesystem::path& base_dir,
                        std::string_view source) {
  const Json j = parse_json(text, source);
  require_object(j, source, "");
  reject_unknown(j, {"domain", "codomain", "vertex_images"}, source, "");
  auto domain = share(complex_field(j, "domain", base_dir, source));
  auto codomain = share(complex_field(j, "codomain", base_dir, source));
  if (!j.contains("vertex_images") || !j["vertex_images"].is_array()) {
    structure_error(source, "/vertex_images", "expected an array of codomain vertex ids");
  }
  std::vector<Vertex> images;
  const Json& vi = j["vertex_images"];
  for (std::size_t i = 0; i < vi.size(); ++i) {
    const auto w = as_index(vi[i], source, "/vertex_images/" + std::to_string(i));
    if (w >= codomain->vertex_count()) {
      throw Error(ErrorKind::VertexOutOfRange, std::string(source) + ": /vertex_images/" +
                                                   std::to_string(i) + ": codomain has no vertex " +
                                                   std::to_string(w));
    }
    images.push_back(static_cast<Vertex>(w));
  }
  if (images.size() != domain->vertex_count()) {
    throw Error(ErrorKind::ValueCountMismatch,
                std::string(source) + ": " + std::to_string(images.size()) +
                    " vertex images for " + std::to_string(domain->vertex_count()) + " vertices");
  }
  return SimplicialMap::check(std::move(domain), std::move(codomain), std::move(images));
}

PLFunction parse_function(std::string_view text, const std::filesystem::path& base_dir,
                          std::string_view source) {
  const Json j = parse_json(text, source);
  require_object(j, source, "");
  reject_unknown(j, {"complex", "values"}, source, "");
  auto complex = share(complex_field(j, "complex", base_dir, source));
  if (!j.contains("values") || !j["values"].is_array()) {
    structure_error(source, "/values", "expected an array of rationals");
  }
  std::vector<Rational> values;
  for (std::size_t i = 0; i < j["values"].size(); ++i) {
    values.push_back(as_rational(j["values"][i], source, "/values/" + std::to_string(i)));
  }
  return PLFunction(std::move(complex), std::move(values));
}

SimplicialComplex read_complex(const std::filesystem::path& path) {
  return parse_complex(read_file(path), path.string());
}

SimplicialMap read_map(const std::filesystem::path& path) {
  return parse_map(read_file(path), path.parent_path(), path.string());
}

PLFunction read_function(const std::filesystem::path& path) {
  return parse_function(read_file(path), path.parent_path(), path.string());
}

DocumentKind sniff_document(const std::filesystem::path& path) {
  const Json j = parse_json(read_file(path), path.string());
  if (j.is_object() && j.contains("vertex_images")) return DocumentKind::Map;
  if (j.is_object() && j.contains("values")) return DocumentKind::Function;
  return DocumentKind::Complex;
}

std::string write_complex(const SimplicialComplex& complex) { return dump(complex_to_json(complex)); }

std::string write_map(const SimplicialMap& map) {
  Json j;
  j["domain"] = complex_to_json(map.domain());
  j["codomain"] = complex_to_json(map.codomain());
  j["vertex_images"] = map.vertex_images();
  return dump(j);
}

std::string write_function(const PLFunction& function) {
  Json j;
  j["complex"] = complex_to_json(function.complex());
  Json values = Json::array();
  for (const Rational& x : function.values()) values.push_back(to_string(x));
  j["values"] = std::move(values);
  return dump(j);
}

std::string betti_report(const BettiVector& betti) { return dump(betti_json(betti)); }

std::string reeb_graph_report(const ReebGraph& graph) {
  Json j = betti_json(graph.betti());
  Json nodes = Json::array();
  for (const auto& n : graph.nodes) {
    Json node;
    node["value"] = to_string(n.value);
    node["component"] = n.level_component;
    node["min_vertex"] = n.min_vertex;
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  Json arcs = Json::array();
  for (auto [a, b] : graph.arcs) arcs.push_back(Json::array({a, b}));
  j["arcs"] = std::move(arcs);
  j["vertex_nodes"] = graph.vertex_node;
  return dump(j);
}

std::string reeb_graph_dot(const ReebGraph& graph) {
  std::ostringstream out;
  out << "graph reeb {\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"value=" << to_string(graph.nodes[i].value) << "\"];\n";
  }
  for (auto [a, b] : graph.arcs) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string reeb_space_report(const ReebComplex& reeb, const SimplicialComplex& codomain,
                              bool detail) {
  Json j = betti_json(betti(*reeb.realization));
  j["strata"] = reeb.strata.size();
  if (detail) {
    Json table = Json::array();
    for (const Stratum& s : reeb.strata) {
      const auto tau = codomain.simplex(s.tau);
      Json row;
      row["tau"] = std::vector<Vertex>(tau.begin(), tau.end());
      row["component"] = s.component;
      table.push_back(std::move(row));
    }
    j["strata_table"] = std::move(table);
    j["realization"] = complex_to_json(*reeb.realization);
  }
  return dump(j);
}

std::string descent_report(const DescentReport& report) {
  Json j;
  j["target"] = report.target == DescentTarget::Image ? "image" : "reeb";
  j["betti_target"] = report.target_betti.b;
  Json powers = Json::array();
  for (const BettiVector& b : report.power_betti) powers.push_back(b.b);
  j["betti_fiber_powers"] = std::move(powers);
  Json rows = Json::array();
  for (const DescentRow& r : report.rows) {
    Json row;
    row["p"] = r.p;
    row["betti_target"] = r.betti_target;
    row["betti_powers"] = r.betti_powers;
    row["bound"] = r.bound;
    row["inequality_holds"] = r.inequality_holds;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["holds"] = report.holds();
  return dump(j);
}

std::string b1_report(const B1Report& report) {
  Json j;
  Json comps = Json::array();
  for (const B1Entry& e : report.components) {
    Json row;
    row["b1_domain"] = e.b1_domain;
    row["b1_reeb"] = e.b1_reeb;
    row["holds"] = e.holds;
    comps.push_back(std::move(row));
  }
  j["components"] = std::move(comps);
  j["holds"] = report.holds();
  return dump(j);
}

std::string quotient_report(const QuotientReport& report) {
  Json j;
  j["strata"] = report.strata;
  j["commutes"] = report.commutes;
  j["fibers_connected"] = report.fibers_connected;
  j["surjective"] = report.surjective;
  j["failures"] = report.failures;
  j["holds"] = report.ok();
  return dump(j);
}

std::string bound_report(std::string_view name,
                         const std::vector<std::pair<std::string, std::uint64_t>>& params,
                         const BigInt& value) {
  Json j;
  j["bound_name"] = name;
  Json p = Json::object();
  for (const auto& [key, v] : params) p[key] = v;
  j["params"] = std::move(p);
  j["value"] = to_string(value);
  return dump(j);
}

}  // namespace reebforge
