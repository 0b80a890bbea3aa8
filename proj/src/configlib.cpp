#include "ratpull/configlib.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "ratpull/error.hpp"

namespace ratpull {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, "missing field '" + key + "'");
  return *it;
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  return j;
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where, "expected a string");
  return j.get<std::string>();
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    parse_fail(where, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

void check_version(const Json& doc) {
  const Json& v = require(doc, "format_version", "");
  if (!v.is_string() || v.get<std::string>() != kFormatVersion) {
    parse_fail("/format_version", "unsupported format version " + v.dump() +
                                      ", expected \"" + std::string(kFormatVersion) + "\"");
  }
}

std::vector<std::string> labels_from_json(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  require_array(j, where);
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(string_from_json(j[k], where + "/" + std::to_string(k)));
  }
  return out;
}

template <typename F>
auto structural(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DimensionMismatch) {
      throw Error(ErrorKind::InvariantViolation, e.what());
    }
    throw;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

void DualGraph::check_invariants() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidGraph, what); };
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].self_intersection.sign() >= 0) {
      fail("vertex '" + vertices[v].label + "' has self-intersection " +
           vertices[v].self_intersection.to_string() + ", must be negative");
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (e.i >= vertices.size() || e.j >= vertices.size()) {
      fail("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
           ") refers to a missing vertex");
    }
    if (e.i == e.j) fail("self-loop at vertex " + std::to_string(e.i));
    if (e.multiplicity <= 0) {
      fail("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
           ") has nonpositive multiplicity");
    }
    if (!seen.insert(std::minmax(e.i, e.j)).second) {
      fail("duplicate edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
    }
  }
}

IntersectionConfig graph_to_config(const DualGraph& g) {
  g.check_invariants();
  const std::size_t r = g.vertices.size();
  std::vector<Rational> entries(r * r, Rational(0));
  Adjacency adj(r, std::vector<bool>(r, false));
  for (std::size_t v = 0; v < r; ++v) entries[v * r + v] = g.vertices[v].self_intersection;
  for (const auto& e : g.edges) {
    entries[e.i * r + e.j] = Rational(e.multiplicity);
    entries[e.j * r + e.i] = Rational(e.multiplicity);
    adj[e.i][e.j] = adj[e.j][e.i] = true;
  }
  IntersectionConfig cfg;
  for (const auto& v : g.vertices) {
    cfg.divisors.push_back(v.label);
    cfg.chosen_curves.push_back(v.label);
  }
  cfg.phi = RatMatrix(r, r, std::move(entries));
  cfg.adjacency = std::move(adj);
  return cfg;
}

// ---------------------------------------------------------------------------

Json rational_to_json(const Rational& r) { return r.to_string(); }

Json vector_to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Json matrix_to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (!j.is_string()) parse_fail(where, "expected a rational string like \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
}

RatVector vector_from_json(const Json& j, const std::string& where) {
  require_array(j, where);
  RatVector out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(rational_from_json(j[k], where + "/" + std::to_string(k)));
  }
  return out;
}

RatMatrix matrix_from_json(const Json& j, const std::string& where) {
  require_array(j, where);
  std::vector<RatVector> rows;
  for (std::size_t k = 0; k < j.size(); ++k) {
    rows.push_back(vector_from_json(j[k], where + "/" + std::to_string(k)));
  }
  return structural([&] { return RatMatrix::from_rows(rows); });
}

Json config_to_json(const IntersectionConfig& cfg) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["divisors"] = cfg.divisors;
  doc["curves"] = cfg.chosen_curves;
  doc["phi"] = matrix_to_json(cfg.phi);
  if (cfg.adjacency) doc["adjacency"] = *cfg.adjacency;
  if (!cfg.extra_curves.empty()) {
    Json extras = Json::array();
    for (const auto& c : cfg.extra_curves) {
      Json e;
      e["name"] = c.name;
      e["host"] = c.host;
      e["row"] = vector_to_json(c.row);
      extras.push_back(std::move(e));
    }
    doc["extra_curves"] = std::move(extras);
  }
  return doc;
}

IntersectionConfig config_from_json(const Json& doc) {
  check_version(doc);
  IntersectionConfig cfg;
  cfg.divisors = labels_from_json(require(doc, "divisors", ""), "/divisors");
  cfg.chosen_curves = labels_from_json(require(doc, "curves", ""), "/curves");
  cfg.phi = matrix_from_json(require(doc, "phi", ""), "/phi");

  if (auto it = doc.find("adjacency"); it != doc.end()) {
    require_array(*it, "/adjacency");
    Adjacency adj;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string row_where = "/adjacency/" + std::to_string(i);
      require_array((*it)[i], row_where);
      std::vector<bool> row;
      for (std::size_t k = 0; k < (*it)[i].size(); ++k) {
        const Json& b = (*it)[i][k];
        if (!b.is_boolean()) parse_fail(row_where + "/" + std::to_string(k), "expected a boolean");
        row.push_back(b.get<bool>());
      }
      adj.push_back(std::move(row));
    }
    cfg.adjacency = std::move(adj);
  }

  if (auto it = doc.find("extra_curves"); it != doc.end()) {
    require_array(*it, "/extra_curves");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "/extra_curves/" + std::to_string(k);
      const Json& e = (*it)[k];
      ExtraCurve c;
      c.name = string_from_json(require(e, "name", where), where + "/name");
      c.host = index_from_json(require(e, "host", where), where + "/host");
      c.row = vector_from_json(require(e, "row", where), where + "/row");
      cfg.extra_curves.push_back(std::move(c));
    }
  }

  cfg.check_invariants();
  return cfg;
}

Json divisor_to_json(const DivisorInput& d) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["lambda"] = vector_to_json(d.lambda);
  if (!d.extra_lambda.empty()) doc["extra_lambda"] = vector_to_json(d.extra_lambda);
  doc["cartier_denominator"] = d.cartier_denominator.get_str();
  if (!d.vertical_curves.empty()) {
    Json curves = Json::array();
    for (const auto& c : d.vertical_curves) {
      Json e;
      e["name"] = c.name;
      e["lambda"] = rational_to_json(c.lambda);
      curves.push_back(std::move(e));
    }
    doc["vertical_curves"] = std::move(curves);
  }
  return doc;
}

DivisorInput divisor_from_json(const Json& doc, const std::string& where) {
  if (where.empty()) check_version(doc);
  DivisorInput d;
  d.lambda = vector_from_json(require(doc, "lambda", where), where + "/lambda");
  if (auto it = doc.find("extra_lambda"); it != doc.end()) {
    d.extra_lambda = vector_from_json(*it, where + "/extra_lambda");
  }
  if (auto it = doc.find("cartier_denominator"); it != doc.end()) {
    const Rational n = rational_from_json(*it, where + "/cartier_denominator");
    if (!n.is_integer() || n.sign() <= 0) {
      parse_fail(where + "/cartier_denominator", "must be a positive integer");
    }
    d.cartier_denominator = n.numerator();
  }
  if (auto it = doc.find("vertical_curves"); it != doc.end()) {
    require_array(*it, where + "/vertical_curves");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string w = where + "/vertical_curves/" + std::to_string(k);
      VerticalCurve c;
      c.name = string_from_json(require((*it)[k], "name", w), w + "/name");
      c.lambda = rational_from_json(require((*it)[k], "lambda", w), w + "/lambda");
      d.vertical_curves.push_back(std::move(c));
    }
  }
  return d;
}

Json graph_to_json(const DualGraph& g) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  Json vertices = Json::array();
  for (const auto& v : g.vertices) {
    Json e;
    e["label"] = v.label;
    e["self_intersection"] = rational_to_json(v.self_intersection);
    vertices.push_back(std::move(e));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json x;
    x["i"] = e.i;
    x["j"] = e.j;
    x["multiplicity"] = e.multiplicity;
    edges.push_back(std::move(x));
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc;
}

DualGraph graph_from_json(const Json& doc) {
  check_version(doc);
  DualGraph g;
  const Json& vertices = require_array(require(doc, "vertices", ""), "/vertices");
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const std::string w = "/vertices/" + std::to_string(k);
    GraphVertex v;
    v.label = string_from_json(require(vertices[k], "label", w), w + "/label");
    v.self_intersection =
        rational_from_json(require(vertices[k], "self_intersection", w), w + "/self_intersection");
    g.vertices.push_back(std::move(v));
  }
  if (auto it = doc.find("edges"); it != doc.end()) {
    require_array(*it, "/edges");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string w = "/edges/" + std::to_string(k);
      GraphEdge e;
      e.i = index_from_json(require((*it)[k], "i", w), w + "/i");
      e.j = index_from_json(require((*it)[k], "j", w), w + "/j");
      if (auto m = (*it)[k].find("multiplicity"); m != (*it)[k].end()) {
        if (!m->is_number_integer()) parse_fail(w + "/multiplicity", "expected an integer");
        e.multiplicity = m->get<long long>();
      }
      g.edges.push_back(e);
    }
  }
  g.check_invariants();
  return g;
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                "byte " + std::to_string(e.byte) + ": " + std::string(e.what()));
  }
}

IntersectionConfig load_config(std::string_view text) {
  return config_from_json(parse_document(text));
}

std::string save_config(const IntersectionConfig& cfg) {
  cfg.check_invariants();
  return config_to_json(cfg).dump(2);
}

DualGraph load_graph(std::string_view text) { return graph_from_json(parse_document(text)); }

DivisorInput load_divisor(std::string_view text, const IntersectionConfig& cfg) {
  DivisorInput d = divisor_from_json(parse_document(text));
  d.check_invariants(cfg);
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json report_to_json(const MMatrixReport& report) {
  Json doc;
  doc["verdict"] = report.verdict;
  doc["minors"] = vector_to_json(report.minors.minors);
  doc["minors_positive"] = report.minors.all_positive;
  doc["inverse_nonneg"] = report.inverse.nonnegative;
  doc["inverse"] = report.inverse.inverse ? matrix_to_json(*report.inverse.inverse) : Json();
  doc["certificate_x"] = report.certificate_x ? vector_to_json(*report.certificate_x) : Json();
  if (report.spectral) {
    Json s;
    s["advisory"] = true;
    s["s"] = report.spectral->s;
    s["rho_hat"] = report.spectral->rho_hat;
    s["converged"] = report.spectral->converged;
    s["iterations"] = report.spectral->iterations;
    doc["spectral_estimate"] = std::move(s);
  } else {
    doc["spectral_estimate"] = nullptr;
  }
  return doc;
}

Json result_to_json(const IntersectionConfig& cfg, const PullbackResult& result) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["divisors"] = cfg.divisors;
  doc["coefficients"] = vector_to_json(result.coefficients);
  doc["common_denominator"] = result.common_denominator.get_str();
  Json numerators = Json::array();
  for (const auto& m : result.numerators) numerators.push_back(m.get_str());
  doc["numerators"] = std::move(numerators);
  doc["full_coefficients"] = vector_to_json(result.full_coefficients);
  doc["projection_residuals"] = vector_to_json(result.projection_residuals);
  doc["extra_residuals"] = vector_to_json(result.extra_residuals);
  doc["effectivity"] = result.effectivity;
  if (result.symmetric_path_agrees) doc["symmetric_path_agrees"] = *result.symmetric_path_agrees;
  doc["mmatrix"] = report_to_json(result.mreport);
  return doc;
}

}  // namespace ratpull
