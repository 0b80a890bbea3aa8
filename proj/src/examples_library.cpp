// Curated golden examples. Expected coefficients were computed with an
// independent Cramer's-rule oracle before being written down here; the unit
// and acceptance suites recheck them with a separate Cramer implementation.

#include <string>

#include "ratpull/configlib.hpp"
#include "ratpull/error.hpp"

namespace ratpull {

namespace {

RatVector parse_all(std::initializer_list<const char*> items) {
  RatVector out;
  for (const char* s : items) out.push_back(Rational::parse(s));
  return out;
}

RatVector unit(std::size_t r, std::size_t k) {
  RatVector v(r, Rational(0));
  v[k] = Rational(1);
  return v;
}

DualGraph minus_two_graph(const std::string& prefix, std::size_t n,
                          std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
  DualGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    g.vertices.push_back({prefix + std::to_string(i + 1), Rational(-2)});
  }
  for (auto [i, j] : edges) g.edges.push_back({i, j, 1});
  return g;
}

ExampleEntry surface_entry(std::string name, DualGraph g, RatVector lambda, RatVector expected,
                           std::string provenance) {
  ExampleEntry e;
  e.name = std::move(name);
  e.config = graph_to_config(g);
  e.divisor.lambda = std::move(lambda);
  e.expected_coefficients = std::move(expected);
  e.provenance = std::move(provenance);
  e.graph = std::move(g);
  return e;
}

ExampleEntry matrix_entry(std::string name, RatMatrix phi, RatVector lambda, RatVector expected,
                          std::string provenance) {
  ExampleEntry e;
  e.name = std::move(name);
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    e.config.divisors.push_back("E" + std::to_string(i + 1));
    e.config.chosen_curves.push_back("C" + std::to_string(i + 1));
  }
  e.config.phi = std::move(phi);
  e.divisor.lambda = std::move(lambda);
  e.expected_coefficients = std::move(expected);
  e.provenance = std::move(provenance);
  return e;
}

// lambda + c * phi must vanish on every chosen curve.
void check_entry(const ExampleEntry& e) {
  e.config.check_invariants();
  e.divisor.check_invariants(e.config);
  if (e.outcome != ExpectedOutcome::Coefficients) return;
  const RatVector residual =
      add(e.divisor.lambda, vec_mat(e.expected_coefficients, e.config.phi));
  for (const auto& x : residual) {
    if (!x.is_zero()) {
      throw Error(ErrorKind::InternalInconsistency,
                  "builtin example '" + e.name + "' has inconsistent expected coefficients");
    }
  }
}

std::vector<ExampleEntry> build_examples() {
  std::vector<ExampleEntry> out;

  out.push_back(surface_entry("A1", minus_two_graph("E", 1, {}), unit(1, 0),
                              parse_all({"1/2"}),
                              "rational double point A1 (node); f*(D) = D' + E/2"));
  out.push_back(surface_entry("A2", minus_two_graph("E", 2, {{0, 1}}), unit(2, 0),
                              parse_all({"2/3", "1/3"}), "A2 chain, lambda = e1"));
  out.push_back(surface_entry("A3", minus_two_graph("E", 3, {{0, 1}, {1, 2}}), unit(3, 0),
                              parse_all({"3/4", "1/2", "1/4"}),
                              "A3 chain, lambda = e1; m_i = (4 - i)/4"));
  out.push_back(surface_entry("A4", minus_two_graph("E", 4, {{0, 1}, {1, 2}, {2, 3}}),
                              unit(4, 0), parse_all({"4/5", "3/5", "2/5", "1/5"}),
                              "A4 chain, lambda = e1"));
  out.push_back(surface_entry("D4", minus_two_graph("E", 4, {{0, 1}, {0, 2}, {0, 3}}),
                              unit(4, 0), parse_all({"2", "1", "1", "1"}),
                              "D4: central vertex E1 with three leaves, lambda = e1"));
  out.push_back(surface_entry(
      "E6", minus_two_graph("E", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}), unit(6, 0),
      parse_all({"4/3", "5/3", "2", "4/3", "2/3", "1"}),
      "E6: chain E1-E5, branch E6 on E3, lambda = e1"));
  out.push_back(surface_entry(
      "E7", minus_two_graph("E", 7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}}),
      unit(7, 0), parse_all({"2", "3", "4", "3", "2", "1", "2"}),
      "E7: chain E1-E6, branch E7 on E3, lambda = e1"));
  out.push_back(surface_entry(
      "E8",
      minus_two_graph("E", 8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}}),
      unit(8, 0), parse_all({"4", "7", "10", "8", "6", "4", "2", "5"}),
      "E8: chain E1-E7, branch E8 on E3, lambda = e1"));

  for (long long n = 2; n <= 10; ++n) {
    DualGraph g;
    g.vertices.push_back({"E1", Rational(-n)});
    out.push_back(surface_entry("cyclic-1/" + std::to_string(n), std::move(g), unit(1, 0),
                                RatVector{rat(1, n)},
                                "single -" + std::to_string(n) +
                                    " curve: cyclic quotient 1/" + std::to_string(n) +
                                    "(1,1)"));
  }

  {
    DualGraph g;
    g.vertices.push_back({"E1", Rational(-3)});
    g.vertices.push_back({"E2", Rational(-2)});
    g.edges.push_back({0, 1, 1});
    out.push_back(surface_entry("HJ-5-2", std::move(g), unit(2, 0), parse_all({"2/5", "1/5"}),
                                "Hirzebruch-Jung chain 5/2 = [3,2]"));
  }

  out.push_back(matrix_entry("nonsymmetric", RatMatrix{{-2, 3}, {1, -4}}, parse_all({"1", "1"}),
                             parse_all({"1", "1"}),
                             "non-symmetric intersection matrix of a higher-dimensional "
                             "configuration; A = -phi^t = [[2,-1],[-3,4]]"));

  out.push_back(matrix_entry("Q-cartier",
                             RatMatrix{{rat(-3, 2), rat(1, 2)}, {1, -2}},
                             parse_all({"1", "1"}), parse_all({"6/5", "4/5"}),
                             "rational intersection numbers from Q-Cartier divisors"));

  {
    // A2 with an extra curve on E1 numerically twice the chosen curve C1.
    ExampleEntry e = surface_entry("A2-extra-curve", minus_two_graph("E", 2, {{0, 1}}),
                                   unit(2, 0), parse_all({"2/3", "1/3"}),
                                   "A2 with an extra curve C' = 2 C1 on E1");
    e.config.extra_curves.push_back({0, parse_all({"-4", "2"}), "C'"});
    e.divisor.extra_lambda = parse_all({"2"});
    e.graph.reset();
    out.push_back(std::move(e));
  }

  {
    ExampleEntry e = matrix_entry("disconnected", RatMatrix{{-2, 0}, {0, -2}},
                                  parse_all({"1", "1"}), {},
                                  "two disjoint A1 configurations; refused");
    e.config.adjacency = Adjacency{{false, false}, {false, false}};
    e.outcome = ExpectedOutcome::DisconnectedConfiguration;
    out.push_back(std::move(e));
  }

  {
    ExampleEntry e;
    e.name = "conifold";
    e.config.phi = RatMatrix(0, 0);
    e.divisor.vertical_curves.push_back({"C", Rational(1)});
    e.outcome = ExpectedOutcome::NoRationalPullback;
    e.provenance =
        "small resolution of the conifold: no exceptional divisor, but the relatively "
        "ample sheaf has positive degree on the exceptional curve";
    out.push_back(std::move(e));
  }

  for (const auto& e : out) check_entry(e);
  return out;
}

}  // namespace

const std::vector<ExampleEntry>& builtin_examples() {
  static const std::vector<ExampleEntry> examples = build_examples();
  return examples;
}

const ExampleEntry& find_example(std::string_view name) {
  for (const auto& e : builtin_examples()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorKind::UnknownExample, "unknown example '" + std::string(name) + "'");
}

Json example_to_json(const ExampleEntry& e) {
  Json doc = config_to_json(e.config);
  doc["name"] = e.name;
  doc["provenance"] = e.provenance;
  doc["divisor"] = divisor_to_json(e.divisor);
  doc["divisor"].erase("format_version");
  switch (e.outcome) {
    case ExpectedOutcome::Coefficients:
      doc["expected"] = vector_to_json(e.expected_coefficients);
      break;
    case ExpectedOutcome::NoRationalPullback:
      doc["expected"] = "NoRationalPullback";
      break;
    case ExpectedOutcome::DisconnectedConfiguration:
      doc["expected"] = "DisconnectedConfiguration";
      break;
  }
  if (e.graph) doc["graph"] = graph_to_json(*e.graph);
  return doc;
}

std::string run_example(const ExampleEntry& e) {
  try {
    const PullbackResult result = e.graph ? mumford_surface_pullback(e.config, e.divisor)
                                          : compute_pullback(e.config, e.divisor);
    if (e.outcome != ExpectedOutcome::Coefficients) {
      return e.name + ": expected a refusal, got coefficients";
    }
    if (result.coefficients != e.expected_coefficients) {
      std::string got;
      for (const auto& c : result.coefficients) got += (got.empty() ? "" : ", ") + c.to_string();
      return e.name + ": coefficient mismatch, got (" + got + ")";
    }
    for (const auto& r : result.extra_residuals) {
      if (!r.is_zero()) return e.name + ": nonzero extra-curve residual " + r.to_string();
    }
    return {};
  } catch (const Error& err) {
    if (e.outcome == ExpectedOutcome::NoRationalPullback &&
        err.kind() == ErrorKind::NoRationalPullback) {
      return {};
    }
    if (e.outcome == ExpectedOutcome::DisconnectedConfiguration &&
        err.kind() == ErrorKind::DisconnectedConfiguration) {
      return {};
    }
    return e.name + ": " + std::string(to_string(err.kind())) + ": " + err.what();
  }
}

}  // namespace ratpull
