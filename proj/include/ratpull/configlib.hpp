#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratpull/mmatrix.hpp"
#include "ratpull/pullback.hpp"

namespace ratpull {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormatVersion = "1";

// ---------------------------------------------------------------------------
// Dual graphs (surface case)

struct GraphVertex {
  std::string label;
  Rational self_intersection;
};

struct GraphEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  long long multiplicity = 1;
};

struct DualGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  /// Negative self-intersections, no loops, positive multiplicities, valid
  /// endpoints, one record per unordered pair. Throws InvalidGraph.
  void check_invariants() const;
};

/// phi(i, i) = self-intersection, phi(i, j) = edge multiplicity or 0, chosen
/// curves are the divisors themselves, adjacency read off the edges.
IntersectionConfig graph_to_config(const DualGraph& g);

// ---------------------------------------------------------------------------
// Documents
//
// Rationals are JSON strings "p/q" or "p" (JSON integers are also accepted on
// input); floats are rejected. Every document carries "format_version": "1".
// Parse failures throw ParseError naming the JSON pointer of the bad value;
// structural failures throw InvariantViolation.

Json rational_to_json(const Rational& r);
Json vector_to_json(const RatVector& v);
Json matrix_to_json(const RatMatrix& m);

Rational rational_from_json(const Json& j, const std::string& where);
RatVector vector_from_json(const Json& j, const std::string& where);
RatMatrix matrix_from_json(const Json& j, const std::string& where);

Json config_to_json(const IntersectionConfig& cfg);
IntersectionConfig config_from_json(const Json& doc);

Json divisor_to_json(const DivisorInput& d);
DivisorInput divisor_from_json(const Json& doc, const std::string& where = "");

Json graph_to_json(const DualGraph& g);
DualGraph graph_from_json(const Json& doc);

/// Text-level entry points: parse + validate.
Json parse_document(std::string_view text);
IntersectionConfig load_config(std::string_view text);
std::string save_config(const IntersectionConfig& cfg);
DualGraph load_graph(std::string_view text);
DivisorInput load_divisor(std::string_view text, const IntersectionConfig& cfg);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);

Json report_to_json(const MMatrixReport& report);
Json result_to_json(const IntersectionConfig& cfg, const PullbackResult& result);

// ---------------------------------------------------------------------------
// Builtin example library

enum class ExpectedOutcome { Coefficients, NoRationalPullback, DisconnectedConfiguration };

struct ExampleEntry {
  std::string name;
  IntersectionConfig config;
  DivisorInput divisor;
  RatVector expected_coefficients;
  ExpectedOutcome outcome = ExpectedOutcome::Coefficients;
  std::string provenance;
  std::optional<DualGraph> graph;  // present for surface (dual graph) entries
};

/// Curated examples. Expected coefficients are checked against the chosen
/// curve residual equations when the library is first built.
const std::vector<ExampleEntry>& builtin_examples();

/// Throws UnknownExample.
const ExampleEntry& find_example(std::string_view name);

Json example_to_json(const ExampleEntry& e);

/// Runs an entry and compares against its expectation exactly. Returns an
/// empty string on a match, otherwise a description of the mismatch.
std::string run_example(const ExampleEntry& e);

}  // namespace ratpull
