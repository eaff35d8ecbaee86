#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include <json.hpp>

#include "dflow/flow.hpp"

namespace dflow {

using Json = nlohmann::ordered_json;

constexpr int format_version = 1;

/// Reads and parses a JSON file; ParseError carries line and column.
Json read_json(const std::filesystem::path& file);

/// "k.i" or "k.i[d0 d1 ...]", as printed by to_string(Simplex).
Simplex parse_simplex(const std::string& text);

/// {"builtin": "point" | "empty" | "simplex" | "boundary" | "discrete", "n": k}
/// or {"vertices": v, "simplices": [[faces of each 1-simplex], ...]}.
FiniteSimplicialSet parse_simplicial_set(const Json& j);
Json export_simplicial_set(const FiniteSimplicialSet& s);

/// A flow built from a document, with the names of its generators.
struct LoadedFlow {
  std::string kind;
  FlowPtr flow;
  /// Edge names of free documents.
  std::map<std::string, int> edges;
  /// presented_discrete: path name -> (from, to, vertex of P_{from,to}).
  std::map<std::string, std::tuple<int, int, int>> paths;
};

LoadedFlow load_flow(const Json& doc);
LoadedFlow load_flow_file(const std::filesystem::path& file);

struct LoadedMorphism {
  LoadedFlow source;
  LoadedFlow target;
  FlowMorphism morphism;
  /// Index of an exact-sequence map to replace by zero (mutation testing).
  std::optional<int> zero_map;
};

/// Sources and targets are inline documents or {"path": ...} relative to base.
LoadedMorphism load_morphism(const Json& doc, const std::filesystem::path& base = {});
LoadedMorphism load_morphism_file(const std::filesystem::path& file);

/// Document reproducing the flow: free, presented_discrete, glob or cube.
/// Throws std::invalid_argument for flows outside these forms.
Json export_flow(const Flow& x);

}  // namespace dflow
