#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dflow/constructions.hpp"
#include "dflow/errors.hpp"

namespace dflow {

using StatePair = std::pair<int, int>;
using StateTriple = std::tuple<int, int, int>;

struct LabeledEdge {
  int from = 0;
  int to = 0;
  SimplicialSetPtr label;
  std::string name;
};

/// Directed graph whose edges carry simplicial sets; presents a free flow.
struct LabeledDigraph {
  std::vector<std::string> vertices;
  std::vector<LabeledEdge> edges;

  /// Vertices of some directed cycle, if any (first vertex repeated at the end).
  std::optional<std::vector<int>> find_cycle() const;
  LabeledDigraph reversed() const;
};

/// Composition P_{a,b} x P_{b,c} -> P_{a,c}.
struct Composition {
  std::shared_ptr<const Product> domain;
  SimplicialMap map;
};

/// Bookkeeping of a free flow: P_{a,b} is the disjoint union, over directed
/// edge-paths from a to b, of the products of the edge labels.
struct FreeStructure {
  struct Summand {
    std::vector<int> edges;
    std::shared_ptr<const Product> product;
  };
  LabeledDigraph graph;
  std::map<StatePair, std::vector<Summand>> summands;
  std::map<StatePair, DisjointUnion> unions;
};

/// A flow with finitely many states and finite path spaces.
///
/// Path spaces are indexed by ordered state pairs; only nonempty ones are
/// stored. Source and target of a path are implicit in its index.
class Flow {
 public:
  Flow() = default;

  const std::vector<std::string>& states() const { return states_; }
  int state_count() const { return static_cast<int>(states_.size()); }
  /// Throws ValidationError for unknown names.
  int state_index(const std::string& name) const;

  bool has_paths(int a, int b) const { return paths_.count({a, b}) > 0; }
  /// Empty set when there are no paths.
  SimplicialSetPtr path_space(int a, int b) const;
  const std::map<StatePair, SimplicialSetPtr>& path_spaces() const { return paths_; }
  const std::map<StateTriple, Composition>& compositions() const { return compositions_; }
  const Composition& composition(int a, int b, int c) const;

  /// x * y for simplices x of P_{a,b} and y of P_{b,c} of equal dimension.
  Simplex compose(int a, int b, int c, const Simplex& x, const Simplex& y) const;

  bool cofibrant() const { return cofibrant_; }
  const FreeStructure* free_structure() const { return free_.get(); }
  int total_path_simplices() const;

 private:
  friend class FlowBuilder;
  std::vector<std::string> states_;
  std::map<StatePair, SimplicialSetPtr> paths_;
  std::map<StateTriple, Composition> compositions_;
  bool cofibrant_ = false;
  std::shared_ptr<const FreeStructure> free_;
};

using FlowPtr = std::shared_ptr<const Flow>;

inline FlowPtr share(Flow f) { return std::make_shared<const Flow>(std::move(f)); }

/// Assembles a flow from path spaces and composition rules.
class FlowBuilder {
 public:
  /// Receives the two components of a nondegenerate product simplex and
  /// returns their composite in P_{a,c}.
  using Rule = std::function<Simplex(const Simplex&, const Simplex&)>;

  explicit FlowBuilder(std::vector<std::string> states);

  FlowBuilder& set_paths(int a, int b, SimplicialSetPtr space);
  FlowBuilder& set_composition(int a, int b, int c, const Rule& rule);
  FlowBuilder& set_cofibrant(bool flag);
  FlowBuilder& set_free_structure(std::shared_ptr<const FreeStructure> free);

  /// Throws ValidationError when a composable pair has no composition.
  Flow build();

 private:
  Flow flow_;
  std::map<StateTriple, Rule> rules_;
};

struct ValidationReport {
  std::vector<std::string> problems;
  /// First composable triple (a, b, c, d) where associativity fails.
  std::optional<std::tuple<int, int, int, int>> broken_associator;

  bool ok() const { return problems.empty(); }
};

/// Path spaces, composition maps, and associativity on every composable
/// triple of path spaces.
ValidationReport validate(const Flow& x);

Flow glob(SimplicialSetPtr label);
Flow directed_segment();
Flow terminal_flow();
Flow empty_flow();
/// Paths: one point from a to b whenever a < b strictly.
Flow poset_flow(const Poset& p, std::vector<std::string> names = {});
/// Throws ValidationError naming a cycle when the digraph is not acyclic.
Flow free_flow(const LabeledDigraph& g);
/// 1 <= n <= 4; states are bit strings of length n.
Flow cube_flow(int n);
/// Discrete-path flow from named point paths and a total composition table.
struct PresentedPath {
  std::string name;
  int from = 0;
  int to = 0;
};
Flow presented_discrete_flow(std::vector<std::string> states, std::vector<PresentedPath> paths,
                             const std::map<std::pair<int, int>, int>& table);

Flow restrict(const Flow& x, const std::vector<int>& states);
Flow opposite(const Flow& x);
Flow coproduct(const Flow& x, const Flow& y);
/// Free flow on the union of the digraphs of x and y with y's state
/// shared[i].second glued to x's state shared[i].first.
Flow pushout_over_states(const Flow& x, const Flow& y,
                         const std::vector<std::pair<int, int>>& shared);

/// A morphism of flows: a state map and path-space maps.
struct FlowMorphism {
  FlowPtr source;
  FlowPtr target;
  std::vector<int> state_map;
  std::map<StatePair, SimplicialMap> path_maps;

  static FlowMorphism identity(const FlowPtr& x);
  /// Maps, endpoints and f(x * y) = f(x) * f(y).
  std::vector<std::string> check() const;
  Simplex apply(int a, int b, const Simplex& s) const { return path_maps.at({a, b})(s); }
};

FlowMorphism compose(const FlowMorphism& g, const FlowMorphism& f);

/// Extends edge maps label(e) -> P_{f(from), f(to)} Y over a free source.
FlowMorphism extend_free_morphism(const FlowPtr& source, const FlowPtr& target,
                                  std::vector<int> state_map,
                                  const std::vector<SimplicialMap>& edge_maps);

/// For sources whose path spaces are discrete: images of the given points;
/// points left unspecified must be composites and are mapped accordingly.
FlowMorphism extend_discrete_morphism(
    const FlowPtr& source, const FlowPtr& target, std::vector<int> state_map,
    const std::map<std::tuple<int, int, int>, Simplex>& point_images);

/// Restriction of f to X|A -> Y|f(A), with A sorted.
FlowMorphism restrict_morphism(const FlowMorphism& f, const std::vector<int>& states);

}  // namespace dflow
