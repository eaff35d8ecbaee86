#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dflow/flow.hpp"

namespace dflow {

enum class Side { minus, plus };
enum class CofibrancyMode { strict, permissive };

/// The branching (minus) or merging (plus) space of a flow, as the quotient
/// of the total path space.
struct GermSpace {
  Side side = Side::minus;
  SimplicialSetPtr total;
  /// state_of[v]: the state of the germ vertex v.
  std::vector<int> state_of;
  /// The total path space as a disjoint union over the pairs listed.
  DisjointUnion paths;
  std::vector<StatePair> pairs;
  SimplicialMap germ_projection;
  std::vector<std::string> warnings;

  /// Germ of the simplex s of P_{a,b}.
  Simplex germ(int a, int b, const Simplex& s) const;
  /// Part of `paths` holding P_{a,b}; -1 when empty.
  int part(int a, int b) const;
  /// State of a nondegenerate simplex.
  int state_of_simplex(int dim, int index) const;
};

GermSpace germ_space(const Flow& x, Side side);
GermSpace branching_space(const Flow& x);
GermSpace merging_space(const Flow& x);

/// The germs at one state.
Subcomplex germ_component(const GermSpace& g, int state);
FiniteSimplicialSet branching_component(const Flow& x, int state);
FiniteSimplicialSet merging_component(const Flow& x, int state);

/// Plain germ space for flows flagged cofibrant; otherwise rejected
/// (strict) or computed with a warning (permissive).
GermSpace homotopy_germ_space(const Flow& x, Side side,
                              CofibrancyMode mode = CofibrancyMode::strict);

/// For free flows: germs retract onto first edges, so P-_a is the disjoint
/// union of the labels of the edges leaving a. Parts follow edge order.
GermSpace free_branching_closed_form(const LabeledDigraph& g);

struct UniversalVerdict {
  bool coequalizes = false;
  /// Simplices of the total path space with different images.
  std::optional<std::pair<Simplex, Simplex>> witness;
  std::optional<SimplicialMap> factor;
  bool unique = false;
};

/// phi is a map out of g.paths.set; finds the factorization through the
/// germ projection when phi coequalizes.
UniversalVerdict verify_universal_property(const Flow& x, const GermSpace& g,
                                           const SimplicialMap& phi);

/// Induced map of germ spaces, given both germ spaces.
SimplicialMap germ_map(const FlowMorphism& f, const GermSpace& source, const GermSpace& target);
SimplicialMap branching_map(const FlowMorphism& f);
SimplicialMap merging_map(const FlowMorphism& f);

}  // namespace dflow
