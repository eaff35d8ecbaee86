#pragma once

#include <string>
#include <vector>

#include "dflow/branching.hpp"
#include "dflow/chains.hpp"

namespace dflow {

/// Normalized chains of the germ space with the states in degree -1.
struct AugmentedComplex {
  GermSpace germs;
  ChainComplex complex;
  /// state_count x germ-vertex matrix sending a germ to its state.
  IntegerMatrix augmentation;
};

AugmentedComplex augmented_complex(const Flow& x, Side side,
                                   CofibrancyMode mode = CofibrancyMode::strict);

/// H-_n (side minus) or H+_n (side plus): H_{n-1} of the augmented complex.
AbelianGroup germ_homology(const Flow& x, Side side, int n,
                           CofibrancyMode mode = CofibrancyMode::strict);
AbelianGroup branching_homology(const Flow& x, int n,
                                CofibrancyMode mode = CofibrancyMode::strict);
AbelianGroup merging_homology(const Flow& x, int n,
                              CofibrancyMode mode = CofibrancyMode::strict);

/// One group of an exact sequence, presented as Z^g / (orders).
struct SequenceNode {
  std::string label;
  AbelianGroup group;
  /// One entry per generator: 0 for free generators, else its order.
  std::vector<Integer> orders;
};

/// A finite sequence 0 -> nodes[0] -> nodes[1] -> ... -> nodes.back() -> 0.
/// maps[i] : nodes[i] -> nodes[i+1] in generator coordinates.
struct LesReport {
  std::vector<SequenceNode> nodes;
  std::vector<IntegerMatrix> maps;
  std::vector<std::string> warnings;
};

struct ExactnessVerdict {
  bool exact = true;
  std::vector<bool> node_exact;
  /// First inexact node, with a class in the kernel outside the image, or
  /// in the image outside the kernel.
  int node = -1;
  IntegerVector witness;
  std::string defect;
};

ExactnessVerdict verify_exactness(const LesReport& r);

/// 0 -> H-_1(X) -> H_0(hoP-X) -> image of the augmentation -> 0.
struct ShortExactVerdict {
  LesReport sequence;
  ExactnessVerdict verdict;
};

ShortExactVerdict short_exact_check(const Flow& x, Side side = Side::minus,
                                    CofibrancyMode mode = CofibrancyMode::strict);

struct ConeBranchingData {
  GermSpace source;
  GermSpace target;
  SimplicialMap germ_map;
  MappingCone cone;
  /// Target states with f(X0) collapsed to one class (listed last).
  std::vector<std::string> cone_states;
  /// cone state of each vertex of cone.set
  std::vector<int> state_of;
};

ConeBranchingData cone_branching_data(const FlowMorphism& f, Side side = Side::minus,
                                      CofibrancyMode mode = CofibrancyMode::strict);

/// ... -> H_{n+1}(X) -> H_{n+1}(Y) -> H_{n+1}(Cf) -> ... -> H_0(hoP X) ->
/// H_0(hoP Y) -> H_0(hoP Cf) -> 0, where the cone groups are taken relative
/// to the cone vertex.
LesReport long_exact_sequence(const FlowMorphism& f, Side side = Side::minus,
                              CofibrancyMode mode = CofibrancyMode::strict);

}  // namespace dflow
