#pragma once

#include <random>
#include <string>
#include <vector>

#include "dflow/flow.hpp"

namespace fixtures {

using namespace dflow;

struct NamedFlow {
  std::string name;
  Flow flow;
};

std::vector<SimplicialSetPtr> labels();
/// Labels used for random free flows: Delta[0], Delta[1], dDelta[1], dDelta[2].
std::vector<SimplicialSetPtr> small_labels();

LabeledDigraph digraph(int vertices, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<SimplicialSetPtr>& edge_labels = {});
/// Random acyclic digraph on at most max_vertices vertices.
LabeledDigraph random_digraph(std::mt19937& rng, int max_vertices = 6);

std::vector<NamedFlow> flows();

struct NamedMorphism {
  std::string name;
  FlowMorphism morphism;
};

/// glob(source of m) -> glob(target of m).
FlowMorphism globe_morphism(const SimplicialMap& m);
/// Sends the path of the directed segment to vertex `vertex` of P_{a,b}.
FlowMorphism segment_into(const FlowPtr& target, int a, int b, int vertex = 0);

/// Flow on 0 < 1 < 2 < 3 whose germ space at 1 is a 2-sphere while all its
/// path spaces are homology points.
Flow pinched_flow();
/// f: I -> chain 0<1<2<3 (endpoints) and g: chain -> pinched_flow().
std::pair<FlowMorphism, FlowMorphism> composition_witness();

std::vector<NamedMorphism> morphisms();

}  // namespace fixtures
