#pragma once

#include <string>
#include <vector>

#include "dflow/branching.hpp"
#include "dflow/homology.hpp"

namespace dflow {

/// Every state of a is in b, or receives a path from b and sends one into b.
bool surrounded(const Flow& x, const std::vector<int>& a, const std::vector<int>& b);

struct Condition {
  std::string name;
  bool holds = true;
  /// Offending states, pairs or subsets.
  std::vector<std::string> details;
};

struct SEquivalenceVerdict {
  bool holds = true;
  std::vector<std::string> failures;
};

/// Bijective on states, and an isomorphism on the integral homology of every
/// path space. Necessary for a weak S-homotopy equivalence.
SEquivalenceVerdict is_homology_s_equivalence(const FlowMorphism& f);

struct StClassVerdict {
  std::string label;
  bool member = true;
  std::vector<Condition> conditions;
  std::string semi_decision_note;
  std::vector<std::string> warnings;
};

StClassVerdict check_st0(const FlowMorphism& f);
StClassVerdict check_st1(const FlowMorphism& f);
StClassVerdict check_st2(const FlowMorphism& f, CofibrancyMode mode = CofibrancyMode::strict);
StClassVerdict check_st3(const FlowMorphism& f, CofibrancyMode mode = CofibrancyMode::strict);
/// level in [0, 3].
StClassVerdict check_st(const FlowMorphism& f, int level,
                        CofibrancyMode mode = CofibrancyMode::strict);

constexpr int essential_size_guard = 12;

bool is_essential(const Flow& x, const std::vector<int>& a,
                  CofibrancyMode mode = CofibrancyMode::strict);
/// All essential subsets, each sorted, in increasing order of bitmask.
/// Throws SizeGuardError beyond essential_size_guard states.
std::vector<std::vector<int>> essential_subsets(const Flow& x,
                                                CofibrancyMode mode = CofibrancyMode::strict);

}  // namespace dflow
