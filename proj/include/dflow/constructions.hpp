#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dflow/simplicial_map.hpp"
#include "dflow/simplicial_set.hpp"

namespace dflow {

FiniteSimplicialSet empty_set();
FiniteSimplicialSet point();
/// k isolated vertices.
FiniteSimplicialSet discrete(int k);
/// Delta[n].
FiniteSimplicialSet standard_simplex(int n);
/// The boundary of Delta[n]; n >= 1.
FiniteSimplicialSet boundary_simplex(int n);

/// The inclusion of the boundary of Delta[n] into Delta[n].
SimplicialMap boundary_inclusion(int n);

/// Simplicial set whose nondegenerate simplices are the given vertex
/// sequences (closed under deleting entries); faces delete one entry.
class OrderedComplex {
 public:
  explicit OrderedComplex(std::vector<std::vector<int>> sequences);

  const SimplicialSetPtr& set() const { return set_; }
  const std::vector<int>& sequence(int dim, int index) const {
    return sequences_[dim][index];
  }
  /// Simplex spanned by a sequence that may repeat consecutive entries.
  Simplex locate(const std::vector<int>& sequence) const;

 private:
  SimplicialSetPtr set_;
  std::vector<std::vector<std::vector<int>>> sequences_;
  std::map<std::vector<int>, int> index_;
};

struct DisjointUnion {
  SimplicialSetPtr set;
  std::vector<SimplicialMap> inclusions;
  // offsets[part][dim]: first index of the part's simplices in that dimension.
  std::vector<std::vector<int>> offsets;

  Simplex include(int part, const Simplex& s) const;
  /// Part owning a nondegenerate simplex of the union.
  int part_of(int dim, int index) const;
};

DisjointUnion disjoint_union(const std::vector<SimplicialSetPtr>& parts);

/// Categorical product of finitely many simplicial sets.
///
/// Nondegenerate n-simplices are tuples of n-simplices of the factors with
/// no degeneracy common to all of them.
class Product {
 public:
  explicit Product(std::vector<SimplicialSetPtr> factors);

  const SimplicialSetPtr& set() const { return set_; }
  const std::vector<SimplicialSetPtr>& factors() const { return factors_; }

  std::vector<Simplex> components(const Simplex& s) const;
  /// Product simplex with the given components (all of one dimension).
  Simplex locate(const std::vector<Simplex>& components) const;
  SimplicialMap projection(int factor) const;

 private:
  std::vector<SimplicialSetPtr> factors_;
  SimplicialSetPtr set_;
  std::vector<std::vector<std::vector<Simplex>>> components_;
  std::vector<std::map<std::vector<Simplex>, int>> index_;
};

FiniteSimplicialSet product(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b);

struct Quotient {
  SimplicialSetPtr set;
  SimplicialMap projection;
};

/// Coequalizer of simplicial sets: the smallest simplicial quotient in which
/// each pair of simplices becomes equal. A nondegenerate simplex identified
/// with a degenerate one collapses.
Quotient quotient(const SimplicialSetPtr& a,
                  const std::vector<std::pair<Simplex, Simplex>>& pairs);

struct Cone {
  SimplicialSetPtr set;
  int apex = 0;
  SimplicialMap base;
  // cone_of[k][x]: index of the (k+1)-simplex x * apex.
  std::vector<std::vector<int>> cone_of;
};

/// Cone with the apex as last vertex: d_{k+1}(x * c) = x.
Cone cone(const SimplicialSetPtr& a);

struct MappingCone {
  SimplicialSetPtr set;
  SimplicialMap target_inclusion;
  int apex = 0;
  // cone_of[k][x]: the (k+1)-simplex over the k-simplex x of the source.
  std::vector<std::vector<Simplex>> cone_of;
};

/// target u_f cone(source).
MappingCone mapping_cone(const SimplicialMap& f);

/// Finite poset on {0, ..., size-1}; less_equal must be a partial order.
struct Poset {
  int size = 0;
  std::function<bool(int, int)> less_equal;
};

/// Nerve: k-simplices are chains x0 <= ... <= xk, nondegenerate when strict.
OrderedComplex nerve_of_poset(const Poset& p);

struct Subcomplex {
  SimplicialSetPtr set;
  SimplicialMap inclusion;
  std::vector<std::vector<int>> index_of;  // -1 when dropped
};

/// Sub-simplicial set on the nondegenerate simplices accepted by keep;
/// keep must be closed under faces.
Subcomplex subcomplex(const SimplicialSetPtr& a,
                      const std::function<bool(int, int)>& keep);

/// Vertex classes under the edge relation, each sorted, ordered by least
/// vertex.
std::vector<std::vector<int>> pi0(const FiniteSimplicialSet& a);

/// Isomorphism search; optional vertex labels must be preserved.
std::optional<SimplicialMap> find_isomorphism(const SimplicialSetPtr& a,
                                              const SimplicialSetPtr& b,
                                              const std::vector<int>& vertex_labels_a = {},
                                              const std::vector<int>& vertex_labels_b = {});
bool isomorphic(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b);

}  // namespace dflow
