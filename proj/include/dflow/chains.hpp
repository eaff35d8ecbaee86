#pragma once

#include <string>
#include <vector>

#include "dflow/integer.hpp"
#include "dflow/simplicial_map.hpp"
#include "dflow/simplicial_set.hpp"
#include "dflow/smith.hpp"

namespace dflow {

/// Finitely generated abelian group Z^free_rank + Z/t1 + Z/t2 + ...,
/// with t1 | t2 | ... and every ti >= 2.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^3", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;

  bool operator==(const AbelianGroup&) const = default;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Chain complex of free abelian groups with chosen bases.
///
/// Degrees run from lowest_degree upward; boundary(n) : C_n -> C_{n-1} is a
/// rank(n-1) x rank(n) matrix.
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(int lowest_degree, std::vector<int> ranks,
               std::vector<IntegerMatrix> boundaries);

  int lowest_degree() const { return lowest_; }
  int top_degree() const { return lowest_ + static_cast<int>(ranks_.size()) - 1; }
  int rank(int degree) const;
  IntegerMatrix boundary(int degree) const;

  /// Degrees where the composite of two boundaries is nonzero.
  std::vector<int> check() const;

 private:
  int lowest_ = 0;
  std::vector<int> ranks_;
  std::vector<IntegerMatrix> boundaries_;  // boundaries_[i] leaves degree lowest_ + i
};

/// Normalized chains: the basis in degree k is the nondegenerate k-simplices.
ChainComplex normalized_chains(const FiniteSimplicialSet& s);

/// Matrix of f on normalized k-chains; degenerate images vanish.
IntegerMatrix chain_map_matrix(const SimplicialMap& f, int degree);

/// Removes basis element `index` in `degree` (the quotient by a subcomplex
/// spanned by a single cycle, e.g. a base vertex).
ChainComplex drop_basis_element(const ChainComplex& c, int degree, int index);

/// Appends a degree lowest-1 of the given rank with boundary `augmentation`.
ChainComplex augment(const ChainComplex& c, int rank, const IntegerMatrix& augmentation);

/// Homology in one degree with explicit generators.
///
/// Generators are cycle representatives, free summands first, then torsion
/// summands in increasing order; `orders` holds 0 for free generators.
struct HomologyBasis {
  AbelianGroup group;
  int chain_rank = 0;
  IntegerMatrix generators;
  std::vector<Integer> orders;

  /// Coordinates of a cycle, torsion coordinates reduced to [0, order).
  IntegerVector coordinates(const IntegerVector& cycle) const;

  // cycle basis and the change of coordinates onto the Smith basis
  IntegerMatrix cycle_basis;
  IntegerMatrix to_smith;
  std::vector<Eigen::Index> kept;
};

HomologyBasis homology_basis(const ChainComplex& c, int degree);
/// Zero group for degrees outside the complex.
AbelianGroup homology(const ChainComplex& c, int degree);
AbelianGroup homology(const FiniteSimplicialSet& s, int degree);
/// Homology relative to one vertex; equals reduced homology for nonempty s.
AbelianGroup reduced_homology(const FiniteSimplicialSet& s, int degree);

/// Matrix of the map on homology induced by a chain map in one degree.
IntegerMatrix induced_matrix(const HomologyBasis& from, const HomologyBasis& to,
                             const IntegerMatrix& chain_map);
/// Induced map of a simplicial map on H_n in the canonical bases.
IntegerMatrix induced_map(const SimplicialMap& f, int degree);

/// Necessary condition for weak contractibility: nonempty, connected and
/// reduced homology zero in every degree up to the dimension. It cannot
/// detect a nontrivial perfect fundamental group.
bool is_homology_point(const FiniteSimplicialSet& s);

}  // namespace dflow
