#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace dflow {

/// A monotone surjection [n] -> [m] stored by its values; the identity
/// marks a nondegenerate simplex.
using Degeneracy = std::vector<int>;

Degeneracy identity_degeneracy(int dim);
bool is_identity(const Degeneracy& d);
/// (outer o inner)(k) = outer[inner[k]].
Degeneracy compose(const Degeneracy& outer, const Degeneracy& inner);

/// A simplex in normal form: a nondegenerate simplex (base_dim, index)
/// followed by a degeneracy operator.
struct Simplex {
  int base_dim = 0;
  int index = 0;
  Degeneracy degeneracy{0};

  int dim() const { return static_cast<int>(degeneracy.size()) - 1; }
  bool degenerate() const { return dim() != base_dim; }

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;
};

Simplex nondegenerate(int dim, int index);
/// s_i applied to a simplex.
Simplex degeneracy_of(const Simplex& s, int i);
std::string to_string(const Simplex& s);

/// Finitely presented simplicial set: nondegenerate simplices per dimension
/// together with the face data of each one.
///
/// Faces of a k-simplex are stored as k+1 normal-form simplices of dimension
/// k-1. Degenerate simplices are never stored; they are carried implicitly by
/// the degeneracy words of Simplex values.
class FiniteSimplicialSet {
 public:
  FiniteSimplicialSet() = default;

  int dimension() const { return static_cast<int>(counts_.size()) - 1; }
  int count(int dim) const {
    return dim >= 0 && dim <= dimension() ? counts_[dim] : 0;
  }
  int vertex_count() const { return count(0); }
  int total() const;
  bool empty() const { return counts_.empty() || counts_[0] == 0; }
  long euler_characteristic() const;

  const std::vector<Simplex>& faces(int dim, int index) const {
    return faces_[dim][index];
  }
  /// d_i of an arbitrary simplex, returned in normal form.
  Simplex face(const Simplex& s, int i) const;

  int add_vertex();
  /// Appends a nondegenerate simplex of dimension faces.size() - 1.
  int add_simplex(std::vector<Simplex> faces);

  /// Simplicial identities d_i d_j = d_{j-1} d_i (i < j) and reference
  /// sanity; returns human-readable violations.
  std::vector<std::string> check() const;

  bool operator==(const FiniteSimplicialSet&) const = default;

 private:
  std::vector<int> counts_;
  // faces_[k][i]: faces of the i-th nondegenerate k-simplex (empty for k=0).
  std::vector<std::vector<std::vector<Simplex>>> faces_;
};

using SimplicialSetPtr = std::shared_ptr<const FiniteSimplicialSet>;

inline SimplicialSetPtr share(FiniteSimplicialSet s) {
  return std::make_shared<const FiniteSimplicialSet>(std::move(s));
}

/// Canonical textual dump: one line per nondegenerate simplex,
/// "k.i: face face ..." with degenerate faces written "k.i[s0 s1 ...]".
std::string dump(const FiniteSimplicialSet& s);

}  // namespace dflow
