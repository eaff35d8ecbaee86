#pragma once

#include <string>
#include <vector>

#include "dflow/simplicial_set.hpp"

namespace dflow {

/// A map of finite simplicial sets, determined by the images of the
/// nondegenerate simplices of the source.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(SimplicialSetPtr source, SimplicialSetPtr target,
                std::vector<std::vector<Simplex>> assignment);

  static SimplicialMap identity(SimplicialSetPtr set);
  /// Constant map onto vertex `vertex` of the target.
  static SimplicialMap constant(SimplicialSetPtr source, SimplicialSetPtr target,
                                int vertex);

  const SimplicialSetPtr& source() const { return source_; }
  const SimplicialSetPtr& target() const { return target_; }
  const Simplex& image(int dim, int index) const { return assignment_[dim][index]; }
  const std::vector<std::vector<Simplex>>& assignment() const { return assignment_; }

  Simplex operator()(const Simplex& s) const;

  /// Dimension bookkeeping and f(d_i x) = d_i f(x) for every nondegenerate x.
  std::vector<std::string> check() const;

  bool operator==(const SimplicialMap& other) const {
    return assignment_ == other.assignment_;
  }

 private:
  SimplicialSetPtr source_;
  SimplicialSetPtr target_;
  std::vector<std::vector<Simplex>> assignment_;
};

/// outer o inner; requires inner.target() to describe outer.source().
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

}  // namespace dflow
