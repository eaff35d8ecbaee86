#include "dflow/simplicial_map.hpp"

#include <sstream>
#include <stdexcept>

namespace dflow {

SimplicialMap::SimplicialMap(SimplicialSetPtr source, SimplicialSetPtr target,
                             std::vector<std::vector<Simplex>> assignment)
    : source_(std::move(source)),
      target_(std::move(target)),
      assignment_(std::move(assignment)) {
  assignment_.resize(source_->dimension() + 1);
  for (int k = 0; k <= source_->dimension(); ++k)
    if (static_cast<int>(assignment_[k].size()) != source_->count(k))
      throw std::invalid_argument("simplicial map assignment has wrong size");
}

SimplicialMap SimplicialMap::identity(SimplicialSetPtr set) {
  std::vector<std::vector<Simplex>> a(set->dimension() + 1);
  for (int k = 0; k <= set->dimension(); ++k)
    for (int x = 0; x < set->count(k); ++x) a[k].push_back(nondegenerate(k, x));
  return SimplicialMap(set, set, std::move(a));
}

SimplicialMap SimplicialMap::constant(SimplicialSetPtr source, SimplicialSetPtr target,
                                      int vertex) {
  std::vector<std::vector<Simplex>> a(source->dimension() + 1);
  for (int k = 0; k <= source->dimension(); ++k)
    for (int x = 0; x < source->count(k); ++x)
      a[k].push_back(Simplex{0, vertex, Degeneracy(k + 1, 0)});
  return SimplicialMap(std::move(source), std::move(target), std::move(a));
}

Simplex SimplicialMap::operator()(const Simplex& s) const {
  const Simplex& img = assignment_[s.base_dim][s.index];
  return Simplex{img.base_dim, img.index, compose(img.degeneracy, s.degeneracy)};
}

std::vector<std::string> SimplicialMap::check() const {
  std::vector<std::string> problems;
  for (int k = 0; k <= source_->dimension(); ++k) {
    for (int x = 0; x < source_->count(k); ++x) {
      const Simplex& img = assignment_[k][x];
      const bool in_range = img.dim() == k && img.base_dim <= target_->dimension() &&
                            img.index >= 0 && img.index < target_->count(img.base_dim);
      if (!in_range) {
        problems.push_back("image of " + to_string(nondegenerate(k, x)) +
                           " is not a simplex of the target");
        continue;
      }
      if (k == 0) continue;
      for (int i = 0; i <= k; ++i) {
        const Simplex lhs = (*this)(source_->face(nondegenerate(k, x), i));
        const Simplex rhs = target_->face(img, i);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "face " << i << " of " << k << '.' << x << " maps to " << to_string(lhs)
             << " but the face of its image is " << to_string(rhs);
          problems.push_back(os.str());
        }
      }
    }
  }
  return problems;
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  std::vector<std::vector<Simplex>> a(inner.assignment().size());
  for (std::size_t k = 0; k < a.size(); ++k)
    for (const auto& s : inner.assignment()[k]) a[k].push_back(outer(s));
  return SimplicialMap(inner.source(), outer.target(), std::move(a));
}

}  // namespace dflow
