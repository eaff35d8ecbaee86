#include <algorithm>
#include <map>
#include <tuple>

#include "dflow/constructions.hpp"

namespace dflow {

namespace {

// Colour refinement shared by both sides so that colours are comparable.
struct Colouring {
  // colour[side][dim][index]
  std::vector<std::vector<std::vector<int>>> colour;
};

Colouring refine(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                 const std::vector<int>& la, const std::vector<int>& lb) {
  const FiniteSimplicialSet* sides[2] = {&a, &b};
  const std::vector<int>* labels[2] = {&la, &lb};
  Colouring c;
  c.colour.resize(2);
  for (int s = 0; s < 2; ++s) {
    c.colour[s].resize(sides[s]->dimension() + 1);
    for (int k = 0; k <= sides[s]->dimension(); ++k)
      for (int x = 0; x < sides[s]->count(k); ++x)
        c.colour[s][k].push_back(k == 0 && !labels[s]->empty() ? (*labels[s])[x] : -1 - k);
  }
  // cofaces[side][dim][index] -> (coface dim, coface index, position)
  std::vector<std::vector<std::vector<std::vector<std::tuple<int, int, int>>>>> cof(2);
  for (int s = 0; s < 2; ++s) {
    const auto& set = *sides[s];
    cof[s].resize(set.dimension() + 1);
    for (int k = 0; k <= set.dimension(); ++k) cof[s][k].resize(set.count(k));
    for (int k = 1; k <= set.dimension(); ++k)
      for (int x = 0; x < set.count(k); ++x)
        for (int i = 0; i <= k; ++i) {
          const auto& f = set.faces(k, x)[i];
          cof[s][f.base_dim][f.index].emplace_back(k, x, i);
        }
  }
  std::size_t classes = 0;
  for (int round = 0; round < 64; ++round) {
    using Key = std::tuple<int, std::vector<std::pair<int, Degeneracy>>,
                           std::vector<std::tuple<int, int, Degeneracy>>>;
    std::map<Key, int> ids;
    auto next = c.colour;
    for (int s = 0; s < 2; ++s) {
      const auto& set = *sides[s];
      for (int k = 0; k <= set.dimension(); ++k)
        for (int x = 0; x < set.count(k); ++x) {
          Key key;
          std::get<0>(key) = c.colour[s][k][x];
          if (k > 0)
            for (const auto& f : set.faces(k, x))
              std::get<1>(key).emplace_back(c.colour[s][f.base_dim][f.index], f.degeneracy);
          for (const auto& [cd, ci, pos] : cof[s][k][x])
            std::get<2>(key).emplace_back(c.colour[s][cd][ci], pos,
                                          set.faces(cd, ci)[pos].degeneracy);
          std::sort(std::get<2>(key).begin(), std::get<2>(key).end());
          next[s][k][x] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
        }
    }
    c.colour = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return c;
}

class Search {
 public:
  Search(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b, const Colouring& c)
      : a_(a), b_(b), c_(c) {
    for (int k = 0; k <= a.dimension(); ++k) {
      map_.emplace_back(a.count(k), -1);
      used_.emplace_back(b.count(k), false);
    }
    for (int k = a.dimension(); k >= 0; --k)
      for (int x = 0; x < a.count(k); ++x) order_.emplace_back(k, x);
  }

  bool run(std::size_t next = 0) {
    while (next < order_.size() && map_[order_[next].first][order_[next].second] >= 0) ++next;
    if (next == order_.size()) return true;
    const auto [k, x] = order_[next];
    for (int y = 0; y < b_.count(k); ++y) {
      if (used_[k][y] || c_.colour[1][k][y] != c_.colour[0][k][x]) continue;
      const std::size_t mark = trail_.size();
      if (assign(k, x, y) && run(next + 1)) return true;
      undo(mark);
    }
    return false;
  }

  std::vector<std::vector<Simplex>> assignment() const {
    std::vector<std::vector<Simplex>> out(map_.size());
    for (std::size_t k = 0; k < map_.size(); ++k)
      for (int y : map_[k]) out[k].push_back(nondegenerate(static_cast<int>(k), y));
    return out;
  }

 private:
  bool assign(int k, int x, int y) {
    if (map_[k][x] >= 0) return map_[k][x] == y;
    if (used_[k][y] || c_.colour[1][k][y] != c_.colour[0][k][x]) return false;
    map_[k][x] = y;
    used_[k][y] = true;
    trail_.emplace_back(k, x);
    if (k == 0) return true;
    for (int i = 0; i <= k; ++i) {
      const auto& fa = a_.faces(k, x)[i];
      const auto& fb = b_.faces(k, y)[i];
      if (fa.base_dim != fb.base_dim || fa.degeneracy != fb.degeneracy) return false;
      if (!assign(fa.base_dim, fa.index, fb.index)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto [k, x] = trail_.back();
      trail_.pop_back();
      used_[k][map_[k][x]] = false;
      map_[k][x] = -1;
    }
  }

  const FiniteSimplicialSet& a_;
  const FiniteSimplicialSet& b_;
  const Colouring& c_;
  std::vector<std::vector<int>> map_;
  std::vector<std::vector<bool>> used_;
  std::vector<std::pair<int, int>> order_;
  std::vector<std::pair<int, int>> trail_;
};

}  // namespace

std::optional<SimplicialMap> find_isomorphism(const SimplicialSetPtr& a,
                                              const SimplicialSetPtr& b,
                                              const std::vector<int>& vertex_labels_a,
                                              const std::vector<int>& vertex_labels_b) {
  if (a->dimension() != b->dimension()) return std::nullopt;
  for (int k = 0; k <= a->dimension(); ++k)
    if (a->count(k) != b->count(k)) return std::nullopt;
  if (vertex_labels_a.empty() != vertex_labels_b.empty()) return std::nullopt;
  const Colouring c = refine(*a, *b, vertex_labels_a, vertex_labels_b);
  for (int k = 0; k <= a->dimension(); ++k) {
    auto ca = c.colour[0][k];
    auto cb = c.colour[1][k];
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  Search search(*a, *b, c);
  if (!search.run()) return std::nullopt;
  return SimplicialMap(a, b, search.assignment());
}

bool isomorphic(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b) {
  return find_isomorphism(share(a), share(b)).has_value();
}

}  // namespace dflow
