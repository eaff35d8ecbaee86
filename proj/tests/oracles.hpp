#pragma once

// Independent reference computations used by the unit and acceptance tests.

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "dflow/branching.hpp"

namespace oracle {

using namespace dflow;

// Monotone surjections [n] -> [m].
inline std::vector<Degeneracy> surjections(int n, int m) {
  std::vector<Degeneracy> out;
  Degeneracy d{0};
  std::function<void()> grow = [&] {
    const int len = static_cast<int>(d.size());
    if (len == n + 1) {
      if (d.back() == m) out.push_back(d);
      return;
    }
    const int last = d.back();
    if (m - last > n + 1 - len) return;
    d.push_back(last);
    grow();
    d.back() = last + 1;
    if (last + 1 <= m) grow();
    d.pop_back();
  };
  grow();
  return out;
}

// Every n-simplex, degenerate or not.
inline std::vector<Simplex> all_simplices(const FiniteSimplicialSet& s, int n) {
  std::vector<Simplex> out;
  for (int m = 0; m <= std::min(n, s.dimension()); ++m)
    for (const auto& d : surjections(n, m))
      for (int i = 0; i < s.count(m); ++i) out.push_back(Simplex{m, i, d});
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Closes the germ relation under faces, degeneracies and transitivity over
// all simplices up to the top dimension of the path space, then checks that
// two simplices are related exactly when the germ projection identifies them.
inline bool germ_space_matches(const Flow& x, const GermSpace& g) {
  const auto& paths = *g.paths.set;
  const int top = std::max(paths.dimension(), 0);
  std::vector<std::vector<Simplex>> simplices(top + 1);
  std::vector<std::map<Simplex, std::size_t>> index(top + 1);
  std::vector<UnionFind> classes;
  for (int n = 0; n <= top; ++n) {
    simplices[n] = all_simplices(paths, n);
    for (std::size_t i = 0; i < simplices[n].size(); ++i) index[n][simplices[n][i]] = i;
    classes.emplace_back(simplices[n].size());
  }
  auto at = [&](int p, const Simplex& s) { return g.paths.include(p, s); };
  for (const auto& [abc, comp] : x.compositions()) {
    const auto [a, b, c] = abc;
    const auto left = x.path_space(a, b), right = x.path_space(b, c);
    for (int n = 0; n <= top; ++n)
      for (const auto& u : all_simplices(*left, n))
        for (const auto& v : all_simplices(*right, n)) {
          const Simplex whole = at(g.part(a, c), x.compose(a, b, c, u, v));
          const Simplex piece =
              g.side == Side::minus ? at(g.part(a, b), u) : at(g.part(b, c), v);
          classes[n].join(index[n].at(whole), index[n].at(piece));
        }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int n = 0; n <= top; ++n)
      for (std::size_t i = 0; i < simplices[n].size(); ++i) {
        const std::size_t r = classes[n].find(i);
        if (r == i) continue;
        const Simplex& s = simplices[n][i];
        const Simplex& t = simplices[n][r];
        for (int k = 0; n > 0 && k <= n; ++k)
          changed |= classes[n - 1].join(index[n - 1].at(paths.face(s, k)),
                                         index[n - 1].at(paths.face(t, k)));
        for (int k = 0; n < top && k <= n; ++k)
          changed |= classes[n + 1].join(index[n + 1].at(degeneracy_of(s, k)),
                                         index[n + 1].at(degeneracy_of(t, k)));
      }
  }
  for (int n = 0; n <= top; ++n) {
    std::map<std::size_t, Simplex> image_of_class;
    std::map<Simplex, std::size_t> class_of_image;
    for (std::size_t i = 0; i < simplices[n].size(); ++i) {
      const std::size_t c = classes[n].find(i);
      const Simplex h = g.germ_projection(simplices[n][i]);
      auto [it, fresh] = image_of_class.emplace(c, h);
      if (!fresh && it->second != h) return false;
      auto [jt, fresh_image] = class_of_image.emplace(h, c);
      if (!fresh_image && jt->second != c) return false;
    }
  }
  return true;
}

// rank of Z X0 / Im(s): states with no outgoing (minus) or incoming (plus) path.
inline int h0_rank(const Flow& x, Side side) {
  std::set<int> hit;
  for (const auto& [pair, space] : x.path_spaces())
    hit.insert(side == Side::minus ? pair.first : pair.second);
  return x.state_count() - static_cast<int>(hit.size());
}

}  // namespace oracle
