#include "dflow/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dflow {

namespace {

/// Collapses consecutive repeats: returns the strict sequence and the
/// surjection onto it.
std::pair<std::vector<int>, Degeneracy> compress(const std::vector<int>& seq) {
  std::vector<int> strict;
  Degeneracy surj;
  for (int v : seq) {
    if (strict.empty() || strict.back() != v) strict.push_back(v);
    surj.push_back(static_cast<int>(strict.size()) - 1);
  }
  return {strict, surj};
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller root so class representatives are least members.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

// All surjections [n] -> [p], lexicographically.
std::vector<Degeneracy> surjections(int n, int p) {
  std::vector<Degeneracy> out;
  if (p > n) return out;
  // choose which of the n steps k -> k+1 increase the value
  std::vector<bool> pick(n, false);
  std::fill(pick.end() - p, pick.end(), true);
  do {
    Degeneracy d{0};
    for (int k = 0; k < n; ++k) d.push_back(d.back() + (pick[k] ? 1 : 0));
    out.push_back(std::move(d));
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> all_simplices(const FiniteSimplicialSet& a, int n) {
  std::vector<Simplex> out;
  for (int p = 0; p <= std::min(n, a.dimension()); ++p)
    for (const auto& s : surjections(n, p))
      for (int x = 0; x < a.count(p); ++x) out.push_back(Simplex{p, x, s});
  return out;
}

}  // namespace

FiniteSimplicialSet empty_set() { return {}; }

FiniteSimplicialSet point() { return discrete(1); }

FiniteSimplicialSet discrete(int k) {
  FiniteSimplicialSet s;
  for (int i = 0; i < k; ++i) s.add_vertex();
  return s;
}

namespace {

void subsets(int n, int size, int start, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    subsets(n, size, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

FiniteSimplicialSet standard_simplex(int n) {
  if (n < 0) throw std::invalid_argument("standard_simplex needs n >= 0");
  std::vector<std::vector<int>> seqs;
  std::vector<int> cur;
  for (int k = 1; k <= n + 1; ++k) subsets(n, k, 0, cur, seqs);
  return *OrderedComplex(std::move(seqs)).set();
}

FiniteSimplicialSet boundary_simplex(int n) {
  if (n < 1) throw std::invalid_argument("boundary_simplex needs n >= 1");
  std::vector<std::vector<int>> seqs;
  std::vector<int> cur;
  for (int k = 1; k <= n; ++k) subsets(n, k, 0, cur, seqs);
  return *OrderedComplex(std::move(seqs)).set();
}

SimplicialMap boundary_inclusion(int n) {
  auto boundary = share(boundary_simplex(n));
  auto full = share(standard_simplex(n));
  // both enumerate vertex subsets by size, then lexicographically
  return SimplicialMap(boundary, full, SimplicialMap::identity(boundary).assignment());
}

OrderedComplex::OrderedComplex(std::vector<std::vector<int>> sequences) {
  std::sort(sequences.begin(), sequences.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sequences.erase(std::unique(sequences.begin(), sequences.end()), sequences.end());
  FiniteSimplicialSet s;
  for (auto& seq : sequences) {
    const int dim = static_cast<int>(seq.size()) - 1;
    if (dim < 0) continue;
    if (static_cast<int>(sequences_.size()) <= dim) sequences_.resize(dim + 1);
    int idx;
    if (dim == 0) {
      idx = s.add_vertex();
    } else {
      std::vector<Simplex> faces;
      for (int i = 0; i <= dim; ++i) {
        std::vector<int> f = seq;
        f.erase(f.begin() + i);
        auto it = index_.find(f);
        if (it == index_.end())
          throw std::invalid_argument("ordered complex is not closed under faces");
        faces.push_back(nondegenerate(dim - 1, it->second));
      }
      idx = s.add_simplex(std::move(faces));
    }
    index_.emplace(seq, idx);
    sequences_[dim].push_back(seq);
  }
  set_ = share(std::move(s));
}

Simplex OrderedComplex::locate(const std::vector<int>& sequence) const {
  auto [strict, surj] = compress(sequence);
  auto it = index_.find(strict);
  if (it == index_.end()) throw std::out_of_range("sequence is not a simplex");
  return Simplex{static_cast<int>(strict.size()) - 1, it->second, std::move(surj)};
}

Simplex DisjointUnion::include(int part, const Simplex& s) const {
  Simplex out = s;
  out.index += offsets[part][s.base_dim];
  return out;
}

int DisjointUnion::part_of(int dim, int index) const {
  for (std::size_t p = 0; p < offsets.size(); ++p) {
    const int begin = dim < static_cast<int>(offsets[p].size()) ? offsets[p][dim] : 0;
    if (index >= begin && index < begin + inclusions[p].source()->count(dim))
      return static_cast<int>(p);
  }
  throw std::out_of_range("simplex outside the disjoint union");
}

DisjointUnion disjoint_union(const std::vector<SimplicialSetPtr>& parts) {
  DisjointUnion u;
  int top = -1;
  for (const auto& p : parts) top = std::max(top, p->dimension());
  FiniteSimplicialSet s;
  std::vector<int> running(top + 1, 0);
  for (const auto& p : parts) {
    u.offsets.push_back(running);
    for (int k = 0; k <= p->dimension(); ++k) running[k] += p->count(k);
  }
  for (int k = 0; k <= top; ++k) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& p = parts[i];
      for (int x = 0; x < p->count(k); ++x) {
        if (k == 0) {
          s.add_vertex();
        } else {
          std::vector<Simplex> faces;
          for (const auto& f : p->faces(k, x)) faces.push_back(u.include(i, f));
          s.add_simplex(std::move(faces));
        }
      }
    }
  }
  u.set = share(std::move(s));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<std::vector<Simplex>> a(parts[i]->dimension() + 1);
    for (int k = 0; k <= parts[i]->dimension(); ++k)
      for (int x = 0; x < parts[i]->count(k); ++x)
        a[k].push_back(u.include(i, nondegenerate(k, x)));
    u.inclusions.emplace_back(parts[i], u.set, std::move(a));
  }
  return u;
}

Product::Product(std::vector<SimplicialSetPtr> factors) : factors_(std::move(factors)) {
  FiniteSimplicialSet s;
  bool any_empty = false;
  for (const auto& f : factors_) any_empty = any_empty || f->empty();
  int top = 0;
  for (const auto& f : factors_) top += std::max(f->dimension(), 0);
  if (!any_empty) {
    for (int n = 0; n <= top; ++n) {
      std::vector<std::vector<Simplex>> per_factor;
      for (const auto& f : factors_) per_factor.push_back(all_simplices(*f, n));
      components_.emplace_back();
      index_.emplace_back();
      // odometer over the cartesian product
      std::vector<std::size_t> pos(factors_.size(), 0);
      bool more = true;
      while (more) {
        std::vector<Simplex> comps;
        for (std::size_t j = 0; j < factors_.size(); ++j) comps.push_back(per_factor[j][pos[j]]);
        bool nondeg = true;
        for (int i = 0; i < n && nondeg; ++i) {
          bool common = true;
          for (const auto& c : comps)
            common = common && c.degeneracy[i] == c.degeneracy[i + 1];
          if (common) nondeg = false;
        }
        if (nondeg) {
          int idx;
          if (n == 0) {
            idx = s.add_vertex();
          } else {
            std::vector<Simplex> faces;
            for (int i = 0; i <= n; ++i) {
              std::vector<Simplex> fc;
              for (std::size_t j = 0; j < factors_.size(); ++j)
                fc.push_back(factors_[j]->face(comps[j], i));
              faces.push_back(locate(fc));
            }
            idx = s.add_simplex(std::move(faces));
          }
          index_[n].emplace(comps, idx);
          components_[n].push_back(std::move(comps));
        }
        more = false;
        for (std::size_t j = factors_.size(); j-- > 0;) {
          if (++pos[j] < per_factor[j].size()) {
            more = true;
            break;
          }
          pos[j] = 0;
        }
      }
    }
  }
  set_ = share(std::move(s));
}
std::vector<Simplex> Product::components(const Simplex& s) const {
  std::vector<Simplex> out;
  for (const auto& c : components_[s.base_dim][s.index])
    out.push_back(Simplex{c.base_dim, c.index, compose(c.degeneracy, s.degeneracy)});
  return out;
}

Simplex Product::locate(const std::vector<Simplex>& comps) const {
  const int n = comps.empty() ? 0 : comps.front().dim();
  // joint surjection rho: collapse positions degenerate in every component
  Degeneracy rho{0};
  for (int i = 0; i < n; ++i) {
    bool common = true;
    for (const auto& c : comps) common = common && c.degeneracy[i] == c.degeneracy[i + 1];
    rho.push_back(rho.back() + (common ? 0 : 1));
  }
  const int m = rho.back();
  std::vector<Simplex> reduced;
  for (const auto& c : comps) {
    Degeneracy d(m + 1);
    for (int i = 0; i <= n; ++i) d[rho[i]] = c.degeneracy[i];
    reduced.push_back(Simplex{c.base_dim, c.index, std::move(d)});
  }
  auto it = index_.at(m).find(reduced);
  if (it == index_[m].end()) throw std::out_of_range("product simplex not found");
  return Simplex{m, it->second, std::move(rho)};
}

SimplicialMap Product::projection(int factor) const {
  std::vector<std::vector<Simplex>> a(set_->dimension() + 1);
  for (int k = 0; k <= set_->dimension(); ++k)
    for (const auto& comps : components_[k]) a[k].push_back(comps[factor]);
  return SimplicialMap(set_, factors_[factor], std::move(a));
}

FiniteSimplicialSet product(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b) {
  return *Product({share(a), share(b)}).set();
}

Quotient quotient(const SimplicialSetPtr& a,
                  const std::vector<std::pair<Simplex, Simplex>>& pairs) {
  // Close the generating pairs under faces.
  std::set<std::pair<Simplex, Simplex>> closed;
  std::vector<std::pair<Simplex, Simplex>> work;
  auto push = [&](Simplex u, Simplex v) {
    if (u == v) return;
    if (v < u) std::swap(u, v);
    if (closed.emplace(u, v).second) work.emplace_back(std::move(u), std::move(v));
  };
  for (const auto& [u, v] : pairs) {
    if (u.dim() != v.dim()) throw std::invalid_argument("identified simplices differ in dimension");
    push(u, v);
  }
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    if (u.dim() == 0) continue;
    for (int i = 0; i <= u.dim(); ++i) push(a->face(u, i), a->face(v, i));
  }
  std::vector<std::vector<std::pair<Simplex, Simplex>>> by_dim(std::max(a->dimension() + 1, 0));
  for (const auto& p : closed) by_dim[p.first.dim()].push_back(p);

  FiniteSimplicialSet q;
  std::vector<std::vector<Simplex>> image(std::max(a->dimension() + 1, 0));
  auto image_of = [&](const Simplex& s) {
    const Simplex& img = image[s.base_dim][s.index];
    return Simplex{img.base_dim, img.index, compose(img.degeneracy, s.degeneracy)};
  };

  for (int k = 0; k <= a->dimension(); ++k) {
    const int n = a->count(k);
    UnionFind uf(n);
    std::map<Simplex, int> degenerate_token;
    std::vector<Simplex> token_simplex;
    auto node = [&](const Simplex& s) -> int {
      if (!s.degenerate()) return s.index;
      Simplex img = image_of(s);
      auto [it, fresh] = degenerate_token.emplace(img, uf.size());
      if (fresh) {
        uf.add();
        token_simplex.push_back(img);
      }
      return it->second;
    };
    for (const auto& [u, v] : by_dim[k]) uf.unite(node(u), node(v));

    std::map<int, Simplex> class_image;
    for (int t = n; t < uf.size(); ++t) {
      auto [it, fresh] = class_image.emplace(uf.find(t), token_simplex[t - n]);
      if (!fresh && it->second != token_simplex[t - n])
        throw std::logic_error("distinct degenerate simplices identified");
    }
    image[k].resize(n);
    for (int x = 0; x < n; ++x) {
      const int root = uf.find(x);
      auto it = class_image.find(root);
      if (it == class_image.end()) {
        int idx;
        if (k == 0) {
          idx = q.add_vertex();
        } else {
          std::vector<Simplex> faces;
          for (int i = 0; i <= k; ++i) faces.push_back(image_of(a->face(nondegenerate(k, x), i)));
          idx = q.add_simplex(std::move(faces));
        }
        it = class_image.emplace(root, nondegenerate(k, idx)).first;
      }
      image[k][x] = it->second;
    }
  }
  auto set = share(std::move(q));
  return Quotient{set, SimplicialMap(a, set, std::move(image))};
}

namespace {

Simplex cone_simplex(const Cone& c, const Simplex& s) {
  Simplex out{s.base_dim + 1, c.cone_of[s.base_dim][s.index], s.degeneracy};
  out.degeneracy.push_back(s.base_dim + 1);
  return out;
}

}  // namespace

Cone cone(const SimplicialSetPtr& a) {
  Cone c;
  FiniteSimplicialSet s = *a;
  c.apex = s.add_vertex();
  c.cone_of.resize(std::max(a->dimension() + 1, 0));
  for (int k = 0; k <= a->dimension(); ++k) {
    for (int x = 0; x < a->count(k); ++x) {
      std::vector<Simplex> faces;
      if (k == 0) {
        faces = {nondegenerate(0, c.apex), nondegenerate(0, x)};
      } else {
        for (int i = 0; i <= k; ++i) faces.push_back(cone_simplex(c, a->face(nondegenerate(k, x), i)));
        faces.push_back(nondegenerate(k, x));
      }
      c.cone_of[k].push_back(s.add_simplex(std::move(faces)));
    }
  }
  c.set = share(std::move(s));
  c.base = SimplicialMap::identity(a);
  c.base = SimplicialMap(a, c.set, c.base.assignment());
  return c;
}

MappingCone mapping_cone(const SimplicialMap& f) {
  const auto& src = f.source();
  Cone c = cone(src);
  DisjointUnion u = disjoint_union({c.set, f.target()});
  std::vector<std::pair<Simplex, Simplex>> pairs;
  for (int k = 0; k <= src->dimension(); ++k)
    for (int x = 0; x < src->count(k); ++x)
      pairs.emplace_back(u.include(0, nondegenerate(k, x)), u.include(1, f.image(k, x)));
  Quotient q = quotient(u.set, pairs);
  MappingCone m;
  m.set = q.set;
  m.target_inclusion = compose(q.projection, u.inclusions[1]);
  m.apex = q.projection(u.include(0, nondegenerate(0, c.apex))).index;
  m.cone_of.resize(c.cone_of.size());
  for (std::size_t k = 0; k < c.cone_of.size(); ++k)
    for (int idx : c.cone_of[k])
      m.cone_of[k].push_back(q.projection(u.include(0, nondegenerate(static_cast<int>(k) + 1, idx))));
  return m;
}

OrderedComplex nerve_of_poset(const Poset& p) {
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  std::function<void()> extend = [&]() {
    chains.push_back(cur);
    for (int y = 0; y < p.size; ++y)
      if (y != cur.back() && p.less_equal(cur.back(), y)) {
        cur.push_back(y);
        extend();
        cur.pop_back();
      }
  };
  for (int x = 0; x < p.size; ++x) {
    cur = {x};
    extend();
  }
  return OrderedComplex(std::move(chains));
}

Subcomplex subcomplex(const SimplicialSetPtr& a, const std::function<bool(int, int)>& keep) {
  Subcomplex sub;
  FiniteSimplicialSet s;
  sub.index_of.resize(std::max(a->dimension() + 1, 0));
  std::vector<std::vector<Simplex>> incl;
  auto reindex = [&](const Simplex& f) {
    const int idx = sub.index_of[f.base_dim][f.index];
    if (idx < 0) throw std::invalid_argument("subcomplex is not closed under faces");
    return Simplex{f.base_dim, idx, f.degeneracy};
  };
  for (int k = 0; k <= a->dimension(); ++k) {
    for (int x = 0; x < a->count(k); ++x) {
      if (!keep(k, x)) {
        sub.index_of[k].push_back(-1);
        continue;
      }
      int idx;
      if (k == 0) {
        idx = s.add_vertex();
      } else {
        std::vector<Simplex> faces;
        for (const auto& f : a->faces(k, x)) faces.push_back(reindex(f));
        idx = s.add_simplex(std::move(faces));
      }
      sub.index_of[k].push_back(idx);
      if (static_cast<int>(incl.size()) <= k) incl.resize(k + 1);
      incl[k].push_back(nondegenerate(k, x));
    }
  }
  sub.set = share(std::move(s));
  incl.resize(sub.set->dimension() + 1);
  sub.inclusion = SimplicialMap(sub.set, a, std::move(incl));
  return sub;
}

std::vector<std::vector<int>> pi0(const FiniteSimplicialSet& a) {
  UnionFind uf(a.vertex_count());
  for (int e = 0; e < a.count(1); ++e) {
    const auto& f = a.faces(1, e);
    uf.unite(f[0].index, f[1].index);
  }
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < a.vertex_count(); ++v) classes[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

}  // namespace dflow
