#include "dflow/flow.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace dflow {

std::optional<std::vector<int>> LabeledDigraph::find_cycle() const {
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> out(n);
  for (const auto& e : edges) out[e.from].push_back(e.to);
  for (auto& o : out) std::sort(o.begin(), o.end());
  std::vector<int> colour(n, 0), stack;
  std::optional<std::vector<int>> found;
  std::function<void(int)> visit = [&](int v) {
    colour[v] = 1;
    stack.push_back(v);
    for (int w : out[v]) {
      if (found) break;
      if (colour[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        std::vector<int> cycle(it, stack.end());
        cycle.push_back(w);
        found = cycle;
      } else if (colour[w] == 0) {
        visit(w);
      }
    }
    stack.pop_back();
    colour[v] = 2;
  };
  for (int v = 0; v < n && !found; ++v)
    if (colour[v] == 0) visit(v);
  return found;
}

LabeledDigraph LabeledDigraph::reversed() const {
  LabeledDigraph r = *this;
  for (auto& e : r.edges) std::swap(e.from, e.to);
  return r;
}

int Flow::state_index(const std::string& name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) throw ValidationError("unknown state name '" + name + "'");
  return static_cast<int>(it - states_.begin());
}

SimplicialSetPtr Flow::path_space(int a, int b) const {
  auto it = paths_.find({a, b});
  if (it != paths_.end()) return it->second;
  static const SimplicialSetPtr none = share(empty_set());
  return none;
}

const Composition& Flow::composition(int a, int b, int c) const {
  auto it = compositions_.find({a, b, c});
  if (it == compositions_.end())
    throw std::out_of_range("no composable paths through the given states");
  return it->second;
}

Simplex Flow::compose(int a, int b, int c, const Simplex& x, const Simplex& y) const {
  const auto& comp = composition(a, b, c);
  return comp.map(comp.domain->locate({x, y}));
}

int Flow::total_path_simplices() const {
  int total = 0;
  for (const auto& [pair, space] : paths_) total += space->total();
  return total;
}

FlowBuilder::FlowBuilder(std::vector<std::string> states) {
  std::set<std::string> seen(states.begin(), states.end());
  if (seen.size() != states.size()) throw ValidationError("duplicate state names");
  flow_.states_ = std::move(states);
}

FlowBuilder& FlowBuilder::set_paths(int a, int b, SimplicialSetPtr space) {
  if (a < 0 || b < 0 || a >= flow_.state_count() || b >= flow_.state_count())
    throw ValidationError("path space between unknown states");
  if (space->empty())
    flow_.paths_.erase({a, b});
  else
    flow_.paths_[{a, b}] = std::move(space);
  return *this;
}

FlowBuilder& FlowBuilder::set_composition(int a, int b, int c, const Rule& rule) {
  rules_[{a, b, c}] = rule;
  return *this;
}

FlowBuilder& FlowBuilder::set_cofibrant(bool flag) {
  flow_.cofibrant_ = flag;
  return *this;
}

FlowBuilder& FlowBuilder::set_free_structure(std::shared_ptr<const FreeStructure> free) {
  flow_.free_ = std::move(free);
  return *this;
}

Flow FlowBuilder::build() {
  Flow& x = flow_;
  x.compositions_.clear();
  for (const auto& [ab, left] : x.paths_)
    for (const auto& [bc, right] : x.paths_) {
      if (ab.second != bc.first) continue;
      const int a = ab.first, b = ab.second, c = bc.second;
      const auto& names = x.states_;
      const std::string where = names[a] + " -> " + names[b] + " -> " + names[c];
      if (!x.has_paths(a, c))
        throw ValidationError("composable paths " + where + " but no paths from " + names[a] +
                              " to " + names[c]);
      auto rule = rules_.find({a, b, c});
      if (rule == rules_.end()) throw ValidationError("missing composition " + where);
      auto domain = std::make_shared<const Product>(std::vector<SimplicialSetPtr>{left, right});
      const auto& dom = *domain->set();
      std::vector<std::vector<Simplex>> assignment(dom.dimension() + 1);
      for (int k = 0; k <= dom.dimension(); ++k)
        for (int i = 0; i < dom.count(k); ++i) {
          const auto comps = domain->components(nondegenerate(k, i));
          assignment[k].push_back(rule->second(comps[0], comps[1]));
        }
      x.compositions_.emplace(StateTriple{a, b, c},
                              Composition{domain, SimplicialMap(domain->set(), x.paths_.at({a, c}),
                                                                std::move(assignment))});
    }
  return x;
}

ValidationReport validate(const Flow& x) {
  ValidationReport report;
  const auto& names = x.states();
  for (const auto& [ab, space] : x.path_spaces())
    for (const auto& p : space->check())
      report.problems.push_back("P(" + names[ab.first] + "," + names[ab.second] + "): " + p);
  for (const auto& [abc, comp] : x.compositions()) {
    const auto [a, b, c] = abc;
    for (const auto& p : comp.map.check())
      report.problems.push_back("composition " + names[a] + "," + names[b] + "," + names[c] +
                                ": " + p);
  }
  if (!report.ok()) return report;
  for (const auto& [abc, comp] : x.compositions()) {
    const auto [a, b, c] = abc;
    for (const auto& [cd, third] : x.path_spaces()) {
      if (cd.first != c) continue;
      const int d = cd.second;
      Product triple({x.path_space(a, b), x.path_space(b, c), third});
      const auto& t = *triple.set();
      bool broken = false;
      for (int k = 0; k <= t.dimension() && !broken; ++k)
        for (int i = 0; i < t.count(k) && !broken; ++i) {
          const auto s = triple.components(nondegenerate(k, i));
          const Simplex left = x.compose(a, c, d, x.compose(a, b, c, s[0], s[1]), s[2]);
          const Simplex right = x.compose(a, b, d, s[0], x.compose(b, c, d, s[1], s[2]));
          if (left != right) {
            broken = true;
            report.problems.push_back("associativity fails on " + names[a] + "," + names[b] +
                                      "," + names[c] + "," + names[d] + " at (" +
                                      to_string(s[0]) + ", " + to_string(s[1]) + ", " +
                                      to_string(s[2]) + ")");
            if (!report.broken_associator) report.broken_associator = {{a, b, c, d}};
          }
        }
    }
  }
  return report;
}

namespace {

const SimplicialSetPtr& shared_point() {
  static const SimplicialSetPtr p = share(point());
  return p;
}

std::vector<std::string> numbered(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

Simplex local(const DisjointUnion& u, int part, const Simplex& s) {
  Simplex out = s;
  out.index -= u.offsets[part][s.base_dim];
  return out;
}

// Inserts a clash-free name for a state of the second operand.
std::string fresh_name(const std::string& name, const std::vector<std::string>& taken) {
  std::string candidate = name;
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end())
    candidate = "r." + candidate;
  return candidate;
}

}  // namespace

Flow glob(SimplicialSetPtr label) {
  FlowBuilder b({"0", "1"});
  b.set_paths(0, 1, std::move(label)).set_cofibrant(true);
  return b.build();
}

Flow directed_segment() { return glob(shared_point()); }

Flow terminal_flow() {
  FlowBuilder b({"0"});
  b.set_paths(0, 0, shared_point());
  b.set_composition(0, 0, 0, [](const Simplex&, const Simplex&) { return nondegenerate(0, 0); });
  return b.build();
}

Flow empty_flow() { return FlowBuilder({}).set_cofibrant(true).build(); }

Flow poset_flow(const Poset& p, std::vector<std::string> names) {
  if (names.empty()) names = numbered(p.size);
  if (static_cast<int>(names.size()) != p.size)
    throw ValidationError("poset flow needs one name per element");
  FlowBuilder b(std::move(names));
  auto less = [&](int x, int y) { return x != y && p.less_equal(x, y); };
  for (int x = 0; x < p.size; ++x)
    for (int y = 0; y < p.size; ++y)
      if (less(x, y)) b.set_paths(x, y, shared_point());
  for (int x = 0; x < p.size; ++x)
    for (int y = 0; y < p.size; ++y)
      for (int z = 0; z < p.size; ++z)
        if (less(x, y) && less(y, z))
          b.set_composition(x, y, z,
                            [](const Simplex&, const Simplex&) { return nondegenerate(0, 0); });
  return b.set_cofibrant(true).build();
}

Flow free_flow(const LabeledDigraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  for (const auto& e : g.edges)
    if (e.from < 0 || e.to < 0 || e.from >= n || e.to >= n)
      throw ValidationError("edge '" + e.name + "' has an unknown endpoint");
  if (auto cycle = g.find_cycle()) {
    std::string text;
    for (std::size_t i = 0; i < cycle->size(); ++i)
      text += (i ? " -> " : "") + g.vertices[(*cycle)[i]];
    throw ValidationError("digraph has a cycle: " + text);
  }
  auto free = std::make_shared<FreeStructure>();
  free->graph = g;
  std::vector<std::vector<int>> out(n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) out[g.edges[e].from].push_back(e);

  std::map<std::vector<int>, std::pair<StatePair, int>> where;
  for (int a = 0; a < n; ++a) {
    std::vector<int> path;
    std::function<void(int)> walk = [&](int v) {
      for (int e : out[v]) {
        path.push_back(e);
        const int to = g.edges[e].to;
        std::vector<SimplicialSetPtr> labels;
        for (int x : path) labels.push_back(g.edges[x].label);
        auto& list = free->summands[{a, to}];
        where[path] = {{a, to}, static_cast<int>(list.size())};
        list.push_back({path, std::make_shared<const Product>(labels)});
        walk(to);
        path.pop_back();
      }
    };
    walk(a);
  }
  for (const auto& [pair, list] : free->summands) {
    std::vector<SimplicialSetPtr> parts;
    for (const auto& s : list) parts.push_back(s.product->set());
    free->unions.emplace(pair, disjoint_union(parts));
  }

  FlowBuilder b(g.vertices);
  for (const auto& [pair, u] : free->unions) b.set_paths(pair.first, pair.second, u.set);
  const FreeStructure& fs = *free;
  for (const auto& [ab, uab] : fs.unions)
    for (const auto& [bc, ubc] : fs.unions) {
      if (ab.second != bc.first) continue;
      const StatePair ac{ab.first, bc.second};
      b.set_composition(ab.first, ab.second, bc.second,
                        [&fs, &where, ab, bc, ac](const Simplex& x, const Simplex& y) {
                          const auto& ux = fs.unions.at(ab);
                          const auto& uy = fs.unions.at(bc);
                          const int px = ux.part_of(x.base_dim, x.index);
                          const int py = uy.part_of(y.base_dim, y.index);
                          const auto& sx = fs.summands.at(ab)[px];
                          const auto& sy = fs.summands.at(bc)[py];
                          auto comps = sx.product->components(local(ux, px, x));
                          for (const auto& c : sy.product->components(local(uy, py, y)))
                            comps.push_back(c);
                          std::vector<int> path = sx.edges;
                          path.insert(path.end(), sy.edges.begin(), sy.edges.end());
                          const int pz = where.at(path).second;
                          const auto& sz = fs.summands.at(ac)[pz];
                          return fs.unions.at(ac).include(pz, sz.product->locate(comps));
                        });
    }
  b.set_cofibrant(true).set_free_structure(std::move(free));
  return b.build();
}

Flow cube_flow(int n) {
  if (n < 1 || n > 4) throw ValidationError("cube dimension must lie in [1, 4]");
  const int size = 1 << n;
  std::vector<std::string> names;
  for (int s = 0; s < size; ++s) {
    std::string name;
    for (int i = n - 1; i >= 0; --i) name += ((s >> i) & 1) ? '1' : '0';
    names.push_back(name);
  }
  auto below = [](int a, int b) { return a != b && (a & b) == a; };

  struct Interval {
    std::vector<std::vector<int>> chains;
    std::map<std::vector<int>, int> index;
    std::shared_ptr<const OrderedComplex> nerve;
  };
  std::map<StatePair, Interval> intervals;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (!below(a, b)) continue;
      Interval iv;
      std::vector<int> chain{a};
      std::function<void(int)> extend = [&](int v) {
        if (v == b) {
          iv.chains.push_back(chain);
          return;
        }
        for (int w = 0; w < size; ++w)
          if (below(v, w) && (w & b) == w) {
            chain.push_back(w);
            extend(w);
            chain.pop_back();
          }
      };
      extend(a);
      std::sort(iv.chains.begin(), iv.chains.end(),
                [](const auto& x, const auto& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
      for (int i = 0; i < static_cast<int>(iv.chains.size()); ++i) iv.index[iv.chains[i]] = i;
      const auto& chains = iv.chains;
      iv.nerve = std::make_shared<const OrderedComplex>(nerve_of_poset(
          {static_cast<int>(chains.size()), [&chains](int x, int y) {
             return std::includes(chains[y].begin(), chains[y].end(), chains[x].begin(),
                                  chains[x].end());
           }}));
      intervals.emplace(StatePair{a, b}, std::move(iv));
    }

  FlowBuilder builder(names);
  for (const auto& [pair, iv] : intervals) builder.set_paths(pair.first, pair.second, iv.nerve->set());
  auto sequence = [](const Interval& iv, const Simplex& s) {
    const auto& base = iv.nerve->sequence(s.base_dim, s.index);
    std::vector<int> out;
    for (int k : s.degeneracy) out.push_back(base[k]);
    return out;
  };
  for (const auto& [ab, left] : intervals)
    for (const auto& [bc, right] : intervals) {
      if (ab.second != bc.first) continue;
      const Interval& l = left;
      const Interval& r = right;
      const Interval& target = intervals.at({ab.first, bc.second});
      builder.set_composition(ab.first, ab.second, bc.second,
                              [&, sequence](const Simplex& x, const Simplex& y) {
                                const auto sx = sequence(l, x), sy = sequence(r, y);
                                std::vector<int> seq;
                                for (std::size_t k = 0; k < sx.size(); ++k) {
                                  std::vector<int> chain = l.chains[sx[k]];
                                  const auto& tail = r.chains[sy[k]];
                                  chain.insert(chain.end(), tail.begin() + 1, tail.end());
                                  seq.push_back(target.index.at(chain));
                                }
                                return target.nerve->locate(seq);
                              });
    }
  return builder.set_cofibrant(true).build();
}

Flow presented_discrete_flow(std::vector<std::string> states, std::vector<PresentedPath> paths,
                             const std::map<std::pair<int, int>, int>& table) {
  const int n = static_cast<int>(states.size());
  std::map<StatePair, std::vector<int>> by_pair;
  std::vector<int> slot(paths.size());
  for (int p = 0; p < static_cast<int>(paths.size()); ++p) {
    const auto& path = paths[p];
    if (path.from < 0 || path.to < 0 || path.from >= n || path.to >= n)
      throw ValidationError("path '" + path.name + "' has an unknown endpoint");
    auto& list = by_pair[{path.from, path.to}];
    slot[p] = static_cast<int>(list.size());
    list.push_back(p);
  }
  FlowBuilder b(states);
  for (const auto& [pair, list] : by_pair)
    b.set_paths(pair.first, pair.second, share(discrete(static_cast<int>(list.size()))));
  for (const auto& [ab, left] : by_pair)
    for (const auto& [bc, right] : by_pair) {
      if (ab.second != bc.first) continue;
      const StatePair ac{ab.first, bc.second};
      b.set_composition(ab.first, ab.second, bc.second, [&, ab, bc, ac](const Simplex& x, const Simplex& y) {
        const int p = by_pair.at(ab)[x.index], q = by_pair.at(bc)[y.index];
        auto it = table.find({p, q});
        if (it == table.end())
          throw ValidationError("composition of '" + paths[p].name + "' and '" + paths[q].name +
                                "' is not given");
        const int r = it->second;
        if (r < 0 || r >= static_cast<int>(paths.size()) || paths[r].from != ac.first ||
            paths[r].to != ac.second)
          throw ValidationError("composite of '" + paths[p].name + "' and '" + paths[q].name +
                                "' has the wrong endpoints");
        return nondegenerate(0, slot[r]);
      });
    }
  return b.build();
}

Flow restrict(const Flow& x, const std::vector<int>& states) {
  std::vector<int> keep = states;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> names;
  for (int s : keep) {
    if (s < 0 || s >= x.state_count()) throw ValidationError("unknown state in restriction");
    names.push_back(x.states()[s]);
  }
  const int m = static_cast<int>(keep.size());
  FlowBuilder b(names);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (x.has_paths(keep[i], keep[j])) b.set_paths(i, j, x.path_space(keep[i], keep[j]));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const int a = keep[i], c = keep[j], d = keep[k];
        if (x.has_paths(a, c) && x.has_paths(c, d))
          b.set_composition(i, j, k, [&x, a, c, d](const Simplex& u, const Simplex& v) {
            return x.compose(a, c, d, u, v);
          });
      }
  b.set_cofibrant(x.cofibrant() && m == x.state_count());
  if (m == x.state_count() && x.free_structure())
    b.set_free_structure(std::make_shared<const FreeStructure>(*x.free_structure()));
  return b.build();
}

Flow opposite(const Flow& x) {
  FlowBuilder b(x.states());
  for (const auto& [pair, space] : x.path_spaces()) b.set_paths(pair.second, pair.first, space);
  for (const auto& [abc, comp] : x.compositions()) {
    const auto [c, m, a] = abc;
    // in the opposite, P(a,m) x P(m,c) -> P(a,c) is y, x |-> x * y
    b.set_composition(a, m, c, [&x, a, m, c](const Simplex& u, const Simplex& v) {
      return x.compose(c, m, a, v, u);
    });
  }
  return b.set_cofibrant(x.cofibrant()).build();
}

Flow coproduct(const Flow& x, const Flow& y) {
  if (x.free_structure() && y.free_structure()) return pushout_over_states(x, y, {});
  std::vector<std::string> names = x.states();
  for (const auto& s : y.states()) names.push_back(fresh_name(s, names));
  const int shift = x.state_count();
  FlowBuilder b(names);
  for (const auto& [pair, space] : x.path_spaces()) b.set_paths(pair.first, pair.second, space);
  for (const auto& [pair, space] : y.path_spaces())
    b.set_paths(pair.first + shift, pair.second + shift, space);
  for (const auto& [abc, comp] : x.compositions()) {
    const auto [a, m, c] = abc;
    b.set_composition(a, m, c, [&x, a, m, c](const Simplex& u, const Simplex& v) {
      return x.compose(a, m, c, u, v);
    });
  }
  for (const auto& [abc, comp] : y.compositions()) {
    const auto [a, m, c] = abc;
    b.set_composition(a + shift, m + shift, c + shift,
                      [&y, a, m, c](const Simplex& u, const Simplex& v) {
                        return y.compose(a, m, c, u, v);
                      });
  }
  return b.set_cofibrant(x.cofibrant() && y.cofibrant()).build();
}

Flow pushout_over_states(const Flow& x, const Flow& y,
                         const std::vector<std::pair<int, int>>& shared) {
  if (!x.free_structure() || !y.free_structure())
    throw ValidationError("pushout over states needs two free flows");
  std::vector<int> image(y.state_count(), -1);
  std::set<int> glued_x;
  for (const auto& [xs, ys] : shared) {
    if (xs < 0 || xs >= x.state_count() || ys < 0 || ys >= y.state_count())
      throw ValidationError("unknown state in identification");
    if (image[ys] != -1 || !glued_x.insert(xs).second)
      throw ValidationError("identifications must match states one to one");
    image[ys] = xs;
  }
  LabeledDigraph g = x.free_structure()->graph;
  for (int s = 0; s < y.state_count(); ++s)
    if (image[s] == -1) {
      image[s] = static_cast<int>(g.vertices.size());
      g.vertices.push_back(fresh_name(y.states()[s], g.vertices));
    }
  for (auto e : y.free_structure()->graph.edges) {
    e.from = image[e.from];
    e.to = image[e.to];
    g.edges.push_back(std::move(e));
  }
  return free_flow(g);
}

FlowMorphism FlowMorphism::identity(const FlowPtr& x) {
  FlowMorphism f{x, x, {}, {}};
  for (int s = 0; s < x->state_count(); ++s) f.state_map.push_back(s);
  for (const auto& [pair, space] : x->path_spaces())
    f.path_maps.emplace(pair, SimplicialMap::identity(space));
  return f;
}

std::vector<std::string> FlowMorphism::check() const {
  std::vector<std::string> problems;
  const Flow& x = *source;
  const Flow& y = *target;
  if (static_cast<int>(state_map.size()) != x.state_count()) {
    problems.push_back("state map has the wrong size");
    return problems;
  }
  for (int s : state_map)
    if (s < 0 || s >= y.state_count()) {
      problems.push_back("state map leaves the target");
      return problems;
    }
  for (const auto& [pair, space] : x.path_spaces()) {
    const std::string where = x.states()[pair.first] + "," + x.states()[pair.second];
    auto it = path_maps.find(pair);
    if (it == path_maps.end()) {
      problems.push_back("no path map on P(" + where + ")");
      continue;
    }
    const int fa = state_map[pair.first], fb = state_map[pair.second];
    if (!y.has_paths(fa, fb)) {
      problems.push_back("P(" + where + ") maps into an empty path space");
      continue;
    }
    if (*it->second.source() != *space || *it->second.target() != *y.path_space(fa, fb))
      problems.push_back("path map on P(" + where + ") has the wrong source or target");
    for (const auto& p : it->second.check()) problems.push_back("P(" + where + "): " + p);
  }
  if (!problems.empty()) return problems;
  for (const auto& [abc, comp] : x.compositions()) {
    const auto [a, b, c] = abc;
    const int fa = state_map[a], fb = state_map[b], fc = state_map[c];
    const auto& dom = *comp.domain->set();
    bool broken = false;
    for (int k = 0; k <= dom.dimension() && !broken; ++k)
      for (int i = 0; i < dom.count(k) && !broken; ++i) {
        const auto s = comp.domain->components(nondegenerate(k, i));
        const Simplex lhs = apply(a, c, comp.map(nondegenerate(k, i)));
        const Simplex rhs = y.compose(fa, fb, fc, apply(a, b, s[0]), apply(b, c, s[1]));
        if (lhs != rhs) {
          broken = true;
          problems.push_back("f(x*y) != f(x)*f(y) on " + x.states()[a] + "," + x.states()[b] +
                             "," + x.states()[c] + " at (" + to_string(s[0]) + ", " +
                             to_string(s[1]) + ")");
        }
      }
  }
  return problems;
}

FlowMorphism compose(const FlowMorphism& g, const FlowMorphism& f) {
  FlowMorphism h{f.source, g.target, {}, {}};
  for (int s : f.state_map) h.state_map.push_back(g.state_map.at(s));
  for (const auto& [pair, map] : f.path_maps) {
    const StatePair image{f.state_map[pair.first], f.state_map[pair.second]};
    h.path_maps.emplace(pair, compose(g.path_maps.at(image), map));
  }
  return h;
}

FlowMorphism extend_free_morphism(const FlowPtr& source, const FlowPtr& target,
                                  std::vector<int> state_map,
                                  const std::vector<SimplicialMap>& edge_maps) {
  const FreeStructure* fs = source->free_structure();
  if (!fs) throw ValidationError("source is not a free flow");
  if (edge_maps.size() != fs->graph.edges.size())
    throw ValidationError("need one map per edge");
  if (static_cast<int>(state_map.size()) != source->state_count())
    throw ValidationError("state map has the wrong size");
  const Flow& y = *target;
  FlowMorphism f{source, target, std::move(state_map), {}};
  for (const auto& [pair, u] : fs->unions) {
    const int fa = f.state_map[pair.first], fb = f.state_map[pair.second];
    if (!y.has_paths(fa, fb)) throw ValidationError("paths sent into an empty path space");
    const auto& set = *u.set;
    std::vector<std::vector<Simplex>> assignment(set.dimension() + 1);
    for (int k = 0; k <= set.dimension(); ++k)
      for (int i = 0; i < set.count(k); ++i) {
        const int part = u.part_of(k, i);
        const auto& summand = fs->summands.at(pair)[part];
        const auto comps = summand.product->components(local(u, part, nondegenerate(k, i)));
        int from = f.state_map[pair.first];
        Simplex img;
        for (std::size_t j = 0; j < comps.size(); ++j) {
          const auto& edge = fs->graph.edges[summand.edges[j]];
          const Simplex piece = edge_maps[summand.edges[j]](comps[j]);
          const int to = f.state_map[edge.to];
          img = j == 0 ? piece
                       : y.compose(f.state_map[pair.first], from, to, img, piece);
          from = to;
        }
        assignment[k].push_back(img);
      }
    f.path_maps.emplace(pair, SimplicialMap(u.set, y.path_space(fa, fb), std::move(assignment)));
  }
  return f;
}

FlowMorphism extend_discrete_morphism(
    const FlowPtr& source, const FlowPtr& target, std::vector<int> state_map,
    const std::map<std::tuple<int, int, int>, Simplex>& point_images) {
  const Flow& x = *source;
  const Flow& y = *target;
  if (static_cast<int>(state_map.size()) != x.state_count())
    throw ValidationError("state map has the wrong size");
  for (const auto& [pair, space] : x.path_spaces())
    if (space->dimension() > 0) throw ValidationError("source path spaces are not discrete");
  FlowMorphism f{source, target, std::move(state_map), {}};
  std::map<std::tuple<int, int, int>, Simplex> memo(point_images);
  std::set<std::tuple<int, int, int>> active;
  std::function<std::optional<Simplex>(int, int, int)> resolve =
      [&](int a, int b, int i) -> std::optional<Simplex> {
    const auto key = std::make_tuple(a, b, i);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (!active.insert(key).second) return std::nullopt;
    std::optional<Simplex> found;
    for (const auto& [abc, comp] : x.compositions()) {
      const auto [p, m, q] = abc;
      if (p != a || q != b || found) continue;
      const auto& dom = *comp.domain->set();
      for (int j = 0; j < dom.count(0) && !found; ++j) {
        if (comp.map.image(0, j) != nondegenerate(0, i)) continue;
        const auto s = comp.domain->components(nondegenerate(0, j));
        auto left = resolve(a, m, s[0].index);
        auto right = left ? resolve(m, b, s[1].index) : std::nullopt;
        if (left && right)
          found = y.compose(f.state_map[a], f.state_map[m], f.state_map[b], *left, *right);
      }
    }
    active.erase(key);
    if (found) memo[key] = *found;
    return found;
  };
  for (const auto& [pair, space] : x.path_spaces()) {
    const int fa = f.state_map[pair.first], fb = f.state_map[pair.second];
    if (!y.has_paths(fa, fb)) throw ValidationError("paths sent into an empty path space");
    std::vector<std::vector<Simplex>> assignment(1);
    for (int i = 0; i < space->count(0); ++i) {
      auto img = resolve(pair.first, pair.second, i);
      if (!img)
        throw ValidationError("no image for a path from " + x.states()[pair.first] + " to " +
                              x.states()[pair.second]);
      assignment[0].push_back(*img);
    }
    f.path_maps.emplace(pair, SimplicialMap(space, y.path_space(fa, fb), std::move(assignment)));
  }
  return f;
}

FlowMorphism restrict_morphism(const FlowMorphism& f, const std::vector<int>& states) {
  std::vector<int> keep = states;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> image;
  for (int s : keep) image.push_back(f.state_map.at(s));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  FlowMorphism r{share(restrict(*f.source, keep)), share(restrict(*f.target, image)), {}, {}};
  auto position = [&](int s) {
    return static_cast<int>(std::lower_bound(image.begin(), image.end(), s) - image.begin());
  };
  for (int s : keep) r.state_map.push_back(position(f.state_map[s]));
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    for (int j = 0; j < static_cast<int>(keep.size()); ++j)
      if (f.source->has_paths(keep[i], keep[j]))
        r.path_maps.emplace(StatePair{i, j}, f.path_maps.at({keep[i], keep[j]}));
  return r;
}

}  // namespace dflow
