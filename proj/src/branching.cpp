#include "dflow/branching.hpp"

#include <algorithm>

namespace dflow {

namespace {

int first_vertex(const FiniteSimplicialSet& s, int dim, int index) {
  while (dim > 0) {
    const Simplex& f = s.faces(dim, index)[0];
    dim = f.base_dim;
    index = f.index;
  }
  return index;
}

// Path-space simplices paired by the coequalizer: x * y with x (minus) or y (plus).
template <class Visit>
void for_each_relation(const Flow& x, Side side, Visit visit) {
  for (const auto& [abc, comp] : x.compositions()) {
    const auto [a, b, c] = abc;
    const auto& dom = *comp.domain->set();
    for (int k = 0; k <= dom.dimension(); ++k)
      for (int i = 0; i < dom.count(k); ++i) {
        const auto s = comp.domain->components(nondegenerate(k, i));
        const Simplex composite = comp.map(nondegenerate(k, i));
        if (side == Side::minus)
          visit(a, c, composite, a, b, s[0]);
        else
          visit(a, c, composite, b, c, s[1]);
      }
  }
}

}  // namespace

int GermSpace::part(int a, int b) const {
  auto it = std::find(pairs.begin(), pairs.end(), StatePair{a, b});
  return it == pairs.end() ? -1 : static_cast<int>(it - pairs.begin());
}

Simplex GermSpace::germ(int a, int b, const Simplex& s) const {
  const int p = part(a, b);
  if (p < 0) throw std::out_of_range("no paths between the given states");
  return germ_projection(paths.include(p, s));
}

int GermSpace::state_of_simplex(int dim, int index) const {
  return state_of[first_vertex(*total, dim, index)];
}

GermSpace germ_space(const Flow& x, Side side) {
  GermSpace g;
  g.side = side;
  std::vector<SimplicialSetPtr> parts;
  for (const auto& [pair, space] : x.path_spaces()) {
    g.pairs.push_back(pair);
    parts.push_back(space);
  }
  g.paths = disjoint_union(parts);
  std::vector<std::pair<Simplex, Simplex>> relation;
  for_each_relation(x, side, [&](int a, int c, const Simplex& composite, int p, int q,
                                 const Simplex& piece) {
    relation.emplace_back(g.paths.include(g.part(a, c), composite),
                          g.paths.include(g.part(p, q), piece));
  });
  auto q = quotient(g.paths.set, relation);
  g.total = q.set;
  g.germ_projection = q.projection;
  g.state_of.assign(g.total->vertex_count(), -1);
  for (std::size_t p = 0; p < g.pairs.size(); ++p) {
    const int state = side == Side::minus ? g.pairs[p].first : g.pairs[p].second;
    for (int v = 0; v < parts[p]->vertex_count(); ++v)
      g.state_of[g.germ_projection(g.paths.include(p, nondegenerate(0, v))).index] = state;
  }
  return g;
}

GermSpace branching_space(const Flow& x) { return germ_space(x, Side::minus); }
GermSpace merging_space(const Flow& x) { return germ_space(x, Side::plus); }

Subcomplex germ_component(const GermSpace& g, int state) {
  return subcomplex(g.total, [&](int dim, int index) { return g.state_of_simplex(dim, index) == state; });
}

namespace {

void check_state(const Flow& x, int state) {
  if (state < 0 || state >= x.state_count()) throw ValidationError("unknown state");
}

}  // namespace

FiniteSimplicialSet branching_component(const Flow& x, int state) {
  check_state(x, state);
  return *germ_component(branching_space(x), state).set;
}

FiniteSimplicialSet merging_component(const Flow& x, int state) {
  check_state(x, state);
  return *germ_component(merging_space(x), state).set;
}

GermSpace homotopy_germ_space(const Flow& x, Side side, CofibrancyMode mode) {
  if (!x.cofibrant() && mode == CofibrancyMode::strict)
    throw CofibrancyError("flow is not flagged cofibrant; use permissive mode to compute the "
                          "plain germ space instead");
  GermSpace g = germ_space(x, side);
  if (!x.cofibrant())
    g.warnings.push_back("flow is not flagged cofibrant; computed the plain germ space");
  return g;
}

GermSpace free_branching_closed_form(const LabeledDigraph& graph) {
  const Flow x = free_flow(graph);
  const FreeStructure& fs = *x.free_structure();
  GermSpace g;
  g.side = Side::minus;
  std::vector<SimplicialSetPtr> labels;
  for (const auto& e : graph.edges) labels.push_back(e.label);
  const DisjointUnion edges = disjoint_union(labels);
  g.total = edges.set;
  g.state_of.assign(g.total->vertex_count(), -1);
  for (std::size_t e = 0; e < graph.edges.size(); ++e)
    for (int v = 0; v < labels[e]->vertex_count(); ++v)
      g.state_of[edges.include(e, nondegenerate(0, v)).index] = graph.edges[e].from;

  std::vector<SimplicialSetPtr> parts;
  for (const auto& [pair, space] : x.path_spaces()) {
    g.pairs.push_back(pair);
    parts.push_back(space);
  }
  g.paths = disjoint_union(parts);
  const auto& total = *g.paths.set;
  std::vector<std::vector<Simplex>> assignment(total.dimension() + 1);
  for (int k = 0; k <= total.dimension(); ++k)
    for (int i = 0; i < total.count(k); ++i) {
      const int p = g.paths.part_of(k, i);
      const auto& u = fs.unions.at(g.pairs[p]);
      Simplex s = nondegenerate(k, i);
      s.index -= g.paths.offsets[p][k];
      const int q = u.part_of(k, s.index);
      s.index -= u.offsets[q][k];
      const auto& summand = fs.summands.at(g.pairs[p])[q];
      const int first = summand.edges.front();
      assignment[k].push_back(edges.include(first, summand.product->components(s)[0]));
    }
  g.germ_projection = SimplicialMap(g.paths.set, g.total, std::move(assignment));
  return g;
}

UniversalVerdict verify_universal_property(const Flow& x, const GermSpace& g,
                                           const SimplicialMap& phi) {
  UniversalVerdict v;
  for_each_relation(x, g.side, [&](int a, int c, const Simplex& composite, int p, int q,
                                   const Simplex& piece) {
    if (v.witness) return;
    const Simplex s = g.paths.include(g.part(a, c), composite);
    const Simplex t = g.paths.include(g.part(p, q), piece);
    if (phi(s) != phi(t)) v.witness = {s, t};
  });
  v.coequalizes = !v.witness;
  if (!v.coequalizes) return v;

  const auto& total = *g.total;
  const auto& paths = *g.paths.set;
  std::vector<std::vector<std::optional<Simplex>>> chosen(total.dimension() + 1);
  for (int k = 0; k <= total.dimension(); ++k) chosen[k].resize(total.count(k));
  for (int k = 0; k <= paths.dimension(); ++k)
    for (int i = 0; i < paths.count(k); ++i) {
      const Simplex h = g.germ_projection(nondegenerate(k, i));
      if (!h.degenerate() && !chosen[k][h.index]) chosen[k][h.index] = phi(nondegenerate(k, i));
    }
  std::vector<std::vector<Simplex>> assignment(total.dimension() + 1);
  v.unique = true;
  for (int k = 0; k <= total.dimension(); ++k)
    for (int i = 0; i < total.count(k); ++i) {
      if (!chosen[k][i]) {
        v.unique = false;
        return v;
      }
      assignment[k].push_back(*chosen[k][i]);
    }
  SimplicialMap factor(g.total, phi.target(), std::move(assignment));
  for (int k = 0; k <= paths.dimension(); ++k)
    for (int i = 0; i < paths.count(k); ++i)
      if (factor(g.germ_projection(nondegenerate(k, i))) != phi(nondegenerate(k, i))) return v;
  if (!factor.check().empty()) return v;
  v.factor = std::move(factor);
  return v;
}

SimplicialMap germ_map(const FlowMorphism& f, const GermSpace& source, const GermSpace& target) {
  const auto& total = *source.total;
  const auto& paths = *source.paths.set;
  std::vector<std::vector<std::optional<Simplex>>> image(total.dimension() + 1);
  for (int k = 0; k <= total.dimension(); ++k) image[k].resize(total.count(k));
  for (int k = 0; k <= paths.dimension(); ++k)
    for (int i = 0; i < paths.count(k); ++i) {
      const Simplex h = source.germ_projection(nondegenerate(k, i));
      if (h.degenerate() || image[k][h.index]) continue;
      const int p = source.paths.part_of(k, i);
      const auto [a, b] = source.pairs[p];
      Simplex s = nondegenerate(k, i);
      s.index -= source.paths.offsets[p][k];
      image[k][h.index] =
          target.germ(f.state_map[a], f.state_map[b], f.apply(a, b, s));
    }
  std::vector<std::vector<Simplex>> assignment(total.dimension() + 1);
  for (int k = 0; k <= total.dimension(); ++k)
    for (int i = 0; i < total.count(k); ++i) assignment[k].push_back(*image[k][i]);
  return SimplicialMap(source.total, target.total, std::move(assignment));
}

SimplicialMap branching_map(const FlowMorphism& f) {
  return germ_map(f, branching_space(*f.source), branching_space(*f.target));
}

SimplicialMap merging_map(const FlowMorphism& f) {
  return germ_map(f, merging_space(*f.source), merging_space(*f.target));
}

}  // namespace dflow
