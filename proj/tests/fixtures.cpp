#include "fixtures.hpp"

namespace fixtures {

std::vector<SimplicialSetPtr> labels() {
  return {share(point()),           share(standard_simplex(1)), share(boundary_simplex(1)),
          share(boundary_simplex(2)), share(standard_simplex(2)), share(boundary_simplex(3)),
          share(discrete(3)),       share(empty_set())};
}

std::vector<SimplicialSetPtr> small_labels() {
  return {share(point()), share(standard_simplex(1)), share(boundary_simplex(1)),
          share(boundary_simplex(2))};
}

LabeledDigraph digraph(int vertices, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<SimplicialSetPtr>& edge_labels) {
  LabeledDigraph g;
  for (int i = 0; i < vertices; ++i) g.vertices.push_back(std::string(1, static_cast<char>('a' + i)));
  const auto pt = share(point());
  for (std::size_t e = 0; e < edges.size(); ++e)
    g.edges.push_back({edges[e].first, edges[e].second,
                       e < edge_labels.size() ? edge_labels[e] : pt, "e" + std::to_string(e)});
  return g;
}

LabeledDigraph random_digraph(std::mt19937& rng, int max_vertices) {
  const auto pool = small_labels();
  const int n = 1 + static_cast<int>(rng() % max_vertices);
  std::vector<std::pair<int, int>> edges;
  std::vector<SimplicialSetPtr> edge_labels;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng() % 3 == 0) {
        edges.emplace_back(a, b);
        edge_labels.push_back(pool[rng() % pool.size()]);
      }
  return digraph(n, edges, edge_labels);
}

std::vector<NamedFlow> flows() {
  std::vector<NamedFlow> out;
  const auto ls = labels();
  const char* label_names[] = {"point", "interval", "two-points", "circle",
                               "triangle", "sphere", "three-points", "empty"};
  for (std::size_t i = 0; i < ls.size(); ++i)
    out.push_back({std::string("glob-") + label_names[i], glob(ls[i])});
  out.push_back({"terminal", terminal_flow()});
  out.push_back({"poset-chain-3", poset_flow({3, [](int a, int b) { return a <= b; }})});
  out.push_back({"poset-antichain", poset_flow({2, [](int a, int b) { return a == b; }})});
  out.push_back({"poset-square", poset_flow({4, [](int a, int b) { return (a & b) == a; }})});
  out.push_back({"cube-1", cube_flow(1)});
  out.push_back({"cube-2", cube_flow(2)});
  out.push_back({"cube-3", cube_flow(3)});
  const auto pt = share(point());
  const auto bar = share(standard_simplex(1));
  const auto two = share(boundary_simplex(1));
  const auto circle = share(boundary_simplex(2));
  out.push_back({"free-chain", free_flow(digraph(3, {{0, 1}, {1, 2}}))});
  out.push_back({"free-fork", free_flow(digraph(3, {{0, 1}, {0, 2}}, {two, pt}))});
  out.push_back({"free-merge", free_flow(digraph(3, {{1, 0}, {2, 0}}))});
  out.push_back({"free-diamond",
                 free_flow(digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {bar, circle, two, pt}))});
  out.push_back({"free-subdivided", free_flow(digraph(3, {{0, 1}, {1, 2}}, {bar, bar}))});
  out.push_back({"free-mixed", free_flow(digraph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {1, 3}},
                                                 {circle, pt, two, bar, pt}))});
  out.push_back({"presented",
                 presented_discrete_flow({"0", "1", "2"},
                                         {{"p", 0, 1}, {"q", 1, 2}, {"r", 0, 2}, {"s", 0, 2}},
                                         {{{0, 1}, 3}})});
  out.push_back({"opposite-diamond", opposite(out[out.size() - 4].flow)});
  out.push_back({"coproduct", coproduct(cube_flow(2), directed_segment())});
  out.push_back({"restricted-cube", restrict(cube_flow(2), {0, 3})});
  return out;
}

}  // namespace fixtures

namespace fixtures {

FlowMorphism globe_morphism(const SimplicialMap& m) {
  FlowMorphism f{share(glob(m.source())), share(glob(m.target())), {0, 1}, {}};
  if (!m.source()->empty()) f.path_maps.emplace(StatePair{0, 1}, m);
  return f;
}

FlowMorphism segment_into(const FlowPtr& target, int a, int b, int vertex) {
  return extend_discrete_morphism(share(directed_segment()), target, {a, b},
                                  {{{0, 1, 0}, nondegenerate(0, vertex)}});
}

namespace {

// One vertex, a loop, and a 2-simplex whose first face is the loop and
// whose other faces are degenerate: a disk with a homology point's homology.
SimplicialSetPtr pinched_disk() {
  FiniteSimplicialSet s;
  s.add_vertex();
  s.add_simplex({nondegenerate(0, 0), nondegenerate(0, 0)});
  const Simplex flat = degeneracy_of(nondegenerate(0, 0), 0);
  s.add_simplex({nondegenerate(1, 0), flat, flat});
  return share(std::move(s));
}

// Interval onto the loop of the pinched disk.
Simplex wrap(const Simplex& y) { return Simplex{y.base_dim, 0, y.degeneracy}; }

}  // namespace

Flow pinched_flow() {
  const auto pt = share(point());
  FlowBuilder b({"0", "1", "2", "3"});
  b.set_paths(0, 1, pt).set_paths(1, 2, pt).set_paths(0, 2, pt);
  b.set_paths(2, 3, share(standard_simplex(1)));
  b.set_paths(1, 3, pinched_disk()).set_paths(0, 3, pinched_disk());
  b.set_composition(0, 1, 2, [](const Simplex& x, const Simplex&) { return Simplex{0, 0, x.degeneracy}; });
  b.set_composition(1, 2, 3, [](const Simplex&, const Simplex& y) { return wrap(y); });
  b.set_composition(0, 2, 3, [](const Simplex&, const Simplex& y) { return wrap(y); });
  b.set_composition(0, 1, 3, [](const Simplex&, const Simplex& y) { return y; });
  return b.build();
}

std::pair<FlowMorphism, FlowMorphism> composition_witness() {
  const auto chain = share(poset_flow({4, [](int a, int b) { return a <= b; }}));
  const auto pinched = share(pinched_flow());
  const Simplex v = nondegenerate(0, 0);
  auto f = segment_into(chain, 0, 3);
  auto g = extend_discrete_morphism(chain, pinched, {0, 1, 2, 3},
                                    {{{0, 1, 0}, v}, {{1, 2, 0}, v}, {{2, 3, 0}, v}});
  return {f, g};
}

std::vector<NamedMorphism> morphisms() {
  std::vector<NamedMorphism> out;
  out.push_back({"globe-inclusion", globe_morphism(boundary_inclusion(1))});
  out.push_back({"globe-collapse",
                 globe_morphism(SimplicialMap::constant(share(boundary_simplex(1)), share(point()), 0))});
  out.push_back({"circle-into-disk", globe_morphism(boundary_inclusion(2))});
  out.push_back({"identity-segment", FlowMorphism::identity(share(directed_segment()))});
  out.push_back({"identity-cube-2", FlowMorphism::identity(share(cube_flow(2)))});
  for (int n = 2; n <= 3; ++n) {
    const auto cube = share(cube_flow(n));
    out.push_back({"segment-into-cube-" + std::to_string(n),
                   segment_into(cube, 0, cube->state_count() - 1)});
  }
  const auto bar = share(standard_simplex(1));
  out.push_back({"subdivision-interval",
                 segment_into(share(free_flow(digraph(3, {{0, 1}, {1, 2}}, {share(point()), bar}))), 0, 2)});
  out.push_back({"subdivision-point", segment_into(share(free_flow(digraph(3, {{0, 1}, {1, 2}}))), 0, 2)});
  out.push_back({"fork-into-segment",
                 segment_into(share(free_flow(digraph(3, {{0, 1}, {0, 2}}))), 0, 1)});
  const auto [f, g] = composition_witness();
  out.push_back({"endpoints-into-chain", f});
  out.push_back({"chain-into-pinched", g});
  out.push_back({"pinched-composite", compose(g, f)});
  out.push_back({"from-empty",
                 FlowMorphism{share(empty_flow()), share(glob(share(boundary_simplex(2)))), {}, {}}});
  return out;
}

}  // namespace fixtures
