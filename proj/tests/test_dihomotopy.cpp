#include <catch_amalgamated.hpp>

#include "dflow/dihomotopy.hpp"
#include "fixtures.hpp"

using namespace dflow;

namespace {

const Poset chain3{3, [](int a, int b) { return a <= b; }};

bool holds(const StClassVerdict& v, const std::string& condition) {
  for (const auto& c : v.conditions)
    if (c.name == condition) return c.holds;
  FAIL("missing condition " << condition);
  return false;
}

FlowMorphism endpoints_into_chain() {
  return fixtures::segment_into(share(poset_flow(chain3)), 0, 2);
}

}  // namespace

TEST_CASE("surrounded relation") {
  const auto x = poset_flow(chain3);
  REQUIRE(surrounded(x, {0, 2}, {0, 1, 2}));
  REQUIRE(surrounded(x, {1}, {0, 2}));
  REQUIRE_FALSE(surrounded(x, {0}, {2}));
  REQUIRE_THROWS_AS(surrounded(x, {3}, {0}), ValidationError);
  const auto cube = cube_flow(3);
  const int n = cube.state_count();
  for (unsigned a = 0; a < (1u << n); a += 7)
    for (unsigned b = 0; b < (1u << n); b += 5) {
      std::vector<int> sa, sb, sc;
      for (int i = 0; i < n; ++i) {
        if (a >> i & 1u) sa.push_back(i);
        if (b >> i & 1u) sb.push_back(i);
        if ((b | 0x11u) >> i & 1u) sc.push_back(i);
      }
      if (surrounded(cube, sa, sb)) REQUIRE(surrounded(cube, sa, sc));
    }
}

TEST_CASE("homology S-equivalences") {
  REQUIRE(is_homology_s_equivalence(FlowMorphism::identity(share(cube_flow(2)))).holds);
  const auto pt = share(point());
  REQUIRE(is_homology_s_equivalence(
              fixtures::globe_morphism(SimplicialMap::constant(share(standard_simplex(1)), pt, 0)))
              .holds);
  const auto two = is_homology_s_equivalence(
      fixtures::globe_morphism(SimplicialMap::constant(share(boundary_simplex(1)), pt, 0)));
  REQUIRE_FALSE(two.holds);
  REQUIRE_FALSE(two.failures.empty());
  REQUIRE_FALSE(is_homology_s_equivalence(endpoints_into_chain()).holds);
}

TEST_CASE("ST0 and ST1 examples") {
  const auto f = endpoints_into_chain();
  REQUIRE(f.check().empty());
  REQUIRE(check_st0(f).member);

  const auto bar = share(standard_simplex(1));
  const auto sub = fixtures::segment_into(
      share(free_flow(fixtures::digraph(3, {{0, 1}, {1, 2}}, {share(point()), bar}))), 0, 2);
  const auto st0 = check_st0(sub);
  REQUIRE_FALSE(st0.member);
  REQUIRE_FALSE(holds(st0, "germ-condition"));
  REQUIRE(holds(st0, "restriction-equivalence"));
  REQUIRE(check_st1(sub).member);
  REQUIRE(check_st2(sub).member);

  const auto id = FlowMorphism::identity(share(cube_flow(2)));
  for (int level = 0; level <= 3; ++level) REQUIRE(check_st(id, level).member);
  REQUIRE_FALSE(check_st0(id).semi_decision_note.empty());
}

TEST_CASE("class inclusions and agreement on the morphism battery") {
  for (const auto& [name, f] : fixtures::morphisms()) {
    INFO(name);
    REQUIRE(f.check().empty());
    const bool st0 = check_st0(f).member;
    const bool st1 = check_st1(f).member;
    if (st0) REQUIRE(st1);
    if (f.target->cofibrant()) REQUIRE(check_st2(f).member == st1);
  }
}

TEST_CASE("ST1 is not closed under composition") {
  const auto [f, g] = fixtures::composition_witness();
  REQUIRE(validate(*g.target).ok());
  REQUIRE(f.check().empty());
  REQUIRE(g.check().empty());
  REQUIRE(check_st1(f).member);
  REQUIRE(check_st1(g).member);
  const auto gf = check_st1(compose(g, f));
  REQUIRE_FALSE(gf.member);
  REQUIRE_FALSE(holds(gf, "germ-condition"));
  for (const auto& [pair, space] : g.target->path_spaces()) REQUIRE(is_homology_point(*space));
}

TEST_CASE("essential subsets") {
  const auto x = poset_flow(chain3);
  REQUIRE(is_essential(x, {0, 1, 2}));
  REQUIRE(is_essential(x, {0, 2}));
  REQUIRE_FALSE(is_essential(x, {2}));
  const auto all = essential_subsets(x);
  REQUIRE(all == std::vector<std::vector<int>>{{0, 2}, {0, 1, 2}});

  for (const auto& [name, flow] : fixtures::flows()) {
    if (flow.state_count() > essential_size_guard) continue;
    INFO(name);
    std::vector<int> every(flow.state_count());
    for (int i = 0; i < flow.state_count(); ++i) every[i] = i;
    REQUIRE(is_essential(flow, every, CofibrancyMode::permissive));
  }

  const auto cube = cube_flow(2);
  const auto minus = branching_space(cube), plus = merging_space(cube);
  bool trivial = true;
  for (int s : {1, 2})
    trivial = trivial && is_homology_point(*germ_component(minus, s).set) &&
              is_homology_point(*germ_component(plus, s).set);
  REQUIRE(is_essential(cube, {0, 3}) == trivial);

  REQUIRE_THROWS_AS(is_essential(terminal_flow(), {0}), CofibrancyError);
  const auto big = poset_flow({13, [](int a, int b) { return a <= b; }});
  REQUIRE_THROWS_AS(essential_subsets(big), SizeGuardError);
}

TEST_CASE("ST3") {
  REQUIRE(check_st3(FlowMorphism::identity(share(poset_flow(chain3)))).member);
  REQUIRE(check_st3(endpoints_into_chain()).member);
  // the essential set {0, 1} of the segment lands on a non-essential set
  const auto bad = fixtures::segment_into(share(poset_flow(chain3)), 0, 1);
  const auto v = check_st3(bad);
  REQUIRE_FALSE(v.member);
  REQUIRE_FALSE(holds(v, "essential-correspondence"));
  REQUIRE(v.conditions[0].details == std::vector<std::string>{"{0,1}"});
}
