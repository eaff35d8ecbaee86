#include <random>

#include <catch_amalgamated.hpp>

#include "dflow/chains.hpp"
#include "dflow/constructions.hpp"

using namespace dflow;

namespace {

AbelianGroup Z(int r = 1) { return AbelianGroup{r, {}}; }
const AbelianGroup zero{};

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<SimplicialSetPtr> battery() {
  return {share(point()),          share(standard_simplex(1)), share(boundary_simplex(1)),
          share(boundary_simplex(2)), share(standard_simplex(2)), share(boundary_simplex(3)),
          share(discrete(3)),      share(empty_set())};
}

bool reduced_acyclic(const FiniteSimplicialSet& s) {
  for (int n = 0; n <= s.dimension() + 1; ++n)
    if (!reduced_homology(s, n).trivial()) return false;
  return true;
}

}  // namespace

TEST_CASE("standard simplices have binomial simplex counts") {
  for (int n = 0; n <= 4; ++n) {
    const auto s = standard_simplex(n);
    for (int k = 0; k <= n; ++k) REQUIRE(s.count(k) == binomial(n + 1, k + 1));
    REQUIRE(s.check().empty());
  }
  const auto d2 = standard_simplex(2);
  REQUIRE(d2.count(0) == 3);
  REQUIRE(d2.count(1) == 3);
  REQUIRE(d2.count(2) == 1);
}

TEST_CASE("boundaries of simplices") {
  REQUIRE_THROWS_AS(boundary_simplex(0), std::invalid_argument);
  const auto s0 = boundary_simplex(1);
  REQUIRE(s0.count(0) == 2);
  REQUIRE(s0.dimension() == 0);
  const auto circle = boundary_simplex(2);
  REQUIRE(circle.count(0) == 3);
  REQUIRE(circle.count(1) == 3);
  REQUIRE(homology(circle, 0) == Z());
  REQUIRE(homology(circle, 1) == Z());
  REQUIRE(homology(circle, 2) == zero);
  const auto sphere = boundary_simplex(3);
  REQUIRE(homology(sphere, 0) == Z());
  REQUIRE(homology(sphere, 1) == zero);
  REQUIRE(homology(sphere, 2) == Z());
  REQUIRE(boundary_inclusion(3).check().empty());
}

TEST_CASE("canonical dump of the triangle boundary") {
  REQUIRE(dump(boundary_simplex(2)) ==
          "dim 0: 3\n"
          "dim 1: 3\n"
          "  1.0: 0.1 0.0\n"
          "  1.1: 0.2 0.0\n"
          "  1.2: 0.2 0.1\n");
}

TEST_CASE("products") {
  const auto unit = product(standard_simplex(1), point());
  REQUIRE(isomorphic(unit, standard_simplex(1)));

  const auto square = product(standard_simplex(1), standard_simplex(1));
  REQUIRE(square.count(0) == 4);
  REQUIRE(square.count(1) == 5);
  REQUIRE(square.count(2) == 2);
  REQUIRE(square.check().empty());
  REQUIRE(is_homology_point(square));

  const auto torus = product(boundary_simplex(2), boundary_simplex(2));
  REQUIRE(homology(torus, 1) == Z(2));
  REQUIRE(homology(torus, 2) == Z());

  std::mt19937 rng(7);
  const auto sets = battery();
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = sets[pick(rng)];
    const auto b = sets[pick(rng)];
    Product p({a, b});
    REQUIRE(p.set()->euler_characteristic() ==
            a->euler_characteristic() * b->euler_characteristic());
    REQUIRE(p.set()->vertex_count() == a->vertex_count() * b->vertex_count());
    REQUIRE(p.projection(0).check().empty());
    REQUIRE(p.projection(1).check().empty());
  }
}

TEST_CASE("quotients") {
  auto interval = share(standard_simplex(1));
  SECTION("identifying the endpoints of an interval gives a circle") {
    const auto q = quotient(interval, {{nondegenerate(0, 0), nondegenerate(0, 1)}});
    REQUIRE(q.set->count(0) == 1);
    REQUIRE(q.set->count(1) == 1);
    REQUIRE(homology(*q.set, 0) == Z());
    REQUIRE(homology(*q.set, 1) == Z());
    REQUIRE(q.projection.check().empty());
  }
  SECTION("no pairs is an isomorphic copy") {
    const auto q = quotient(interval, {});
    REQUIRE(*q.set == *interval);
  }
  SECTION("two points identified") {
    const auto q = quotient(share(boundary_simplex(1)), {{nondegenerate(0, 0), nondegenerate(0, 1)}});
    REQUIRE(q.set->total() == 1);
  }
  SECTION("an edge identified with a degenerate edge collapses") {
    const auto q = quotient(interval, {{nondegenerate(1, 0), degeneracy_of(nondegenerate(0, 0), 0)}});
    REQUIRE(q.set->total() == 1);
    REQUIRE(q.projection(nondegenerate(1, 0)).degenerate());
  }
  SECTION("collapsing the boundary of a triangle gives a 2-sphere") {
    auto tri = share(standard_simplex(2));
    const Simplex flat = degeneracy_of(nondegenerate(0, 0), 0);
    const auto q = quotient(tri, {{nondegenerate(1, 0), flat},
                                  {nondegenerate(1, 1), flat},
                                  {nondegenerate(1, 2), flat}});
    REQUIRE(q.set->count(0) == 1);
    REQUIRE(q.set->count(1) == 0);
    REQUIRE(q.set->count(2) == 1);
    REQUIRE(homology(*q.set, 2) == Z());
    REQUIRE(homology(*q.set, 1) == zero);
    REQUIRE(q.set->check().empty());
  }
  SECTION("quotienting again by collapsed pairs is an isomorphism") {
    auto circle = share(boundary_simplex(2));
    std::vector<std::pair<Simplex, Simplex>> pairs{{nondegenerate(0, 0), nondegenerate(0, 2)}};
    const auto once = quotient(circle, pairs);
    std::vector<std::pair<Simplex, Simplex>> image_pairs;
    for (const auto& [u, v] : pairs) image_pairs.emplace_back(once.projection(u), once.projection(v));
    const auto twice = quotient(once.set, image_pairs);
    REQUIRE(*twice.set == *once.set);
  }
}

TEST_CASE("cones and mapping cones") {
  for (const auto& s : battery()) {
    const Cone c = cone(s);
    REQUIRE(c.set->check().empty());
    REQUIRE(reduced_acyclic(*c.set));
    REQUIRE(c.set->vertex_count() == s->vertex_count() + 1);
  }
  auto circle = share(boundary_simplex(2));
  const auto id = mapping_cone(SimplicialMap::identity(circle));
  REQUIRE(reduced_acyclic(*id.set));

  const auto m = mapping_cone(boundary_inclusion(1));
  REQUIRE(homology(*m.set, 0) == Z());
  REQUIRE(homology(*m.set, 1) == Z());
  REQUIRE(m.target_inclusion.check().empty());

  // cone over the empty set adds an isolated point
  auto empty = share(empty_set());
  const auto from_empty = mapping_cone(SimplicialMap::constant(empty, circle, 0));
  REQUIRE(from_empty.set->vertex_count() == 4);
  REQUIRE(homology(*from_empty.set, 0) == Z(2));
}

TEST_CASE("nerves of posets") {
  REQUIRE(isomorphic(*nerve_of_poset({1, [](int a, int b) { return a <= b; }}).set(), point()));
  REQUIRE(isomorphic(*nerve_of_poset({2, [](int a, int b) { return a <= b; }}).set(),
                     standard_simplex(1)));
  // 0 is a minimum, 1..3 pairwise incomparable
  const Poset star{4, [](int a, int b) { return a == b || a == 0; }};
  const auto n = nerve_of_poset(star);
  REQUIRE(reduced_acyclic(*n.set()));
  REQUIRE(n.locate({0, 0, 2}) == Simplex{1, n.locate({0, 2}).index, {0, 0, 1}});
}

TEST_CASE("components and homology points") {
  REQUIRE(is_homology_point(standard_simplex(5)));
  REQUIRE_FALSE(is_homology_point(boundary_simplex(1)));
  REQUIRE_FALSE(is_homology_point(boundary_simplex(2)));
  REQUIRE_FALSE(is_homology_point(empty_set()));
  REQUIRE(pi0(empty_set()).empty());
  REQUIRE(pi0(boundary_simplex(1)).size() == 2);
}

TEST_CASE("chain complexes square to zero and sums add") {
  for (const auto& s : battery()) {
    REQUIRE(normalized_chains(*s).check().empty());
    REQUIRE(s->check().empty());
  }
  const auto sets = battery();
  for (const auto& a : sets)
    for (const auto& b : sets) {
      const auto u = disjoint_union({a, b});
      for (int n = 0; n <= 3; ++n)
        REQUIRE(homology(*u.set, n) == direct_sum(homology(*a, n), homology(*b, n)));
    }
}

TEST_CASE("induced maps on homology") {
  auto circle = share(boundary_simplex(2));
  REQUIRE(induced_map(SimplicialMap::identity(circle), 1) == IntegerMatrix::Identity(1, 1));
  // collapsing the circle to a point kills H_1
  auto pt = share(point());
  const auto c = SimplicialMap::constant(circle, pt, 0);
  REQUIRE(c.check().empty());
  REQUIRE(induced_map(c, 1).size() == 0);
  REQUIRE(induced_map(c, 0) == IntegerMatrix::Identity(1, 1));
}

TEST_CASE("isomorphism search respects structure") {
  REQUIRE_FALSE(isomorphic(boundary_simplex(2), product(standard_simplex(1), point())));
  REQUIRE(isomorphic(boundary_simplex(2), boundary_simplex(2)));
  const auto a = disjoint_union({share(standard_simplex(1)), share(point()), share(standard_simplex(1))});
  const auto b = disjoint_union({share(point()), share(standard_simplex(1)), share(standard_simplex(1))});
  REQUIRE(isomorphic(*a.set, *b.set));
}
