#include <algorithm>
#include <array>
#include <random>

#include "doctest.h"
#include "gpg/planarity.hpp"

using namespace gpg;

namespace {

SimpleGraph random_graph(std::mt19937& rng, std::size_t v, double density) {
  SimpleGraph g(v);
  std::bernoulli_distribution coin(density);
  for (Vertex a = 0; a < v; ++a)
    for (Vertex b = a + 1; b < v; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

// Random planar graph: triangulate a random point set incrementally by
// adding vertices inside faces of a triangle fan. Sparser by edge removal.
SimpleGraph random_planar(std::mt19937& rng, std::size_t v, double keep) {
  SimpleGraph g(v);
  std::vector<std::array<Vertex, 3>> faces;
  if (v < 3) return g;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  faces.push_back({0, 1, 2});
  faces.push_back({0, 1, 2});
  for (Vertex x = 3; x < v; ++x) {
    const std::size_t f = rng() % faces.size();
    const auto [a, b, c] = faces[f];
    g.add_edge(x, a);
    g.add_edge(x, b);
    g.add_edge(x, c);
    faces[f] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({a, c, x});
  }
  SimpleGraph out(v);
  std::bernoulli_distribution coin(keep);
  for (auto [a, b] : g.edges())
    if (coin(rng)) out.add_edge(a, b);
  return out;
}

bool lr_only(const SimpleGraph& g) { return is_planar(g, PlanarityOptions{false}).planar; }

}  // namespace

TEST_CASE("classic graphs") {
  CHECK(is_planar(complete_graph(4)).planar);
  const auto k5 = is_planar(complete_graph(5));
  CHECK_FALSE(k5.planar);
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)).planar);
  CHECK_FALSE(is_planar(petersen_graph()).planar);
  CHECK(is_planar(grid_graph(5, 5)).planar);
  CHECK(is_planar(wheel_graph(6)).planar);

  CHECK_FALSE(is_planar_oracle(petersen_graph()));
  CHECK(is_planar_oracle(grid_graph(5, 5)));
  CHECK(is_planar_oracle(wheel_graph(6)));
  CHECK_FALSE(is_planar_oracle(complete_bipartite(3, 3)));
  CHECK_FALSE(is_planar_oracle(complete_graph(5)));

  // K_{3,3} and K_5 without the fast paths.
  CHECK_FALSE(lr_only(complete_bipartite(3, 3)));
  CHECK_FALSE(lr_only(complete_graph(5)));
  CHECK_FALSE(lr_only(petersen_graph()));
}

TEST_CASE("verdict methods and witnesses") {
  const auto k6 = is_planar(complete_graph(6));
  CHECK(k6.method == PlanarityMethod::EulerBound);
  CHECK_FALSE(k6.witness.has_value());

  const auto k5 = is_planar(complete_graph(5));
  CHECK(k5.method == PlanarityMethod::EulerBound);

  // K_5 plus a long pendant path passes the Euler bound; the probe fires.
  auto g = disjoint_union(complete_graph(5), path_graph(20));
  const auto v = is_planar(g);
  CHECK_FALSE(v.planar);
  CHECK(v.method == PlanarityMethod::K5Clique);
  REQUIRE(v.witness.has_value());
  CHECK(is_complete(induced_subgraph(g, *v.witness)));

  const auto lr = is_planar(g, PlanarityOptions{false});
  CHECK_FALSE(lr.planar);
  CHECK(lr.method == PlanarityMethod::LeftRight);
  CHECK_FALSE(lr.witness.has_value());

  CHECK(is_planar(cycle_graph(9)).method == PlanarityMethod::LeftRight);
}

TEST_CASE("Euler bound") {
  CHECK_FALSE(euler_bound_check(complete_graph(5)));
  CHECK(euler_bound_check(complete_graph(4)));
  CHECK(euler_bound_check(complete_graph(2)));
  CHECK(euler_bound_check(SimpleGraph(0)));
}

TEST_CASE("biconnected components") {
  // Two triangles sharing vertex 2, plus a bridge 4-5.
  SimpleGraph g(6);
  for (auto [a, b] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}}) g.add_edge(a, b);
  const auto blocks = biconnected_components(g);
  REQUIRE(blocks.size() == 3);
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  CHECK(total == g.edge_count());
  CHECK(biconnected_components(complete_graph(5)).size() == 1);
  CHECK(biconnected_components(path_graph(6)).size() == 5);
}

TEST_CASE("left-right agrees with the oracle on named graphs") {
  std::vector<SimpleGraph> corpus = {complete_graph(4), complete_graph(5), complete_bipartite(3, 3),
                                     petersen_graph(), grid_graph(5, 5)};
  for (std::size_t rim = 5; rim <= 8; ++rim) corpus.push_back(wheel_graph(rim));
  corpus.push_back(complete_bipartite(2, 7));
  corpus.push_back(disjoint_union(complete_graph(4), complete_bipartite(3, 3)));
  for (const auto& g : corpus) {
    const bool lr = lr_only(g);
    CHECK(lr == is_planar_oracle(g));
    CHECK(lr == is_planar(g).planar);
    if (lr) CHECK(euler_bound_check(g));
  }
}

TEST_CASE("left-right agrees with the oracle on random graphs") {
  std::mt19937 rng(2024);
  int planar_seen = 0, nonplanar_seen = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t v = 1 + rng() % 60;
    const SimpleGraph g = trial % 2 ? random_graph(rng, v, std::min(1.0, (1.0 + (trial % 16) * 0.5) / double(v)))
                                    : random_planar(rng, v, 0.6 + 0.4 * (trial % 5) / 4.0);
    const bool lr = lr_only(g);
    CAPTURE(trial);
    REQUIRE(lr == is_planar_oracle(g));
    REQUIRE(lr == is_planar(g).planar);
    if (lr) {
      REQUIRE(euler_bound_check(g));
      ++planar_seen;
    } else {
      ++nonplanar_seen;
    }
  }
  // The corpus exercises both answers.
  CHECK(planar_seen > 100);
  CHECK(nonplanar_seen > 100);
}

TEST_CASE("planar triangulations plus one edge") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t v = 5 + rng() % 40;
    SimpleGraph g = random_planar(rng, v, 1.0);
    REQUIRE(lr_only(g));
    // A maximal planar graph has 3v-6 edges; any extra edge breaks planarity.
    REQUIRE(g.edge_count() == 3 * v - 6);
    for (Vertex a = 0; a < v; ++a) {
      Vertex b = a + 1;
      while (b < v && g.adjacent(a, b)) ++b;
      if (b < v) {
        g.add_edge(a, b);
        break;
      }
    }
    CHECK_FALSE(lr_only(g));
    CHECK_FALSE(is_planar_oracle(g));
  }
}

TEST_CASE("closure properties") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_graph(rng, 3 + rng() % 15, 0.25);
    const auto b = random_planar(rng, 3 + rng() % 15, 0.8);
    const bool pa = lr_only(a), pb = lr_only(b);
    CHECK(lr_only(disjoint_union(a, b)) == (pa && pb));
    if (pa) {
      std::vector<Vertex> keep;
      for (Vertex x = 0; x < a.vertex_count(); ++x)
        if (rng() % 3) keep.push_back(x);
      CHECK(lr_only(induced_subgraph(a, keep)));
    }
    if (contains_k5_clique(a)) CHECK_FALSE(pa);
  }
}

TEST_CASE("oracle size limit") {
  try {
    is_planar_oracle(SimpleGraph(kOracleVertexLimit + 1));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("many blocks") {
  // More than 64 blocks, some non-planar, to drive the parallel block loop.
  SimpleGraph g = complete_graph(4);
  for (int i = 0; i < 80; ++i) g = disjoint_union(g, wheel_graph(6));
  CHECK(lr_only(g));
  g = disjoint_union(g, complete_bipartite(3, 3));
  CHECK_FALSE(lr_only(g));
}
