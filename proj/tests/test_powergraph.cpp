#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "gpg/catalog.hpp"
#include "gpg/planarity.hpp"
#include "gpg/powergraph.hpp"

using namespace gpg;

namespace {

constexpr VertexConvention kAll[] = {VertexConvention::Strict, VertexConvention::StrictWithIdentity,
                                     VertexConvention::Punctured, VertexConvention::Full};

std::set<Element> powers(const FiniteGroup& g, Element x) {
  std::set<Element> out{0};
  for (Element p = x; out.insert(p).second;) p = g.mul(p, x);
  return out;
}

// Adjacency straight from the definition, on std::set.
bool gp_oracle(const FiniteGroup& g, Element x, Element y) {
  const auto a = powers(g, x), b = powers(g, y);
  std::size_t common = 0;
  for (Element e : a) common += b.count(e);
  return common > 1;
}

Vertex vertex_of(const SimpleGraph& g, Element x) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.label(v) == x) return v;
  FAIL("element not a vertex");
  return 0;
}

}  // namespace

TEST_CASE("convention names") {
  for (auto c : kAll) CHECK(parse_convention(to_string(c)) == c);
  CHECK_THROWS_AS(parse_convention("loose"), Error);
}

TEST_CASE("adjacency examples") {
  const auto z12 = build(GroupSpec::cyclic(12));
  CHECK_FALSE(gp_adjacent(z12, 3, 4));
  CHECK(gp_adjacent(z12, 2, 3));
  for (Element y = 1; y < 12; ++y) CHECK_FALSE(gp_adjacent(z12, 0, y));
  try {
    gp_adjacent(z12, 2, 2);
    FAIL("same element accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SameElement);
  }
  try {
    gp_adjacent(z12, 2, 12);
    FAIL("out of range accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("generalized power graph examples") {
  const auto q8 = generalized_power_graph(build(GroupSpec::generalized_quaternion(8)), VertexConvention::Punctured);
  CHECK(q8.vertex_count() == 7);
  CHECK(is_complete(q8));

  const auto d8g = build(GroupSpec::dihedral(4));
  const auto d8 = generalized_power_graph(d8g, VertexConvention::Punctured);
  CHECK(d8.vertex_count() == 7);
  CHECK(d8.edge_count() == 3);
  const std::vector<Vertex> rotations = {vertex_of(d8, 1), vertex_of(d8, 2), vertex_of(d8, 3)};
  CHECK(is_complete(induced_subgraph(d8, rotations)));
  for (Element s = 4; s < 8; ++s) CHECK(d8.degree(vertex_of(d8, s)) == 0);
  CHECK(is_planar(d8).planar);

  const auto z9 = generalized_power_graph(build(GroupSpec::cyclic(9)), VertexConvention::Strict);
  CHECK(z9.labels() == std::vector<std::uint32_t>{3, 6});
  CHECK(z9.edge_count() == 1);

  // K_5 in Z_10: a generator and the four elements of order 5.
  const auto z10 = generalized_power_graph(build(GroupSpec::cyclic(10)), VertexConvention::Punctured);
  const std::vector<Vertex> five = {vertex_of(z10, 1), vertex_of(z10, 2), vertex_of(z10, 4), vertex_of(z10, 6),
                                    vertex_of(z10, 8)};
  CHECK(is_complete(induced_subgraph(z10, five)));

  CHECK(generalized_power_graph(build(GroupSpec::cyclic(7)), VertexConvention::Strict).vertex_count() == 0);
  const auto z210 = build(GroupSpec::cyclic(210));
  CHECK(contains_k5_clique(generalized_power_graph(z210, VertexConvention::Strict)).has_value());
}

TEST_CASE("power graph examples") {
  const auto z4 = power_graph(build(GroupSpec::cyclic(4)), VertexConvention::Full);
  CHECK(z4.vertex_count() == 4);
  CHECK(is_complete(z4));

  const auto v4 = power_graph(build(GroupSpec::elementary_abelian(2, 2)), VertexConvention::Punctured);
  CHECK(v4.vertex_count() == 3);
  CHECK(v4.edge_count() == 0);

  const auto z5 = build(GroupSpec::cyclic(5));
  const auto p5 = power_graph(z5, VertexConvention::Punctured);
  CHECK(p5.adjacent(vertex_of(p5, 1), vertex_of(p5, 2)));
}

TEST_CASE("vertex sets nest") {
  for (const auto& entry : build_catalog(32)) {
    const auto& g = entry.group;
    std::map<VertexConvention, std::set<Element>> sets;
    for (auto c : kAll) {
      const auto v = vertex_elements(g, c);
      sets[c] = std::set<Element>(v.begin(), v.end());
    }
    auto subset = [](const std::set<Element>& a, const std::set<Element>& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    CHECK(subset(sets[VertexConvention::Strict], sets[VertexConvention::StrictWithIdentity]));
    CHECK(subset(sets[VertexConvention::Strict], sets[VertexConvention::Punctured]));
    CHECK(subset(sets[VertexConvention::Punctured], sets[VertexConvention::Full]));
    CHECK_FALSE(sets[VertexConvention::Strict].count(0));
    CHECK_FALSE(sets[VertexConvention::Punctured].count(0));
    CHECK(sets[VertexConvention::StrictWithIdentity].count(0) == (g.order() > 1 ? 1u : 0u));
  }
}

TEST_CASE("parallel kernels match the serial references and the definition") {
  for (const auto& entry : build_catalog(40)) {
    const auto& g = entry.group;
    CAPTURE(entry.spec.to_text());
    for (auto c : kAll) {
      const auto gp = generalized_power_graph(g, c);
      REQUIRE(gp == generalized_power_graph_serial(g, c));
      const auto pg = power_graph(g, c);
      REQUIRE(pg == power_graph_serial(g, c));
      for (Vertex a = 0; a < gp.vertex_count(); ++a) {
        for (Vertex b = a + 1; b < gp.vertex_count(); ++b) {
          const Element x = gp.label(a), y = gp.label(b);
          REQUIRE(gp.adjacent(a, b) == gp_oracle(g, x, y));
          REQUIRE(gp.adjacent(a, b) == gp.adjacent(b, a));
          if (x != 0 && pg.adjacent(a, b)) REQUIRE(gp.adjacent(a, b));
        }
        if (gp.label(a) == 0) REQUIRE(gp.degree(a) == 0);
      }
    }
  }
}

TEST_CASE("larger groups") {
  for (const char* text : {"cyclic:360", "dihedral:60", "heisenberg:5", "symmetric:5", "gq:128"}) {
    const auto g = build(GroupSpec::parse(text));
    CAPTURE(text);
    CHECK(generalized_power_graph(g, VertexConvention::Punctured) ==
          generalized_power_graph_serial(g, VertexConvention::Punctured));
    CHECK(power_graph(g, VertexConvention::Full) == power_graph_serial(g, VertexConvention::Full));
  }
}

TEST_CASE("adjacency is transitive in p-groups") {
  for (const char* text : {"heisenberg:3", "gq:16", "dihedral:8", "abelian:4,2", "elementary:3,2", "abelian:9,3"}) {
    const auto g = build(GroupSpec::parse(text));
    const auto gp = generalized_power_graph(g, VertexConvention::Punctured);
    const std::size_t v = gp.vertex_count();
    for (Vertex a = 0; a < v; ++a)
      for (Vertex x = 0; x < v; ++x)
        for (Vertex b = 0; b < v; ++b)
          if (a != b && gp.adjacent(a, x) && gp.adjacent(x, b)) REQUIRE(gp.adjacent(a, b));
  }
}
