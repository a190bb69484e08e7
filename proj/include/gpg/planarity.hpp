#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gpg/graph.hpp"

namespace gpg {

enum class PlanarityMethod { LeftRight, VertexAddition, EulerBound, K5Clique };

const char* to_string(PlanarityMethod m);

struct PlanarityVerdict {
  bool planar = true;
  PlanarityMethod method = PlanarityMethod::LeftRight;
  // A 5-clique, present only for method == K5Clique.
  std::optional<std::vector<Vertex>> witness;
};

struct PlanarityOptions {
  bool k5_probe = true;
};

// Euler bound, optional K5 probe, then the left-right test on every
// biconnected block.
PlanarityVerdict is_planar(const SimpleGraph& g, const PlanarityOptions& options = {});

// e <= 3v - 6 for v >= 3; always true below three vertices.
bool euler_bound_check(const SimpleGraph& g);

using Edge = std::pair<Vertex, Vertex>;

// Edge sets of the biconnected blocks (bridges are single-edge blocks).
// Isolated vertices belong to no block.
std::vector<std::vector<Edge>> biconnected_components(const SimpleGraph& g);

// Left-right test on a graph given by adjacency lists over [0, n). Handles
// any simple graph; `is_planar` feeds it one block at a time.
bool left_right_planarity(const std::vector<std::vector<Vertex>>& adjacency);

inline constexpr std::size_t kOracleVertexLimit = 2000;

// Independent path-addition test (face embedding, one fragment path at a
// time). Quadratic; throws TooLarge above kOracleVertexLimit vertices.
bool is_planar_oracle(const SimpleGraph& g);

}  // namespace gpg
