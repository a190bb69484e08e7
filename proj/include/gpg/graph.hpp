#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpg/bitset.hpp"
#include "gpg/error.hpp"

namespace gpg {

using Vertex = std::uint32_t;

// Undirected simple graph over bitset rows. Labels map vertices back to
// group elements (or are plain 0..v-1 for synthetic graphs).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertices);
  explicit SimpleGraph(std::vector<std::uint32_t> labels);

  // Assembles a graph from precomputed rows; rejects loops and asymmetry.
  static SimpleGraph from_rows(std::vector<std::uint32_t> labels, std::vector<Bitset> rows);

  void add_edge(Vertex a, Vertex b);

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
  const Bitset& row(Vertex a) const { return rows_[a]; }
  std::size_t degree(Vertex a) const { return rows_[a].count(); }
  std::vector<Vertex> neighbors(Vertex a) const;
  std::uint32_t label(Vertex a) const { return labels_[a]; }
  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(Vertex a) const;

  std::vector<std::uint32_t> labels_;
  std::vector<Bitset> rows_;
  std::size_t edges_ = 0;
};

// Graphs on at most one vertex are complete.
bool is_complete(const SimpleGraph& g);

// Components ordered by their minimum vertex; each sorted ascending.
std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g);

// Subgraph on `vertices`, in the given order, with inherited labels.
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> vertices);

// Some k-clique, or nullopt. Exact branch-and-bound over vertices of degree
// >= k-1; meant for graphs up to a few thousand vertices.
std::optional<std::vector<Vertex>> find_clique(const SimpleGraph& g, std::size_t k);
inline std::optional<std::vector<Vertex>> contains_k5_clique(const SimpleGraph& g) { return find_clique(g, 5); }

std::string to_dot(const SimpleGraph& g);
// Plain edge list: vertex count on line 1, then one "a b" pair per line.
std::string to_edge_list(const SimpleGraph& g);
SimpleGraph read_edge_list(std::istream& in);

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

// Named graphs.
SimpleGraph complete_graph(std::size_t n);
SimpleGraph complete_bipartite(std::size_t a, std::size_t b);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
SimpleGraph grid_graph(std::size_t rows, std::size_t cols);
// Hub vertex 0 joined to a cycle on `rim` vertices.
SimpleGraph wheel_graph(std::size_t rim);
SimpleGraph petersen_graph();

}  // namespace gpg
