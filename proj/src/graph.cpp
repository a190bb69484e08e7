#include "gpg/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

namespace gpg {

SimpleGraph::SimpleGraph(std::size_t vertices) : labels_(vertices), rows_(vertices, Bitset(vertices)) {
  std::iota(labels_.begin(), labels_.end(), 0u);
}

SimpleGraph::SimpleGraph(std::vector<std::uint32_t> labels)
    : labels_(std::move(labels)), rows_(labels_.size(), Bitset(labels_.size())) {}

SimpleGraph SimpleGraph::from_rows(std::vector<std::uint32_t> labels, std::vector<Bitset> rows) {
  const std::size_t v = labels.size();
  if (rows.size() != v) throw Error(ErrorKind::BadParameters, "row count does not match label count");
  std::size_t degree_sum = 0;
  for (std::size_t i = 0; i < v; ++i) {
    if (rows[i].size() != v) throw Error(ErrorKind::BadParameters, "row width does not match vertex count");
    if (rows[i].test(i)) throw Error(ErrorKind::BadParameters, "self-loop at vertex " + std::to_string(i));
    degree_sum += rows[i].count();
  }
  for (std::size_t i = 0; i < v; ++i) {
    rows[i].for_each([&](std::size_t j) {
      if (!rows[j].test(i)) {
        throw Error(ErrorKind::BadParameters,
                    "asymmetric adjacency between " + std::to_string(i) + " and " + std::to_string(j));
      }
    });
  }
  SimpleGraph g;
  g.labels_ = std::move(labels);
  g.rows_ = std::move(rows);
  g.edges_ = degree_sum / 2;
  return g;
}

void SimpleGraph::check_vertex(Vertex a) const {
  if (a >= rows_.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "vertex " + std::to_string(a) + " not in graph of " + std::to_string(rows_.size()) + " vertices");
  }
}

void SimpleGraph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw Error(ErrorKind::SameElement, "self-loop at vertex " + std::to_string(a));
  if (rows_[a].test(b)) return;
  rows_[a].set(b);
  rows_[b].set(a);
  ++edges_;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex a) const {
  std::vector<Vertex> out;
  rows_[a].for_each([&](std::size_t j) { out.push_back(Vertex(j)); });
  return out;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    rows_[i].for_each([&](std::size_t j) {
      if (j > i) out.emplace_back(Vertex(i), Vertex(j));
    });
  }
  return out;
}

bool is_complete(const SimpleGraph& g) {
  const std::size_t v = g.vertex_count();
  return g.edge_count() == v * (v - (v > 0 ? 1 : 0)) / 2;
}

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
  const std::size_t v = g.vertex_count();
  std::vector<bool> seen(v, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < v; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      g.row(x).for_each([&](std::size_t y) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(Vertex(y));
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> vertices) {
  std::vector<std::uint32_t> labels;
  labels.reserve(vertices.size());
  for (Vertex x : vertices) {
    if (x >= g.vertex_count()) {
      throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(x) + " not in graph");
    }
    labels.push_back(g.label(x));
  }
  SimpleGraph sub(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] != vertices[j] && g.adjacent(vertices[i], vertices[j])) sub.add_edge(Vertex(i), Vertex(j));
    }
  }
  return sub;
}

std::optional<std::vector<Vertex>> find_clique(const SimpleGraph& g, std::size_t k) {
  const std::size_t v = g.vertex_count();
  if (k == 0) return std::vector<Vertex>{};
  if (v < k) return std::nullopt;

  Bitset eligible(v);
  for (Vertex x = 0; x < v; ++x) {
    if (g.degree(x) + 1 >= k) eligible.set(x);
  }

  std::vector<Vertex> chosen;
  // Extend `chosen` from `candidates` (all adjacent to every chosen vertex,
  // all with index above the last chosen one).
  auto extend = [&](auto&& self, const Bitset& candidates) -> bool {
    if (chosen.size() == k) return true;
    if (candidates.count() + chosen.size() < k) return false;
    bool found = false;
    std::vector<Vertex> order;
    candidates.for_each([&](std::size_t x) { order.push_back(Vertex(x)); });
    for (Vertex x : order) {
      Bitset next = candidates;
      next &= g.row(x);
      // Keep only vertices after x so each clique is visited once.
      for (Vertex y : order) {
        if (y > x) break;
        next.reset(y);
      }
      chosen.push_back(x);
      found = self(self, next);
      if (found) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (extend(extend, eligible)) return chosen;
  return std::nullopt;
}

std::string to_dot(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex x = 0; x < g.vertex_count(); ++x) out << "  " << g.label(x) << ";\n";
  for (auto [a, b] : g.edges()) out << "  " << g.label(a) << " -- " << g.label(b) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

SimpleGraph read_edge_list(std::istream& in) {
  long long v = -1;
  if (!(in >> v) || v < 0) throw Error(ErrorKind::Parse, "edge list: missing vertex count");
  SimpleGraph g(static_cast<std::size_t>(v));
  long long a, b;
  while (in >> a >> b) {
    if (a < 0 || b < 0 || a >= v || b >= v) {
      throw Error(ErrorKind::IndexOutOfRange, "edge list: endpoint out of range");
    }
    g.add_edge(Vertex(a), Vertex(b));
  }
  if (!in.eof()) throw Error(ErrorKind::Parse, "edge list: malformed pair");
  return g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  std::vector<std::uint32_t> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  SimpleGraph g(std::move(labels));
  const auto shift = Vertex(a.vertex_count());
  for (auto [x, y] : a.edges()) g.add_edge(x, y);
  for (auto [x, y] : b.edges()) g.add_edge(x + shift, y + shift);
  return g;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
  SimpleGraph g(a + b);
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) g.add_edge(i, Vertex(a + j));
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g(n);
  if (n >= 3) {
    for (Vertex i = 0; i < n; ++i) g.add_edge(i, Vertex((i + 1) % n));
  } else if (n == 2) {
    g.add_edge(0, 1);
  }
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph grid_graph(std::size_t rows, std::size_t cols) {
  SimpleGraph g(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = Vertex(r * cols + c);
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, Vertex(v + cols));
    }
  }
  return g;
}

SimpleGraph wheel_graph(std::size_t rim) {
  SimpleGraph g(rim + 1);
  for (Vertex i = 0; i < rim; ++i) {
    g.add_edge(0, i + 1);
    if (rim >= 3) g.add_edge(i + 1, Vertex((i + 1) % rim + 1));
  }
  return g;
}

SimpleGraph petersen_graph() {
  SimpleGraph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

}  // namespace gpg
