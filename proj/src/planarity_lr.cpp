// Left-right planarity test (Brandes' formulation of de Fraysseix and
// Rosenstiehl's criterion). Only the verdict is computed; no embedding.

#include <algorithm>
#include <numeric>

#include "gpg/planarity.hpp"

namespace gpg {

const char* to_string(PlanarityMethod m) {
  switch (m) {
    case PlanarityMethod::LeftRight: return "LeftRight";
    case PlanarityMethod::VertexAddition: return "VertexAddition";
    case PlanarityMethod::EulerBound: return "EulerBound";
    case PlanarityMethod::K5Clique: return "K5Clique";
  }
  return "Unknown";
}

bool euler_bound_check(const SimpleGraph& g) {
  const std::size_t v = g.vertex_count();
  return v < 3 || g.edge_count() <= 3 * v - 6;
}

// ---------------------------------------------------------------------------
// Biconnected blocks (iterative Hopcroft-Tarjan with an edge stack).

std::vector<std::vector<Edge>> biconnected_components(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  constexpr int kUnseen = -1;
  std::vector<int> disc(n, kUnseen), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> blocks;

  struct Frame {
    Vertex v;
    int parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  int clock = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = clock++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const Vertex v = f.v;
      if (f.next < adj[v].size()) {
        const Vertex w = adj[v][f.next++];
        if (disc[w] == kUnseen) {
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = clock++;
          frames.push_back({w, int(v), 0});
        } else if (int(w) != f.parent && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      frames.pop_back();
      if (frames.empty()) break;
      const Vertex u = frames.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        std::vector<Edge> block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e.first == u && e.second == v) break;
        }
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// Left-right test

namespace {

constexpr int kNone = -1;

struct Interval {
  int low = kNone;
  int high = kNone;
  bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
  Interval left;
  Interval right;
  void swap() { std::swap(left, right); }
};

class LeftRightTester {
 public:
  explicit LeftRightTester(const std::vector<std::vector<Vertex>>& adjacency)
      : n_(adjacency.size()), height_(n_, kNone), parent_arc_(n_, kNone), out_(n_) {
    // Undirected edge ids, so each edge is oriented exactly once.
    incident_.resize(n_);
    std::size_t next_id = 0;
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : adjacency[v]) {
        if (v < w) {
          incident_[v].push_back({w, next_id});
          incident_[w].push_back({v, next_id});
          ++next_id;
        }
      }
    }
    // Restore each vertex's original neighbour order.
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<std::pair<Vertex, std::size_t>> ordered;
      ordered.reserve(adjacency[v].size());
      for (Vertex w : adjacency[v]) {
        auto it = std::find_if(incident_[v].begin(), incident_[v].end(), [w](auto& p) { return p.first == w; });
        ordered.push_back(*it);
      }
      incident_[v] = std::move(ordered);
    }
    edge_count_ = next_id;
    oriented_.assign(edge_count_, false);
  }

  bool run() {
    if (n_ > 2 && edge_count_ > 3 * n_ - 6) return false;

    std::vector<Vertex> roots;
    for (Vertex v = 0; v < n_; ++v) {
      if (height_[v] == kNone) {
        height_[v] = 0;
        roots.push_back(v);
        orient(v);
      }
    }

    for (Vertex v = 0; v < n_; ++v) {
      std::stable_sort(out_[v].begin(), out_[v].end(),
                       [this](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
    }

    const std::size_t arcs = src_.size();
    ref_.assign(arcs, kNone);
    lowpt_arc_.assign(arcs, kNone);
    stack_bottom_.assign(arcs, 0);
    for (Vertex r : roots) {
      if (!test(r)) return false;
    }
    return true;
  }

 private:
  int new_arc(Vertex from, Vertex to) {
    src_.push_back(from);
    dst_.push_back(to);
    lowpt_.push_back(0);
    lowpt2_.push_back(0);
    nesting_depth_.push_back(0);
    return int(src_.size() - 1);
  }

  // Orientation phase: DFS orients every edge away from the root (tree
  // edges) or towards an ancestor (back edges) and computes lowpoints.
  void orient(Vertex v) {
    const int e = parent_arc_[v];
    for (auto [w, id] : incident_[v]) {
      if (oriented_[id]) continue;
      oriented_[id] = true;
      const int a = new_arc(v, w);
      out_[v].push_back(a);
      lowpt_[a] = height_[v];
      lowpt2_[a] = height_[v];
      if (height_[w] == kNone) {
        parent_arc_[w] = a;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[a] = height_[w];
      }
      nesting_depth_[a] = 2 * lowpt_[a] + (lowpt2_[a] < height_[v] ? 1 : 0);
      if (e != kNone) {
        if (lowpt_[a] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[a]);
          lowpt_[e] = lowpt_[a];
        } else if (lowpt_[a] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[a]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[a]);
        }
      }
    }
  }

  bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  bool test(Vertex v) {
    const int e = parent_arc_[v];
    for (std::size_t i = 0; i < out_[v].size(); ++i) {
      const int a = out_[v][i];
      const Vertex w = dst_[a];
      stack_bottom_[a] = stack_.size();
      if (a == parent_arc_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_arc_[a] = a;
        stack_.push_back(ConflictPair{Interval{}, Interval{a, a}});
      }
      if (lowpt_[a] < height_[v]) {
        if (i == 0) {
          lowpt_arc_[e] = lowpt_arc_[a];
        } else if (!add_constraints(a, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int a, int e) {
    ConflictPair p;
    // Return edges of `a` all go to one side.
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_arc_[e];
      }
    } while (stack_.size() != stack_bottom_[a]);

    // Earlier siblings' return edges that conflict with `a` go opposite.
    while (!stack_.empty() && (conflicting(stack_.back().left, a) || conflicting(stack_.back().right, a))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, a)) q.swap();
      if (conflicting(q.right, a)) return false;
      ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const Vertex u = src_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
    }
  }

  std::size_t n_;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> incident_;
  std::vector<bool> oriented_;
  std::vector<int> height_;
  std::vector<int> parent_arc_;
  std::vector<std::vector<int>> out_;

  std::vector<Vertex> src_, dst_;
  std::vector<int> lowpt_, lowpt2_, nesting_depth_;

  std::vector<int> ref_, lowpt_arc_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<ConflictPair> stack_;
};

}  // namespace

bool left_right_planarity(const std::vector<std::vector<Vertex>>& adjacency) {
  return LeftRightTester(adjacency).run();
}

PlanarityVerdict is_planar(const SimpleGraph& g, const PlanarityOptions& options) {
  if (!euler_bound_check(g)) return {false, PlanarityMethod::EulerBound, std::nullopt};
  if (options.k5_probe) {
    if (auto clique = contains_k5_clique(g)) return {false, PlanarityMethod::K5Clique, std::move(clique)};
  }

  const auto blocks = biconnected_components(g);
  const auto count = static_cast<std::int64_t>(blocks.size());
  bool planar = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : planar) if (count > 64)
  for (std::int64_t b = 0; b < count; ++b) {
    const auto& block = blocks[b];
    if (block.size() < 9) continue;  // fewer than 9 edges cannot hold K5 or K3,3
    std::vector<Vertex> local_of(g.vertex_count(), Vertex(-1));
    std::vector<std::vector<Vertex>> adj;
    auto local = [&](Vertex x) {
      if (local_of[x] == Vertex(-1)) {
        local_of[x] = Vertex(adj.size());
        adj.emplace_back();
      }
      return local_of[x];
    };
    for (auto [x, y] : block) {
      const Vertex lx = local(x), ly = local(y);
      adj[lx].push_back(ly);
      adj[ly].push_back(lx);
    }
    planar = planar && left_right_planarity(adj);
  }
  return {planar, PlanarityMethod::LeftRight, std::nullopt};
}

}  // namespace gpg
