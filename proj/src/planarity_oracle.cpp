// Path-addition planarity test in the style of Demoucron, Malgrange and
// Pertuiset. Kept deliberately separate from the left-right code path: it
// has its own block decomposition and shares nothing but SimpleGraph.

#include <algorithm>
#include <deque>
#include <functional>

#include "gpg/planarity.hpp"

namespace gpg {

namespace {

using Adjacency = std::vector<std::vector<int>>;

// Recursive Tarjan; returns vertex sets of blocks with at least 3 vertices.
std::vector<std::vector<int>> cyclic_blocks(const Adjacency& adj) {
  const int n = int(adj.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> out;
  int clock = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = clock++;
    for (int w : adj[v]) {
      if (disc[w] < 0) {
        edges.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<int> verts;
          while (true) {
            auto [a, b] = edges.back();
            edges.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == v && b == w) break;
          }
          std::sort(verts.begin(), verts.end());
          verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
          if (verts.size() >= 3) out.push_back(std::move(verts));
        }
      } else if (w != parent && disc[w] < disc[v]) {
        edges.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  return out;
}

struct Fragment {
  std::vector<int> attachments;  // embedded vertices, sorted
  std::vector<int> interior;     // non-embedded vertices (empty for a single edge)
};

class PathAddition {
 public:
  explicit PathAddition(Adjacency adj)
      : n_(int(adj.size())), adj_(std::move(adj)), placed_(n_, false), edge_placed_(std::size_t(n_) * n_, false) {}

  bool run() {
    if (n_ < 3) return true;
    std::vector<int> cycle = find_cycle();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      placed_[cycle[i]] = true;
      mark_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    faces_ = {cycle, cycle};

    while (true) {
      auto fragments = find_fragments();
      if (fragments.empty()) return true;

      std::size_t best = 0;
      std::vector<std::size_t> best_faces;
      for (std::size_t f = 0; f < fragments.size(); ++f) {
        auto faces = admissible_faces(fragments[f]);
        if (faces.empty()) return false;
        if (f == 0 || faces.size() < best_faces.size()) {
          best = f;
          best_faces = std::move(faces);
        }
        if (best_faces.size() == 1) break;
      }
      embed_path(find_path(fragments[best]), best_faces.front());
    }
  }

 private:
  void mark_edge(int a, int b) {
    edge_placed_[std::size_t(a) * n_ + b] = true;
    edge_placed_[std::size_t(b) * n_ + a] = true;
  }
  bool edge_is_placed(int a, int b) const { return edge_placed_[std::size_t(a) * n_ + b]; }

  // The block is 2-connected, so DFS from 0 meets a back edge; the cycle is
  // the tree path between its endpoints plus that edge.
  std::vector<int> find_cycle() const {
    std::vector<int> parent(n_, -2), depth(n_, 0);
    std::vector<int> stack{0};
    std::vector<std::size_t> next(n_, 0);
    parent[0] = -1;
    while (!stack.empty()) {
      const int v = stack.back();
      if (next[v] == adj_[v].size()) {
        stack.pop_back();
        continue;
      }
      const int w = adj_[v][next[v]++];
      if (parent[w] == -2) {
        parent[w] = v;
        depth[w] = depth[v] + 1;
        stack.push_back(w);
      } else if (w != parent[v] && depth[w] < depth[v]) {
        std::vector<int> cycle;
        for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
        return cycle;
      }
    }
    return {};
  }

  std::vector<Fragment> find_fragments() const {
    std::vector<Fragment> out;
    for (int a = 0; a < n_; ++a) {
      if (!placed_[a]) continue;
      for (int b : adj_[a]) {
        if (a < b && placed_[b] && !edge_is_placed(a, b)) out.push_back(Fragment{{a, b}, {}});
      }
    }
    std::vector<bool> seen(n_, false);
    for (int s = 0; s < n_; ++s) {
      if (placed_[s] || seen[s]) continue;
      Fragment f;
      std::deque<int> queue{s};
      seen[s] = true;
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        f.interior.push_back(x);
        for (int y : adj_[x]) {
          if (placed_[y]) {
            f.attachments.push_back(y);
          } else if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
      std::sort(f.attachments.begin(), f.attachments.end());
      f.attachments.erase(std::unique(f.attachments.begin(), f.attachments.end()), f.attachments.end());
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<std::size_t> admissible_faces(const Fragment& f) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      const auto& face = faces_[i];
      bool all = std::all_of(f.attachments.begin(), f.attachments.end(), [&](int a) {
        return std::find(face.begin(), face.end(), a) != face.end();
      });
      if (all) out.push_back(i);
    }
    return out;
  }

  // A path through the fragment between two distinct attachments.
  std::vector<int> find_path(const Fragment& f) const {
    if (f.interior.empty()) return f.attachments;
    const int start = f.attachments.front();
    std::vector<bool> inside(n_, false);
    for (int x : f.interior) inside[x] = true;

    std::vector<int> parent(n_, -1);
    std::deque<int> queue;
    for (int c : adj_[start]) {
      if (inside[c]) {
        parent[c] = start;
        queue.push_back(c);
        break;
      }
    }
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : adj_[x]) {
        if (placed_[y] && y != start) {
          std::vector<int> path{y};
          for (int z = x; z != -1; z = parent[z]) path.push_back(z);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (inside[y] && parent[y] == -1) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    return {};  // unreachable in a 2-connected block
  }

  void embed_path(const std::vector<int>& path, std::size_t face_index) {
    const std::vector<int> face = faces_[face_index];
    const int a = path.front(), b = path.back();
    const std::size_t k = face.size();
    const std::size_t i = std::size_t(std::find(face.begin(), face.end(), a) - face.begin());
    const std::size_t j = std::size_t(std::find(face.begin(), face.end(), b) - face.begin());

    std::vector<int> first, second;
    for (std::size_t t = i;; t = (t + 1) % k) {
      first.push_back(face[t]);
      if (t == j) break;
    }
    for (std::size_t t = path.size() - 2; t >= 1; --t) first.push_back(path[t]);
    for (std::size_t t = j;; t = (t + 1) % k) {
      second.push_back(face[t]);
      if (t == i) break;
    }
    for (std::size_t t = 1; t + 1 < path.size(); ++t) second.push_back(path[t]);

    faces_[face_index] = std::move(first);
    faces_.push_back(std::move(second));
    for (std::size_t t = 0; t < path.size(); ++t) {
      placed_[path[t]] = true;
      if (t + 1 < path.size()) mark_edge(path[t], path[t + 1]);
    }
  }

  int n_;
  Adjacency adj_;
  std::vector<bool> placed_;
  std::vector<bool> edge_placed_;
  std::vector<std::vector<int>> faces_;
};

}  // namespace

bool is_planar_oracle(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kOracleVertexLimit) {
    throw Error(ErrorKind::TooLarge, "oracle limited to " + std::to_string(kOracleVertexLimit) + " vertices");
  }
  Adjacency adj(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v].push_back(int(w));
  }
  for (const auto& verts : cyclic_blocks(adj)) {
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = int(i);
    Adjacency sub(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (int w : adj[verts[i]]) {
        if (local[w] >= 0) sub[i].push_back(local[w]);
      }
    }
    if (!PathAddition(std::move(sub)).run()) return false;
  }
  return true;
}

}  // namespace gpg
