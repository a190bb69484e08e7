#include "gpg/powergraph.hpp"

#include <string>

#include "gpg/numeric.hpp"

namespace gpg {

const char* to_string(VertexConvention c) {
  switch (c) {
    case VertexConvention::Strict: return "strict";
    case VertexConvention::StrictWithIdentity: return "strict-id";
    case VertexConvention::Punctured: return "punctured";
    case VertexConvention::Full: return "full";
  }
  return "unknown";
}

VertexConvention parse_convention(std::string_view text) {
  if (text == "strict") return VertexConvention::Strict;
  if (text == "strict-id") return VertexConvention::StrictWithIdentity;
  if (text == "punctured") return VertexConvention::Punctured;
  if (text == "full") return VertexConvention::Full;
  throw Error(ErrorKind::Parse, "unknown convention '" + std::string(text) + "' (strict|strict-id|punctured|full)");
}

bool includes_identity(VertexConvention c) {
  return c == VertexConvention::StrictWithIdentity || c == VertexConvention::Full;
}

std::vector<Element> vertex_elements(const FiniteGroup& g, VertexConvention c) {
  const auto orders = g.element_orders();
  const std::size_t n = g.order();
  std::vector<Element> out;
  for (std::size_t x = 0; x < n; ++x) {
    const bool identity = x == FiniteGroup::identity();
    const bool generator = orders[x] == n;
    bool keep = false;
    switch (c) {
      case VertexConvention::Strict: keep = !generator && !identity; break;
      case VertexConvention::StrictWithIdentity: keep = !generator; break;
      case VertexConvention::Punctured: keep = !identity; break;
      case VertexConvention::Full: keep = true; break;
    }
    if (keep) out.push_back(Element(x));
  }
  return out;
}

bool gp_adjacent(const FiniteGroup& g, Element x, Element y) {
  if (x >= g.order() || y >= g.order()) {
    throw Error(ErrorKind::IndexOutOfRange, "element outside group of order " + std::to_string(g.order()));
  }
  if (x == y) throw Error(ErrorKind::SameElement, "adjacency needs two distinct elements");
  return g.cyclic_subgroup(x).intersect(g.cyclic_subgroup(y)).size() > 1;
}

namespace {

std::vector<Bitset> subgroup_bitsets(const FiniteGroup& g, const std::vector<Element>& elements) {
  const std::size_t n = g.order();
  std::vector<Bitset> out(elements.size(), Bitset(n));
  const auto count = static_cast<std::int64_t>(elements.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const Element x = elements[i];
    Element p = FiniteGroup::identity();
    do {
      out[i].set(p);
      p = g.mul(p, x);
    } while (p != FiniteGroup::identity());
  }
  return out;
}

// For each element, the set of prime-order subgroups inside <x>, over a dense
// numbering of all prime-order subgroups of G. Two cyclic subgroups meet
// non-trivially exactly when they share one of these.
std::vector<Bitset> minimal_subgroup_signatures(const FiniteGroup& g, const std::vector<Element>& elements) {
  const std::size_t n = g.order();
  const auto orders = g.element_orders();
  std::vector<std::int64_t> slot(n, -1);
  std::size_t slots = 0;
  for (std::size_t x = 1; x < n; ++x) {
    if (!is_prime(orders[x]) || slot[x] >= 0) continue;
    Element p = Element(x);
    do {
      slot[p] = static_cast<std::int64_t>(slots);
      p = g.mul(p, Element(x));
    } while (p != FiniteGroup::identity());
    ++slots;
  }
  std::vector<Bitset> out(elements.size(), Bitset(slots));
  const auto count = static_cast<std::int64_t>(elements.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const Element x = elements[i];
    for (Element p = x; p != FiniteGroup::identity(); p = g.mul(p, x)) {
      if (slot[p] >= 0) out[i].set(static_cast<std::size_t>(slot[p]));
    }
  }
  return out;
}

std::vector<std::uint32_t> as_labels(const std::vector<Element>& elements) {
  return std::vector<std::uint32_t>(elements.begin(), elements.end());
}

}  // namespace

SimpleGraph generalized_power_graph(const FiniteGroup& g, VertexConvention c) {
  const auto elements = vertex_elements(g, c);
  const std::size_t v = elements.size();
  const auto signatures = minimal_subgroup_signatures(g, elements);
  std::vector<Bitset> rows(v, Bitset(v));
  const auto count = static_cast<std::int64_t>(v);
  // Each iteration owns row i.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      if (j != std::size_t(i) && signatures[i].and_count_exceeds(signatures[j], 0)) rows[i].set(j);
    }
  }
  return SimpleGraph::from_rows(as_labels(elements), std::move(rows));
}

SimpleGraph generalized_power_graph_serial(const FiniteGroup& g, VertexConvention c) {
  const auto elements = vertex_elements(g, c);
  std::vector<ElementSet> subgroups;
  subgroups.reserve(elements.size());
  for (Element x : elements) subgroups.push_back(g.cyclic_subgroup(x));
  SimpleGraph out(as_labels(elements));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (subgroups[i].intersect(subgroups[j]).size() > 1) out.add_edge(Vertex(i), Vertex(j));
    }
  }
  return out;
}

SimpleGraph power_graph(const FiniteGroup& g, VertexConvention c) {
  const auto elements = vertex_elements(g, c);
  const std::size_t v = elements.size();
  const auto subgroups = subgroup_bitsets(g, elements);
  std::vector<Bitset> rows(v, Bitset(v));
  const auto count = static_cast<std::int64_t>(v);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      if (j != std::size_t(i) && (subgroups[i].test(elements[j]) || subgroups[j].test(elements[i]))) rows[i].set(j);
    }
  }
  return SimpleGraph::from_rows(as_labels(elements), std::move(rows));
}

SimpleGraph power_graph_serial(const FiniteGroup& g, VertexConvention c) {
  const auto elements = vertex_elements(g, c);
  SimpleGraph out(as_labels(elements));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const Element x = elements[i], y = elements[j];
      // Walk the powers of each element looking for the other.
      bool related = false;
      for (Element p = x;; p = g.mul(p, x)) {
        if (p == y) related = true;
        if (related || p == FiniteGroup::identity()) break;
      }
      for (Element p = y; !related; p = g.mul(p, y)) {
        if (p == x) related = true;
        if (p == FiniteGroup::identity()) break;
      }
      if (related) out.add_edge(Vertex(i), Vertex(j));
    }
  }
  return out;
}

}  // namespace gpg
