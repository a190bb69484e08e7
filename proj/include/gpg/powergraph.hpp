#pragma once

#include <string_view>
#include <vector>

#include "gpg/graph.hpp"
#include "gpg/group.hpp"

namespace gpg {

// Which group elements become vertices.
enum class VertexConvention {
  Strict,              // <x> != G and x != identity
  StrictWithIdentity,  // <x> != G (identity included when |G| > 1)
  Punctured,           // every non-identity element
  Full,                // every element
};

const char* to_string(VertexConvention c);
VertexConvention parse_convention(std::string_view text);
bool includes_identity(VertexConvention c);

// Vertex elements in increasing index order.
std::vector<Element> vertex_elements(const FiniteGroup& g, VertexConvention c);

// <x> and <y> share a non-identity element.
bool gp_adjacent(const FiniteGroup& g, Element x, Element y);

// Generalized power graph: edges join elements whose cyclic subgroups
// intersect non-trivially. The parallel kernel compares which prime-order
// subgroups each <x> contains; the serial version intersects the cyclic
// subgroups element by element and is kept as the reference.
SimpleGraph generalized_power_graph(const FiniteGroup& g, VertexConvention c);
SimpleGraph generalized_power_graph_serial(const FiniteGroup& g, VertexConvention c);

// Classical power graph: x ~ y when one is a power of the other.
SimpleGraph power_graph(const FiniteGroup& g, VertexConvention c);
SimpleGraph power_graph_serial(const FiniteGroup& g, VertexConvention c);

}  // namespace gpg
