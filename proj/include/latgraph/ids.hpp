#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace latgraph {

// Dense integer index tagged by what it indexes, so element ids and lattice
// node ids cannot be mixed up.
template <typename Tag>
struct Index {
  std::uint32_t value = 0;

  constexpr Index() = default;
  constexpr explicit Index(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(Index, Index) = default;
  friend std::ostream& operator<<(std::ostream& os, Index id) { return os << id.value; }
};

struct ElementTag {};
struct LatticeNodeTag {};

using ElementId = Index<ElementTag>;
using LatticeNodeId = Index<LatticeNodeTag>;

// Graph vertices are plain dense indices.
using Vertex = std::uint32_t;

}  // namespace latgraph

template <typename Tag>
struct std::hash<latgraph::Index<Tag>> {
  std::size_t operator()(latgraph::Index<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
