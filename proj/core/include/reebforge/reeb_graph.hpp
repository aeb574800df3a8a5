#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "reebforge/complex.hpp"
#include "reebforge/homology.hpp"

namespace reebforge {

/// Reeb graph of a PL function, as a multigraph.
///
/// Nodes are the level-set components at vertex values that contain at
/// least one vertex; components that only cross edges are regular and get
/// contracted into arcs. Nodes are numbered by (value, smallest vertex id)
/// and arcs are sorted by (lower node, upper node).
struct ReebGraph {
  struct Node {
    Rational value;
    /// Index among the nodes sharing this value.
    std::uint32_t level_component = 0;
    Vertex min_vertex = 0;
  };

  std::vector<Node> nodes;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;  // (lower, upper)
  std::vector<std::uint32_t> vertex_node;

  /// b0 = number of components, b1 = |arcs| - |nodes| + b0.
  BettiVector betti() const;
  /// Simplicial model: every arc is subdivided once so multi-arcs survive.
  SimplicialComplex realization() const;
};

/// Sweep over the distinct vertex values. Only the 2-skeleton is consulted:
/// level sets of a PL function are connected through triangles already.
ReebGraph reeb_graph(const PLFunction& g);

/// A PL function turned into a simplicial map onto the path complex whose
/// vertices are the sorted distinct values. Every triangle of the 2-skeleton
/// is cut along those values, so each new simplex spans at most one gap.
struct LevelSubdivision {
  std::vector<Rational> levels;  // path vertex j sits at levels[j]
  PLFunction function;           // g on the subdivided complex
  SimplicialMap map;             // subdivided complex -> path complex
};

LevelSubdivision level_subdivision(const PLFunction& g);

/// Path complex 0 - 1 - ... - (n-1).
SimplicialComplex path_complex(std::size_t n);

}  // namespace reebforge
