#include "reebforge/reeb_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "reebforge/union_find.hpp"

namespace reebforge {

namespace {

struct Edge {
  Vertex lower;  // endpoint at the lower level (ties: smaller id)
  Vertex upper;
  std::size_t lo;  // level indices
  std::size_t hi;
};

// Level index of every vertex, plus the sorted distinct values.
std::vector<std::size_t> level_indices(const PLFunction& g, std::vector<Rational>& levels) {
  levels = g.values();
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<std::size_t> out(g.values().size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = static_cast<std::size_t>(
        std::lower_bound(levels.begin(), levels.end(), g.values()[v]) - levels.begin());
  }
  return out;
}

}  // namespace

ReebGraph reeb_graph(const PLFunction& g) {
  const SimplicialComplex& k = g.complex();
  std::vector<Rational> levels;
  const auto level = level_indices(g, levels);
  const std::size_t nlevels = levels.size();
  const std::size_t nv = k.vertex_count();

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k.count(1); ++i) {
    const auto s = k.simplex(static_cast<SimplexId>(k.first_id(1) + i));
    Vertex a = s[0], b = s[1];
    if (level[b] < level[a]) std::swap(a, b);
    edges.push_back({a, b, level[a], level[b]});
  }
  auto edge_index = [&](Vertex a, Vertex b) {
    const Vertex ab[2] = {std::min(a, b), std::max(a, b)};
    return static_cast<std::size_t>(*k.find(ab) - k.first_id(1));
  };
  struct Triangle {
    std::size_t e[3];
    Vertex v[3];
    std::size_t lo, hi;
  };
  std::vector<Triangle> triangles;
  for (std::size_t i = 0; i < k.count(2); ++i) {
    const auto s = k.simplex(static_cast<SimplexId>(k.first_id(2) + i));
    Triangle t{{edge_index(s[0], s[1]), edge_index(s[0], s[2]), edge_index(s[1], s[2])},
               {s[0], s[1], s[2]},
               std::min({level[s[0]], level[s[1]], level[s[2]]}),
               std::max({level[s[0]], level[s[1]], level[s[2]]})};
    triangles.push_back(t);
  }

  // Bucket edges and triangles by the levels they touch.
  std::vector<std::vector<std::size_t>> edges_at(nlevels), tris_at(nlevels);
  std::vector<std::vector<std::size_t>> edges_over(nlevels), tris_over(nlevels);  // gap j..j+1
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t j = edges[e].lo; j <= edges[e].hi; ++j) edges_at[j].push_back(e);
    for (std::size_t j = edges[e].lo; j < edges[e].hi; ++j) edges_over[j].push_back(e);
  }
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    for (std::size_t j = triangles[t].lo; j <= triangles[t].hi; ++j) tris_at[j].push_back(t);
    for (std::size_t j = triangles[t].lo; j < triangles[t].hi; ++j) tris_over[j].push_back(t);
  }
  std::vector<std::vector<Vertex>> vertices_at(nlevels);
  for (Vertex v = 0; v < nv; ++v) vertices_at[level[v]].push_back(v);

  // --- level-set components at each vertex value -------------------------
  // Elements: vertices at the level, and edges crossing it strictly.
  std::vector<std::size_t> vertex_comp(nv);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> crossing_comp(nlevels);
  std::vector<std::size_t> comp_level;
  std::vector<std::int64_t> comp_min_vertex;  // -1 when the component has no vertex

  std::vector<std::int64_t> edge_slot(edges.size(), -1);
  for (std::size_t j = 0; j < nlevels; ++j) {
    const auto& verts = vertices_at[j];
    std::vector<std::size_t> crossing;
    for (std::size_t e : edges_at[j]) {
      if (edges[e].lo < j && j < edges[e].hi) crossing.push_back(e);
    }
    UnionFind uf(verts.size() + crossing.size());
    auto vslot = [&](Vertex v) {
      return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) -
                                      verts.begin());
    };
    for (std::size_t i = 0; i < crossing.size(); ++i) {
      edge_slot[crossing[i]] = static_cast<std::int64_t>(verts.size() + i);
    }
    for (std::size_t e : edges_at[j]) {
      if (edges[e].lo == j && edges[e].hi == j) uf.unite(vslot(edges[e].lower), vslot(edges[e].upper));
    }
    for (std::size_t t : tris_at[j]) {
      std::vector<std::size_t> touching;
      for (Vertex v : triangles[t].v) {
        if (level[v] == j) touching.push_back(vslot(v));
      }
      for (std::size_t e : triangles[t].e) {
        if (edge_slot[e] >= 0) touching.push_back(static_cast<std::size_t>(edge_slot[e]));
      }
      for (std::size_t i = 1; i < touching.size(); ++i) uf.unite(touching[0], touching[i]);
    }

    // Number components: vertex-bearing ones by smallest vertex, then the rest.
    std::vector<std::int64_t> id_of_root(uf.size(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const std::size_t root = uf.find(i);
      if (id_of_root[root] < 0) {
        id_of_root[root] = static_cast<std::int64_t>(comp_level.size());
        comp_level.push_back(j);
        comp_min_vertex.push_back(verts[i]);
      }
      vertex_comp[verts[i]] = static_cast<std::size_t>(id_of_root[root]);
    }
    for (std::size_t i = 0; i < crossing.size(); ++i) {
      const std::size_t root = uf.find(verts.size() + i);
      if (id_of_root[root] < 0) {
        id_of_root[root] = static_cast<std::int64_t>(comp_level.size());
        comp_level.push_back(j);
        comp_min_vertex.push_back(-1);
      }
      crossing_comp[j].emplace_back(crossing[i], static_cast<std::size_t>(id_of_root[root]));
      edge_slot[crossing[i]] = -1;
    }
    std::sort(crossing_comp[j].begin(), crossing_comp[j].end());
  }

  // Component of level j met by edge e (which spans level j).
  auto comp_on_edge = [&](std::size_t e, std::size_t j) -> std::size_t {
    if (level[edges[e].lower] == j) return vertex_comp[edges[e].lower];
    if (level[edges[e].upper] == j) return vertex_comp[edges[e].upper];
    const auto& list = crossing_comp[j];
    auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(e, std::size_t{0}));
    return it->second;
  };

  // --- components of the open gaps between consecutive values ------------
  struct Arc {
    std::size_t down, up;
  };
  std::vector<Arc> gap_arcs;
  const std::size_t ncomp = comp_level.size();
  std::vector<std::vector<std::size_t>> up_arcs(ncomp), down_arcs(ncomp);
  for (std::size_t j = 0; j + 1 < nlevels; ++j) {
    const auto& over = edges_over[j];
    UnionFind uf(over.size());
    for (std::size_t i = 0; i < over.size(); ++i) edge_slot[over[i]] = static_cast<std::int64_t>(i);
    for (std::size_t t : tris_over[j]) {
      std::int64_t first = -1;
      for (std::size_t e : triangles[t].e) {
        if (edge_slot[e] < 0) continue;
        if (first < 0) {
          first = edge_slot[e];
        } else {
          uf.unite(static_cast<std::size_t>(first), static_cast<std::size_t>(edge_slot[e]));
        }
      }
    }
    std::vector<char> seen(over.size(), 0);
    for (std::size_t i = 0; i < over.size(); ++i) {
      const std::size_t root = uf.find(i);
      if (seen[root]) continue;
      seen[root] = 1;
      const Arc arc{comp_on_edge(over[i], j), comp_on_edge(over[i], j + 1)};
      up_arcs[arc.down].push_back(gap_arcs.size());
      down_arcs[arc.up].push_back(gap_arcs.size());
      gap_arcs.push_back(arc);
    }
    for (std::size_t e : over) edge_slot[e] = -1;
  }

  // --- contract regular (vertex-free) components --------------------------
  ReebGraph graph;
  std::vector<std::int64_t> node_of(ncomp, -1);
  std::vector<std::uint32_t> per_level(nlevels, 0);
  for (std::size_t c = 0; c < ncomp; ++c) {
    if (comp_min_vertex[c] < 0) continue;
    node_of[c] = static_cast<std::int64_t>(graph.nodes.size());
    graph.nodes.push_back({levels[comp_level[c]], per_level[comp_level[c]]++,
                           static_cast<Vertex>(comp_min_vertex[c])});
  }
  for (std::size_t a = 0; a < gap_arcs.size(); ++a) {
    if (node_of[gap_arcs[a].down] < 0) continue;
    std::size_t cur = a;
    while (node_of[gap_arcs[cur].up] < 0) {
      const auto& next = up_arcs[gap_arcs[cur].up];
      if (next.size() != 1 || down_arcs[gap_arcs[cur].up].size() != 1) {
        throw std::logic_error("vertex-free level component is not regular");
      }
      cur = next.front();
    }
    graph.arcs.emplace_back(static_cast<std::uint32_t>(node_of[gap_arcs[a].down]),
                            static_cast<std::uint32_t>(node_of[gap_arcs[cur].up]));
  }
  std::sort(graph.arcs.begin(), graph.arcs.end());

  graph.vertex_node.resize(nv);
  for (Vertex v = 0; v < nv; ++v) {
    graph.vertex_node[v] = static_cast<std::uint32_t>(node_of[vertex_comp[v]]);
  }
  return graph;
}

BettiVector ReebGraph::betti() const {
  UnionFind uf(nodes.size());
  std::size_t b0 = nodes.size();
  for (auto [a, b] : arcs) {
    if (uf.unite(a, b)) --b0;
  }
  return make_betti({b0, arcs.size() + b0 - nodes.size()});
}

SimplicialComplex ReebGraph::realization() const {
  std::vector<Simplex> edges;
  const auto n = static_cast<Vertex>(nodes.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto mid = static_cast<Vertex>(n + i);
    edges.push_back({arcs[i].first, mid});
    edges.push_back({mid, arcs[i].second});
  }
  return SimplicialComplex::validate(nodes.size() + arcs.size(), std::move(edges));
}

SimplicialComplex path_complex(std::size_t n) {
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  }
  return SimplicialComplex::validate(n, std::move(edges));
}

}  // namespace reebforge
