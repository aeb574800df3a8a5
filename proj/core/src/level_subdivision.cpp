#include "reebforge/reeb_graph.hpp"

#include <algorithm>

namespace reebforge {

LevelSubdivision level_subdivision(const PLFunction& g) {
  const SimplicialComplex& k = g.complex();
  std::vector<Rational> levels = g.values();
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  auto level_of = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(levels.begin(), levels.end(), g(v)) - levels.begin());
  };

  const std::size_t nv = k.vertex_count();
  std::vector<std::size_t> level(nv);
  for (Vertex v = 0; v < nv; ++v) level[v] = level_of(v);

  // New vertices: one per (edge, level strictly inside the edge's range).
  std::vector<Vertex> first_cut(k.count(1));
  std::vector<std::size_t> level_of_new(level);
  std::size_t next = nv;
  for (std::size_t i = 0; i < k.count(1); ++i) {
    const auto e = k.simplex(static_cast<SimplexId>(k.first_id(1) + i));
    const std::size_t lo = std::min(level[e[0]], level[e[1]]);
    const std::size_t hi = std::max(level[e[0]], level[e[1]]);
    first_cut[i] = static_cast<Vertex>(next);
    for (std::size_t j = lo + 1; j < hi; ++j) level_of_new.push_back(j);
    if (hi > lo + 1) next += hi - lo - 1;
  }

  // Point of edge {a, b} at level j (a vertex when j is an endpoint level).
  auto point = [&](Vertex a, Vertex b, std::size_t j) -> Vertex {
    if (level[a] == j) return a;
    if (level[b] == j) return b;
    const Vertex ab[2] = {std::min(a, b), std::max(a, b)};
    const std::size_t e = *k.find(ab) - k.first_id(1);
    const std::size_t lo = std::min(level[a], level[b]);
    return static_cast<Vertex>(first_cut[e] + (j - lo - 1));
  };

  std::vector<Simplex> generators;
  for (Vertex v = 0; v < nv; ++v) generators.push_back({v});
  for (std::size_t i = 0; i < k.count(1); ++i) {
    const auto e = k.simplex(static_cast<SimplexId>(k.first_id(1) + i));
    Vertex a = e[0], b = e[1];
    if (level[b] < level[a]) std::swap(a, b);
    Vertex prev = a;
    for (std::size_t j = level[a] + 1; j <= level[b]; ++j) {
      const Vertex cur = point(a, b, j);
      generators.push_back({prev, cur});
      prev = cur;
    }
  }
  for (std::size_t i = 0; i < k.count(2); ++i) {
    const auto t = k.simplex(static_cast<SimplexId>(k.first_id(2) + i));
    Vertex v[3] = {t[0], t[1], t[2]};
    std::sort(v, v + 3, [&](Vertex x, Vertex y) {
      return level[x] != level[y] ? level[x] < level[y] : x < y;
    });
    const Vertex a = v[0], b = v[1], c = v[2];
    const std::size_t la = level[a], lb = level[b], lc = level[c];
    if (la == lc) {
      generators.push_back({a, b, c});
      continue;
    }
    auto long_side = [&](std::size_t j) { return point(a, c, j); };
    auto short_side = [&](std::size_t j) {
      if (j == lb) return b;
      return j < lb ? point(a, b, j) : point(b, c, j);
    };
    for (std::size_t j = la; j < lc; ++j) {
      const Vertex l0 = long_side(j), s0 = short_side(j);
      const Vertex l1 = long_side(j + 1), s1 = short_side(j + 1);
      auto emit = [&](Vertex x, Vertex y, Vertex z) {
        if (x != y && y != z && x != z) generators.push_back({x, y, z});
      };
      emit(l0, s0, s1);
      emit(l0, s1, l1);
    }
  }

  auto domain = share(SimplicialComplex::generated_by(next, generators));
  std::vector<Rational> values(next);
  std::vector<Vertex> images(next);
  for (std::size_t v = 0; v < next; ++v) {
    values[v] = v < nv ? g(static_cast<Vertex>(v)) : levels[level_of_new[v]];
    images[v] = static_cast<Vertex>(level_of_new[v]);
  }
  auto path = share(path_complex(levels.size()));
  return LevelSubdivision{levels, PLFunction(domain, std::move(values)),
                          SimplicialMap::check(domain, std::move(path), std::move(images))};
}

}  // namespace reebforge
