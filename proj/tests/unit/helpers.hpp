#pragma once

#include <vector>

#include "reebforge/complex.hpp"
#include "reebforge/fixtures.hpp"
#include "reebforge/homology.hpp"

namespace testing {

using namespace reebforge;

inline BettiVector bv(std::vector<std::size_t> b) { return make_betti(std::move(b)); }

inline SimplicialComplex full_simplex(std::size_t n) {
  Simplex s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Vertex>(i);
  return SimplicialComplex::generated_by(n, {s});
}

inline SimplicialComplex point() { return SimplicialComplex::validate(1, {}); }

/// Complexes every homology property is checked on.
inline std::vector<SimplicialComplex> suite_complexes() {
  std::vector<SimplicialComplex> out;
  out.push_back(SimplicialComplex());
  out.push_back(point());
  out.push_back(SimplicialComplex::validate(2, {}));
  out.push_back(full_simplex(2));
  out.push_back(full_simplex(3));
  out.push_back(full_simplex(4));
  out.push_back(circle(3));
  out.push_back(circle(5));
  out.push_back(tetrahedron_boundary());
  out.push_back(minimal_torus());
  out.push_back(disjoint_union(circle(4), tetrahedron_boundary()));
  out.push_back(disk_collapse(2).domain());
  out.push_back(staircase_product(circle(3), circle(3)));
  for (std::uint64_t seed = 0; seed < 6; ++seed) out.push_back(random_map(seed).domain());
  return out;
}

}  // namespace testing
