#include "reebforge/fiber_power.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "reebforge/error.hpp"
#include "reebforge/reeb.hpp"

namespace reebforge {

namespace {

void budget_exceeded(const char* what, std::size_t cap) {
  throw Error(ErrorKind::BudgetExceeded,
              std::string(what) + " exceeds the cell cap of " + std::to_string(cap));
}

std::vector<Vertex> intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> image_vertices(const SimplicialMap& f, std::span<const Vertex> s) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(f(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Nerve route

NerveComplex fiber_power_nerve(const SimplicialMap& f, std::size_t p, std::size_t cell_cap,
                               std::optional<std::span<const SimplexId>> maximal_order,
                               std::optional<std::size_t> max_dimension) {
  const SimplicialComplex& k = f.domain();
  std::vector<SimplexId> maximal = k.maximal_simplices();
  if (maximal_order) {
    std::vector<SimplexId> given(maximal_order->begin(), maximal_order->end());
    std::vector<SimplexId> a = given, b = maximal;
    std::sort(a.begin(), a.end());
    if (a != b) throw Error(ErrorKind::InvalidParams, "maximal_order is not a permutation");
    maximal = std::move(given);
  }
  const std::size_t factors = p + 1;

  std::vector<std::vector<Vertex>> images;
  for (SimplexId s : maximal) images.push_back(image_vertices(f, k.simplex(s)));

  // Cover vertices: tuples of maximal simplices whose images share a vertex.
  NerveComplex out;
  std::vector<std::size_t> tuple;
  auto grow = [&](auto&& self, const std::vector<Vertex>& common) -> void {
    if (tuple.size() == factors) {
      std::vector<SimplexId> cell;
      for (std::size_t i : tuple) cell.push_back(maximal[i]);
      out.cover_index.push_back(std::move(cell));
      if (out.cover_index.size() > cell_cap) budget_exceeded("fiber-power nerve", cell_cap);
      return;
    }
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      auto next = tuple.empty() ? images[i] : intersect(common, images[i]);
      if (next.empty()) continue;
      tuple.push_back(i);
      self(self, next);
      tuple.pop_back();
    }
  };
  grow(grow, {});

  // Nerve simplices: sets of cover cells whose componentwise intersections
  // rho_i are nonempty faces with intersecting images. Failure is inherited
  // by supersets, so depth-first extension with pruning enumerates exactly
  // the nerve.
  const std::size_t n = out.cover_index.size();
  const std::size_t max_vertices = max_dimension ? *max_dimension + 1 : n;
  std::vector<Simplex> simplices;
  Simplex current;
  using Faces = std::vector<std::vector<Vertex>>;
  auto extend = [&](auto&& self, const Faces& rho, std::size_t from) -> void {
    for (std::size_t j = from; j < n; ++j) {
      Faces next(factors);
      bool ok = true;
      std::vector<Vertex> common;
      for (std::size_t i = 0; i < factors && ok; ++i) {
        next[i] = intersect(rho[i], k.simplex(out.cover_index[j][i]));
        if (next[i].empty()) {
          ok = false;
          break;
        }
        auto img = image_vertices(f, next[i]);
        common = i == 0 ? img : intersect(common, img);
        ok = !common.empty();
      }
      if (!ok) continue;
      current.push_back(static_cast<Vertex>(j));
      simplices.push_back(current);
      if (simplices.size() > cell_cap) budget_exceeded("fiber-power nerve", cell_cap);
      if (current.size() < max_vertices) self(self, next, j + 1);
      current.pop_back();
    }
  };
  for (std::size_t j = 0; j < n; ++j) {
    Faces rho(factors);
    for (std::size_t i = 0; i < factors; ++i) {
      auto s = k.simplex(out.cover_index[j][i]);
      rho[i].assign(s.begin(), s.end());
    }
    current.assign(1, static_cast<Vertex>(j));
    if (max_vertices > 1) extend(extend, rho, j + 1);
  }
  out.nerve = SimplicialComplex::validate(n, std::move(simplices), FaceClosure::Require);
  return out;
}

// ---------------------------------------------------------------------------
// Cellular route

namespace {

// Cells are tuples of simplices from one group. Groups refine "same image"
// and are closed under the facet moves below.
FiberPowerCells grouped_cells(const SimplicialMap& f, std::size_t p, std::size_t cell_cap,
                              std::span<const std::uint32_t> group, std::size_t group_count) {
  const SimplicialComplex& k = f.domain();
  const SimplicialComplex& l = f.codomain();
  const std::size_t factors = p + 1;

  // Simplices of each group, and each simplex's slot in that list.
  std::vector<std::vector<SimplexId>> preimage(group_count);
  std::vector<std::size_t> slot(k.size());
  for (SimplexId s = 0; s < k.size(); ++s) {
    auto& bucket = preimage[group[s]];
    slot[s] = bucket.size();
    bucket.push_back(s);
  }

  std::vector<std::size_t> first_cell(group_count + 1, 0);
  for (std::size_t tau = 0; tau < group_count; ++tau) {
    std::size_t block = preimage[tau].empty() ? 0 : 1;
    for (std::size_t i = 0; i < factors && block > 0; ++i) {
      if (block > cell_cap / preimage[tau].size() + 1) budget_exceeded("fiber power", cell_cap);
      block *= preimage[tau].size();
    }
    first_cell[tau + 1] = first_cell[tau] + block;
    if (first_cell[tau + 1] > cell_cap) budget_exceeded("fiber power", cell_cap);
  }

  FiberPowerCells out;
  out.factors = factors;
  const std::size_t total = first_cell[group_count];
  out.cells.reserve(total);
  out.dims.reserve(total);
  for (std::size_t tau = 0; tau < group_count; ++tau) {
    const auto& pre = preimage[tau];
    if (pre.empty()) continue;
    const int tau_dim = l.dim_of(f.image_of(pre[0]));
    std::vector<std::size_t> digit(factors, 0);
    for (std::size_t c = first_cell[tau]; c < first_cell[tau + 1]; ++c) {
      std::vector<SimplexId> cell(factors);
      int dim = tau_dim;
      for (std::size_t i = 0; i < factors; ++i) {
        cell[i] = pre[digit[i]];
        dim += k.dim_of(cell[i]) - tau_dim;
      }
      out.cells.push_back(std::move(cell));
      out.dims.push_back(dim);
      for (std::size_t i = 0; i < factors; ++i) {  // little-endian mixed radix
        if (++digit[i] < pre.size()) break;
        digit[i] = 0;
      }
    }
  }

  auto cell_id = [&](const std::vector<SimplexId>& cell) -> std::uint32_t {
    const std::uint32_t tau = group[cell[0]];
    std::size_t index = 0;
    for (std::size_t i = factors; i-- > 0;) index = index * preimage[tau].size() + slot[cell[i]];
    return static_cast<std::uint32_t>(first_cell[tau] + index);
  };

  // Facets come from a single barycentric coordinate hitting zero:
  //  (a) drop a vertex v of s_i that shares its image with another vertex
  //      of s_i; the image is unchanged.
  //  (b) drop an image vertex t of tau that has exactly one preimage in
  //      every s_i; all factors lose that preimage.
  std::vector<std::vector<std::uint32_t>> facet_ids(total);
  Simplex scratch;
  auto without = [&](SimplexId s, Vertex v) {
    scratch.clear();
    for (Vertex u : k.simplex(s)) {
      if (u != v) scratch.push_back(u);
    }
    return *k.find(scratch);
  };
  for (std::size_t c = 0; c < total; ++c) {
    const auto& cell = out.cells[c];
    const auto tau = l.simplex(f.image_of(cell[0]));
    for (std::size_t i = 0; i < factors; ++i) {
      const auto s = k.simplex(cell[i]);
      for (Vertex v : s) {
        const auto shared = std::count_if(s.begin(), s.end(), [&](Vertex u) { return f(u) == f(v); });
        if (shared < 2) continue;
        auto face = cell;
        face[i] = without(cell[i], v);
        facet_ids[c].push_back(cell_id(face));
      }
    }
    if (tau.size() < 2) continue;
    for (Vertex t : tau) {
      auto face = cell;
      bool single = true;
      for (std::size_t i = 0; i < factors && single; ++i) {
        const auto s = k.simplex(cell[i]);
        Vertex hit = 0;
        int count = 0;
        for (Vertex u : s) {
          if (f(u) == t) {
            hit = u;
            ++count;
          }
        }
        single = count == 1;
        if (single) face[i] = without(cell[i], hit);
      }
      if (single) facet_ids[c].push_back(cell_id(face));
    }
  }

  // Incidence numbers. 1-cells have two endpoints (+1 / -1); higher cells
  // are oriented by propagating around each codimension-two face, which
  // lies on exactly two facets (the diamond property of polytopes).
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return out.dims[a] < out.dims[b]; });
  out.facets.resize(total);
  for (std::size_t c : order) {
    auto ids = facet_ids[c];
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto& signed_facets = out.facets[c];
    if (out.dims[c] == 0) continue;
    if (out.dims[c] == 1) {
      if (ids.size() != 2) throw std::logic_error("1-cell without two endpoints");
      signed_facets = {{ids[0], -1}, {ids[1], 1}};
      continue;
    }
    std::vector<int> sign(ids.size(), 0);
    // ridge -> (position in ids, incidence of that facet on the ridge)
    std::vector<std::pair<std::uint32_t, std::pair<std::size_t, int>>> ridges;
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (auto [g, s] : out.facets[ids[a]]) ridges.push_back({g, {a, s}});
    }
    std::sort(ridges.begin(), ridges.end());
    std::vector<std::vector<std::pair<std::size_t, std::pair<std::size_t, int>>>> adjacency(ids.size());
    for (std::size_t r = 0; r < ridges.size();) {
      std::size_t e = r;
      while (e < ridges.size() && ridges[e].first == ridges[r].first) ++e;
      if (e - r != 2) throw std::logic_error("fiber power cell violates the diamond property");
      const auto [a, sa] = ridges[r].second;
      const auto [b, sb] = ridges[r + 1].second;
      adjacency[a].push_back({b, {sa, sb}});
      adjacency[b].push_back({a, {sb, sa}});
      r = e;
    }
    sign[0] = 1;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (auto [b, incidences] : adjacency[a]) {
        const int want = -sign[a] * incidences.first * incidences.second;
        if (sign[b] == 0) {
          sign[b] = want;
          stack.push_back(b);
        } else if (sign[b] != want) {
          throw std::logic_error("inconsistent orientation in fiber power cell");
        }
      }
    }
    for (std::size_t a = 0; a < ids.size(); ++a) {
      if (sign[a] == 0) throw std::logic_error("disconnected facet graph in fiber power cell");
      signed_facets.emplace_back(ids[a], sign[a]);
    }
  }
  return out;
}

}  // namespace

FiberPowerCells fiber_power_cells(const SimplicialMap& f, std::size_t p, std::size_t cell_cap) {
  std::vector<std::uint32_t> image(f.domain().size());
  for (SimplexId s = 0; s < image.size(); ++s) image[s] = static_cast<std::uint32_t>(f.image_of(s));
  return grouped_cells(f, p, cell_cap, image, f.codomain().size());
}

FiberPowerCells reeb_fiber_power_cells(const SimplicialMap& f, std::size_t p, std::size_t cell_cap) {
  const ReebComplex r = reeb_space(f, {.build_quotient_map = false});
  return grouped_cells(f, p, cell_cap, r.simplex_stratum, r.strata.size());
}

ChainComplexQ FiberPowerCells::chain_complex() const {
  ChainComplexQ cc;
  int top = -1;
  for (int d : dims) top = std::max(top, d);
  if (top < 0) return cc;
  cc.basis.resize(static_cast<std::size_t>(top) + 1);
  std::vector<std::uint32_t> local(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    auto& b = cc.basis[static_cast<std::size_t>(dims[c])];
    local[c] = static_cast<std::uint32_t>(b.size());
    b.push_back(static_cast<std::uint32_t>(c));
  }
  cc.boundary.resize(cc.basis.size());
  for (std::size_t d = 0; d < cc.basis.size(); ++d) {
    SparseMatrix& m = cc.boundary[d];
    m.rows = d == 0 ? 0 : cc.basis[d - 1].size();
    m.columns.resize(cc.basis[d].size());
    for (std::size_t j = 0; j < cc.basis[d].size(); ++j) {
      for (auto [g, s] : facets[cc.basis[d][j]]) m.columns[j].emplace_back(local[g], s);
      std::sort(m.columns[j].begin(), m.columns[j].end());
    }
  }
  return cc;
}

int fiber_power_dimension(const SimplicialMap& f, std::size_t p) {
  const SimplicialComplex& k = f.domain();
  const std::vector<SimplexId> maximal = k.maximal_simplices();
  std::vector<std::vector<Vertex>> images;
  std::vector<int> excess;  // dim s - dim f(s)
  for (SimplexId s : maximal) {
    images.push_back(image_vertices(f, k.simplex(s)));
    excess.push_back(static_cast<int>(k.simplex(s).size()) - static_cast<int>(images.back().size()));
  }
  // P(s_0..s_p) fibers over the common image face with fibers of dimension
  // sum (dim s_i - dim f(s_i)); every point lies in such a cell.
  int best = -1;
  std::size_t depth = 0;
  auto grow = [&](auto&& self, const std::vector<Vertex>& common, int fiber) -> void {
    if (depth == p + 1) {
      best = std::max(best, static_cast<int>(common.size()) - 1 + fiber);
      return;
    }
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      auto next = depth == 0 ? images[i] : intersect(common, images[i]);
      if (next.empty()) continue;
      ++depth;
      self(self, next, fiber + excess[i]);
      --depth;
    }
  };
  grow(grow, {}, 0);
  return best;
}

BettiVector fiber_power_betti(const SimplicialMap& f, std::size_t p, FiberPowerMethod method,
                              std::size_t cell_cap) {
  if (method == FiberPowerMethod::Nerve) {
    const int dim = fiber_power_dimension(f, p);
    if (dim < 0) return {};
    const auto top = static_cast<std::size_t>(dim);
    BettiVector b = betti(fiber_power_nerve(f, p, cell_cap, {}, top + 1).nerve);
    if (b.b.size() > top + 1) b = make_betti({b.b.begin(), b.b.begin() + static_cast<std::ptrdiff_t>(top + 1)});
    return b;
  }
  return betti(fiber_power_cells(f, p, cell_cap).chain_complex());
}

}  // namespace reebforge
