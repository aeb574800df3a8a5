#include "reebforge/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "reebforge/error.hpp"
#include "reebforge/union_find.hpp"

namespace reebforge {

namespace {

std::string format_simplex(std::span<const Vertex> s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

// Facets of a sorted simplex, in the order "drop vertex i" for i = 0..d.
void for_each_facet(std::span<const Vertex> s, Simplex& scratch, auto&& fn) {
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    scratch.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != skip) scratch.push_back(s[i]);
    }
    fn(scratch);
  }
}

void add_all_faces(const Simplex& s, std::vector<std::vector<Simplex>>& by_dim) {
  const std::size_t n = s.size();
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) face.push_back(s[i]);
    }
    by_dim[face.size() - 1].push_back(std::move(face));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::assemble(std::size_t vertex_count,
                                              std::vector<std::vector<Vertex>> flat_by_dim) {
  SimplicialComplex k;
  if (vertex_count == 0) return k;
  flat_by_dim.resize(std::max<std::size_t>(flat_by_dim.size(), 1));
  flat_by_dim[0].resize(vertex_count);
  std::iota(flat_by_dim[0].begin(), flat_by_dim[0].end(), Vertex{0});
  while (flat_by_dim.size() > 1 && flat_by_dim.back().empty()) flat_by_dim.pop_back();

  k.cells_ = std::move(flat_by_dim);
  k.counts_.resize(k.cells_.size());
  k.offsets_.resize(k.cells_.size());
  for (std::size_t d = 0; d < k.cells_.size(); ++d) {
    k.counts_[d] = k.cells_[d].size() / (d + 1);
    k.offsets_[d] = static_cast<SimplexId>(k.total_);
    k.total_ += k.counts_[d];
  }
  return k;
}

namespace {

// Sorts each dimension lexicographically. Returns the first duplicate found,
// or nullopt. When `merge` is set duplicates are removed instead.
std::optional<Simplex> sort_by_dim(std::vector<std::vector<Simplex>>& by_dim, bool merge) {
  for (auto& bucket : by_dim) {
    std::sort(bucket.begin(), bucket.end());
    auto dup = std::adjacent_find(bucket.begin(), bucket.end());
    if (dup == bucket.end()) continue;
    if (!merge) return *dup;
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> flatten(std::vector<std::vector<Simplex>>& by_dim) {
  std::vector<std::vector<Vertex>> flat(by_dim.size());
  for (std::size_t d = 1; d < by_dim.size(); ++d) {
    flat[d].reserve(by_dim[d].size() * (d + 1));
    for (const auto& s : by_dim[d]) flat[d].insert(flat[d].end(), s.begin(), s.end());
  }
  return flat;
}

}  // namespace

SimplicialComplex SimplicialComplex::validate(std::size_t vertex_count,
                                              std::vector<Simplex> simplices,
                                              FaceClosure closure,
                                              std::vector<Point> coordinates) {
  if (!coordinates.empty()) {
    if (coordinates.size() != vertex_count) {
      throw Error(ErrorKind::InconsistentCoordinates,
                  "expected " + std::to_string(vertex_count) + " coordinate points, got " +
                      std::to_string(coordinates.size()));
    }
    for (const auto& p : coordinates) {
      if (p.size() != coordinates.front().size()) {
        throw Error(ErrorKind::InconsistentCoordinates, "coordinate points differ in dimension");
      }
    }
  }

  std::size_t max_dim = 0;
  for (auto& s : simplices) {
    if (s.empty()) throw Error(ErrorKind::EmptySimplex, "empty simplex in input");
    for (Vertex v : s) {
      if (v >= vertex_count) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " in " + format_simplex(s) +
                        " is not below vertex count " + std::to_string(vertex_count));
      }
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(ErrorKind::DuplicateSimplex, "repeated vertex in " + format_simplex(s));
    }
    max_dim = std::max(max_dim, s.size() - 1);
    if (s.size() > 32) throw Error(ErrorKind::InvalidParams, "simplex dimension above 31");
  }

  std::vector<std::vector<Simplex>> by_dim(max_dim + 1);
  for (auto& s : simplices) by_dim[s.size() - 1].push_back(std::move(s));
  if (auto dup = sort_by_dim(by_dim, false)) {
    throw Error(ErrorKind::DuplicateSimplex, format_simplex(*dup) + " listed twice");
  }

  if (closure == FaceClosure::Complete) {
    std::vector<std::vector<Simplex>> faces(by_dim.size());
    for (const auto& bucket : by_dim) {
      for (const auto& s : bucket) add_all_faces(s, faces);
    }
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
      by_dim[d].insert(by_dim[d].end(), std::make_move_iterator(faces[d].begin()),
                       std::make_move_iterator(faces[d].end()));
    }
    sort_by_dim(by_dim, true);
  } else {
    Simplex scratch;
    for (std::size_t d = 2; d < by_dim.size(); ++d) {
      for (const auto& s : by_dim[d]) {
        for_each_facet(s, scratch, [&](const Simplex& face) {
          if (!std::binary_search(by_dim[d - 1].begin(), by_dim[d - 1].end(), face)) {
            throw Error(ErrorKind::MissingFace,
                        format_simplex(face) + " (face of " + format_simplex(s) + ") is absent");
          }
        });
      }
    }
  }

  SimplicialComplex k = assemble(vertex_count, flatten(by_dim));
  k.coordinates_ = std::move(coordinates);
  return k;
}

SimplicialComplex SimplicialComplex::generated_by(std::size_t vertex_count,
                                                  const std::vector<Simplex>& generators) {
  std::size_t max_dim = 0;
  for (const auto& s : generators) {
    if (s.empty()) throw Error(ErrorKind::EmptySimplex, "empty generator");
    max_dim = std::max(max_dim, s.size() - 1);
  }
  std::vector<std::vector<Simplex>> by_dim(max_dim + 1);
  for (Simplex s : generators) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Vertex v : s) {
      if (v >= vertex_count) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " in " + format_simplex(s));
      }
    }
    if (s.size() > 1) add_all_faces(s, by_dim);
    by_dim[s.size() - 1].push_back(std::move(s));
  }
  sort_by_dim(by_dim, true);
  return assemble(vertex_count, flatten(by_dim));
}

std::size_t SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return counts_[static_cast<std::size_t>(dim)];
}

int SimplicialComplex::dim_of(SimplexId id) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::span<const Vertex> SimplicialComplex::simplex(SimplexId id) const {
  const auto d = static_cast<std::size_t>(dim_of(id));
  const std::size_t local = id - offsets_[d];
  return {cells_[d].data() + local * (d + 1), d + 1};
}

std::optional<SimplexId> SimplicialComplex::find(std::span<const Vertex> s) const {
  if (s.empty() || s.size() > cells_.size()) return std::nullopt;
  const std::size_t d = s.size() - 1;
  if (d == 0) {
    if (s[0] < counts_[0]) return s[0];
    return std::nullopt;
  }
  const Vertex* base = cells_[d].data();
  std::size_t lo = 0;
  std::size_t hi = counts_[d];
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const Vertex* cell = base + mid * (d + 1);
    if (std::lexicographical_compare(cell, cell + d + 1, s.begin(), s.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < counts_[d] && std::equal(s.begin(), s.end(), base + lo * (d + 1))) {
    return static_cast<SimplexId>(offsets_[d] + lo);
  }
  return std::nullopt;
}

std::vector<SimplexId> SimplicialComplex::facets(SimplexId id) const {
  std::vector<SimplexId> out;
  const auto s = simplex(id);
  if (s.size() < 2) return out;
  Simplex scratch;
  for_each_facet(s, scratch, [&](const Simplex& face) { out.push_back(*find(face)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplexId> SimplicialComplex::proper_faces(SimplexId id) const {
  std::vector<SimplexId> out;
  const auto s = simplex(id);
  const std::size_t n = s.size();
  const std::uint32_t full = (1u << n) - 1;
  Simplex face;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    face.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) face.push_back(s[i]);
    }
    out.push_back(*find(face));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplexId> SimplicialComplex::maximal_simplices() const {
  std::vector<char> covered(size(), 0);
  for (SimplexId id = static_cast<SimplexId>(vertex_count()); id < size(); ++id) {
    for (SimplexId f : facets(id)) covered[f] = 1;
  }
  std::vector<SimplexId> out;
  for (SimplexId id = 0; id < size(); ++id) {
    if (!covered[id]) out.push_back(id);
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::simplices() const {
  std::vector<Simplex> out;
  out.reserve(size());
  for (SimplexId id = 0; id < size(); ++id) {
    auto s = simplex(id);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

void SimplicialComplex::check_invariants() const {
  Simplex scratch;
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    const std::size_t w = d + 1;
    for (std::size_t i = 0; i < counts_[d]; ++i) {
      std::span<const Vertex> s(cells_[d].data() + i * w, w);
      for (std::size_t j = 0; j < w; ++j) {
        if (s[j] >= vertex_count()) {
          throw Error(ErrorKind::VertexOutOfRange, format_simplex(s));
        }
        if (j > 0 && s[j - 1] >= s[j]) {
          throw Error(ErrorKind::DuplicateSimplex, "unsorted or repeated vertex in " +
                                                       format_simplex(s));
        }
      }
      if (i > 0) {
        std::span<const Vertex> prev(cells_[d].data() + (i - 1) * w, w);
        if (!std::lexicographical_compare(prev.begin(), prev.end(), s.begin(), s.end())) {
          throw Error(ErrorKind::DuplicateSimplex, format_simplex(s) + " out of order");
        }
      }
      if (d >= 1) {
        for_each_facet(s, scratch, [&](const Simplex& face) {
          if (!find(face)) {
            throw Error(ErrorKind::MissingFace, format_simplex(face) + " of " + format_simplex(s));
          }
        });
      }
    }
  }
  for (const auto& p : coordinates_) {
    if (p.size() != ambient_dim() || coordinates_.size() != vertex_count()) {
      throw Error(ErrorKind::InconsistentCoordinates, "coordinate table malformed");
    }
  }
}

// ---------------------------------------------------------------------------

SimplicialMap SimplicialMap::check(ComplexPtr domain, ComplexPtr codomain,
                                   std::vector<Vertex> vertex_images) {
  if (vertex_images.size() != domain->vertex_count()) {
    throw Error(ErrorKind::ValueCountMismatch,
                "vertex image count " + std::to_string(vertex_images.size()) +
                    " differs from domain vertex count " +
                    std::to_string(domain->vertex_count()));
  }
  SimplicialMap f;
  f.simplex_images_.resize(domain->size());
  Simplex image;
  for (SimplexId id = 0; id < domain->size(); ++id) {
    const auto s = domain->simplex(id);
    image.clear();
    for (Vertex v : s) image.push_back(vertex_images[v]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    auto target = codomain->find(image);
    if (!target) {
      throw Error(ErrorKind::NotSimplicial, "image of " + format_simplex(s) + " is " +
                                                format_simplex(image) +
                                                ", not a simplex of the codomain");
    }
    f.simplex_images_[id] = *target;
  }
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  f.images_ = std::move(vertex_images);
  return f;
}

PLFunction::PLFunction(ComplexPtr complex, std::vector<Rational> values)
    : complex_(std::move(complex)), values_(std::move(values)) {
  if (values_.size() != complex_->vertex_count()) {
    throw Error(ErrorKind::ValueCountMismatch,
                std::to_string(values_.size()) + " values for " +
                    std::to_string(complex_->vertex_count()) + " vertices");
  }
}

// ---------------------------------------------------------------------------

namespace {

Partition classes_from(UnionFind& uf, std::span<const SimplexId> sorted_members,
                       const std::vector<std::int64_t>& slot) {
  Partition out;
  std::vector<std::int64_t> class_of_root(uf.size(), -1);
  for (SimplexId id : sorted_members) {
    const std::size_t root = uf.find(static_cast<std::size_t>(slot[id]));
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<std::int64_t>(out.classes.size());
      out.classes.emplace_back();
    }
    out.classes[static_cast<std::size_t>(class_of_root[root])].push_back(id);
  }
  return out;
}

}  // namespace

Partition connected_components(const SimplicialComplex& complex,
                               std::span<const SimplexId> subset) {
  std::vector<SimplexId> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<std::int64_t> slot(complex.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) slot[members[i]] = static_cast<std::int64_t>(i);

  UnionFind uf(members.size());
  for (SimplexId id : members) {
    for (SimplexId face : complex.proper_faces(id)) {
      if (slot[face] >= 0) uf.unite(static_cast<std::size_t>(slot[id]),
                                    static_cast<std::size_t>(slot[face]));
    }
  }
  return classes_from(uf, members, slot);
}

Partition vertex_components(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  UnionFind uf(n);
  const SimplexId first_edge = static_cast<SimplexId>(n);
  for (SimplexId e = first_edge; e < first_edge + complex.count(1); ++e) {
    auto s = complex.simplex(e);
    uf.unite(s[0], s[1]);
  }
  std::vector<SimplexId> vertices(n);
  std::iota(vertices.begin(), vertices.end(), SimplexId{0});
  std::vector<std::int64_t> slot(n);
  std::iota(slot.begin(), slot.end(), std::int64_t{0});
  return classes_from(uf, vertices, slot);
}

Subdivision barycentric_subdivision(const SimplicialComplex& complex) {
  const std::size_t n = complex.size();
  std::vector<std::vector<SimplexId>> below(n);
  for (SimplexId id = 0; id < n; ++id) below[id] = complex.proper_faces(id);

  std::vector<Simplex> chains;
  Simplex chain;
  // Extends `chain` downward from its current bottom element.
  auto extend = [&](auto&& self, SimplexId bottom) -> void {
    chains.push_back(chain);
    for (SimplexId face : below[bottom]) {
      chain.push_back(face);
      self(self, face);
      chain.pop_back();
    }
  };
  for (SimplexId top = 0; top < n; ++top) {
    chain.assign(1, top);
    extend(extend, top);
  }

  for (auto& c : chains) std::sort(c.begin(), c.end());

  Subdivision sd;
  std::vector<Point> coords;
  if (complex.has_coordinates()) {
    const auto& base = complex.coordinates();
    coords.reserve(n);
    for (SimplexId id = 0; id < n; ++id) {
      const auto s = complex.simplex(id);
      Point p(complex.ambient_dim());
      for (Vertex v : s) {
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += base[v][i];
      }
      for (auto& x : p) x /= static_cast<long>(s.size());
      coords.push_back(std::move(p));
    }
  }
  sd.complex = share(SimplicialComplex::validate(n, std::move(chains), FaceClosure::Require,
                                                 std::move(coords)));
  sd.carrier.resize(n);
  std::iota(sd.carrier.begin(), sd.carrier.end(), SimplexId{0});
  return sd;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& complex,
                                  std::span<const Vertex> vertices) {
  std::vector<std::int64_t> relabel(complex.vertex_count(), -1);
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) relabel[sorted[i]] = static_cast<std::int64_t>(i);

  std::vector<Simplex> kept;
  for (SimplexId id = static_cast<SimplexId>(complex.vertex_count()); id < complex.size(); ++id) {
    const auto s = complex.simplex(id);
    Simplex t;
    bool inside = true;
    for (Vertex v : s) {
      if (relabel[v] < 0) {
        inside = false;
        break;
      }
      t.push_back(static_cast<Vertex>(relabel[v]));
    }
    if (inside) kept.push_back(std::move(t));
  }
  return SimplicialComplex::validate(sorted.size(), std::move(kept), FaceClosure::Require);
}

// ---------------------------------------------------------------------------

namespace {

// All monotone lattice paths from (0,0) to (a,b); each path visits a+b+1 cells.
void lattice_paths(std::size_t a, std::size_t b,
                   const std::function<void(const std::vector<std::pair<std::size_t, std::size_t>>&)>&
                       emit) {
  std::vector<std::pair<std::size_t, std::size_t>> path{{0, 0}};
  auto walk = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == a && j == b) {
      emit(path);
      return;
    }
    if (i < a) {
      path.emplace_back(i + 1, j);
      self(self, i + 1, j);
      path.pop_back();
    }
    if (j < b) {
      path.emplace_back(i, j + 1);
      self(self, i, j + 1);
      path.pop_back();
    }
  };
  walk(walk, 0, 0);
}

}  // namespace

SimplicialComplex staircase_product(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  const std::size_t n2 = k2.vertex_count();
  const std::size_t n = k1.vertex_count() * n2;
  std::vector<Simplex> tops;
  const auto max1 = k1.maximal_simplices();
  const auto max2 = k2.maximal_simplices();
  for (SimplexId s1 : max1) {
    const auto a = k1.simplex(s1);
    for (SimplexId s2 : max2) {
      const auto b = k2.simplex(s2);
      lattice_paths(a.size() - 1, b.size() - 1, [&](const auto& path) {
        Simplex cell;
        cell.reserve(path.size());
        for (auto [i, j] : path) cell.push_back(static_cast<Vertex>(a[i] * n2 + b[j]));
        tops.push_back(std::move(cell));
      });
    }
  }
  SimplicialComplex product = SimplicialComplex::generated_by(n, tops);
  if (k1.has_coordinates() && k2.has_coordinates() && n > 0) {
    std::vector<Point> coords;
    coords.reserve(n);
    for (Vertex u = 0; u < k1.vertex_count(); ++u) {
      for (Vertex v = 0; v < n2; ++v) {
        Point p = k1.coordinates()[u];
        p.insert(p.end(), k2.coordinates()[v].begin(), k2.coordinates()[v].end());
        coords.push_back(std::move(p));
      }
    }
    product = SimplicialComplex::validate(n, product.simplices(), FaceClosure::Require,
                                          std::move(coords));
  }
  return product;
}

bool is_monotone(const SimplicialMap& f) {
  const auto& k = f.domain();
  for (SimplexId id = static_cast<SimplexId>(k.vertex_count()); id < k.size(); ++id) {
    const auto s = k.simplex(id);
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (f(s[i - 1]) > f(s[i])) return false;
    }
  }
  return true;
}

SimplicialMap staircase_product(const SimplicialMap& f1, const SimplicialMap& f2) {
  if (!is_monotone(f1) || !is_monotone(f2)) {
    throw Error(ErrorKind::NonMonotoneMap,
                "factor is not order-preserving along its simplices; relabel it first");
  }
  auto domain = share(staircase_product(f1.domain(), f2.domain()));
  auto codomain = share(staircase_product(f1.codomain(), f2.codomain()));
  const std::size_t n2 = f2.domain().vertex_count();
  const std::size_t m2 = f2.codomain().vertex_count();
  std::vector<Vertex> images(domain->vertex_count());
  for (Vertex u = 0; u < f1.domain().vertex_count(); ++u) {
    for (Vertex v = 0; v < n2; ++v) {
      images[u * n2 + v] = static_cast<Vertex>(f1(u) * m2 + f2(v));
    }
  }
  return SimplicialMap::check(std::move(domain), std::move(codomain), std::move(images));
}

SimplicialMap monotone_relabel(const SimplicialMap& f, std::vector<Vertex>* relabel_out) {
  const auto& k = f.domain();
  const std::size_t n = k.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return f(a) < f(b); });
  std::vector<Vertex> relabel(n);
  for (std::size_t i = 0; i < n; ++i) relabel[order[i]] = static_cast<Vertex>(i);

  std::vector<Simplex> simplices;
  for (SimplexId id = static_cast<SimplexId>(n); id < k.size(); ++id) {
    Simplex s;
    for (Vertex v : k.simplex(id)) s.push_back(relabel[v]);
    simplices.push_back(std::move(s));
  }
  std::vector<Point> coords;
  if (k.has_coordinates()) {
    coords.resize(n);
    for (Vertex v = 0; v < n; ++v) coords[relabel[v]] = k.coordinates()[v];
  }
  std::vector<Vertex> images(n);
  for (Vertex v = 0; v < n; ++v) images[relabel[v]] = f(v);
  if (relabel_out) *relabel_out = relabel;
  auto domain = share(SimplicialComplex::validate(n, std::move(simplices), FaceClosure::Require,
                                                  std::move(coords)));
  return SimplicialMap::check(std::move(domain), f.codomain_ptr(), std::move(images));
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  const auto shift = static_cast<Vertex>(a.vertex_count());
  std::vector<Simplex> all;
  for (SimplexId id = static_cast<SimplexId>(a.vertex_count()); id < a.size(); ++id) {
    auto s = a.simplex(id);
    all.emplace_back(s.begin(), s.end());
  }
  for (SimplexId id = static_cast<SimplexId>(b.vertex_count()); id < b.size(); ++id) {
    Simplex s;
    for (Vertex v : b.simplex(id)) s.push_back(v + shift);
    all.push_back(std::move(s));
  }
  return SimplicialComplex::validate(a.vertex_count() + b.vertex_count(), std::move(all),
                                     FaceClosure::Require);
}

}  // namespace reebforge
