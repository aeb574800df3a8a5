#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "reebforge/rational.hpp"

namespace reebforge {

using Vertex = std::uint32_t;
using SimplexId = std::uint32_t;
using Simplex = std::vector<Vertex>;
using Point = std::vector<Rational>;

enum class FaceClosure {
  Require,   ///< every face of a listed simplex must itself be listed
  Complete,  ///< missing faces are added
};

/// Finite abstract simplicial complex on the dense vertex set 0..v-1.
///
/// Simplices are stored dimension-major and lexicographically sorted within
/// each dimension, so a SimplexId is a stable canonical index: ids
/// 0..v-1 are the vertices themselves, followed by all edges, and so on.
/// Instances are immutable once built.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Strict constructor: rejects out-of-range vertices, duplicates, empty
  /// simplices and (under FaceClosure::Require) missing faces. Every vertex
  /// id below vertex_count is a 0-simplex whether listed or not.
  static SimplicialComplex validate(std::size_t vertex_count, std::vector<Simplex> simplices,
                                    FaceClosure closure = FaceClosure::Require,
                                    std::vector<Point> coordinates = {});

  /// The smallest complex containing the given simplices. Duplicates and
  /// repeated faces are merged silently; vertex ranges are still checked.
  static SimplicialComplex generated_by(std::size_t vertex_count,
                                        const std::vector<Simplex>& generators);

  std::size_t vertex_count() const { return counts_.empty() ? 0 : counts_[0]; }
  int dimension() const { return static_cast<int>(counts_.size()) - 1; }
  std::size_t size() const { return total_; }
  std::size_t count(int dim) const;
  SimplexId first_id(int dim) const { return offsets_.at(static_cast<std::size_t>(dim)); }

  std::span<const Vertex> simplex(SimplexId id) const;
  int dim_of(SimplexId id) const;

  /// Looks up a sorted vertex set. Returns nullopt if it is not a simplex.
  std::optional<SimplexId> find(std::span<const Vertex> sorted_vertices) const;
  bool contains(std::span<const Vertex> sorted_vertices) const {
    return find(sorted_vertices).has_value();
  }

  /// Codimension-one faces in canonical order (empty for vertices).
  std::vector<SimplexId> facets(SimplexId id) const;
  /// All nonempty proper faces.
  std::vector<SimplexId> proper_faces(SimplexId id) const;
  std::vector<SimplexId> maximal_simplices() const;
  std::vector<Simplex> simplices() const;

  bool has_coordinates() const { return !coordinates_.empty(); }
  const std::vector<Point>& coordinates() const { return coordinates_; }
  std::size_t ambient_dim() const {
    return coordinates_.empty() ? 0 : coordinates_.front().size();
  }

  /// Re-checks every invariant; throws Error on the first violation.
  void check_invariants() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.counts_ == b.counts_ && a.cells_ == b.cells_ && a.coordinates_ == b.coordinates_;
  }

 private:
  static SimplicialComplex assemble(std::size_t vertex_count,
                                    std::vector<std::vector<Vertex>> flat_by_dim);

  // cells_[d] holds count(d) sorted (d+1)-tuples back to back.
  std::vector<std::vector<Vertex>> cells_;
  std::vector<std::size_t> counts_;
  std::vector<SimplexId> offsets_;
  std::size_t total_ = 0;
  std::vector<Point> coordinates_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr share(SimplicialComplex complex) {
  return std::make_shared<const SimplicialComplex>(std::move(complex));
}

/// Vertex map K -> L carrying every simplex onto a simplex of L.
/// Dimension-collapsing maps are allowed.
class SimplicialMap {
 public:
  /// Throws NotSimplicial naming the first (canonical order) simplex whose
  /// image is missing from the codomain.
  static SimplicialMap check(ComplexPtr domain, ComplexPtr codomain,
                             std::vector<Vertex> vertex_images);

  const SimplicialComplex& domain() const { return *domain_; }
  const SimplicialComplex& codomain() const { return *codomain_; }
  const ComplexPtr& domain_ptr() const { return domain_; }
  const ComplexPtr& codomain_ptr() const { return codomain_; }

  Vertex operator()(Vertex v) const { return images_[v]; }
  const std::vector<Vertex>& vertex_images() const { return images_; }
  /// Codomain simplex id of f(sigma) for a domain simplex id.
  SimplexId image_of(SimplexId sigma) const { return simplex_images_[sigma]; }

 private:
  ComplexPtr domain_;
  ComplexPtr codomain_;
  std::vector<Vertex> images_;
  std::vector<SimplexId> simplex_images_;
};

/// Real-valued PL function given by exact values on the vertices.
class PLFunction {
 public:
  PLFunction(ComplexPtr complex, std::vector<Rational> values);

  const SimplicialComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator()(Vertex v) const { return values_[v]; }

 private:
  ComplexPtr complex_;
  std::vector<Rational> values_;
};

/// Classes of an equivalence on simplex ids. Classes are sorted internally
/// and ordered by their smallest member.
struct Partition {
  std::vector<std::vector<SimplexId>> classes;

  std::size_t size() const { return classes.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Components of `subset` under the equivalence generated by "one is a face
/// of the other, both in subset".
Partition connected_components(const SimplicialComplex& complex,
                               std::span<const SimplexId> subset);

/// Components of the whole complex, as vertex classes.
Partition vertex_components(const SimplicialComplex& complex);

struct Subdivision {
  ComplexPtr complex;
  /// carrier[v] is the simplex of the original complex behind sd-vertex v.
  std::vector<SimplexId> carrier;
};

/// Vertices of sd(K) are the simplices of K (sd-vertex i is K-simplex i);
/// simplices are chains under the face relation.
Subdivision barycentric_subdivision(const SimplicialComplex& complex);

/// Full subcomplex spanned by `vertices`, relabeled densely in increasing
/// order of original id.
SimplicialComplex full_subcomplex(const SimplicialComplex& complex,
                                  std::span<const Vertex> vertices);

/// Staircase triangulation of |K1| x |K2| using vertex id order on both
/// factors. Product vertex (u, v) has id u * |V(K2)| + v.
SimplicialComplex staircase_product(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Product map f1 x f2 on staircase products. Each factor must be monotone
/// (vertex id order on domain and codomain) along every simplex; otherwise
/// NonMonotoneMap is thrown. Apply monotone_relabel first when needed.
SimplicialMap staircase_product(const SimplicialMap& f1, const SimplicialMap& f2);

/// Relabels domain vertices by (f(v), v) so that f becomes monotone.
/// relabel_out, when given, receives old id -> new id.
SimplicialMap monotone_relabel(const SimplicialMap& f,
                               std::vector<Vertex>* relabel_out = nullptr);

bool is_monotone(const SimplicialMap& f);

/// Disjoint union; vertices of `b` are shifted by |V(a)|.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace reebforge
