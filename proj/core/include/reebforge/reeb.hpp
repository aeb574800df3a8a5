#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reebforge/complex.hpp"
#include "reebforge/homology.hpp"
#include "reebforge/poset.hpp"

namespace reebforge {

/// One cell of the Reeb space: a codomain simplex tau together with one
/// connected component of S_tau = { sigma in K : tau is a face of f(sigma) }.
/// Over the interior of tau, such a component is exactly one component of
/// the point fiber.
struct Stratum {
  SimplexId tau = 0;
  std::uint32_t component = 0;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct ReebOptions {
  /// Building sd(K) dominates the cost for large products; turn it off
  /// when only the realization is needed.
  bool build_quotient_map = true;
};

/// Reeb space of a simplicial map, realized as the order complex of the
/// stratum poset. Strata are ordered by (tau, component) and component
/// classes by their smallest simplex id, so the output is canonical.
struct ReebComplex {
  std::vector<Stratum> strata;
  Poset poset;
  ComplexPtr realization;
  /// sd(K) -> realization; sd-vertex sigma goes to (f(sigma), its component).
  std::optional<SimplicialMap> quotient_map;
  /// Codomain simplex behind each stratum (the projection Reeb(f) -> L).
  std::vector<SimplexId> codomain_projection;
  /// Stratum of each domain simplex sigma: (f(sigma), its component).
  std::vector<std::uint32_t> simplex_stratum;

  std::size_t stratum_index(SimplexId tau, std::uint32_t component) const;

  // Offsets into `strata` per codomain simplex.
  std::vector<std::size_t> first_stratum;
};

ReebComplex reeb_space(const SimplicialMap& f, const ReebOptions& options = {});

/// Components of S_tau for the codomain simplex with the given vertices.
/// Throws UnknownSimplex when tau is not a simplex of the codomain.
Partition fiber_components_at(const SimplicialMap& f, std::span<const Vertex> tau);
Partition fiber_components_at(const SimplicialMap& f, SimplexId tau);

/// Independent stratum check: for every codomain vertex w, compares the
/// components of S_{w} with the components of the full subcomplex of K on
/// f^{-1}(w). Returns the vertices where they disagree (empty = consistent).
std::vector<Vertex> vertex_strata_mismatches(const SimplicialMap& f);

struct QuotientReport {
  bool commutes = false;          // projection o quotient == f on sd-vertices
  bool fibers_connected = false;  // Reeb space of the quotient map is trivial
  bool surjective = false;        // every stratum is hit
  std::size_t strata = 0;
  std::vector<std::string> failures;

  bool ok() const { return commutes && fibers_connected && surjective; }
};

QuotientReport verify_quotient(const SimplicialMap& f);

struct B1Entry {
  std::size_t b1_domain = 0;
  std::size_t b1_reeb = 0;
  bool holds = false;
};

/// b1(Reeb(f)) <= b1(X), evaluated on each connected component of X.
struct B1Report {
  std::vector<B1Entry> components;
  bool holds() const;
};

B1Report b1_inequality_check(const SimplicialMap& f);

/// Restriction of f to the full subcomplex of the domain on `vertices`.
SimplicialMap restrict_to_vertices(const SimplicialMap& f, std::span<const Vertex> vertices);

}  // namespace reebforge
