#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "reebforge/complex.hpp"
#include "reebforge/homology.hpp"

namespace reebforge {

inline constexpr std::size_t kDefaultCellCap = 200'000;

/// Nerve of the closed convex cover of the (p+1)-fold fiber power
///   W_p = { (x_0..x_p) : f(x_0) = ... = f(x_p) }
/// by the cells P(s_0..s_p) = W_p cap (s_0 x ... x s_p), s_i maximal.
///
/// Because f is simplicial, P is nonempty iff the images f(s_i) share a
/// vertex, and intersections of cover cells are again such cells (with
/// faces in place of the s_i). All of them are convex, so the nerve has the
/// homotopy type of W_p.
struct NerveComplex {
  /// cover_index[i] lists the maximal domain simplices behind nerve vertex i.
  std::vector<std::vector<SimplexId>> cover_index;
  SimplicialComplex nerve;
};

/// Throws BudgetExceeded once the nerve would exceed `cell_cap` simplices.
/// `maximal_order`, when given, must be a permutation of the maximal
/// simplices; it only changes the enumeration order. With `max_dimension`
/// only that skeleton of the nerve is built.
NerveComplex fiber_power_nerve(const SimplicialMap& f, std::size_t p,
                               std::size_t cell_cap = kDefaultCellCap,
                               std::optional<std::span<const SimplexId>> maximal_order = {},
                               std::optional<std::size_t> max_dimension = {});

/// W_p as a regular cell complex: one open cell per tuple (s_0..s_p) of
/// domain simplices with identical images tau, which is the fiber product of
/// the open simplices over the open simplex tau. Its dimension is
/// dim tau + sum_i (dim s_i - dim tau).
struct FiberPowerCells {
  std::size_t factors = 0;
  std::vector<std::vector<SimplexId>> cells;
  std::vector<int> dims;
  /// facets[c] = (facet cell, incidence +-1)
  std::vector<std::vector<std::pair<std::uint32_t, int>>> facets;

  ChainComplexQ chain_complex() const;
};

/// Throws BudgetExceeded when the number of cells would exceed `cell_cap`.
FiberPowerCells fiber_power_cells(const SimplicialMap& f, std::size_t p,
                                  std::size_t cell_cap = kDefaultCellCap);

/// Fiber power of the quotient X -> Reeb(f): the subcomplex of the cellular
/// model on tuples whose simplices all lie in one stratum (same image, same
/// component of the fiber). Avoids subdividing the domain.
FiberPowerCells reeb_fiber_power_cells(const SimplicialMap& f, std::size_t p,
                                       std::size_t cell_cap = kDefaultCellCap);

enum class FiberPowerMethod { Cellular, Nerve };

/// Dimension of the (p+1)-fold fiber power; -1 when it is empty.
int fiber_power_dimension(const SimplicialMap& f, std::size_t p);

/// The nerve route reads Betti numbers off the (D+1)-skeleton of the nerve,
/// D = fiber_power_dimension(f, p): nothing above degree D survives and
/// nothing up to D is lost.
BettiVector fiber_power_betti(const SimplicialMap& f, std::size_t p,
                              FiberPowerMethod method = FiberPowerMethod::Cellular,
                              std::size_t cell_cap = kDefaultCellCap);

// ---------------------------------------------------------------------------

enum class DescentTarget { Image, Reeb };

struct DescentOptions {
  std::size_t cell_cap = kDefaultCellCap;
  FiberPowerMethod method = FiberPowerMethod::Cellular;
  unsigned threads = 1;
  /// Target Reeb, cellular method: use the cells of the quotient map on
  /// sd(X) instead of the stratum cells of f. Same space, far more cells.
  bool reeb_on_subdivision = false;
};

struct DescentRow {
  std::size_t p = 0;
  std::size_t betti_target = 0;
  /// betti_powers[j] = b_{p-j} of the (j+1)-fold fiber power.
  std::vector<std::size_t> betti_powers;
  std::size_t bound = 0;
  bool inequality_holds = false;
};

/// b_p(F(X)) <= sum_{i+j=p} b_i(X x_F ... x_F X) with j+1 factors.
struct DescentReport {
  DescentTarget target = DescentTarget::Image;
  BettiVector target_betti;
  std::vector<BettiVector> power_betti;  // index j: (j+1)-fold fiber power
  std::vector<DescentRow> rows;

  bool holds() const;
};

/// target Image: F = f and F(X) is the subcomplex of the codomain spanned by
/// image simplices. target Reeb: F is the quotient map X -> Reeb(f); the
/// nerve method works on its simplicial form sd(X) -> Reeb(f).
DescentReport descent_check(const SimplicialMap& f, DescentTarget target, std::size_t p_max,
                            const DescentOptions& options = {});

/// Subcomplex of the codomain spanned by the images of all domain simplices.
SimplicialComplex image_complex(const SimplicialMap& f);

}  // namespace reebforge
