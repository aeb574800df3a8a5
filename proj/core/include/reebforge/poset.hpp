#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "reebforge/complex.hpp"

namespace reebforge {

/// Finite poset on elements 0..n-1, stored as its transitive reduction.
class Poset {
 public:
  using Relation = std::pair<std::size_t, std::size_t>;  // (lower, higher)

  Poset() = default;

  /// Accepts any irreflexive acyclic set of strict relations and keeps only
  /// the covers. Throws InvalidParams on loops or cycles.
  Poset(std::size_t size, std::vector<Relation> relations);

  std::size_t size() const { return below_.size(); }
  const std::vector<Relation>& covers() const { return covers_; }

  /// Elements strictly below x, sorted.
  const std::vector<std::size_t>& strictly_below(std::size_t x) const { return below_[x]; }
  bool less(std::size_t a, std::size_t b) const;

  /// Simplicial complex of all nonempty chains; vertex i is element i.
  SimplicialComplex order_complex() const;

 private:
  std::vector<Relation> covers_;
  std::vector<std::vector<std::size_t>> below_;
};

}  // namespace reebforge
