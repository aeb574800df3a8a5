#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "reebforge/complex.hpp"
#include "reebforge/rational.hpp"

namespace reebforge {

/// Integer matrix stored by sparse columns with strictly increasing rows.
struct SparseMatrix {
  using Entry = std::pair<std::uint32_t, std::int64_t>;

  std::size_t rows = 0;
  std::vector<std::vector<Entry>> columns;

  std::size_t cols() const { return columns.size(); }
  std::int64_t at(std::size_t row, std::size_t col) const;
};

/// Rank over Q by fraction-free column elimination. Column operations are
/// col <- a*col - b*pivot_col followed by division by the column content,
/// first in checked 64-bit arithmetic and, on overflow, in GMP integers.
/// `skip` marks columns known to be dependent on earlier ones.
std::size_t rank(const SparseMatrix& m, const std::vector<char>* skip = nullptr,
                 std::vector<std::int64_t>* pivot_rows = nullptr);

/// Oriented chain complex with rational (in practice 0/+1/-1) boundary maps.
/// boundary[d] maps C_d -> C_{d-1}; boundary[0] has zero rows.
struct ChainComplexQ {
  /// basis[d][i] is the cell (simplex id for simplicial input) behind column i.
  std::vector<std::vector<std::uint32_t>> basis;
  std::vector<SparseMatrix> boundary;

  int top_dim() const { return static_cast<int>(basis.size()) - 1; }
  Rational entry(int d, std::size_t row, std::size_t col) const {
    return Rational(static_cast<long>(boundary[d].at(row, col)));
  }
  /// Checks that boundary[d-1] * boundary[d] vanishes for every d.
  bool squares_to_zero() const;
};

struct BettiVector {
  std::vector<std::size_t> b;  // trailing zeros trimmed

  std::size_t operator[](std::size_t i) const { return i < b.size() ? b[i] : 0; }
  std::size_t total() const;
  std::int64_t euler() const;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

BettiVector make_betti(std::vector<std::size_t> b);

/// Sign convention: the face obtained by deleting the i-th vertex of the
/// sorted vertex tuple gets coefficient (-1)^i.
ChainComplexQ chain_complex(const SimplicialComplex& complex);

BettiVector betti(const ChainComplexQ& chains);
BettiVector betti(const SimplicialComplex& complex);

std::int64_t euler_characteristic(const SimplicialComplex& complex);

/// Componentwise sum (homology of a disjoint union).
BettiVector operator+(const BettiVector& a, const BettiVector& b);

/// Kunneth over Q: (a * b)_k = sum_{i+j=k} a_i b_j.
BettiVector convolve(const BettiVector& a, const BettiVector& b);

}  // namespace reebforge
