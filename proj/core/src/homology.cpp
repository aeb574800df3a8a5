#include "reebforge/homology.hpp"

#include <algorithm>
#include <numeric>

#include "reebforge/rational.hpp"

namespace reebforge {

std::int64_t SparseMatrix::at(std::size_t row, std::size_t col) const {
  const auto& c = columns[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.first < r; });
  return (it != c.end() && it->first == row) ? it->second : 0;
}

namespace {

struct Overflow {};

// Scalar policies for the elimination kernel.
struct CheckedInt {
  using T = std::int64_t;
  static T from(std::int64_t v) { return v; }
  static bool is_zero(const T& v) { return v == 0; }
  static T mul_sub(const T& a, const T& x, const T& b, const T& y) {
    T p, q, r;
    if (__builtin_mul_overflow(a, x, &p) || __builtin_mul_overflow(b, y, &q) ||
        __builtin_sub_overflow(p, q, &r)) {
      throw Overflow{};
    }
    return r;
  }
  static T mul(const T& a, const T& x) {
    T p;
    if (__builtin_mul_overflow(a, x, &p)) throw Overflow{};
    return p;
  }
  static T neg(const T& a) {
    T r;
    if (__builtin_sub_overflow(T{0}, a, &r)) throw Overflow{};
    return r;
  }
  static T gcd(const T& a, const T& b) { return std::gcd(a, b); }
  static T div(const T& a, const T& g) { return a / g; }
  static bool is_unit(const T& g) { return g == 1 || g == -1; }
};

struct GmpInt {
  using T = BigInt;
  static T from(std::int64_t v) { return T(static_cast<long>(v)); }
  static bool is_zero(const T& v) { return sgn(v) == 0; }
  static T mul_sub(const T& a, const T& x, const T& b, const T& y) { return a * x - b * y; }
  static T mul(const T& a, const T& x) { return a * x; }
  static T neg(const T& a) { return -a; }
  static T gcd(const T& a, const T& b) {
    T g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static T div(const T& a, const T& g) {
    T q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return q;
  }
  static bool is_unit(const T& g) { return abs(g) == 1; }
};

template <class Policy>
std::size_t reduce(const SparseMatrix& m, const std::vector<char>* skip,
                   std::vector<std::int64_t>* pivot_rows) {
  using T = typename Policy::T;
  using Column = std::vector<std::pair<std::uint32_t, T>>;

  std::vector<Column> reduced(m.cols());
  // pivot_of[row] = index of the reduced column whose lowest entry is `row`.
  std::vector<std::int64_t> pivot_of(m.rows, -1);
  std::size_t r = 0;
  Column work, merged;

  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (pivot_rows) (*pivot_rows)[j] = -1;
    if (skip && (*skip)[j]) continue;
    work.clear();
    for (const auto& [row, v] : m.columns[j]) {
      if (v != 0) work.emplace_back(row, Policy::from(v));
    }
    while (!work.empty()) {
      const std::uint32_t low = work.back().first;
      const std::int64_t p = pivot_of[low];
      if (p < 0) break;
      const Column& pivot = reduced[static_cast<std::size_t>(p)];
      const T a = pivot.back().second;
      const T b = work.back().second;
      // work <- a*work - b*pivot; the entry at `low` cancels.
      merged.clear();
      std::size_t x = 0, y = 0;
      while (x < work.size() || y < pivot.size()) {
        if (y == pivot.size() || (x < work.size() && work[x].first < pivot[y].first)) {
          merged.emplace_back(work[x].first, Policy::mul(a, work[x].second));
          ++x;
        } else if (x == work.size() || pivot[y].first < work[x].first) {
          merged.emplace_back(pivot[y].first, Policy::neg(Policy::mul(b, pivot[y].second)));
          ++y;
        } else {
          T v = Policy::mul_sub(a, work[x].second, b, pivot[y].second);
          if (!Policy::is_zero(v)) merged.emplace_back(work[x].first, std::move(v));
          ++x;
          ++y;
        }
      }
      // Divide out the content to keep entries small.
      if (!merged.empty()) {
        T g = Policy::from(0);
        for (const auto& e : merged) {
          g = Policy::gcd(g, e.second);
          if (Policy::is_unit(g)) break;
        }
        if (!Policy::is_unit(g)) {
          for (auto& e : merged) e.second = Policy::div(e.second, g);
        }
      }
      std::swap(work, merged);
    }
    if (!work.empty()) {
      pivot_of[work.back().first] = static_cast<std::int64_t>(j);
      if (pivot_rows) (*pivot_rows)[j] = work.back().first;
      reduced[j] = work;
      ++r;
    }
  }
  return r;
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const std::vector<char>* skip,
                 std::vector<std::int64_t>* pivot_rows) {
  if (pivot_rows) pivot_rows->assign(m.cols(), -1);
  try {
    return reduce<CheckedInt>(m, skip, pivot_rows);
  } catch (const Overflow&) {
    return reduce<GmpInt>(m, skip, pivot_rows);
  }
}

bool ChainComplexQ::squares_to_zero() const {
  for (std::size_t d = 2; d < boundary.size(); ++d) {
    const SparseMatrix& outer = boundary[d - 1];
    for (const auto& col : boundary[d].columns) {
      std::vector<std::pair<std::uint32_t, BigInt>> acc;
      for (const auto& [mid, coeff] : col) {
        for (const auto& [row, c2] : outer.columns[mid]) {
          acc.emplace_back(row, BigInt(static_cast<long>(coeff)) * static_cast<long>(c2));
        }
      }
      std::sort(acc.begin(), acc.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 0; i < acc.size();) {
        BigInt sum = 0;
        std::size_t k = i;
        for (; k < acc.size() && acc[k].first == acc[i].first; ++k) sum += acc[k].second;
        if (sum != 0) return false;
        i = k;
      }
    }
  }
  return true;
}

std::size_t BettiVector::total() const { return std::accumulate(b.begin(), b.end(), std::size_t{0}); }

std::int64_t BettiVector::euler() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(b[i]);
  }
  return chi;
}

BettiVector make_betti(std::vector<std::size_t> b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return BettiVector{std::move(b)};
}

ChainComplexQ chain_complex(const SimplicialComplex& complex) {
  ChainComplexQ cc;
  const int top = complex.dimension();
  if (top < 0) return cc;
  cc.basis.resize(static_cast<std::size_t>(top) + 1);
  cc.boundary.resize(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    auto& basis = cc.basis[static_cast<std::size_t>(d)];
    const SimplexId first = complex.first_id(d);
    basis.resize(complex.count(d));
    std::iota(basis.begin(), basis.end(), first);

    SparseMatrix& m = cc.boundary[static_cast<std::size_t>(d)];
    m.rows = d == 0 ? 0 : complex.count(d - 1);
    m.columns.resize(basis.size());
    if (d == 0) continue;
    const SimplexId row_base = complex.first_id(d - 1);
    Simplex face;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto s = complex.simplex(basis[j]);
      auto& col = m.columns[j];
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        face.clear();
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != skip) face.push_back(s[i]);
        }
        const SimplexId f = *complex.find(face);
        col.emplace_back(f - row_base, skip % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
  }
  return cc;
}

BettiVector betti(const ChainComplexQ& chains) {
  const int top = chains.top_dim();
  if (top < 0) return {};
  const auto dims = static_cast<std::size_t>(top) + 1;
  std::vector<std::size_t> ranks(dims + 1, 0);  // ranks[d] = rank of boundary[d]
  // Twist: a row that is a pivot of the reduced boundary[d+1] marks a column
  // of boundary[d] that would reduce to zero.
  std::vector<char> cleared;
  for (std::size_t d = dims; d-- > 1;) {
    std::vector<std::int64_t> pivots;
    const std::vector<char>* skip = cleared.empty() ? nullptr : &cleared;
    ranks[d] = rank(chains.boundary[d], skip, &pivots);
    cleared.assign(chains.boundary[d].rows, 0);
    for (std::int64_t row : pivots) {
      if (row >= 0) cleared[static_cast<std::size_t>(row)] = 1;
    }
  }
  std::vector<std::size_t> b(dims, 0);
  for (std::size_t d = 0; d < dims; ++d) {
    b[d] = chains.basis[d].size() - ranks[d] - ranks[d + 1];
  }
  return make_betti(std::move(b));
}

BettiVector betti(const SimplicialComplex& complex) { return betti(chain_complex(complex)); }

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
  std::int64_t chi = 0;
  for (int d = 0; d <= complex.dimension(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(complex.count(d));
  }
  return chi;
}

BettiVector operator+(const BettiVector& a, const BettiVector& b) {
  std::vector<std::size_t> out(std::max(a.b.size(), b.b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return make_betti(std::move(out));
}

BettiVector convolve(const BettiVector& a, const BettiVector& b) {
  if (a.b.empty() || b.b.empty()) return {};
  std::vector<std::size_t> out(a.b.size() + b.b.size() - 1, 0);
  for (std::size_t i = 0; i < a.b.size(); ++i) {
    for (std::size_t j = 0; j < b.b.size(); ++j) out[i + j] += a.b[i] * b.b[j];
  }
  return make_betti(std::move(out));
}

}  // namespace reebforge
