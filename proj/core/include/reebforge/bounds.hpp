#pragma once

#include <cstdint>
#include <vector>

#include "reebforge/rational.hpp"

namespace reebforge {

/// Binomial coefficient with C(a, b) = 0 for b > a.
BigInt binomial(std::uint64_t a, std::uint64_t b);

/// Betti-number bound for a closed semi-algebraic set in R^k defined by s
/// polynomials of degree at most d:
///   sum_{i=0}^{k} sum_{j=0}^{k-i} C(s+1, j) 6^j d (2d-1)^{k-1}
/// All bound evaluators throw InvalidParams unless every argument is >= 1.
BigInt bound_closed(std::uint64_t s, std::uint64_t d, std::uint64_t k);

/// Same sum for arbitrary semi-algebraic sets, with C(2ks+1, j).
BigInt bound_general(std::uint64_t s, std::uint64_t d, std::uint64_t k);

/// Components over all realizable sign conditions:
///   sum_{j=1}^{k} C(s, j) 4^j d (2d-1)^{k-1}
BigInt bound_sign_components(std::uint64_t s, std::uint64_t d, std::uint64_t k);

/// (s d)^((n+m)^c). The exponent constant c is the caller's choice.
BigInt bound_reeb(std::uint64_t s, std::uint64_t d, std::uint64_t n, std::uint64_t m,
                  std::uint64_t c);

/// Dense univariate polynomial, coefficients from degree 0 upwards.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);

  /// Parses text such as "X^2-1", "3*X - 2", "-x^3 + x". Throws ParseError.
  static Polynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coefficients() const { return c_; }
  const BigInt& leading() const { return c_.back(); }

  Polynomial derivative() const;
  int sign_at(const Rational& x) const;
  /// Sign as x -> +inf (sign_at_neg_infinity handles x -> -inf).
  int sign_at_infinity() const;
  int sign_at_neg_infinity() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Squarefree part p / gcd(p, p'), primitive with positive leading coefficient.
Polynomial squarefree_part(const Polynomial& p);

/// Number of distinct real roots, by a Sturm sequence over Q.
std::size_t count_real_roots(const Polynomial& p);

/// Connected components over all realizable sign conditions of a family of
/// nonzero univariate polynomials: 2r + 1 where r is the number of distinct
/// real roots of the product. Throws ZeroPolynomial.
std::size_t univariate_sign_components(const std::vector<Polynomial>& polys);

}  // namespace reebforge
