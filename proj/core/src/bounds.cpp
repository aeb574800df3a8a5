#include "reebforge/bounds.hpp"

#include "reebforge/error.hpp"

namespace reebforge {

namespace {

void require_positive(std::initializer_list<std::uint64_t> values) {
  for (std::uint64_t v : values) {
    if (v == 0) throw Error(ErrorKind::InvalidParams, "bound parameters must be positive");
  }
}

BigInt power(std::uint64_t base, std::uint64_t exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

// sum_{i=0}^{k} sum_{j=0}^{k-i} C(top, j) 6^j d (2d-1)^{k-1}
BigInt double_sum(std::uint64_t top, std::uint64_t d, std::uint64_t k) {
  const BigInt tail = BigInt(static_cast<unsigned long>(d)) * power(2 * d - 1, k - 1);
  BigInt sum = 0;
  for (std::uint64_t i = 0; i <= k; ++i) {
    for (std::uint64_t j = 0; j <= k - i; ++j) sum += binomial(top, j) * power(6, j) * tail;
  }
  return sum;
}

}  // namespace

BigInt binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), a, b);
  return out;
}

BigInt bound_closed(std::uint64_t s, std::uint64_t d, std::uint64_t k) {
  require_positive({s, d, k});
  return double_sum(s + 1, d, k);
}

BigInt bound_general(std::uint64_t s, std::uint64_t d, std::uint64_t k) {
  require_positive({s, d, k});
  return double_sum(2 * k * s + 1, d, k);
}

BigInt bound_sign_components(std::uint64_t s, std::uint64_t d, std::uint64_t k) {
  require_positive({s, d, k});
  const BigInt tail = BigInt(static_cast<unsigned long>(d)) * power(2 * d - 1, k - 1);
  BigInt sum = 0;
  for (std::uint64_t j = 1; j <= k; ++j) sum += binomial(s, j) * power(4, j) * tail;
  return sum;
}

BigInt bound_reeb(std::uint64_t s, std::uint64_t d, std::uint64_t n, std::uint64_t m,
                  std::uint64_t c) {
  require_positive({s, d, n, m, c});
  const BigInt exponent = power(n + m, c);
  if (s * d == 1) return 1;
  if (!exponent.fits_ulong_p()) {
    throw Error(ErrorKind::InvalidParams, "exponent (n+m)^c does not fit in 64 bits");
  }
  return power(s * d, exponent.get_ui());
}

}  // namespace reebforge
