#include <cctype>
#include <numeric>

#include "reebforge/bounds.hpp"
#include "reebforge/error.hpp"

namespace reebforge {

namespace {

using QPoly = std::vector<Rational>;  // coefficients from degree 0 upwards

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b (b nonzero).
QPoly remainder(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

QPoly to_q(const Polynomial& p) {
  QPoly out;
  for (const BigInt& c : p.coefficients()) out.emplace_back(c);
  return out;
}

// Scales a rational polynomial to a primitive integer one with the same sign.
Polynomial to_primitive(const QPoly& p) {
  BigInt den = 1;
  for (const Rational& c : p) den = lcm(den, c.get_den());
  std::vector<BigInt> coeffs;
  BigInt content = 0;
  for (const Rational& c : p) {
    coeffs.push_back(c.get_num() * (den / c.get_den()));
    content = gcd(content, coeffs.back());
  }
  if (content != 0) {
    for (BigInt& c : coeffs) c /= content;
  }
  return Polynomial(std::move(coeffs));
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Polynomial::Polynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Polynomial {
    throw Error(ErrorKind::ParseError,
                "polynomial \"" + std::string(text) + "\" at position " + std::to_string(pos) + ": " + why);
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  std::vector<BigInt> coeffs;
  bool first = true;
  skip_space();
  if (pos == text.size()) return fail("empty polynomial");
  while (true) {
    skip_space();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_space();
    } else if (!first) {
      return fail("expected '+' or '-'");
    }
    first = false;

    BigInt coefficient = 1;
    bool have_coefficient = false;
    const std::string digits = read_digits();
    if (!digits.empty()) {
      coefficient = BigInt(digits);
      have_coefficient = true;
      skip_space();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_space();
        if (pos == text.size() || (text[pos] != 'X' && text[pos] != 'x')) return fail("expected X after '*'");
      }
    }
    unsigned long exponent = 0;
    if (pos < text.size() && (text[pos] == 'X' || text[pos] == 'x')) {
      ++pos;
      exponent = 1;
      skip_space();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_space();
        const std::string e = read_digits();
        if (e.empty()) return fail("expected exponent");
        if (e.size() > 6) return fail("exponent too large");
        exponent = std::stoul(e);
      }
    } else if (!have_coefficient) {
      return fail("expected a term");
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
    coeffs[exponent] += sign * coefficient;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<unsigned long>(i));
  return Polynomial(std::move(out));
}

int Polynomial::sign_at(const Rational& x) const {
  Rational value = 0;
  for (std::size_t i = c_.size(); i-- > 0;) value = value * x + c_[i];
  return sgn(value);
}

int Polynomial::sign_at_infinity() const { return c_.empty() ? 0 : sgn(c_.back()); }

int Polynomial::sign_at_neg_infinity() const {
  if (c_.empty()) return 0;
  return degree() % 2 == 0 ? sgn(c_.back()) : -sgn(c_.back());
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of 0");
  QPoly a = to_q(p);
  QPoly g = a;
  QPoly h = to_q(p.derivative());
  while (!h.empty()) {
    QPoly r = remainder(g, h);
    g = std::move(h);
    h = std::move(r);
  }
  // a / g by long division
  QPoly quotient(a.size() - g.size() + 1, 0);
  while (a.size() >= g.size() && !a.empty()) {
    const Rational factor = a.back() / g.back();
    const std::size_t shift = a.size() - g.size();
    quotient[shift] = factor;
    for (std::size_t i = 0; i < g.size(); ++i) a[shift + i] -= factor * g[i];
    trim(a);
  }
  Polynomial out = to_primitive(quotient);
  if (sgn(out.leading()) < 0) {
    std::vector<BigInt> negated = out.coefficients();
    for (BigInt& c : negated) c = -c;
    out = Polynomial(std::move(negated));
  }
  return out;
}

std::size_t count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of 0");
  const Polynomial sf = squarefree_part(p);
  std::vector<Polynomial> sturm{sf, sf.derivative()};
  while (!sturm.back().is_zero()) {
    QPoly r = remainder(to_q(sturm[sturm.size() - 2]), to_q(sturm.back()));
    for (Rational& c : r) c = -c;
    trim(r);
    if (r.empty()) break;
    sturm.push_back(to_primitive(r));
  }
  std::vector<int> at_neg, at_pos;
  for (const Polynomial& q : sturm) {
    at_neg.push_back(q.sign_at_neg_infinity());
    at_pos.push_back(q.sign_at_infinity());
  }
  return static_cast<std::size_t>(sign_changes(at_neg) - sign_changes(at_pos));
}

std::size_t univariate_sign_components(const std::vector<Polynomial>& polys) {
  Polynomial product(std::vector<BigInt>{1});
  for (const Polynomial& p : polys) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "family contains the zero polynomial");
    product = product * p;
  }
  // The roots cut R into r points and r + 1 open intervals; each is exactly
  // one component of one realizable sign condition.
  return 2 * count_real_roots(product) + 1;
}

}  // namespace reebforge
