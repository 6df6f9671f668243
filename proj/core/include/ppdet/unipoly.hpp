#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ppdet/numeric.hpp"

namespace ppdet {

/// Dense univariate polynomial over Rational, index = exponent. The
/// coefficient list never ends in zeros; the zero polynomial is the empty
/// list and its degree is a distinguished marker (nullopt), never -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rational& constant);
  static UniPoly from_coeffs(std::vector<Rational> coeffs);
  static UniPoly monomial(const Rational& coeff, std::size_t exponent);

  bool is_zero() const { return c_.empty(); }
  std::optional<long> degree() const;
  /// Coefficient of x^k (zero beyond the stored range).
  const Rational& coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Exact Horner evaluation.
  Rational eval(const Rational& x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Unique polynomial of degree < #points through the given
/// (node, value) pairs, exact. Duplicate nodes are rejected.
UniPoly lagrange_interpolate(
    const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace ppdet
