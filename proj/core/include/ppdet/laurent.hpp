#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ppdet/numeric.hpp"

namespace ppdet {

enum class MulMode {
  exact,       // products leaving the box are an error
  truncating,  // products leaving the box are dropped (series mode)
};

/// Multivariate Laurent polynomial with per-variable exponent bounds.
/// Exponent vectors live componentwise in [lo_i, hi_i]; only nonzero
/// coefficients are stored. Multiplication either errors on exponents
/// that leave the box (exact mode) or drops them (truncating mode, the
/// series regime used for constant-term extraction).
class LaurentBox {
 public:
  LaurentBox(std::vector<int> lo, std::vector<int> hi);
  /// Symmetric box [-bound, bound]^nvars.
  LaurentBox(std::size_t nvars, int bound);

  std::size_t nvars() const { return lo_.size(); }
  const std::vector<int>& lo() const { return lo_; }
  const std::vector<int>& hi() const { return hi_; }
  std::size_t term_count() const { return coef_.size(); }

  static LaurentBox one(std::vector<int> lo, std::vector<int> hi);
  /// Single term c * z^exps; exponents must lie in the box.
  static LaurentBox monomial(std::vector<int> lo, std::vector<int> hi,
                             const std::vector<int>& exps, const Rational& c);

  bool in_box(const std::vector<int>& exps) const;
  void add_term(const std::vector<int>& exps, const Rational& c);
  Rational coefficient(const std::vector<int>& exps) const;
  /// Coefficient of the all-zero exponent vector (0 if absent).
  Rational constant_term() const;

  LaurentBox add(const LaurentBox& o) const;
  LaurentBox negate() const;
  /// Copy with the given (same-arity) box; terms outside it are dropped.
  LaurentBox restricted(std::vector<int> lo, std::vector<int> hi) const;

  bool operator==(const LaurentBox& o) const;

  friend LaurentBox laurent_mul(const LaurentBox& a, const LaurentBox& b,
                                MulMode mode);

 private:
  std::uint64_t encode(const std::vector<int>& exps) const;
  std::vector<int> decode(std::uint64_t key) const;
  void require_same_box(const LaurentBox& o) const;

  std::vector<int> lo_, hi_;
  std::vector<std::uint64_t> stride_;
  std::unordered_map<std::uint64_t, Rational> coef_;
};

/// Exact or box-truncated product. Throws std::overflow_error in exact
/// mode when a product exponent leaves the box, reporting the offending
/// exponent vector.
LaurentBox laurent_mul(const LaurentBox& a, const LaurentBox& b, MulMode mode);

/// Truncated geometric series 1/(1 - z^monomial) = sum_k z^(k*monomial),
/// capped by the box. The monomial must be componentwise >= 0 and nonzero.
LaurentBox geometric_expand(std::vector<int> lo, std::vector<int> hi,
                            const std::vector<int>& monomial);

Rational constant_term(const LaurentBox& a);

}  // namespace ppdet
