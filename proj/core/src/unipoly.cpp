#include "ppdet/unipoly.hpp"

#include <sstream>

namespace ppdet {

namespace {
const Rational kZero(0);
}

UniPoly::UniPoly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

UniPoly UniPoly::from_coeffs(std::vector<Rational> coeffs) {
  UniPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

UniPoly UniPoly::monomial(const Rational& coeff, std::size_t exponent) {
  UniPoly p;
  if (coeff != 0) {
    p.c_.assign(exponent + 1, Rational(0));
    p.c_[exponent] = coeff;
  }
  return p;
}

std::optional<long> UniPoly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<long>(c_.size()) - 1;
}

const Rational& UniPoly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return from_coeffs(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& v : r) v = -v;
  return from_coeffs(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return from_coeffs(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& s) const {
  if (s == 0) return UniPoly();
  std::vector<Rational> r(c_);
  for (auto& v : r) v *= s;
  return from_coeffs(std::move(r));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& v = c_[k];
    if (v == 0) continue;
    if (!first) out << (v > 0 ? " + " : " - ");
    Rational a = (!first && v < 0) ? Rational(-v) : v;
    if (first) first = false;
    if (k == 0) {
      out << ppdet::to_string(a);
    } else {
      if (a != 1) out << ppdet::to_string(a) << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

UniPoly lagrange_interpolate(
    const std::vector<std::pair<Rational, Rational>>& points) {
  if (points.empty())
    throw std::invalid_argument("lagrange_interpolate: no points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("lagrange_interpolate: duplicate node");

  UniPoly acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UniPoly basis(Rational(1));
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly::from_coeffs({-points[j].first, Rational(1)});
      denom *= points[i].first - points[j].first;
    }
    acc = acc + basis * (points[i].second / denom);
  }
  return acc;
}

}  // namespace ppdet
