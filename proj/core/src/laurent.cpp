#include "ppdet/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ppdet {

namespace {
std::string exps_to_string(const std::vector<int>& e) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
  out << ")";
  return out.str();
}
}  // namespace

LaurentBox::LaurentBox(std::vector<int> lo, std::vector<int> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size())
    throw std::invalid_argument("LaurentBox: lo/hi size mismatch");
  if (lo_.empty() || lo_.size() > 8)
    throw std::invalid_argument("LaurentBox: supports 1..8 variables");
  stride_.resize(lo_.size());
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (lo_[i] > hi_[i]) throw std::invalid_argument("LaurentBox: lo > hi");
    const std::uint64_t width = static_cast<std::uint64_t>(hi_[i] - lo_[i]) + 1;
    stride_[i] = acc;
    if (width > (1ull << 56) / acc)
      throw std::overflow_error("LaurentBox: box too large");
    acc *= width;
  }
}

LaurentBox::LaurentBox(std::size_t nvars, int bound)
    : LaurentBox(std::vector<int>(nvars, -bound), std::vector<int>(nvars, bound)) {}

LaurentBox LaurentBox::one(std::vector<int> lo, std::vector<int> hi) {
  LaurentBox r(std::move(lo), std::move(hi));
  r.add_term(std::vector<int>(r.nvars(), 0), Rational(1));
  return r;
}

LaurentBox LaurentBox::monomial(std::vector<int> lo, std::vector<int> hi,
                                const std::vector<int>& exps,
                                const Rational& c) {
  LaurentBox r(std::move(lo), std::move(hi));
  r.add_term(exps, c);
  return r;
}

bool LaurentBox::in_box(const std::vector<int>& exps) const {
  if (exps.size() != nvars()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] < lo_[i] || exps[i] > hi_[i]) return false;
  return true;
}

std::uint64_t LaurentBox::encode(const std::vector<int>& exps) const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < exps.size(); ++i)
    key += stride_[i] * static_cast<std::uint64_t>(exps[i] - lo_[i]);
  return key;
}

std::vector<int> LaurentBox::decode(std::uint64_t key) const {
  std::vector<int> exps(nvars());
  for (std::size_t i = nvars(); i-- > 0;) {
    exps[i] = lo_[i] + static_cast<int>(key / stride_[i]);
    key %= stride_[i];
  }
  return exps;
}

void LaurentBox::add_term(const std::vector<int>& exps, const Rational& c) {
  if (!in_box(exps))
    throw std::invalid_argument("LaurentBox::add_term: exponent outside box " +
                                exps_to_string(exps));
  if (c == 0) return;
  auto [it, inserted] = coef_.emplace(encode(exps), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coef_.erase(it);
  }
}

Rational LaurentBox::coefficient(const std::vector<int>& exps) const {
  if (!in_box(exps)) return Rational(0);
  auto it = coef_.find(encode(exps));
  return it == coef_.end() ? Rational(0) : it->second;
}

Rational LaurentBox::constant_term() const {
  return coefficient(std::vector<int>(nvars(), 0));
}

void LaurentBox::require_same_box(const LaurentBox& o) const {
  if (lo_ != o.lo_ || hi_ != o.hi_)
    throw std::invalid_argument("LaurentBox: incompatible boxes");
}

LaurentBox LaurentBox::restricted(std::vector<int> lo, std::vector<int> hi) const {
  LaurentBox r(std::move(lo), std::move(hi));
  if (r.nvars() != nvars())
    throw std::invalid_argument("LaurentBox::restricted: nvars mismatch");
  for (const auto& [key, c] : coef_) {
    const std::vector<int> exps = decode(key);
    if (r.in_box(exps)) r.coef_.emplace(r.encode(exps), c);
  }
  return r;
}

LaurentBox LaurentBox::add(const LaurentBox& o) const {
  require_same_box(o);
  LaurentBox r(*this);
  for (const auto& [key, c] : o.coef_) {
    auto [it, inserted] = r.coef_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.coef_.erase(it);
    }
  }
  return r;
}

LaurentBox LaurentBox::negate() const {
  LaurentBox r(*this);
  for (auto& [key, c] : r.coef_) c = -c;
  return r;
}

bool LaurentBox::operator==(const LaurentBox& o) const {
  return lo_ == o.lo_ && hi_ == o.hi_ && coef_ == o.coef_;
}

LaurentBox laurent_mul(const LaurentBox& a, const LaurentBox& b, MulMode mode) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("laurent_mul: nvars mismatch");
  // compatible boxes: the product lives in the componentwise intersection
  std::vector<int> rlo(a.lo_), rhi(a.hi_);
  for (std::size_t i = 0; i < rlo.size(); ++i) {
    rlo[i] = std::max(a.lo_[i], b.lo_[i]);
    rhi[i] = std::min(a.hi_[i], b.hi_[i]);
    if (rlo[i] > rhi[i])
      throw std::invalid_argument("laurent_mul: empty box intersection");
  }
  LaurentBox r(std::move(rlo), std::move(rhi));
  const std::size_t nv = a.nvars();
  std::vector<int> ea(nv), sum(nv);
  for (const auto& [ka, ca] : a.coef_) {
    ea = a.decode(ka);
    for (const auto& [kb, cb] : b.coef_) {
      const std::vector<int> eb = b.decode(kb);
      bool inside = true;
      for (std::size_t i = 0; i < nv; ++i) {
        sum[i] = ea[i] + eb[i];
        if (sum[i] < r.lo_[i] || sum[i] > r.hi_[i]) inside = false;
      }
      if (!inside) {
        if (mode == MulMode::exact)
          throw std::overflow_error(
              "laurent_mul: exact-mode overflow at exponent " +
              exps_to_string(sum));
        continue;
      }
      auto [it, inserted] = r.coef_.emplace(r.encode(sum), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.coef_.erase(it);
      }
    }
  }
  return r;
}

LaurentBox geometric_expand(std::vector<int> lo, std::vector<int> hi,
                            const std::vector<int>& monomial) {
  bool all_zero = true;
  for (int e : monomial) {
    if (e < 0)
      throw std::invalid_argument("geometric_expand: negative exponent");
    if (e != 0) all_zero = false;
  }
  if (all_zero) throw std::invalid_argument("geometric_expand: zero monomial");
  LaurentBox r(std::move(lo), std::move(hi));
  std::vector<int> exps(r.nvars(), 0);
  for (;;) {
    r.add_term(exps, Rational(1));
    bool inside = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      exps[i] += monomial[i];
      if (exps[i] > r.hi()[i]) inside = false;
    }
    if (!inside) break;
  }
  return r;
}

Rational constant_term(const LaurentBox& a) { return a.constant_term(); }

}  // namespace ppdet
