#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wm/poly.hpp"

namespace wm {

/// Power series in t truncated after t^bound. Coefficients are polynomials in
/// q and s only; nothing above the bound is ever computed.
class TruncSeries {
 public:
  explicit TruncSeries(std::uint32_t bound) : bound_(bound), coeffs_(bound + 1) {}

  static TruncSeries from_poly(const MultiPoly& p, std::uint32_t bound) {
    TruncSeries r(bound);
    for (const auto& [e, c] : p.terms()) {
      if (e[slot(Var::t)] <= bound) r.coeffs_[e[slot(Var::t)]].add_term({e[0], 0, e[2]}, c);
    }
    return r;
  }

  /// 1 + x t^j + x^2 t^{2j} + ... with x = s when with_s, else 1.
  static TruncSeries geometric_factor(std::uint32_t j, bool with_s, std::uint32_t bound) {
    if (j == 0) throw std::invalid_argument("geometric_factor: j must be positive");
    TruncSeries r(bound);
    for (std::uint32_t k = 0; k * j <= bound; ++k) {
      r.coeffs_[k * j] = with_s ? s_pow(k) : one();
    }
    return r;
  }

  /// prod_{j=1}^{d} 1/(1 - x t^j), truncated.
  static TruncSeries partition_product(std::uint32_t d, bool with_s, std::uint32_t bound) {
    TruncSeries r = from_poly(one(), bound);
    for (std::uint32_t j = 1; j <= d; ++j) r = r * geometric_factor(j, with_s, bound);
    return r;
  }

  std::uint32_t bound() const noexcept { return bound_; }

  const MultiPoly& coeff(std::uint32_t k) const { return coeffs_.at(k); }

  MultiPoly to_poly() const {
    MultiPoly r;
    for (std::uint32_t k = 0; k <= bound_; ++k) r += coeffs_[k].shifted({0, k, 0});
    return r;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check_bound(o);
    for (std::uint32_t k = 0; k <= bound_; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& o) {
    check_bound(o);
    for (std::uint32_t k = 0; k <= bound_; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_bound(b);
    TruncSeries r(a.bound_);
    for (std::uint32_t i = 0; i <= a.bound_; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::uint32_t j = 0; i + j <= a.bound_; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  /// Multiplies every coefficient by a polynomial free of t.
  TruncSeries scaled(const MultiPoly& c) const {
    if (c.involves(Var::t)) throw std::invalid_argument("TruncSeries::scaled: factor must not involve t");
    TruncSeries r(bound_);
    for (std::uint32_t k = 0; k <= bound_; ++k) r.coeffs_[k] = coeffs_[k] * c;
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.bound_ == b.bound_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_bound(const TruncSeries& o) const {
    if (o.bound_ != bound_) throw std::invalid_argument("TruncSeries: bound mismatch");
  }

  std::uint32_t bound_;
  std::vector<MultiPoly> coeffs_;
};

enum class SeriesOp { add, mul };

inline TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b, SeriesOp op) {
  return op == SeriesOp::add ? a + b : a * b;
}

inline TruncSeries series_from_poly(const MultiPoly& p, std::uint32_t bound) {
  return TruncSeries::from_poly(p, bound);
}

inline TruncSeries series_geometric_factor(std::uint32_t j, bool with_s, std::uint32_t bound) {
  return TruncSeries::geometric_factor(j, with_s, bound);
}

inline constexpr std::uint32_t kDefaultTruncation = 12;

}  // namespace wm
