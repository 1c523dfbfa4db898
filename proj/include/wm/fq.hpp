#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wm/limits.hpp"
#include "wm/signed_perm.hpp"

namespace wm {

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

/// Arithmetic in F_p, elements stored as 0..p-1.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p > 65521) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a supported prime");
  }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    std::uint32_t r = 1;
    std::uint32_t base = a;
    for (std::uint32_t e = p_ - 2; e > 0; e >>= 1U) {
      if (e & 1U) r = mul(r, base);
      base = mul(base, base);
    }
    return r;
  }
  std::uint32_t from_int(long long v) const noexcept {
    const long long m = v % static_cast<long long>(p_);
    return static_cast<std::uint32_t>(m < 0 ? m + p_ : m);
  }

 private:
  std::uint32_t p_;
};

using Vec = std::vector<std::uint32_t>;

/// v -= c * w
inline void axpy_sub(const PrimeField& F, Vec& v, std::uint32_t c, const Vec& w) {
  if (c == 0) return;
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, w[j]));
}

inline void scale(const PrimeField& F, Vec& v, std::uint32_t c) {
  for (auto& x : v) x = F.mul(x, c);
}

/// Solves A x = b over F_p for square nonsingular A.
inline Vec solve_linear(const PrimeField& F, std::vector<Vec> A, Vec b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("solve_linear: singular system");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    const auto s = F.inv(A[col][col]);
    scale(F, A[col], s);
    b[col] = F.mul(b[col], s);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      const auto c = A[r][col];
      axpy_sub(F, A[r], c, A[col]);
      b[r] = F.sub(b[r], F.mul(c, b[col]));
    }
  }
  return b;
}

/// Subspace of F_p^n in reduced row-echelon form; rows are ordered by pivot
/// column, so equal subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t n = 0) : n_(n) {}

  static Subspace span(const PrimeField& F, std::size_t n, std::vector<Vec> rows) {
    for (const auto& r : rows) {
      if (r.size() != n) throw std::invalid_argument("Subspace::span: vector length mismatch");
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      scale(F, rows[rank], F.inv(rows[rank][col]));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != rank) axpy_sub(F, rows[r], rows[r][col], rows[rank]);
      }
      ++rank;
    }
    rows.resize(rank);
    Subspace s(n);
    s.rows_ = std::move(rows);
    return s;
  }

  static Subspace whole(const PrimeField& F, std::size_t n) {
    std::vector<Vec> rows(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return span(F, n, std::move(rows));
  }

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }

  std::size_t pivot(std::size_t r) const {
    const auto& row = rows_.at(r);
    for (std::size_t j = 0; j < n_; ++j) {
      if (row[j] != 0) return j;
    }
    throw std::logic_error("Subspace: zero row");
  }

  bool contains(const PrimeField& F, Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) axpy_sub(F, v, v[pivot(r)], rows_[r]);
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
  }

  bool contains(const PrimeField& F, const Subspace& o) const {
    if (o.dim() > dim()) return false;
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vec& v) { return contains(F, v); });
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  friend class SubspaceEnumerator;
  std::size_t n_;
  std::vector<Vec> rows_;
};

enum class FormKind { none, symplectic, quadratic_odd, hyperbolic };

/// F_p^n with an optional form. Coordinates are stored in <_pm order of their
/// labels: (x_1..x_d, x_{-d}..x_{-1}), with x_0 in the middle for the odd
/// quadratic space.
class FqSpace {
 public:
  static FqSpace plain(std::uint32_t p, unsigned n) { return FqSpace(p, n, FormKind::none); }
  static FqSpace symplectic(std::uint32_t p, unsigned d) { return FqSpace(p, d, FormKind::symplectic); }
  static FqSpace quadratic_odd(std::uint32_t p, unsigned d) { return FqSpace(p, d, FormKind::quadratic_odd); }
  static FqSpace hyperbolic(std::uint32_t p, unsigned d) { return FqSpace(p, d, FormKind::hyperbolic); }

  const PrimeField& field() const noexcept { return F_; }
  std::uint32_t p() const noexcept { return F_.p(); }
  FormKind form() const noexcept { return form_; }
  bool typed() const noexcept { return form_ != FormKind::none; }
  /// d: the rank of the associated Weyl group.
  unsigned rank() const noexcept { return d_; }
  unsigned dim() const noexcept {
    switch (form_) {
      case FormKind::none: return d_;
      case FormKind::symplectic:
      case FormKind::hyperbolic: return 2 * d_;
      case FormKind::quadratic_odd: return 2 * d_ + 1;
    }
    return 0;
  }
  /// Largest dimension of a flag member: n for plain spaces, d otherwise.
  unsigned max_flag_dim() const noexcept { return d_; }

  Family family() const noexcept {
    switch (form_) {
      case FormKind::none: return Family::A;
      case FormKind::symplectic:
      case FormKind::quadratic_odd: return Family::BC;
      case FormKind::hyperbolic: return Family::D;
    }
    return Family::A;
  }

  int label(std::size_t pos) const {
    const int d = static_cast<int>(d_);
    const int i = static_cast<int>(pos);
    if (pos >= dim()) throw std::out_of_range("FqSpace::label");
    if (i < d) return i + 1;
    if (form_ == FormKind::quadratic_odd) return i == d ? 0 : i - 2 * d - 1;
    return i - 2 * d;
  }

  std::size_t position(int label) const {
    const int d = static_cast<int>(d_);
    if (label > 0 && label <= d) return static_cast<std::size_t>(label - 1);
    if (typed() && label < 0 && label >= -d) {
      return static_cast<std::size_t>(label + 2 * d + (form_ == FormKind::quadratic_odd ? 1 : 0));
    }
    if (label == 0 && form_ == FormKind::quadratic_odd) return d_;
    throw std::out_of_range("FqSpace::position: no coordinate with label " + std::to_string(label));
  }

  Vec basis_vector(int label) const {
    Vec v(dim(), 0);
    v[position(label)] = 1;
    return v;
  }

  /// omega for symplectic spaces, the polar form Q(x+y)-Q(x)-Q(y) for quadratic ones.
  std::uint32_t polar(const Vec& x, const Vec& y) const {
    std::uint32_t acc = 0;
    const int d = static_cast<int>(d_);
    for (int i = 1; i <= d; ++i) {
      const auto pi = position(i);
      const auto ni = position(-i);
      const auto a = F_.mul(x[pi], y[ni]);
      const auto b = F_.mul(x[ni], y[pi]);
      acc = F_.add(acc, form_ == FormKind::symplectic ? F_.sub(a, b) : F_.add(a, b));
    }
    switch (form_) {
      case FormKind::none: throw std::logic_error("FqSpace::polar: space carries no form");
      case FormKind::quadratic_odd: {
        const auto z = position(0);
        acc = F_.add(acc, F_.mul(2 % F_.p(), F_.mul(x[z], y[z])));
        break;
      }
      default: break;
    }
    return acc;
  }

  std::uint32_t quadratic(const Vec& x) const {
    if (form_ != FormKind::quadratic_odd && form_ != FormKind::hyperbolic) {
      throw std::logic_error("FqSpace::quadratic: space carries no quadratic form");
    }
    std::uint32_t acc = 0;
    for (int i = 1; i <= static_cast<int>(d_); ++i) acc = F_.add(acc, F_.mul(x[position(i)], x[position(-i)]));
    if (form_ == FormKind::quadratic_odd) {
      const auto z = x[position(0)];
      acc = F_.add(acc, F_.mul(z, z));
    }
    return acc;
  }

  bool is_isotropic(const Subspace& V) const {
    if (!typed()) return true;
    const auto& rows = V.rows();
    for (std::size_t a = 0; a < rows.size(); ++a) {
      if (form_ != FormKind::symplectic && quadratic(rows[a]) != 0) return false;
      for (std::size_t b = a + 1; b < rows.size(); ++b) {
        if (polar(rows[a], rows[b]) != 0) return false;
      }
    }
    return true;
  }

  /// dim V - dim(V cap I) for the metabolizer I = span(b_1, ..., b_d).
  unsigned metabolizer_codim(const Subspace& V) const {
    if (!typed()) throw std::logic_error("FqSpace::metabolizer_codim: untyped space");
    std::vector<Vec> proj;
    for (const auto& r : V.rows()) {
      Vec v(r);
      for (std::size_t j = 0; j < d_; ++j) v[j] = 0;
      proj.push_back(std::move(v));
    }
    return static_cast<unsigned>(Subspace::span(F_, dim(), std::move(proj)).dim());
  }

  /// For hyperbolic spaces the I-parity must be even; other spaces accept every subspace.
  bool admissible_last_member(const Subspace& V) const {
    return form_ != FormKind::hyperbolic || metabolizer_codim(V) % 2 == 0;
  }

  std::string describe() const {
    const std::string ps = std::to_string(p());
    switch (form_) {
      case FormKind::none: return "F_" + ps + "^" + std::to_string(d_);
      case FormKind::symplectic: return "(F_" + ps + "^" + std::to_string(2 * d_) + ", omega)";
      case FormKind::quadratic_odd: return "(F_" + ps + "^" + std::to_string(2 * d_ + 1) + ", Q)";
      case FormKind::hyperbolic: return "H^" + std::to_string(d_) + " over F_" + ps;
    }
    return "?";
  }

 private:
  FqSpace(std::uint32_t p, unsigned d, FormKind form) : F_(p), d_(d), form_(form) {
    if ((form == FormKind::quadratic_odd || form == FormKind::hyperbolic) && p == 2) {
      throw std::invalid_argument("FqSpace: quadratic spaces need odd characteristic");
    }
  }

  PrimeField F_;
  unsigned d_;
  FormKind form_;
};

/// Walks all k-dimensional subspaces of F_p^n in RREF, pivot sets in
/// lexicographic order and free entries as an odometer. The Subspace passed
/// to the callback is reused between calls.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(const PrimeField& F, std::size_t n, std::size_t k) : F_(F), n_(n), k_(k) {
    if (k > n) throw std::invalid_argument("enumerate_subspaces: k exceeds dimension");
  }

  /// Number of subspaces, i.e. the q-binomial at q = p.
  std::uint64_t count() const {
    std::uint64_t total = 0;
    for_each_pivot_set([&](const std::vector<std::size_t>& piv) {
      std::uint64_t c = 1;
      for (std::size_t e = 0; e < free_count(piv); ++e) {
        if (c > (std::uint64_t{1} << 62) / F_.p()) throw CapExceeded("enumerate_subspaces: count overflows");
        c *= F_.p();
      }
      total += c;
    });
    return total;
  }

  template <class F>
  void run(F&& visit) const {
    require_within_cap(count(), "enumerate_subspaces(n=" + std::to_string(n_) + ", k=" + std::to_string(k_) + ")");
    Subspace s(n_);
    s.rows_.assign(k_, Vec(n_, 0));
    for_each_pivot_set([&](const std::vector<std::size_t>& piv) {
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      std::vector<bool> is_pivot(n_, false);
      for (auto c : piv) is_pivot[c] = true;
      for (std::size_t r = 0; r < k_; ++r) {
        std::fill(s.rows_[r].begin(), s.rows_[r].end(), 0);
        s.rows_[r][piv[r]] = 1;
        for (std::size_t j = piv[r] + 1; j < n_; ++j) {
          if (!is_pivot[j]) cells.emplace_back(r, j);
        }
      }
      while (true) {
        visit(static_cast<const Subspace&>(s));
        std::size_t c = 0;
        for (; c < cells.size(); ++c) {
          auto& x = s.rows_[cells[c].first][cells[c].second];
          if (++x < F_.p()) break;
          x = 0;
        }
        if (c == cells.size()) break;
      }
    });
  }

 private:
  std::size_t free_count(const std::vector<std::size_t>& piv) const {
    std::size_t f = 0;
    for (std::size_t r = 0; r < k_; ++r) f += (n_ - 1 - piv[r]) - (k_ - 1 - r);
    return f;
  }

  template <class G>
  void for_each_pivot_set(G&& g) const {
    std::vector<std::size_t> piv(k_);
    for (std::size_t r = 0; r < k_; ++r) piv[r] = r;
    while (true) {
      g(piv);
      std::size_t r = k_;
      while (r > 0 && piv[r - 1] == n_ - k_ + (r - 1)) --r;
      if (r == 0) return;
      ++piv[r - 1];
      for (std::size_t s = r; s < k_; ++s) piv[s] = piv[s - 1] + 1;
    }
  }

  const PrimeField& F_;
  std::size_t n_;
  std::size_t k_;
};

/// Streams the k-dimensional subspaces of the space (isotropic ones only if
/// requested) to visit(const Subspace&).
template <class F>
void enumerate_subspaces(const FqSpace& space, std::size_t k, bool isotropic_only, F&& visit) {
  SubspaceEnumerator(space.field(), space.dim(), k).run([&](const Subspace& s) {
    if (!isotropic_only || space.is_isotropic(s)) visit(s);
  });
}

inline std::vector<Subspace> collect_subspaces(const FqSpace& space, std::size_t k, bool isotropic_only) {
  std::vector<Subspace> out;
  enumerate_subspaces(space, k, isotropic_only, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

inline std::uint64_t count_subspaces(const FqSpace& space, std::size_t k, bool isotropic_only) {
  std::uint64_t n = 0;
  enumerate_subspaces(space, k, isotropic_only, [&](const Subspace&) { ++n; });
  return n;
}

}  // namespace wm
