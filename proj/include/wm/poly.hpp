#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace wm {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial variables. The numeric value is the slot in an Exponent.
enum class Var : std::uint8_t { q = 0, t = 1, s = 2 };

inline constexpr std::array<Var, 3> kAllVars{Var::q, Var::t, Var::s};

inline char var_name(Var v) {
  switch (v) {
    case Var::q: return 'q';
    case Var::t: return 't';
    case Var::s: return 's';
  }
  return '?';
}

inline Var var_from_name(char c) {
  switch (c) {
    case 'q': return Var::q;
    case 't': return Var::t;
    case 's': return Var::s;
    default: throw std::invalid_argument(std::string("unknown variable '") + c + "'");
  }
}

/// (eq, et, es). std::array compares lexicographically, which is the term order.
using Exponent = std::array<std::uint32_t, 3>;

inline constexpr std::size_t slot(Var v) { return static_cast<std::size_t>(v); }

/// Exact polynomial in q, t, s with integer coefficients.
///
/// Terms live in an ordered map keyed by exponent, so iteration is always in
/// lexicographic (eq, et, es) order and two equal polynomials have identical
/// term sequences. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, BigInt>;

  MultiPoly() = default;

  static MultiPoly constant(const BigInt& c) { return monomial(c, {0, 0, 0}); }

  static MultiPoly monomial(const BigInt& c, const Exponent& e) {
    MultiPoly p;
    p.add_term(e, c);
    return p;
  }

  static MultiPoly variable(Var v, std::uint32_t power = 1) {
    Exponent e{0, 0, 0};
    e[slot(v)] = power;
    return monomial(1, e);
  }

  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  template <class Range>
  static MultiPoly from_terms(const Range& terms) {
    MultiPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, BigInt(c));
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BigInt coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Maximal exponent of v; 0 for the zero polynomial.
  std::uint32_t degree(Var v) const {
    std::uint32_t m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[slot(v)]);
    return m;
  }

  bool involves(Var v) const { return degree(v) > 0; }

  /// Sum of all coefficients, i.e. the value at q = t = s = 1.
  BigInt coefficient_sum() const {
    BigInt acc = 0;
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  MultiPoly& operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(unsigned n) const {
    MultiPoly result = constant(1);
    MultiPoly base = *this;
    while (n > 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n > 0) base *= base;
    }
    return result;
  }

  /// Multiplies by the monomial q^eq t^et s^es.
  MultiPoly shifted(const Exponent& by) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Exponent{e[0] + by[0], e[1] + by[1], e[2] + by[2]}, c);
    return r;
  }

  /// Terms whose exponent satisfies pred.
  template <class Pred>
  MultiPoly filtered(Pred pred) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      if (pred(e)) r.terms_.emplace_hint(r.terms_.end(), e, c);
    }
    return r;
  }

  void add_term(const Exponent& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  TermMap terms_;
};

inline MultiPoly q_pow(std::uint32_t n) { return MultiPoly::variable(Var::q, n); }
inline MultiPoly t_pow(std::uint32_t n) { return MultiPoly::variable(Var::t, n); }
inline MultiPoly s_pow(std::uint32_t n) { return MultiPoly::variable(Var::s, n); }
inline MultiPoly one() { return MultiPoly::constant(1); }

enum class ArithOp { add, sub, mul };

inline MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw std::invalid_argument("poly_arith: unknown op");
}

/// Value substituted for a variable: an integer constant or another variable.
using SubstValue = std::variant<BigInt, Var>;

/// Partial map {q, t, s} -> integer | variable. Unset variables stay as they are.
/// Substitutions are simultaneous, so {q -> t, t -> q} swaps.
class Assignment {
 public:
  Assignment& set(Var v, SubstValue value) {
    map_[slot(v)] = std::move(value);
    return *this;
  }
  Assignment& set(Var v, long long value) { return set(v, SubstValue{BigInt(value)}); }
  Assignment& set(Var v, Var other) { return set(v, SubstValue{other}); }

  const std::optional<SubstValue>& get(Var v) const { return map_[slot(v)]; }

 private:
  std::array<std::optional<SubstValue>, 3> map_;
};

inline MultiPoly specialize(const MultiPoly& p, const Assignment& assignment) {
  MultiPoly r;
  for (const auto& [e, c] : p.terms()) {
    BigInt coeff = c;
    Exponent out{0, 0, 0};
    for (Var v : kAllVars) {
      const std::uint32_t k = e[slot(v)];
      const auto& sub = assignment.get(v);
      if (!sub) {
        out[slot(v)] += k;
      } else if (const auto* target = std::get_if<Var>(&*sub)) {
        out[slot(*target)] += k;
      } else if (k > 0) {
        coeff *= boost::multiprecision::pow(std::get<BigInt>(*sub), k);
      }
    }
    r.add_term(out, coeff);
  }
  return r;
}

inline MultiPoly evaluate(const MultiPoly& p, Var v, const BigInt& value) {
  return specialize(p, Assignment{}.set(v, SubstValue{value}));
}

inline MultiPoly swap_vars(const MultiPoly& p, Var a, Var b) {
  return specialize(p, Assignment{}.set(a, b).set(b, a));
}

/// q^dq t^dt p(1/q, 1/t). Rejects degrees that would go negative.
inline MultiPoly reciprocal_conjugate(const MultiPoly& p, std::uint32_t dq, std::uint32_t dt) {
  if (p.degree(Var::q) > dq || p.degree(Var::t) > dt) {
    throw std::domain_error("reciprocal_conjugate: degree bound below polynomial degree");
  }
  MultiPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term({dq - e[0], dt - e[1], e[2]}, c);
  return r;
}

namespace detail {

inline std::optional<Var> sole_variable(const MultiPoly& p) {
  std::optional<Var> found;
  for (Var v : kAllVars) {
    if (!p.involves(v)) continue;
    if (found) return std::nullopt;
    found = v;
  }
  return found;
}

}  // namespace detail

/// Exact quotient num / den where den involves at most one variable.
/// Throws std::domain_error when the division leaves a remainder.
inline MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::domain_error("divide_exact: division by zero");
  const bool multivariate = [&] {
    int n = 0;
    for (Var v : kAllVars) n += den.involves(v) ? 1 : 0;
    return n > 1;
  }();
  if (multivariate) throw std::invalid_argument("divide_exact: divisor must be univariate");

  const Var x = detail::sole_variable(den).value_or(Var::q);
  const std::size_t xs = slot(x);
  const std::uint32_t ddeg = den.degree(x);
  const BigInt lead = den.coeff([&] {
    Exponent e{0, 0, 0};
    e[xs] = ddeg;
    return e;
  }());

  MultiPoly rem = num;
  MultiPoly quot;
  while (!rem.is_zero() && rem.degree(x) >= ddeg) {
    const std::uint32_t rdeg = rem.degree(x);
    MultiPoly step;
    for (const auto& [e, c] : rem.terms()) {
      if (e[xs] != rdeg) continue;
      BigInt qc;
      BigInt rc;
      boost::multiprecision::divide_qr(c, lead, qc, rc);
      if (rc != 0) throw std::domain_error("divide_exact: non-integral quotient coefficient");
      Exponent qe = e;
      qe[xs] -= ddeg;
      step.add_term(qe, qc);
    }
    quot += step;
    rem -= step * den;
  }
  if (!rem.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
  return quot;
}

}  // namespace wm
