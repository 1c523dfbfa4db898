#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wm/poly.hpp"
#include "wm/signed_perm.hpp"

namespace wm {

/// Which group polynomial to build; euler adds the factor s^beta.
struct StatisticSpec {
  Family fam;
  bool euler = false;
};

/// Gaussian binomial via binom(d,k) = binom(d-1,k-1) + q^k binom(d-1,k). Zero for k > d.
inline MultiPoly q_binomial(unsigned d, unsigned k) {
  if (k > d) return {};
  static std::map<std::pair<unsigned, unsigned>, MultiPoly> memo;
  if (k == 0 || k == d) return one();
  const auto key = std::make_pair(d, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  MultiPoly r = q_binomial(d - 1, k - 1) + q_pow(k) * q_binomial(d - 1, k);
  memo.emplace(key, r);
  return r;
}

/// prod_{j=1}^k (1 - q^{d+1-j}) / (1 - q^j), divided exactly.
inline MultiPoly q_binomial_closed(unsigned d, unsigned k) {
  if (k > d) return {};
  MultiPoly num = one();
  MultiPoly den = one();
  for (unsigned j = 1; j <= k; ++j) {
    num *= one() - q_pow(d + 1 - j);
    den *= one() - q_pow(j);
  }
  return divide_exact(num, den);
}

/// prod_{j=1}^n (1 - x^j) / (1 - x) for x in {q, t}.
inline MultiPoly q_factorial(unsigned n, Var x = Var::q) {
  MultiPoly r = one();
  for (unsigned j = 1; j <= n; ++j) r *= divide_exact(one() - MultiPoly::variable(x, j), one() - MultiPoly::variable(x));
  return r;
}

/// Sum over the group of q^length t^Wmaj (s^beta), by enumeration.
inline MultiPoly mahonian_direct(const StatisticSpec& spec, unsigned d) {
  if (d == 0) return one();
  const GroupFamily fam(spec.fam, d);
  const unsigned max_len = spec.fam == Family::A ? d * (d - 1) / 2 : d * d;
  const unsigned max_maj = d * (d + 1) / 2;
  const unsigned max_beta = d;
  const std::size_t L = max_len + 1;
  const std::size_t M = max_maj + 1;
  const std::size_t B = spec.euler ? max_beta + 1 : 1;
  std::vector<std::uint64_t> counts(L * M * B, 0);
  for_each_element(fam, [&](std::span<const int> img) {
    const unsigned l = length(img, spec.fam);
    const unsigned w = wmaj(img);
    const unsigned b = spec.euler ? descent_count(img) : 0;
    ++counts[(static_cast<std::size_t>(l) * M + w) * B + b];
  });
  MultiPoly r;
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t w = 0; w < M; ++w) {
      for (std::size_t b = 0; b < B; ++b) {
        const auto c = counts[(l * M + w) * B + b];
        if (c) {
          r.add_term({static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(b)}, c);
        }
      }
    }
  }
  return r;
}

/// Number of k-dimensional isotropic subspaces of the symplectic space of
/// dimension 2d: prod_{j=0}^{k-1} (1 - q^{2d-2j}) / (1 - q^{k-j}).
inline MultiPoly isotropic_count_bc(unsigned d, unsigned k) {
  if (k > d) throw std::invalid_argument("isotropic_subspace_count: k exceeds d");
  MultiPoly num = one();
  MultiPoly den = one();
  for (unsigned j = 0; j < k; ++j) {
    num *= one() - q_pow(2 * d - 2 * j);
    den *= one() - q_pow(k - j);
  }
  return divide_exact(num, den);
}

/// Isotropic k-subspaces V of H^d with dim V - dim(V cap I) = l:
/// q^{l(2d+l-2k-1)/2} binom(d,k)_q binom(k,l)_q.
inline MultiPoly isotropic_count_d(unsigned d, unsigned k, unsigned l) {
  if (k > d || l > k) throw std::invalid_argument("isotropic_subspace_count: need l <= k <= d");
  const long long twice = static_cast<long long>(l) * (2LL * d + l - 2LL * k - 1);
  if (twice < 0 || twice % 2 != 0) throw std::invalid_argument("isotropic_subspace_count: exponent is not a natural number");
  return q_pow(static_cast<std::uint32_t>(twice / 2)) * q_binomial(d, k) * q_binomial(k, l);
}

enum class IsoType { BC, D };

inline MultiPoly isotropic_subspace_count(IsoType type, unsigned d, unsigned k, std::optional<unsigned> l = std::nullopt) {
  if (type == IsoType::BC) {
    if (l) throw std::invalid_argument("isotropic_subspace_count: l only applies to type D");
    return isotropic_count_bc(d, k);
  }
  if (l) return isotropic_count_d(d, k, *l);
  if (k > d) throw std::invalid_argument("isotropic_subspace_count: k exceeds d");
  MultiPoly total;
  for (unsigned j = 0; j <= k; ++j) total += isotropic_count_d(d, k, j);
  return total;
}

namespace detail {

inline MultiPoly one_minus_t(unsigned j, bool with_s) {
  return one() - (with_s ? s_pow(1) * t_pow(j) : t_pow(j));
}

inline MultiPoly prod_one_minus_t(unsigned from, unsigned to, bool with_s) {
  MultiPoly r = one();
  for (unsigned j = from; j <= to; ++j) r *= one_minus_t(j, with_s);
  return r;
}

/// binom(d,k)_q sum_{l=0}^{floor(k/2)} binom(k,2l)_q q^{l(2d+2l-2k-1)}.
inline MultiPoly d_factor(unsigned d, unsigned k) {
  MultiPoly inner;
  for (unsigned l = 0; 2 * l <= k; ++l) inner += q_binomial(k, 2 * l) * q_pow(l * (2 * d + 2 * l - 2 * k - 1));
  MultiPoly r = q_binomial(d, k) * inner;
  MultiPoly even_sum;
  for (unsigned L = 0; L <= k; L += 2) even_sum += isotropic_count_d(d, k, L);
  if (r != even_sum) throw std::logic_error("type D recursion factor disagrees with the even-parity subspace count");
  return r;
}

inline MultiPoly level_factor(Family fam, unsigned d, unsigned k) {
  switch (fam) {
    case Family::A: return q_binomial(d, k);
    case Family::BC: return isotropic_count_bc(d, k);
    case Family::D: return d_factor(d, k);
  }
  return {};
}

inline const MultiPoly& type_a_recursive(unsigned d, bool euler) {
  static std::map<std::pair<unsigned, bool>, MultiPoly> memo;
  const auto key = std::make_pair(d, euler);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  MultiPoly r;
  if (d == 0) {
    r = one();
  } else if (!euler) {
    for (unsigned i = 0; i < d; ++i) r += t_pow(i) * prod_one_minus_t(i + 1, d - 1, false) * q_binomial(d, i) * type_a_recursive(i, false);
  } else {
    r = prod_one_minus_t(1, d - 1, true);
    for (unsigned k = 1; k < d; ++k) {
      r += s_pow(1) * t_pow(k) * q_binomial(d, k) * prod_one_minus_t(k + 1, d - 1, true) * type_a_recursive(k, true);
    }
  }
  return memo.emplace(key, std::move(r)).first->second;
}

}  // namespace detail

/// The recursions expressing each polynomial through the type-A ones M_k.
inline MultiPoly mahonian_recursive(const StatisticSpec& spec, unsigned d) {
  if (spec.fam == Family::A || d == 0) return detail::type_a_recursive(d, spec.euler);
  MultiPoly r;
  if (!spec.euler) {
    for (unsigned k = 0; k <= d; ++k) {
      r += t_pow(k) * detail::level_factor(spec.fam, d, k) * detail::prod_one_minus_t(k + 1, d, false) *
           detail::type_a_recursive(k, false);
    }
  } else {
    r = detail::prod_one_minus_t(1, d, true);
    for (unsigned k = 1; k <= d; ++k) {
      r += s_pow(1) * t_pow(k) * detail::level_factor(spec.fam, d, k) * detail::prod_one_minus_t(k + 1, d, true) *
           detail::type_a_recursive(k, true);
    }
  }
  return r;
}

enum class ClosedForm {
  length_factor_A,  // sum over S_d of q^inv
  A_at_q1,          // M_d(1, t)
  BC_at_t1,         // M_d^pm(q, 1)
  BC_at_q1,         // M_d^pm(1, t)
  D_at_q1,          // M_d^D(1, t), the Wmaj generating function of S_d^D
  D_at_t1,          // M_d^D(q, 1)
};

inline const std::vector<std::pair<std::string, ClosedForm>>& closed_form_names() {
  static const std::vector<std::pair<std::string, ClosedForm>> names{
      {"length_factor_A", ClosedForm::length_factor_A}, {"A_at_q1", ClosedForm::A_at_q1},
      {"BC_at_t1", ClosedForm::BC_at_t1},               {"BC_at_q1", ClosedForm::BC_at_q1},
      {"D_at_q1", ClosedForm::D_at_q1},                 {"D_at_t1", ClosedForm::D_at_t1},
  };
  return names;
}

inline ClosedForm parse_closed_form(std::string_view name) {
  for (const auto& [n, c] : closed_form_names()) {
    if (n == name) return c;
  }
  throw std::invalid_argument("unknown closed form '" + std::string(name) + "'");
}

inline MultiPoly closed_form(ClosedForm name, unsigned d) {
  const MultiPoly q = q_pow(1);
  const MultiPoly t = t_pow(1);
  switch (name) {
    case ClosedForm::length_factor_A: return q_factorial(d, Var::q);
    case ClosedForm::A_at_q1: return q_factorial(d, Var::t);
    case ClosedForm::BC_at_t1: {
      MultiPoly r = one();
      for (unsigned j = 1; j <= d; ++j) r *= divide_exact(one() - q_pow(2 * j), one() - q);
      return r;
    }
    case ClosedForm::BC_at_q1: {
      MultiPoly r = (one() + t).pow(d);
      for (unsigned j = 1; j <= d; ++j) r *= divide_exact(t_pow(j) - one(), t - one());
      return r;
    }
    case ClosedForm::D_at_q1: {
      const MultiPoly half = divide_exact((one() - t).pow(d) + (one() + t).pow(d), MultiPoly::constant(2));
      return half * q_factorial(d, Var::t);
    }
    case ClosedForm::D_at_t1: {
      if (d == 0) return one();
      MultiPoly r = divide_exact(one() - q_pow(d), one() - q);
      for (unsigned j = 1; j < d; ++j) r *= divide_exact(one() - q_pow(2 * j), one() - q);
      return r;
    }
  }
  throw std::invalid_argument("closed_form: unknown name");
}

/// Both sides of sum_j binom(d,j)_q q^{C(j+a,2)} t^j = q^{C(a,2)} prod_{j=0}^{d-1} (1 + t q^{j+a}).
inline std::pair<MultiPoly, MultiPoly> qbinomial_theorem_sides(unsigned d, unsigned a) {
  auto c2 = [](unsigned n) { return n * (n - 1) / 2; };
  MultiPoly lhs;
  for (unsigned j = 0; j <= d; ++j) lhs += q_binomial(d, j) * q_pow(c2(j + a)) * t_pow(j);
  MultiPoly rhs = q_pow(c2(a));
  for (unsigned j = 0; j < d; ++j) rhs *= one() + t_pow(1) * q_pow(j + a);
  return {lhs, rhs};
}

}  // namespace wm
