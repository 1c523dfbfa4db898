#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wm/fq.hpp"
#include "wm/rothe.hpp"
#include "wm/series.hpp"
#include "wm/signed_perm.hpp"

namespace wm {

/// Strictly increasing chain of nonzero subspaces.
struct Flag {
  std::vector<Subspace> members;

  std::vector<unsigned> dims() const {
    std::vector<unsigned> out;
    for (const auto& m : members) out.push_back(static_cast<unsigned>(m.dim()));
    return out;
  }
  unsigned weight() const {
    unsigned w = 0;
    for (const auto& m : members) w += static_cast<unsigned>(m.dim());
    return w;
  }

  friend bool operator==(const Flag&, const Flag&) = default;
  friend auto operator<=>(const Flag&, const Flag&) = default;
};

inline void validate_flag(const FqSpace& space, const Flag& flag) {
  const auto& F = space.field();
  for (std::size_t i = 0; i < flag.members.size(); ++i) {
    const auto& V = flag.members[i];
    if (V.ambient_dim() != space.dim()) throw std::invalid_argument("flag: member lives in the wrong space");
    if (V.dim() == 0 || V.dim() > space.max_flag_dim()) throw std::invalid_argument("flag: member has invalid dimension");
    if (!space.is_isotropic(V)) throw std::invalid_argument("flag: member is not isotropic");
    if (i > 0) {
      const auto& U = flag.members[i - 1];
      if (U.dim() >= V.dim() || !V.contains(F, U)) throw std::invalid_argument("flag: chain is not strictly increasing");
    }
  }
  if (!flag.members.empty() && !space.admissible_last_member(flag.members.back())) {
    throw std::invalid_argument("flag: last member has odd I-parity");
  }
}

/// All subspaces that may occur in a flag, sorted by dimension.
inline std::vector<Subspace> flag_members(const FqSpace& space) {
  std::vector<Subspace> out;
  for (unsigned k = 1; k <= space.max_flag_dim(); ++k) {
    auto layer = collect_subspaces(space, k, space.typed());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Calls visit(const Flag&) for every flag of the space, the empty flag
/// included. For hyperbolic spaces only flags with an even last member are visited.
template <class F>
void for_each_flag(const FqSpace& space, F&& visit) {
  const auto members = flag_members(space);
  std::vector<std::vector<std::size_t>> up(members.size());
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (members[b].dim() > members[a].dim() && members[b].contains(space.field(), members[a])) up[a].push_back(b);
    }
  }
  std::vector<bool> admissible(members.size());
  for (std::size_t a = 0; a < members.size(); ++a) admissible[a] = space.admissible_last_member(members[a]);

  Flag flag;
  visit(static_cast<const Flag&>(flag));
  std::vector<std::size_t> chain;
  auto extend = [&](auto& self, std::size_t a) -> void {
    chain.push_back(a);
    flag.members.push_back(members[a]);
    if (admissible[a]) visit(static_cast<const Flag&>(flag));
    for (std::size_t b : up[a]) self(self, b);
    flag.members.pop_back();
    chain.pop_back();
  };
  for (std::size_t a = 0; a < members.size(); ++a) extend(extend, a);
}

/// Sum over flags of prod_i x t^{dim V_i} / (1 - x t^{dim V_i}), i.e. over all
/// weighted flags of s^{alpha} t^{weight}, with x = s when with_alpha and 1 otherwise.
inline TruncSeries flag_series(const FqSpace& space, std::uint32_t bound, bool with_alpha) {
  std::map<std::vector<unsigned>, std::uint64_t> by_dims;
  for_each_flag(space, [&](const Flag& f) { ++by_dims[f.dims()]; });

  std::vector<TruncSeries> factor;
  for (unsigned k = 0; k <= space.max_flag_dim(); ++k) {
    if (k == 0) {
      factor.push_back(TruncSeries(bound));
      continue;
    }
    const MultiPoly x = with_alpha ? s_pow(1) : one();
    const auto shift = TruncSeries::from_poly(x * t_pow(k), bound);
    factor.push_back(shift * TruncSeries::geometric_factor(k, with_alpha, bound));
  }

  TruncSeries total(bound);
  for (const auto& [dims, count] : by_dims) {
    TruncSeries term = TruncSeries::from_poly(MultiPoly::constant(count), bound);
    for (unsigned k : dims) term = term * factor[k];
    total += term;
  }
  return total;
}

/// Adapted basis f_1..f_d of a flag and its length-permutation.
struct CanonicalBasis {
  std::vector<Vec> vectors;
  SignedPerm perm;

  friend bool operator==(const CanonicalBasis&, const CanonicalBasis&) = default;
};

namespace detail {

inline bool in_used(const std::vector<int>& sigma, int label, bool typed) {
  for (int s : sigma) {
    if (s == label || (typed && s == -label)) return true;
  }
  return false;
}

}  // namespace detail

/// Canonical (half-)basis of a flag. f_i is the shortest vector of the first
/// member of dimension > i-1 with last free coordinate 1, after clearing the
/// coordinates sigma(1..i-1); coordinates -sigma(m) are ignored for the length
/// and only enforce orthogonality. Beyond the last member the construction
/// continues in F^n (type A) or with b_u plus orthogonality corrections.
inline CanonicalBasis canonical_basis(const FqSpace& space, const Flag& flag) {
  validate_flag(space, flag);
  const auto& F = space.field();
  const std::size_t n = space.dim();
  const unsigned d = space.rank();
  const bool typed = space.typed();

  std::vector<Vec> f;
  std::vector<int> sigma;
  for (unsigned i = 0; i < d; ++i) {
    const Subspace* Vj = nullptr;
    for (const auto& m : flag.members) {
      if (m.dim() > i) {
        Vj = &m;
        break;
      }
    }
    if (Vj == nullptr && typed) {
      int u = 1;
      while (detail::in_used(sigma, u, true)) ++u;
      Vec g = space.basis_vector(u);
      if (i > 0) {
        std::vector<Vec> A(i, Vec(i));
        Vec rhs(i);
        for (unsigned m = 0; m < i; ++m) {
          for (unsigned c = 0; c < i; ++c) A[m][c] = space.polar(space.basis_vector(-sigma[c]), f[m]);
          rhs[m] = F.neg(space.polar(g, f[m]));
        }
        const Vec lambda = solve_linear(F, A, rhs);
        for (unsigned c = 0; c < i; ++c) g[space.position(-sigma[c])] = F.add(g[space.position(-sigma[c])], lambda[c]);
      }
      f.push_back(std::move(g));
      sigma.push_back(u);
      continue;
    }

    std::vector<Vec> rows = Vj ? Vj->rows() : Subspace::whole(F, n).rows();
    for (auto& r : rows) {
      for (unsigned m = 0; m < i; ++m) axpy_sub(F, r, r[space.position(sigma[m])], f[m]);
    }
    std::vector<bool> in_u(n);
    for (std::size_t pos = 0; pos < n; ++pos) in_u[pos] = !detail::in_used(sigma, space.label(pos), typed);
    auto lead = [&](const Vec& r) -> std::optional<std::size_t> {
      for (std::size_t pos = n; pos-- > 0;) {
        if (in_u[pos] && r[pos] != 0) return pos;
      }
      return std::nullopt;
    };
    // Echelon by last free coordinate until leads are distinct.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < rows.size() && !changed; ++a) {
        const auto la = lead(rows[a]);
        if (!la) continue;
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
          if (lead(rows[b]) == la) {
            axpy_sub(F, rows[b], F.mul(rows[b][*la], F.inv(rows[a][*la])), rows[a]);
            changed = true;
            break;
          }
        }
      }
    }
    std::optional<std::size_t> best_row;
    std::size_t best = n;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      const auto la = lead(rows[a]);
      if (la && *la < best) {
        best = *la;
        best_row = a;
      }
    }
    if (!best_row) throw std::logic_error("canonical_basis: no admissible vector found");
    Vec g = rows[*best_row];
    scale(F, g, F.inv(g[best]));
    f.push_back(std::move(g));
    sigma.push_back(space.label(best));
    if (sigma.back() == 0) throw std::logic_error("canonical_basis: leading coordinate at x_0");
  }
  return {std::move(f), SignedPerm(std::move(sigma))};
}

inline Flag prefix_flag(const FqSpace& space, const std::vector<Vec>& basis, const std::vector<unsigned>& dims) {
  Flag flag;
  for (unsigned k : dims) {
    flag.members.push_back(Subspace::span(space.field(), space.dim(), std::vector<Vec>(basis.begin(), basis.begin() + k)));
  }
  return flag;
}

/// Complete flag spanned by prefixes of a basis: dims 1..d.
inline Flag complete_flag(const FqSpace& space, const std::vector<Vec>& basis) {
  std::vector<unsigned> dims;
  for (unsigned k = 1; k <= space.rank(); ++k) dims.push_back(k);
  return prefix_flag(space, basis, dims);
}

struct StandardFlag {
  std::vector<unsigned> dims;
  unsigned weight = 0;
};

/// Dimensions of the standard flag of a length-permutation: the usual descents
/// for type A; for BC and D the <_pm descents plus d when sigma(d) < 0.
inline StandardFlag standard_flag(const SignedPerm& sigma, const GroupFamily& fam) {
  if (sigma.rank() != fam.rank || !sigma.belongs_to(fam.tag)) {
    throw std::invalid_argument("standard_flag: " + sigma.to_string() + " is not in " + family_name(fam.tag));
  }
  StandardFlag out;
  const auto img = sigma.images();
  for (std::size_t i = 0; i + 1 < img.size(); ++i) {
    const bool descent = fam.tag == Family::A ? img[i] > img[i + 1] : pm_less(img[i + 1], img[i]);
    if (descent) out.dims.push_back(static_cast<unsigned>(i) + 1);
  }
  if (fam.tag != Family::A && !img.empty() && img.back() < 0) out.dims.push_back(fam.rank);
  for (unsigned k : out.dims) out.weight += k;
  return out;
}

/// The standard subflag of a flag: members of the dimensions prescribed by its length-permutation.
inline Flag standard_subflag(const FqSpace& space, const CanonicalBasis& cb) {
  return prefix_flag(space, cb.vectors, standard_flag(cb.perm, GroupFamily(space.family(), space.rank())).dims);
}

namespace detail {

inline RotheType rothe_type_of(const FqSpace& space) {
  switch (space.form()) {
    case FormKind::none: return RotheType::A;
    case FormKind::symplectic: return RotheType::C;
    case FormKind::quadratic_odd: return RotheType::B;
    case FormKind::hyperbolic: return RotheType::D;
  }
  return RotheType::A;
}

inline std::optional<CanonicalBasis> try_canonical_basis(const FqSpace& space, const Flag& flag) {
  try {
    return canonical_basis(space, flag);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Number of canonical bases with length-permutation sigma. Free cells of the
/// Rothe diagram run over F_p, forced cells are solved from isotropy and
/// orthogonality, and each candidate counts only if recomputing the canonical
/// basis of its complete flag returns it unchanged.
inline std::uint64_t count_canonical_bases(const FqSpace& space, const SignedPerm& sigma) {
  if (sigma.rank() != space.rank() || !sigma.belongs_to(space.family())) {
    throw std::invalid_argument("count_canonical_bases: " + sigma.to_string() + " does not match " + space.describe());
  }
  const auto& F = space.field();
  const RotheDiagram diagram(sigma, detail::rothe_type_of(space));
  const unsigned d = space.rank();
  const std::size_t n = space.dim();
  const auto& cols = diagram.column_labels();

  std::vector<std::pair<unsigned, std::size_t>> free_cells;  // (row, position)
  for (unsigned r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto k = diagram.cell(r, c).kind;
      if (k == CellKind::cross || k == CellKind::tensor) free_cells.emplace_back(r, space.position(cols[c]));
    }
  }
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < free_cells.size(); ++e) {
    total *= F.p();
    require_within_cap(total, "count_canonical_bases");
  }

  std::vector<std::uint32_t> values(free_cells.size(), 0);
  std::uint64_t count = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    std::vector<Vec> f(d, Vec(n, 0));
    for (unsigned r = 0; r < d; ++r) f[r][space.position(sigma(static_cast<int>(r) + 1))] = 1;
    for (std::size_t e = 0; e < free_cells.size(); ++e) f[free_cells[e].first][free_cells[e].second] = values[e];

    bool ok = true;
    for (unsigned i = 0; i < d && ok && space.typed(); ++i) {
      const int s = sigma(static_cast<int>(i) + 1);
      if (space.form() != FormKind::symplectic) {
        const auto pos = space.position(-s);
        f[i][pos] = 0;
        f[i][pos] = F.neg(space.quadratic(f[i]));
      }
      if (i > 0) {
        std::vector<Vec> A(i, Vec(i));
        Vec rhs(i);
        Vec base = f[i];
        for (unsigned m = 0; m < i; ++m) base[space.position(-sigma(static_cast<int>(m) + 1))] = 0;
        for (unsigned m = 0; m < i; ++m) {
          for (unsigned c = 0; c < i; ++c) {
            A[m][c] = space.polar(space.basis_vector(-sigma(static_cast<int>(c) + 1)), f[m]);
          }
          rhs[m] = F.neg(space.polar(base, f[m]));
        }
        try {
          const Vec lambda = solve_linear(F, A, rhs);
          f[i] = base;
          for (unsigned c = 0; c < i; ++c) f[i][space.position(-sigma(static_cast<int>(c) + 1))] = lambda[c];
        } catch (const std::domain_error&) {
          ok = false;
        }
      }
    }
    if (ok) {
      const auto cb = detail::try_canonical_basis(space, complete_flag(space, f));
      if (cb && cb->perm == sigma && cb->vectors == f) ++count;
    }

    for (std::size_t e = 0; e < values.size(); ++e) {
      if (++values[e] < F.p()) break;
      values[e] = 0;
    }
  }
  return count;
}

/// Number of flags sharing one canonical basis with type-A length-permutation
/// sigma: 2^{d-k} with k the number of descents.
inline std::uint64_t refinement_count(const SignedPerm& sigma, const GroupFamily& fam) {
  if (fam.tag != Family::A) throw std::invalid_argument("refinement_count: defined for type A only");
  const auto st = standard_flag(sigma, fam);
  return std::uint64_t{1} << (fam.rank - st.dims.size());
}

}  // namespace wm
