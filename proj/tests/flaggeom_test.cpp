#include <gtest/gtest.h>

#include <map>

#include "wm/checks.hpp"
#include "wm/flags.hpp"
#include "wm/rothe.hpp"
#include "wm/statistics.hpp"
#include "test_util.hpp"

using namespace wm;

namespace {

SignedPerm P(const char* text) { return SignedPerm::parse(text); }

MultiPoly t() { return t_pow(1); }

// Coordinate of label l in a vector, looked up through the space's labelling.
long long coord(const FqSpace& V, const Vec& x, int l) { return x[V.position(l)]; }

// The forms written out from their coordinate definitions.
long long polar_oracle(const FqSpace& V, const Vec& x, const Vec& y) {
  const int d = static_cast<int>(V.rank());
  long long r = 0;
  for (int i = 1; i <= d; ++i) {
    if (V.form() == FormKind::symplectic) {
      r += coord(V, x, i) * coord(V, y, -i) - coord(V, x, -i) * coord(V, y, i);
    } else {
      r += coord(V, x, i) * coord(V, y, -i) + coord(V, x, -i) * coord(V, y, i);
    }
  }
  if (V.form() == FormKind::quadratic_odd) r += 2 * coord(V, x, 0) * coord(V, y, 0);
  const long long p = V.p();
  return ((r % p) + p) % p;
}

long long quadratic_oracle(const FqSpace& V, const Vec& x) {
  const int d = static_cast<int>(V.rank());
  long long r = 0;
  for (int i = 1; i <= d; ++i) r += coord(V, x, i) * coord(V, x, -i);
  if (V.form() == FormKind::quadratic_odd) r += coord(V, x, 0) * coord(V, x, 0);
  const long long p = V.p();
  return ((r % p) + p) % p;
}

// Rank of a list of vectors over F_p by plain elimination.
std::size_t rank_oracle(std::vector<Vec> rows, std::uint32_t p) {
  std::size_t rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    long long inv = 1;
    while ((inv * rows[rank][col]) % p != 1) ++inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const long long c = (rows[r][col] * inv) % p;
      for (std::size_t j = 0; j < n; ++j) rows[r][j] = static_cast<std::uint32_t>(((rows[r][j] - c * rows[rank][j]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

// k-dimensional (isotropic) subspaces counted as independent ordered k-tuples
// divided by |GL_k(F_p)|.
std::uint64_t count_oracle(const FqSpace& V, std::size_t k) {
  const std::uint32_t p = V.p();
  const std::size_t n = V.dim();
  std::vector<Vec> all;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec v(n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) v[i] = static_cast<std::uint32_t>(c % p);
    if (V.typed() && V.form() != FormKind::symplectic && quadratic_oracle(V, v) != 0) continue;
    all.push_back(v);
  }
  std::uint64_t tuples = 0;
  std::vector<Vec> chosen;
  auto rec = [&](auto& self) -> void {
    if (chosen.size() == k) {
      ++tuples;
      return;
    }
    for (const auto& v : all) {
      bool ok = true;
      if (V.typed()) {
        for (const auto& w : chosen) ok = ok && polar_oracle(V, v, w) == 0;
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (rank_oracle(chosen, p) == chosen.size()) self(self);
      chosen.pop_back();
    }
  };
  rec(rec);
  std::uint64_t gl = 1;
  std::uint64_t pk = 1;
  for (std::size_t i = 0; i < k; ++i) pk *= p;
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < k; ++i) {
    gl *= pk - pi;
    pi *= p;
  }
  return tuples / gl;
}

}  // namespace

TEST(FqSpace, Construction) {
  EXPECT_THROW(FqSpace::plain(4, 2), std::invalid_argument);
  EXPECT_THROW(FqSpace::quadratic_odd(2, 2), std::invalid_argument);
  EXPECT_THROW(FqSpace::hyperbolic(2, 2), std::invalid_argument);
  EXPECT_EQ(FqSpace::symplectic(2, 2).dim(), 4u);
  EXPECT_EQ(FqSpace::quadratic_odd(3, 2).dim(), 5u);
  EXPECT_EQ(FqSpace::hyperbolic(3, 3).dim(), 6u);
}

TEST(FqSpace, CoordinateOrder) {
  const auto V = FqSpace::quadratic_odd(3, 2);
  std::vector<int> labels;
  for (std::size_t pos = 0; pos < V.dim(); ++pos) labels.push_back(V.label(pos));
  EXPECT_EQ(labels, (std::vector<int>{1, 2, 0, -2, -1}));
  const auto W = FqSpace::symplectic(3, 2);
  EXPECT_EQ(W.position(-2), 2u);
}

TEST(FqSpace, FormsMatchDefinitions) {
  for (const auto& V : {FqSpace::symplectic(3, 2), FqSpace::quadratic_odd(3, 1), FqSpace::hyperbolic(5, 2)}) {
    const std::size_t n = V.dim();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= V.p();
    for (std::uint64_t a = 0; a < total; a += 7) {
      Vec x(n);
      Vec y(n);
      std::uint64_t c = a;
      std::uint64_t e = (a * 31 + 5) % total;
      for (std::size_t i = 0; i < n; ++i, c /= V.p(), e /= V.p()) {
        x[i] = static_cast<std::uint32_t>(c % V.p());
        y[i] = static_cast<std::uint32_t>(e % V.p());
      }
      EXPECT_EQ(V.polar(x, y), polar_oracle(V, x, y));
      if (V.form() != FormKind::symplectic) {
        EXPECT_EQ(V.quadratic(x), quadratic_oracle(V, x));
      }
    }
  }
}

TEST(Subspaces, Examples) {
  EXPECT_EQ(count_subspaces(FqSpace::plain(2, 3), 1, false), 7u);
  EXPECT_EQ(count_subspaces(FqSpace::symplectic(3, 2), 1, true), 40u);
  EXPECT_EQ(count_subspaces(FqSpace::hyperbolic(3, 1), 1, true), 2u);
}

TEST(Subspaces, EnumerationIsCanonicalAndDistinct) {
  const auto V = FqSpace::plain(3, 4);
  const auto subs = collect_subspaces(V, 2, false);
  EXPECT_EQ(subs.size(), 130u);
  std::set<Subspace> seen(subs.begin(), subs.end());
  EXPECT_EQ(seen.size(), subs.size());
  for (const auto& s : subs) EXPECT_EQ(Subspace::span(V.field(), V.dim(), s.rows()), s);
}

TEST(Subspaces, MatchBruteForceTupleCount) {
  for (const auto& V : {FqSpace::plain(3, 3), FqSpace::plain(2, 4), FqSpace::symplectic(3, 2), FqSpace::quadratic_odd(3, 1),
                        FqSpace::hyperbolic(3, 2), FqSpace::symplectic(2, 2)}) {
    for (std::size_t k = 1; k <= V.max_flag_dim() && k <= 2; ++k) {
      EXPECT_EQ(count_subspaces(V, k, V.typed()), count_oracle(V, k)) << V.describe() << " k=" << k;
    }
  }
}

TEST(Subspaces, MatchCountingFormulas) {
  for (std::uint32_t p : {3u, 5u}) {
    for (unsigned d = 1; d <= 4; ++d) {
      for (unsigned k = 0; k <= d; ++k) {
        EXPECT_EQ(evaluate(q_binomial(d, k), Var::q, p), cst(count_subspaces(FqSpace::plain(p, d), k, false)));
      }
    }
    for (unsigned d = 1; d <= 2; ++d) {
      for (unsigned k = 0; k <= d; ++k) {
        const auto bc = evaluate(isotropic_subspace_count(IsoType::BC, d, k), Var::q, p);
        EXPECT_EQ(bc, cst(count_subspaces(FqSpace::symplectic(p, d), k, true)));
        EXPECT_EQ(bc, cst(count_subspaces(FqSpace::quadratic_odd(p, d), k, true)));
        const auto H = FqSpace::hyperbolic(p, d);
        std::map<unsigned, std::uint64_t> by_l;
        enumerate_subspaces(H, k, true, [&](const Subspace& s) { ++by_l[H.metabolizer_codim(s)]; });
        for (unsigned l = 0; l <= k; ++l) {
          EXPECT_EQ(evaluate(isotropic_subspace_count(IsoType::D, d, k, l), Var::q, p), cst(by_l[l])) << d << k << l;
        }
      }
    }
  }
}

TEST(FlagSeries, Examples) {
  EXPECT_EQ(flag_series(FqSpace::plain(2, 1), 4, false).to_poly(), one() + t() + t_pow(2) + t_pow(3) + t_pow(4));
  // three lines and the plane of F_2^2, three complete flags
  EXPECT_EQ(flag_series(FqSpace::plain(2, 2), 3, false).to_poly(), one() + cst(3) * t() + cst(4) * t_pow(2) + cst(6) * t_pow(3));
  for (const auto& V : {FqSpace::plain(3, 3), FqSpace::symplectic(3, 2), FqSpace::hyperbolic(3, 2)}) {
    EXPECT_EQ(flag_series(V, 6, false).coeff(0), one());
  }
}

TEST(FlagSeries, WeightByWeightCount) {
  // each flag with dims (k_1..k_r) contributes the compositions of n as
  // sum w_i k_i with every w_i >= 1; count them directly
  const auto V = FqSpace::symplectic(3, 2);
  const std::uint32_t bound = 9;
  std::vector<std::uint64_t> expected(bound + 1);
  for_each_flag(V, [&](const Flag& f) {
    const auto dims = f.dims();
    auto rec = [&](auto& self, std::size_t i, std::uint32_t used) -> void {
      if (i == dims.size()) {
        ++expected[used];
        return;
      }
      for (std::uint32_t w = 1; used + w * dims[i] <= bound; ++w) self(self, i + 1, used + w * dims[i]);
    };
    rec(rec, 0, 0);
  });
  MultiPoly e;
  for (std::uint32_t n = 0; n <= bound; ++n) e += MultiPoly::monomial(expected[n], {0, n, 0});
  EXPECT_EQ(flag_series(V, bound, false).to_poly(), e);
}

TEST(FlagSeries, Theorems) {
  const std::uint32_t p = 3;
  const std::uint32_t T = 8;
  auto expected = [&](Family f, unsigned d, bool euler) {
    const auto m = evaluate(mahonian_direct({f, euler}, d), Var::q, p);
    return (series_from_poly(m, T) * TruncSeries::partition_product(d, euler, T)).to_poly();
  };
  for (unsigned d = 1; d <= 3; ++d) EXPECT_EQ(flag_series(FqSpace::plain(p, d), T, false).to_poly(), expected(Family::A, d, false));
  EXPECT_EQ(flag_series(FqSpace::symplectic(p, 2), T, false).to_poly(), expected(Family::BC, 2, false));
  EXPECT_EQ(flag_series(FqSpace::quadratic_odd(p, 2), T, false).to_poly(), expected(Family::BC, 2, false));
  EXPECT_EQ(flag_series(FqSpace::hyperbolic(p, 2), T, false).to_poly(), expected(Family::D, 2, false));
  EXPECT_EQ(flag_series(FqSpace::symplectic(p, 2), T, true).to_poly(), expected(Family::BC, 2, true));
  EXPECT_EQ(flag_series(FqSpace::plain(p, 3), T, true).to_poly(), expected(Family::A, 3, true));
}

TEST(FlagSeries, HyperbolicKeepsEvenLastMembersOnly) {
  const auto H = FqSpace::hyperbolic(3, 1);
  std::vector<Flag> flags;
  for_each_flag(H, [&](const Flag& f) { flags.push_back(f); });
  // the empty flag and the metabolizer line
  ASSERT_EQ(flags.size(), 2u);
  EXPECT_EQ(H.metabolizer_codim(flags[1].members[0]), 0u);
}

TEST(CanonicalBasis, Examples) {
  const auto V = FqSpace::plain(3, 3);
  const auto cb0 = canonical_basis(V, Flag{});
  EXPECT_EQ(cb0.perm, SignedPerm::identity(3));
  EXPECT_EQ(cb0.vectors, (std::vector<Vec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

  const auto W = FqSpace::plain(2, 2);
  const Flag line{{Subspace::span(W.field(), 2, {{1, 1}})}};
  const auto cb = canonical_basis(W, line);
  EXPECT_EQ(cb.vectors, (std::vector<Vec>{{1, 1}, {1, 0}}));
  EXPECT_EQ(cb.perm, P("(2,1)"));
}

TEST(CanonicalBasis, FlagsInsidePositiveHalfGiveUnsignedPerms) {
  const auto V = FqSpace::symplectic(3, 2);
  for_each_flag(V, [&](const Flag& f) {
    bool positive = true;
    for (const auto& m : f.members) {
      for (const auto& r : m.rows()) positive = positive && r[V.position(-1)] == 0 && r[V.position(-2)] == 0;
    }
    const auto cb = canonical_basis(V, f);
    EXPECT_EQ(positive, cb.perm.negative_count() == 0);
  });
}

TEST(CanonicalBasis, RejectsNonFlags) {
  const auto V = FqSpace::symplectic(3, 1);
  // the whole plane is not isotropic
  const Flag bad{{Subspace::whole(V.field(), 2)}};
  EXPECT_THROW(canonical_basis(V, bad), std::invalid_argument);
}

TEST(CanonicalBasis, PrefixesSpanTheFlag) {
  for (const auto& V : {FqSpace::plain(3, 3), FqSpace::symplectic(3, 2), FqSpace::quadratic_odd(3, 2), FqSpace::hyperbolic(3, 2)}) {
    for_each_flag(V, [&](const Flag& f) {
      const auto cb = canonical_basis(V, f);
      EXPECT_TRUE(cb.perm.belongs_to(V.family()));
      for (const auto& m : f.members) {
        const auto k = m.dim();
        EXPECT_EQ(Subspace::span(V.field(), V.dim(), {cb.vectors.begin(), cb.vectors.begin() + static_cast<long>(k)}), m);
      }
      EXPECT_EQ(canonical_basis(V, complete_flag(V, cb.vectors)), cb);
    });
  }
}

TEST(CanonicalBasisCount, Examples) {
  EXPECT_EQ(count_canonical_bases(FqSpace::plain(5, 3), SignedPerm::identity(3)), 1u);
  EXPECT_EQ(count_canonical_bases(FqSpace::plain(3, 2), P("(2,1)")), 3u);
  EXPECT_EQ(count_canonical_bases(FqSpace::symplectic(3, 1), P("(-1)")), 3u);
  EXPECT_THROW(count_canonical_bases(FqSpace::plain(3, 2), P("(-2,1)")), std::invalid_argument);
}

TEST(CanonicalBasisCount, MatchesCompleteFlagsGroupedByPerm) {
  for (const auto& V : {FqSpace::plain(2, 3), FqSpace::plain(3, 3), FqSpace::symplectic(3, 2), FqSpace::quadratic_odd(3, 2),
                        FqSpace::hyperbolic(3, 2)}) {
    std::map<SignedPerm, std::uint64_t> grouped;
    for_each_flag(V, [&](const Flag& f) {
      if (f.members.size() == V.rank()) ++grouped[canonical_basis(V, f).perm];
    });
    for (const auto& s : enumerate_group({V.family(), V.rank()})) {
      EXPECT_EQ(count_canonical_bases(V, s), grouped[s]) << V.describe() << " " << s.to_string();
    }
  }
}

TEST(CanonicalBasisCount, PowersOfP) {
  for (std::uint32_t p : {2u, 3u}) {
    for (const auto& s : enumerate_group({Family::A, 3})) {
      std::uint64_t expected = 1;
      for (unsigned i = 0; i < inversions(s); ++i) expected *= p;
      EXPECT_EQ(count_canonical_bases(FqSpace::plain(p, 3), s), expected);
    }
  }
  for (const auto& s : enumerate_group({Family::BC, 2})) {
    std::uint64_t expected = 1;
    for (unsigned i = 0; i < length(s, {Family::BC, 2}); ++i) expected *= 3;
    EXPECT_EQ(count_canonical_bases(FqSpace::symplectic(3, 2), s), expected);
  }
}

TEST(StandardFlag, Examples) {
  const auto a = standard_flag(P("(6,3,8,1,4,9,7,2,5)"), {Family::A, 9});
  EXPECT_EQ(a.dims, (std::vector<unsigned>{1, 3, 6, 7}));
  EXPECT_EQ(a.weight, 17u);
  const auto c = standard_flag(P("(-5,3,-1,6,4,-2)"), {Family::BC, 6});
  EXPECT_EQ(c.dims, (std::vector<unsigned>{1, 3, 4, 6}));
  EXPECT_EQ(c.weight, 14u);
  EXPECT_TRUE(standard_flag(SignedPerm::identity(4), {Family::BC, 4}).dims.empty());
  EXPECT_EQ(standard_flag(SignedPerm::identity(4), {Family::A, 4}).weight, 0u);
}

TEST(StandardFlag, WeightIsWmaj) {
  for (Family f : {Family::A, Family::BC, Family::D}) {
    for (const auto& s : enumerate_group({f, 4})) EXPECT_EQ(standard_flag(s, {f, 4}).weight, wmaj(s));
  }
}

TEST(StandardFlag, SurveyOnSmallSpaces) {
  for (const auto& V : {FqSpace::plain(3, 3), FqSpace::symplectic(3, 2), FqSpace::quadratic_odd(3, 2), FqSpace::hyperbolic(3, 2)}) {
    const auto survey = detail::survey_standard_flags(V);
    EXPECT_TRUE(survey.failures.empty()) << (survey.failures.empty() ? "" : survey.failures.front());
    EXPECT_GT(survey.flags, 0u);
  }
}

TEST(Refinements, Examples) {
  EXPECT_EQ(refinement_count(SignedPerm::identity(3), {Family::A, 3}), 8u);
  EXPECT_EQ(refinement_count(P("(2,1)"), {Family::A, 2}), 2u);
  // k = d-1: the standard flag with or without the whole space
  EXPECT_EQ(refinement_count(P("(4,3,2,1)"), {Family::A, 4}), 2u);
  EXPECT_THROW(refinement_count(P("(-1)"), {Family::BC, 1}), std::invalid_argument);
}

TEST(Refinements, CountFlagsWithGivenStandardFlag) {
  for (unsigned d = 1; d <= 3; ++d) {
    const auto r = run_identity_check("refinement_count", {{"p", 2}, {"d", d}});
    EXPECT_TRUE(r.passed) << r.discrepancy.value_or("");
  }
}

TEST(Rothe, TypeAExample) {
  const RotheDiagram r(P("(6,3,8,1,4,9,7,2,5)"), RotheType::A);
  EXPECT_EQ(r.count(CellKind::cross), 18u);
  EXPECT_EQ(r.count(CellKind::bullet), 9u);
  EXPECT_TRUE(r.tensor_counts().empty());
  // first row of the printed diagram: five crosses then the bullet in column 6
  for (std::size_t col = 0; col < 5; ++col) EXPECT_EQ(r.cell(0, col).kind, CellKind::cross);
  EXPECT_EQ(r.cell(0, 5).kind, CellKind::bullet);
  EXPECT_EQ(r.cell(8, 4).kind, CellKind::bullet);
}

TEST(Rothe, TypeCExample) {
  const RotheDiagram r(P("(-5,3,-1,6,4,-2)"), RotheType::C);
  EXPECT_EQ(r.count(CellKind::cross), 7u);
  EXPECT_EQ(r.tensor_counts(), (std::map<unsigned, unsigned>{{1, 2}, {3, 6}, {6, 5}}));
}

TEST(Rothe, TypeDExample) {
  const auto s = P("(-5,3,-1,-6,4,-2)");
  const RotheDiagram r(s, RotheType::D);
  std::map<unsigned, unsigned> expected;
  for (int i = 1; i <= 6; ++i) {
    if (s(i) < 0 && 6 + s(i) > 0) expected[static_cast<unsigned>(i)] = static_cast<unsigned>(6 + s(i));
  }
  EXPECT_EQ(r.tensor_counts(), expected);
  EXPECT_EQ(r.count(CellKind::cross), inversions(s));
}

TEST(Rothe, TalliesGiveLength) {
  for (const auto& [type, fam] : {std::pair{RotheType::A, Family::A}, std::pair{RotheType::C, Family::BC},
                                  std::pair{RotheType::B, Family::BC}, std::pair{RotheType::D, Family::D}}) {
    for (const auto& s : enumerate_group({fam, 4})) {
      const RotheDiagram r(s, type);
      unsigned tensors = 0;
      for (const auto& [tag, n] : r.tensor_counts()) tensors += n;
      EXPECT_EQ(r.count(CellKind::cross) + tensors, length(s, {fam, 4})) << s.to_string();
    }
  }
}

TEST(Rothe, TextAndLatexOutput) {
  const RotheDiagram r(P("(-2,1)"), RotheType::C);
  const auto text = r.to_text();
  EXPECT_NE(text.find("●"), std::string::npos);
  EXPECT_NE(text.find("⊗"), std::string::npos);
  EXPECT_NE(r.to_latex().find("\\begin{array}"), std::string::npos);
  EXPECT_EQ(text, RotheDiagram(P("(-2,1)"), RotheType::C).to_text());
}
