#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wm/coxeter.hpp"
#include "wm/flags.hpp"
#include "wm/poly_io.hpp"
#include "wm/reference_tables.hpp"
#include "wm/series.hpp"
#include "wm/statistics.hpp"

namespace wm {

using Params = nlohmann::json;

struct CheckReport {
  std::string name;
  Params params = Params::object();
  bool passed = false;
  /// Informational checks never count as failures.
  bool report_only = false;
  MultiPoly lhs;
  MultiPoly rhs;
  std::optional<std::string> discrepancy;
  std::string note;

  nlohmann::json to_json() const {
    nlohmann::json j{{"name", name},       {"params", params},    {"passed", passed},
                     {"report_only", report_only}, {"lhs", wm::to_json(lhs)}, {"rhs", wm::to_json(rhs)}};
    j["discrepancy"] = discrepancy ? nlohmann::json(*discrepancy) : nlohmann::json(nullptr);
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

/// First term (in term order) where the two polynomials differ.
inline std::optional<std::string> first_difference(const MultiPoly& a, const MultiPoly& b) {
  std::set<Exponent> exps;
  for (const auto& [e, c] : a.terms()) exps.insert(e);
  for (const auto& [e, c] : b.terms()) exps.insert(e);
  for (const auto& e : exps) {
    const auto ca = a.coeff(e);
    const auto cb = b.coeff(e);
    if (ca != cb) {
      std::ostringstream out;
      out << "coefficient of q^" << e[0] << " t^" << e[1] << " s^" << e[2] << ": lhs " << ca << ", rhs " << cb;
      return out.str();
    }
  }
  return std::nullopt;
}

inline CheckReport compare(std::string name, Params params, MultiPoly lhs, MultiPoly rhs) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.discrepancy = first_difference(lhs, rhs);
  r.passed = !r.discrepancy;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

namespace detail {

inline unsigned get_uint(const Params& p, const char* key) {
  if (!p.contains(key)) throw std::invalid_argument(std::string("check parameter '") + key + "' is missing");
  const auto& v = p.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw std::invalid_argument(std::string("check parameter '") + key + "' must be a natural number");
  }
  return v.get<unsigned>();
}

inline std::string get_string(const Params& p, const char* key) {
  if (!p.contains(key) || !p.at(key).is_string()) {
    throw std::invalid_argument(std::string("check parameter '") + key + "' must be a string");
  }
  return p.at(key).get<std::string>();
}

inline bool get_bool(const Params& p, const char* key, bool fallback = false) {
  if (!p.contains(key)) return fallback;
  if (!p.at(key).is_boolean()) throw std::invalid_argument(std::string("check parameter '") + key + "' must be a boolean");
  return p.at(key).get<bool>();
}

inline MultiPoly at_q(const MultiPoly& m, std::uint32_t p) { return evaluate(m, Var::q, p); }

/// Space for a diagram/space type letter: A -> F_p^d, C -> symplectic, B -> odd quadratic, D -> H^d.
inline FqSpace space_for(const std::string& type, std::uint32_t p, unsigned d) {
  if (type == "A") return FqSpace::plain(p, d);
  if (type == "C" || type == "BC") return FqSpace::symplectic(p, d);
  if (type == "B") return FqSpace::quadratic_odd(p, d);
  if (type == "D") return FqSpace::hyperbolic(p, d);
  throw std::invalid_argument("unknown space type '" + type + "' (expected A, C, B or D)");
}

inline MultiPoly poly_of_count(std::uint64_t n) { return MultiPoly::constant(BigInt(n)); }

inline MultiPoly monomial_t(std::uint32_t k, const BigInt& c) { return MultiPoly::monomial(c, {0, k, 0}); }

// Flags grouped by their standard subflag.
struct StandardGroup {
  SignedPerm perm;
  unsigned weight = 0;
  std::vector<std::vector<unsigned>> member_dims;
};

struct StandardFlagSurvey {
  std::map<Flag, StandardGroup> groups;
  std::uint64_t flags = 0;
  std::vector<std::string> failures;
};

inline StandardFlagSurvey survey_standard_flags(const FqSpace& space) {
  StandardFlagSurvey out;
  const GroupFamily fam(space.family(), space.rank());
  for_each_flag(space, [&](const Flag& flag) {
    ++out.flags;
    const auto cb = canonical_basis(space, flag);
    const auto st = standard_flag(cb.perm, fam);
    const auto sub = prefix_flag(space, cb.vectors, st.dims);
    auto fail = [&](const std::string& why) {
      if (out.failures.size() < 5) out.failures.push_back(why + " for flag with dims " + nlohmann::json(flag.dims()).dump());
    };
    for (std::size_t i = 0; i < flag.members.size(); ++i) {
      const auto k = flag.members[i].dim();
      if (Subspace::span(space.field(), space.dim(), {cb.vectors.begin(), cb.vectors.begin() + static_cast<long>(k)}) !=
          flag.members[i]) {
        fail("basis prefix does not span the member");
      }
    }
    for (const auto& m : sub.members) {
      if (std::find(flag.members.begin(), flag.members.end(), m) == flag.members.end()) {
        fail("standard subflag is not a subflag");
      }
    }
    const auto cb_sub = canonical_basis(space, sub);
    if (cb_sub.perm != cb.perm) fail("standard subflag has a different length-permutation");
    if (sub.weight() != wmaj(cb.perm)) fail("standard weight differs from the (Weyl-)Major index");
    auto& g = out.groups[sub];
    g.perm = cb.perm;
    g.weight = sub.weight();
    g.member_dims.push_back(flag.dims());
  });
  return out;
}

}  // namespace detail

using CheckFn = std::function<CheckReport(const Params&)>;

struct CheckInfo {
  std::string name;
  std::string description;
  CheckFn run;
};

inline const std::vector<CheckInfo>& check_registry() {
  using namespace detail;
  static const std::vector<CheckInfo> registry{
      {"reference_table", "published M^pm_d / M^D_d tables vs enumeration; params family (BC|D), d <= 4",
       [](const Params& p) {
         const auto fam = parse_family(get_string(p, "family"));
         const unsigned d = get_uint(p, "d");
         return compare("reference_table", p, mahonian_direct({fam, false}, d), reference_table(fam, d));
       }},
      {"direct_vs_recursive", "enumeration vs recursion; params family, d, euler",
       [](const Params& p) {
         const auto fam = parse_family(get_string(p, "family"));
         const unsigned d = get_uint(p, "d");
         const bool euler = get_bool(p, "euler");
         auto r = compare("direct_vs_recursive", p, mahonian_direct({fam, euler}, d), mahonian_recursive({fam, euler}, d));
         if (fam == Family::D && euler) {
           r.report_only = true;
           r.note = "type D descent number is not the Coxeter descent count; reported, not gated";
         }
         return r;
       }},
      {"length_vs_word_length", "closed-form length vs BFS distance over the whole group; params family, d",
       [](const Params& p) {
         const GroupFamily fam(parse_family(get_string(p, "family")), get_uint(p, "d"));
         const CayleyDistances bfs(fam);
         MultiPoly lhs;
         MultiPoly rhs;
         std::optional<std::string> first;
         for_each_element(fam, [&](std::span<const int> img) {
           const SignedPerm s(std::vector<int>(img.begin(), img.end()));
           const auto a = length(s, fam);
           const auto b = bfs.distance(s);
           lhs += q_pow(a);
           rhs += q_pow(b);
           if (a != b && !first) first = s.to_string() + ": length " + std::to_string(a) + ", word length " + std::to_string(b);
         });
         auto r = compare("length_vs_word_length", p, lhs, rhs);
         if (first) {
           r.passed = false;
           r.discrepancy = first;
         }
         if (bfs.reached() != fam.order()) {
           r.passed = false;
           r.discrepancy = "BFS reached " + std::to_string(bfs.reached()) + " of " + std::to_string(fam.order()) + " elements";
         }
         return r;
       }},
      {"symmetry_A", "M_d(q,t) = M_d(t,q); param d",
       [](const Params& p) {
         const auto m = mahonian_direct({Family::A, false}, get_uint(p, "d"));
         return compare("symmetry_A", p, m, swap_vars(m, Var::q, Var::t));
       }},
      {"reciprocal_BC", "q^{d^2} t^{C(d+1,2)} M^pm_d(1/q,1/t) = M^pm_d; param d",
       [](const Params& p) {
         const unsigned d = get_uint(p, "d");
         const auto m = mahonian_direct({Family::BC, false}, d);
         return compare("reciprocal_BC", p, reciprocal_conjugate(m, d * d, d * (d + 1) / 2), m);
       }},
      {"low_degree_agreement", "M_d and M^pm_d agree in total degree <= d; param d",
       [](const Params& p) {
         const unsigned d = get_uint(p, "d");
         auto low = [d](const Exponent& e) { return e[0] + e[1] <= d; };
         return compare("low_degree_agreement", p, mahonian_direct({Family::A, false}, d).filtered(low),
                        mahonian_direct({Family::BC, false}, d).filtered(low));
       }},
      {"qbinomial_theorem", "sum_j binom(d,j)_q q^{C(j+a,2)} t^j = q^{C(a,2)} prod (1 + t q^{j+a}); params d, a",
       [](const Params& p) {
         auto [l, r] = qbinomial_theorem_sides(get_uint(p, "d"), get_uint(p, "a"));
         return compare("qbinomial_theorem", p, l, r);
       }},
      {"qbinomial_closed_form", "recursive vs product form of binom(d,k)_q; params d, k",
       [](const Params& p) {
         const unsigned d = get_uint(p, "d");
         const unsigned k = get_uint(p, "k");
         return compare("qbinomial_closed_form", p, q_binomial(d, k), q_binomial_closed(d, k));
       }},
      {"closed_form", "specialization of the enumerated polynomial vs closed product; params form, d",
       [](const Params& p) {
         const auto form = parse_closed_form(get_string(p, "form"));
         const unsigned d = get_uint(p, "d");
         MultiPoly lhs;
         switch (form) {
           case ClosedForm::length_factor_A: lhs = evaluate(mahonian_direct({Family::A, false}, d), Var::t, 1); break;
           case ClosedForm::A_at_q1: lhs = evaluate(mahonian_direct({Family::A, false}, d), Var::q, 1); break;
           case ClosedForm::BC_at_t1: lhs = evaluate(mahonian_direct({Family::BC, false}, d), Var::t, 1); break;
           case ClosedForm::BC_at_q1: lhs = evaluate(mahonian_direct({Family::BC, false}, d), Var::q, 1); break;
           case ClosedForm::D_at_q1: lhs = evaluate(mahonian_direct({Family::D, false}, d), Var::q, 1); break;
           case ClosedForm::D_at_t1: lhs = evaluate(mahonian_direct({Family::D, false}, d), Var::t, 1); break;
         }
         return compare("closed_form", p, lhs, closed_form(form, d));
       }},
      {"subspace_count", "enumerated (isotropic) subspaces vs counting formula at q=p; params type (A|C|B|D), p, d, k, l (D only)",
       [](const Params& p) {
         const auto type = get_string(p, "type");
         const std::uint32_t prime = get_uint(p, "p");
         const unsigned d = get_uint(p, "d");
         const unsigned k = get_uint(p, "k");
         const auto space = space_for(type, prime, d);
         if (type == "A") {
           return compare("subspace_count", p, poly_of_count(count_subspaces(space, k, false)), at_q(q_binomial(d, k), prime));
         }
         if (type == "D") {
           const unsigned l = get_uint(p, "l");
           std::uint64_t n = 0;
           enumerate_subspaces(space, k, true, [&](const Subspace& V) { n += space.metabolizer_codim(V) == l ? 1 : 0; });
           return compare("subspace_count", p, poly_of_count(n), at_q(isotropic_subspace_count(IsoType::D, d, k, l), prime));
         }
         return compare("subspace_count", p, poly_of_count(count_subspaces(space, k, true)),
                        at_q(isotropic_subspace_count(IsoType::BC, d, k), prime));
       }},
      {"flag_series", "weighted-flag series vs polynomial times prod 1/(1 - x t^j); params type, p, d, trunc, euler",
       [](const Params& p) {
         const auto type = get_string(p, "type");
         const std::uint32_t prime = get_uint(p, "p");
         const unsigned d = get_uint(p, "d");
         const auto trunc = get_uint(p, "trunc");
         const bool euler = get_bool(p, "euler");
         const auto space = space_for(type, prime, d);
         const StatisticSpec spec{space.family(), euler};
         const auto poly = at_q(mahonian_direct(spec, d), prime);
         const auto rhs = TruncSeries::from_poly(poly, trunc) * TruncSeries::partition_product(d, euler, trunc);
         auto r = compare("flag_series", p, flag_series(space, trunc, euler).to_poly(), rhs.to_poly());
         if (type == "D" && euler) {
           const auto rec = TruncSeries::from_poly(at_q(mahonian_recursive(spec, d), prime), trunc) *
                            TruncSeries::partition_product(d, true, trunc);
           const bool rec_ok = rec.to_poly() == r.lhs;
           r.note = std::string("flag series ") + (rec_ok ? "matches" : "differs from") +
                    " the recursion for the s-marked type D polynomial";
         }
         return r;
       }},
      {"B_equals_C", "weighted-flag series of (F_p^{2d+1}, Q) and (F_p^{2d}, omega) coincide; params p, d, trunc, euler",
       [](const Params& p) {
         const std::uint32_t prime = get_uint(p, "p");
         const unsigned d = get_uint(p, "d");
         const auto trunc = get_uint(p, "trunc");
         const bool euler = get_bool(p, "euler");
         return compare("B_equals_C", p, flag_series(FqSpace::quadratic_odd(prime, d), trunc, euler).to_poly(),
                        flag_series(FqSpace::symplectic(prime, d), trunc, euler).to_poly());
       }},
      {"canonical_basis_count", "canonical bases with length-permutation sigma vs p^length; params type, p, perm",
       [](const Params& p) {
         const auto type = get_string(p, "type");
         const std::uint32_t prime = get_uint(p, "p");
         const auto sigma = SignedPerm::parse(get_string(p, "perm"));
         const auto space = space_for(type, prime, sigma.rank());
         const auto len = length(sigma, GroupFamily(space.family(), sigma.rank()));
         return compare("canonical_basis_count", p, poly_of_count(count_canonical_bases(space, sigma)),
                        MultiPoly::constant(boost::multiprecision::pow(BigInt(prime), len)));
       }},
      {"standard_flags", "standard subflags of every flag: sum of t^weight vs sum of p^length t^Wmaj; params type, p, d",
       [](const Params& p) {
         const auto type = get_string(p, "type");
         const std::uint32_t prime = get_uint(p, "p");
         const unsigned d = get_uint(p, "d");
         const auto space = space_for(type, prime, d);
         const auto survey = survey_standard_flags(space);
         MultiPoly lhs;
         for (const auto& [sub, g] : survey.groups) lhs += t_pow(g.weight);
         const auto rhs = evaluate(evaluate(mahonian_direct({space.family(), false}, d), Var::q, prime), Var::s, 1);
         auto r = compare("standard_flags", p, lhs, rhs);
         if (!survey.failures.empty()) {
           r.passed = false;
           r.discrepancy = survey.failures.front();
         }
         r.note = std::to_string(survey.flags) + " flags in " + std::to_string(survey.groups.size()) + " standard classes";
         return r;
       }},
      {"standard_fibering", "weighted flags above each standard flag sum to t^w prod 1/(1 - x t^j); params type, p, d, trunc, euler",
       [](const Params& p) {
         const auto type = get_string(p, "type");
         const std::uint32_t prime = get_uint(p, "p");
         const unsigned d = get_uint(p, "d");
         const auto trunc = get_uint(p, "trunc");
         const bool euler = get_bool(p, "euler");
         const auto space = space_for(type, prime, d);
         const auto survey = survey_standard_flags(space);
         const MultiPoly x = euler ? s_pow(1) : one();
         std::vector<TruncSeries> factor;
         factor.emplace_back(trunc);
         for (unsigned k = 1; k <= d; ++k) {
           factor.push_back(TruncSeries::from_poly(x * t_pow(k), trunc) * TruncSeries::geometric_factor(k, euler, trunc));
         }
         const auto prod = TruncSeries::partition_product(d, euler, trunc);
         MultiPoly lhs;
         MultiPoly rhs;
         for (const auto& [sub, g] : survey.groups) {
           TruncSeries above(trunc);
           for (const auto& dims : g.member_dims) {
             TruncSeries term = TruncSeries::from_poly(one(), trunc);
             for (unsigned k : dims) term = term * factor[k];
             above += term;
           }
           MultiPoly st = one();
           for (const auto& m : sub.members) st *= x * t_pow(static_cast<std::uint32_t>(m.dim()));
           lhs += above.to_poly();
           rhs += (TruncSeries::from_poly(st, trunc) * prod).to_poly();
           if (above.to_poly() != (TruncSeries::from_poly(st, trunc) * prod).to_poly() && survey.failures.empty()) {
             auto r = compare("standard_fibering", p, above.to_poly(), (TruncSeries::from_poly(st, trunc) * prod).to_poly());
             r.passed = false;
             r.note = "first failing standard class, length-permutation " + g.perm.to_string();
             return r;
           }
         }
         auto r = compare("standard_fibering", p, lhs, rhs);
         if (!survey.failures.empty()) {
           r.passed = false;
           r.discrepancy = survey.failures.front();
         }
         return r;
       }},
      {"refinement_count", "type A flags per standard class vs 2^{d-k}; params p, d",
       [](const Params& p) {
         const std::uint32_t prime = get_uint(p, "p");
         const unsigned d = get_uint(p, "d");
         const auto survey = survey_standard_flags(FqSpace::plain(prime, d));
         MultiPoly lhs;
         MultiPoly rhs;
         for (const auto& [sub, g] : survey.groups) {
           lhs += monomial_t(g.weight, g.member_dims.size());
           rhs += monomial_t(g.weight, refinement_count(g.perm, GroupFamily(Family::A, d)));
         }
         auto r = compare("refinement_count", p, lhs, rhs);
         if (!survey.failures.empty()) {
           r.passed = false;
           r.discrepancy = survey.failures.front();
         }
         return r;
       }},
      {"rothe_tallies", "Rothe diagram crosses (constant term) and tensors per tag i (coefficient of t^i) vs inversions and sign part; params perm, type",
       [](const Params& p) {
         const auto sigma = SignedPerm::parse(get_string(p, "perm"));
         const auto type = parse_rothe_type(get_string(p, "type"));
         const RotheDiagram diagram(sigma, type);
         MultiPoly lhs = poly_of_count(diagram.count(CellKind::cross));
         for (const auto& [tag, n] : diagram.tensor_counts()) lhs += monomial_t(tag, n);
         MultiPoly rhs = poly_of_count(inversions(sigma));
         const int d = static_cast<int>(sigma.rank());
         for (int i = 1; i <= d; ++i) {
           if (sigma(i) < 0) rhs += monomial_t(static_cast<std::uint32_t>(i), (type == RotheType::D ? d : d + 1) + sigma(i));
         }
         return compare("rothe_tallies", p, lhs, rhs);
       }},
  };
  return registry;
}

inline const CheckInfo& find_check(const std::string& name) {
  for (const auto& c : check_registry()) {
    if (c.name == name) return c;
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

inline CheckReport run_identity_check(const std::string& name, const Params& params) {
  return find_check(name).run(params);
}

/// Parameters of the default verification grid.
struct VerifyOptions {
  std::optional<unsigned> max_d;
  std::vector<std::uint32_t> typed_primes{3, 5};
  std::vector<std::uint32_t> a_primes{2, 3};
  std::uint32_t trunc = kDefaultTruncation;
};

/// The checks run by `verify --all`, in registry order.
inline std::vector<std::pair<std::string, Params>> default_grid(const VerifyOptions& o) {
  auto cap = [&](unsigned d) { return o.max_d ? std::min(d, *o.max_d) : d; };
  std::map<std::string, std::vector<Params>> by_name;
  auto add = [&](const std::string& name, Params p) { by_name[name].push_back(std::move(p)); };

  for (const char* fam : {"BC", "D"}) {
    for (unsigned d = 1; d <= cap(4); ++d) add("reference_table", {{"family", fam}, {"d", d}});
  }
  for (unsigned d = 0; d <= cap(7); ++d) {
    add("direct_vs_recursive", {{"family", "A"}, {"d", d}, {"euler", false}});
    add("direct_vs_recursive", {{"family", "A"}, {"d", d}, {"euler", true}});
  }
  for (unsigned d = 0; d <= cap(5); ++d) {
    add("direct_vs_recursive", {{"family", "BC"}, {"d", d}, {"euler", false}});
    add("direct_vs_recursive", {{"family", "BC"}, {"d", d}, {"euler", true}});
    add("direct_vs_recursive", {{"family", "D"}, {"d", d}, {"euler", false}});
    add("direct_vs_recursive", {{"family", "D"}, {"d", d}, {"euler", true}});
  }
  for (const char* fam : {"A", "BC", "D"}) {
    for (unsigned d = 1; d <= cap(5); ++d) add("length_vs_word_length", {{"family", fam}, {"d", d}});
  }
  for (unsigned d = 1; d <= cap(7); ++d) add("symmetry_A", {{"d", d}});
  for (unsigned d = 1; d <= cap(5); ++d) add("reciprocal_BC", {{"d", d}});
  for (unsigned d = 1; d <= cap(5); ++d) add("low_degree_agreement", {{"d", d}});
  for (unsigned d = 0; d <= cap(8); ++d) {
    for (unsigned a = 0; a <= 4; ++a) add("qbinomial_theorem", {{"d", d}, {"a", a}});
    for (unsigned k = 0; k <= d; ++k) add("qbinomial_closed_form", {{"d", d}, {"k", k}});
  }
  for (unsigned d = 1; d <= cap(7); ++d) {
    add("closed_form", {{"form", "length_factor_A"}, {"d", d}});
    add("closed_form", {{"form", "A_at_q1"}, {"d", d}});
  }
  for (unsigned d = 1; d <= cap(5); ++d) {
    add("closed_form", {{"form", "BC_at_t1"}, {"d", d}});
    add("closed_form", {{"form", "BC_at_q1"}, {"d", d}});
    add("closed_form", {{"form", "D_at_t1"}, {"d", d}});
  }
  for (unsigned d = 1; d <= cap(6); ++d) add("closed_form", {{"form", "D_at_q1"}, {"d", d}});

  // every space of dimension <= 6
  for (auto prime : o.a_primes) {
    for (unsigned d = 1; d <= cap(6); ++d) {
      for (unsigned k = 0; k <= d; ++k) add("subspace_count", {{"type", "A"}, {"p", prime}, {"d", d}, {"k", k}});
    }
  }
  for (auto prime : o.typed_primes) {
    for (unsigned d = 1; d <= cap(3); ++d) {
      for (unsigned k = 0; k <= d; ++k) add("subspace_count", {{"type", "C"}, {"p", prime}, {"d", d}, {"k", k}});
      if (d <= 2) {
        for (unsigned k = 0; k <= d; ++k) add("subspace_count", {{"type", "B"}, {"p", prime}, {"d", d}, {"k", k}});
      }
      for (unsigned k = 0; k <= d; ++k) {
        for (unsigned l = 0; l <= k; ++l) add("subspace_count", {{"type", "D"}, {"p", prime}, {"d", d}, {"k", k}, {"l", l}});
      }
    }
  }

  auto flag_grid = [&](const std::string& name, bool with_euler_variants) {
    for (bool euler : {false, true}) {
      if (euler && !with_euler_variants) continue;
      for (auto prime : o.typed_primes) {
        for (unsigned d = 1; d <= cap(3); ++d) add(name, {{"type", "A"}, {"p", prime}, {"d", d}, {"trunc", o.trunc}, {"euler", euler}});
        for (const char* type : {"C", "B", "D"}) {
          add(name, {{"type", type}, {"p", prime}, {"d", cap(2)}, {"trunc", o.trunc}, {"euler", euler}});
        }
      }
    }
  };
  flag_grid("flag_series", true);
  for (bool euler : {false, true}) {
    for (auto prime : o.typed_primes) add("B_equals_C", {{"p", prime}, {"d", cap(2)}, {"trunc", o.trunc}, {"euler", euler}});
  }

  for (auto prime : o.a_primes) {
    for (const auto& s : enumerate_group(GroupFamily(Family::A, cap(3)))) {
      add("canonical_basis_count", {{"type", "A"}, {"p", prime}, {"perm", s.to_string()}});
    }
  }
  for (const auto& s : enumerate_group(GroupFamily(Family::BC, cap(2)))) {
    for (const char* type : {"C", "B"}) add("canonical_basis_count", {{"type", type}, {"p", 3}, {"perm", s.to_string()}});
  }
  for (const auto& s : enumerate_group(GroupFamily(Family::D, cap(2)))) {
    add("canonical_basis_count", {{"type", "D"}, {"p", 3}, {"perm", s.to_string()}});
  }

  for (auto prime : o.typed_primes) {
    for (unsigned d = 1; d <= cap(3); ++d) add("standard_flags", {{"type", "A"}, {"p", prime}, {"d", d}});
    for (const char* type : {"C", "B", "D"}) add("standard_flags", {{"type", type}, {"p", prime}, {"d", cap(2)}});
  }
  flag_grid("standard_fibering", true);
  for (unsigned d = 1; d <= cap(3); ++d) add("refinement_count", {{"p", 2}, {"d", d}});
  add("rothe_tallies", {{"perm", "6,3,8,1,4,9,7,2,5"}, {"type", "A"}});
  add("rothe_tallies", {{"perm", "-5,3,-1,6,4,-2"}, {"type", "C"}});
  add("rothe_tallies", {{"perm", "-5,3,-1,6,4,-2"}, {"type", "B"}});
  add("rothe_tallies", {{"perm", "-5,3,-1,-6,4,-2"}, {"type", "D"}});

  std::vector<std::pair<std::string, Params>> out;
  for (const auto& c : check_registry()) {
    for (auto& p : by_name[c.name]) out.emplace_back(c.name, std::move(p));
  }
  return out;
}

}  // namespace wm
