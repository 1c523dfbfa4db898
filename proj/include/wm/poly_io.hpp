#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wm/poly.hpp"

namespace wm {

/// Human-readable form, e.g. "1 + q*t" or "1 - q^2". Terms in lexicographic order.
inline std::string to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (Var v : kAllVars) {
      const auto k = e[slot(v)];
      if (k == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(v);
      if (k > 1) mono += '^' + std::to_string(k);
    }
    if (mono.empty()) {
      out << mag;
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag << '*' << mono;
    }
  }
  return out.str();
}

/// {"vars":["q","t","s"],"terms":[{"e":[eq,et,es],"c":"<decimal>"}]}
inline nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"e", {e[0], e[1], e[2]}}, {"c", c.str()}});
  }
  return {{"vars", {"q", "t", "s"}}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
    throw std::invalid_argument("polynomial JSON: expected object with vars and terms");
  }
  if (j.at("vars") != nlohmann::json({"q", "t", "s"})) {
    throw std::invalid_argument("polynomial JSON: vars must be [\"q\",\"t\",\"s\"]");
  }
  MultiPoly p;
  for (const auto& term : j.at("terms")) {
    const auto& e = term.at("e");
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("polynomial JSON: exponent must have 3 entries");
    const Exponent ex{e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>(), e[2].get<std::uint32_t>()};
    BigInt c(term.at("c").get<std::string>());
    if (c == 0) throw std::invalid_argument("polynomial JSON: zero coefficient");
    if (p.coeff(ex) != 0) throw std::invalid_argument("polynomial JSON: duplicate exponent");
    p.add_term(ex, c);
  }
  return p;
}

namespace detail {

inline std::string latex_power(char var, std::uint32_t k) {
  if (k == 0) return "1";
  if (k == 1) return std::string(1, var);
  if (k < 10) return std::string(1, var) + '^' + std::to_string(k);
  return std::string(1, var) + "^{" + std::to_string(k) + '}';
}

inline void latex_table(std::ostream& out, const MultiPoly& slice) {
  const auto qmax = slice.degree(Var::q);
  const auto tmax = slice.degree(Var::t);
  out << "\\begin{array}{c|" << std::string(qmax + 1, 'c') << "}\n";
  for (std::uint32_t k = 0; k <= qmax; ++k) out << '&' << latex_power('q', k);
  out << "\\\\\n\\hline\n";
  for (std::uint32_t row = 0; row <= tmax; ++row) {
    out << latex_power('t', row);
    std::uint32_t last = 0;
    bool any = false;
    for (const auto& [e, c] : slice.terms()) {
      if (e[1] == row) {
        last = std::max(last, e[0]);
        any = true;
      }
    }
    if (any) {
      for (std::uint32_t col = 0; col <= last; ++col) {
        out << '&';
        const BigInt c = slice.coeff({col, row, 0});
        if (c != 0) out << c;
      }
    }
    out << "\\\\\n";
  }
  out << "\\end{array}\n";
}

}  // namespace detail

/// Coefficient table with rows indexed by powers of t and columns by powers
/// of q. Polynomials involving s get one table per power of s.
inline std::string to_latex(const MultiPoly& p) {
  std::ostringstream out;
  const auto smax = p.degree(Var::s);
  for (std::uint32_t k = 0; k <= smax; ++k) {
    MultiPoly slice;
    for (const auto& [e, c] : p.terms()) {
      if (e[2] == k) slice.add_term({e[0], e[1], 0}, c);
    }
    if (smax > 0) {
      if (slice.is_zero()) continue;
      out << "% coefficient of " << detail::latex_power('s', k) << '\n';
    }
    detail::latex_table(out, slice);
  }
  return out.str();
}

}  // namespace wm
