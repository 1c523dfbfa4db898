#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wm/poly.hpp"
#include "wm/signed_perm.hpp"

namespace wm {

/// Parses coefficient-table rows "label&c0&c1&...\\": row k holds the
/// coefficients of t^k, cell j of q^j, empty cells are zero.
inline MultiPoly parse_coefficient_table(std::string_view body) {
  MultiPoly p;
  std::istringstream lines{std::string(body)};
  std::string line;
  std::uint32_t row = 0;
  while (std::getline(lines, line)) {
    if (line.find('&') == std::string::npos) continue;
    const auto end = line.find("\\\\");
    if (end != std::string::npos) line.resize(end);
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, '&');  // row label
    std::uint32_t col = 0;
    while (std::getline(cells, cell, '&')) {
      if (!cell.empty()) p.add_term({col, row, 0}, BigInt(cell));
      ++col;
    }
    ++row;
  }
  return p;
}

namespace detail {

// Published tables of M^pm_2..4 and M^D_2..4, copied verbatim.

inline constexpr std::string_view kTableBC2 = R"(1&1\\
t&&1&1&1\\
t^2&&1&1&1\\
t^3&&&&&1\\
)";

inline constexpr std::string_view kTableBC3 = R"(1&1\\
t&&1&1&1&1&1\\
t^2&&1&2&2&2&2&1&1\\
t^3&&1&1&3&2&2&3&1&1\\
t^4&&&1&1&2&2&2&2&1\\
t^5&&&&&1&1&1&1&1\\
t^6&&&&&&&&&&1\\
)";

inline constexpr std::string_view kTableBC4 = R"(1&1\\
t&&1&1&1&1&1&1&1\\
t^2&&1&2&2&3&3&3&3&2&2&1&1\\
t^3&&1&2&4&4&6&6&6&6&5&4&2&2\\
t^4&&1&2&4&6&7&8&9&9&8&7&5&3&2&1\\
t^5&&&1&3&5&7&9&10&12&10&9&7&5&3&1\\
t^6&&&1&2&3&5&7&8&9&9&8&7&6&4&2&1\\
t^7&&&&&2&2&4&5&6&6&6&6&4&4&2&1\\
t^8&&&&&&1&1&2&2&3&3&3&3&2&2&1\\
t^9&&&&&&&&&&1&1&1&1&1&1&1\\
t^{10}&&&&&&&&&&&&&&&&&1\\
)";

inline constexpr std::string_view kTableD2 = R"(1&1\\
t&&1&\\
t^2&&1&\\
t^3&&&1\\
)";

inline constexpr std::string_view kTableD3 = R"(1&1\\
t&&1&1\\
t^2&&1&1&1&1&1\\
t^3&&1&1&2&1&1&1\\
t^4&&&1&2&2&1\\
t^5&&&1&1&1\\
)";

inline constexpr std::string_view kTableD4 = R"(1&1\\
t&&1&1&1\\
t^2&&1&2&1&1&1&1&2&1&1\\
t^3&&1&1&3&3&4&4&3&3&1&1\\
t^4&&1&2&3&4&5&6&6&5&3&1\\
t^5&&&1&3&6&7&8&7&6&3&1\\
t^6&&&1&3&5&6&6&5&4&3&2&1\\
t^7&&&1&1&3&3&4&4&3&3&1&1\\
t^8&&&&1&1&2&1&1&1&1&2&1\\
t^9&&&&&&&&&&1&1&1\\
t^{10}&&&&&&&&&&&&&1\\
)";

}  // namespace detail

/// The published M^pm_d (BC) and M^D_d (D) for d = 1..4.
inline MultiPoly reference_table(Family fam, unsigned d) {
  if (fam == Family::BC) {
    switch (d) {
      case 1: return one() + q_pow(1) * t_pow(1);
      case 2: return parse_coefficient_table(detail::kTableBC2);
      case 3: return parse_coefficient_table(detail::kTableBC3);
      case 4: return parse_coefficient_table(detail::kTableBC4);
      default: break;
    }
  }
  if (fam == Family::D) {
    switch (d) {
      case 1: return one();
      case 2: return parse_coefficient_table(detail::kTableD2);
      case 3: return parse_coefficient_table(detail::kTableD3);
      case 4: return parse_coefficient_table(detail::kTableD4);
      default: break;
    }
  }
  throw std::invalid_argument("reference_table: no published table for " + family_name(fam) + std::to_string(d));
}

}  // namespace wm
