#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wm/signed_perm.hpp"

namespace wm {

enum class RotheType { A, C, B, D };

inline RotheType parse_rothe_type(std::string_view s) {
  if (s == "A") return RotheType::A;
  if (s == "C") return RotheType::C;
  if (s == "B") return RotheType::B;
  if (s == "D") return RotheType::D;
  throw std::invalid_argument("unknown diagram type '" + std::string(s) + "' (expected A, C, B or D)");
}

enum class CellKind { zero, bullet, cross, tensor, perp };

struct RotheCell {
  CellKind kind = CellKind::zero;
  unsigned tag = 0;  // row index carried by a tensor

  friend bool operator==(const RotheCell&, const RotheCell&) = default;
};

/// Cell grid of a length-permutation: rows are the basis vectors f_1..f_d,
/// columns the coordinate labels in <_pm order (with 0 in the middle for B).
/// Crosses and tensors are the free coefficients; perps are forced by
/// orthogonality or isotropy.
class RotheDiagram {
 public:
  RotheDiagram(const SignedPerm& sigma, RotheType type) : sigma_(sigma), type_(type) {
    const int d = static_cast<int>(sigma.rank());
    if (type == RotheType::A && !sigma.is_unsigned()) {
      throw std::invalid_argument("rothe_diagram: " + sigma.to_string() + " is not an ordinary permutation");
    }
    if (type == RotheType::D && !sigma.is_even()) {
      throw std::invalid_argument("rothe_diagram: " + sigma.to_string() + " has an odd number of signs");
    }
    for (int l = 1; l <= d; ++l) columns_.push_back(l);
    if (type == RotheType::B) columns_.push_back(0);
    if (type != RotheType::A) {
      for (int l = -d; l <= -1; ++l) columns_.push_back(l);
    }

    std::map<int, std::size_t> col_of;
    for (std::size_t c = 0; c < columns_.size(); ++c) col_of[columns_[c]] = c;
    // row index (1-based) holding +-label
    std::map<int, int> row_of_value;
    for (int i = 1; i <= d; ++i) row_of_value[sigma(i)] = i;

    cells_.assign(static_cast<std::size_t>(d), std::vector<RotheCell>(columns_.size()));
    for (int i = 1; i <= d; ++i) {
      const int s = sigma(i);
      const std::size_t lead = col_of.at(s);
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        const int l = columns_[c];
        RotheCell& cell = cells_[i - 1][c];
        const auto pos = row_of_value.find(l);
        const auto neg = row_of_value.find(-l);
        const int row_pos = pos == row_of_value.end() ? 0 : pos->second;  // l = sigma(row_pos)
        const int row_neg = (l == 0 || neg == row_of_value.end()) ? 0 : neg->second;  // l = -sigma(row_neg)
        if (l == s) {
          cell.kind = CellKind::bullet;
        } else if (row_pos != 0 && row_pos < i) {
          cell.kind = CellKind::zero;
        } else if (row_neg != 0 && row_neg < i) {
          cell.kind = CellKind::perp;
        } else if ((type == RotheType::B || type == RotheType::D) && row_neg == i) {
          cell.kind = CellKind::perp;
        } else if (c < lead) {
          if (row_pos > i) {
            cell.kind = CellKind::cross;
          } else {
            cell.kind = CellKind::tensor;
            cell.tag = tensor_tag(i, s, l, row_neg);
          }
        }
      }
    }
  }

  const SignedPerm& perm() const noexcept { return sigma_; }
  RotheType type() const noexcept { return type_; }
  const std::vector<int>& column_labels() const noexcept { return columns_; }
  const RotheCell& cell(std::size_t row, std::size_t col) const { return cells_.at(row).at(col); }
  std::size_t rows() const noexcept { return cells_.size(); }

  unsigned count(CellKind k) const {
    unsigned n = 0;
    for (const auto& row : cells_) {
      for (const auto& c : row) n += c.kind == k ? 1 : 0;
    }
    return n;
  }

  /// Number of tensors per tag; tags with no tensor are omitted.
  std::map<unsigned, unsigned> tensor_counts() const {
    std::map<unsigned, unsigned> out;
    for (const auto& row : cells_) {
      for (const auto& c : row) {
        if (c.kind == CellKind::tensor) ++out[c.tag];
      }
    }
    return out;
  }

  std::string to_text() const {
    std::vector<std::string> header{"i\\s"};
    for (int l : columns_) header.push_back(std::to_string(l));
    std::vector<std::vector<std::string>> grid{header};
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      std::vector<std::string> line{std::to_string(r + 1)};
      for (const auto& c : cells_[r]) line.push_back(symbol(c));
      grid.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : grid) {
      for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], display_width(line[c]));
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < grid.size(); ++r) {
      for (std::size_t c = 0; c < grid[r].size(); ++c) {
        if (c > 0) out << (c == 1 ? " | " : " ");
        out << grid[r][c] << std::string(width[c] - display_width(grid[r][c]), ' ');
      }
      out << '\n';
      if (r == 0) {
        std::size_t total = width[0] + 3;
        for (std::size_t c = 1; c < width.size(); ++c) total += width[c] + 1;
        out << std::string(total - 1, '-') << '\n';
      }
    }
    return out.str();
  }

  std::string to_latex() const {
    const std::size_t d = cells_.size();
    std::ostringstream out;
    out << "\\begin{array}{c||";
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      out << 'c' << (c + 1 == d && type_ != RotheType::A ? "||" : "|");
    }
    out << "}\ni\\backslash \\sigma(i)";
    for (int l : columns_) out << '&' << l;
    out << "\\\\\n\\hline\\hline\n";
    for (std::size_t r = 0; r < d; ++r) {
      out << r + 1;
      for (const auto& c : cells_[r]) out << '&' << latex_symbol(c);
      out << "\\\\\n\\hline\n";
    }
    out << "\\end{array}\n";
    return out.str();
  }

 private:
  // Which basis vector's orthogonality relation the free coefficient belongs to.
  static unsigned tensor_tag(int i, int s, int l, int row_neg) {
    if (s > 0) return static_cast<unsigned>(row_neg);
    if (l <= 0) return static_cast<unsigned>(i);
    return static_cast<unsigned>(l >= -s ? i : row_neg);
  }

  static std::string symbol(const RotheCell& c) {
    switch (c.kind) {
      case CellKind::zero: return "";
      case CellKind::bullet: return "\u25CF";
      case CellKind::cross: return "\u00D7";
      case CellKind::tensor: return "\u2297" + std::to_string(c.tag);
      case CellKind::perp: return "\u22A5";
    }
    return "?";
  }

  static std::string latex_symbol(const RotheCell& c) {
    switch (c.kind) {
      case CellKind::zero: return "";
      case CellKind::bullet: return "\\bullet";
      case CellKind::cross: return "\\times";
      case CellKind::tensor: return "\\otimes_" + std::to_string(c.tag);
      case CellKind::perp: return "\\perp";
    }
    return "?";
  }

  static std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s) w += (ch & 0xC0U) != 0x80U ? 1 : 0;
    return w;
  }

  SignedPerm sigma_;
  RotheType type_;
  std::vector<int> columns_;
  std::vector<std::vector<RotheCell>> cells_;
};

inline RotheDiagram rothe_diagram(const SignedPerm& sigma, RotheType type) { return RotheDiagram(sigma, type); }

}  // namespace wm
