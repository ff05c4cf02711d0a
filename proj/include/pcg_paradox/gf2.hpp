#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcg_paradox/pcg.hpp"

namespace pcg_paradox {

/// Dense bit matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return bits_[r * words_ + c / 64] >> (c % 64) & 1; }

  void set(std::size_t r, std::size_t c, bool value) {
    auto& w = bits_[r * words_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = value ? (w | bit) : (w & ~bit);
  }

  void xor_row_into(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < words_; ++k) bits_[dst * words_ + k] ^= bits_[src * words_ + k];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < words_; ++k) std::swap(bits_[a * words_ + k], bits_[b * words_ + k]);
  }

  bool row_is_zero(std::size_t r) const {
    for (std::size_t k = 0; k < words_; ++k) {
      if (bits_[r * words_ + k]) return false;
    }
    return true;
  }

  /// Appends one column on the right.
  Gf2Matrix with_column(const std::vector<std::uint8_t>& column) const {
    Gf2Matrix out(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, get(r, c));
      out.set(r, cols_, column.at(r) != 0);
    }
    return out;
  }

  /// One line per row of 0/1 characters; `separator_before` inserts '|'
  /// ahead of that column.
  std::vector<std::string> to_lines(std::optional<std::size_t> separator_before = std::nullopt) const {
    std::vector<std::string> lines;
    for (std::size_t r = 0; r < rows_; ++r) {
      std::string line;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (separator_before && *separator_before == c) line += '|';
        line += get(r, c) ? '1' : '0';
      }
      lines.push_back(std::move(line));
    }
    return lines;
  }

  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows) {
    Gf2Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c] != 0);
    }
    return m;
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct Echelon {
  Gf2Matrix reduced;  // reduced row-echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination. Pivot rule: scan columns left to right, take the
/// lowest-index unused row with a 1 in that column.
inline Echelon gf2_eliminate(Gf2Matrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != row && m.get(r, col)) m.xor_row_into(r, row);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

enum class HardyFamily { RankEqual, RankDiffer };

constexpr std::string_view to_string(HardyFamily f) noexcept {
  return f == HardyFamily::RankEqual ? "RankEqual" : "RankDiffer";
}

/// Hardy matrix A (edges x vertices), right-hand side Theta and both ranks.
struct HardySystem {
  Gf2Matrix a;
  std::vector<std::uint8_t> theta_vec;  // 1 for red edges
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;

  Gf2Matrix augmented() const { return a.with_column(theta_vec); }

  /// A|Theta as 0/1 rows with a separator column.
  std::vector<std::string> dump() const { return augmented().to_lines(a.cols()); }
};

inline HardySystem build_hardy_system(const Pcg& pcg) {
  HardySystem sys;
  sys.a = Gf2Matrix(pcg.p(), static_cast<std::size_t>(pcg.n()));
  for (std::size_t i = 0; i < pcg.p(); ++i) {
    const auto& e = pcg.edge(i);
    for (int v : e.vertices) sys.a.set(i, static_cast<std::size_t>(v - 1), true);
    // Theta_i = (theta_i + |theta_i|) / 2
    sys.theta_vec.push_back(static_cast<std::uint8_t>((theta(e.weight) + 1) / 2));
  }
  sys.rank_a = gf2_eliminate(sys.a).rank;
  sys.rank_b = gf2_eliminate(sys.augmented()).rank;
  return sys;
}

struct Colorability {
  bool uncolorable = false;
  HardyFamily family = HardyFamily::RankEqual;
};

inline Colorability is_uncolorable(const Pcg& pcg) {
  const auto sys = build_hardy_system(pcg);
  const bool differ = sys.rank_a != sys.rank_b;
  return {differ, differ ? HardyFamily::RankDiffer : HardyFamily::RankEqual};
}

/// Solves A x = Theta with x_v = 1 for red. Free vertices are green.
inline std::optional<Coloring> solve_coloring(const Pcg& pcg) {
  const auto sys = build_hardy_system(pcg);
  const auto n = static_cast<std::size_t>(pcg.n());
  const auto ech = gf2_eliminate(sys.augmented());
  std::uint64_t red = 0;
  for (std::size_t r = 0; r < ech.rank; ++r) {
    const std::size_t col = ech.pivot_cols[r];
    if (col == n) return std::nullopt;  // 0 = 1
    if (ech.reduced.get(r, n)) red |= std::uint64_t{1} << col;
  }
  return Coloring::from_red_mask(pcg.n(), red);
}

}  // namespace pcg_paradox
