#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pcg_paradox/pcg.hpp"
#include "pcg_paradox/state.hpp"

namespace pcg_paradox {

enum class MagicKind { Square2, Square3, Square4, Cube2 };

constexpr std::string_view to_string(MagicKind k) noexcept {
  switch (k) {
    case MagicKind::Square2: return "Square2";
    case MagicKind::Square3: return "Square3";
    case MagicKind::Square4: return "Square4";
    case MagicKind::Cube2: return "Cube2";
  }
  return "?";
}

/// Grid cells are numbered left to right, top to bottom (cube: layer by layer).
struct MagicSquareConfig {
  MagicKind kind = MagicKind::Square2;
  bool augmented = false;  // adds the XOR-of-everything constraint (Square3/Square4 only)
};

namespace detail {

inline std::vector<std::vector<int>> grid_lines(int side) {
  std::vector<std::vector<int>> lines;
  for (int r = 0; r < side; ++r) {
    std::vector<int> row;
    for (int c = 0; c < side; ++c) row.push_back(r * side + c + 1);
    lines.push_back(row);
  }
  for (int c = 0; c < side; ++c) {
    std::vector<int> col;
    for (int r = 0; r < side; ++r) col.push_back(r * side + c + 1);
    lines.push_back(col);
  }
  std::vector<int> diag, anti;
  for (int k = 0; k < side; ++k) {
    diag.push_back(k * side + k + 1);
    anti.push_back(k * side + (side - 1 - k) + 1);
  }
  lines.push_back(diag);
  lines.push_back(anti);
  return lines;
}

}  // namespace detail

/// Constraint lines of the requested magic square as red edges. Rows,
/// columns and both diagonals must each have odd parity.
///
/// The graph is built with Pcg::relaxed: the augmented 4x4 constraint
/// {1,4,6,7,10,11,13,16} contains both diagonals, which the strict PCG
/// union rule forbids. Run validate_pcg on the result to check strictness.
inline Pcg magic_square_graph(MagicSquareConfig cfg) {
  std::vector<Edge> edges;
  auto add = [&edges](std::vector<int> v) { edges.push_back({std::move(v), Weight::R}); };
  int n = 0;
  switch (cfg.kind) {
    case MagicKind::Square2: {
      if (cfg.augmented) throw Error(ErrorCode::AugmentedUnsupported, "2x2 square has no augmented form");
      n = 4;
      // rows, columns, diagonals: every pair of the four cells
      for (auto line : {std::vector<int>{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}, {2, 3}}) add(line);
      break;
    }
    case MagicKind::Square3: {
      n = 9;
      for (auto& line : detail::grid_lines(3)) add(line);
      if (cfg.augmented) add({1, 3, 7, 9});
      break;
    }
    case MagicKind::Square4: {
      n = 16;
      for (auto& line : detail::grid_lines(4)) add(line);
      if (cfg.augmented) add({1, 4, 6, 7, 10, 11, 13, 16});
      break;
    }
    case MagicKind::Cube2: {
      if (cfg.augmented) throw Error(ErrorCode::AugmentedUnsupported, "2x2x2 cube has no augmented form");
      n = 8;
      for (int a = 1; a <= 8; ++a) {
        for (int b = a + 1; b <= 8; ++b) add({a, b});
      }
      break;
    }
  }
  return Pcg::relaxed(n, std::move(edges));
}

struct MagicSquare {
  MagicSquareConfig config;
  Pcg pcg;
  StateVector state;
};

inline MagicSquare magic_square_pcg(MagicSquareConfig cfg) {
  auto pcg = magic_square_graph(cfg);
  auto state = build_pcg_state(pcg);
  return {cfg, std::move(pcg), std::move(state)};
}

inline std::vector<MagicSquareConfig> all_magic_configs() {
  return {{MagicKind::Square2, false}, {MagicKind::Square3, false}, {MagicKind::Square3, true},
          {MagicKind::Square4, false}, {MagicKind::Square4, true},  {MagicKind::Cube2, false}};
}

}  // namespace pcg_paradox
