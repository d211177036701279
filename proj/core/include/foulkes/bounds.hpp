#pragma once

namespace foulkes {

// Resource bounds. Every potentially explosive operation checks one of
// these before starting and throws BoundError past it. The defaults are
// sized for interactive desk use; the CLI can raise them explicitly.
struct Bounds {
  int plethysm = 14;    // largest ab for the power-sum plethysm route
  int monomial = 8;     // largest ab for the brute monomial plethysm
  int oracle = 12;      // largest ab for block-system enumeration
  int trace = 8;        // largest ab for a full bipartite oracle trace
  int brute_char = 7;   // largest b for Specht characters by matrix trace
  int char_table = 16;  // largest n for a full character table
};

inline const Bounds kDefaultBounds{};

}  // namespace foulkes
