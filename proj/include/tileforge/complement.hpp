#pragma once

#include <string>
#include <vector>

#include "tileforge/reduce.hpp"
#include "tileforge/solver.hpp"
#include "tileforge/turing.hpp"

namespace tileforge {

// Emulation tiles plus I and U, and the input bar cut out of the plane.
struct CttInstance {
  Tileset tileset;
  DecoratedRegion hole;  // cells (0,0)..(r-1,0); constraints seen from the hole
};

// An empty word is read as the single blank letter.
CttInstance build_ctt_instance(const TuringMachine& m, std::vector<std::string> word);

struct CttPolyomino {
  Encoding encoding;
  Region hole;  // encoded bar; tiles go around it
};

CttPolyomino ctt_polyomino_form(const CttInstance& inst);

// Packing of an n x n window around the hole: must = window \ hole, tiles may
// spill outward, and the hole's constraints bind the tile sides touching it.
PackingTarget cofinite_window(const Tileset& ts, const DecoratedRegion& hole, int n);

struct RefuteResult {
  bool refuted = false;
  int n = 0;  // refuting window, or max_n when unknown
  bool budget_exceeded = false;  // some window ran out of budget
};

RefuteResult cofinite_refute_bounded(const Tileset& ts, const DecoratedRegion& hole, int max_n,
                                     std::uint64_t node_budget = kDefaultNodeBudget);
RefuteResult cofinite_refute_bounded(const Tileset& ts, const Region& hole, int max_n,
                                     std::uint64_t node_budget = kDefaultNodeBudget);

Region dilate(const Region& r, int k);

struct FixedHoleResult {
  Tileset tiles;  // polyominoes, one per Wang square of ts + {hole}
  std::string punctured;
  ReductionParams params;
  std::map<std::string, Cell> anchors;  // block anchors after dilation (multiples of 2)
};

// Polyomino ts and a simply connected hole. The hole's squares are named
// after tile "G" (renamed on a clash); its least cell's square loses one cell.
FixedHoleResult fixed_hole_transform(const Tileset& ts, const Region& hole);

struct FramePieces {
  int N = 0;
  Box frame;  // N x N, hole two cells in from every side
  Region a;   // two left columns plus pockets, with notches
  Region b;
};

// Splits frame \ hole into two simply connected pieces along the line just
// left of the hole's leftmost column. Throws Error when frame \ hole is not
// connected or no split is found.
FramePieces split_frame(const Region& hole);

// Scales a [1x1]-hole polyomino instance by N and adds both frame pieces.
Tileset general_hole_transform(const Tileset& unit_hole_ts, const Region& hole);

}  // namespace tileforge
