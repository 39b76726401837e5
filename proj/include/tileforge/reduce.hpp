#pragma once

#include <map>
#include <string>
#include <vector>

#include "tileforge/solver.hpp"
#include "tileforge/wang.hpp"

namespace tileforge {

inline const Color kMono{"mono"};

// Every boundary edge of every tile colored "mono".
Tileset poly_to_genwang(const Tileset& polys);

struct Provenance {
  std::string tile;
  Cell cell;
};

struct SquareSplit {
  Tileset squares;
  std::vector<Provenance> provenance;  // parallel to squares.tiles
};

// One square per tile cell; interior edges get fresh colors used exactly twice.
SquareSplit genwang_to_wangsquares(const Tileset& genwang);

// Tilings across the split, in both directions. Throws Error when square
// placements do not reassemble into whole tiles.
Tiling split_tiling(const Tiling& genwang_tiling, const Tileset& genwang, const SquareSplit& split);
Tiling join_tiling(const Tiling& square_tiling, const Tileset& genwang, const SquareSplit& split);

enum class Profile { kZigzagAll, kFlatWhite };
std::string profile_name(Profile p);
Profile parse_profile(const std::string& s);

struct ReductionParams {
  int m = 1;  // colors carrying a code
  int r = 2;  // bits per side
  int S = 10;  // block side
  Profile profile = Profile::kZigzagAll;

  static ReductionParams for_colors(int m, Profile profile);
};

// Params for a Wang tileset: m counts its colors (white excluded under flat-white).
ReductionParams reduction_params(const Tileset& wang, Profile profile);

// Color -> r-bit code. Bit i (string position i) sits at offset 4 + i from
// the low end of a side.
struct ColorTable {
  std::vector<std::pair<Color, std::string>> entries;

  const std::string& bits(const Color& c) const;
  bool has(const Color& c) const;
};

struct Encoding {
  ReductionParams params;
  ColorTable table;
  Tileset polys;  // same tile names as the Wang squares
  std::map<std::string, Cell> anchors;  // block coordinates of each normalized tile's origin
};

// Cells of the deformed block for one square, in block coordinates ([0,S)^2 before deformation).
Region encode_square(const WangSquare& w, const ColorTable& table, const ReductionParams& params);

Encoding wang_to_poly(const Tileset& wang, const ReductionParams& params);

// Polyomino-level target whose boundary mimics virtual neighbors bearing
// the constraint colors. Free edges are only accepted under flat-white.
Region encode_region(const DecoratedRegion& dr, const Encoding& enc);

enum class Direction { kToPolyomino, kToWang };
Tiling transport_tiling(const Tiling& t, const Encoding& enc, Direction d);

}  // namespace tileforge
