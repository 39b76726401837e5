#pragma once

#include <string>
#include <vector>

#include "tileforge/cofinite.hpp"
#include "tileforge/solver.hpp"

namespace tileforge {

enum class RenderFormat { kAscii, kSvg };

struct RenderSpec {
  RenderFormat format = RenderFormat::kAscii;
  int cell_px = 16;
};

struct RenderItem {
  std::string name;
  Region cells;
};

std::vector<RenderItem> render_items(const Tileset& ts, const Tiling& t);
std::vector<RenderItem> render_items(const std::vector<Piece>& pieces, const Box& clip);

// ascii: tile-name initials, top row first, '.' for uncovered cells.
// svg: one path per item, filled by a hash of the tile name.
std::string render(const std::vector<RenderItem>& items, const RenderSpec& spec);

std::uint32_t fnv1a(const std::string& s);

}  // namespace tileforge
