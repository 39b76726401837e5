#include "tileforge/core.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tileforge {

std::string to_string(Cell c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

char side_char(Side s) { return "NESW"[static_cast<int>(s)]; }

Side parse_side(const std::string& s) {
  if (s == "N") return Side::N;
  if (s == "E") return Side::E;
  if (s == "S") return Side::S;
  if (s == "W") return Side::W;
  throw Error("bad side '" + s + "'");
}

Region::Region(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Region::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

Region Region::translated(Cell by) const {
  Region out;
  out.cells_.reserve(cells_.size());
  for (Cell c : cells_) out.cells_.push_back(c + by);
  return out;  // translation preserves order
}

Region Region::united(const Region& o) const {
  Region out;
  std::set_union(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
                 std::back_inserter(out.cells_));
  return out;
}

Region Region::minus(const Region& o) const {
  Region out;
  std::set_difference(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
                      std::back_inserter(out.cells_));
  return out;
}

bool Region::intersects(const Region& o) const {
  auto a = cells_.begin();
  auto b = o.cells_.begin();
  while (a != cells_.end() && b != o.cells_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

bool Region::includes(const Region& o) const {
  return std::includes(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end());
}

Region Box::cells() const {
  std::vector<Cell> out;
  for (int x = x0; x <= x1; ++x)
    for (int y = y0; y <= y1; ++y) out.push_back({x, y});
  return Region(std::move(out));
}

Box bounding_box(const Region& r) {
  if (r.empty()) return {};
  Box b{r.cells().front().x, r.cells().front().y, r.cells().back().x, r.cells().front().y};
  for (Cell c : r) {
    b.y0 = std::min(b.y0, c.y);
    b.y1 = std::max(b.y1, c.y);
  }
  return b;
}

Region rect_region(Rect r, Cell at) { return Box{at.x, at.y, at.x + r.w - 1, at.y + r.h - 1}.cells(); }

Normalized normalize_region(const std::vector<Cell>& cells) {
  Region r(cells);
  if (r.empty()) return {r, {0, 0}};
  Box b = bounding_box(r);
  Cell anchor{b.x0, b.y0};
  return {r.translated(-anchor), anchor};
}

namespace {

// Flood fill over `inside(c)` cells from `start`, 4-neighborhood.
template <typename Pred>
std::size_t flood(Cell start, Pred inside, std::set<Cell>& seen) {
  std::deque<Cell> queue{start};
  seen.insert(start);
  std::size_t n = 0;
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop_front();
    ++n;
    for (Side s : kSides) {
      Cell d = c + step(s);
      if (inside(d) && seen.insert(d).second) queue.push_back(d);
    }
  }
  return n;
}

}  // namespace

bool is_connected(const Region& r) {
  if (r.empty()) return true;
  std::set<Cell> seen;
  return flood(r.cells().front(), [&](Cell c) { return r.contains(c); }, seen) == r.size();
}

bool is_simply_connected(const Region& r) {
  if (r.empty()) throw Error("empty");
  if (!is_connected(r)) return false;
  // Every empty cell of the padded box must reach the padding ring.
  Box pad = bounding_box(r).expanded(1, 1);
  std::set<Cell> seen;
  std::size_t outside = flood({pad.x0, pad.y0},
                              [&](Cell c) { return pad.contains(c) && !r.contains(c); }, seen);
  std::size_t empty_cells =
      static_cast<std::size_t>(pad.width()) * static_cast<std::size_t>(pad.height()) - r.size();
  return outside == empty_cells;
}

Polyomino::Polyomino(const std::vector<Cell>& cells) {
  auto n = normalize_region(cells);
  if (n.region.empty()) throw Error("empty polyomino");
  region_ = std::move(n.region);
}

Rect Polyomino::bounds() const {
  Box b = bounding_box(region_);
  return {b.width(), b.height()};
}

bool Polyomino::is_rectangle() const {
  Rect b = bounds();
  return static_cast<std::size_t>(b.area()) == area();
}

Polyomino rect_polyomino(Rect r) { return Polyomino(rect_region(r)); }

Cell apply_isometry(int o, Cell c) {
  if (o >= 4) c.x = -c.x;
  for (int i = 0; i < o % 4; ++i) c = {-c.y, c.x};
  return c;
}

Side apply_isometry(int o, Side s) {
  int v = static_cast<int>(s);
  if (o >= 4 && (v == 1 || v == 3)) v = 4 - v;
  v = (v + 3 * (o % 4)) % 4;
  return static_cast<Side>(v);
}

}  // namespace tileforge
