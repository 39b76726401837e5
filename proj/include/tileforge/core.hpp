#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tileforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer lattice cell. y grows upward. Cells order lexicographically by
// (x, y); every "least cell" in the library refers to this order.
struct Cell {
  int x = 0;
  int y = 0;

  auto operator<=>(const Cell&) const = default;

  Cell operator+(Cell o) const { return {x + o.x, y + o.y}; }
  Cell operator-(Cell o) const { return {x - o.x, y - o.y}; }
  Cell operator-() const { return {-x, -y}; }
};

std::string to_string(Cell c);

enum class Side : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline constexpr Side kSides[4] = {Side::N, Side::E, Side::S, Side::W};

inline Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) % 4); }
inline Cell step(Side s) {
  switch (s) {
    case Side::N: return {0, 1};
    case Side::E: return {1, 0};
    case Side::S: return {0, -1};
    case Side::W: return {-1, 0};
  }
  return {};
}
char side_char(Side s);
Side parse_side(const std::string& s);

// One unit edge of a cell, named from the cell's point of view.
struct Edge {
  Cell cell;
  Side side = Side::N;

  auto operator<=>(const Edge&) const = default;

  Cell neighbor() const { return cell + step(side); }
  // The same geometric edge seen from the other cell.
  Edge mirrored() const { return {neighbor(), opposite(side)}; }
};

// Finite set of cells, stored sorted and deduplicated.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(Cell c) const;

  Region translated(Cell by) const;
  Region united(const Region& o) const;
  Region minus(const Region& o) const;
  bool intersects(const Region& o) const;
  bool includes(const Region& o) const;

  auto operator<=>(const Region&) const = default;
  bool operator==(const Region&) const = default;

  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

 private:
  std::vector<Cell> cells_;
};

struct Rect {
  int w = 1;
  int h = 1;

  auto operator<=>(const Rect&) const = default;
  int area() const { return w * h; }
};

// Axis-aligned inclusive box of cells.
struct Box {
  int x0 = 0, y0 = 0, x1 = -1, y1 = -1;

  bool empty() const { return x1 < x0 || y1 < y0; }
  int width() const { return empty() ? 0 : x1 - x0 + 1; }
  int height() const { return empty() ? 0 : y1 - y0 + 1; }
  bool contains(Cell c) const { return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1; }
  Box expanded(int dx, int dy) const { return {x0 - dx, y0 - dy, x1 + dx, y1 + dy}; }
  Region cells() const;
  bool operator==(const Box&) const = default;
};

Box bounding_box(const Region& r);
Region rect_region(Rect r, Cell at = {});

struct Normalized {
  Region region;
  Cell anchor;  // translation that was subtracted
};

// Merges duplicates and translates so min x = min y = 0.
Normalized normalize_region(const std::vector<Cell>& cells);

bool is_connected(const Region& r);
// Union of closed unit squares is 4-connected and its complement is
// connected. Throws Error("empty") on an empty region.
bool is_simply_connected(const Region& r);

// Nonempty normalized cell set.
class Polyomino {
 public:
  Polyomino() = default;
  // Normalizes the given cells; throws Error on an empty set.
  explicit Polyomino(const std::vector<Cell>& cells);
  explicit Polyomino(const Region& r) : Polyomino(r.cells()) {}

  const Region& region() const { return region_; }
  const std::vector<Cell>& cells() const { return region_.cells(); }
  std::size_t area() const { return region_.size(); }
  bool simply_connected() const { return is_simply_connected(region_); }
  // Matches a full w x h rectangle.
  bool is_rectangle() const;
  Rect bounds() const;

  auto operator<=>(const Polyomino&) const = default;
  bool operator==(const Polyomino&) const = default;

 private:
  Region region_;
};

Polyomino rect_polyomino(Rect r);

// The eight lattice isometries. Index o = (o >= 4 ? reflect x : id) then
// rotate (o % 4) quarter turns counterclockwise.
inline constexpr int kIsometryCount = 8;
Cell apply_isometry(int o, Cell c);
Side apply_isometry(int o, Side s);

}  // namespace tileforge
