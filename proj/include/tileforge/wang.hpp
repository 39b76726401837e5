#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tileforge/core.hpp"

namespace tileforge {

// Edge label. Compound colors such as "(x,t)" keep their components so
// decoders can read them back; equality is by rendered name.
class Color {
 public:
  Color() = default;
  Color(std::string name);  // NOLINT: implicit from plain names is convenient
  Color(const char* name) : Color(std::string(name)) {}

  static Color pair(const std::string& a, const std::string& b);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& parts() const { return parts_; }
  bool compound() const { return parts_.size() == 2; }

  bool operator==(const Color& o) const { return name_ == o.name_; }
  auto operator<=>(const Color& o) const { return name_ <=> o.name_; }

 private:
  std::string name_;
  std::vector<std::string> parts_;
};

inline const Color kWhite{"white"};
// Directional whites: the color of a white edge facing the given side.
Color directional_white(Side facing);
bool is_directional_white(const Color& c);

struct WangSquare {
  Color north, east, south, west;

  const Color& on(Side s) const;
  bool operator==(const WangSquare&) const = default;
};

using EdgeColors = std::map<Edge, Color>;

struct GenWangTile {
  Polyomino shape;
  EdgeColors edge_colors;

  bool operator==(const GenWangTile&) const = default;
};

GenWangTile to_genwang(const WangSquare& w);
// Inverse of to_genwang; throws Error unless the tile is a single cell.
WangSquare to_wang_square(const GenWangTile& g);

// Region plus boundary edge constraints. An edge missing from the map is Free.
struct DecoratedRegion {
  Region region;
  EdgeColors constraints;

  // Constrains every boundary edge of `region` to `c`.
  static DecoratedRegion uniform(Region region, const Color& c);
  static DecoratedRegion free(Region region) { return {std::move(region), {}}; }
};

// Boundary edges of an arbitrary cell set, in (cell, side) order.
std::vector<Edge> region_boundary(const Region& r);
std::vector<Edge> boundary_edges(const Polyomino& shape);

enum class Species { kPolyomino, kWang, kGenWang };
std::string species_name(Species s);
Species parse_species(const std::string& s);

struct NamedTile {
  std::string name;
  std::variant<Polyomino, WangSquare, GenWangTile> body;

  Species species() const;
  // Shape of the tile (1x1 for Wang squares).
  Polyomino shape() const;
  // Uncolored view for polyominoes: empty map.
  EdgeColors colors() const;
};

struct Tileset {
  Species species = Species::kPolyomino;
  std::vector<NamedTile> tiles;

  const NamedTile* find(const std::string& name) const;
  bool colored() const { return species != Species::kPolyomino; }
  std::size_t max_tile_width() const;
  std::size_t max_tile_height() const;
};

Tileset polyomino_tileset(const std::vector<std::pair<std::string, Polyomino>>& tiles);

// Empty result means ok.
std::vector<std::string> validate_tileset(const Tileset& ts);

// Every color mentioned by the tileset, in first-appearance order
// (tiles in order, edges in boundary order, squares N E S W).
std::vector<Color> tileset_colors(const Tileset& ts);

}  // namespace tileforge
