#include "tileforge/wang.hpp"

#include <algorithm>
#include <set>

namespace tileforge {

Color::Color(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw Error("empty color name");
  // "(a,b)" keeps its two components.
  if (name_.size() >= 5 && name_.front() == '(' && name_.back() == ')') {
    std::string inner = name_.substr(1, name_.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        parts_ = {inner.substr(0, i), inner.substr(i + 1)};
        break;
      }
    }
  }
}

Color Color::pair(const std::string& a, const std::string& b) { return Color("(" + a + "," + b + ")"); }

Color directional_white(Side facing) { return Color(std::string("white-") + side_char(facing)); }

bool is_directional_white(const Color& c) {
  const auto& n = c.name();
  return n.size() == 7 && n.rfind("white-", 0) == 0;
}

const Color& WangSquare::on(Side s) const {
  switch (s) {
    case Side::N: return north;
    case Side::E: return east;
    case Side::S: return south;
    case Side::W: return west;
  }
  return north;
}

GenWangTile to_genwang(const WangSquare& w) {
  GenWangTile g{Polyomino(std::vector<Cell>{{0, 0}}), {}};
  for (Side s : kSides) g.edge_colors[{{0, 0}, s}] = w.on(s);
  return g;
}

WangSquare to_wang_square(const GenWangTile& g) {
  if (g.shape.area() != 1) throw Error("not a single-cell tile");
  auto get = [&](Side s) {
    auto it = g.edge_colors.find({{0, 0}, s});
    if (it == g.edge_colors.end()) throw Error("uncovered edge");
    return it->second;
  };
  return {get(Side::N), get(Side::E), get(Side::S), get(Side::W)};
}

DecoratedRegion DecoratedRegion::uniform(Region region, const Color& c) {
  DecoratedRegion d{std::move(region), {}};
  for (const Edge& e : region_boundary(d.region)) d.constraints[e] = c;
  return d;
}

std::vector<Edge> region_boundary(const Region& r) {
  std::vector<Edge> out;
  for (Cell c : r)
    for (Side s : kSides)
      if (!r.contains(c + step(s))) out.push_back({c, s});
  return out;  // cells sorted, sides in enum order
}

std::vector<Edge> boundary_edges(const Polyomino& shape) { return region_boundary(shape.region()); }

std::string species_name(Species s) {
  switch (s) {
    case Species::kPolyomino: return "polyomino";
    case Species::kWang: return "wang";
    case Species::kGenWang: return "genwang";
  }
  return "?";
}

Species parse_species(const std::string& s) {
  if (s == "polyomino") return Species::kPolyomino;
  if (s == "wang") return Species::kWang;
  if (s == "genwang") return Species::kGenWang;
  throw Error("unknown tileset kind '" + s + "'");
}

Species NamedTile::species() const {
  if (std::holds_alternative<Polyomino>(body)) return Species::kPolyomino;
  if (std::holds_alternative<WangSquare>(body)) return Species::kWang;
  return Species::kGenWang;
}

Polyomino NamedTile::shape() const {
  if (auto p = std::get_if<Polyomino>(&body)) return *p;
  if (auto g = std::get_if<GenWangTile>(&body)) return g->shape;
  return Polyomino(std::vector<Cell>{{0, 0}});
}

EdgeColors NamedTile::colors() const {
  if (auto w = std::get_if<WangSquare>(&body)) return to_genwang(*w).edge_colors;
  if (auto g = std::get_if<GenWangTile>(&body)) return g->edge_colors;
  return {};
}

const NamedTile* Tileset::find(const std::string& name) const {
  for (const auto& t : tiles)
    if (t.name == name) return &t;
  return nullptr;
}

std::size_t Tileset::max_tile_width() const {
  std::size_t m = 0;
  for (const auto& t : tiles) m = std::max<std::size_t>(m, t.shape().bounds().w);
  return m;
}

std::size_t Tileset::max_tile_height() const {
  std::size_t m = 0;
  for (const auto& t : tiles) m = std::max<std::size_t>(m, t.shape().bounds().h);
  return m;
}

Tileset polyomino_tileset(const std::vector<std::pair<std::string, Polyomino>>& tiles) {
  Tileset ts{Species::kPolyomino, {}};
  for (const auto& [name, p] : tiles) ts.tiles.push_back({name, p});
  return ts;
}

std::vector<std::string> validate_tileset(const Tileset& ts) {
  std::vector<std::string> out;
  if (ts.tiles.empty()) out.push_back("empty tileset");
  std::set<std::string> names;
  for (const auto& t : ts.tiles) {
    if (t.name.empty()) out.push_back("empty tile name");
    if (!names.insert(t.name).second) out.push_back("duplicate name: " + t.name);
    if (t.species() != ts.species) {
      out.push_back("species mismatch: " + t.name);
      continue;
    }
    if (!t.shape().simply_connected()) out.push_back("not simply connected: " + t.name);
    if (auto g = std::get_if<GenWangTile>(&t.body)) {
      auto edges = boundary_edges(g->shape);
      for (const Edge& e : edges)
        if (!g->edge_colors.count(e)) {
          out.push_back("uncovered edge: " + t.name + " " + to_string(e.cell) + side_char(e.side));
          break;
        }
      for (const auto& [e, c] : g->edge_colors)
        if (!std::binary_search(edges.begin(), edges.end(), e)) {
          out.push_back("color on non-boundary edge: " + t.name);
          break;
        }
    }
  }
  return out;
}

std::vector<Color> tileset_colors(const Tileset& ts) {
  std::vector<Color> out;
  std::set<std::string> seen;
  auto add = [&](const Color& c) {
    if (seen.insert(c.name()).second) out.push_back(c);
  };
  for (const auto& t : ts.tiles) {
    if (auto w = std::get_if<WangSquare>(&t.body)) {
      for (Side s : kSides) add(w->on(s));
    } else if (auto g = std::get_if<GenWangTile>(&t.body)) {
      for (const Edge& e : boundary_edges(g->shape)) {
        auto it = g->edge_colors.find(e);
        if (it != g->edge_colors.end()) add(it->second);
      }
    }
  }
  return out;
}

}  // namespace tileforge
