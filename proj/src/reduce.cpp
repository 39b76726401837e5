#include "tileforge/reduce.hpp"

#include <algorithm>
#include <set>

namespace tileforge {

Tileset poly_to_genwang(const Tileset& polys) {
  if (polys.species != Species::kPolyomino) throw Error("expected a polyomino tileset");
  Tileset out{Species::kGenWang, {}};
  for (const auto& t : polys.tiles) {
    Polyomino p = t.shape();
    if (!p.simply_connected()) throw Error("not simply connected: " + t.name);
    GenWangTile g{p, {}};
    for (const Edge& e : boundary_edges(p)) g.edge_colors[e] = kMono;
    out.tiles.push_back({t.name, g});
  }
  return out;
}

namespace {

std::string square_name(const NamedTile& t, Cell c) {
  if (t.shape().area() == 1) return t.name;
  return t.name + "@" + std::to_string(c.x) + "," + std::to_string(c.y);
}

}  // namespace

SquareSplit genwang_to_wangsquares(const Tileset& genwang) {
  if (!genwang.colored()) throw Error("expected a colored tileset");
  std::set<std::string> used;
  for (const Color& c : tileset_colors(genwang)) used.insert(c.name());
  int counter = 0;
  auto fresh = [&] {
    std::string name;
    do name = "~" + std::to_string(counter++);
    while (used.count(name));
    return Color(name);
  };

  SquareSplit out{{Species::kWang, {}}, {}};
  for (const auto& t : genwang.tiles) {
    Polyomino shape = t.shape();
    EdgeColors colors = t.colors();
    for (Cell c : shape.cells())
      for (Side s : {Side::E, Side::N})
        if (shape.region().contains(c + step(s))) {
          Color f = fresh();
          colors[{c, s}] = f;
          colors[Edge{c, s}.mirrored()] = f;
        }
    for (Cell c : shape.cells()) {
      WangSquare w{colors.at({c, Side::N}), colors.at({c, Side::E}), colors.at({c, Side::S}), colors.at({c, Side::W})};
      out.squares.tiles.push_back({square_name(t, c), w});
      out.provenance.push_back({t.name, c});
    }
  }
  return out;
}

Tiling split_tiling(const Tiling& genwang_tiling, const Tileset& genwang, const SquareSplit&) {
  Tiling out;
  for (const auto& p : genwang_tiling.placements) {
    const NamedTile* t = genwang.find(p.tile);
    if (!t) throw Error("unknown tile '" + p.tile + "'");
    if (p.orientation != 0) throw Error("split needs unrotated placements");
    Polyomino shape = t->shape();
    for (Cell c : shape.cells()) out.placements.push_back({square_name(*t, c), p.offset + c, 0});
  }
  return out;
}

Tiling join_tiling(const Tiling& square_tiling, const Tileset& genwang, const SquareSplit& split) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < split.squares.tiles.size(); ++i) index[split.squares.tiles[i].name] = i;
  std::map<Cell, std::string> at;
  for (const auto& p : square_tiling.placements) {
    if (!index.count(p.tile)) throw Error("unknown square '" + p.tile + "'");
    at[p.offset] = p.tile;
  }
  Tiling out;
  std::size_t covered = 0;
  for (const auto& p : square_tiling.placements) {
    const Provenance& prov = split.provenance[index[p.tile]];
    const NamedTile* t = genwang.find(prov.tile);
    Polyomino shape = t->shape();
    if (prov.cell != shape.cells().front()) continue;
    Cell origin = p.offset - prov.cell;
    for (Cell c : shape.cells()) {
      auto it = at.find(origin + c);
      if (it == at.end() || it->second != square_name(*t, c)) throw Error("squares do not reassemble");
    }
    covered += shape.area();
    out.placements.push_back({prov.tile, origin, 0});
  }
  if (covered != square_tiling.placements.size()) throw Error("squares do not reassemble");
  return out;
}

std::string profile_name(Profile p) { return p == Profile::kFlatWhite ? "flat-white" : "zigzag-all"; }

Profile parse_profile(const std::string& s) {
  if (s == "zigzag-all") return Profile::kZigzagAll;
  if (s == "flat-white") return Profile::kFlatWhite;
  throw Error("unknown profile '" + s + "'");
}

ReductionParams ReductionParams::for_colors(int m, Profile profile) {
  if (m < 1) m = 1;
  int r = 1;
  while ((1L << (r - 1)) <= m) ++r;
  return {m, r, r + 8, profile};
}

namespace {

std::vector<Color> coded_colors(const Tileset& wang, Profile profile) {
  std::vector<Color> out;
  for (const Color& c : tileset_colors(wang))
    if (!(profile == Profile::kFlatWhite && c == kWhite)) out.push_back(c);
  return out;
}

ColorTable make_table(const std::vector<Color>& colors, int r) {
  ColorTable t;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    std::string bits(static_cast<std::size_t>(r), '0');
    for (int b = 0; b < r; ++b)
      if ((i >> (r - 1 - b)) & 1U) bits[static_cast<std::size_t>(b)] = '1';
    t.entries.push_back({colors[i], bits});
  }
  return t;
}

struct Mods {
  std::vector<Cell> add, remove;
};

// Corner features, relative to the corner point they hang off.
const std::vector<Cell> kVLow{{0, 1}, {1, 1}, {2, 1}, {2, 2}};
const std::vector<Cell> kVHigh{{-3, -2}, {-2, -2}, {-1, -2}, {-3, -3}, {-2, -3}};
const std::vector<Cell> kHLeft{{2, -1}, {1, -2}, {2, -2}};
const std::vector<Cell> kHRight{{-3, 0}, {-4, 1}, {-3, 1}, {-2, 1}, {-4, 2}, {-2, 2}};

void shifted(const std::vector<Cell>& cells, Cell by, std::vector<Cell>& out) {
  for (Cell c : cells) out.push_back(c + by);
}

// Deformation of one side of the block at `origin` carrying `bits`.
void side_mods(Side s, const std::string& bits, int S, Cell origin, Mods& m) {
  int r = static_cast<int>(bits.size());
  switch (s) {
    case Side::N:
      shifted(kHLeft, origin + Cell{0, S}, m.remove);
      shifted(kHRight, origin + Cell{S, S}, m.add);
      for (int i = 0; i < r; ++i)
        if (bits[static_cast<std::size_t>(i)] == '1') m.remove.push_back(origin + Cell{4 + i, S - 1});
      break;
    case Side::S:
      shifted(kHLeft, origin, m.add);
      shifted(kHRight, origin + Cell{S, 0}, m.remove);
      for (int i = 0; i < r; ++i)
        if (bits[static_cast<std::size_t>(i)] == '1') m.add.push_back(origin + Cell{4 + i, -1});
      break;
    case Side::E:
      shifted(kVLow, origin + Cell{S, 0}, m.add);
      shifted(kVHigh, origin + Cell{S, S}, m.remove);
      for (int i = 0; i < r; ++i)
        if (bits[static_cast<std::size_t>(i)] == '1') m.add.push_back(origin + Cell{S, 4 + i});
      break;
    case Side::W:
      shifted(kVLow, origin, m.remove);
      shifted(kVHigh, origin + Cell{0, S}, m.add);
      for (int i = 0; i < r; ++i)
        if (bits[static_cast<std::size_t>(i)] == '1') m.remove.push_back(origin + Cell{0, 4 + i});
      break;
  }
}

Region apply_mods(Region base, const Mods& m) {
  Region add(m.add), remove(m.remove);
  if (add.intersects(remove)) throw Error("encoding conflict: a cell is both added and removed");
  return base.united(add).minus(remove);
}

bool straight(const Color& c, const ReductionParams& params) {
  return params.profile == Profile::kFlatWhite && c == kWhite;
}

}  // namespace

ReductionParams reduction_params(const Tileset& wang, Profile profile) {
  return ReductionParams::for_colors(static_cast<int>(coded_colors(wang, profile).size()), profile);
}

const std::string& ColorTable::bits(const Color& c) const {
  for (const auto& [col, b] : entries)
    if (col == c) return b;
  throw Error("color '" + c.name() + "' not in color table");
}

bool ColorTable::has(const Color& c) const {
  return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.first == c; });
}

Region encode_square(const WangSquare& w, const ColorTable& table, const ReductionParams& params) {
  Mods m;
  for (Side s : kSides)
    if (!straight(w.on(s), params)) side_mods(s, table.bits(w.on(s)), params.S, {0, 0}, m);
  return apply_mods(rect_region({params.S, params.S}), m);
}

Encoding wang_to_poly(const Tileset& wang, const ReductionParams& params) {
  if (!wang.colored()) throw Error("expected Wang squares");
  for (const auto& t : wang.tiles)
    if (t.shape().area() != 1) throw Error("expected Wang squares, got multi-cell tile " + t.name);
  std::vector<Color> colors = coded_colors(wang, params.profile);
  ReductionParams expect = ReductionParams::for_colors(static_cast<int>(colors.size()), params.profile);
  if (expect.m != params.m || expect.r != params.r || expect.S != params.S)
    throw Error("reduction params do not match the tileset's " + std::to_string(colors.size()) + " colors");

  Encoding enc{params, make_table(colors, params.r), {Species::kPolyomino, {}}, {}};
  std::set<std::string> codes;
  for (const auto& e : enc.table.entries)
    if (!codes.insert(e.second).second) throw Error("two colors share code " + e.second);
  for (const auto& t : wang.tiles) {
    WangSquare w = to_wang_square(GenWangTile{t.shape(), t.colors()});
    Region block = encode_square(w, enc.table, params);
    if (!is_simply_connected(block)) throw Error("encoded tile not simply connected: " + t.name);
    auto norm = normalize_region(block.cells());
    enc.polys.tiles.push_back({t.name, Polyomino(norm.region)});
    enc.anchors[t.name] = norm.anchor;
  }
  return enc;
}

Region encode_region(const DecoratedRegion& dr, const Encoding& enc) {
  const int S = enc.params.S;
  std::vector<Cell> cells;
  for (Cell c : dr.region)
    for (Cell b : rect_region({S, S}, {c.x * S, c.y * S})) cells.push_back(b);
  Mods m;
  for (const Edge& e : region_boundary(dr.region)) {
    auto it = dr.constraints.find(e);
    if (it == dr.constraints.end()) {
      if (enc.params.profile != Profile::kFlatWhite)
        throw Error("free edge at " + to_string(e.cell) + side_char(e.side) + " needs the flat-white profile");
      continue;
    }
    if (straight(it->second, enc.params)) continue;
    if (!enc.table.has(it->second)) throw Error("unknown constraint color '" + it->second.name() + "'");
    side_mods(e.side, enc.table.bits(it->second), S, {e.cell.x * S, e.cell.y * S}, m);
  }
  return apply_mods(Region(std::move(cells)), m);
}

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

Tiling transport_tiling(const Tiling& t, const Encoding& enc, Direction d) {
  const int S = enc.params.S;
  Tiling out;
  for (const auto& p : t.placements) {
    auto it = enc.anchors.find(p.tile);
    if (it == enc.anchors.end()) throw Error("unknown tile '" + p.tile + "'");
    if (p.orientation != 0) throw Error("transport needs unrotated placements");
    if (d == Direction::kToPolyomino) {
      out.placements.push_back({p.tile, Cell{p.offset.x * S, p.offset.y * S} + it->second, 0});
    } else {
      Cell block = p.offset - it->second;
      Cell c{floor_div(block.x, S), floor_div(block.y, S)};
      if (c.x * S != block.x || c.y * S != block.y)
        throw Error("placement of " + p.tile + " is off the block lattice");
      out.placements.push_back({p.tile, c, 0});
    }
  }
  return out;
}

}  // namespace tileforge
