#include "tileforge/complement.hpp"

#include <algorithm>
#include <set>

namespace tileforge {

namespace {

const Color kT{"T"};
const Color kU{"U"};

NamedTile square(std::string name, const Color& left, const Color& top, const Color& bottom, const Color& right) {
  return {std::move(name), WangSquare{top, right, bottom, left}};
}

}  // namespace

CttInstance build_ctt_instance(const TuringMachine& m, std::vector<std::string> word) {
  m.validate();
  if (word.empty()) word.push_back(m.blank);
  for (const auto& x : word)
    if (std::find(m.alphabet.begin(), m.alphabet.end(), x) == m.alphabet.end())
      throw Error("input symbol '" + x + "' not in alphabet");
  for (const char* reserved : {"T", "U", "white"})
    if (std::find(m.alphabet.begin(), m.alphabet.end(), reserved) != m.alphabet.end())
      throw Error(std::string("symbol '") + reserved + "' is reserved");

  CttInstance inst;
  inst.tileset = build_emulation_tileset(m);
  for (const char* name : {"I", "U"})
    if (inst.tileset.find(name)) throw Error(std::string("tile name '") + name + "' already used");
  inst.tileset.tiles.push_back(square("I", kT, kU, m.blank, kT));
  inst.tileset.tiles.push_back(square("U", kWhite, kU, kU, kWhite));

  const int r = static_cast<int>(word.size());
  inst.hole.region = rect_region({r, 1});
  for (int i = 0; i < r; ++i) {
    inst.hole.constraints[{{i, 0}, Side::N}] = kU;
    inst.hole.constraints[{{i, 0}, Side::S}] = i == 0 ? head_color(word[0], m.start) : Color(word[static_cast<std::size_t>(i)]);
  }
  inst.hole.constraints[{{0, 0}, Side::W}] = kT;
  inst.hole.constraints[{{r - 1, 0}, Side::E}] = kT;
  return inst;
}

CttPolyomino ctt_polyomino_form(const CttInstance& inst) {
  CttPolyomino out;
  out.encoding = wang_to_poly(inst.tileset, reduction_params(inst.tileset, Profile::kZigzagAll));
  out.hole = encode_region(inst.hole, out.encoding);
  return out;
}

PackingTarget cofinite_window(const Tileset& ts, const DecoratedRegion& hole, int n) {
  PackingTarget t;
  if (n < 1) return t;
  Box hb = hole.region.empty() ? Box{0, 0, 0, 0} : bounding_box(hole.region);
  int cx = (hb.x0 + hb.x1) >> 1, cy = (hb.y0 + hb.y1) >> 1;
  Box win{cx - (n - 1) / 2, cy - (n - 1) / 2, 0, 0};
  win.x1 = win.x0 + n - 1;
  win.y1 = win.y0 + n - 1;
  int dx = static_cast<int>(ts.max_tile_width()) - 1;
  int dy = static_cast<int>(ts.max_tile_height()) - 1;
  t.must = win.cells().minus(hole.region);
  t.optional = win.expanded(dx, dy).cells().minus(hole.region).minus(t.must);
  for (const auto& [e, c] : hole.constraints) t.constraints[e.mirrored()] = c;
  return t;
}

RefuteResult cofinite_refute_bounded(const Tileset& ts, const DecoratedRegion& hole, int max_n,
                                     std::uint64_t node_budget) {
  RefuteResult out;
  SearchOptions opts;
  opts.node_budget = node_budget;
  for (int n = 1; n <= max_n; ++n) {
    SolveResult r = solve_packing(ts, cofinite_window(ts, hole, n), opts);
    if (r.outcome == Outcome::kUntileable) {
      out.refuted = true;
      out.n = n;
      return out;
    }
    if (r.outcome == Outcome::kBudgetExceeded) out.budget_exceeded = true;
  }
  out.n = max_n;
  return out;
}

RefuteResult cofinite_refute_bounded(const Tileset& ts, const Region& hole, int max_n, std::uint64_t node_budget) {
  return cofinite_refute_bounded(ts, DecoratedRegion::free(hole), max_n, node_budget);
}

Region dilate(const Region& r, int k) {
  std::vector<Cell> out;
  for (Cell c : r)
    for (int dx = 0; dx < k; ++dx)
      for (int dy = 0; dy < k; ++dy) out.push_back({c.x * k + dx, c.y * k + dy});
  return Region(std::move(out));
}

FixedHoleResult fixed_hole_transform(const Tileset& ts, const Region& hole) {
  if (ts.species != Species::kPolyomino) throw Error("fixed_hole_transform needs a polyomino tileset");
  if (hole.empty() || !is_simply_connected(hole)) throw Error("hole is not simply connected");
  std::string gname = "G";
  auto clash = [&](const std::string& base) {
    for (const auto& t : ts.tiles)
      if (t.name == base || t.name.rfind(base + "@", 0) == 0) return true;
    return false;
  };
  while (clash(gname)) gname += "'";

  Tileset all = ts;
  Polyomino g(hole);
  all.tiles.push_back({gname, g});
  Tileset gw = poly_to_genwang(all);
  SquareSplit split = genwang_to_wangsquares(gw);
  ReductionParams params = reduction_params(split.squares, Profile::kZigzagAll);
  Encoding enc = wang_to_poly(split.squares, params);

  Cell least = g.cells().front();
  FixedHoleResult out;
  out.params = params;
  out.tiles.species = Species::kPolyomino;
  for (std::size_t i = 0; i < enc.polys.tiles.size(); ++i) {
    const NamedTile& t = enc.polys.tiles[i];
    Region cells = dilate(t.shape().region(), 2);
    const Provenance& pv = split.provenance[i];
    if (pv.tile == gname && pv.cell == least) {
      cells = cells.minus(Region({cells.cells().front()}));
      out.punctured = t.name;
    }
    out.tiles.tiles.push_back({t.name, Polyomino(cells)});
    Cell a = enc.anchors.at(t.name);
    out.anchors[t.name] = {a.x * 2, a.y * 2};
  }
  return out;
}

namespace {

std::vector<Region> components(const Region& r) {
  std::vector<Region> out;
  std::set<Cell> left(r.begin(), r.end());
  while (!left.empty()) {
    std::vector<Cell> comp, stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      comp.push_back(c);
      for (Side s : kSides) {
        auto it = left.find(c + step(s));
        if (it == left.end()) continue;
        stack.push_back(*it);
        left.erase(it);
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

bool sound(const Region& r) { return !r.empty() && is_simply_connected(r); }

}  // namespace

FramePieces split_frame(const Region& hole) {
  if (hole.empty()) throw Error("empty hole");
  Box hb = bounding_box(hole);
  FramePieces out;
  out.N = std::max(hb.width(), hb.height()) + 4;
  out.frame = {hb.x0 - 2, hb.y0 - 2, hb.x0 - 2 + out.N - 1, hb.y0 - 2 + out.N - 1};
  Region rest = out.frame.cells().minus(hole);
  if (components(rest).size() != 1) throw Error("frame minus hole is not connected");

  Region a = Box{out.frame.x0, out.frame.y0, out.frame.x0 + 1, out.frame.y1}.cells();
  Region b = rest.minus(a);
  auto parts = components(b);
  std::sort(parts.begin(), parts.end(), [](const Region& p, const Region& q) { return p.size() > q.size(); });
  b = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) a = a.united(parts[i]);
  if (!sound(a) || !sound(b)) throw Error("no simply connected split of the frame");

  // one bump each way across the cut
  const int cut = out.frame.x0 + 1;
  for (int y = out.frame.y0 + 1; y < out.frame.y1; ++y) {
    Cell c{cut, y};
    if (!a.contains(c) || !b.contains(c + Cell{1, 0})) continue;
    Region a2 = a.minus(Region({c})), b2 = b.united(Region({c}));
    if (sound(a2) && sound(b2)) {
      a = a2;
      b = b2;
      break;
    }
  }
  for (int y = out.frame.y1 - 1; y > out.frame.y0; --y) {
    Cell c{cut + 1, y};
    if (!b.contains(c) || !a.contains(c - Cell{1, 0})) continue;
    Region a2 = a.united(Region({c})), b2 = b.minus(Region({c}));
    if (sound(a2) && sound(b2)) {
      a = a2;
      b = b2;
      break;
    }
  }
  out.a = a;
  out.b = b;
  return out;
}

Tileset general_hole_transform(const Tileset& unit_hole_ts, const Region& hole) {
  if (unit_hole_ts.species != Species::kPolyomino) throw Error("general_hole_transform needs a polyomino tileset");
  FramePieces fp = split_frame(hole);
  Tileset out{Species::kPolyomino, {}};
  for (const auto& t : unit_hole_ts.tiles) out.tiles.push_back({t.name, Polyomino(dilate(t.shape().region(), fp.N))});
  std::string base = "F";
  while (out.find(base + "a") || out.find(base + "b")) base += "'";
  out.tiles.push_back({base + "a", Polyomino(fp.a)});
  out.tiles.push_back({base + "b", Polyomino(fp.b)});
  return out;
}

}  // namespace tileforge
