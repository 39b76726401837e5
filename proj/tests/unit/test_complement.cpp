#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "doctest.h"
#include "machines.hpp"
#include "oracles.hpp"
#include "tileforge/complement.hpp"

using namespace tileforge;

namespace {

oracle::CellSet to_set(const Region& r) {
  oracle::CellSet s;
  for (Cell c : r) s.insert({c.x, c.y});
  return s;
}

std::string tile_at(const Tileset& ts, const Tiling& t, Cell c) {
  for (const auto& p : t.placements)
    if (resolve_placement(ts, p).cells.contains(c)) return p.tile;
  return "";
}

}  // namespace

TEST_CASE("ctt instance shape") {
  auto inst = build_ctt_instance(machines::bb2(), {"0"});
  CHECK(validate_tileset(inst.tileset).empty());
  CHECK(inst.hole.region == rect_region({1, 1}));
  CHECK(inst.hole.constraints.at({{0, 0}, Side::S}) == head_color("0", "A"));
  CHECK(inst.hole.constraints.at({{0, 0}, Side::W}) == Color("T"));

  auto empty = build_ctt_instance(machines::bb2(), {});
  CHECK(empty.hole.region.size() == 1);

  auto wide = build_ctt_instance(machines::writer(), {"1", "0", "1"});
  CHECK(wide.hole.region.size() == 3);
  CHECK(wide.hole.constraints.at({{2, 0}, Side::S}) == Color("1"));
  CHECK(wide.hole.constraints.at({{2, 0}, Side::E}) == Color("T"));

  std::vector<std::string> bottom_u;
  for (const auto& t : inst.tileset.tiles)
    if (std::get<WangSquare>(t.body).south == Color("U")) bottom_u.push_back(t.name);
  CHECK(bottom_u == std::vector<std::string>{"U"});
}

TEST_CASE("everything above the hole row is forced") {
  auto inst = build_ctt_instance(machines::writer(), {"1", "0"});
  for (auto [x0, x1, y0, y1] : {std::array{-3, 4, 0, 3}, std::array{-2, 3, -2, 4}, std::array{-5, 6, -1, 10}}) {
    Region win = Box{x0, y0, x1, y1}.cells();
    PackingTarget t{win.minus(inst.hole.region), {}, {}};
    for (const auto& [e, c] : inst.hole.constraints) t.constraints[e.mirrored()] = c;
    SearchOptions opts;
    opts.mode = SearchMode::kEnumerate;
    opts.enumerate_cap = 40;
    auto res = solve_packing(inst.tileset, t, opts);
    REQUIRE(!res.tilings.empty());
    for (const auto& tiling : res.tilings) {
      CHECK(validate_packing(inst.tileset, t, tiling));
      for (Cell c : t.must) {
        if (c.y > 0) CHECK(tile_at(inst.tileset, tiling, c) == "U");
        if (c.y == 0) CHECK(tile_at(inst.tileset, tiling, c) == "I");
      }
    }
  }
}

TEST_CASE("rows below the hole follow the run") {
  auto m = machines::right_looper();
  auto inst = build_ctt_instance(m, {});
  const int k = 6;
  auto run = tm_run(m, {}, k);
  Window w{-1, k + 1};
  auto dr = emulation_window(m, run.trace.front(), w, k);
  SearchOptions opts;
  opts.mode = SearchMode::kEnumerate;
  opts.enumerate_cap = 2;
  auto res = tile_region(inst.tileset, dr, opts);
  REQUIRE(res.tilings.size() == 1);
  auto rows = decode_diagram(m, inst.tileset, res.tilings[0], w, k);
  for (int i = 1; i <= k; ++i) {
    REQUIRE(rows[static_cast<std::size_t>(i - 1)]);
    CHECK(*rows[static_cast<std::size_t>(i - 1)] == run.trace[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("polyomino form of the ctt hole") {
  auto inst = build_ctt_instance(machines::bb2(), {});
  auto form = ctt_polyomino_form(inst);
  CHECK(form.encoding.params.profile == Profile::kZigzagAll);
  CHECK(form.encoding.polys.tiles.size() == inst.tileset.tiles.size());
  const int S = form.encoding.params.S;
  auto ones = [&](Side sd) {
    const std::string& b = form.encoding.table.bits(inst.hole.constraints.at({{0, 0}, sd}));
    return static_cast<int>(std::count(b.begin(), b.end(), '1'));
  };
  CHECK(static_cast<int>(form.hole.size()) == S * S + ones(Side::S) + ones(Side::E) - ones(Side::N) - ones(Side::W));
  CHECK(is_simply_connected(form.hole));
}

TEST_CASE("bounded refutation") {
  Tileset mono = polyomino_tileset({{"a", rect_polyomino({1, 1})}});
  auto r1 = cofinite_refute_bounded(mono, Region({{0, 0}}), 5);
  CHECK(!r1.refuted);
  CHECK(r1.n == 5);

  Tileset bar = polyomino_tileset({{"h", rect_polyomino({3, 1})}});
  auto r2 = cofinite_refute_bounded(bar, Region({{0, 0}, {2, 0}}), 6);
  CHECK(r2.refuted);
  CHECK(r2.n <= 3);
}

TEST_CASE("refutation agrees with the packing oracle") {
  std::mt19937 rng(7);
  std::vector<std::vector<std::pair<std::string, Polyomino>>> sets = {
      {{"h", rect_polyomino({2, 1})}},
      {{"h", rect_polyomino({3, 1})}},
      {{"h", rect_polyomino({2, 1})}, {"v", rect_polyomino({1, 2})}},
      {{"l", Polyomino({{0, 0}, {1, 0}, {0, 1}})}},
      {{"s", rect_polyomino({2, 2})}, {"h", rect_polyomino({3, 1})}},
  };
  for (const auto& tiles : sets) {
    Tileset ts = polyomino_tileset(tiles);
    std::vector<oracle::CellSet> shapes;
    for (const auto& t : ts.tiles) shapes.push_back(to_set(t.shape().region()));
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Cell> cells;
      int holes = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < holes; ++i) cells.push_back({static_cast<int>(rng() % 4), static_cast<int>(rng() % 3)});
      Region hole(cells);
      for (int n = 1; n <= 5; ++n) {
        PackingTarget t = cofinite_window(ts, DecoratedRegion::free(hole), n);
        bool lib = solve_packing(ts, t, {}).outcome == Outcome::kTileable;
        bool ref = oracle::packing_exists(shapes, to_set(t.must), to_set(t.must.united(t.optional)));
        CHECK(lib == ref);
      }
      auto res = cofinite_refute_bounded(ts, hole, 5);
      if (res.refuted) {
        PackingTarget t = cofinite_window(ts, DecoratedRegion::free(hole), res.n);
        CHECK(!oracle::packing_exists(shapes, to_set(t.must), to_set(t.must.united(t.optional))));
      }
    }
  }
}

TEST_CASE("halting machines are refuted, loopers are not") {
  auto halt = build_ctt_instance(machines::bb2(), {});
  auto r = cofinite_refute_bounded(halt.tileset, halt.hole, 16);
  CHECK(r.refuted);
  CHECK(r.n >= 13);  // the halt row sits 6 rows under the hole

  auto loop = build_ctt_instance(machines::right_looper(), {});
  auto u = cofinite_refute_bounded(loop.tileset, loop.hole, 9);
  CHECK(!u.refuted);
  CHECK(!u.budget_exceeded);
}

TEST_CASE("fixed hole transform") {
  Tileset mono = polyomino_tileset({{"a", rect_polyomino({1, 1})}});
  auto fh = fixed_hole_transform(mono, Region({{0, 0}}));
  REQUIRE(fh.tiles.tiles.size() == 2);
  CHECK(fh.punctured == "G");
  const int S = fh.params.S;
  CHECK(S == 10);
  CHECK(static_cast<int>(fh.tiles.find("G")->shape().area()) == 4 * S * S - 1);

  Tileset ts = polyomino_tileset({{"h", rect_polyomino({2, 1})}, {"l", Polyomino({{0, 0}, {1, 0}, {0, 1}})}});
  auto fh2 = fixed_hole_transform(ts, Region({{0, 0}, {0, 1}, {1, 1}}));
  int odd = 0;
  for (const auto& t : fh2.tiles.tiles) {
    odd += t.shape().area() % 2;
    CHECK(t.shape().simply_connected());
  }
  CHECK(odd == 1);
  CHECK(fh2.punctured == "G@0,0");
  CHECK_THROWS_AS(fixed_hole_transform(ts, Region({{0, 0}, {2, 0}})), Error);
}

TEST_CASE("fixed hole tiles sit on the dilated block lattice") {
  Tileset mono = polyomino_tileset({{"a", rect_polyomino({1, 1})}});
  auto fh = fixed_hole_transform(mono, Region({{0, 0}}));
  const int S = fh.params.S;
  // two unpunctured blocks side by side, bordered like mono neighbors
  Tileset one{Species::kPolyomino, {*fh.tiles.find("a")}};
  Region block = fh.tiles.find("a")->shape().region().translated(fh.anchors.at("a"));
  Region target = block.united(block.translated({2 * S, 0}));
  auto res = tile_region(one, target);
  REQUIRE(res.outcome == Outcome::kTileable);
  for (const auto& p : res.witness->placements) {
    Cell d = p.offset - fh.anchors.at(p.tile);
    CHECK(((d.x % (2 * S)) + 2 * S) % (2 * S) == 0);
    CHECK(((d.y % (2 * S)) + 2 * S) % (2 * S) == 0);
  }
}

TEST_CASE("frame split into two simply connected pieces") {
  std::vector<Region> holes = {
      Region({{0, 0}}),
      rect_region({3, 2}),
      Region({{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 0}}),                  // C opening right
      Region({{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}, {2, 1}}),  // hook
      Region({{0, 2}, {1, 2}, {1, 1}, {1, 0}, {0, 0}}),                  // C opening left
  };
  for (const auto& h : holes) {
    auto fp = split_frame(h);
    CHECK(fp.frame.width() == fp.N);
    CHECK(is_simply_connected(fp.a));
    CHECK(is_simply_connected(fp.b));
    CHECK(!fp.a.intersects(fp.b));
    CHECK(fp.a.united(fp.b) == fp.frame.cells().minus(h));
  }
  Region ring = Box{0, 0, 2, 2}.cells().minus(Region({{1, 1}}));
  CHECK_THROWS_AS(split_frame(ring), Error);

  Tileset unit = polyomino_tileset({{"a", rect_polyomino({1, 1})}});
  Tileset g = general_hole_transform(unit, rect_region({2, 1}));
  REQUIRE(g.tiles.size() == 3);
  CHECK(g.tiles[0].shape().area() == 36);
}
