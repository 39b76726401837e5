#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tileforge/solver.hpp"

using namespace tileforge;

namespace {

Tileset dominoes() { return polyomino_tileset({{"h", rect_polyomino({2, 1})}, {"v", rect_polyomino({1, 2})}}); }

Polyomino l_tromino() { return Polyomino({{0, 0}, {0, 1}, {1, 0}}); }
Polyomino l_tromino_180() { return Polyomino({{1, 1}, {1, 0}, {0, 1}}); }

oracle::CellSet to_set(const Region& r) {
  oracle::CellSet s;
  for (Cell c : r) s.insert({c.x, c.y});
  return s;
}

SearchOptions count_mode(Symmetry sym = Symmetry::kTranslations) {
  SearchOptions o;
  o.mode = SearchMode::kCount;
  o.symmetry = sym;
  return o;
}

// Random polyomino grown cell by cell inside a 4x4 box.
Polyomino random_poly(std::mt19937& rng, int cells) {
  std::vector<Cell> out{{0, 0}};
  while (static_cast<int>(out.size()) < cells) {
    Cell c = out[rng() % out.size()] + step(kSides[rng() % 4]);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return Polyomino(out);
}

}  // namespace

TEST_CASE("domino counts match the oracle") {
  Tileset ts = dominoes();
  std::vector<oracle::CellSet> tiles{to_set(rect_region({2, 1})), to_set(rect_region({1, 2}))};
  for (Rect r : {Rect{2, 3}, Rect{2, 4}, Rect{3, 4}, Rect{4, 4}, Rect{3, 3}}) {
    Region target = rect_region(r);
    auto res = tile_region(ts, target, count_mode());
    CHECK(res.count == oracle::count_tilings(tiles, to_set(target), false));
  }
  CHECK(tile_region(ts, rect_region({3, 2}), count_mode()).count == 3);
  CHECK(tile_region(ts, rect_region({4, 2}), count_mode()).count == 5);
  CHECK(tile_region(ts, rect_region({4, 3}), count_mode()).count == 11);
}

TEST_CASE("2 x n domino counts follow the Fibonacci recurrence") {
  Tileset ts = dominoes();
  std::uint64_t a = 1, b = 2;
  for (int n = 2; n <= 10; ++n) {
    std::uint64_t next = a + b;
    a = b;
    b = next;
    CHECK(tile_region(ts, rect_region({n, 2}), count_mode()).count == a);
  }
}

TEST_CASE("monomino tiles anything exactly once") {
  Tileset ts = polyomino_tileset({{"m", rect_polyomino({1, 1})}});
  Region blob({{0, 0}, {3, 1}, {-2, 5}, {0, 1}});
  auto res = tile_region(ts, blob, count_mode());
  CHECK(res.outcome == Outcome::kTileable);
  CHECK(res.count == 1);
}

TEST_CASE("L-tromino and its half turn tile 2x3 once") {
  Tileset ts = polyomino_tileset({{"L", l_tromino()}, {"L180", l_tromino_180()}});
  auto res = tile_region(ts, rect_region({2, 3}), count_mode());
  CHECK(res.count == 1);
  CHECK(validate_tiling(ts, rect_region({2, 3}), *res.witness));
}

TEST_CASE("species and target must agree") {
  Tileset wang{Species::kWang, {{"a", WangSquare{"x", "x", "x", "x"}}}};
  CHECK_THROWS_AS(tile_region(wang, rect_region({2, 2})), Error);
  CHECK_THROWS_AS(tile_region(dominoes(), DecoratedRegion::free(rect_region({2, 2}))), Error);
}

TEST_CASE("budget is reported, never as untileable") {
  SearchOptions o = count_mode();
  o.node_budget = 5;
  auto res = tile_region(dominoes(), rect_region({4, 4}), o);
  CHECK(res.outcome == Outcome::kBudgetExceeded);
}

TEST_CASE("validation diagnostics") {
  Tileset ts = dominoes();
  Region target = rect_region({2, 2});
  Tiling good{{{"h", {0, 0}, 0}, {"h", {0, 1}, 0}}};
  CHECK(validate_tiling(ts, target, good));
  Tiling overlap{{{"h", {0, 0}, 0}, {"v", {0, 0}, 0}}};
  auto v = validate_tiling(ts, target, overlap);
  CHECK_FALSE(v.ok);
  CHECK(v.diagnostic.rfind("overlap at cell", 0) == 0);
  Tiling missing{{{"h", {0, 0}, 0}}};
  CHECK(validate_tiling(ts, target, missing).diagnostic.rfind("uncovered cell", 0) == 0);
  Tiling outside{{{"h", {1, 0}, 0}, {"h", {0, 1}, 0}}};
  CHECK(validate_tiling(ts, target, outside).diagnostic.rfind("cell outside target", 0) == 0);
  Tiling unknown{{{"q", {0, 0}, 0}}};
  CHECK_FALSE(validate_tiling(ts, target, unknown).ok);
}

TEST_CASE("wang color mismatch is diagnosed") {
  Tileset ts{Species::kWang, {{"a", WangSquare{"w", "p", "w", "w"}}, {"b", WangSquare{"w", "w", "w", "q"}}}};
  auto target = DecoratedRegion::free(rect_region({2, 1}));
  Tiling t{{{"a", {0, 0}, 0}, {"b", {1, 0}, 0}}};
  auto v = validate_tiling(ts, target, t);
  CHECK_FALSE(v.ok);
  CHECK(v.diagnostic.rfind("color mismatch", 0) == 0);
  auto white = DecoratedRegion::uniform(rect_region({1, 1}), kWhite);
  Tiling single{{{"a", {0, 0}, 0}}};
  CHECK(validate_tiling(ts, white, single).diagnostic.rfind("constraint mismatch", 0) == 0);
}

TEST_CASE("wang counts match the exhaustive oracle") {
  std::vector<oracle::Square> sq{{"a", "b", "a", "b"}, {"b", "a", "b", "a"}, {"a", "a", "b", "b"}, {"b", "b", "a", "a"}};
  Tileset ts{Species::kWang, {}};
  for (std::size_t i = 0; i < sq.size(); ++i)
    ts.tiles.push_back({"t" + std::to_string(i), WangSquare{sq[i].n, sq[i].e, sq[i].s, sq[i].w}});
  for (int w = 1; w <= 3; ++w)
    for (int h = 1; h <= 3; ++h) {
      auto free = tile_region(ts, DecoratedRegion::free(rect_region({w, h})), count_mode());
      CHECK(free.count == oracle::count_wang_rect(sq, w, h, ""));
      auto framed = tile_region(ts, DecoratedRegion::uniform(rect_region({w, h}), "a"), count_mode());
      CHECK(framed.count == oracle::count_wang_rect(sq, w, h, "a"));
    }
}

TEST_CASE("decide agrees with the oracle on random small instances") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    int ntiles = 1 + static_cast<int>(rng() % 3);
    std::vector<std::pair<std::string, Polyomino>> tiles;
    std::vector<oracle::CellSet> otiles;
    for (int i = 0; i < ntiles; ++i) {
      Polyomino p = random_poly(rng, 1 + static_cast<int>(rng() % 4));
      tiles.push_back({"t" + std::to_string(i), p});
      otiles.push_back(to_set(p.region()));
    }
    Tileset ts = polyomino_tileset(tiles);
    std::vector<Cell> cells;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        if (rng() % 4 != 0) cells.push_back({x, y});
    Region target(cells);
    for (Symmetry sym : {Symmetry::kTranslations, Symmetry::kIsometries}) {
      bool iso = sym == Symmetry::kIsometries;
      auto res = tile_region(ts, target, count_mode(sym));
      std::uint64_t expect = oracle::count_tilings(otiles, to_set(target), iso);
      CHECK(res.count == expect);
      if (res.witness) CHECK(validate_tiling(ts, target, *res.witness));
      SearchOptions dec;
      dec.symmetry = sym;
      CHECK((tile_region(ts, target, dec).outcome == Outcome::kTileable) == (expect > 0));
    }
  }
}

TEST_CASE("enumeration length equals count below the cap") {
  SearchOptions e;
  e.mode = SearchMode::kEnumerate;
  auto res = tile_region(dominoes(), rect_region({3, 4}), e);
  CHECK(res.tilings.size() == 11);
  CHECK_FALSE(res.cap_hit);
  std::set<Tiling> distinct;
  for (const auto& t : res.tilings) {
    CHECK(validate_tiling(dominoes(), rect_region({3, 4}), t));
    auto sorted = t;
    std::sort(sorted.placements.begin(), sorted.placements.end());
    distinct.insert(sorted);
  }
  CHECK(distinct.size() == 11);
  e.enumerate_cap = 4;
  auto capped = tile_region(dominoes(), rect_region({3, 4}), e);
  CHECK(capped.tilings.size() == 4);
  CHECK(capped.cap_hit);
}

TEST_CASE("translation witnesses validate in isometry mode") {
  Tileset ts = polyomino_tileset({{"L", l_tromino()}, {"L180", l_tromino_180()}});
  auto res = tile_region(ts, rect_region({2, 3}));
  REQUIRE(res.witness);
  SearchOptions iso;
  iso.symmetry = Symmetry::kIsometries;
  CHECK(validate_tiling(ts, rect_region({2, 3}), *res.witness));
  CHECK(tile_region(ts, rect_region({2, 3}), iso).outcome == Outcome::kTileable);
}

TEST_CASE("deterministic output") {
  auto a = tile_region(dominoes(), rect_region({4, 4}));
  auto b = tile_region(dominoes(), rect_region({4, 4}));
  CHECK(*a.witness == *b.witness);
}

TEST_CASE("rectangle search") {
  auto h = find_rectangle(polyomino_tileset({{"h", rect_polyomino({2, 1})}}), 10);
  REQUIRE(h.found);
  CHECK(h.rect == Rect{2, 1});

  Tileset ls = polyomino_tileset({{"L", l_tromino()}, {"L180", l_tromino_180()}});
  auto r = find_rectangle(ls, 20);
  REQUIRE(r.found);
  CHECK(r.rect == Rect{2, 3});
  CHECK(validate_tiling(ls, rect_region(r.rect), r.tiling));
  for (int area = 1; area < 6; ++area)
    for (int w = 1; w <= area; ++w)
      if (area % w == 0) CHECK(tile_region(ls, rect_region({w, area / w})).outcome == Outcome::kUntileable);

  auto none = find_rectangle(polyomino_tileset({{"L", l_tromino()}}), 30);
  CHECK_FALSE(none.found);
  CHECK(none.searched_area == 30);
}

TEST_CASE("plane semi-decision") {
  Tileset mono{Species::kWang, {{"a", WangSquare{"c", "c", "c", "c"}}}};
  auto p = plane_semidecide(mono, 4);
  CHECK(p.status == PlaneStatus::kPeriodic);
  CHECK(p.n == 1);
  CHECK(is_torus_tiling(mono, 1, p.fundamental));

  Tileset bad{Species::kWang, {{"a", WangSquare{"n", "e", "s", "e"}}}};
  auto q = plane_semidecide(bad, 4);
  CHECK(q.status == PlaneStatus::kEmpty);
  CHECK(q.n == 2);

  Tileset alt{Species::kWang, {{"a", WangSquare{"x", "p", "y", "q"}}, {"b", WangSquare{"y", "q", "x", "p"}}}};
  auto r = plane_semidecide(alt, 4);
  CHECK(r.status == PlaneStatus::kPeriodic);
  CHECK(r.n == 2);
  CHECK(is_torus_tiling(alt, 2, r.fundamental));
}

TEST_CASE("polyomino order") {
  auto rect = polyomino_order(rect_polyomino({2, 3}), 50, Symmetry::kTranslations);
  CHECK(rect.found);
  CHECK(rect.copies == 1);
  auto l = polyomino_order(l_tromino(), 50, Symmetry::kIsometries);
  CHECK(l.copies == 2);
  CHECK(l.rect == Rect{2, 3});
  auto t = polyomino_order(Polyomino({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), 40, Symmetry::kIsometries);
  CHECK(t.copies == 4);
  CHECK(t.rect == Rect{4, 4});
  Tileset ts = polyomino_tileset({{"P", Polyomino({{0, 0}, {1, 0}, {2, 0}, {1, 1}})}});
  SearchOptions iso;
  iso.symmetry = Symmetry::kIsometries;
  CHECK(validate_tiling(ts, rect_region(t.rect), t.tiling));
  CHECK(tileset_min_rect_area(ts, 40, iso) == 16);
}
