#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tileforge/cofinite.hpp"

using namespace tileforge;

namespace {

Tileset rects(const std::vector<Rect>& rs) {
  std::vector<std::pair<std::string, Polyomino>> tiles;
  for (Rect r : rs) tiles.push_back({std::to_string(r.w) + "x" + std::to_string(r.h), rect_polyomino(r)});
  return polyomino_tileset(tiles);
}

bool in_quadrant(const QuadrantFill& q, Cell c) {
  return (q.dx > 0 ? c.x >= q.corner.x : c.x <= q.corner.x) && (q.dy > 0 ? c.y >= q.corner.y : c.y <= q.corner.y);
}

void check_structure(const PeriodicCertificate& cert, const Region& hole, const Box& window) {
  std::set<Cell> strip_cells, covered;
  for (const auto& piece : materialize(cert, window)) {
    if (piece.source == PieceSource::kQuadrant) continue;
    for (Cell c : piece.placement.box().cells()) {
      if (!window.contains(c)) continue;
      covered.insert(c);
      if (piece.source == PieceSource::kStrip) CHECK(strip_cells.insert(c).second);
    }
  }
  for (Cell c : window.cells()) {
    if (hole.contains(c) || covered.count(c)) continue;
    int in = 0;
    for (const auto& q : cert.quadrants) in += in_quadrant(q, c);
    CHECK(in == 1);
  }
  for (const auto& q : cert.quadrants)
    for (Cell c : window.cells())
      if (in_quadrant(q, c)) CHECK(!covered.count(c));
}

oracle::CellSet to_set(const Region& r) {
  oracle::CellSet s;
  for (Cell c : r) s.insert({c.x, c.y});
  return s;
}

}  // namespace

TEST_CASE("hand cases") {
  Tileset h2 = rects({{2, 1}});
  auto one = decide_complement_rect(h2, Region({{0, 0}}));
  REQUIRE(one.yes);
  auto two = decide_complement_rect(h2, Region({{0, 0}, {2, 0}}));
  CHECK(!two.yes);
  CHECK(!two.budget_exceeded);
  auto none = decide_complement_rect(h2, Region());
  REQUIRE(none.yes);
  CHECK(none.certificate->patch.empty());

  for (const auto* d : {&one, &none}) {
    const Region hole = d == &one ? Region({{0, 0}}) : Region();
    for (int s = 1; s <= 40; s += 3)
      for (Cell at : {Cell{-s / 2, -s / 2}, Cell{-20, -3}, Cell{1, 1}, Cell{-s, 0}}) {
        Box w{at.x, at.y, at.x + s - 1, at.y + s - 1};
        auto v = verify_certificate(*d->certificate, hole, w);
        CHECK_MESSAGE(v.ok, v.diagnostic);
        check_structure(*d->certificate, hole, w);
      }
  }
  CHECK_THROWS_AS(decide_complement_rect(rects({}), Region()), Error);
  Tileset bent = polyomino_tileset({{"l", Polyomino({{0, 0}, {1, 0}, {0, 1}})}});
  CHECK_THROWS_AS(decide_complement_rect(bent, Region()), Error);
}

TEST_CASE("perturbed certificates fail") {
  auto d = decide_complement_rect(rects({{2, 1}}), Region({{0, 0}}));
  REQUIRE(d.yes);
  Box w{-10, -10, 9, 9};
  for (std::size_t i = 0; i < d.certificate->strips.size(); ++i) {
    auto bad = *d.certificate;
    bad.strips[i].base.at.x += 1;
    CHECK(!verify_certificate(bad, Region({{0, 0}}), w));
  }
  auto bad = *d.certificate;
  bad.quadrants[1].corner.y += 1;
  CHECK(!verify_certificate(bad, Region({{0, 0}}), w));
  CHECK(!verify_certificate(*d.certificate, Region(), w));
}

TEST_CASE("decision matches the packing oracle on random instances") {
  std::mt19937 rng(11);
  const std::vector<std::vector<Rect>> sets = {
      {{2, 1}}, {{2, 1}, {1, 2}}, {{3, 1}, {1, 3}}, {{2, 2}}, {{3, 2}, {1, 1}}, {{2, 3}, {3, 1}}, {{1, 2}},
  };
  int yes = 0, no = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Tileset ts = rects(sets[static_cast<std::size_t>(trial) % sets.size()]);
    std::vector<Cell> cells;
    int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) cells.push_back({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)});
    Region hole(cells);
    auto d = decide_complement_rect(ts, hole);
    REQUIRE(!d.budget_exceeded);

    Box A = bounding_box(hole).expanded(1, 1);
    std::vector<oracle::CellSet> shapes;
    for (const auto& t : ts.tiles) shapes.push_back(to_set(t.shape().region()));
    int mw = static_cast<int>(ts.max_tile_width()) - 1, mh = static_cast<int>(ts.max_tile_height()) - 1;
    bool ref = oracle::packing_exists(shapes, to_set(A.cells().minus(hole)),
                                      to_set(A.expanded(mw, mh).cells().minus(hole)));
    CHECK(d.yes == ref);
    if (!d.yes) {
      ++no;
      continue;
    }
    ++yes;
    const auto& cert = *d.certificate;
    for (Box w : {Box{-15, -15, 18, 18}, Box{-40, -2, -1, 37}, Box{3, -30, 12, 9}}) {
      auto v = verify_certificate(cert, hole, w);
      CHECK_MESSAGE(v.ok, v.diagnostic);
      check_structure(cert, hole, w);
    }
    // tiles meeting A again cover A \ hole
    std::set<Cell> cover;
    for (const auto& piece : materialize(cert, A))
      for (Cell c : piece.placement.box().cells())
        if (A.contains(c)) cover.insert(c);
    for (Cell c : A.cells().minus(hole)) CHECK(cover.count(c));
  }
  CHECK(yes >= 5);
  CHECK(no >= 3);
}
