#include "tileforge/cofinite.hpp"

#include <algorithm>
#include <climits>

namespace tileforge {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

// Indices i >= first whose interval meets [lo, hi]. Interval i is
// [c + len*i, c + len*i + len - 1] going up, [c - len*i - len + 1, c - len*i] going down.
std::pair<int, int> index_range(int c, int len, int dir, int lo, int hi, int first) {
  int imin, imax;
  if (dir > 0) {
    imin = ceil_div(lo - c - len + 1, len);
    imax = floor_div(hi - c, len);
  } else {
    imin = ceil_div(c - len + 1 - hi, len);
    imax = floor_div(c - lo, len);
  }
  return {std::max(imin, first), imax};
}

bool overlaps(int a0, int a1, int b0, int b1) { return a0 <= b1 && b0 <= a1; }

std::vector<QuadrantFill> plane_quadrants(const std::string& tile, Rect r) {
  return {{tile, r, {-1, 0}, -1, 1}, {tile, r, {0, 0}, 1, 1}, {tile, r, {-1, -1}, -1, -1}, {tile, r, {0, -1}, 1, -1}};
}

}  // namespace

CofiniteDecision decide_complement_rect(const Tileset& rects, const Region& hole, std::uint64_t node_budget) {
  if (rects.tiles.empty()) throw Error("empty tileset");
  if (rects.species != Species::kPolyomino) throw Error("cofinite decision needs rectangle polyominoes");
  const NamedTile* first = nullptr;
  for (const auto& t : rects.tiles) {
    if (!t.shape().is_rectangle()) throw Error("tile '" + t.name + "' is not a rectangle");
    if (!first || std::pair(t.shape().bounds(), t.name) < std::pair(first->shape().bounds(), first->name)) first = &t;
  }
  const Rect fill = first->shape().bounds();

  CofiniteDecision out;
  PeriodicCertificate cert;
  if (hole.empty()) {
    cert.quadrants = plane_quadrants(first->name, fill);
    out.yes = true;
    out.certificate = cert;
    return out;
  }

  const Box A = bounding_box(hole).expanded(1, 1);
  PackingTarget target;
  target.must = A.cells().minus(hole);
  int dx = static_cast<int>(rects.max_tile_width()) - 1, dy = static_cast<int>(rects.max_tile_height()) - 1;
  target.optional = A.expanded(dx, dy).cells().minus(hole).minus(target.must);
  SearchOptions opts;
  opts.node_budget = node_budget;
  SolveResult res = solve_packing(rects, target, opts);
  if (res.outcome == Outcome::kBudgetExceeded) {
    out.budget_exceeded = true;
    return out;
  }
  if (res.outcome == Outcome::kUntileable) return out;

  cert.frame = A;
  for (const auto& p : res.witness->placements)
    cert.patch.push_back({p.tile, rects.find(p.tile)->shape().bounds(), p.offset});

  int l_top = INT_MAX, r_top = INT_MIN, l_bot = INT_MAX, r_bot = INT_MIN;
  int t_left = INT_MIN, b_left = INT_MAX, t_right = INT_MIN, b_right = INT_MAX;
  for (const auto& p : cert.patch) {
    Box b = p.box();
    if (b.y1 >= A.y1) {
      cert.strips.push_back({p, Side::N, p.rect.h});
      l_top = std::min(l_top, b.x0);
      r_top = std::max(r_top, b.x1);
    }
    if (b.y0 <= A.y0) {
      cert.strips.push_back({p, Side::S, p.rect.h});
      l_bot = std::min(l_bot, b.x0);
      r_bot = std::max(r_bot, b.x1);
    }
    if (b.x0 <= A.x0) {
      cert.strips.push_back({p, Side::W, p.rect.w});
      t_left = std::max(t_left, b.y1);
      b_left = std::min(b_left, b.y0);
    }
    if (b.x1 >= A.x1) {
      cert.strips.push_back({p, Side::E, p.rect.w});
      t_right = std::max(t_right, b.y1);
      b_right = std::min(b_right, b.y0);
    }
  }
  cert.quadrants = {{first->name, fill, {l_top - 1, t_left + 1}, -1, 1},
                    {first->name, fill, {r_top + 1, t_right + 1}, 1, 1},
                    {first->name, fill, {l_bot - 1, b_left - 1}, -1, -1},
                    {first->name, fill, {r_bot + 1, b_right - 1}, 1, -1}};
  out.yes = true;
  out.certificate = std::move(cert);
  return out;
}

std::vector<Piece> materialize(const PeriodicCertificate& cert, const Box& window) {
  std::vector<Piece> out;
  if (window.empty()) return out;
  for (const auto& p : cert.patch) {
    Box b = p.box();
    if (overlaps(b.x0, b.x1, window.x0, window.x1) && overlaps(b.y0, b.y1, window.y0, window.y1))
      out.push_back({p, PieceSource::kPatch});
  }
  for (const auto& s : cert.strips) {
    Box b = s.base.box();
    RectPlacement copy = s.base;
    bool vertical = s.direction == Side::N || s.direction == Side::S;
    if (vertical) {
      if (!overlaps(b.x0, b.x1, window.x0, window.x1)) continue;
      int dir = s.direction == Side::N ? 1 : -1;
      auto [i0, i1] = index_range(dir > 0 ? b.y0 : b.y1, s.period, dir, window.y0, window.y1, 1);
      for (int i = i0; i <= i1; ++i) {
        copy.at.y = b.y0 + dir * s.period * i;
        out.push_back({copy, PieceSource::kStrip});
      }
    } else {
      if (!overlaps(b.y0, b.y1, window.y0, window.y1)) continue;
      int dir = s.direction == Side::E ? 1 : -1;
      auto [i0, i1] = index_range(dir > 0 ? b.x0 : b.x1, s.period, dir, window.x0, window.x1, 1);
      for (int i = i0; i <= i1; ++i) {
        copy.at.x = b.x0 + dir * s.period * i;
        out.push_back({copy, PieceSource::kStrip});
      }
    }
  }
  for (const auto& q : cert.quadrants) {
    auto [i0, i1] = index_range(q.corner.x, q.rect.w, q.dx, window.x0, window.x1, 0);
    auto [j0, j1] = index_range(q.corner.y, q.rect.h, q.dy, window.y0, window.y1, 0);
    for (int i = i0; i <= i1; ++i)
      for (int j = j0; j <= j1; ++j) {
        int x = q.dx > 0 ? q.corner.x + q.rect.w * i : q.corner.x - q.rect.w * i - q.rect.w + 1;
        int y = q.dy > 0 ? q.corner.y + q.rect.h * j : q.corner.y - q.rect.h * j - q.rect.h + 1;
        out.push_back({{q.tile, q.rect, {x, y}}, PieceSource::kQuadrant});
      }
  }
  return out;
}

Validation verify_certificate(const PeriodicCertificate& cert, const Region& hole, const Box& window) {
  Validation v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.diagnostic = std::move(msg);
    return v;
  };
  if (window.empty()) return v;
  for (const auto& q : cert.quadrants)
    if (q.rect.w < 1 || q.rect.h < 1 || (q.dx != 1 && q.dx != -1) || (q.dy != 1 && q.dy != -1))
      return fail("malformed quadrant fill");
  for (const auto& s : cert.strips)
    if (s.period < 1 || s.base.rect.w < 1 || s.base.rect.h < 1) return fail("malformed strip");
  const int W = window.width(), H = window.height();
  std::vector<int> cover(static_cast<std::size_t>(W) * H, 0);
  for (const auto& piece : materialize(cert, window)) {
    Box b = piece.placement.box();
    for (int x = std::max(b.x0, window.x0); x <= std::min(b.x1, window.x1); ++x)
      for (int y = std::max(b.y0, window.y0); y <= std::min(b.y1, window.y1); ++y) {
        Cell c{x, y};
        if (hole.contains(c)) return fail("tile covers hole cell " + to_string(c));
        int& n = cover[static_cast<std::size_t>(x - window.x0) * H + (y - window.y0)];
        if (++n > 1) return fail("overlap at " + to_string(c));
      }
  }
  for (int x = window.x0; x <= window.x1; ++x)
    for (int y = window.y0; y <= window.y1; ++y)
      if (!hole.contains({x, y}) && cover[static_cast<std::size_t>(x - window.x0) * H + (y - window.y0)] == 0)
        return fail("uncovered cell " + to_string(Cell{x, y}));
  return v;
}

}  // namespace tileforge
