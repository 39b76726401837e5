#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tileforge/solver.hpp"

namespace tileforge {

struct RectPlacement {
  std::string tile;
  Rect rect;
  Cell at;  // lower-left cell

  Box box() const { return {at.x, at.y, at.x + rect.w - 1, at.y + rect.h - 1}; }
  auto operator<=>(const RectPlacement&) const = default;
};

// Copies at at + j * period * step(direction), j >= 1.
struct StripGenerator {
  RectPlacement base;
  Side direction = Side::N;
  int period = 1;
};

// Copies of one rectangle filling the quadrant that starts at `corner` and
// grows toward (dx, dy), each of dx, dy in {-1, +1}.
struct QuadrantFill {
  std::string tile;
  Rect rect;
  Cell corner;
  int dx = 1;
  int dy = 1;
};

struct PeriodicCertificate {
  Box frame;  // A; empty when the hole is empty
  std::vector<RectPlacement> patch;
  std::vector<StripGenerator> strips;
  std::vector<QuadrantFill> quadrants;  // TL, TR, BL, BR
};

struct CofiniteDecision {
  bool yes = false;
  bool budget_exceeded = false;  // neither yes nor no
  std::optional<PeriodicCertificate> certificate;
};

// Translation-only rectangles. Throws Error on an empty set or a non-rectangle.
CofiniteDecision decide_complement_rect(const Tileset& rects, const Region& hole,
                                        std::uint64_t node_budget = kDefaultNodeBudget);

enum class PieceSource { kPatch, kStrip, kQuadrant };

struct Piece {
  RectPlacement placement;
  PieceSource source = PieceSource::kPatch;
};

// Every certificate tile meeting `window`.
std::vector<Piece> materialize(const PeriodicCertificate& cert, const Box& window);

// True iff the materialized tiles partition window \ hole.
Validation verify_certificate(const PeriodicCertificate& cert, const Region& hole, const Box& window);

}  // namespace tileforge
