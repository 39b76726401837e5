#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tileforge/core.hpp"
#include "tileforge/wang.hpp"

namespace tileforge {

enum class Symmetry { kTranslations, kIsometries };
enum class SearchMode { kDecide, kCount, kEnumerate };

inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;

struct SearchOptions {
  SearchMode mode = SearchMode::kDecide;
  Symmetry symmetry = Symmetry::kTranslations;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t enumerate_cap = 1000;
};

// A copy of tile `tile`, turned by `orientation` (see apply_isometry),
// renormalized to min x = min y = 0, then translated by `offset`.
struct Placement {
  std::string tile;
  Cell offset;
  int orientation = 0;

  auto operator<=>(const Placement&) const = default;
};

struct Tiling {
  std::vector<Placement> placements;

  auto operator<=>(const Tiling&) const = default;
  bool operator==(const Tiling&) const = default;
};

// Cells and absolute edge colors of one placement.
struct PlacedTile {
  Region cells;
  EdgeColors colors;
};

// Throws Error on an unknown tile or orientation out of range.
PlacedTile resolve_placement(const Tileset& ts, const Placement& p);

// Generic packing problem: cover every `must` cell exactly once, possibly
// spilling into `optional` cells, never touching anything else.
// `constraints` are keyed by the tile-side edge: the tile covering
// edge.cell must carry that color on edge.side.
struct PackingTarget {
  Region must;
  Region optional;
  EdgeColors constraints;

  static PackingTarget exact(const Region& r) { return {r, {}, {}}; }
  static PackingTarget exact(const DecoratedRegion& d) { return {d.region, {}, d.constraints}; }
};

enum class Outcome { kTileable, kUntileable, kBudgetExceeded };
std::string outcome_name(Outcome o);

struct SolveResult {
  Outcome outcome = Outcome::kUntileable;
  std::optional<Tiling> witness;   // first tiling found in canonical order
  std::uint64_t count = 0;         // exact in count mode; found so far otherwise
  std::vector<Tiling> tilings;     // enumerate mode
  bool cap_hit = false;
  std::uint64_t nodes = 0;
};

SolveResult solve_packing(const Tileset& ts, const PackingTarget& target, const SearchOptions& opts = {});

// Polyomino tilesets take a plain region; colored tilesets require a
// decorated region. Throws Error on a species/target mismatch.
SolveResult tile_region(const Tileset& ts, const Region& target, const SearchOptions& opts = {});
SolveResult tile_region(const Tileset& ts, const DecoratedRegion& target, const SearchOptions& opts = {});

struct Validation {
  bool ok = true;
  std::string diagnostic;  // first violation
  explicit operator bool() const { return ok; }
};

Validation validate_packing(const Tileset& ts, const PackingTarget& target, const Tiling& tiling);
Validation validate_tiling(const Tileset& ts, const Region& target, const Tiling& tiling);
Validation validate_tiling(const Tileset& ts, const DecoratedRegion& target, const Tiling& tiling);

// How the outside boundary of a searched rectangle is decorated.
enum class WhiteRule { kFree, kWhite, kDirectional };
DecoratedRegion decorate_boundary(const Region& r, WhiteRule rule);

struct RectSearchResult {
  bool found = false;
  bool budget_exceeded = false;
  Rect rect;
  Tiling tiling;
  int searched_area = 0;  // every rectangle of area <= this was refuted (when not found)
};

// Rectangles in increasing area, ties by increasing width. Colored tilesets
// get an all-white boundary (WhiteRule::kWhite) unless told otherwise.
RectSearchResult find_rectangle(const Tileset& ts, int max_area, const SearchOptions& opts = {},
                                WhiteRule rule = WhiteRule::kWhite);

enum class PlaneStatus { kPeriodic, kEmpty, kUnknown };

struct PlaneResult {
  PlaneStatus status = PlaneStatus::kUnknown;
  int n = 0;
  Tiling fundamental;  // k x k torus tiling at origin when periodic
};

PlaneResult plane_semidecide(const Tileset& wang, int max_n, std::uint64_t node_budget = kDefaultNodeBudget);

// Torus check used by plane_semidecide; exposed for tests.
bool is_torus_tiling(const Tileset& wang, int k, const Tiling& tiling);

struct OrderResult {
  bool found = false;
  bool budget_exceeded = false;
  int copies = 0;
  Rect rect;
  Tiling tiling;
};

OrderResult polyomino_order(const Polyomino& p, int max_area, Symmetry symmetry,
                            std::uint64_t node_budget = kDefaultNodeBudget);

// Minimum area of a tileable rectangle, 0 when none up to max_area.
int tileset_min_rect_area(const Tileset& ts, int max_area, const SearchOptions& opts = {});

}  // namespace tileforge
