#include "tileforge/solver.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace tileforge {

namespace {

constexpr int kNoColor = -1;
constexpr int kInterior = -2;
constexpr int kFreeEdge = -1;

struct Oriented {
  std::vector<Cell> cells;
  EdgeColors colors;
};

Oriented orient(const NamedTile& t, int o) {
  std::vector<Cell> turned;
  Polyomino shape = t.shape();
  for (Cell c : shape.cells()) turned.push_back(apply_isometry(o, c));
  auto norm = normalize_region(turned);
  Oriented out{norm.region.cells(), {}};
  for (const auto& [e, col] : t.colors())
    out.colors[{apply_isometry(o, e.cell) - norm.anchor, apply_isometry(o, e.side)}] = col;
  return out;
}

class ColorIds {
 public:
  int id(const Color& c) { return ids_.try_emplace(c.name(), static_cast<int>(ids_.size())).first->second; }

 private:
  std::map<std::string, int> ids_;
};

struct Variant {
  int tile = 0;
  int orientation = 0;
  std::vector<Cell> cells;
  std::vector<std::array<int, 4>> colors;
};

std::vector<Variant> build_variants(const Tileset& ts, Symmetry sym, ColorIds& ids) {
  std::vector<Variant> out;
  int orientations = sym == Symmetry::kIsometries ? kIsometryCount : 1;
  for (int t = 0; t < static_cast<int>(ts.tiles.size()); ++t) {
    std::size_t first = out.size();
    for (int o = 0; o < orientations; ++o) {
      Oriented ori = orient(ts.tiles[t], o);
      Region shape(ori.cells);
      Variant v{t, o, ori.cells, {}};
      for (Cell c : v.cells) {
        std::array<int, 4> sides{};
        for (Side s : kSides) {
          int& slot = sides[static_cast<int>(s)];
          if (shape.contains(c + step(s))) {
            slot = kInterior;
          } else {
            auto it = ori.colors.find({c, s});
            slot = it == ori.colors.end() ? kNoColor : ids.id(it->second);
          }
        }
        v.colors.push_back(sides);
      }
      bool duplicate = false;
      for (std::size_t i = first; i < out.size(); ++i)
        if (out[i].cells == v.cells && out[i].colors == v.colors) duplicate = true;
      if (!duplicate) out.push_back(std::move(v));
    }
  }
  return out;
}

class Engine {
 public:
  Engine(const Tileset& ts, const PackingTarget& target, const SearchOptions& opts)
      : ts_(ts), opts_(opts), colored_(ts.colored()) {
    variants_ = build_variants(ts, opts.symmetry, ids_);
    Region all = target.must.united(target.optional);
    box_ = bounding_box(all);
    height_ = std::max(box_.height(), 0);
    std::size_t n = static_cast<std::size_t>(box_.width()) * static_cast<std::size_t>(height_);
    kind_.assign(n, 0);
    owner_.assign(n, -1);
    placed_.assign(n, {kNoColor, kNoColor, kNoColor, kNoColor});
    constraint_.assign(n, {kFreeEdge, kFreeEdge, kFreeEdge, kFreeEdge});
    for (Cell c : target.optional) kind_[index(c)] = 2;
    for (Cell c : target.must) {
      kind_[index(c)] = 1;
      must_.push_back(index(c));
    }
    has_optional_ = !target.optional.minus(target.must).empty();
    for (const auto& [e, col] : target.constraints) {
      int i = index(e.cell);
      if (i >= 0 && kind_[i] != 0) constraint_[i][static_cast<int>(e.side)] = ids_.id(col);
    }
  }

  SolveResult run() {
    dfs(0);
    if (exceeded_ && !(opts_.mode == SearchMode::kDecide && result_.witness)) {
      result_.outcome = Outcome::kBudgetExceeded;
    } else {
      result_.outcome = result_.count > 0 ? Outcome::kTileable : Outcome::kUntileable;
    }
    result_.nodes = nodes_;
    return std::move(result_);
  }

 private:
  struct Move {
    int variant;
    Cell offset;
  };

  int index(Cell c) const {
    if (!box_.contains(c)) return -1;
    return (c.x - box_.x0) * height_ + (c.y - box_.y0);
  }
  Cell cell_at(int i) const { return {box_.x0 + i / height_, box_.y0 + i % height_}; }

  bool fits(const Variant& v, Cell off) const {
    for (Cell c : v.cells) {
      int i = index(c + off);
      if (i < 0 || kind_[i] == 0 || owner_[i] >= 0) return false;
    }
    if (!colored_) return true;
    for (std::size_t k = 0; k < v.cells.size(); ++k) {
      Cell c = v.cells[k] + off;
      int i = index(c);
      for (Side s : kSides) {
        int col = v.colors[k][static_cast<int>(s)];
        if (col < 0) continue;
        int ni = index(c + step(s));
        if (ni >= 0 && owner_[ni] >= 0) {
          if (placed_[ni][static_cast<int>(opposite(s))] != col) return false;
          continue;
        }
        int want = constraint_[i][static_cast<int>(s)];
        if (want != kFreeEdge && want != col) return false;
      }
    }
    return true;
  }

  void place(const Move& m, int id) {
    const Variant& v = variants_[m.variant];
    for (std::size_t k = 0; k < v.cells.size(); ++k) {
      int i = index(v.cells[k] + m.offset);
      owner_[i] = id;
      placed_[i] = v.colors[k];
    }
  }

  void unplace(const Move& m) {
    const Variant& v = variants_[m.variant];
    for (Cell c : v.cells) {
      int i = index(c + m.offset);
      owner_[i] = -1;
      placed_[i] = {kNoColor, kNoColor, kNoColor, kNoColor};
    }
  }

  bool all_anchors() const { return colored_ || has_optional_; }

  // Appends candidate moves covering `cell`; stops once `limit` are found.
  std::size_t candidates(Cell cell, std::size_t limit, std::vector<Move>* out) const {
    std::size_t n = 0;
    for (int vi = 0; vi < static_cast<int>(variants_.size()); ++vi) {
      const Variant& v = variants_[vi];
      std::size_t anchors = all_anchors() ? v.cells.size() : 1;
      for (std::size_t k = 0; k < anchors; ++k) {
        Cell off = cell - v.cells[k];
        if (!fits(v, off)) continue;
        if (out) out->push_back({vi, off});
        if (++n >= limit) return n;
      }
    }
    return n;
  }

  // Branch cell: least uncovered must cell for uncolored sets; otherwise
  // the first cell with <= 1 candidates, else the fewest (least cell on ties).
  int choose(std::size_t& cursor) const {
    while (cursor < must_.size() && owner_[must_[cursor]] >= 0) ++cursor;
    if (cursor == must_.size()) return -1;
    if (!colored_) return must_[cursor];
    int best = -1;
    std::size_t best_count = SIZE_MAX;
    for (std::size_t j = cursor; j < must_.size(); ++j) {
      int i = must_[j];
      if (owner_[i] >= 0) continue;
      std::size_t n = candidates(cell_at(i), best_count, nullptr);
      if (n < best_count) {
        best = i;
        best_count = n;
        if (n <= 1) break;
      }
    }
    return best;
  }

  void record() {
    ++result_.count;
    if (opts_.mode == SearchMode::kEnumerate && result_.tilings.size() >= opts_.enumerate_cap) {
      result_.cap_hit = true;
      return;
    }
    Tiling t;
    for (const Move& m : stack_) {
      const Variant& v = variants_[m.variant];
      t.placements.push_back({ts_.tiles[v.tile].name, m.offset, v.orientation});
    }
    if (!result_.witness) result_.witness = t;
    if (opts_.mode == SearchMode::kEnumerate) result_.tilings.push_back(std::move(t));
  }

  bool stop() const {
    if (exceeded_) return true;
    if (opts_.mode == SearchMode::kDecide) return result_.count > 0;
    if (opts_.mode == SearchMode::kEnumerate) return result_.cap_hit;
    return false;
  }

  void dfs(std::size_t cursor) {
    if (++nodes_ > opts_.node_budget) {
      exceeded_ = true;
      return;
    }
    int target = choose(cursor);
    if (target < 0) {
      record();
      return;
    }
    std::vector<Move> moves;
    candidates(cell_at(target), SIZE_MAX, &moves);
    for (const Move& m : moves) {
      place(m, static_cast<int>(stack_.size()));
      stack_.push_back(m);
      dfs(cursor);
      stack_.pop_back();
      unplace(m);
      if (stop()) return;
    }
  }

  const Tileset& ts_;
  SearchOptions opts_;
  bool colored_;
  ColorIds ids_;
  std::vector<Variant> variants_;
  Box box_;
  int height_ = 0;
  std::vector<std::uint8_t> kind_;  // 0 forbidden, 1 must, 2 optional
  std::vector<int> owner_;
  std::vector<std::array<int, 4>> placed_;
  std::vector<std::array<int, 4>> constraint_;
  std::vector<int> must_;
  bool has_optional_ = false;
  std::vector<Move> stack_;
  SolveResult result_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kTileable: return "tileable";
    case Outcome::kUntileable: return "untileable";
    case Outcome::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

PlacedTile resolve_placement(const Tileset& ts, const Placement& p) {
  const NamedTile* t = ts.find(p.tile);
  if (!t) throw Error("unknown tile '" + p.tile + "'");
  if (p.orientation < 0 || p.orientation >= kIsometryCount) throw Error("bad orientation");
  Oriented o = orient(*t, p.orientation);
  PlacedTile out{Region(o.cells).translated(p.offset), {}};
  for (const auto& [e, c] : o.colors) out.colors[{e.cell + p.offset, e.side}] = c;
  return out;
}

SolveResult solve_packing(const Tileset& ts, const PackingTarget& target, const SearchOptions& opts) {
  if (ts.tiles.empty()) throw Error("empty tileset");
  if (opts.node_budget == 0) throw Error("node budget must be positive");
  return Engine(ts, target, opts).run();
}

SolveResult tile_region(const Tileset& ts, const Region& target, const SearchOptions& opts) {
  if (ts.colored()) throw Error("colored tileset needs a decorated target");
  return solve_packing(ts, PackingTarget::exact(target), opts);
}

SolveResult tile_region(const Tileset& ts, const DecoratedRegion& target, const SearchOptions& opts) {
  if (!ts.colored()) throw Error("polyomino tileset needs a plain region target");
  return solve_packing(ts, PackingTarget::exact(target), opts);
}

Validation validate_packing(const Tileset& ts, const PackingTarget& target, const Tiling& tiling) {
  auto fail = [](std::string msg) { return Validation{false, std::move(msg)}; };
  std::map<Cell, std::size_t> owner;
  std::vector<PlacedTile> placed;
  for (std::size_t i = 0; i < tiling.placements.size(); ++i) {
    try {
      placed.push_back(resolve_placement(ts, tiling.placements[i]));
    } catch (const Error& e) {
      return fail(e.what());
    }
    for (Cell c : placed.back().cells) {
      if (!target.must.contains(c) && !target.optional.contains(c))
        return fail("cell outside target " + to_string(c));
      if (!owner.emplace(c, i).second) return fail("overlap at cell " + to_string(c));
    }
  }
  for (Cell c : target.must)
    if (!owner.count(c)) return fail("uncovered cell " + to_string(c));
  for (std::size_t i = 0; i < placed.size(); ++i) {
    for (const auto& [e, col] : placed[i].colors) {
      auto it = owner.find(e.neighbor());
      if (it != owner.end() && it->second != i) {
        const auto& other = placed[it->second].colors;
        auto oc = other.find(e.mirrored());
        if (oc != other.end() && !(oc->second == col))
          return fail("color mismatch at " + to_string(e.cell) + side_char(e.side));
        continue;
      }
      auto want = target.constraints.find(e);
      if (want != target.constraints.end() && !(want->second == col))
        return fail("constraint mismatch at " + to_string(e.cell) + side_char(e.side));
    }
  }
  return {};
}

Validation validate_tiling(const Tileset& ts, const Region& target, const Tiling& tiling) {
  return validate_packing(ts, PackingTarget::exact(target), tiling);
}

Validation validate_tiling(const Tileset& ts, const DecoratedRegion& target, const Tiling& tiling) {
  return validate_packing(ts, PackingTarget::exact(target), tiling);
}

DecoratedRegion decorate_boundary(const Region& r, WhiteRule rule) {
  switch (rule) {
    case WhiteRule::kFree: return DecoratedRegion::free(r);
    case WhiteRule::kWhite: return DecoratedRegion::uniform(r, kWhite);
    case WhiteRule::kDirectional: {
      DecoratedRegion d{r, {}};
      for (const Edge& e : region_boundary(r)) d.constraints[e] = directional_white(e.side);
      return d;
    }
  }
  return DecoratedRegion::free(r);
}

RectSearchResult find_rectangle(const Tileset& ts, int max_area, const SearchOptions& opts, WhiteRule rule) {
  if (max_area < 1) throw Error("max_area must be positive");
  SearchOptions decide = opts;
  decide.mode = SearchMode::kDecide;
  std::size_t g = 0;
  for (const auto& t : ts.tiles) g = std::gcd(g, t.shape().area());
  RectSearchResult out;
  bool clean = true;
  for (int area = 1; area <= max_area; ++area) {
    if (g > 1 && area % static_cast<int>(g) != 0) {
      if (clean) out.searched_area = area;
      continue;
    }
    for (int w = 1; w <= area; ++w) {
      if (area % w) continue;
      Rect r{w, area / w};
      Region target = rect_region(r);
      SolveResult res = ts.colored() ? tile_region(ts, decorate_boundary(target, rule), decide)
                                     : tile_region(ts, target, decide);
      if (res.outcome == Outcome::kTileable) {
        out.found = true;
        out.rect = r;
        out.tiling = *res.witness;
        return out;
      }
      if (res.outcome == Outcome::kBudgetExceeded) {
        out.budget_exceeded = true;
        clean = false;
      }
    }
    if (clean) out.searched_area = area;
  }
  return out;
}

namespace {

// Row-major backtracking over a k x k torus of Wang squares.
class TorusSearch {
 public:
  TorusSearch(const Tileset& ts, int k, std::uint64_t budget) : k_(k), budget_(budget) {
    for (const auto& t : ts.tiles) squares_.push_back(to_wang_square(GenWangTile{t.shape(), t.colors()}));
    grid_.assign(static_cast<std::size_t>(k * k), -1);
  }

  std::optional<std::vector<int>> run() {
    if (dfs(0)) return grid_;
    return std::nullopt;
  }
  bool exceeded() const { return exceeded_; }

 private:
  bool ok(int x, int y, int s) const {
    const WangSquare& q = squares_[s];
    for (Side side : kSides) {
      Cell d = step(side);
      int nx = (x + d.x + k_) % k_, ny = (y + d.y + k_) % k_;
      int n = nx == x && ny == y ? s : grid_[static_cast<std::size_t>(nx * k_ + ny)];
      if (n < 0) continue;
      if (!(squares_[n].on(opposite(side)) == q.on(side))) return false;
    }
    return true;
  }

  bool dfs(int pos) {
    if (++nodes_ > budget_) {
      exceeded_ = true;
      return false;
    }
    if (pos == k_ * k_) return true;
    int x = pos / k_, y = pos % k_;
    for (int s = 0; s < static_cast<int>(squares_.size()); ++s) {
      if (!ok(x, y, s)) continue;
      grid_[static_cast<std::size_t>(pos)] = s;
      if (dfs(pos + 1)) return true;
      grid_[static_cast<std::size_t>(pos)] = -1;
      if (exceeded_) return false;
    }
    return false;
  }

  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  std::vector<WangSquare> squares_;
  std::vector<int> grid_;
};

}  // namespace

bool is_torus_tiling(const Tileset& wang, int k, const Tiling& tiling) {
  std::map<Cell, WangSquare> grid;
  for (const auto& p : tiling.placements) {
    const NamedTile* t = wang.find(p.tile);
    if (!t || p.orientation != 0) return false;
    if (p.offset.x < 0 || p.offset.y < 0 || p.offset.x >= k || p.offset.y >= k) return false;
    if (!grid.emplace(p.offset, to_wang_square(GenWangTile{t->shape(), t->colors()})).second) return false;
  }
  if (grid.size() != static_cast<std::size_t>(k * k)) return false;
  for (const auto& [c, sq] : grid) {
    const WangSquare& east = grid.at({(c.x + 1) % k, c.y});
    const WangSquare& north = grid.at({c.x, (c.y + 1) % k});
    if (!(sq.east == east.west) || !(sq.north == north.south)) return false;
  }
  return true;
}

PlaneResult plane_semidecide(const Tileset& wang, int max_n, std::uint64_t node_budget) {
  if (wang.species == Species::kPolyomino) throw Error("plane search needs Wang squares");
  for (const auto& t : wang.tiles)
    if (t.shape().area() != 1) throw Error("plane search needs Wang squares");
  SearchOptions opts;
  opts.node_budget = node_budget;
  for (int n = 1; n <= max_n; ++n) {
    TorusSearch torus(wang, n, node_budget);
    if (auto grid = torus.run()) {
      PlaneResult out{PlaneStatus::kPeriodic, n, {}};
      for (int i = 0; i < n * n; ++i)
        out.fundamental.placements.push_back(
            {wang.tiles[static_cast<std::size_t>((*grid)[static_cast<std::size_t>(i)])].name, {i / n, i % n}, 0});
      return out;
    }
    if (torus.exceeded()) return {PlaneStatus::kUnknown, n, {}};
    SolveResult res = tile_region(wang, DecoratedRegion::free(rect_region({n, n})), opts);
    if (res.outcome == Outcome::kUntileable) return {PlaneStatus::kEmpty, n, {}};
    if (res.outcome == Outcome::kBudgetExceeded) return {PlaneStatus::kUnknown, n, {}};
  }
  return {PlaneStatus::kUnknown, max_n, {}};
}

OrderResult polyomino_order(const Polyomino& p, int max_area, Symmetry symmetry, std::uint64_t node_budget) {
  Tileset ts = polyomino_tileset({{"P", p}});
  SearchOptions opts;
  opts.symmetry = symmetry;
  opts.node_budget = node_budget;
  RectSearchResult r = find_rectangle(ts, max_area, opts);
  OrderResult out;
  out.budget_exceeded = r.budget_exceeded;
  if (r.found) {
    out.found = true;
    out.rect = r.rect;
    out.copies = r.rect.area() / static_cast<int>(p.area());
    out.tiling = r.tiling;
  }
  return out;
}

int tileset_min_rect_area(const Tileset& ts, int max_area, const SearchOptions& opts) {
  RectSearchResult r = find_rectangle(ts, max_area, opts);
  return r.found ? r.rect.area() : 0;
}

}  // namespace tileforge
