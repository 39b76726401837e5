#include "tileforge/augment.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace tileforge {

namespace {

const Color kL{"L"}, kR{"R"}, kT{"T"}, kV{"V"};

Color fix_white(const Color& c, Side s) { return c == kWhite ? directional_white(s) : c; }

// Figure order: left, top, bottom, right. Plain white becomes directional.
NamedTile sq(std::string name, const Color& left, const Color& top, const Color& bottom, const Color& right) {
  return {std::move(name), WangSquare{fix_white(top, Side::N), fix_white(right, Side::E), fix_white(bottom, Side::S),
                                      fix_white(left, Side::W)}};
}

std::string border_name(const char* kind, const std::string& x) { return std::string(kind) + "[" + x + "]"; }
std::string halt_name(const std::string& x, const std::string& q) { return "H[" + x + "," + q + "]"; }

std::vector<std::string> normalize_word(const TuringMachine& m, std::vector<std::string> word) {
  if (word.empty()) word.push_back(m.blank);
  for (const auto& x : word)
    if (std::find(m.alphabet.begin(), m.alphabet.end(), x) == m.alphabet.end())
      throw Error("input symbol '" + x + "' not in alphabet");
  return word;
}

bool admissible(const Color& c, Side facing, WhiteRule rule) {
  switch (rule) {
    case WhiteRule::kFree: return true;
    case WhiteRule::kWhite: return c == kWhite;
    case WhiteRule::kDirectional: return c == directional_white(facing);
  }
  return false;
}

}  // namespace

AugInstance build_aug_instance(const TuringMachine& m, std::vector<std::string> word, int check_steps) {
  m.validate();
  word = normalize_word(m, std::move(word));
  for (const auto& x : m.alphabet) {
    static const std::set<std::string> reserved = {"L", "R", "T", "V", "white", "L'", "R'", "T'", "V'", "H'", "B'"};
    if (reserved.count(x) || x.rfind("white-", 0) == 0) throw Error("symbol '" + x + "' is reserved");
  }
  if (m.deterministic()) {
    RunResult run = tm_run(m, word, check_steps);
    for (const auto& c : run.trace)
      if (c.head < 0) throw Error("machine moves left of the tape start");
  }

  AugInstance inst;
  inst.tileset = build_emulation_tileset(m, kV);
  auto& tiles = inst.tileset.tiles;
  tiles.push_back(sq("T", kT, kWhite, m.blank, kT));
  tiles.push_back(sq("TR", kT, kWhite, kR, kWhite));
  tiles.push_back(sq("L", kWhite, kL, kL, kV));
  tiles.push_back(sq("R", kV, kR, kR, kWhite));
  for (const auto& x : m.alphabet) tiles.push_back(sq(border_name("L", x), kL, x, kWhite, kL));
  for (const auto& q : m.halting)
    for (const auto& x : m.alphabet) tiles.push_back(sq(halt_name(x, q), kL, head_color(x, q), kWhite, kR));
  for (const auto& x : m.alphabet) tiles.push_back(sq(border_name("R", x), kR, x, kWhite, kR));
  tiles.push_back(sq("BL", kWhite, kL, kWhite, kL));
  tiles.push_back(sq("BR", kR, kR, kWhite, kWhite));

  const Color Lp{"L'"}, Rp{"R'"}, Tp{"T'"}, Vp{"V'"}, Hp{"H'"}, Bp{"B'"};
  tiles.push_back(sq("TL'", kWhite, kWhite, Lp, Tp));
  tiles.push_back(sq("T'", Tp, kWhite, Hp, Tp));
  tiles.push_back(sq("TR'", Tp, kWhite, Rp, kWhite));
  tiles.push_back(sq("L'", kWhite, Lp, Lp, Vp));
  tiles.push_back(sq("C'", Vp, Hp, Hp, Vp));
  tiles.push_back(sq("R'", Vp, Rp, Rp, kWhite));
  tiles.push_back(sq("BL'", kWhite, Lp, kWhite, Bp));
  tiles.push_back(sq("B'", Bp, Hp, kWhite, Bp));
  tiles.push_back(sq("BR'", Bp, Rp, kWhite, kWhite));

  const int r = static_cast<int>(word.size());
  inst.hole.region = rect_region({r + 1, 1}, {-1, 0});
  for (int x = -1; x < r; ++x) {
    inst.hole.constraints[{{x, 0}, Side::N}] = directional_white(Side::N);
    Color below = x < 0 ? kL : x == 0 ? head_color(word[0], m.start) : Color(word[static_cast<std::size_t>(x)]);
    inst.hole.constraints[{{x, 0}, Side::S}] = below;
  }
  inst.hole.constraints[{{-1, 0}, Side::W}] = directional_white(Side::W);
  inst.hole.constraints[{{r - 1, 0}, Side::E}] = kT;
  return inst;
}

DecoratedRegion aug_outer_target(const DecoratedRegion& hole, const Region& gamma_prime, WhiteRule rule) {
  DecoratedRegion out{gamma_prime.minus(hole.region), {}};
  DecoratedRegion outside = decorate_boundary(out.region, rule);
  for (const Edge& e : region_boundary(out.region)) {
    if (hole.region.contains(e.neighbor())) {
      auto it = hole.constraints.find(e.mirrored());
      if (it != hole.constraints.end()) out.constraints[e] = it->second;
    } else {
      auto it = outside.constraints.find(e);
      if (it != outside.constraints.end()) out.constraints[e] = it->second;
    }
  }
  return out;
}

DecoratedRegion aug_inner_target(const Region& gamma_prime, WhiteRule rule) { return decorate_boundary(gamma_prime, rule); }

Validation validate_aug_witness(const Tileset& ts, const DecoratedRegion& hole, const AugWitness& w, WhiteRule rule) {
  Validation v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.diagnostic = std::move(msg);
    return v;
  };
  if (!w.gamma_prime.includes(hole.region)) return fail("gamma' does not contain the hole");
  if (w.gamma_prime.empty() || !is_simply_connected(w.gamma_prime)) return fail("gamma' is not simply connected");
  if (ts.colored()) {
    for (const auto& [e, c] : hole.constraints)
      if (!w.gamma_prime.contains(e.neighbor()) && !admissible(c, e.side, rule))
        return fail("hole edge " + to_string(e.cell) + side_char(e.side) + " left on the boundary");
    Validation o = validate_tiling(ts, aug_outer_target(hole, w.gamma_prime, rule), w.outer);
    if (!o) return fail("outer: " + o.diagnostic);
    Validation i = validate_tiling(ts, aug_inner_target(w.gamma_prime, rule), w.inner);
    if (!i) return fail("inner: " + i.diagnostic);
  } else {
    Region rest = w.gamma_prime.minus(hole.region);
    if (!rest.empty()) {
      Validation o = validate_tiling(ts, rest, w.outer);
      if (!o) return fail("outer: " + o.diagnostic);
    } else if (!w.outer.placements.empty()) {
      return fail("outer: tiles in an empty region");
    }
    Validation i = validate_tiling(ts, w.gamma_prime, w.inner);
    if (!i) return fail("inner: " + i.diagnostic);
  }
  return v;
}

Tiling filler_tiling(const Box& b) {
  if (b.width() < 2 || b.height() < 2) throw Error("filler rectangles need both sides >= 2");
  Tiling t;
  for (int x = b.x0; x <= b.x1; ++x)
    for (int y = b.y0; y <= b.y1; ++y) {
      const char* col = x == b.x0 ? "L" : x == b.x1 ? "R" : "C";
      std::string name;
      if (y == b.y1) {
        name = x == b.x0 ? "TL'" : x == b.x1 ? "TR'" : "T'";
      } else if (y == b.y0) {
        name = x == b.x0 ? "BL'" : x == b.x1 ? "BR'" : "B'";
      } else {
        name = std::string(col) + "'";
      }
      t.placements.push_back({name, {x, y}, 0});
    }
  return t;
}

AugWitness halting_witness(const TuringMachine& m, std::vector<std::string> word, int max_steps) {
  m.validate();
  word = normalize_word(m, std::move(word));
  RunResult run = tm_run(m, word, max_steps);
  if (!run.halted) throw Error("machine does not halt within " + std::to_string(max_steps) + " steps");
  const int k = run.steps;
  const int r = static_cast<int>(word.size());
  long right = 0;
  for (const auto& c : run.trace) {
    if (c.head < 0) throw Error("machine moves left of the tape start");
    right = std::max(right, c.head);
  }
  const int W = std::max(r, static_cast<int>(right) + 1);

  AugWitness w;
  Box frame{-1, -(k + 1), W, 0};
  w.gamma_prime = frame.cells();
  auto put = [&](std::string name, int x, int y) { w.outer.placements.push_back({std::move(name), {x, y}, 0}); };

  for (int x = r; x < W; ++x) put("T", x, 0);
  put("TR", W, 0);
  for (int i = 1; i <= k; ++i) {
    const Configuration& c = run.trace[static_cast<std::size_t>(i - 1)];
    const std::string& read = c.at(c.head, m.blank);
    const Action& a = m.delta.at({c.state, read}).front();
    const char* dir = a.move == Move::R ? "R" : "L";
    const long to = c.head + (a.move == Move::R ? 1 : -1);
    put("L", -1, -i);
    for (int x = 0; x < W; ++x) {
      const std::string& y = c.at(x, m.blank);
      if (x == c.head) {
        put("A[" + c.state + "," + read + ">" + a.state + "," + a.write + "," + dir + "]", x, -i);
      } else if (x == to) {
        put("M[" + y + "," + a.state + "," + dir + "]", x, -i);
      } else {
        put("P[" + y + "]", x, -i);
      }
    }
    put("R", W, -i);
  }
  const Configuration& last = run.trace.back();
  put("BL", -1, -(k + 1));
  for (int x = 0; x < W; ++x) {
    const std::string& y = last.at(x, m.blank);
    if (x < last.head) {
      put(border_name("L", y), x, -(k + 1));
    } else if (x == last.head) {
      put(halt_name(y, last.state), x, -(k + 1));
    } else {
      put(border_name("R", y), x, -(k + 1));
    }
  }
  put("BR", W, -(k + 1));
  std::sort(w.outer.placements.begin(), w.outer.placements.end(),
            [](const Placement& a, const Placement& b) { return a.offset < b.offset; });
  w.inner = filler_tiling(frame);
  return w;
}

namespace {

struct Variant {
  std::string tile;
  std::vector<Cell> cells;
  std::vector<std::pair<Edge, Color>> edges;
};

std::vector<Variant> variants(const Tileset& ts) {
  std::vector<Variant> out;
  for (const auto& t : ts.tiles) {
    PlacedTile p = resolve_placement(ts, {t.name, {0, 0}, 0});
    out.push_back({t.name, p.cells.cells(), {p.colors.begin(), p.colors.end()}});
  }
  return out;
}

struct Budget {
  std::uint64_t left;
  bool exceeded = false;
  bool spend(std::uint64_t n = 1) {
    if (n > left) {
      left = 0;
      exceeded = true;
      return false;
    }
    left -= n;
    return true;
  }
};

class Search {
 public:
  Search(const Tileset& ts, const DecoratedRegion& hole, Rect box, WhiteRule rule, std::uint64_t budget)
      : ts_(ts), hole_(hole), box_(box), rule_(rule), vars_(variants(ts)), budget_{budget} {}

  AugSearchResult run() {
    if (!hole_.region.empty()) {
      Box hb = bounding_box(hole_.region);
      if (hb.width() > box_.w || hb.height() > box_.h) return finish();
    }
    if (ts_.colored()) {
      State s;
      for (const auto& [e, c] : hole_.constraints) {
        Cell n = e.neighbor();
        if (hole_.region.contains(n)) continue;
        if (admissible(c, e.side, rule_)) {
          if (rule_ == WhiteRule::kDirectional) s.outside.insert(n);
        } else {
          s.required.insert(n);
        }
      }
      grow(s);
    } else {
      pack_all();
    }
    return finish();
  }

 private:
  struct State {
    std::set<Cell> covered, outside, required;
    std::map<Edge, Color> colors;
    std::vector<Placement> placements;
  };

  AugSearchResult finish() {
    out_.budget_exceeded = budget_.exceeded && !out_.found;
    return out_;
  }

  bool fits(const State& s, const std::vector<Cell>& cells) const {
    int x0 = INT32_MAX, y0 = INT32_MAX, x1 = INT32_MIN, y1 = INT32_MIN;
    auto take = [&](Cell c) {
      x0 = std::min(x0, c.x);
      y0 = std::min(y0, c.y);
      x1 = std::max(x1, c.x);
      y1 = std::max(y1, c.y);
    };
    for (Cell c : hole_.region) take(c);
    if (!s.covered.empty()) {
      take(*s.covered.begin());
      take(*s.covered.rbegin());
      for (Cell c : s.covered) {
        y0 = std::min(y0, c.y);
        y1 = std::max(y1, c.y);
      }
    }
    for (Cell c : cells) take(c);
    return x1 - x0 + 1 <= box_.w && y1 - y0 + 1 <= box_.h;
  }

  std::optional<Color> color_of(const State& s, const Edge& e) const {
    if (hole_.region.contains(e.cell)) {
      auto it = hole_.constraints.find(e);
      if (it == hole_.constraints.end()) return std::nullopt;
      return it->second;
    }
    return s.colors.at(e);
  }

  // Places a colored variant; false on conflict.
  bool place(State& s, const Variant& v, Cell at) const {
    std::vector<Cell> cells;
    for (Cell c : v.cells) {
      Cell p = c + at;
      if (hole_.region.contains(p) || s.covered.count(p) || s.outside.count(p)) return false;
      cells.push_back(p);
    }
    if (!fits(s, cells)) return false;
    std::set<Cell> mine(cells.begin(), cells.end());
    std::vector<Cell> need, shut;
    for (const auto& [e0, col] : v.edges) {
      Edge e{e0.cell + at, e0.side};
      Cell n = e.neighbor();
      if (hole_.region.contains(n) || s.covered.count(n)) {
        auto other = color_of(s, e.mirrored());
        if (other && !(*other == col)) return false;
      } else if (s.outside.count(n)) {
        if (!admissible(col, e.side, rule_)) return false;
      } else if (!admissible(col, e.side, rule_)) {
        need.push_back(n);
      } else if (rule_ == WhiteRule::kDirectional) {
        shut.push_back(n);
      }
    }
    for (Cell c : need)
      if (std::find(shut.begin(), shut.end(), c) != shut.end()) return false;
    for (Cell c : cells) {
      s.covered.insert(c);
      s.required.erase(c);
    }
    for (const auto& [e0, col] : v.edges) s.colors[{e0.cell + at, e0.side}] = col;
    for (Cell c : need) s.required.insert(c);
    for (Cell c : shut) s.outside.insert(c);
    s.placements.push_back({v.tile, at, 0});
    return true;
  }

  bool grow(const State& s) {
    if (out_.found || !budget_.spend()) return out_.found;
    if (s.required.empty()) return leaf(s.covered, s.placements);
    Cell c = *s.required.begin();
    for (const Variant& v : vars_)
      for (Cell a : v.cells) {
        State next = s;
        if (!place(next, v, c - a)) continue;
        if (grow(next)) return true;
        if (budget_.exceeded) return false;
      }
    return false;
  }

  void pack_all() {
    Box hb = hole_.region.empty() ? Box{0, 0, 0, 0} : bounding_box(hole_.region);
    for (int x0 = hb.x1 - box_.w + 1; x0 <= hb.x0; ++x0)
      for (int y0 = hb.y1 - box_.h + 1; y0 <= hb.y0; ++y0) {
        Box b{x0, y0, x0 + box_.w - 1, y0 + box_.h - 1};
        cells_ = b.cells().minus(hole_.region).cells();
        box_cells_ = b;
        std::set<Cell> covered;
        std::vector<Placement> placed;
        if (pack(0, covered, placed) || budget_.exceeded) return;
      }
  }

  bool pack(std::size_t i, std::set<Cell>& covered, std::vector<Placement>& placed) {
    if (out_.found || !budget_.spend()) return out_.found;
    while (i < cells_.size() && covered.count(cells_[i])) ++i;
    if (i == cells_.size()) return leaf(covered, placed);
    if (pack(i + 1, covered, placed)) return true;
    Cell c = cells_[i];
    for (const Variant& v : vars_) {
      Cell at = c - v.cells.front();
      std::vector<Cell> cells;
      bool ok = true;
      for (Cell q : v.cells) {
        Cell p = q + at;
        if (!box_cells_.contains(p) || hole_.region.contains(p) || covered.count(p)) {
          ok = false;
          break;
        }
        cells.push_back(p);
      }
      if (!ok) continue;
      for (Cell p : cells) covered.insert(p);
      placed.push_back({v.tile, at, 0});
      bool hit = pack(i + 1, covered, placed);
      placed.pop_back();
      for (Cell p : cells) covered.erase(p);
      if (hit) return true;
      if (budget_.exceeded) return false;
    }
    return false;
  }

  bool leaf(const std::set<Cell>& covered, const std::vector<Placement>& placed) {
    Region gp = hole_.region.united(Region(std::vector<Cell>(covered.begin(), covered.end())));
    if (gp.empty() || !seen_.insert(gp).second) return false;
    if (!is_simply_connected(gp)) return false;
    ++out_.candidates;
    SearchOptions opts;
    opts.node_budget = budget_.left;
    SolveResult r = ts_.colored() ? tile_region(ts_, aug_inner_target(gp, rule_), opts) : tile_region(ts_, gp, opts);
    budget_.spend(r.nodes);
    if (r.outcome != Outcome::kTileable) return false;
    AugWitness w;
    w.gamma_prime = gp;
    w.outer.placements = placed;
    std::sort(w.outer.placements.begin(), w.outer.placements.end());
    w.inner = *r.witness;
    out_.found = true;
    out_.witness = std::move(w);
    return true;
  }

  const Tileset& ts_;
  const DecoratedRegion& hole_;
  Rect box_;
  WhiteRule rule_;
  std::vector<Variant> vars_;
  Budget budget_;
  AugSearchResult out_;
  std::set<Region> seen_;
  std::vector<Cell> cells_;
  Box box_cells_;
};

}  // namespace

AugSearchResult augmentable_bounded(const Tileset& ts, const DecoratedRegion& hole, Rect max_box, WhiteRule rule,
                                    std::uint64_t node_budget) {
  if (max_box.w < 1 || max_box.h < 1) throw Error("empty box");
  return Search(ts, hole, max_box, rule, node_budget).run();
}

AugSearchResult augmentable_bounded(const Tileset& ts, const Region& hole, Rect max_box, WhiteRule rule,
                                    std::uint64_t node_budget) {
  return augmentable_bounded(ts, DecoratedRegion::free(hole), max_box, rule, node_budget);
}

}  // namespace tileforge
