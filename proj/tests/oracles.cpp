#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

CellSet normalize(const CellSet& s) {
  if (s.empty()) return s;
  int mx = s.begin()->first, my = s.begin()->second;
  for (auto [x, y] : s) {
    mx = std::min(mx, x);
    my = std::min(my, y);
  }
  CellSet out;
  for (auto [x, y] : s) out.insert({x - mx, y - my});
  return out;
}

std::vector<CellSet> orientations(const CellSet& shape, bool reflections) {
  std::set<CellSet> seen;
  std::vector<CellSet> out;
  for (int f = 0; f < (reflections ? 2 : 1); ++f) {
    for (int r = 0; r < 4; ++r) {
      CellSet t;
      for (auto [x, y] : shape) {
        int a = f ? -x : x, b = y;
        for (int i = 0; i < r; ++i) {
          int na = -b, nb = a;
          a = na;
          b = nb;
        }
        t.insert({a, b});
      }
      t = normalize(t);
      if (seen.insert(t).second) out.push_back(t);
      if (!reflections && r == 3) break;
    }
  }
  return out;
}

namespace {

bool pack(const std::vector<CellSet>& tiles, const CellSet& must, const CellSet& allowed, CellSet& used) {
  auto it = std::find_if(must.begin(), must.end(), [&](const Pt& p) { return !used.count(p); });
  if (it == must.end()) return true;
  Pt c = *it;
  for (const auto& t : tiles) {
    for (const Pt& a : t) {
      CellSet placed;
      bool fits = true;
      for (const Pt& q : t) {
        Pt p{q.first - a.first + c.first, q.second - a.second + c.second};
        if (!allowed.count(p) || used.count(p)) {
          fits = false;
          break;
        }
        placed.insert(p);
      }
      if (!fits) continue;
      used.insert(placed.begin(), placed.end());
      bool ok = pack(tiles, must, allowed, used);
      for (const Pt& p : placed) used.erase(p);
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

bool packing_exists(const std::vector<CellSet>& tiles, const CellSet& must, const CellSet& allowed) {
  CellSet used;
  return pack(tiles, must, allowed, used);
}

std::uint64_t count_tilings(const std::vector<CellSet>& tiles, const CellSet& target, bool reflections) {
  // Every fitting (tile, cell set) pair; equal shapes from different tiles stay distinct.
  std::set<std::pair<std::size_t, CellSet>> keyed;
  std::vector<CellSet> pieces;
  for (std::size_t ti = 0; ti < tiles.size(); ++ti) {
    std::vector<CellSet> os = orientations(tiles[ti], reflections);
    if (!reflections) os = {normalize(tiles[ti])};
    for (const auto& o : os)
      for (auto [tx, ty] : target)
        for (auto [ox, oy] : o) {
          CellSet placed;
          bool fits = true;
          for (auto [x, y] : o) {
            Pt p{x - ox + tx, y - oy + ty};
            if (!target.count(p)) fits = false;
            placed.insert(p);
          }
          if (fits && keyed.insert({ti, placed}).second) pieces.push_back(placed);
        }
  }
  CellSet covered;
  std::function<std::uint64_t()> rec = [&]() -> std::uint64_t {
    Pt first{0, 0};
    bool any = false;
    for (const Pt& p : target)
      if (!covered.count(p)) {
        first = p;
        any = true;
        break;
      }
    if (!any) return 1;
    std::uint64_t n = 0;
    for (const auto& pc : pieces) {
      if (!pc.count(first)) continue;
      bool free = std::none_of(pc.begin(), pc.end(), [&](const Pt& p) { return covered.count(p) > 0; });
      if (!free) continue;
      covered.insert(pc.begin(), pc.end());
      n += rec();
      for (const Pt& p : pc) covered.erase(p);
    }
    return n;
  };
  return rec();
}

bool simply_connected(const CellSet& s) {
  if (s.empty()) return false;
  CellSet seen{*s.begin()};
  std::vector<Pt> stack{*s.begin()};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    for (Pt d : {Pt{1, 0}, Pt{-1, 0}, Pt{0, 1}, Pt{0, -1}}) {
      Pt q{x + d.first, y + d.second};
      if (s.count(q) && seen.insert(q).second) stack.push_back(q);
    }
  }
  if (seen.size() != s.size()) return false;
  std::set<Pt> verts;
  std::set<std::tuple<int, int, int>> edges;  // (x, y, horizontal?)
  for (auto [x, y] : s) {
    for (int dx = 0; dx < 2; ++dx)
      for (int dy = 0; dy < 2; ++dy) verts.insert({x + dx, y + dy});
    edges.insert({x, y, 1});
    edges.insert({x, y + 1, 1});
    edges.insert({x, y, 0});
    edges.insert({x + 1, y, 0});
  }
  long chi = static_cast<long>(verts.size()) - static_cast<long>(edges.size()) + static_cast<long>(s.size());
  return chi == 1;
}

std::uint64_t count_wang_rect(const std::vector<Square>& tiles, int w, int h, const std::string& boundary) {
  int n = w * h;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto at = [&](int x, int y) -> const Square& { return tiles[static_cast<std::size_t>(a[static_cast<std::size_t>(x * h + y)])]; };
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int x = 0; x < w && ok; ++x)
      for (int y = 0; y < h && ok; ++y) {
        const Square& q = at(x, y);
        if (x + 1 < w && q.e != at(x + 1, y).w) ok = false;
        if (y + 1 < h && q.n != at(x, y + 1).s) ok = false;
        if (!boundary.empty()) {
          if (x == 0 && q.w != boundary) ok = false;
          if (x == w - 1 && q.e != boundary) ok = false;
          if (y == 0 && q.s != boundary) ok = false;
          if (y == h - 1 && q.n != boundary) ok = false;
        }
      }
    if (ok) ++count;
    int i = 0;
    while (i < n && ++a[static_cast<std::size_t>(i)] == static_cast<int>(tiles.size())) a[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return count;
}

TmRun run_tm(const std::map<std::pair<std::string, std::string>, Rule>& rules, const std::set<std::string>& halting,
             const std::string& start, const std::string& blank, long limit) {
  TmRun r;
  r.state = start;
  for (long step = 0; step <= limit; ++step) {
    if (halting.count(r.state)) {
      r.steps = step;
      return r;
    }
    auto it = r.tape.find(r.head);
    std::string sym = it == r.tape.end() ? blank : it->second;
    auto rule = rules.find({r.state, sym});
    if (rule == rules.end()) return r;
    r.tape[r.head] = rule->second.write;
    r.head += rule->second.move == 'R' ? 1 : -1;
    r.min_head = std::min(r.min_head, r.head);
    r.max_head = std::max(r.max_head, r.head);
    r.state = rule->second.next;
  }
  return r;
}

std::vector<int> pcp_search(const std::vector<std::pair<std::string, std::string>>& pairs, int max_len) {
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& seq : frontier)
      for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
        auto s = seq;
        s.push_back(i + 1);
        std::string top, bottom;
        for (int j : s) {
          top += pairs[static_cast<std::size_t>(j - 1)].first;
          bottom += pairs[static_cast<std::size_t>(j - 1)].second;
        }
        if (top == bottom) return s;
        next.push_back(s);
      }
    frontier = std::move(next);
  }
  return {};
}

}  // namespace oracle
