#include "tileforge/pcp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tileforge {

namespace {

const std::set<std::string> kReserved{"U", "D", "V", "T", "L", "R", "B", "white", "mono"};

}  // namespace

Word PcpInstance::tokenize(const std::string& s) const {
  Word out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t best = 0;
    for (const auto& a : alphabet)
      if (a.size() > best && s.compare(i, a.size(), a) == 0) best = a.size();
    if (best == 0) throw Error("word '" + s + "' is not over the alphabet");
    out.push_back(s.substr(i, best));
    i += best;
  }
  return out;
}

void PcpInstance::validate() const {
  if (alphabet.empty()) throw Error("empty alphabet");
  std::set<std::string> seen;
  for (const auto& a : alphabet) {
    if (a.empty()) throw Error("empty symbol");
    if (kReserved.count(a)) throw Error("symbol '" + a + "' collides with a reserved color");
    if (a.find_first_of("(),") != std::string::npos) throw Error("symbol '" + a + "' contains ( ) or ,");
    if (!seen.insert(a).second) throw Error("duplicate symbol '" + a + "'");
  }
  if (pairs.empty()) throw Error("no pairs");
  for (const auto& [j, k] : pairs) {
    if (j.empty() || k.empty()) throw Error("empty word in pair");
    for (const Word* w : {&j, &k})
      for (const auto& x : *w)
        if (!seen.count(x)) throw Error("symbol '" + x + "' not in alphabet");
  }
}

PcpInstance make_pcp(std::vector<std::string> alphabet, const std::vector<std::pair<std::string, std::string>>& pairs) {
  PcpInstance inst{std::move(alphabet), {}};
  for (const auto& [j, k] : pairs) inst.pairs.push_back({inst.tokenize(j), inst.tokenize(k)});
  inst.validate();
  return inst;
}

bool is_pcp_solution(const PcpInstance& inst, const PcpSolution& sol) {
  if (sol.empty()) return false;
  Word top, bottom;
  for (int e : sol) {
    if (e < 1 || e > static_cast<int>(inst.pairs.size())) return false;
    const auto& [j, k] = inst.pairs[static_cast<std::size_t>(e - 1)];
    top.insert(top.end(), j.begin(), j.end());
    bottom.insert(bottom.end(), k.begin(), k.end());
  }
  return top == bottom;
}

namespace {

std::string tag(const std::string& x, int t) { return "(" + x + "," + std::to_string(t) + ")"; }
std::string chan(int t, char dir) { return "(" + std::to_string(t) + "," + std::string(1, dir) + ")"; }

// Argument order follows the figures: left, top, bottom, right.
NamedTile square(std::string name, const Color& left, const Color& top, const Color& bottom, const Color& right) {
  return {std::move(name), to_genwang(WangSquare{top, right, bottom, left})};
}

NamedTile bar(std::string name, const std::vector<Color>& top, const std::vector<Color>& bottom) {
  int w = static_cast<int>(top.size());
  GenWangTile g{rect_polyomino({w, 1}), {}};
  for (int i = 0; i < w; ++i) {
    g.edge_colors[{{i, 0}, Side::N}] = top[static_cast<std::size_t>(i)];
    g.edge_colors[{{i, 0}, Side::S}] = bottom[static_cast<std::size_t>(i)];
  }
  g.edge_colors[{{0, 0}, Side::W}] = "V";
  g.edge_colors[{{w - 1, 0}, Side::E}] = "V";
  return {std::move(name), g};
}

std::string j_name(int t) { return "J" + std::to_string(t); }
std::string k_name(int t) { return "K" + std::to_string(t); }
std::string pass_name(const std::string& x) { return "X[" + x + "]"; }
std::string tagged_name(const char* kind, const std::string& x, int t) {
  return std::string(kind) + "[" + x + "," + std::to_string(t) + "]";
}

const std::vector<std::string> kBorderNames{"TL", "TOP0", "TOP", "TR", "LEFT", "RIGHT", "BL", "BOTTOM", "BR"};

}  // namespace

Tileset build_pcp_tileset(const PcpInstance& inst, PcpBorder border) {
  inst.validate();
  Tileset ts{Species::kGenWang, {}};
  int n = static_cast<int>(inst.pairs.size());
  for (int t = 1; t <= n; ++t) {
    const Word& j = inst.pairs[static_cast<std::size_t>(t - 1)].first;
    std::vector<Color> top(j.size(), "U"), bottom;
    for (std::size_t i = 0; i < j.size(); ++i) bottom.push_back(i == 0 ? Color(tag(j[i], t)) : Color(j[i]));
    ts.tiles.push_back(bar(j_name(t), top, bottom));
  }
  for (int t = 1; t <= n; ++t) {
    const Word& k = inst.pairs[static_cast<std::size_t>(t - 1)].second;
    std::vector<Color> top, bottom(k.size(), "D");
    for (std::size_t i = 0; i < k.size(); ++i) top.push_back(i == 0 ? Color(tag(k[i], t)) : Color(k[i]));
    ts.tiles.push_back(bar(k_name(t), top, bottom));
  }
  for (const auto& x : inst.alphabet) ts.tiles.push_back(square(pass_name(x), "V", x, x, "V"));
  for (const auto& x : inst.alphabet)
    for (int t = 1; t <= n; ++t) {
      ts.tiles.push_back(square(tagged_name("ER", x, t), "V", tag(x, t), x, chan(t, 'R')));
      ts.tiles.push_back(square(tagged_name("RR", x, t), chan(t, 'R'), x, tag(x, t), "V"));
      ts.tiles.push_back(square(tagged_name("F", x, t), "V", tag(x, t), tag(x, t), "V"));
      ts.tiles.push_back(square(tagged_name("RL", x, t), "V", x, tag(x, t), chan(t, 'L')));
      ts.tiles.push_back(square(tagged_name("EL", x, t), chan(t, 'L'), tag(x, t), x, "V"));
    }
  bool guarded = border == PcpBorder::kGuarded;
  ts.tiles.push_back(square("TL", kWhite, kWhite, "L", guarded ? "T0" : "T"));
  if (guarded) ts.tiles.push_back(square("TOP0", "T0", kWhite, "U", "T"));
  ts.tiles.push_back(square("TOP", "T", kWhite, "U", "T"));
  ts.tiles.push_back(square("TR", "T", kWhite, "R", kWhite));
  ts.tiles.push_back(square("LEFT", kWhite, "L", "L", "V"));
  ts.tiles.push_back(square("RIGHT", "V", "R", "R", kWhite));
  ts.tiles.push_back(square("BL", kWhite, "L", kWhite, "B"));
  ts.tiles.push_back(square("BOTTOM", "B", "D", kWhite, "B"));
  ts.tiles.push_back(square("BR", "B", "R", kWhite, kWhite));
  return ts;
}

PcpWitness pcp_witness(const PcpInstance& inst, const PcpSolution& sol, PcpBorder border) {
  if (!is_pcp_solution(inst, sol)) throw Error("invalid solution");
  Word word;
  std::vector<int> from, to;  // tag columns in the J row and the K row, 0-based
  int jp = 0, kp = 0;
  for (int e : sol) {
    const auto& [j, k] = inst.pairs[static_cast<std::size_t>(e - 1)];
    from.push_back(jp);
    to.push_back(kp);
    word.insert(word.end(), j.begin(), j.end());
    jp += static_cast<int>(j.size());
    kp += static_cast<int>(k.size());
  }
  const int W = static_cast<int>(word.size());
  const int d = static_cast<int>(sol.size());

  // Transmitter schedule: one row per single-column shift.
  struct Shift {
    int tag;
    int col;  // column the tag leaves
    int dir;  // +1 right, -1 left
  };
  std::vector<Shift> shifts;
  for (int i = d - 1; i >= 0; --i)
    for (int c = from[i]; c < to[i]; ++c) shifts.push_back({i, c, +1});
  for (int i = 0; i < d; ++i)
    for (int c = from[i]; c > to[i]; --c) shifts.push_back({i, c, -1});

  const int rows = static_cast<int>(shifts.size());
  const int H = rows + 4;
  PcpWitness out{{W + 2, H}, {}};
  auto& pl = out.tiling.placements;

  pl.push_back({"TL", {0, H - 1}, 0});
  for (int x = 1; x <= W; ++x)
    pl.push_back({x == 1 && border == PcpBorder::kGuarded ? "TOP0" : "TOP", {x, H - 1}, 0});
  pl.push_back({"TR", {W + 1, H - 1}, 0});
  for (int y = 1; y < H - 1; ++y) {
    pl.push_back({"LEFT", {0, y}, 0});
    pl.push_back({"RIGHT", {W + 1, y}, 0});
  }
  pl.push_back({"BL", {0, 0}, 0});
  for (int x = 1; x <= W; ++x) pl.push_back({"BOTTOM", {x, 0}, 0});
  pl.push_back({"BR", {W + 1, 0}, 0});

  for (int i = 0; i < d; ++i) {
    pl.push_back({j_name(sol[static_cast<std::size_t>(i)]), {1 + from[i], H - 2}, 0});
    pl.push_back({k_name(sol[static_cast<std::size_t>(i)]), {1 + to[i], 1}, 0});
  }

  std::vector<int> owner(static_cast<std::size_t>(W), -1);  // tag index sitting in each column
  for (int i = 0; i < d; ++i) owner[static_cast<std::size_t>(from[i])] = i;
  for (int r = 0; r < rows; ++r) {
    const Shift& s = shifts[static_cast<std::size_t>(r)];
    const int y = H - 3 - r;
    const int dest = s.col + s.dir;
    const int t = sol[static_cast<std::size_t>(s.tag)];
    for (int c = 0; c < W; ++c) {
      const std::string& x = word[static_cast<std::size_t>(c)];
      std::string name;
      if (c == s.col) {
        name = tagged_name(s.dir > 0 ? "ER" : "EL", x, t);
      } else if (c == dest) {
        name = tagged_name(s.dir > 0 ? "RR" : "RL", x, t);
      } else if (owner[static_cast<std::size_t>(c)] >= 0) {
        name = tagged_name("F", x, sol[static_cast<std::size_t>(owner[static_cast<std::size_t>(c)])]);
      } else {
        name = pass_name(x);
      }
      pl.push_back({name, {1 + c, y}, 0});
    }
    owner[static_cast<std::size_t>(s.col)] = -1;
    owner[static_cast<std::size_t>(dest)] = s.tag;
  }
  return out;
}

PcpSolution extract_pcp_solution(const PcpInstance& inst, const Tiling& tiling, PcpBorder border) {
  Tileset ts = build_pcp_tileset(inst, border);
  std::set<std::string> frame(kBorderNames.begin(), kBorderNames.end());
  std::map<Cell, std::string> at;  // placement origin -> tile
  Box box;
  bool first = true;
  for (const auto& p : tiling.placements) {
    PlacedTile placed = resolve_placement(ts, p);
    for (Cell c : placed.cells) {
      if (first) {
        box = {c.x, c.y, c.x, c.y};
        first = false;
      }
      box.x0 = std::min(box.x0, c.x);
      box.y0 = std::min(box.y0, c.y);
      box.x1 = std::max(box.x1, c.x);
      box.y1 = std::max(box.y1, c.y);
    }
    at[p.offset] = p.tile;
  }
  if (first || box.width() < 3 || box.height() < 4) throw Error("non-normal tiling");
  for (const auto& p : tiling.placements) {
    bool ring = p.offset.x == box.x0 || p.offset.x == box.x1 || p.offset.y == box.y0 || p.offset.y == box.y1;
    if (ring != (frame.count(p.tile) > 0)) throw Error("non-normal tiling");
  }
  auto read_row = [&](int y, char kind) {
    PcpSolution seq;
    int x = box.x0 + 1;
    while (x < box.x1) {
      auto it = at.find({x, y});
      if (it == at.end() || it->second.empty() || it->second[0] != kind) throw Error("non-normal tiling");
      int t = std::stoi(it->second.substr(1));
      seq.push_back(t);
      x += static_cast<int>((kind == 'J' ? inst.pairs[static_cast<std::size_t>(t - 1)].first
                                         : inst.pairs[static_cast<std::size_t>(t - 1)].second)
                                .size());
    }
    return seq;
  };
  PcpSolution top = read_row(box.y1 - 1, 'J');
  PcpSolution bottom = read_row(box.y0 + 1, 'K');
  if (top != bottom) throw Error("J and K rows carry different index sequences");
  if (!is_pcp_solution(inst, top)) throw Error("extracted sequence is not a solution");
  return top;
}

PcpSearchResult solve_pcp_bounded(const PcpInstance& inst, int max_depth) {
  inst.validate();
  // State: which side is ahead and the unmatched overhang.
  struct Node {
    bool top_ahead;
    Word overhang;
    PcpSolution seq;
  };
  std::set<std::pair<bool, Word>> seen;
  std::deque<Node> frontier{{true, {}, {}}};
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::deque<Node> next;
    for (const Node& node : frontier)
      for (int t = 1; t <= static_cast<int>(inst.pairs.size()); ++t) {
        const auto& [j, k] = inst.pairs[static_cast<std::size_t>(t - 1)];
        Word ahead = node.overhang, behind;
        ahead.insert(ahead.end(), (node.top_ahead ? j : k).begin(), (node.top_ahead ? j : k).end());
        behind = node.top_ahead ? k : j;
        bool top_ahead = node.top_ahead;
        if (behind.size() > ahead.size()) {
          std::swap(ahead, behind);
          top_ahead = !top_ahead;
        }
        if (!std::equal(behind.begin(), behind.end(), ahead.begin())) continue;
        Word rest(ahead.begin() + static_cast<long>(behind.size()), ahead.end());
        PcpSolution seq = node.seq;
        seq.push_back(t);
        if (rest.empty()) return {seq, depth};
        if (!seen.insert({top_ahead, rest}).second) continue;
        next.push_back({top_ahead, std::move(rest), std::move(seq)});
      }
    frontier = std::move(next);
    if (frontier.empty()) return {std::nullopt, max_depth};
  }
  return {std::nullopt, max_depth};
}

}  // namespace tileforge
