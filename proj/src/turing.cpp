#include "tileforge/turing.hpp"

#include <algorithm>
#include <set>

namespace tileforge {

bool TuringMachine::is_halting(const std::string& q) const {
  return std::find(halting.begin(), halting.end(), q) != halting.end();
}

bool TuringMachine::deterministic() const {
  return std::all_of(delta.begin(), delta.end(), [](const auto& kv) { return kv.second.size() <= 1; });
}

void TuringMachine::add_rule(const std::string& q, const std::string& x, const std::string& q2,
                             const std::string& x2, Move m) {
  delta[{q, x}].push_back({q2, x2, m});
}

void TuringMachine::validate() const {
  auto clean = [](const std::string& s, const char* what) {
    if (s.empty()) throw Error(std::string("empty ") + what + " name");
    if (s.find_first_of("(),") != std::string::npos) throw Error(std::string(what) + " '" + s + "' contains ( ) or ,");
  };
  std::set<std::string> qs, xs;
  for (const auto& q : states) {
    clean(q, "state");
    if (!qs.insert(q).second) throw Error("duplicate state '" + q + "'");
  }
  for (const auto& x : alphabet) {
    clean(x, "symbol");
    if (!xs.insert(x).second) throw Error("duplicate symbol '" + x + "'");
    if (qs.count(x)) throw Error("'" + x + "' is both a state and a symbol");
  }
  if (!xs.count(blank)) throw Error("blank '" + blank + "' not in alphabet");
  if (!qs.count(start)) throw Error("start state '" + start + "' not in states");
  for (const auto& h : halting)
    if (!qs.count(h)) throw Error("halting state '" + h + "' not in states");
  for (const auto& [key, actions] : delta) {
    if (!qs.count(key.first)) throw Error("rule from unknown state '" + key.first + "'");
    if (!xs.count(key.second)) throw Error("rule reads unknown symbol '" + key.second + "'");
    if (is_halting(key.first)) throw Error("halting state '" + key.first + "' has a rule");
    for (const Action& a : actions) {
      if (!qs.count(a.state)) throw Error("rule enters unknown state '" + a.state + "'");
      if (!xs.count(a.write)) throw Error("rule writes unknown symbol '" + a.write + "'");
    }
  }
}

const std::string& Configuration::at(long pos, const std::string& blank) const {
  auto it = tape.find(pos);
  return it == tape.end() ? blank : it->second;
}

void Configuration::write(long pos, const std::string& sym, const std::string& blank) {
  if (sym == blank) {
    tape.erase(pos);
  } else {
    tape[pos] = sym;
  }
}

Configuration initial_configuration(const TuringMachine& m, const std::vector<std::string>& input) {
  Configuration c;
  c.state = m.start;
  for (std::size_t i = 0; i < input.size(); ++i) c.write(static_cast<long>(i), input[i], m.blank);
  return c;
}

StepResult tm_step(const TuringMachine& m, const Configuration& c) {
  StepResult out;
  if (m.is_halting(c.state)) {
    out.halted = true;
    return out;
  }
  auto it = m.delta.find({c.state, c.at(c.head, m.blank)});
  if (it == m.delta.end()) return out;
  for (const Action& a : it->second) {
    Configuration n = c;
    n.write(c.head, a.write, m.blank);
    n.head += a.move == Move::R ? 1 : -1;
    n.state = a.state;
    out.next.push_back(std::move(n));
  }
  return out;
}

RunResult tm_run(const TuringMachine& m, const std::vector<std::string>& input, int max_steps) {
  m.validate();
  if (!m.deterministic()) throw Error("tm_run needs a deterministic machine");
  for (const auto& x : input)
    if (std::find(m.alphabet.begin(), m.alphabet.end(), x) == m.alphabet.end())
      throw Error("input symbol '" + x + "' not in alphabet");
  RunResult r;
  r.trace.push_back(initial_configuration(m, input));
  while (true) {
    StepResult s = tm_step(m, r.trace.back());
    if (s.halted) {
      r.halted = true;
      return r;
    }
    if (s.next.empty()) {
      r.stuck = true;
      return r;
    }
    if (r.steps == max_steps) return r;
    r.trace.push_back(std::move(s.next.front()));
    ++r.steps;
  }
}

Color head_color(const std::string& x, const std::string& q) { return Color::pair(x, q); }
Color motion_color(const std::string& q, Move m) { return Color::pair(q, m == Move::L ? "L" : "R"); }

namespace {

NamedTile square(std::string name, const Color& left, const Color& top, const Color& bottom, const Color& right) {
  return {std::move(name), WangSquare{top, right, bottom, left}};
}

}  // namespace

Tileset build_emulation_tileset(const TuringMachine& m, const Color& side) {
  m.validate();
  if (std::find(m.alphabet.begin(), m.alphabet.end(), side.name()) != m.alphabet.end())
    throw Error("side color '" + side.name() + "' collides with a symbol");
  Tileset ts{Species::kWang, {}};
  for (const auto& x : m.alphabet) ts.tiles.push_back(square("P[" + x + "]", side, x, x, side));
  std::set<std::string> merges;
  std::vector<NamedTile> merge_tiles;
  for (const auto& [key, actions] : m.delta) {
    const auto& [q, x] = key;
    for (const Action& a : actions) {
      const char* dir = a.move == Move::R ? "R" : "L";
      std::string name = "A[" + q + "," + x + ">" + a.state + "," + a.write + "," + dir + "]";
      Color motion = motion_color(a.state, a.move);
      if (a.move == Move::R) {
        ts.tiles.push_back(square(name, side, head_color(x, q), a.write, motion));
      } else {
        ts.tiles.push_back(square(name, motion, head_color(x, q), a.write, side));
      }
      for (const auto& y : m.alphabet) {
        std::string mname = "M[" + y + "," + a.state + "," + dir + "]";
        if (!merges.insert(mname).second) continue;
        if (a.move == Move::R) {
          merge_tiles.push_back(square(mname, motion, y, head_color(y, a.state), side));
        } else {
          merge_tiles.push_back(square(mname, side, y, head_color(y, a.state), motion));
        }
      }
    }
  }
  for (auto& t : merge_tiles) ts.tiles.push_back(std::move(t));
  return ts;
}

std::optional<Configuration> decode_row(const TuringMachine& m, const std::vector<Color>& colors, long lo) {
  Configuration c;
  int heads = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    long pos = lo + static_cast<long>(i);
    const Color& col = colors[i];
    if (col.compound()) {
      const std::string& x = col.parts()[0];
      const std::string& q = col.parts()[1];
      if (std::find(m.states.begin(), m.states.end(), q) == m.states.end()) return std::nullopt;
      ++heads;
      c.head = pos;
      c.state = q;
      c.write(pos, x, m.blank);
    } else {
      if (std::find(m.alphabet.begin(), m.alphabet.end(), col.name()) == m.alphabet.end()) return std::nullopt;
      c.write(pos, col.name(), m.blank);
    }
  }
  if (heads != 1) return std::nullopt;
  return c;
}

DecoratedRegion emulation_window(const TuringMachine& m, const Configuration& c0, Window w, int k, const Color& side) {
  if (w.hi < w.lo || k < 1) throw Error("empty window");
  if (c0.head < w.lo || c0.head > w.hi) throw Error("window too narrow");
  for (const auto& [pos, x] : c0.tape)
    if (pos < w.lo || pos > w.hi) throw Error("window too narrow");
  int width = static_cast<int>(w.hi - w.lo + 1);
  DecoratedRegion dr{rect_region({width, k}, {static_cast<int>(w.lo), 0}), {}};
  for (long x = w.lo; x <= w.hi; ++x) {
    const std::string& sym = c0.at(x, m.blank);
    dr.constraints[{{static_cast<int>(x), k - 1}, Side::N}] = x == c0.head ? head_color(sym, c0.state) : Color(sym);
  }
  for (int y = 0; y < k; ++y) {
    dr.constraints[{{static_cast<int>(w.lo), y}, Side::W}] = side;
    dr.constraints[{{static_cast<int>(w.hi), y}, Side::E}] = side;
  }
  return dr;
}

std::vector<std::optional<Configuration>> decode_diagram(const TuringMachine& m, const Tileset& ts, const Tiling& t,
                                                         Window w, int k) {
  std::map<Cell, Color> bottom;
  for (const auto& p : t.placements) {
    PlacedTile placed = resolve_placement(ts, p);
    for (const auto& [e, c] : placed.colors)
      if (e.side == Side::S) bottom[e.cell] = c;
  }
  std::vector<std::optional<Configuration>> rows;
  for (int i = 1; i <= k; ++i) {
    std::vector<Color> colors;
    for (long x = w.lo; x <= w.hi; ++x) {
      auto it = bottom.find({static_cast<int>(x), k - i});
      if (it == bottom.end()) throw Error("diagram has a gap");
      colors.push_back(it->second);
    }
    rows.push_back(decode_row(m, colors, w.lo));
  }
  return rows;
}

EmulationCheck verify_emulation(const TuringMachine& m, const std::vector<std::string>& input, int k,
                                std::optional<Window> window, std::uint64_t node_budget) {
  if (k < 1) throw Error("k must be positive");
  RunResult run = tm_run(m, input, k);
  if (static_cast<int>(run.trace.size()) < k + 1)
    throw Error("machine stops after " + std::to_string(run.steps) + " steps, fewer than k = " + std::to_string(k));
  EmulationCheck out;
  long lo = 0, hi = std::max<long>(0, static_cast<long>(input.size()) - 1);
  for (const auto& c : run.trace) {
    lo = std::min(lo, c.head);
    hi = std::max(hi, c.head);
  }
  if (window) {
    if (window->lo > lo || window->hi < hi) throw Error("window too narrow");
    out.window = *window;
  } else {
    out.window = {lo - 1, hi + 1};
  }

  Tileset ts = build_emulation_tileset(m);
  DecoratedRegion dr = emulation_window(m, run.trace.front(), out.window, k);
  SearchOptions opts;
  opts.mode = SearchMode::kEnumerate;
  opts.enumerate_cap = 1;
  opts.node_budget = node_budget;
  SolveResult res = tile_region(ts, dr, opts);
  if (res.outcome == Outcome::kBudgetExceeded) {
    out.diagnostic = "node budget exceeded";
    return out;
  }
  if (res.count == 0) {
    out.diagnostic = "window untileable";
    return out;
  }
  if (res.count > 1) {
    out.diagnostic = "window tiling not unique";
    return out;
  }
  auto rows = decode_diagram(m, ts, *res.witness, out.window, k);
  for (int i = 1; i <= k; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (!row) {
      out.diagnostic = "row " + std::to_string(i) + " is not a valid configuration";
      return out;
    }
    out.rows.push_back(*row);
    if (!(*row == run.trace[static_cast<std::size_t>(i)])) {
      out.diagnostic = "row " + std::to_string(i) + " differs from the simulator";
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace tileforge
