#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tileforge/solver.hpp"

namespace tileforge {

enum class Move { L, R };

struct Action {
  std::string state;
  std::string write;
  Move move = Move::R;

  auto operator<=>(const Action&) const = default;
};

struct TuringMachine {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;  // contains blank
  std::string blank = "0";
  std::string start;
  std::vector<std::string> halting;
  std::map<std::pair<std::string, std::string>, std::vector<Action>> delta;

  bool is_halting(const std::string& q) const;
  bool deterministic() const;
  // Throws Error with a diagnostic when malformed.
  void validate() const;
  void add_rule(const std::string& q, const std::string& x, const std::string& q2, const std::string& x2, Move m);
};

struct Configuration {
  std::map<long, std::string> tape;  // non-blank cells only
  long head = 0;
  std::string state;

  const std::string& at(long pos, const std::string& blank) const;
  void write(long pos, const std::string& sym, const std::string& blank);
  bool operator==(const Configuration&) const = default;
  auto operator<=>(const Configuration&) const = default;
};

Configuration initial_configuration(const TuringMachine& m, const std::vector<std::string>& input);

struct StepResult {
  bool halted = false;
  std::vector<Configuration> next;  // empty and !halted means stuck
};

StepResult tm_step(const TuringMachine& m, const Configuration& c);

struct RunResult {
  bool halted = false;
  bool stuck = false;  // no rule for a non-halting state
  int steps = 0;
  std::vector<Configuration> trace;  // c_0 .. c_steps
};

// Deterministic machines only.
RunResult tm_run(const TuringMachine& m, const std::vector<std::string>& input, int max_steps);

Color head_color(const std::string& x, const std::string& q);
Color motion_color(const std::string& q, Move m);

// Pass-through per letter, one action tile per transition, one merge tile
// per (target state, direction, letter). `side` labels head-free vertical edges.
Tileset build_emulation_tileset(const TuringMachine& m, const Color& side = "N");

// Columns [lo, hi] of a window.
struct Window {
  long lo = 0;
  long hi = 0;
};

// Bottom colors of one row of the diagram as a configuration; nullopt when
// the row is not valid (not exactly one head color).
std::optional<Configuration> decode_row(const TuringMachine& m, const std::vector<Color>& colors, long lo);

struct EmulationCheck {
  bool ok = false;
  std::string diagnostic;
  Window window;
  std::vector<Configuration> rows;  // decoded rows 1..k
};

// Tiles the k-row window under c_0 (sides N, bottom Free), requires a unique
// tiling and compares decoded rows with the simulator trace. Without an
// explicit window, uses the trace head range padded by one column.
EmulationCheck verify_emulation(const TuringMachine& m, const std::vector<std::string>& input, int k,
                                std::optional<Window> window = std::nullopt,
                                std::uint64_t node_budget = kDefaultNodeBudget);

// The window problem itself, exposed for the CLI and for enumeration tests.
DecoratedRegion emulation_window(const TuringMachine& m, const Configuration& c0, Window w, int k,
                                 const Color& side = "N");

// Decoded bottom rows of a window tiling, top to bottom.
std::vector<std::optional<Configuration>> decode_diagram(const TuringMachine& m, const Tileset& ts,
                                                         const Tiling& t, Window w, int k);

}  // namespace tileforge
