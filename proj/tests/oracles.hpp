#pragma once

// Brute-force reference implementations, written without the library.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Pt = std::pair<int, int>;
using CellSet = std::set<Pt>;

CellSet normalize(const CellSet& s);
std::vector<CellSet> orientations(const CellSet& shape, bool reflections);

// Number of exact covers of `target` by translated (optionally turned) copies.
std::uint64_t count_tilings(const std::vector<CellSet>& tiles, const CellSet& target, bool reflections);

// Some disjoint set of translated copies covers every `must` cell while
// staying inside `allowed` (which contains `must`).
bool packing_exists(const std::vector<CellSet>& tiles, const CellSet& must, const CellSet& allowed);

// 4-connected and Euler characteristic of the closed union equals 1.
bool simply_connected(const CellSet& s);

struct Square {
  std::string n, e, s, w;
};

// Exhaustive assignment count for a w x h rectangle. Empty `boundary` means free.
std::uint64_t count_wang_rect(const std::vector<Square>& tiles, int w, int h, const std::string& boundary);

// Plain two-way tape simulation; returns steps until halt or -1 past `limit`.
struct Rule {
  std::string write, next;
  char move;
};
struct TmRun {
  long steps = -1;
  std::map<long, std::string> tape;
  long head = 0;
  long min_head = 0, max_head = 0;
  std::string state;
};
TmRun run_tm(const std::map<std::pair<std::string, std::string>, Rule>& rules, const std::set<std::string>& halting,
             const std::string& start, const std::string& blank, long limit);

// Shortest index sequence (BFS by length) with equal concatenations, up to max_len.
std::vector<int> pcp_search(const std::vector<std::pair<std::string, std::string>>& pairs, int max_len);

}  // namespace oracle
