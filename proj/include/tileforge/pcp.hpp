#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tileforge/solver.hpp"

namespace tileforge {

using Word = std::vector<std::string>;

struct PcpInstance {
  std::vector<std::string> alphabet;
  std::vector<std::pair<Word, Word>> pairs;  // (j_t, k_t)

  // Splits a word string into alphabet symbols by longest match.
  Word tokenize(const std::string& s) const;
  // Throws Error with a diagnostic when malformed.
  void validate() const;
};

PcpInstance make_pcp(std::vector<std::string> alphabet, const std::vector<std::pair<std::string, std::string>>& pairs);

// 1-based pair indices e_1..e_d.
using PcpSolution = std::vector<int>;

bool is_pcp_solution(const PcpInstance& inst, const PcpSolution& sol);

// kPlain: the eight border tiles as drawn. They also frame an empty
// 2 x h interior, so every instance tiles a 2 x 2 white rectangle.
// kGuarded: TL hands T0 to a ninth tile TOP0, forcing at least one
// top-edge tile (hence a J row) in every frame.
enum class PcpBorder { kGuarded, kPlain };

// Colors U D V T L R B white, letters, tags (x,t), (t,L), (t,R).
// Tile count 2n + m + 5nm + 8, plus one under kGuarded.
Tileset build_pcp_tileset(const PcpInstance& inst, PcpBorder border = PcpBorder::kGuarded);

struct PcpWitness {
  Rect rect;
  Tiling tiling;
};

PcpWitness pcp_witness(const PcpInstance& inst, const PcpSolution& sol, PcpBorder border = PcpBorder::kGuarded);

// Reads the J row of a framed white-rectangle tiling. Throws Error("non-normal tiling")
// when border tiles are not exactly the boundary ring.
PcpSolution extract_pcp_solution(const PcpInstance& inst, const Tiling& tiling,
                                 PcpBorder border = PcpBorder::kGuarded);

struct PcpSearchResult {
  std::optional<PcpSolution> solution;
  int depth = 0;  // searched (or solution) depth
};

// Breadth-first over index sequences, pruning incompatible prefixes.
PcpSearchResult solve_pcp_bounded(const PcpInstance& inst, int max_depth);

}  // namespace tileforge
