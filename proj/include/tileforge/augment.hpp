#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tileforge/solver.hpp"
#include "tileforge/turing.hpp"

namespace tileforge {

// Machine tiles (side color V), border tiles and filler tiles. Every
// unlabeled edge carries the directional white facing its side.
struct AugInstance {
  Tileset tileset;
  DecoratedRegion hole;  // cells (-1,0)..(r-1,0), constraints seen from the hole
};

// An empty word is read as the single blank letter. Deterministic machines
// are run for up to `check_steps` steps and rejected if the head goes left of 0.
AugInstance build_aug_instance(const TuringMachine& m, std::vector<std::string> word, int check_steps = 10000);

struct AugWitness {
  Region gamma_prime;
  Tiling outer;  // of gamma_prime \ hole
  Tiling inner;  // of gamma_prime
};

// Targets both tilings answer to. Edges against the hole copy the hole's
// colors; every other boundary edge follows `rule`.
DecoratedRegion aug_outer_target(const DecoratedRegion& hole, const Region& gamma_prime, WhiteRule rule);
DecoratedRegion aug_inner_target(const Region& gamma_prime, WhiteRule rule);

// Checks containment, simple connectivity and both tilings. Polyomino
// tilesets ignore colors and `rule`.
Validation validate_aug_witness(const Tileset& ts, const DecoratedRegion& hole, const AugWitness& w,
                                WhiteRule rule = WhiteRule::kDirectional);

// The figure layout: hole, T row and TR on top, k machine rows between the
// L and R columns, then BL, L[x].., H[x,q], R[x].., BR. Throws Error when the
// machine does not halt within max_steps.
AugWitness halting_witness(const TuringMachine& m, std::vector<std::string> word, int max_steps = 100000);

// Filler tiling of a white rectangle with both sides >= 2.
Tiling filler_tiling(const Box& b);

struct AugSearchResult {
  bool found = false;
  bool budget_exceeded = false;
  std::optional<AugWitness> witness;
  std::uint64_t candidates = 0;  // gamma_prime candidates checked
};

// Colored tilesets: grows gamma_prime from the hole through non-white edges,
// keeping its bounding box within max_box. Polyomino tilesets: every partial
// packing of every max_box placement around the hole. Yes answers are sound;
// nothing else is claimed.
AugSearchResult augmentable_bounded(const Tileset& ts, const DecoratedRegion& hole, Rect max_box,
                                    WhiteRule rule = WhiteRule::kDirectional,
                                    std::uint64_t node_budget = kDefaultNodeBudget);
AugSearchResult augmentable_bounded(const Tileset& ts, const Region& hole, Rect max_box,
                                    WhiteRule rule = WhiteRule::kDirectional,
                                    std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace tileforge
