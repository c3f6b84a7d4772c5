#pragma once

#include <vector>

#include "pwclone/word.hpp"

namespace pwclone {

// Per-position witness flags. Position j is a left k-witness when
// strictly fewer than k earlier letters share its value; right flags are
// symmetric on later letters.
struct WitnessFlags {
  int k = 1;
  std::vector<bool> left;
  std::vector<bool> right;
};

WitnessFlags witnesses(const PigmentedWord& p, int k);

// Rearranges the letters weakly increasingly for the letter order
// (value first, then pigment).
PigmentedWord sort_norm(const PigmentedWord& p);

// Subword of the left k-witness positions; k = 0 gives the empty word.
PigmentedWord first_k(const PigmentedWord& p, int k);

// reverse . first_k . reverse: subword of the right k-witness positions.
PigmentedWord first_k_rev(const PigmentedWord& p, int k);

// sort_norm . first_k, defined over the trivial monoid only.
PigmentedWord inc_norm(const PigmentedWord& p, int k);

// Magnet normal form, three stages in this order:
//   stage 1 keeps the first and last occurrence of each value;
//   stage 2 moves strict last occurrences left past non-last letters of
//           other values (rewrite to the unique fixpoint);
//   stage 3 collapses adjacent letters equal in value and pigment.
PigmentedWord magnet_stage1(const PigmentedWord& p);
PigmentedWord magnet_stage2(const PigmentedWord& p);
PigmentedWord magnet_stage3(const PigmentedWord& p);
PigmentedWord magnet_norm(const PigmentedWord& p);

// Stalactite normal form: the left k-witness subword followed by the
// remaining letters sorted.
PigmentedWord stal_norm(const PigmentedWord& p, int k);

// Pillar normal form, three stages in this order:
//   stage 1 clusters the middle occurrences of each value directly after
//           its first occurrence, preserving their order;
//   stage 2 sorts each run of adjacent same-value middle letters by
//           pigment;
//   stage 3 moves strict last occurrences left past non-last letters of
//           other values (same rule as magnet stage 2).
PigmentedWord pill_stage1(const PigmentedWord& p);
PigmentedWord pill_stage2(const PigmentedWord& p);
PigmentedWord pill_stage3(const PigmentedWord& p);
PigmentedWord pill_norm(const PigmentedWord& p);

}  // namespace pwclone
