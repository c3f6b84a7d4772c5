#include "pwclone/normalize.hpp"

#include <algorithm>
#include <unordered_map>

namespace pwclone {

namespace {

PigmentedWord with_letters(const PigmentedWord& p, std::vector<PigmentedLetter> letters) {
  return PigmentedWord(p.monoid(), p.arity(), std::move(letters));
}

void stable_sort_letters(const MonoidSpec& m, std::vector<PigmentedLetter>& letters) {
  std::stable_sort(letters.begin(), letters.end(),
                   [&](const PigmentedLetter& a, const PigmentedLetter& b) {
                     return letter_order(m, a, b) < 0;
                   });
}

// Shared engine for magnet stage 2 and pillar stage 3: repeatedly swaps
// an adjacent pair l1 l2 of distinct values where l1 is not a right
// 1-witness and l2 is a right but not a left 1-witness, leftmost redex
// first. Flags are recomputed on the current word after each step.
std::vector<PigmentedLetter> advance_strict_lasts(std::vector<PigmentedLetter> letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::unordered_map<int, int> before, after;
    for (const PigmentedLetter& l : letters) ++after[l.value];
    for (std::size_t j = 0; j + 1 < letters.size(); ++j) {
      const PigmentedLetter& l1 = letters[j];
      --after[l1.value];
      const PigmentedLetter& l2 = letters[j + 1];
      if (l1.value != l2.value) {
        const bool l1_right = after[l1.value] == 0;
        const bool l2_left = before[l2.value] == 0;
        const bool l2_right = after[l2.value] - 1 == 0;
        if (!l1_right && !l2_left && l2_right) {
          std::swap(letters[j], letters[j + 1]);
          changed = true;
          break;
        }
      }
      ++before[l1.value];
    }
  }
  return letters;
}

}  // namespace

WitnessFlags witnesses(const PigmentedWord& p, int k) {
  if (k < 1) throw mismatch_error("witness flags need k >= 1");
  const auto& letters = p.letters();
  WitnessFlags flags;
  flags.k = k;
  flags.left.resize(letters.size());
  flags.right.resize(letters.size());
  std::unordered_map<int, int> counts;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    flags.left[j] = counts[letters[j].value]++ < k;
  }
  counts.clear();
  for (std::size_t j = letters.size(); j-- > 0;) {
    flags.right[j] = counts[letters[j].value]++ < k;
  }
  return flags;
}

PigmentedWord sort_norm(const PigmentedWord& p) {
  std::vector<PigmentedLetter> letters = p.letters();
  stable_sort_letters(p.monoid(), letters);
  return with_letters(p, std::move(letters));
}

PigmentedWord first_k(const PigmentedWord& p, int k) {
  if (k < 0) throw mismatch_error("first_k needs k >= 0");
  std::vector<PigmentedLetter> out;
  std::unordered_map<int, int> counts;
  for (const PigmentedLetter& l : p.letters()) {
    if (counts[l.value]++ < k) out.push_back(l);
  }
  return with_letters(p, std::move(out));
}

PigmentedWord first_k_rev(const PigmentedWord& p, int k) {
  return reverse(first_k(reverse(p), k));
}

PigmentedWord inc_norm(const PigmentedWord& p, int k) {
  if (p.monoid().kind() != MonoidKind::Trivial) {
    throw unsupported_error("inc normal form is defined over the trivial monoid only");
  }
  return sort_norm(first_k(p, k));
}

PigmentedWord magnet_stage1(const PigmentedWord& p) {
  const auto& letters = p.letters();
  std::unordered_map<int, std::pair<std::size_t, std::size_t>> span;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    auto [it, fresh] = span.try_emplace(letters[j].value, j, j);
    if (!fresh) it->second.second = j;
  }
  std::vector<PigmentedLetter> out;
  out.reserve(std::min<std::size_t>(letters.size(), 2 * span.size()));
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const auto& [first, last] = span[letters[j].value];
    if (j == first || j == last) out.push_back(letters[j]);
  }
  return with_letters(p, std::move(out));
}

PigmentedWord magnet_stage2(const PigmentedWord& p) {
  return with_letters(p, advance_strict_lasts(p.letters()));
}

PigmentedWord magnet_stage3(const PigmentedWord& p) {
  std::vector<PigmentedLetter> out;
  for (const PigmentedLetter& l : p.letters()) {
    if (out.empty() || !(out.back() == l)) out.push_back(l);
  }
  return with_letters(p, std::move(out));
}

PigmentedWord magnet_norm(const PigmentedWord& p) {
  return magnet_stage3(magnet_stage2(magnet_stage1(p)));
}

PigmentedWord stal_norm(const PigmentedWord& p, int k) {
  if (k < 1) throw mismatch_error("stalactite normal form needs k >= 1");
  std::vector<PigmentedLetter> head, tail;
  std::unordered_map<int, int> counts;
  for (const PigmentedLetter& l : p.letters()) {
    (counts[l.value]++ < k ? head : tail).push_back(l);
  }
  stable_sort_letters(p.monoid(), tail);
  head.insert(head.end(), tail.begin(), tail.end());
  return with_letters(p, std::move(head));
}

PigmentedWord pill_stage1(const PigmentedWord& p) {
  std::vector<PigmentedLetter> letters = p.letters();
  bool changed = true;
  while (changed) {
    changed = false;
    std::unordered_map<int, int> before, total;
    for (const PigmentedLetter& l : letters) ++total[l.value];
    std::unordered_map<int, std::size_t> previous;  // nearest earlier same-value position
    for (std::size_t j = 0; j < letters.size(); ++j) {
      const int v = letters[j].value;
      const bool left_witness = before[v] == 0;
      const bool right_witness = before[v] + 1 == total[v];
      if (!left_witness && !right_witness && previous[v] + 1 != j) {
        // Middle occurrence separated from its predecessor: move it left
        // to sit immediately after that predecessor.
        PigmentedLetter moved = letters[j];
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(j));
        letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(previous[v] + 1), moved);
        changed = true;
        break;
      }
      previous[v] = j;
      ++before[v];
    }
  }
  return with_letters(p, std::move(letters));
}

PigmentedWord pill_stage2(const PigmentedWord& p) {
  std::vector<PigmentedLetter> letters = p.letters();
  std::unordered_map<int, int> before, total;
  for (const PigmentedLetter& l : letters) ++total[l.value];
  std::vector<bool> middle(letters.size());
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const int v = letters[j].value;
    middle[j] = before[v] > 0 && before[v] + 1 < total[v];
    ++before[v];
  }
  std::size_t j = 0;
  while (j < letters.size()) {
    if (!middle[j]) {
      ++j;
      continue;
    }
    std::size_t end = j + 1;
    while (end < letters.size() && middle[end] && letters[end].value == letters[j].value) ++end;
    std::stable_sort(letters.begin() + static_cast<std::ptrdiff_t>(j),
                     letters.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](const PigmentedLetter& a, const PigmentedLetter& b) {
                       return mcmp(p.monoid(), a.pigment, b.pigment) < 0;
                     });
    j = end;
  }
  return with_letters(p, std::move(letters));
}

PigmentedWord pill_stage3(const PigmentedWord& p) {
  return with_letters(p, advance_strict_lasts(p.letters()));
}

PigmentedWord pill_norm(const PigmentedWord& p) {
  return pill_stage3(pill_stage2(pill_stage1(p)));
}

}  // namespace pwclone
