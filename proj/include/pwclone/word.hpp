#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pwclone/monoid.hpp"

namespace pwclone {

// A value i decorated with a pigment, written i^alpha.
struct PigmentedLetter {
  int value = 1;
  MonoidElement pigment;

  bool operator==(const PigmentedLetter&) const = default;
};

// A finite sequence of pigmented letters together with an explicit arity.
// Two words with equal letters but different arities are distinct values.
class PigmentedWord {
public:
  PigmentedWord(MonoidSpec monoid, int arity, std::vector<PigmentedLetter> letters);

  static PigmentedWord empty(MonoidSpec monoid, int arity) {
    return PigmentedWord(std::move(monoid), arity, {});
  }

  const MonoidSpec& monoid() const { return monoid_; }
  int arity() const { return arity_; }
  const std::vector<PigmentedLetter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const PigmentedLetter& letter(int j) const { return letters_[static_cast<std::size_t>(j)]; }

  bool operator==(const PigmentedWord& other) const {
    return arity_ == arity_of(other) && letters_ == other.letters_ && monoid_ == other.monoid_;
  }
  bool operator!=(const PigmentedWord& other) const { return !(*this == other); }

private:
  static int arity_of(const PigmentedWord& w) { return w.arity_; }

  MonoidSpec monoid_;
  int arity_ = 0;
  std::vector<PigmentedLetter> letters_;
};

// The order on letters used by sorting maps: value first, then pigment.
std::strong_ordering letter_order(const MonoidSpec& m, const PigmentedLetter& a,
                                  const PigmentedLetter& b);

// Left multiplication of every pigment by alpha.
PigmentedWord act(const MonoidElement& alpha, const PigmentedWord& p);

// Superposition p<args>. All arguments must share one arity; when p has
// arity 0 the argument list is empty and the result arity must be given.
PigmentedWord superpose(const PigmentedWord& p, std::span<const PigmentedWord> args);
PigmentedWord superpose(const PigmentedWord& p, std::span<const PigmentedWord> args,
                        int result_arity);
PigmentedWord superpose(const PigmentedWord& p, const std::vector<PigmentedWord>& args);

// The projection i^e of arity n.
PigmentedWord projection(const MonoidSpec& m, int i, int n);

// Mirror image; an involutive clone automorphism.
PigmentedWord reverse(const PigmentedWord& p);

// Concatenation of two words of the same monoid and arity.
PigmentedWord concat(const PigmentedWord& p, const PigmentedWord& q);

// Functorial action on pigments: values unchanged, pigments mapped.
PigmentedWord map_pigments(const MonoidMorphism& phi, const PigmentedWord& p);

// Word text grammar: "_" for the empty word, otherwise space-separated
// letters INT^PIGMENT. Without an explicit arity the maximum value is
// used; the empty word then has no default and requires one.
PigmentedWord parse_word(std::string_view text, const MonoidSpec& m,
                         std::optional<int> arity = std::nullopt);
std::string format_word(const PigmentedWord& p);
std::ostream& operator<<(std::ostream& out, const PigmentedWord& p);

}  // namespace pwclone
