#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pwclone/normalize.hpp"
#include "pwclone/term.hpp"
#include "pwclone/word.hpp"

namespace pwclone {

using BigInt = boost::multiprecision::cpp_int;

enum class Variety { P, WInc, Arra, ArraRev, Inc, Magn, Stal, StalRev, Pill };

// A variety tag with its parameters plus the pigment monoid. Selects the
// normal-form algorithm and the equivalence decision procedure.
class CloneId {
public:
  CloneId(Variety variety, MonoidSpec monoid, int k = 0, int k2 = 0);

  Variety variety() const { return variety_; }
  const MonoidSpec& monoid() const { return monoid_; }
  int k() const { return k_; }
  int k2() const { return k2_; }

  // Magn and Pill admit a canonical representative only at (1, 1); the
  // other parameter pairs support tuple-based equivalence only.
  bool supports_normal_form() const;
  std::string to_text() const;

  bool operator==(const CloneId&) const = default;

private:
  Variety variety_;
  int k_ = 0;
  int k2_ = 0;
  MonoidSpec monoid_;
};

// Clone text grammar:
//   p | winc | arra[:k] | arra-rev[:k] | inc[:k] | magn[:k,k'] |
//   stal[:k] | stal-rev[:k] | pill[:k,k']
// Omitted parameters default to 1 (resp. 1,1).
CloneId parse_clone(std::string_view text, MonoidSpec monoid);

// The clone deciding the reversed congruence; reversal maps each clone
// onto an isomorphic one with swapped parameters.
CloneId reversed(const CloneId& c);

PigmentedWord normal_form(const CloneId& c, const PigmentedWord& p);
bool equiv(const CloneId& c, const PigmentedWord& p, const PigmentedWord& q);

PigmentedWord clone_superpose(const CloneId& c, const PigmentedWord& p,
                              std::span<const PigmentedWord> args);
PigmentedWord clone_superpose(const CloneId& c, const PigmentedWord& p,
                              std::span<const PigmentedWord> args, int result_arity);
PigmentedWord clone_superpose(const CloneId& c, const PigmentedWord& p,
                              const std::vector<PigmentedWord>& args);

// Word problem for the variety presented by c, via frontiers.
bool term_equiv(const CloneId& c, const Term& t, const Term& u);

struct DimCount {
  bool infinite = false;
  BigInt value = 0;

  static DimCount of(BigInt v) { return {false, std::move(v)}; }
  static DimCount inf() { return {true, 0}; }
  bool operator==(const DimCount&) const = default;
};

std::string to_string(const DimCount& d);
std::ostream& operator<<(std::ostream& out, const DimCount& d);

// Exact number of arity-n elements, by closed formula.
DimCount dims(const CloneId& c, int n);

// Tight enumeration bound: every class of arity n has its canonical
// representative no longer than this. Absent for infinite-dimension
// clones.
std::optional<long long> default_enumeration_length(const CloneId& c, int n);

// Distinct normal forms of all words of arity n and length <= max_len,
// in canonical text order. The cap bounds both scanned words and classes;
// it defaults to the PWCLONE_MAX_CLASSES environment variable, then 10^7.
std::vector<PigmentedWord> enumerate_classes(const CloneId& c, int n,
                                             std::optional<long long> max_len = std::nullopt,
                                             std::optional<long long> cap = std::nullopt);

long long enumeration_cap_from_env();

}  // namespace pwclone
