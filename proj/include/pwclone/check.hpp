#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pwclone/clone.hpp"

namespace pwclone {

enum class Suite { Axioms, Congruence, Presentation, Functor, Reversion };

Suite parse_suite(std::string_view text);
std::string to_string(Suite suite);

// Bounds for a suite run: exhaustive enumeration up to max_arity and
// max_len, then `samples` seeded random instances per law.
struct CheckBudget {
  int max_arity = 2;
  int max_len = 2;
  int samples = 500;
  std::uint64_t seed = 1;
};

struct CheckOptions {
  // Replaces the inner normalizations of the congruence law by the same
  // map with k lowered by one. The suite must then report a
  // counterexample; this demonstrates its sensitivity.
  bool mutate_first_k = false;
};

struct LawResult {
  std::string law;
  long long instances = 0;
  bool pass = true;
  std::string counterexample;
};

struct CheckReport {
  std::string suite;
  std::string clone;
  std::string monoid;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;

  bool ok() const;
};

CheckReport run_suite(const CloneId& c, Suite suite, const CheckBudget& budget,
                      const CheckOptions& options = {});

// Deterministic line-oriented rendering, laws sorted by name:
//   SUITE <suite> clone=<c> monoid=<m> seed=<s>
//   LAW <name> instances=<n> status=PASS|FAIL [counterexample=<words>]
std::string render_text(const CheckReport& report);
std::string render_json(const CheckReport& report);

}  // namespace pwclone
