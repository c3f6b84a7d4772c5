#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pwclone/word.hpp"

namespace pwclone {

enum class TermKind { Var, Unit, Pig, Mul };

// A term over the signature {u, p_alpha, m} plus variables, with a
// declared arity bounding the variable indices. Immutable; subtrees are
// shared on copy and composition.
class Term {
public:
  static Term var(int index, int arity);
  static Term unit(int arity);
  static Term pig(MonoidElement pigment, Term child);
  static Term mul(Term left, Term right);

  int arity() const { return arity_; }
  TermKind kind() const { return node_->kind; }
  int var_index() const { return node_->var_index; }
  const MonoidElement& pigment() const { return node_->pigment; }
  Term child() const { return Term(node_->a, arity_); }
  Term left() const { return Term(node_->a, arity_); }
  Term right() const { return Term(node_->b, arity_); }

  // The same tree viewed at a different arity (>= every variable index).
  Term with_arity(int arity) const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

private:
  struct Node {
    TermKind kind;
    int var_index = 0;
    MonoidElement pigment;
    std::shared_ptr<const Node> a, b;
  };
  using NodePtr = std::shared_ptr<const Node>;

  Term(NodePtr node, int arity) : node_(std::move(node)), arity_(arity) {}
  static int max_var(const Node& node);

  NodePtr node_;
  int arity_ = 0;

  friend int degree(const Term&);
  friend int term_length(const Term&);
};

// Number of internal nodes (u, p_alpha and m all count).
int degree(const Term& t);
// Number of variable occurrences.
int term_length(const Term& t);

// Simultaneous substitution of args[i] for every occurrence of x_i.
Term compose(const Term& t, std::span<const Term> args);
Term compose(const Term& t, std::span<const Term> args, int result_arity);
Term compose(const Term& t, const std::vector<Term>& args);

// Evaluation into pigmented words: variables to projections, u to the
// empty word, p_alpha to the pigment action, m to concatenation.
PigmentedWord frontier(const Term& t, const MonoidSpec& m);

// The right-leaning comb term whose frontier is the given word.
Term right_comb(const PigmentedWord& p);

// Term text grammar: u | x<INT> | p{<PIGMENT>}(<term>) | m(<term>,<term>),
// whitespace insignificant. Default arity is the maximum variable index.
Term parse_term(std::string_view text, const MonoidSpec& m,
                std::optional<int> arity = std::nullopt);
std::string format_term(const Term& t, const MonoidSpec& m);

}  // namespace pwclone
