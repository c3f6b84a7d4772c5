#pragma once

// Independent reference implementations used to compute expected values.
// Everything here follows the defining descriptions directly (quadratic
// scans, exhaustive closures) and stays clear of the library's own
// algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "pwclone/clone.hpp"
#include "pwclone/term.hpp"

namespace pwclone::oracle {

// Quadratic definition scan: fewer than k same-value letters strictly
// before (after) position j.
inline bool left_witness(const PigmentedWord& p, int k, int j) {
  int same = 0;
  for (int i = 0; i < j; ++i) {
    if (p.letter(i).value == p.letter(j).value) ++same;
  }
  return same < k;
}

inline bool right_witness(const PigmentedWord& p, int k, int j) {
  int same = 0;
  for (int i = j + 1; i < p.length(); ++i) {
    if (p.letter(i).value == p.letter(j).value) ++same;
  }
  return same < k;
}

inline PigmentedWord first_k(const PigmentedWord& p, int k) {
  std::vector<PigmentedLetter> out;
  for (int j = 0; j < p.length(); ++j) {
    if (left_witness(p, k, j)) out.push_back(p.letter(j));
  }
  return PigmentedWord(p.monoid(), p.arity(), std::move(out));
}

inline PigmentedWord first_k_rev(const PigmentedWord& p, int k) {
  std::vector<PigmentedLetter> out;
  for (int j = 0; j < p.length(); ++j) {
    if (right_witness(p, k, j)) out.push_back(p.letter(j));
  }
  return PigmentedWord(p.monoid(), p.arity(), std::move(out));
}

// Letter multiset fingerprint, for permutation checks.
inline std::map<std::string, int> letter_multiset(const PigmentedWord& p) {
  std::map<std::string, int> counts;
  for (const PigmentedLetter& l : p.letters()) {
    ++counts[std::to_string(l.value) + "^" + format_element(p.monoid(), l.pigment)];
  }
  return counts;
}

// Iterative recount of internal nodes and variable occurrences.
inline std::pair<int, int> degree_and_length(const Term& t) {
  int internal = 0;
  int variables = 0;
  std::vector<Term> stack{t};
  while (!stack.empty()) {
    Term s = stack.back();
    stack.pop_back();
    switch (s.kind()) {
      case TermKind::Var: ++variables; break;
      case TermKind::Unit: ++internal; break;
      case TermKind::Pig:
        ++internal;
        stack.push_back(s.child());
        break;
      case TermKind::Mul:
        ++internal;
        stack.push_back(s.left());
        stack.push_back(s.right());
        break;
    }
  }
  return {internal, variables};
}

// Bounded congruence closure over the terms of one arity of the trivial
// monoid, under the six defining relations applied in both directions.
// Used as an independent word-problem decision procedure at desk scale.
class TermClosure {
public:
  TermClosure(int arity, int max_degree) : monoid_(MonoidSpec::trivial()) {
    build_universe(arity, max_degree);
    seed_rewrites();
    propagate();
  }

  bool contains(const Term& t) const {
    return index_.count(format_term(t, monoid_)) > 0;
  }

  bool joinable(const Term& a, const Term& b) {
    return find(index_.at(format_term(a, monoid_))) == find(index_.at(format_term(b, monoid_)));
  }

private:
  struct Entry {
    Term term;
    TermKind kind;
    int child_a = -1;
    int child_b = -1;
  };

  MonoidSpec monoid_;
  std::vector<Entry> entries_;
  std::map<std::string, int> index_;
  std::vector<int> parent_;

  int find(int i) {
    while (parent_[static_cast<std::size_t>(i)] != i) {
      parent_[static_cast<std::size_t>(i)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(i)])];
      i = parent_[static_cast<std::size_t>(i)];
    }
    return i;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

  int add(const Term& t) {
    std::string key = format_term(t, monoid_);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    Entry entry{t, t.kind(), -1, -1};
    const int id = static_cast<int>(entries_.size());
    index_.emplace(std::move(key), id);
    entries_.push_back(entry);
    parent_.push_back(id);
    // children are strictly smaller, so they are already present
    switch (t.kind()) {
      case TermKind::Pig: entries_[static_cast<std::size_t>(id)].child_a = add(t.child()); break;
      case TermKind::Mul:
        entries_[static_cast<std::size_t>(id)].child_a = add(t.left());
        entries_[static_cast<std::size_t>(id)].child_b = add(t.right());
        break;
      default: break;
    }
    return id;
  }

  void build_universe(int arity, int max_degree) {
    // terms_by_degree[d] = all terms of this arity with exactly d internal nodes
    std::vector<std::vector<Term>> by_degree(static_cast<std::size_t>(max_degree) + 1);
    for (int v = 1; v <= arity; ++v) by_degree[0].push_back(Term::var(v, arity));
    const MonoidElement e = munit(monoid_);
    for (int d = 1; d <= max_degree; ++d) {
      auto& out = by_degree[static_cast<std::size_t>(d)];
      if (d == 1) out.push_back(Term::unit(arity));
      for (const Term& s : by_degree[static_cast<std::size_t>(d - 1)]) {
        out.push_back(Term::pig(e, s));
      }
      for (int da = 0; da + 1 <= d; ++da) {
        const int db = d - 1 - da;
        for (const Term& a : by_degree[static_cast<std::size_t>(da)]) {
          for (const Term& b : by_degree[static_cast<std::size_t>(db)]) {
            out.push_back(Term::mul(a, b));
          }
        }
      }
    }
    for (auto& bucket : by_degree) {
      for (const Term& t : bucket) add(t);
    }
  }

  // One-step rewrites of t at the root, both directions of every relation.
  std::vector<Term> root_rewrites(const Term& t) const {
    std::vector<Term> out;
    const MonoidElement e = munit(monoid_);
    const int n = t.arity();
    if (t.kind() == TermKind::Mul) {
      Term a = t.left(), b = t.right();
      if (a.kind() == TermKind::Mul) out.push_back(Term::mul(a.left(), Term::mul(a.right(), b)));
      if (b.kind() == TermKind::Mul) out.push_back(Term::mul(Term::mul(a, b.left()), b.right()));
      if (a.kind() == TermKind::Unit) out.push_back(b);
      if (b.kind() == TermKind::Unit) out.push_back(a);
      // reverse of the pigment distribution rule
      if (a.kind() == TermKind::Pig && b.kind() == TermKind::Pig && a.pigment() == b.pigment()) {
        out.push_back(Term::pig(a.pigment(), Term::mul(a.child(), b.child())));
      }
    }
    if (t.kind() == TermKind::Pig) {
      Term s = t.child();
      if (s.kind() == TermKind::Mul) {
        out.push_back(Term::mul(Term::pig(t.pigment(), s.left()),
                                Term::pig(t.pigment(), s.right())));
      }
      if (s.kind() == TermKind::Unit) out.push_back(Term::unit(n));
      if (s.kind() == TermKind::Pig) out.push_back(Term::pig(e, s.child()));  // trivial product
      if (t.pigment() == e) {
        out.push_back(s);                            // unit pigment deletion
        out.push_back(Term::pig(e, Term::pig(e, s)));  // reverse of composition
      }
    }
    // expansions applicable to every term
    out.push_back(Term::mul(Term::unit(n), t));
    out.push_back(Term::mul(t, Term::unit(n)));
    out.push_back(Term::pig(e, t));
    if (t.kind() == TermKind::Unit) out.push_back(Term::pig(e, Term::unit(n)));
    return out;
  }

  // All terms reachable from t by one rewrite anywhere.
  void all_rewrites(const Term& t, std::vector<Term>& out) const {
    for (Term& r : root_rewrites(t)) out.push_back(std::move(r));
    switch (t.kind()) {
      case TermKind::Pig: {
        std::vector<Term> inner;
        all_rewrites(t.child(), inner);
        for (const Term& r : inner) out.push_back(Term::pig(t.pigment(), r));
        break;
      }
      case TermKind::Mul: {
        std::vector<Term> inner;
        all_rewrites(t.left(), inner);
        for (const Term& r : inner) out.push_back(Term::mul(r, t.right()));
        inner.clear();
        all_rewrites(t.right(), inner);
        for (const Term& r : inner) out.push_back(Term::mul(t.left(), r));
        break;
      }
      default: break;
    }
  }

  void seed_rewrites() {
    const std::size_t count = entries_.size();
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Term> reachable;
      all_rewrites(entries_[i].term, reachable);
      for (const Term& r : reachable) {
        auto it = index_.find(format_term(r, monoid_));
        if (it != index_.end()) unite(static_cast<int>(i), it->second);
      }
    }
  }

  void propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < entries_.size(); ++i) {
        for (std::size_t j = i + 1; j < entries_.size(); ++j) {
          const Entry& a = entries_[i];
          const Entry& b = entries_[j];
          if (a.kind != b.kind) continue;
          if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
          bool same_children = false;
          if (a.kind == TermKind::Pig) {
            same_children = find(a.child_a) == find(b.child_a);
          } else if (a.kind == TermKind::Mul) {
            same_children = find(a.child_a) == find(b.child_a) &&
                            find(a.child_b) == find(b.child_b);
          }
          if (same_children && unite(static_cast<int>(i), static_cast<int>(j))) changed = true;
        }
      }
    }
  }
};

}  // namespace pwclone::oracle
