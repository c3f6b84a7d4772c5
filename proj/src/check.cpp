#include "pwclone/check.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"

namespace pwclone {

namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Two deterministic pigments per monoid (one for the trivial monoid),
// used by exhaustive enumerations.
std::vector<MonoidElement> pigment_sample(const MonoidSpec& m) {
  switch (m.kind()) {
    case MonoidKind::Trivial: return {munit(m)};
    case MonoidKind::Free:
      return {munit(m), MonoidElement::word(std::string(1, m.alphabet()[0]))};
    case MonoidKind::Cyclic:
      if (m.modulus() == 1) return {munit(m)};
      return {MonoidElement::integer(0), MonoidElement::integer(1)};
    case MonoidKind::IntAdd:
    case MonoidKind::NatMax:
      return {MonoidElement::integer(0), MonoidElement::integer(1)};
    case MonoidKind::Table: {
      auto all = all_elements(m);
      if (all.size() > 2) all.resize(2);
      return all;
    }
  }
  return {munit(m)};
}

MonoidElement random_pigment(const MonoidSpec& m, Rng& rng) {
  switch (m.kind()) {
    case MonoidKind::Trivial: return munit(m);
    case MonoidKind::Free: {
      std::string w;
      const int len = rand_int(rng, 0, 3);
      for (int i = 0; i < len; ++i) {
        w += m.alphabet()[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(m.alphabet().size()) - 1))];
      }
      return MonoidElement::word(std::move(w));
    }
    case MonoidKind::Cyclic:
      return MonoidElement::integer(rand_int(rng, 0, static_cast<int>(m.modulus()) - 1));
    case MonoidKind::IntAdd:
      return MonoidElement::integer(rand_int(rng, -3, 3));
    case MonoidKind::NatMax:
      return MonoidElement::integer(rand_int(rng, 0, 3));
    case MonoidKind::Table:
      return MonoidElement::table_element(static_cast<std::uint32_t>(
          rand_int(rng, 0, static_cast<int>(m.table_data().size()) - 1)));
  }
  return munit(m);
}

PigmentedWord random_word(const MonoidSpec& m, int arity, int max_len, Rng& rng) {
  std::vector<PigmentedLetter> letters;
  const int len = arity == 0 ? 0 : rand_int(rng, 0, max_len);
  letters.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    letters.push_back({rand_int(rng, 1, arity), random_pigment(m, rng)});
  }
  return PigmentedWord(m, arity, std::move(letters));
}

// All words of the given arity and length bound over the pigment sample.
std::vector<PigmentedWord> all_words(const MonoidSpec& m, int arity, int max_len) {
  const std::vector<MonoidElement> pigments = pigment_sample(m);
  std::vector<PigmentedLetter> alphabet;
  for (int v = 1; v <= arity; ++v) {
    for (const MonoidElement& a : pigments) alphabet.push_back({v, a});
  }
  std::vector<PigmentedWord> out;
  out.push_back(PigmentedWord::empty(m, arity));
  std::vector<PigmentedLetter> current;
  std::function<void(int)> grow = [&](int remaining) {
    if (remaining == 0) return;
    for (const PigmentedLetter& l : alphabet) {
      current.push_back(l);
      out.emplace_back(m, arity, current);
      grow(remaining - 1);
      current.pop_back();
    }
  };
  grow(max_len);
  return out;
}

// Distinct normal forms of all_words: the exhaustive element sets of a
// quotient clone.
std::vector<PigmentedWord> all_elements_of(const CloneId& c, int arity, int max_len) {
  std::vector<PigmentedWord> out;
  for (const PigmentedWord& w : all_words(c.monoid(), arity, max_len)) {
    PigmentedWord nf = normal_form(c, w);
    if (std::find(out.begin(), out.end(), nf) == out.end()) out.push_back(std::move(nf));
  }
  return out;
}

// Runs fn on every index tuple in [0, count)^width.
void for_each_tuple(std::size_t count, int width,
                    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(width), 0);
  if (width == 0) {
    fn(idx);
    return;
  }
  if (count == 0) return;
  while (true) {
    fn(idx);
    int j = 0;
    while (j < width && idx[static_cast<std::size_t>(j)] == count - 1) {
      idx[static_cast<std::size_t>(j)] = 0;
      ++j;
    }
    if (j == width) break;
    ++idx[static_cast<std::size_t>(j)];
  }
}

struct LawRun {
  LawResult result;

  explicit LawRun(std::string name) { result.law = std::move(name); }

  template <typename Describe>
  void record(bool ok, Describe&& describe) {
    ++result.instances;
    if (!ok && result.pass) {
      result.pass = false;
      result.counterexample = describe();
    }
  }
};

std::string describe_superposition(const PigmentedWord& p,
                                   const std::vector<PigmentedWord>& args) {
  std::string out = "p=" + format_word(p) + " args=[";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += "; ";
    out += format_word(args[i]);
  }
  out += "]";
  return out;
}

// ---- axioms ----------------------------------------------------------

void axiom_laws(const CloneId& c, const CheckBudget& budget, std::vector<LawResult>& laws) {
  Rng rng(budget.seed);
  LawRun law1("clone-axiom-1-projection");
  LawRun law2("clone-axiom-2-identity");
  LawRun law3("clone-axiom-3-associativity");

  std::vector<std::vector<PigmentedWord>> elems;
  for (int n = 0; n <= budget.max_arity; ++n) {
    elems.push_back(all_elements_of(c, n, budget.max_len));
  }

  auto projections = [&](int n) {
    std::vector<PigmentedWord> out;
    for (int i = 1; i <= n; ++i) out.push_back(projection(c.monoid(), i, n));
    return out;
  };

  auto check1 = [&](int n, int m, const std::vector<PigmentedWord>& ys) {
    for (int i = 1; i <= n; ++i) {
      PigmentedWord got = clone_superpose(c, projection(c.monoid(), i, n), ys, m);
      law1.record(got == ys[static_cast<std::size_t>(i - 1)], [&] {
        return "i=" + std::to_string(i) + " " +
               describe_superposition(projection(c.monoid(), i, n), ys);
      });
    }
  };
  auto check2 = [&](const PigmentedWord& x) {
    PigmentedWord got = clone_superpose(c, x, projections(x.arity()), x.arity());
    law2.record(got == x, [&] { return "x=" + format_word(x); });
  };
  auto check3 = [&](const PigmentedWord& x, const std::vector<PigmentedWord>& ys, int m,
                    const std::vector<PigmentedWord>& zs, int k) {
    PigmentedWord lhs = clone_superpose(c, clone_superpose(c, x, ys, m), zs, k);
    std::vector<PigmentedWord> inner;
    inner.reserve(ys.size());
    for (const PigmentedWord& y : ys) inner.push_back(clone_superpose(c, y, zs, k));
    PigmentedWord rhs = clone_superpose(c, x, inner, k);
    law3.record(lhs == rhs, [&] {
      std::string tail = "zs=[";
      for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i) tail += "; ";
        tail += format_word(zs[i]);
      }
      return describe_superposition(x, ys) + " then " + tail + "]";
    });
  };

  // Exhaustive part.
  for (int n = 1; n <= budget.max_arity; ++n) {
    for (int m = 0; m <= budget.max_arity; ++m) {
      const auto& pool = elems[static_cast<std::size_t>(m)];
      for_each_tuple(pool.size(), n, [&](const std::vector<std::size_t>& idx) {
        std::vector<PigmentedWord> ys;
        ys.reserve(idx.size());
        for (std::size_t i : idx) ys.push_back(pool[i]);
        check1(n, m, ys);
      });
    }
  }
  for (int n = 0; n <= budget.max_arity; ++n) {
    for (const PigmentedWord& x : elems[static_cast<std::size_t>(n)]) check2(x);
  }
  for (int n = 0; n <= budget.max_arity; ++n) {
    for (int m = 0; m <= budget.max_arity; ++m) {
      for (int k = 0; k <= budget.max_arity; ++k) {
        const auto& xs = elems[static_cast<std::size_t>(n)];
        const auto& ys_pool = elems[static_cast<std::size_t>(m)];
        const auto& zs_pool = elems[static_cast<std::size_t>(k)];
        for (const PigmentedWord& x : xs) {
          for_each_tuple(ys_pool.size(), n, [&](const std::vector<std::size_t>& yi) {
            std::vector<PigmentedWord> ys;
            ys.reserve(yi.size());
            for (std::size_t i : yi) ys.push_back(ys_pool[i]);
            for_each_tuple(zs_pool.size(), m, [&](const std::vector<std::size_t>& zi) {
              std::vector<PigmentedWord> zs;
              zs.reserve(zi.size());
              for (std::size_t i : zi) zs.push_back(zs_pool[i]);
              check3(x, ys, m, zs, k);
            });
          });
        }
      }
    }
  }

  // Random part, on larger instances.
  const int big_arity = budget.max_arity + 2;
  const int big_len = budget.max_len + 2;
  for (int s = 0; s < budget.samples; ++s) {
    const int n = rand_int(rng, 0, big_arity);
    const int m = rand_int(rng, 0, big_arity);
    const int k = rand_int(rng, 0, big_arity);
    PigmentedWord x = normal_form(c, random_word(c.monoid(), n, big_len, rng));
    std::vector<PigmentedWord> ys, zs;
    for (int i = 0; i < n; ++i) {
      ys.push_back(normal_form(c, random_word(c.monoid(), m, big_len, rng)));
    }
    for (int i = 0; i < m; ++i) {
      zs.push_back(normal_form(c, random_word(c.monoid(), k, big_len, rng)));
    }
    if (n >= 1) check1(n, m, ys);
    check2(x);
    check3(x, ys, m, zs, k);
  }

  laws.push_back(law1.result);
  laws.push_back(law2.result);
  laws.push_back(law3.result);
}

// ---- congruence ------------------------------------------------------

PigmentedWord mutated_normal_form(const CloneId& c, const PigmentedWord& p) {
  const int k = std::max(0, c.k() - 1);
  switch (c.variety()) {
    case Variety::Arra: return first_k(p, k);
    case Variety::ArraRev: return first_k_rev(p, k);
    case Variety::Inc: return sort_norm(first_k(p, k));
    case Variety::Stal: return k == 0 ? sort_norm(p) : stal_norm(p, k);
    case Variety::StalRev:
      return k == 0 ? sort_norm(p) : reverse(stal_norm(reverse(p), k));
    default:
      throw unsupported_error("the off-by-one mutation applies to first_k based clones only");
  }
}

void congruence_law(const CloneId& c, const CheckBudget& budget, const CheckOptions& options,
                    std::vector<LawResult>& laws) {
  Rng rng(budget.seed);
  LawRun law("p-symbol-congruence");

  auto inner = [&](const PigmentedWord& p) {
    return options.mutate_first_k ? mutated_normal_form(c, p) : normal_form(c, p);
  };
  auto check = [&](const PigmentedWord& p, const std::vector<PigmentedWord>& args, int m) {
    PigmentedWord lhs = normal_form(c, superpose(p, args, m));
    std::vector<PigmentedWord> normalized;
    normalized.reserve(args.size());
    for (const PigmentedWord& a : args) normalized.push_back(inner(a));
    PigmentedWord rhs = normal_form(c, superpose(inner(p), normalized, m));
    law.record(lhs == rhs, [&] { return describe_superposition(p, args); });
  };

  for (int n = 0; n <= budget.max_arity; ++n) {
    std::vector<PigmentedWord> ps = all_words(c.monoid(), n, budget.max_len);
    for (int m = 0; m <= budget.max_arity; ++m) {
      std::vector<PigmentedWord> pool = all_words(c.monoid(), m, budget.max_len);
      for (const PigmentedWord& p : ps) {
        for_each_tuple(pool.size(), n, [&](const std::vector<std::size_t>& idx) {
          std::vector<PigmentedWord> args;
          args.reserve(idx.size());
          for (std::size_t i : idx) args.push_back(pool[i]);
          check(p, args, m);
        });
      }
    }
  }

  const int big_arity = budget.max_arity + 2;
  const int big_len = budget.max_len + 3;
  for (int s = 0; s < budget.samples; ++s) {
    const int n = rand_int(rng, 0, big_arity);
    const int m = rand_int(rng, 0, big_arity);
    PigmentedWord p = random_word(c.monoid(), n, big_len, rng);
    std::vector<PigmentedWord> args;
    for (int i = 0; i < n; ++i) args.push_back(random_word(c.monoid(), m, big_len, rng));
    check(p, args, m);
  }

  laws.push_back(law.result);
}

// ---- presentation ----------------------------------------------------

struct EquationSide {
  // Letters as (value, pigment parameter index); parameter 0 is the unit,
  // positive indices refer to sampled pigments.
  std::vector<std::pair<int, int>> letters;
};

struct Equation {
  std::string name;
  int arity;
  int parameters;
  EquationSide lhs, rhs;
};

PigmentedWord instantiate(const MonoidSpec& m, const EquationSide& side, int arity,
                          const std::vector<MonoidElement>& pigments) {
  std::vector<PigmentedLetter> letters;
  letters.reserve(side.letters.size());
  for (auto [value, param] : side.letters) {
    letters.push_back({value, param == 0 ? munit(m) : pigments[static_cast<std::size_t>(param - 1)]});
  }
  return PigmentedWord(m, arity, std::move(letters));
}

std::vector<Equation> presentation_equations(const CloneId& c) {
  std::vector<Equation> out;
  const int k = c.k();
  auto arra_sides = [&](int kk) {
    Equation eq;
    eq.arity = kk + 1;
    eq.parameters = kk + 1;
    for (int j = 1; j <= kk; ++j) {
      eq.lhs.letters.push_back({1, j});
      eq.lhs.letters.push_back({j + 1, 0});
    }
    eq.rhs = eq.lhs;
    eq.lhs.letters.push_back({1, kk + 1});
    return eq;
  };
  switch (c.variety()) {
    case Variety::P:
      break;  // base relations are checked at the term level
    case Variety::WInc: {
      Equation eq{"winc-commutation", 2, 0, {{{1, 0}, {2, 0}}}, {{{2, 0}, {1, 0}}}};
      out.push_back(eq);
      break;
    }
    case Variety::Arra: {
      Equation eq = arra_sides(k);
      eq.name = "arra-drop-extra-occurrence";
      out.push_back(eq);
      break;
    }
    case Variety::ArraRev: {
      Equation eq = arra_sides(k);
      eq.name = "arra-rev-drop-extra-occurrence";
      std::reverse(eq.lhs.letters.begin(), eq.lhs.letters.end());
      std::reverse(eq.rhs.letters.begin(), eq.rhs.letters.end());
      out.push_back(eq);
      break;
    }
    case Variety::Inc: {
      out.push_back({"inc-commutation", 2, 0, {{{1, 0}, {2, 0}}}, {{{2, 0}, {1, 0}}}});
      Equation eq{"inc-idempotent-power", 1, 0, {}, {}};
      for (int j = 0; j <= k; ++j) eq.lhs.letters.push_back({1, 0});
      for (int j = 0; j < k; ++j) eq.rhs.letters.push_back({1, 0});
      out.push_back(eq);
      break;
    }
    case Variety::Magn: {
      out.push_back({"magn-idempotent", 1, 0, {{{1, 0}, {1, 0}}}, {{{1, 0}}}});
      out.push_back({"magn-inner-occurrence", 3, 3,
                     {{{1, 1}, {2, 0}, {1, 2}, {3, 0}, {1, 3}}},
                     {{{1, 1}, {2, 0}, {3, 0}, {1, 3}}}});
      break;
    }
    case Variety::Stal: {
      Equation eq{"stal-last-occurrence-commutes", 2, k + 1, {}, {}};
      for (int j = 1; j <= k; ++j) {
        eq.lhs.letters.push_back({1, j});
        eq.rhs.letters.push_back({1, j});
      }
      eq.lhs.letters.push_back({1, k + 1});
      eq.lhs.letters.push_back({2, 0});
      eq.rhs.letters.push_back({2, 0});
      eq.rhs.letters.push_back({1, k + 1});
      out.push_back(eq);
      break;
    }
    case Variety::StalRev: {
      Equation eq{"stal-rev-first-occurrence-commutes", 2, k + 1, {}, {}};
      eq.lhs.letters.push_back({2, 0});
      eq.lhs.letters.push_back({1, k + 1});
      eq.rhs.letters.push_back({1, k + 1});
      eq.rhs.letters.push_back({2, 0});
      for (int j = k; j >= 1; --j) {
        eq.lhs.letters.push_back({1, j});
        eq.rhs.letters.push_back({1, j});
      }
      out.push_back(eq);
      break;
    }
    case Variety::Pill: {
      out.push_back({"pill-middles-shift-left", 3, 3,
                     {{{1, 1}, {1, 2}, {2, 0}, {3, 0}, {1, 3}}},
                     {{{1, 1}, {2, 0}, {1, 2}, {3, 0}, {1, 3}}}});
      out.push_back({"pill-middles-shift-right", 3, 3,
                     {{{1, 1}, {2, 0}, {1, 2}, {3, 0}, {1, 3}}},
                     {{{1, 1}, {2, 0}, {3, 0}, {1, 2}, {1, 3}}}});
      out.push_back({"pill-middles-swap-values", 4, 4,
                     {{{1, 1}, {2, 0}, {3, 3}, {1, 2}, {4, 0}, {3, 4}}},
                     {{{1, 1}, {2, 0}, {1, 2}, {3, 3}, {4, 0}, {3, 4}}}});
      break;
    }
  }
  return out;
}

void base_relation_laws(const CloneId& c, const CheckBudget& budget,
                        std::vector<LawResult>& laws) {
  Rng rng(budget.seed);
  const MonoidSpec& m = c.monoid();
  struct Base {
    std::string name;
    int parameters;
    std::function<std::pair<Term, Term>(const std::vector<MonoidElement>&)> make;
  };
  auto x1 = Term::var(1, 3);
  auto x2 = Term::var(2, 3);
  auto x3 = Term::var(3, 3);
  std::vector<Base> bases = {
      {"base-1-associative-product", 0,
       [&](const std::vector<MonoidElement>&) {
         return std::pair(Term::mul(Term::mul(x1, x2), x3), Term::mul(x1, Term::mul(x2, x3)));
       }},
      {"base-2-two-sided-unit", 0,
       [&](const std::vector<MonoidElement>&) {
         return std::pair(Term::mul(Term::unit(3), x1), Term::mul(x1, Term::unit(3)));
       }},
      {"base-3-pigment-distributes", 1,
       [&](const std::vector<MonoidElement>& a) {
         return std::pair(Term::pig(a[0], Term::mul(x1, x2)),
                          Term::mul(Term::pig(a[0], x1), Term::pig(a[0], x2)));
       }},
      {"base-4-pigment-fixes-unit", 1,
       [&](const std::vector<MonoidElement>& a) {
         return std::pair(Term::pig(a[0], Term::unit(3)), Term::unit(3));
       }},
      {"base-5-pigments-compose", 2,
       [&](const std::vector<MonoidElement>& a) {
         return std::pair(Term::pig(a[0], Term::pig(a[1], x1)),
                          Term::pig(mmul(m, a[0], a[1]), x1));
       }},
      {"base-6-unit-pigment-trivial", 0,
       [&](const std::vector<MonoidElement>&) {
         return std::pair(Term::pig(munit(m), x1), x1.with_arity(3));
       }},
  };
  for (const Base& base : bases) {
    LawRun law(base.name);
    for (int s = 0; s < std::max(budget.samples, 20); ++s) {
      std::vector<MonoidElement> pigments;
      for (int i = 0; i < base.parameters; ++i) pigments.push_back(random_pigment(m, rng));
      auto [lhs, rhs] = base.make(pigments);
      law.record(frontier(lhs, m) == frontier(rhs, m), [&] {
        return format_term(lhs, m) + " vs " + format_term(rhs, m);
      });
    }
    laws.push_back(law.result);
  }
}

void presentation_laws(const CloneId& c, const CheckBudget& budget,
                       std::vector<LawResult>& laws) {
  if (c.variety() == Variety::P) {
    base_relation_laws(c, budget, laws);
    return;
  }
  if (!c.supports_normal_form()) {
    throw unsupported_error("no presentation is provided for '" + c.to_text() + "'");
  }
  Rng rng(budget.seed);
  for (const Equation& eq : presentation_equations(c)) {
    LawRun law(eq.name);
    for (int s = 0; s < std::max(budget.samples, 50); ++s) {
      std::vector<MonoidElement> pigments;
      for (int i = 0; i < eq.parameters; ++i) pigments.push_back(random_pigment(c.monoid(), rng));
      PigmentedWord lhs = instantiate(c.monoid(), eq.lhs, eq.arity, pigments);
      PigmentedWord rhs = instantiate(c.monoid(), eq.rhs, eq.arity, pigments);
      law.record(equiv(c, lhs, rhs), [&] {
        return format_word(lhs) + " !~ " + format_word(rhs);
      });
    }
    laws.push_back(law.result);
  }
}

// ---- functor ---------------------------------------------------------

void functor_laws(const CloneId& c, const CheckBudget& budget, std::vector<LawResult>& laws) {
  Rng rng(budget.seed);
  const MonoidSpec& m = c.monoid();

  std::vector<MonoidMorphism> morphisms;
  morphisms.push_back(MonoidMorphism::identity(m));
  if (m.kind() == MonoidKind::Free) {
    morphisms.push_back(MonoidMorphism::free_length(m, MonoidSpec::int_add()));
  }
  if (m.finite()) {
    std::vector<MonoidElement> to_unit(static_cast<std::size_t>(m.size()),
                                       MonoidElement::trivial());
    morphisms.push_back(MonoidMorphism::pointwise(m, MonoidSpec::trivial(), to_unit));
  }

  LawRun identity_law("functor-identity-map");
  LawRun proj_law("functor-preserves-projections");
  LawRun sup_law("functor-preserves-superposition");

  const MonoidMorphism id = MonoidMorphism::identity(m);
  for (int s = 0; s < budget.samples; ++s) {
    const int n = rand_int(rng, 0, budget.max_arity + 2);
    PigmentedWord p = random_word(m, n, budget.max_len + 2, rng);
    identity_law.record(map_pigments(id, p) == p, [&] { return "p=" + format_word(p); });
  }
  for (const MonoidMorphism& phi : morphisms) {
    for (int n = 1; n <= budget.max_arity + 1; ++n) {
      for (int i = 1; i <= n; ++i) {
        proj_law.record(
            map_pigments(phi, projection(m, i, n)) == projection(phi.target(), i, n),
            [&] { return "projection " + std::to_string(i) + "/" + std::to_string(n); });
      }
    }
    for (int s = 0; s < budget.samples; ++s) {
      const int n = rand_int(rng, 0, budget.max_arity + 1);
      const int mm = rand_int(rng, 0, budget.max_arity + 1);
      PigmentedWord p = random_word(m, n, budget.max_len + 2, rng);
      std::vector<PigmentedWord> args;
      std::vector<PigmentedWord> mapped;
      for (int i = 0; i < n; ++i) {
        args.push_back(random_word(m, mm, budget.max_len + 2, rng));
        mapped.push_back(map_pigments(phi, args.back()));
      }
      PigmentedWord lhs = map_pigments(phi, superpose(p, args, mm));
      PigmentedWord rhs = superpose(map_pigments(phi, p), mapped, mm);
      sup_law.record(lhs == rhs, [&] { return describe_superposition(p, args); });
    }
  }

  laws.push_back(identity_law.result);
  laws.push_back(proj_law.result);
  laws.push_back(sup_law.result);
}

// ---- reversion -------------------------------------------------------

void reversion_laws(const CloneId& c, const CheckBudget& budget, std::vector<LawResult>& laws) {
  Rng rng(budget.seed);
  const CloneId r = reversed(c);
  LawRun law("reversion-isomorphism");

  for (int n = 0; n <= budget.max_arity; ++n) {
    std::vector<PigmentedWord> pool = all_words(c.monoid(), n, budget.max_len);
    for (const PigmentedWord& p : pool) {
      for (const PigmentedWord& q : pool) {
        law.record(equiv(c, p, q) == equiv(r, reverse(p), reverse(q)), [&] {
          return format_word(p) + " vs " + format_word(q);
        });
      }
    }
  }
  for (int s = 0; s < budget.samples; ++s) {
    const int n = rand_int(rng, 0, budget.max_arity + 2);
    PigmentedWord p = random_word(c.monoid(), n, budget.max_len + 3, rng);
    PigmentedWord q = random_word(c.monoid(), n, budget.max_len + 3, rng);
    law.record(equiv(c, p, q) == equiv(r, reverse(p), reverse(q)), [&] {
      return format_word(p) + " vs " + format_word(q);
    });
  }

  laws.push_back(law.result);
}

}  // namespace

Suite parse_suite(std::string_view text) {
  if (text == "axioms") return Suite::Axioms;
  if (text == "congruence") return Suite::Congruence;
  if (text == "presentation") return Suite::Presentation;
  if (text == "functor") return Suite::Functor;
  if (text == "reversion") return Suite::Reversion;
  throw error("unknown suite '" + std::string(text) +
              "' (expected axioms | congruence | presentation | functor | reversion)");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Axioms: return "axioms";
    case Suite::Congruence: return "congruence";
    case Suite::Presentation: return "presentation";
    case Suite::Functor: return "functor";
    case Suite::Reversion: return "reversion";
  }
  return "?";
}

bool CheckReport::ok() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.pass; });
}

CheckReport run_suite(const CloneId& c, Suite suite, const CheckBudget& budget,
                      const CheckOptions& options) {
  CheckReport report;
  report.suite = to_string(suite);
  report.clone = c.to_text();
  report.monoid = c.monoid().to_text();
  report.seed = budget.seed;
  switch (suite) {
    case Suite::Axioms: axiom_laws(c, budget, report.laws); break;
    case Suite::Congruence: congruence_law(c, budget, options, report.laws); break;
    case Suite::Presentation: presentation_laws(c, budget, report.laws); break;
    case Suite::Functor: functor_laws(c, budget, report.laws); break;
    case Suite::Reversion: reversion_laws(c, budget, report.laws); break;
  }
  std::sort(report.laws.begin(), report.laws.end(),
            [](const LawResult& a, const LawResult& b) { return a.law < b.law; });
  return report;
}

std::string render_text(const CheckReport& report) {
  std::ostringstream out;
  out << "SUITE " << report.suite << " clone=" << report.clone << " monoid=" << report.monoid
      << " seed=" << report.seed << "\n";
  for (const LawResult& law : report.laws) {
    out << "LAW " << law.law << " instances=" << law.instances
        << " status=" << (law.pass ? "PASS" : "FAIL");
    if (!law.pass) out << " counterexample=" << law.counterexample;
    out << "\n";
  }
  return out.str();
}

std::string render_json(const CheckReport& report) {
  nlohmann::json laws = nlohmann::json::array();
  for (const LawResult& law : report.laws) {
    nlohmann::json j{{"name", law.law},
                     {"instances", law.instances},
                     {"status", law.pass ? "PASS" : "FAIL"}};
    if (!law.pass) j["counterexample"] = law.counterexample;
    laws.push_back(std::move(j));
  }
  nlohmann::json j{{"suite", report.suite}, {"clone", report.clone},
                   {"monoid", report.monoid}, {"seed", report.seed},
                   {"laws", std::move(laws)}, {"ok", report.ok()}};
  return j.dump();
}

}  // namespace pwclone
