#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "pwclone/normalize.hpp"

using namespace pwclone;

namespace {

const MonoidSpec kFreeAbc = MonoidSpec::free_monoid("abc");
const MonoidSpec kFreeAb = MonoidSpec::free_monoid("ab");
const MonoidSpec kTrivial = MonoidSpec::trivial();

PigmentedWord W(const char* text, const MonoidSpec& m, std::optional<int> arity = {}) {
  return parse_word(text, m, arity);
}

std::mt19937_64 rng(77);

PigmentedWord random_word(const MonoidSpec& m, int arity, int max_len) {
  std::vector<PigmentedLetter> letters;
  int len = arity == 0 ? 0 : std::uniform_int_distribution<int>(0, max_len)(rng);
  for (int i = 0; i < len; ++i) {
    MonoidElement pigment = munit(m);
    if (m.kind() == MonoidKind::Free) {
      std::string w;
      int plen = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int j = 0; j < plen; ++j) {
        w += m.alphabet()[std::uniform_int_distribution<std::size_t>(0, m.alphabet().size() - 1)(
            rng)];
      }
      pigment = MonoidElement::word(std::move(w));
    }
    letters.push_back({std::uniform_int_distribution<int>(1, arity)(rng), pigment});
  }
  return PigmentedWord(m, arity, std::move(letters));
}

// every word of the given arity and length bound over unit-only pigments
std::vector<PigmentedWord> trivial_words(int arity, int max_len) {
  std::vector<PigmentedWord> out;
  std::vector<std::vector<PigmentedLetter>> layer = {{}};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<std::vector<PigmentedLetter>> next;
    for (const auto& letters : layer) {
      out.emplace_back(kTrivial, arity, letters);
      for (int v = 1; v <= arity; ++v) {
        auto extended = letters;
        extended.push_back({v, MonoidElement::trivial()});
        next.push_back(std::move(extended));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::string flags_text(const std::vector<bool>& flags) {
  std::string out;
  for (bool f : flags) out += f ? 'y' : 'n';
  return out;
}

}  // namespace

TEST_CASE("witness flags match the annotated displays") {
  PigmentedWord p = W("2^aa 2^b 3^a 1^a 3^ba 2^b 3^e", kFreeAbc);
  WitnessFlags one = witnesses(p, 1);
  CHECK(flags_text(one.left) == "ynyynnn");
  CHECK(flags_text(one.right) == "nnnynyy");
  WitnessFlags two = witnesses(p, 2);
  CHECK(flags_text(two.left) == "yyyyynn");
  CHECK(flags_text(two.right) == "nynyyyy");

  PigmentedWord distinct = W("3^a 1^b 2^e", kFreeAbc);
  for (int k = 1; k <= 3; ++k) {
    WitnessFlags f = witnesses(distinct, k);
    CHECK(flags_text(f.left) == "yyy");
    CHECK(flags_text(f.right) == "yyy");
  }

  for (int round = 0; round < 200; ++round) {
    PigmentedWord q = random_word(kFreeAb, 3, 7);
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    WitnessFlags f = witnesses(q, k);
    for (int j = 0; j < q.length(); ++j) {
      CHECK(f.left[static_cast<std::size_t>(j)] == oracle::left_witness(q, k, j));
      CHECK(f.right[static_cast<std::size_t>(j)] == oracle::right_witness(q, k, j));
    }
  }
}

TEST_CASE("sorting rearranges weakly increasingly and keeps the multiset") {
  PigmentedWord p = W("3^e 1^b 3^a 1^a 4^ab 2^b 3^e 1^e", kFreeAbc);
  CHECK(format_word(sort_norm(p)) == "1^e 1^a 1^b 2^b 3^e 3^e 3^a 4^ab");
  CHECK(sort_norm(sort_norm(p)) == sort_norm(p));

  for (int round = 0; round < 500; ++round) {
    PigmentedWord q = random_word(kFreeAbc, 4, 8);
    PigmentedWord s = sort_norm(q);
    CHECK(oracle::letter_multiset(s) == oracle::letter_multiset(q));
    for (int j = 0; j + 1 < s.length(); ++j) {
      CHECK(letter_order(kFreeAbc, s.letter(j), s.letter(j + 1)) <= 0);
    }
    CHECK(sort_norm(s) == s);
  }
}

TEST_CASE("first_k keeps the left k-witness subword") {
  PigmentedWord p = W("1^e 3^ab 1^b 3^b 1^aa 3^e 2^aa 3^bba", kFreeAbc);
  CHECK(format_word(first_k(p, 1)) == "1^e 3^ab 2^aa");
  CHECK(format_word(first_k(p, 2)) == "1^e 3^ab 1^b 3^b 2^aa");
  CHECK(first_k(p, 0) == PigmentedWord::empty(kFreeAbc, p.arity()));

  for (int round = 0; round < 300; ++round) {
    PigmentedWord q = random_word(kFreeAb, 3, 6);
    int k = std::uniform_int_distribution<int>(0, 3)(rng);
    int k2 = std::uniform_int_distribution<int>(0, 3)(rng);
    CHECK(first_k(q, k) == oracle::first_k(q, k));
    CHECK(first_k(first_k(q, k2), k) == first_k(q, std::min(k, k2)));
    // subword property: deleting letters of q yields first_k(q)
    PigmentedWord sub = first_k(q, k);
    std::size_t at = 0;
    for (const PigmentedLetter& l : q.letters()) {
      if (at < sub.letters().size() && sub.letter(static_cast<int>(at)) == l) ++at;
    }
    CHECK(at == sub.letters().size());
  }
}

TEST_CASE("first_k_rev mirrors first_k") {
  // frozen from the definition scan: keep right 2-witness positions
  PigmentedWord p = W("2^e 1^e 2^e 1^e 2^e", kTrivial);
  CHECK(oracle::first_k_rev(p, 2) == W("1^e 2^e 1^e 2^e", kTrivial, 2));
  CHECK(first_k_rev(p, 2) == W("1^e 2^e 1^e 2^e", kTrivial, 2));

  PigmentedWord distinct = W("2^a 1^b 3^e", kFreeAbc);
  CHECK(first_k_rev(distinct, 1) == distinct);

  for (int round = 0; round < 300; ++round) {
    PigmentedWord q = random_word(kFreeAb, 3, 6);
    int k = std::uniform_int_distribution<int>(0, 3)(rng);
    CHECK(first_k_rev(q, k) == oracle::first_k_rev(q, k));
    CHECK(first_k_rev(q, k) == reverse(first_k(reverse(q), k)));
  }
}

TEST_CASE("first_1 and first_2_rev do not commute") {
  PigmentedWord p = W("2^e 1^e 2^e 1^e 2^e", kTrivial);
  PigmentedWord a = first_k(first_k_rev(p, 2), 1);
  PigmentedWord b = first_k_rev(first_k(p, 1), 2);
  CHECK(format_word(a) == "1^e 2^e");
  CHECK(format_word(b) == "2^e 1^e");
  CHECK(a != b);
}

TEST_CASE("increasing normal form sorts the witness subword") {
  PigmentedWord p = W("2^e 4^e 2^e", kTrivial);
  CHECK(format_word(inc_norm(p, 1)) == "2^e 4^e");
  CHECK(format_word(inc_norm(p, 2)) == "2^e 2^e 4^e");
  PigmentedWord sorted = W("1^e 1^e 3^e", kTrivial);
  CHECK(inc_norm(sorted, 2) == sorted);
  CHECK_THROWS_AS(inc_norm(W("1^a", kFreeAb), 1), unsupported_error);
  for (int round = 0; round < 200; ++round) {
    PigmentedWord q = random_word(kTrivial, 4, 8);
    int k = std::uniform_int_distribution<int>(0, 3)(rng);
    CHECK(inc_norm(inc_norm(q, k), k) == inc_norm(q, k));
    CHECK(inc_norm(q, k) == first_k(sort_norm(q), k));  // the maps commute over trivial
  }
}

TEST_CASE("magnet normal form matches the worked reductions") {
  CHECK(format_word(magnet_norm(W("2^e 1^b 2^e 3^a 1^ba 1^b 3^e", kFreeAbc))) ==
        "2^e 1^b 3^a 3^e");
  CHECK(format_word(magnet_norm(
            W("4^a 2^b 1^c 1^c 4^b 3^b 3^a 2^a 2^a 4^a 2^c 4^a 2^c", kFreeAbc))) ==
        "4^a 2^b 1^c 3^b 3^a 4^a 2^c");
  CHECK(format_word(magnet_norm(W("1^e 1^a 1^e", kFreeAbc))) == "1^e");
}

TEST_CASE("magnet stages pass through the worked intermediates") {
  PigmentedWord p = W("2^e 1^b 2^e 3^a 1^ba 1^b 3^e", kFreeAbc);
  PigmentedWord s1 = magnet_stage1(p);
  CHECK(format_word(s1) == "2^e 1^b 2^e 3^a 1^b 3^e");
  PigmentedWord s2 = magnet_stage2(s1);
  CHECK(format_word(s2) == "2^e 2^e 1^b 1^b 3^a 3^e");
  CHECK(format_word(magnet_stage3(s2)) == "2^e 1^b 3^a 3^e");

  PigmentedWord q = W("4^a 2^b 1^c 1^c 4^b 3^b 3^a 2^a 2^a 4^a 2^c 4^a 2^c", kFreeAbc);
  PigmentedWord q1 = magnet_stage1(q);
  CHECK(format_word(q1) == "4^a 2^b 1^c 1^c 3^b 3^a 4^a 2^c");
  CHECK(magnet_stage2(q1) == q1);  // already maximal for the swap rule
}

TEST_CASE("pillar stages pass through the worked intermediates") {
  PigmentedWord p = W("2^ab 2^a 4^b 4^b 2^e 4^ab 4^e 3^a 3^a 3^ba 2^ab 5^b 3^ab", kFreeAbc);
  PigmentedWord s1 = pill_stage1(p);
  CHECK(format_word(s1) == "2^ab 2^a 2^e 4^b 4^b 4^ab 4^e 3^a 3^a 3^ba 2^ab 5^b 3^ab");
  PigmentedWord s2 = pill_stage2(s1);
  CHECK(format_word(s2) == "2^ab 2^e 2^a 4^b 4^ab 4^b 4^e 3^a 3^a 3^ba 2^ab 5^b 3^ab");
  CHECK(format_word(pill_stage3(s2)) ==
        "2^ab 2^e 2^a 4^b 4^ab 4^b 4^e 2^ab 3^a 3^a 3^ba 5^b 3^ab");
}

TEST_CASE("first_k absorbs mirrored maps with larger parameters") {
  for (int round = 0; round < 300; ++round) {
    PigmentedWord q = random_word(kFreeAb, 3, 7);
    int k = std::uniform_int_distribution<int>(0, 2)(rng);
    int bigger = k + std::uniform_int_distribution<int>(0, 2)(rng);
    CHECK(first_k(first_k_rev(q, k), bigger) == first_k_rev(q, k));
    CHECK(first_k_rev(first_k(q, k), bigger) == first_k(q, k));
  }
}

TEST_CASE("magnet stages do not commute") {
  PigmentedWord p = W("1^e 1^a 1^e", kFreeAbc);
  PigmentedWord reordered = magnet_stage1(magnet_stage3(magnet_stage2(p)));
  CHECK(format_word(reordered) == "1^e 1^e");
  CHECK(reordered != magnet_norm(p));
}

TEST_CASE("magnet properties") {
  for (int round = 0; round < 500; ++round) {
    PigmentedWord q = random_word(kFreeAb, 3, 8);
    PigmentedWord nf = magnet_norm(q);
    CHECK(magnet_norm(nf) == nf);
    CHECK(nf.length() <= q.length());
    std::map<int, int> per_value;
    for (const PigmentedLetter& l : nf.letters()) ++per_value[l.value];
    for (auto [value, count] : per_value) {
      (void)value;
      CHECK(count <= 2);
    }
    // the normal form only depends on the pair of witness subwords
    CHECK(magnet_norm(concat(first_k(q, 1), first_k_rev(q, 1))) == nf);
  }
}

TEST_CASE("stalactite normal form keeps the witness prefix and sorts the rest") {
  PigmentedWord p = W("3^a 2^e 1^a 1^b 1^ba 2^e 1^ba 1^e 2^a 4^a 4^b", kFreeAbc);
  CHECK(format_word(stal_norm(p, 1)) == "3^a 2^e 1^a 4^a 1^e 1^b 1^ba 1^ba 2^e 2^a 4^b");
  CHECK(format_word(stal_norm(p, 2)) == "3^a 2^e 1^a 1^b 2^e 4^a 4^b 1^e 1^ba 1^ba 2^a");

  PigmentedWord few = W("2^a 1^b 2^e", kFreeAbc);
  CHECK(stal_norm(few, 2) == few);

  for (int round = 0; round < 300; ++round) {
    PigmentedWord q = random_word(kFreeAb, 3, 8);
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    PigmentedWord nf = stal_norm(q, k);
    CHECK(stal_norm(nf, k) == nf);
    CHECK(nf.length() == q.length());
    CHECK(first_k(nf, k) == first_k(q, k));
    // prefix of the normal form is exactly the witness subword
    PigmentedWord head = first_k(q, k);
    for (int j = 0; j < head.length(); ++j) CHECK(nf.letter(j) == head.letter(j));
    CHECK(oracle::letter_multiset(nf) == oracle::letter_multiset(q));
  }
}

TEST_CASE("pillar normal form matches the worked reduction") {
  PigmentedWord p =
      W("2^ab 2^a 4^b 4^b 2^e 4^ab 4^e 3^a 3^a 3^ba 2^ab 5^b 3^ab", kFreeAbc);
  CHECK(format_word(pill_norm(p)) ==
        "2^ab 2^e 2^a 4^b 4^ab 4^b 4^e 2^ab 3^a 3^a 3^ba 5^b 3^ab");
  PigmentedWord distinct = W("2^a 3^b 1^e", kFreeAbc);
  CHECK(pill_norm(distinct) == distinct);
}

TEST_CASE("pillar properties") {
  for (int round = 0; round < 500; ++round) {
    PigmentedWord q = random_word(kFreeAb, 3, 8);
    PigmentedWord nf = pill_norm(q);
    CHECK(pill_norm(nf) == nf);  // run twice and compare
    CHECK(nf.length() == q.length());
    CHECK(oracle::letter_multiset(nf) == oracle::letter_multiset(q));
    CHECK(first_k(nf, 1) == first_k(q, 1));
    CHECK(first_k_rev(nf, 1) == first_k_rev(q, 1));
  }
}

TEST_CASE("normal forms never lengthen the word") {
  for (int round = 0; round < 300; ++round) {
    PigmentedWord q = random_word(kTrivial, 3, 8);
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    CHECK(first_k(q, k).length() <= q.length());
    CHECK(magnet_norm(q).length() <= q.length());
    CHECK(stal_norm(q, k).length() <= q.length());
    CHECK(pill_norm(q).length() <= q.length());
    CHECK(inc_norm(q, k).length() <= q.length());
  }
}

TEST_CASE("magnet decomposition on exhaustive small instances") {
  for (int arity = 0; arity <= 2; ++arity) {
    for (const PigmentedWord& p : trivial_words(arity, 4)) {
      CHECK(magnet_norm(p) == magnet_norm(concat(first_k(p, 1), first_k_rev(p, 1))));
    }
  }
}
