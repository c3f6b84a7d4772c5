#include "pwclone/word.hpp"

#include <charconv>
#include <ostream>

namespace pwclone {

PigmentedWord::PigmentedWord(MonoidSpec monoid, int arity, std::vector<PigmentedLetter> letters)
    : monoid_(std::move(monoid)), arity_(arity), letters_(std::move(letters)) {
  if (arity_ < 0) throw mismatch_error("arity must be nonnegative");
  for (const PigmentedLetter& l : letters_) {
    if (l.value < 1 || l.value > arity_) {
      throw mismatch_error("letter value " + std::to_string(l.value) +
                           " outside arity " + std::to_string(arity_));
    }
    require_valid(monoid_, l.pigment);
  }
}

std::strong_ordering letter_order(const MonoidSpec& m, const PigmentedLetter& a,
                                  const PigmentedLetter& b) {
  if (a.value != b.value) return a.value <=> b.value;
  return mcmp(m, a.pigment, b.pigment);
}

PigmentedWord act(const MonoidElement& alpha, const PigmentedWord& p) {
  require_valid(p.monoid(), alpha);
  std::vector<PigmentedLetter> out;
  out.reserve(p.letters().size());
  for (const PigmentedLetter& l : p.letters()) {
    out.push_back({l.value, mmul(p.monoid(), alpha, l.pigment)});
  }
  return PigmentedWord(p.monoid(), p.arity(), std::move(out));
}

PigmentedWord superpose(const PigmentedWord& p, std::span<const PigmentedWord> args,
                        int result_arity) {
  if (static_cast<int>(args.size()) != p.arity()) {
    throw mismatch_error("superposition needs " + std::to_string(p.arity()) +
                         " arguments, got " + std::to_string(args.size()));
  }
  for (const PigmentedWord& q : args) {
    if (q.monoid() != p.monoid()) throw mismatch_error("superposition: monoid mismatch");
    if (q.arity() != result_arity) {
      throw mismatch_error("superposition: arguments must share arity " +
                           std::to_string(result_arity) + ", got " + std::to_string(q.arity()));
    }
  }
  std::vector<PigmentedLetter> out;
  std::size_t total = 0;
  for (const PigmentedLetter& l : p.letters()) {
    total += args[static_cast<std::size_t>(l.value - 1)].letters().size();
  }
  out.reserve(total);
  for (const PigmentedLetter& l : p.letters()) {
    const PigmentedWord& q = args[static_cast<std::size_t>(l.value - 1)];
    for (const PigmentedLetter& x : q.letters()) {
      out.push_back({x.value, mmul(p.monoid(), l.pigment, x.pigment)});
    }
  }
  return PigmentedWord(p.monoid(), result_arity, std::move(out));
}

PigmentedWord superpose(const PigmentedWord& p, std::span<const PigmentedWord> args) {
  const int m = args.empty() ? 0 : args.front().arity();
  return superpose(p, args, m);
}

PigmentedWord superpose(const PigmentedWord& p, const std::vector<PigmentedWord>& args) {
  return superpose(p, std::span<const PigmentedWord>(args.data(), args.size()));
}

PigmentedWord projection(const MonoidSpec& m, int i, int n) {
  if (i < 1 || i > n) {
    throw mismatch_error("projection index " + std::to_string(i) + " outside [1, " +
                         std::to_string(n) + "]");
  }
  return PigmentedWord(m, n, {{i, munit(m)}});
}

PigmentedWord reverse(const PigmentedWord& p) {
  std::vector<PigmentedLetter> out(p.letters().rbegin(), p.letters().rend());
  return PigmentedWord(p.monoid(), p.arity(), std::move(out));
}

PigmentedWord concat(const PigmentedWord& p, const PigmentedWord& q) {
  if (p.monoid() != q.monoid()) throw mismatch_error("concat: monoid mismatch");
  if (p.arity() != q.arity()) throw mismatch_error("concat: arity mismatch");
  std::vector<PigmentedLetter> out = p.letters();
  out.insert(out.end(), q.letters().begin(), q.letters().end());
  return PigmentedWord(p.monoid(), p.arity(), std::move(out));
}

PigmentedWord map_pigments(const MonoidMorphism& phi, const PigmentedWord& p) {
  if (phi.source() != p.monoid()) throw mismatch_error("map_pigments: monoid mismatch");
  std::vector<PigmentedLetter> out;
  out.reserve(p.letters().size());
  for (const PigmentedLetter& l : p.letters()) {
    out.push_back({l.value, phi.apply(l.pigment)});
  }
  return PigmentedWord(phi.target(), p.arity(), std::move(out));
}

PigmentedWord parse_word(std::string_view text, const MonoidSpec& m, std::optional<int> arity) {
  // Trim surrounding whitespace.
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw parse_error("empty word text; use '_'", 0);
  text = text.substr(begin, end - begin + 1);

  if (text == "_") {
    if (!arity.has_value()) {
      throw error("the empty word '_' needs an explicit arity");
    }
    return PigmentedWord::empty(m, *arity);
  }

  std::vector<PigmentedLetter> letters;
  int max_value = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t token_end = text.find_first_of(" \t", pos);
    if (token_end == std::string_view::npos) token_end = text.size();
    std::string_view token = text.substr(pos, token_end - pos);
    std::size_t caret = token.find('^');
    if (caret == std::string_view::npos) {
      throw parse_error("letter '" + std::string(token) + "' is missing '^'", pos + begin);
    }
    std::string_view value_text = token.substr(0, caret);
    int value = 0;
    auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc{} || ptr != value_text.data() + value_text.size() || value < 1) {
      throw parse_error("invalid letter value '" + std::string(value_text) + "'", pos + begin);
    }
    MonoidElement pigment;
    try {
      pigment = parse_element(m, token.substr(caret + 1));
    } catch (const error& e) {
      throw parse_error(e.what(), pos + begin + caret + 1);
    }
    letters.push_back({value, pigment});
    max_value = std::max(max_value, value);
    pos = token_end;
  }
  const int n = arity.value_or(max_value);
  if (max_value > n) {
    throw error("letter value " + std::to_string(max_value) + " exceeds arity " +
                std::to_string(n));
  }
  return PigmentedWord(m, n, std::move(letters));
}

std::string format_word(const PigmentedWord& p) {
  if (p.letters().empty()) return "_";
  std::string out;
  bool first = true;
  for (const PigmentedLetter& l : p.letters()) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(l.value);
    out += '^';
    out += format_element(p.monoid(), l.pigment);
  }
  return out;
}

std::ostream& operator<<(std::ostream& out, const PigmentedWord& p) {
  return out << format_word(p);
}

}  // namespace pwclone
