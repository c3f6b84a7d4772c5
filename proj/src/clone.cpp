#include "pwclone/clone.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <ostream>

namespace pwclone {

namespace {

int parse_param(std::string_view text) {
  int k = -1;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc{} || ptr != text.data() + text.size() || k < 0) {
    throw error("invalid clone parameter '" + std::string(text) + "'");
  }
  return k;
}

std::pair<int, int> parse_param_pair(std::string_view text) {
  std::size_t comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw error("expected two parameters k,k' in '" + std::string(text) + "'");
  }
  return {parse_param(text.substr(0, comma)), parse_param(text.substr(comma + 1))};
}

[[noreturn]] void unsupported_normal_form(const CloneId& c) {
  throw unsupported_error("clone '" + c.to_text() +
                          "' has no canonical representative; only equivalence is decidable");
}

void require_same_monoid(const CloneId& c, const PigmentedWord& p) {
  if (p.monoid() != c.monoid()) {
    throw mismatch_error("word over '" + p.monoid().to_text() + "' used with clone over '" +
                         c.monoid().to_text() + "'");
  }
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int i) {
  BigInt b = 1;
  for (int j = 0; j < i; ++j) {
    b *= n - j;
    b /= j + 1;
  }
  return b;
}

// Sum over u in [0..k]^n of (u1+...+un)! / (u1! ... un!) * size^(u1+...+un).
BigInt arrangement_count(int k, int n, long long monoid_size) {
  std::vector<int> u(static_cast<std::size_t>(n), 0);
  BigInt total = 0;
  while (true) {
    int sum = 0;
    BigInt denom = 1;
    for (int ui : u) {
      sum += ui;
      denom *= factorial(ui);
    }
    BigInt term = factorial(sum) / denom;
    BigInt weight = 1;
    for (int i = 0; i < sum; ++i) weight *= monoid_size;
    total += term * weight;
    int j = 0;
    while (j < n && u[static_cast<std::size_t>(j)] == k) {
      u[static_cast<std::size_t>(j)] = 0;
      ++j;
    }
    if (j == n) break;
    ++u[static_cast<std::size_t>(j)];
  }
  return total;
}

long long require_finite(const CloneId& c) {
  if (!c.monoid().finite()) {
    throw unsupported_error("dimension formula for '" + c.to_text() +
                            "' needs a finite monoid, got '" + c.monoid().to_text() + "'");
  }
  return c.monoid().size();
}

}  // namespace

CloneId::CloneId(Variety variety, MonoidSpec monoid, int k, int k2)
    : variety_(variety), k_(k), k2_(k2), monoid_(std::move(monoid)) {
  if (k_ < 0 || k2_ < 0) throw error("clone parameters must be nonnegative");
  if (variety_ == Variety::Inc && monoid_.kind() != MonoidKind::Trivial) {
    throw unsupported_error("inc clones are defined over the trivial monoid only");
  }
}

bool CloneId::supports_normal_form() const {
  switch (variety_) {
    case Variety::Magn:
    case Variety::Pill:
      return k_ == 1 && k2_ == 1;
    default:
      return true;
  }
}

std::string CloneId::to_text() const {
  switch (variety_) {
    case Variety::P: return "p";
    case Variety::WInc: return "winc";
    case Variety::Arra: return "arra:" + std::to_string(k_);
    case Variety::ArraRev: return "arra-rev:" + std::to_string(k_);
    case Variety::Inc: return "inc:" + std::to_string(k_);
    case Variety::Magn: return "magn:" + std::to_string(k_) + "," + std::to_string(k2_);
    case Variety::Stal: return "stal:" + std::to_string(k_);
    case Variety::StalRev: return "stal-rev:" + std::to_string(k_);
    case Variety::Pill: return "pill:" + std::to_string(k_) + "," + std::to_string(k2_);
  }
  return "?";
}

CloneId parse_clone(std::string_view text, MonoidSpec monoid) {
  std::string_view head = text;
  std::string_view params;
  if (std::size_t colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    params = text.substr(colon + 1);
  }
  auto one = [&](Variety v) {
    return CloneId(v, std::move(monoid), params.empty() ? 1 : parse_param(params));
  };
  auto two = [&](Variety v) {
    auto [k, k2] = params.empty() ? std::pair<int, int>{1, 1} : parse_param_pair(params);
    return CloneId(v, std::move(monoid), k, k2);
  };
  if (head == "p") return CloneId(Variety::P, std::move(monoid));
  if (head == "winc") return CloneId(Variety::WInc, std::move(monoid));
  if (head == "arra") return one(Variety::Arra);
  if (head == "arra-rev") return one(Variety::ArraRev);
  if (head == "inc") return one(Variety::Inc);
  if (head == "magn") return two(Variety::Magn);
  if (head == "stal") return one(Variety::Stal);
  if (head == "stal-rev") return one(Variety::StalRev);
  if (head == "pill") return two(Variety::Pill);
  throw error("unknown clone '" + std::string(text) +
              "' (expected p | winc | arra:k | arra-rev:k | inc:k | magn:k,k' | stal:k | "
              "stal-rev:k | pill:k,k')");
}

CloneId reversed(const CloneId& c) {
  switch (c.variety()) {
    case Variety::P:
    case Variety::WInc:
    case Variety::Inc:
      return c;
    case Variety::Arra: return CloneId(Variety::ArraRev, c.monoid(), c.k());
    case Variety::ArraRev: return CloneId(Variety::Arra, c.monoid(), c.k());
    case Variety::Stal: return CloneId(Variety::StalRev, c.monoid(), c.k());
    case Variety::StalRev: return CloneId(Variety::Stal, c.monoid(), c.k());
    case Variety::Magn: return CloneId(Variety::Magn, c.monoid(), c.k2(), c.k());
    case Variety::Pill: return CloneId(Variety::Pill, c.monoid(), c.k2(), c.k());
  }
  return c;
}

PigmentedWord normal_form(const CloneId& c, const PigmentedWord& p) {
  require_same_monoid(c, p);
  if (!c.supports_normal_form()) unsupported_normal_form(c);
  switch (c.variety()) {
    case Variety::P: return p;
    case Variety::WInc: return sort_norm(p);
    case Variety::Arra: return first_k(p, c.k());
    case Variety::ArraRev: return first_k_rev(p, c.k());
    case Variety::Inc: return inc_norm(p, c.k());
    case Variety::Magn: return magnet_norm(p);
    case Variety::Stal:
      return c.k() == 0 ? sort_norm(p) : stal_norm(p, c.k());
    case Variety::StalRev:
      return c.k() == 0 ? sort_norm(p) : reverse(stal_norm(reverse(p), c.k()));
    case Variety::Pill: return pill_norm(p);
  }
  throw error("unreachable variety");
}

bool equiv(const CloneId& c, const PigmentedWord& p, const PigmentedWord& q) {
  require_same_monoid(c, p);
  require_same_monoid(c, q);
  if (p.arity() != q.arity()) {
    throw mismatch_error("equivalence needs equal arities, got " + std::to_string(p.arity()) +
                         " and " + std::to_string(q.arity()));
  }
  if (c.supports_normal_form()) return normal_form(c, p) == normal_form(c, q);
  switch (c.variety()) {
    case Variety::Magn:
      return first_k(p, c.k()) == first_k(q, c.k()) &&
             first_k_rev(p, c.k2()) == first_k_rev(q, c.k2());
    case Variety::Pill:
      return first_k(p, c.k()) == first_k(q, c.k()) && sort_norm(p) == sort_norm(q) &&
             first_k_rev(p, c.k2()) == first_k_rev(q, c.k2());
    default:
      throw error("unreachable variety");
  }
}

PigmentedWord clone_superpose(const CloneId& c, const PigmentedWord& p,
                              std::span<const PigmentedWord> args, int result_arity) {
  if (!c.supports_normal_form()) unsupported_normal_form(c);
  return normal_form(c, superpose(p, args, result_arity));
}

PigmentedWord clone_superpose(const CloneId& c, const PigmentedWord& p,
                              std::span<const PigmentedWord> args) {
  const int m = args.empty() ? 0 : args.front().arity();
  return clone_superpose(c, p, args, m);
}

PigmentedWord clone_superpose(const CloneId& c, const PigmentedWord& p,
                              const std::vector<PigmentedWord>& args) {
  return clone_superpose(c, p, std::span<const PigmentedWord>(args.data(), args.size()));
}

bool term_equiv(const CloneId& c, const Term& t, const Term& u) {
  if (t.arity() != u.arity()) {
    throw mismatch_error("term equivalence needs equal declared arities, got " +
                         std::to_string(t.arity()) + " and " + std::to_string(u.arity()));
  }
  return equiv(c, frontier(t, c.monoid()), frontier(u, c.monoid()));
}

std::string to_string(const DimCount& d) {
  return d.infinite ? "infinite" : d.value.str();
}

std::ostream& operator<<(std::ostream& out, const DimCount& d) { return out << to_string(d); }

DimCount dims(const CloneId& c, int n) {
  if (n < 0) throw error("dims needs n >= 0");
  switch (c.variety()) {
    case Variety::P:
    case Variety::WInc:
    case Variety::Stal:
    case Variety::StalRev:
    case Variety::Pill:
      return n == 0 ? DimCount::of(1) : DimCount::inf();
    case Variety::Arra:
    case Variety::ArraRev: {
      if (c.k() == 0) return DimCount::of(1);
      return DimCount::of(arrangement_count(c.k(), n, require_finite(c)));
    }
    case Variety::Inc: {
      BigInt v = 1;
      for (int i = 0; i < n; ++i) v *= c.k() + 1;
      return DimCount::of(v);
    }
    case Variety::Magn: {
      if (c.k() == 0 && c.k2() == 0) return DimCount::of(1);
      if (c.k() != 1 || c.k2() != 1) {
        throw unsupported_error("no dimension formula for '" + c.to_text() + "'");
      }
      const long long size = require_finite(c);
      BigInt total = 0;
      for (int i = 0; i <= n; ++i) {
        BigInt f = factorial(i);
        BigInt weight = 1;
        for (int j = 0; j < 2 * i; ++j) weight *= size;
        total += binomial(n, i) * f * f * weight;
      }
      return DimCount::of(total);
    }
  }
  throw error("unreachable variety");
}

std::optional<long long> default_enumeration_length(const CloneId& c, int n) {
  if (n == 0) return 0;  // the empty word is the only word of arity 0
  switch (c.variety()) {
    case Variety::Arra:
    case Variety::ArraRev:
    case Variety::Inc:
      return static_cast<long long>(c.k()) * n;
    case Variety::Magn:
      if (c.k() == 1 && c.k2() == 1) return 2LL * n;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

long long enumeration_cap_from_env() {
  if (const char* text = std::getenv("PWCLONE_MAX_CLASSES")) {
    long long cap = 0;
    auto [ptr, ec] = std::from_chars(text, text + std::string_view(text).size(), cap);
    if (ec == std::errc{} && ptr == text + std::string_view(text).size() && cap > 0) return cap;
    throw error("PWCLONE_MAX_CLASSES must be a positive integer");
  }
  return 10'000'000;
}

std::vector<PigmentedWord> enumerate_classes(const CloneId& c, int n,
                                             std::optional<long long> max_len,
                                             std::optional<long long> cap_opt) {
  if (n < 0) throw error("enumerate_classes needs n >= 0");
  if (!c.supports_normal_form()) unsupported_normal_form(c);
  if (!c.monoid().finite()) {
    throw unsupported_error("class enumeration needs a finite monoid, got '" +
                            c.monoid().to_text() + "'");
  }
  if (!max_len.has_value()) {
    max_len = default_enumeration_length(c, n);
    if (!max_len.has_value()) {
      throw unsupported_error("clone '" + c.to_text() +
                              "' has infinitely many classes per arity; give an explicit "
                              "length bound");
    }
  }
  const long long cap = cap_opt.value_or(enumeration_cap_from_env());

  std::vector<PigmentedLetter> alphabet;
  for (int v = 1; v <= n; ++v) {
    for (const MonoidElement& a : all_elements(c.monoid())) alphabet.push_back({v, a});
  }

  std::map<std::string, PigmentedWord> classes;
  auto consider = [&](const PigmentedWord& w) {
    PigmentedWord nf = normal_form(c, w);
    classes.try_emplace(format_word(nf), nf);
    if (static_cast<long long>(classes.size()) > cap) {
      throw limit_error("class enumeration exceeded cap of " + std::to_string(cap));
    }
  };

  long long scanned = 0;
  for (long long len = 0; len <= *max_len; ++len) {
    if (len == 0) {
      consider(PigmentedWord::empty(c.monoid(), n));
      ++scanned;
      continue;
    }
    if (alphabet.empty()) break;  // arity 0 has only the empty word
    std::vector<std::size_t> odometer(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<PigmentedLetter> letters;
      letters.reserve(odometer.size());
      for (std::size_t idx : odometer) letters.push_back(alphabet[idx]);
      consider(PigmentedWord(c.monoid(), n, std::move(letters)));
      if (++scanned > cap) {
        throw limit_error("word enumeration exceeded cap of " + std::to_string(cap));
      }
      std::size_t j = 0;
      while (j < odometer.size() && odometer[j] == alphabet.size() - 1) {
        odometer[j] = 0;
        ++j;
      }
      if (j == odometer.size()) break;
      ++odometer[j];
    }
  }

  std::vector<PigmentedWord> out;
  out.reserve(classes.size());
  for (auto& [text, w] : classes) out.push_back(std::move(w));
  return out;
}

}  // namespace pwclone
