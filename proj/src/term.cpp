#include "pwclone/term.hpp"

#include <charconv>

namespace pwclone {

Term Term::var(int index, int arity) {
  if (index < 1 || index > arity) {
    throw mismatch_error("variable x" + std::to_string(index) + " outside arity " +
                         std::to_string(arity));
  }
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Var;
  node->var_index = index;
  return Term(std::move(node), arity);
}

Term Term::unit(int arity) {
  if (arity < 0) throw mismatch_error("arity must be nonnegative");
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Unit;
  return Term(std::move(node), arity);
}

Term Term::pig(MonoidElement pigment, Term child) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Pig;
  node->pigment = std::move(pigment);
  node->a = child.node_;
  return Term(std::move(node), child.arity_);
}

Term Term::mul(Term left, Term right) {
  if (left.arity_ != right.arity_) {
    throw mismatch_error("m(., .) children must share an arity");
  }
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Mul;
  node->a = left.node_;
  node->b = right.node_;
  return Term(std::move(node), left.arity_);
}

int Term::max_var(const Node& node) {
  switch (node.kind) {
    case TermKind::Var: return node.var_index;
    case TermKind::Unit: return 0;
    case TermKind::Pig: return max_var(*node.a);
    case TermKind::Mul: return std::max(max_var(*node.a), max_var(*node.b));
  }
  return 0;
}

Term Term::with_arity(int arity) const {
  const int needed = max_var(*node_);
  if (arity < needed) {
    throw mismatch_error("arity " + std::to_string(arity) + " below maximum variable index " +
                         std::to_string(needed));
  }
  return Term(node_, arity);
}

namespace {

bool nodes_equal(const Term& s, const Term& t) {
  if (s.kind() != t.kind()) return false;
  switch (s.kind()) {
    case TermKind::Var: return s.var_index() == t.var_index();
    case TermKind::Unit: return true;
    case TermKind::Pig:
      return s.pigment() == t.pigment() && nodes_equal(s.child(), t.child());
    case TermKind::Mul:
      return nodes_equal(s.left(), t.left()) && nodes_equal(s.right(), t.right());
  }
  return false;
}

}  // namespace

bool Term::operator==(const Term& other) const {
  return arity_ == other.arity_ && nodes_equal(*this, other);
}

int degree(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return 0;
    case TermKind::Unit: return 1;
    case TermKind::Pig: return 1 + degree(t.child());
    case TermKind::Mul: return 1 + degree(t.left()) + degree(t.right());
  }
  return 0;
}

int term_length(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return 1;
    case TermKind::Unit: return 0;
    case TermKind::Pig: return term_length(t.child());
    case TermKind::Mul: return term_length(t.left()) + term_length(t.right());
  }
  return 0;
}

Term compose(const Term& t, std::span<const Term> args, int result_arity) {
  if (static_cast<int>(args.size()) != t.arity()) {
    throw mismatch_error("composition needs " + std::to_string(t.arity()) +
                         " arguments, got " + std::to_string(args.size()));
  }
  for (const Term& s : args) {
    if (s.arity() != result_arity) {
      throw mismatch_error("composition: arguments must share arity " +
                           std::to_string(result_arity));
    }
  }
  switch (t.kind()) {
    case TermKind::Var: return args[static_cast<std::size_t>(t.var_index() - 1)];
    case TermKind::Unit: return Term::unit(result_arity);
    case TermKind::Pig:
      return Term::pig(t.pigment(), compose(t.child(), args, result_arity));
    case TermKind::Mul:
      return Term::mul(compose(t.left(), args, result_arity),
                       compose(t.right(), args, result_arity));
  }
  throw error("unreachable term kind");
}

Term compose(const Term& t, std::span<const Term> args) {
  const int m = args.empty() ? 0 : args.front().arity();
  return compose(t, args, m);
}

Term compose(const Term& t, const std::vector<Term>& args) {
  return compose(t, std::span<const Term>(args.data(), args.size()));
}

PigmentedWord frontier(const Term& t, const MonoidSpec& m) {
  switch (t.kind()) {
    case TermKind::Var: return projection(m, t.var_index(), t.arity());
    case TermKind::Unit: return PigmentedWord::empty(m, t.arity());
    case TermKind::Pig: {
      require_valid(m, t.pigment());
      return act(t.pigment(), frontier(t.child(), m));
    }
    case TermKind::Mul: return concat(frontier(t.left(), m), frontier(t.right(), m));
  }
  throw error("unreachable term kind");
}

Term right_comb(const PigmentedWord& p) {
  Term t = Term::unit(p.arity());
  for (auto it = p.letters().rbegin(); it != p.letters().rend(); ++it) {
    t = Term::mul(Term::pig(it->pigment, Term::var(it->value, p.arity())), t);
  }
  return t;
}

namespace {

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;
  const MonoidSpec& monoid;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos); }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected an integer");
    int n = 0;
    std::from_chars(text.data() + start, text.data() + pos, n);
    return n;
  }

  // Parses into a (node, max variable) pair; arity is attached afterwards.
  struct Raw {
    TermKind kind;
    int var_index = 0;
    MonoidElement pigment;
    std::vector<Raw> children;
  };

  Raw parse() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of term");
    char c = text[pos];
    if (c == 'u') {
      ++pos;
      return Raw{TermKind::Unit, 0, {}, {}};
    }
    if (c == 'x') {
      ++pos;
      int index = parse_int();
      if (index < 1) fail("variable index must be positive");
      return Raw{TermKind::Var, index, {}, {}};
    }
    if (c == 'p') {
      ++pos;
      expect('{');
      std::size_t close = text.find('}', pos);
      if (close == std::string_view::npos) fail("unterminated pigment");
      std::string_view token = text.substr(pos, close - pos);
      MonoidElement pigment;
      try {
        pigment = parse_element(monoid, token);
      } catch (const parse_error&) {
        throw;
      } catch (const error& e) {
        fail(e.what());
      }
      pos = close + 1;
      expect('(');
      Raw child = parse();
      expect(')');
      Raw out{TermKind::Pig, 0, std::move(pigment), {}};
      out.children.push_back(std::move(child));
      return out;
    }
    if (c == 'm') {
      ++pos;
      expect('(');
      Raw left = parse();
      expect(',');
      Raw right = parse();
      expect(')');
      Raw out{TermKind::Mul, 0, {}, {}};
      out.children.push_back(std::move(left));
      out.children.push_back(std::move(right));
      return out;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

int raw_max_var(const TermParser::Raw& raw) {
  int n = raw.kind == TermKind::Var ? raw.var_index : 0;
  for (const auto& child : raw.children) n = std::max(n, raw_max_var(child));
  return n;
}

Term raw_to_term(const TermParser::Raw& raw, int arity) {
  switch (raw.kind) {
    case TermKind::Var: return Term::var(raw.var_index, arity);
    case TermKind::Unit: return Term::unit(arity);
    case TermKind::Pig: return Term::pig(raw.pigment, raw_to_term(raw.children[0], arity));
    case TermKind::Mul:
      return Term::mul(raw_to_term(raw.children[0], arity), raw_to_term(raw.children[1], arity));
  }
  throw error("unreachable term kind");
}

}  // namespace

Term parse_term(std::string_view text, const MonoidSpec& m, std::optional<int> arity) {
  TermParser parser{text, 0, m};
  TermParser::Raw raw = parser.parse();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input after term");
  const int needed = raw_max_var(raw);
  const int n = arity.value_or(needed);
  if (needed > n) {
    throw error("variable x" + std::to_string(needed) + " exceeds arity " + std::to_string(n));
  }
  return raw_to_term(raw, n);
}

std::string format_term(const Term& t, const MonoidSpec& m) {
  switch (t.kind()) {
    case TermKind::Var: return "x" + std::to_string(t.var_index());
    case TermKind::Unit: return "u";
    case TermKind::Pig:
      return "p{" + format_element(m, t.pigment()) + "}(" + format_term(t.child(), m) + ")";
    case TermKind::Mul:
      return "m(" + format_term(t.left(), m) + "," + format_term(t.right(), m) + ")";
  }
  return "?";
}

}  // namespace pwclone
