#include "pwclone/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pwclone {

namespace {

bool visible(char c) { return c > ' ' && c != 0x7f; }

long long parse_integer_token(std::string_view token, std::string_view what) {
  long long n = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), n);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw error(std::string(what) + ": not an integer: '" + std::string(token) + "'");
  }
  return n;
}

}  // namespace

MonoidSpec MonoidSpec::trivial() {
  MonoidSpec m;
  m.kind_ = MonoidKind::Trivial;
  return m;
}

MonoidSpec MonoidSpec::free_monoid(std::string alphabet) {
  if (alphabet.empty()) throw error("free monoid: empty alphabet");
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    char c = alphabet[i];
    if (!visible(c) || c == '^' || c == 'e') {
      throw error(std::string("free monoid: invalid alphabet symbol '") + c + "'");
    }
    if (alphabet.find(c, i + 1) != std::string::npos) {
      throw error(std::string("free monoid: duplicate alphabet symbol '") + c + "'");
    }
  }
  MonoidSpec m;
  m.kind_ = MonoidKind::Free;
  m.alphabet_ = std::move(alphabet);
  return m;
}

MonoidSpec MonoidSpec::cyclic(long long modulus) {
  if (modulus < 1) throw error("cyclic monoid: modulus must be positive");
  MonoidSpec m;
  m.kind_ = MonoidKind::Cyclic;
  m.modulus_ = modulus;
  return m;
}

MonoidSpec MonoidSpec::int_add() {
  MonoidSpec m;
  m.kind_ = MonoidKind::IntAdd;
  return m;
}

MonoidSpec MonoidSpec::nat_max() {
  MonoidSpec m;
  m.kind_ = MonoidKind::NatMax;
  return m;
}

MonoidSpec MonoidSpec::table(TableData data) {
  const std::uint32_t n = data.size();
  if (n == 0) throw error("table monoid: no elements");
  if (data.op.size() != static_cast<std::size_t>(n) * n) {
    throw error("table monoid: operation table is not total");
  }
  for (std::uint32_t v : data.op) {
    if (v >= n) throw error("table monoid: operation table entry out of range");
  }
  if (data.unit >= n) throw error("table monoid: unit index out of range");
  for (std::uint32_t i = 0; i < n; ++i) {
    if (data.product(data.unit, i) != i || data.product(i, data.unit) != i) {
      throw error("table monoid: '" + data.names[data.unit] + "' is not a two-sided unit");
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (data.product(data.product(a, b), c) != data.product(a, data.product(b, c))) {
          throw error("table monoid: operation is not associative on (" + data.names[a] +
                      ", " + data.names[b] + ", " + data.names[c] + ")");
        }
      }
    }
  }
  MonoidSpec m;
  m.kind_ = MonoidKind::Table;
  m.table_ = std::make_shared<const TableData>(std::move(data));
  return m;
}

bool MonoidSpec::finite() const {
  switch (kind_) {
    case MonoidKind::Trivial:
    case MonoidKind::Cyclic:
    case MonoidKind::Table:
      return true;
    default:
      return false;
  }
}

long long MonoidSpec::size() const {
  switch (kind_) {
    case MonoidKind::Trivial: return 1;
    case MonoidKind::Cyclic: return modulus_;
    case MonoidKind::Table: return table_->size();
    default:
      throw unsupported_error("monoid '" + to_text() + "' is infinite");
  }
}

std::string MonoidSpec::to_text() const {
  switch (kind_) {
    case MonoidKind::Trivial: return "trivial";
    case MonoidKind::Free: return "free:" + alphabet_;
    case MonoidKind::Cyclic: return "zmod:" + std::to_string(modulus_);
    case MonoidKind::IntAdd: return "int-add";
    case MonoidKind::NatMax: return "nat-max";
    case MonoidKind::Table:
      return table_->origin.empty() ? "table" : "table:" + table_->origin;
  }
  return "?";
}

bool MonoidSpec::operator==(const MonoidSpec& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case MonoidKind::Free: return alphabet_ == other.alphabet_;
    case MonoidKind::Cyclic: return modulus_ == other.modulus_;
    case MonoidKind::Table: return *table_ == *other.table_;
    default: return true;
  }
}

MonoidElement munit(const MonoidSpec& m) {
  switch (m.kind()) {
    case MonoidKind::Trivial: return MonoidElement::trivial();
    case MonoidKind::Free: return MonoidElement::word("");
    case MonoidKind::Cyclic:
    case MonoidKind::IntAdd:
    case MonoidKind::NatMax:
      return MonoidElement::integer(0);
    case MonoidKind::Table: return MonoidElement::table_element(m.table_data().unit);
  }
  return MonoidElement::trivial();
}

bool is_valid(const MonoidSpec& m, const MonoidElement& a) {
  switch (m.kind()) {
    case MonoidKind::Trivial:
      return std::holds_alternative<std::monostate>(a.payload());
    case MonoidKind::Free: {
      if (!std::holds_alternative<std::string>(a.payload())) return false;
      const std::string& w = a.symbols();
      return std::all_of(w.begin(), w.end(), [&](char c) {
        return m.alphabet().find(c) != std::string::npos;
      });
    }
    case MonoidKind::Cyclic:
      return std::holds_alternative<long long>(a.payload()) && a.as_integer() >= 0 &&
             a.as_integer() < m.modulus();
    case MonoidKind::IntAdd:
      return std::holds_alternative<long long>(a.payload());
    case MonoidKind::NatMax:
      return std::holds_alternative<long long>(a.payload()) && a.as_integer() >= 0;
    case MonoidKind::Table:
      return std::holds_alternative<TableRef>(a.payload()) &&
             a.table_index() < m.table_data().size();
  }
  return false;
}

void require_valid(const MonoidSpec& m, const MonoidElement& a) {
  if (!is_valid(m, a)) {
    throw mismatch_error("element does not belong to monoid '" + m.to_text() + "'");
  }
}

bool is_unit(const MonoidSpec& m, const MonoidElement& a) { return a == munit(m); }

MonoidElement mmul(const MonoidSpec& m, const MonoidElement& a, const MonoidElement& b) {
  require_valid(m, a);
  require_valid(m, b);
  switch (m.kind()) {
    case MonoidKind::Trivial: return a;
    case MonoidKind::Free: return MonoidElement::word(a.symbols() + b.symbols());
    case MonoidKind::Cyclic:
      return MonoidElement::integer((a.as_integer() + b.as_integer()) % m.modulus());
    case MonoidKind::IntAdd: return MonoidElement::integer(a.as_integer() + b.as_integer());
    case MonoidKind::NatMax:
      return MonoidElement::integer(std::max(a.as_integer(), b.as_integer()));
    case MonoidKind::Table:
      return MonoidElement::table_element(m.table_data().product(a.table_index(), b.table_index()));
  }
  return a;
}

std::strong_ordering mcmp(const MonoidSpec& m, const MonoidElement& a, const MonoidElement& b) {
  require_valid(m, a);
  require_valid(m, b);
  switch (m.kind()) {
    case MonoidKind::Trivial: return std::strong_ordering::equal;
    case MonoidKind::Free: {
      // Lexicographic in the given alphabet order; proper prefixes first.
      const std::string& u = a.symbols();
      const std::string& v = b.symbols();
      const std::size_t n = std::min(u.size(), v.size());
      for (std::size_t i = 0; i < n; ++i) {
        auto ru = m.alphabet().find(u[i]);
        auto rv = m.alphabet().find(v[i]);
        if (ru != rv) return ru <=> rv;
      }
      return u.size() <=> v.size();
    }
    case MonoidKind::Cyclic:
    case MonoidKind::IntAdd:
    case MonoidKind::NatMax:
      return a.as_integer() <=> b.as_integer();
    case MonoidKind::Table:
      return a.table_index() <=> b.table_index();
  }
  return std::strong_ordering::equal;
}

std::vector<MonoidElement> all_elements(const MonoidSpec& m) {
  std::vector<MonoidElement> out;
  switch (m.kind()) {
    case MonoidKind::Trivial:
      out.push_back(MonoidElement::trivial());
      break;
    case MonoidKind::Cyclic:
      for (long long r = 0; r < m.modulus(); ++r) out.push_back(MonoidElement::integer(r));
      break;
    case MonoidKind::Table:
      for (std::uint32_t i = 0; i < m.table_data().size(); ++i) {
        out.push_back(MonoidElement::table_element(i));
      }
      break;
    default:
      throw unsupported_error("cannot enumerate elements of infinite monoid '" + m.to_text() + "'");
  }
  return out;
}

std::string format_element(const MonoidSpec& m, const MonoidElement& a) {
  require_valid(m, a);
  if (is_unit(m, a)) return "e";
  switch (m.kind()) {
    case MonoidKind::Free: return a.symbols();
    case MonoidKind::Cyclic:
    case MonoidKind::IntAdd:
    case MonoidKind::NatMax:
      return std::to_string(a.as_integer());
    case MonoidKind::Table: return m.table_data().names[a.table_index()];
    default: return "e";
  }
}

MonoidElement parse_element(const MonoidSpec& m, std::string_view token) {
  if (token.empty()) throw error("empty pigment");
  if (token == "e") return munit(m);
  switch (m.kind()) {
    case MonoidKind::Trivial:
      throw error("pigment '" + std::string(token) + "' is not an element of the trivial monoid");
    case MonoidKind::Free: {
      MonoidElement a = MonoidElement::word(std::string(token));
      if (!is_valid(m, a)) {
        throw error("pigment '" + std::string(token) + "' uses symbols outside alphabet '" +
                    m.alphabet() + "'");
      }
      return a;
    }
    case MonoidKind::Cyclic: {
      long long r = parse_integer_token(token, "pigment");
      if (r < 0 || r >= m.modulus()) {
        throw error("pigment " + std::to_string(r) + " is not a residue modulo " +
                    std::to_string(m.modulus()));
      }
      return MonoidElement::integer(r);
    }
    case MonoidKind::IntAdd:
      return MonoidElement::integer(parse_integer_token(token, "pigment"));
    case MonoidKind::NatMax: {
      long long v = parse_integer_token(token, "pigment");
      if (v < 0) throw error("pigment of nat-max must be nonnegative");
      return MonoidElement::integer(v);
    }
    case MonoidKind::Table: {
      const TableData& t = m.table_data();
      for (std::uint32_t i = 0; i < t.size(); ++i) {
        if (t.names[i] == token) return MonoidElement::table_element(i);
      }
      throw error("pigment '" + std::string(token) + "' is not an element of the table monoid");
    }
  }
  throw error("unreachable pigment kind");
}

MonoidSpec parse_table_stream(std::istream& in, std::string origin) {
  std::string line;
  if (!std::getline(in, line)) throw error("table file: missing element list");
  TableData data;
  {
    std::istringstream ss(line);
    std::string name;
    while (ss >> name) data.names.push_back(name);
  }
  if (data.names.empty()) throw error("table file: no element names");
  for (std::size_t i = 0; i < data.names.size(); ++i) {
    for (std::size_t j = i + 1; j < data.names.size(); ++j) {
      if (data.names[i] == data.names[j]) {
        throw error("table file: duplicate element name '" + data.names[i] + "'");
      }
    }
  }
  auto index_of = [&](const std::string& name) -> std::uint32_t {
    auto it = std::find(data.names.begin(), data.names.end(), name);
    if (it == data.names.end()) throw error("table file: unknown element name '" + name + "'");
    return static_cast<std::uint32_t>(it - data.names.begin());
  };
  if (!std::getline(in, line)) throw error("table file: missing unit line");
  {
    std::istringstream ss(line);
    std::string unit_name;
    if (!(ss >> unit_name)) throw error("table file: missing unit name");
    data.unit = index_of(unit_name);
  }
  const std::size_t n = data.names.size();
  data.op.reserve(n * n);
  std::string name;
  while (in >> name) data.op.push_back(index_of(name));
  if (data.op.size() != n * n) {
    throw error("table file: expected " + std::to_string(n * n) + " products, got " +
                std::to_string(data.op.size()));
  }
  data.origin = std::move(origin);
  return MonoidSpec::table(std::move(data));
}

MonoidSpec parse_monoid(std::string_view text) {
  if (text == "trivial") return MonoidSpec::trivial();
  if (text == "int-add") return MonoidSpec::int_add();
  if (text == "nat-max") return MonoidSpec::nat_max();
  if (text.rfind("free:", 0) == 0) return MonoidSpec::free_monoid(std::string(text.substr(5)));
  if (text.rfind("zmod:", 0) == 0) {
    return MonoidSpec::cyclic(parse_integer_token(text.substr(5), "zmod modulus"));
  }
  if (text.rfind("table:", 0) == 0) {
    std::string path(text.substr(6));
    std::ifstream in(path);
    if (!in) throw error("cannot open table file '" + path + "'");
    return parse_table_stream(in, path);
  }
  throw error("unknown monoid '" + std::string(text) +
              "' (expected trivial | free:<symbols> | zmod:<n> | int-add | nat-max | table:<path>)");
}

MonoidMorphism::MonoidMorphism(MorphismRule rule, MonoidSpec source, MonoidSpec target,
                               std::vector<MonoidElement> images)
    : rule_(rule), source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images)) {
  validate();
}

MonoidMorphism MonoidMorphism::identity(MonoidSpec m) {
  return MonoidMorphism(MorphismRule::Identity, m, m, {});
}

MonoidMorphism MonoidMorphism::free_length(MonoidSpec source, MonoidSpec target) {
  if (source.kind() != MonoidKind::Free) {
    throw mismatch_error("free-length morphism requires a free source monoid");
  }
  if (target.kind() != MonoidKind::IntAdd && target.kind() != MonoidKind::NatMax) {
    throw mismatch_error("free-length morphism requires int-add or nat-max target");
  }
  return MonoidMorphism(MorphismRule::FreeLength, std::move(source), std::move(target), {});
}

MonoidMorphism MonoidMorphism::pointwise(MonoidSpec source, MonoidSpec target,
                                         std::vector<MonoidElement> images) {
  if (!source.finite()) {
    throw mismatch_error("pointwise morphism requires a finite source monoid");
  }
  if (images.size() != static_cast<std::size_t>(source.size())) {
    throw mismatch_error("pointwise morphism: one image per source element required");
  }
  return MonoidMorphism(MorphismRule::PointwiseTable, std::move(source), std::move(target),
                        std::move(images));
}

void MonoidMorphism::validate() const {
  if (apply(munit(source_)) != munit(target_)) {
    throw mismatch_error("morphism does not map unit to unit");
  }
  std::vector<MonoidElement> generators;
  if (source_.kind() == MonoidKind::Free) {
    for (char c : source_.alphabet()) generators.push_back(MonoidElement::word(std::string(1, c)));
  } else if (source_.finite()) {
    generators = all_elements(source_);
  }
  for (const MonoidElement& a : generators) {
    for (const MonoidElement& b : generators) {
      if (apply(mmul(source_, a, b)) != mmul(target_, apply(a), apply(b))) {
        throw mismatch_error("morphism is not multiplicative on (" +
                             format_element(source_, a) + ", " + format_element(source_, b) + ")");
      }
    }
  }
}

MonoidElement MonoidMorphism::apply(const MonoidElement& a) const {
  require_valid(source_, a);
  switch (rule_) {
    case MorphismRule::Identity: return a;
    case MorphismRule::FreeLength:
      return MonoidElement::integer(static_cast<long long>(a.symbols().size()));
    case MorphismRule::PointwiseTable: {
      const auto elems = all_elements(source_);
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] == a) return images_[i];
      }
      throw mismatch_error("element outside pointwise morphism domain");
    }
  }
  return a;
}

MonoidElement apply_morphism(const MonoidMorphism& phi, const MonoidElement& a) {
  return phi.apply(a);
}

}  // namespace pwclone
