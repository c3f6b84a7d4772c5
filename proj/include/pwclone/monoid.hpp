#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pwclone/error.hpp"

namespace pwclone {

enum class MonoidKind { Trivial, Free, Cyclic, IntAdd, NatMax, Table };

// Explicit finite monoid given by its operation table.
struct TableData {
  std::vector<std::string> names;
  std::uint32_t unit = 0;
  std::vector<std::uint32_t> op;  // row-major, op[i * n + j] = i * j
  std::string origin;             // file path, used only for rendering

  std::uint32_t size() const { return static_cast<std::uint32_t>(names.size()); }
  std::uint32_t product(std::uint32_t i, std::uint32_t j) const {
    return op[static_cast<std::size_t>(i) * names.size() + j];
  }
  bool operator==(const TableData& other) const {
    return names == other.names && unit == other.unit && op == other.op;
  }
};

// A pigment monoid. Value type; Table payloads are shared.
class MonoidSpec {
public:
  static MonoidSpec trivial();
  static MonoidSpec free_monoid(std::string alphabet);
  static MonoidSpec cyclic(long long modulus);
  static MonoidSpec int_add();
  static MonoidSpec nat_max();
  static MonoidSpec table(TableData data);

  MonoidKind kind() const { return kind_; }
  const std::string& alphabet() const { return alphabet_; }
  long long modulus() const { return modulus_; }
  const TableData& table_data() const { return *table_; }

  bool finite() const;
  long long size() const;  // element count, finite kinds only
  std::string to_text() const;

  bool operator==(const MonoidSpec& other) const;
  bool operator!=(const MonoidSpec& other) const { return !(*this == other); }

private:
  MonoidSpec() = default;

  MonoidKind kind_ = MonoidKind::Trivial;
  std::string alphabet_;
  long long modulus_ = 0;
  std::shared_ptr<const TableData> table_;
};

// Index into a TableData element list.
struct TableRef {
  std::uint32_t index = 0;
  auto operator<=>(const TableRef&) const = default;
};

// One monoid element. The payload alone does not identify the owning
// monoid; operations validate it against the spec they are given.
class MonoidElement {
public:
  using Payload = std::variant<std::monostate, std::string, long long, TableRef>;

  MonoidElement() = default;
  explicit MonoidElement(Payload payload) : payload_(std::move(payload)) {}

  static MonoidElement trivial() { return MonoidElement(std::monostate{}); }
  static MonoidElement word(std::string symbols) { return MonoidElement(std::move(symbols)); }
  static MonoidElement integer(long long n) { return MonoidElement(Payload(n)); }
  static MonoidElement table_element(std::uint32_t index) { return MonoidElement(TableRef{index}); }

  const Payload& payload() const { return payload_; }
  const std::string& symbols() const { return std::get<std::string>(payload_); }
  long long as_integer() const { return std::get<long long>(payload_); }
  std::uint32_t table_index() const { return std::get<TableRef>(payload_).index; }

  bool operator==(const MonoidElement&) const = default;

private:
  Payload payload_;
};

MonoidElement munit(const MonoidSpec& m);
bool is_valid(const MonoidSpec& m, const MonoidElement& a);
void require_valid(const MonoidSpec& m, const MonoidElement& a);
bool is_unit(const MonoidSpec& m, const MonoidElement& a);

MonoidElement mmul(const MonoidSpec& m, const MonoidElement& a, const MonoidElement& b);
std::strong_ordering mcmp(const MonoidSpec& m, const MonoidElement& a, const MonoidElement& b);

// All elements of a finite monoid, in mcmp order.
std::vector<MonoidElement> all_elements(const MonoidSpec& m);

// The unit renders as "e" in every kind.
std::string format_element(const MonoidSpec& m, const MonoidElement& a);
MonoidElement parse_element(const MonoidSpec& m, std::string_view token);

// Monoid spec text grammar:
//   trivial | free:<symbols> | zmod:<n> | int-add | nat-max | table:<path>
MonoidSpec parse_monoid(std::string_view text);
MonoidSpec parse_table_stream(std::istream& in, std::string origin);

enum class MorphismRule { Identity, FreeLength, PointwiseTable };

// A monoid morphism, validated on construction: the unit maps to the
// unit and multiplicativity holds on all generator pairs available
// (exhaustively for finite monoids, on the alphabet for free monoids).
class MonoidMorphism {
public:
  static MonoidMorphism identity(MonoidSpec m);
  static MonoidMorphism free_length(MonoidSpec source, MonoidSpec target);
  static MonoidMorphism pointwise(MonoidSpec source, MonoidSpec target,
                                  std::vector<MonoidElement> images);

  MorphismRule rule() const { return rule_; }
  const MonoidSpec& source() const { return source_; }
  const MonoidSpec& target() const { return target_; }

  MonoidElement apply(const MonoidElement& a) const;

private:
  MonoidMorphism(MorphismRule rule, MonoidSpec source, MonoidSpec target,
                 std::vector<MonoidElement> images);
  void validate() const;

  MorphismRule rule_;
  MonoidSpec source_;
  MonoidSpec target_;
  std::vector<MonoidElement> images_;  // PointwiseTable: indexed by element order
};

MonoidElement apply_morphism(const MonoidMorphism& phi, const MonoidElement& a);

}  // namespace pwclone
