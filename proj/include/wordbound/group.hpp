// Concrete group families with exact arithmetic and canonical normal forms.
//
// A Group is an immutable, cheaply copyable descriptor. An Element is a
// family-tagged normal form; two elements of the same group are equal as
// group elements exactly when their normal forms compare equal, so Element
// can be used directly as a hash key.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wordbound/errors.hpp"
#include "wordbound/integer.hpp"

namespace wordbound {

enum class Family : std::uint8_t {
  FiniteCyclic,
  IntVector,
  DihedralFinite,
  DihedralInfinite,
  Heisenberg,
  Free,
  Product,
  CayleyTable
};

std::string family_name(Family family);

class Element;

namespace nf {
  // Residue in [0, q).
  struct Cyclic {
    std::int64_t residue = 0;
    bool operator==(Cyclic const&) const = default;
  };

  struct Vector {
    std::vector<Integer> coords;
    bool operator==(Vector const&) const = default;
  };

  // r^rotation s^(reflection ? 1 : 0); rotation is reduced mod n in D_2n.
  struct Dihedral {
    Integer rotation;
    bool    reflection = false;
    bool operator==(Dihedral const&) const = default;
  };

  // a^i b^j c^l with [a, b] = c central.
  struct Heisenberg {
    Integer i, j, l;
    bool operator==(Heisenberg const&) const = default;
  };

  // Reduced word; letter +m is x_m and -m is x_m^-1 (m >= 1).
  struct FreeWord {
    std::vector<int> letters;
    bool operator==(FreeWord const&) const = default;
  };

  struct Pair {
    std::vector<Element> parts;  // exactly two: left, right
    bool operator==(Pair const& other) const;
  };

  struct TableIndex {
    std::size_t index = 0;
    bool operator==(TableIndex const&) const = default;
  };
}  // namespace nf

class Element {
 public:
  using Value = std::variant<nf::Cyclic,
                             nf::Vector,
                             nf::Dihedral,
                             nf::Heisenberg,
                             nf::FreeWord,
                             nf::Pair,
                             nf::TableIndex>;

  Element() = default;
  explicit Element(Value value) : value_(std::move(value)) {}

  static Element cyclic(std::int64_t residue);
  static Element vector(std::vector<Integer> coords);
  static Element dihedral(Integer rotation, bool reflection);
  static Element heisenberg(Integer i, Integer j, Integer l);
  /// Freely reduces `letters` before storing them.
  static Element free_word(std::vector<int> const& letters);
  static Element pair(Element left, Element right);
  static Element table(std::size_t index);

  Value const& value() const noexcept {
    return value_;
  }

  template <typename T>
  T const& as() const {
    if (auto const* p = std::get_if<T>(&value_)) {
      return *p;
    }
    throw DomainError("element has an unexpected normal-form family");
  }

  template <typename T>
  bool holds() const noexcept {
    return std::holds_alternative<T>(value_);
  }

  Element const& left() const {
    return as<nf::Pair>().parts[0];
  }
  Element const& right() const {
    return as<nf::Pair>().parts[1];
  }

  bool operator==(Element const& other) const {
    return value_ == other.value_;
  }

  std::size_t hash() const noexcept;

  /// Rough heap + inline size in bytes, used for search memory budgets.
  std::size_t footprint() const noexcept;

 private:
  Value value_;
};

struct ElementHash {
  std::size_t operator()(Element const& e) const noexcept {
    return e.hash();
  }
};

/// Explicit finite group on {0, ..., m-1} with identity 0.
class CayleyTable {
 public:
  /// Validates totality, identity at 0, inverses and associativity.
  CayleyTable(std::vector<std::string>              names,
              std::vector<std::vector<std::size_t>> table);

  std::size_t size() const noexcept {
    return names_.size();
  }
  std::size_t mul(std::size_t a, std::size_t b) const {
    return table_[a][b];
  }
  std::size_t inverse(std::size_t a) const {
    return inverse_[a];
  }
  std::string const& name(std::size_t a) const {
    return names_[a];
  }
  std::optional<std::size_t> index_of(std::string const& name) const;

  std::vector<std::string> const& names() const noexcept {
    return names_;
  }
  std::vector<std::vector<std::size_t>> const& rows() const noexcept {
    return table_;
  }

  bool operator==(CayleyTable const& other) const {
    return names_ == other.names_ && table_ == other.table_;
  }

 private:
  std::vector<std::string>              names_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t>              inverse_;
};

/// Result of an order computation.
struct ElementOrder {
  enum class Kind { Finite, Infinite, CapExceeded };
  Kind          kind  = Kind::Finite;
  std::uint64_t value = 0;  // meaningful only for Finite

  static ElementOrder finite(std::uint64_t n) {
    return {Kind::Finite, n};
  }
  static ElementOrder infinite() {
    return {Kind::Infinite, 0};
  }
  static ElementOrder cap_exceeded() {
    return {Kind::CapExceeded, 0};
  }
  bool is_finite() const noexcept {
    return kind == Kind::Finite;
  }
  bool operator==(ElementOrder const&) const = default;
};

class Group {
 public:
  static Group finite_cyclic(std::int64_t q);
  static Group int_vector(std::size_t d);
  static Group integers() {
    return int_vector(1);
  }
  static Group dihedral(std::int64_t n);  // D_2n, order 2n
  static Group infinite_dihedral();
  static Group heisenberg();
  static Group free(std::size_t rank);
  static Group product(Group left, Group right);
  static Group cayley_table(CayleyTable table);

  Family family() const noexcept;

  /// q for FiniteCyclic, n for DihedralFinite.
  std::int64_t modulus() const;
  /// d for IntVector, k for Free.
  std::size_t rank() const;
  Group const& left() const;
  Group const& right() const;
  CayleyTable const& table() const;

  bool operator==(Group const& other) const;
  bool operator!=(Group const& other) const {
    return !(*this == other);
  }

  std::string name() const;

  bool is_finite() const;
  /// Number of elements; nullopt for infinite groups.
  std::optional<std::uint64_t> order() const;
  bool is_abelian() const;

  Element identity() const;
  Element mul(Element const& g, Element const& h) const;
  Element inv(Element const& g) const;
  Element power(Element const& g, Integer n) const;
  Element commutator(Element const& g, Element const& h) const;
  ElementOrder element_order(Element const& g, std::uint64_t cap) const;

  /// All elements exactly once; throws UnsupportedError for infinite groups.
  std::vector<Element> enumerate() const;

  /// Full membership check (family shape and value ranges).
  bool contains(Element const& g) const;
  void require(Element const& g) const;

 private:
  struct Node;
  explicit Group(std::shared_ptr<Node const> node) : node_(std::move(node)) {}
  std::shared_ptr<Node const> node_;
};

}  // namespace wordbound

template <>
struct std::hash<wordbound::Element> {
  std::size_t operator()(wordbound::Element const& e) const noexcept {
    return e.hash();
  }
};
