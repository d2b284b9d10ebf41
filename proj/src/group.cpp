#include "wordbound/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wordbound {

std::string family_name(Family family) {
  switch (family) {
    case Family::FiniteCyclic:
      return "FiniteCyclic";
    case Family::IntVector:
      return "IntVector";
    case Family::DihedralFinite:
      return "DihedralFinite";
    case Family::DihedralInfinite:
      return "DihedralInfinite";
    case Family::Heisenberg:
      return "Heisenberg";
    case Family::Free:
      return "Free";
    case Family::Product:
      return "Product";
    case Family::CayleyTable:
      return "CayleyTable";
  }
  return "?";
}

////////////////////////////////////////////////////////////////////////
// Element
////////////////////////////////////////////////////////////////////////

bool nf::Pair::operator==(Pair const& other) const {
  return parts == other.parts;
}

Element Element::cyclic(std::int64_t residue) {
  return Element(nf::Cyclic{residue});
}

Element Element::vector(std::vector<Integer> coords) {
  return Element(nf::Vector{std::move(coords)});
}

Element Element::dihedral(Integer rotation, bool reflection) {
  return Element(nf::Dihedral{std::move(rotation), reflection});
}

Element Element::heisenberg(Integer i, Integer j, Integer l) {
  return Element(nf::Heisenberg{std::move(i), std::move(j), std::move(l)});
}

namespace {
  void append_reduced(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
}  // namespace

Element Element::free_word(std::vector<int> const& letters) {
  std::vector<int> reduced;
  reduced.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) {
      throw DomainError("free-group letter 0 is not a generator");
    }
    append_reduced(reduced, x);
  }
  return Element(nf::FreeWord{std::move(reduced)});
}

Element Element::pair(Element left, Element right) {
  nf::Pair p;
  p.parts.reserve(2);
  p.parts.push_back(std::move(left));
  p.parts.push_back(std::move(right));
  return Element(std::move(p));
}

Element Element::table(std::size_t index) {
  return Element(nf::TableIndex{index});
}

std::size_t Element::hash() const noexcept {
  std::size_t seed = value_.index();
  std::visit(
      [&seed](auto const& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, nf::Cyclic>) {
          hash_combine(seed, std::hash<std::int64_t>{}(v.residue));
        } else if constexpr (std::is_same_v<T, nf::Vector>) {
          for (auto const& c : v.coords) {
            hash_combine(seed, hash_integer(c));
          }
        } else if constexpr (std::is_same_v<T, nf::Dihedral>) {
          hash_combine(seed, hash_integer(v.rotation));
          hash_combine(seed, v.reflection ? 1 : 0);
        } else if constexpr (std::is_same_v<T, nf::Heisenberg>) {
          hash_combine(seed, hash_integer(v.i));
          hash_combine(seed, hash_integer(v.j));
          hash_combine(seed, hash_integer(v.l));
        } else if constexpr (std::is_same_v<T, nf::FreeWord>) {
          for (int x : v.letters) {
            hash_combine(seed, std::hash<int>{}(x));
          }
        } else if constexpr (std::is_same_v<T, nf::Pair>) {
          for (auto const& part : v.parts) {
            hash_combine(seed, part.hash());
          }
        } else {
          hash_combine(seed, v.index);
        }
      },
      value_);
  return seed;
}

std::size_t Element::footprint() const noexcept {
  std::size_t bytes = sizeof(Element);
  std::visit(
      [&bytes](auto const& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, nf::Vector>) {
          bytes += v.coords.size() * sizeof(Integer);
        } else if constexpr (std::is_same_v<T, nf::FreeWord>) {
          bytes += v.letters.size() * sizeof(int);
        } else if constexpr (std::is_same_v<T, nf::Pair>) {
          for (auto const& part : v.parts) {
            bytes += part.footprint();
          }
        }
      },
      value_);
  return bytes;
}

////////////////////////////////////////////////////////////////////////
// CayleyTable
////////////////////////////////////////////////////////////////////////

CayleyTable::CayleyTable(std::vector<std::string>              names,
                         std::vector<std::vector<std::size_t>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  std::size_t const m = names_.size();
  if (m == 0) {
    throw PreconditionError("Cayley table must have at least one element");
  }
  if (table_.size() != m) {
    throw PreconditionError("Cayley table must have one row per element");
  }
  for (auto const& row : table_) {
    if (row.size() != m) {
      throw PreconditionError("Cayley table rows must have one entry per element");
    }
    for (auto x : row) {
      if (x >= m) {
        throw PreconditionError("Cayley table entry out of range");
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) {
      throw PreconditionError("Cayley table index 0 is not the identity");
    }
  }
  inverse_.assign(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (table_[a][b] == 0 && table_[b][a] == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == m) {
      throw PreconditionError("Cayley table element '" + names_[a]
                              + "' has no two-sided inverse");
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw PreconditionError("Cayley table is not associative");
        }
      }
    }
  }
}

std::optional<std::size_t> CayleyTable::index_of(std::string const& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - names_.begin());
}

////////////////////////////////////////////////////////////////////////
// Group
////////////////////////////////////////////////////////////////////////

struct Group::Node {
  Family                             family;
  std::int64_t                       modulus = 0;
  std::size_t                        rank    = 0;
  std::optional<Group>               left = {};
  std::optional<Group>               right = {};
  std::shared_ptr<CayleyTable const> table = {};
};

Group Group::finite_cyclic(std::int64_t q) {
  if (q < 1) {
    throw PreconditionError("Z/q requires q >= 1");
  }
  return Group(std::make_shared<Node const>(Node{Family::FiniteCyclic, q}));
}

Group Group::int_vector(std::size_t d) {
  if (d < 1) {
    throw PreconditionError("Z^d requires d >= 1");
  }
  return Group(std::make_shared<Node const>(Node{Family::IntVector, 0, d}));
}

Group Group::dihedral(std::int64_t n) {
  if (n < 1) {
    throw PreconditionError("D_2n requires n >= 1");
  }
  return Group(std::make_shared<Node const>(Node{Family::DihedralFinite, n}));
}

Group Group::infinite_dihedral() {
  return Group(std::make_shared<Node const>(Node{Family::DihedralInfinite}));
}

Group Group::heisenberg() {
  return Group(std::make_shared<Node const>(Node{Family::Heisenberg}));
}

Group Group::free(std::size_t rank) {
  if (rank < 1) {
    throw PreconditionError("F_k requires k >= 1");
  }
  return Group(std::make_shared<Node const>(Node{Family::Free, 0, rank}));
}

Group Group::product(Group left, Group right) {
  Node node{Family::Product};
  node.left  = std::move(left);
  node.right = std::move(right);
  return Group(std::make_shared<Node const>(std::move(node)));
}

Group Group::cayley_table(CayleyTable table) {
  Node node{Family::CayleyTable};
  node.table = std::make_shared<CayleyTable const>(std::move(table));
  return Group(std::make_shared<Node const>(std::move(node)));
}

Family Group::family() const noexcept {
  return node_->family;
}

std::int64_t Group::modulus() const {
  if (family() != Family::FiniteCyclic && family() != Family::DihedralFinite) {
    throw DomainError("modulus is only defined for Z/q and D_2n");
  }
  return node_->modulus;
}

std::size_t Group::rank() const {
  if (family() != Family::IntVector && family() != Family::Free) {
    throw DomainError("rank is only defined for Z^d and F_k");
  }
  return node_->rank;
}

Group const& Group::left() const {
  if (family() != Family::Product) {
    throw DomainError("left factor requested from a non-product group");
  }
  return *node_->left;
}

Group const& Group::right() const {
  if (family() != Family::Product) {
    throw DomainError("right factor requested from a non-product group");
  }
  return *node_->right;
}

CayleyTable const& Group::table() const {
  if (family() != Family::CayleyTable) {
    throw DomainError("table requested from a non-table group");
  }
  return *node_->table;
}

bool Group::operator==(Group const& other) const {
  if (node_ == other.node_) {
    return true;
  }
  if (family() != other.family()) {
    return false;
  }
  switch (family()) {
    case Family::FiniteCyclic:
    case Family::DihedralFinite:
      return node_->modulus == other.node_->modulus;
    case Family::IntVector:
    case Family::Free:
      return node_->rank == other.node_->rank;
    case Family::DihedralInfinite:
    case Family::Heisenberg:
      return true;
    case Family::Product:
      return left() == other.left() && right() == other.right();
    case Family::CayleyTable:
      return table() == other.table();
  }
  return false;
}

std::string Group::name() const {
  switch (family()) {
    case Family::FiniteCyclic:
      return "Z/" + std::to_string(node_->modulus);
    case Family::IntVector:
      return node_->rank == 1 ? "Z" : "Z^" + std::to_string(node_->rank);
    case Family::DihedralFinite:
      return "D" + std::to_string(2 * node_->modulus);
    case Family::DihedralInfinite:
      return "Dinf";
    case Family::Heisenberg:
      return "H3";
    case Family::Free:
      return "F" + std::to_string(node_->rank);
    case Family::Product: {
      std::string r = right().name();
      if (right().family() == Family::Product) {
        r = "(" + r + ")";
      }
      return left().name() + " x " + r;
    }
    case Family::CayleyTable:
      return "table[" + std::to_string(table().size()) + "]";
  }
  return "?";
}

bool Group::is_finite() const {
  switch (family()) {
    case Family::FiniteCyclic:
    case Family::DihedralFinite:
    case Family::CayleyTable:
      return true;
    case Family::Product:
      return left().is_finite() && right().is_finite();
    default:
      return false;
  }
}

std::optional<std::uint64_t> Group::order() const {
  switch (family()) {
    case Family::FiniteCyclic:
      return static_cast<std::uint64_t>(node_->modulus);
    case Family::DihedralFinite:
      return static_cast<std::uint64_t>(2 * node_->modulus);
    case Family::CayleyTable:
      return table().size();
    case Family::Product: {
      auto a = left().order();
      auto b = right().order();
      if (!a || !b) {
        return std::nullopt;
      }
      return *a * *b;
    }
    default:
      return std::nullopt;
  }
}

bool Group::is_abelian() const {
  switch (family()) {
    case Family::FiniteCyclic:
    case Family::IntVector:
      return true;
    case Family::DihedralFinite:
      return node_->modulus <= 2;
    case Family::DihedralInfinite:
    case Family::Heisenberg:
      return false;
    case Family::Free:
      return node_->rank == 1;
    case Family::Product:
      return left().is_abelian() && right().is_abelian();
    case Family::CayleyTable: {
      auto const& t = table();
      for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = 0; b < t.size(); ++b) {
          if (t.mul(a, b) != t.mul(b, a)) {
            return false;
          }
        }
      }
      return true;
    }
  }
  return false;
}

Element Group::identity() const {
  switch (family()) {
    case Family::FiniteCyclic:
      return Element::cyclic(0);
    case Family::IntVector:
      return Element::vector(std::vector<Integer>(node_->rank, Integer(0)));
    case Family::DihedralFinite:
    case Family::DihedralInfinite:
      return Element::dihedral(0, false);
    case Family::Heisenberg:
      return Element::heisenberg(0, 0, 0);
    case Family::Free:
      return Element::free_word({});
    case Family::Product:
      return Element::pair(left().identity(), right().identity());
    case Family::CayleyTable:
      return Element::table(0);
  }
  throw DomainError("unknown family");
}

namespace {
  [[noreturn]] void mismatch(Group const& G) {
    throw DomainError("element does not belong to " + G.name());
  }

  std::int64_t add_mod(std::int64_t a, std::int64_t b, std::int64_t q) {
    // a, b in [0, q) and q < 2^62 keeps the sum in range.
    std::int64_t s = a + b;
    return s >= q ? s - q : s;
  }
}  // namespace

Element Group::mul(Element const& g, Element const& h) const {
  switch (family()) {
    case Family::FiniteCyclic: {
      auto const* a = std::get_if<nf::Cyclic>(&g.value());
      auto const* b = std::get_if<nf::Cyclic>(&h.value());
      if (!a || !b) {
        mismatch(*this);
      }
      return Element::cyclic(add_mod(a->residue, b->residue, node_->modulus));
    }
    case Family::IntVector: {
      auto const* a = std::get_if<nf::Vector>(&g.value());
      auto const* b = std::get_if<nf::Vector>(&h.value());
      if (!a || !b || a->coords.size() != node_->rank
          || b->coords.size() != node_->rank) {
        mismatch(*this);
      }
      std::vector<Integer> sum(node_->rank);
      for (std::size_t i = 0; i < node_->rank; ++i) {
        sum[i] = a->coords[i] + b->coords[i];
      }
      return Element::vector(std::move(sum));
    }
    case Family::DihedralFinite:
    case Family::DihedralInfinite: {
      auto const* a = std::get_if<nf::Dihedral>(&g.value());
      auto const* b = std::get_if<nf::Dihedral>(&h.value());
      if (!a || !b) {
        mismatch(*this);
      }
      // r^k s^e r^k' s^e' = r^(k + (-1)^e k') s^(e + e')
      Integer k = a->reflection ? Integer(a->rotation - b->rotation)
                                : Integer(a->rotation + b->rotation);
      if (family() == Family::DihedralFinite) {
        k = floor_mod(k, node_->modulus);
      }
      return Element::dihedral(std::move(k), a->reflection != b->reflection);
    }
    case Family::Heisenberg: {
      auto const* a = std::get_if<nf::Heisenberg>(&g.value());
      auto const* b = std::get_if<nf::Heisenberg>(&h.value());
      if (!a || !b) {
        mismatch(*this);
      }
      // (i,j,l)(i',j',l') = (i+i', j+j', l+l' - j*i')
      return Element::heisenberg(
          a->i + b->i, a->j + b->j, a->l + b->l - a->j * b->i);
    }
    case Family::Free: {
      auto const* a = std::get_if<nf::FreeWord>(&g.value());
      auto const* b = std::get_if<nf::FreeWord>(&h.value());
      if (!a || !b) {
        mismatch(*this);
      }
      std::size_t cancel = 0;
      std::size_t const na = a->letters.size(), nb = b->letters.size();
      while (cancel < na && cancel < nb
             && a->letters[na - 1 - cancel] == -b->letters[cancel]) {
        ++cancel;
      }
      nf::FreeWord w;
      w.letters.reserve(na + nb - 2 * cancel);
      w.letters.insert(
          w.letters.end(), a->letters.begin(), a->letters.end() - cancel);
      w.letters.insert(
          w.letters.end(), b->letters.begin() + cancel, b->letters.end());
      return Element(std::move(w));
    }
    case Family::Product: {
      auto const* a = std::get_if<nf::Pair>(&g.value());
      auto const* b = std::get_if<nf::Pair>(&h.value());
      if (!a || !b) {
        mismatch(*this);
      }
      return Element::pair(left().mul(a->parts[0], b->parts[0]),
                           right().mul(a->parts[1], b->parts[1]));
    }
    case Family::CayleyTable: {
      auto const* a = std::get_if<nf::TableIndex>(&g.value());
      auto const* b = std::get_if<nf::TableIndex>(&h.value());
      auto const& t = table();
      if (!a || !b || a->index >= t.size() || b->index >= t.size()) {
        mismatch(*this);
      }
      return Element::table(t.mul(a->index, b->index));
    }
  }
  mismatch(*this);
}

Element Group::inv(Element const& g) const {
  switch (family()) {
    case Family::FiniteCyclic: {
      auto const* a = std::get_if<nf::Cyclic>(&g.value());
      if (!a) {
        mismatch(*this);
      }
      return Element::cyclic(a->residue == 0 ? 0 : node_->modulus - a->residue);
    }
    case Family::IntVector: {
      auto const* a = std::get_if<nf::Vector>(&g.value());
      if (!a || a->coords.size() != node_->rank) {
        mismatch(*this);
      }
      std::vector<Integer> neg(a->coords.size());
      for (std::size_t i = 0; i < neg.size(); ++i) {
        neg[i] = -a->coords[i];
      }
      return Element::vector(std::move(neg));
    }
    case Family::DihedralFinite:
    case Family::DihedralInfinite: {
      auto const* a = std::get_if<nf::Dihedral>(&g.value());
      if (!a) {
        mismatch(*this);
      }
      if (a->reflection) {
        return g;
      }
      Integer k = -a->rotation;
      if (family() == Family::DihedralFinite) {
        k = floor_mod(k, node_->modulus);
      }
      return Element::dihedral(std::move(k), false);
    }
    case Family::Heisenberg: {
      auto const* a = std::get_if<nf::Heisenberg>(&g.value());
      if (!a) {
        mismatch(*this);
      }
      return Element::heisenberg(-a->i, -a->j, -a->l - a->i * a->j);
    }
    case Family::Free: {
      auto const* a = std::get_if<nf::FreeWord>(&g.value());
      if (!a) {
        mismatch(*this);
      }
      nf::FreeWord w;
      w.letters.assign(a->letters.rbegin(), a->letters.rend());
      for (int& x : w.letters) {
        x = -x;
      }
      return Element(std::move(w));
    }
    case Family::Product: {
      auto const* a = std::get_if<nf::Pair>(&g.value());
      if (!a) {
        mismatch(*this);
      }
      return Element::pair(left().inv(a->parts[0]), right().inv(a->parts[1]));
    }
    case Family::CayleyTable: {
      auto const* a = std::get_if<nf::TableIndex>(&g.value());
      if (!a || a->index >= table().size()) {
        mismatch(*this);
      }
      return Element::table(table().inverse(a->index));
    }
  }
  mismatch(*this);
}

Element Group::power(Element const& g, Integer n) const {
  Element base = n < 0 ? inv(g) : g;
  if (n < 0) {
    n = -n;
  }
  Element result = identity();
  while (n > 0) {
    if ((n & 1) != 0) {
      result = mul(result, base);
    }
    n >>= 1;
    if (n > 0) {
      base = mul(base, base);
    }
  }
  return result;
}

Element Group::commutator(Element const& g, Element const& h) const {
  return mul(mul(g, h), mul(inv(g), inv(h)));
}

namespace {
  std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / std::gcd(a, b) * b;
  }
}  // namespace

ElementOrder Group::element_order(Element const& g, std::uint64_t cap) const {
  if (cap < 1) {
    throw PreconditionError("element_order requires cap >= 1");
  }
  require(g);
  auto within = [cap](std::uint64_t n) {
    return n <= cap ? ElementOrder::finite(n) : ElementOrder::cap_exceeded();
  };
  switch (family()) {
    case Family::FiniteCyclic: {
      auto r = static_cast<std::uint64_t>(g.as<nf::Cyclic>().residue);
      auto q = static_cast<std::uint64_t>(node_->modulus);
      return within(q / std::gcd(r, q));
    }
    case Family::DihedralFinite: {
      auto const& d = g.as<nf::Dihedral>();
      if (d.reflection) {
        return within(2);
      }
      auto r = d.rotation.convert_to<std::uint64_t>();
      auto n = static_cast<std::uint64_t>(node_->modulus);
      return within(n / std::gcd(r, n));
    }
    case Family::DihedralInfinite: {
      auto const& d = g.as<nf::Dihedral>();
      if (d.reflection) {
        return within(2);
      }
      return d.rotation == 0 ? within(1) : ElementOrder::infinite();
    }
    case Family::IntVector:
    case Family::Heisenberg:
    case Family::Free:
      // Torsion-free families.
      return g == identity() ? within(1) : ElementOrder::infinite();
    case Family::Product: {
      auto a = left().element_order(g.left(), cap);
      auto b = right().element_order(g.right(), cap);
      if (a.kind == ElementOrder::Kind::Infinite
          || b.kind == ElementOrder::Kind::Infinite) {
        return ElementOrder::infinite();
      }
      if (!a.is_finite() || !b.is_finite()) {
        return ElementOrder::cap_exceeded();
      }
      return within(lcm_u64(a.value, b.value));
    }
    case Family::CayleyTable: {
      Element x = g;
      for (std::uint64_t n = 1; n <= cap; ++n) {
        if (x == identity()) {
          return ElementOrder::finite(n);
        }
        x = mul(x, g);
      }
      return ElementOrder::cap_exceeded();
    }
  }
  return ElementOrder::cap_exceeded();
}

std::vector<Element> Group::enumerate() const {
  if (!is_finite()) {
    throw UnsupportedError("cannot enumerate the infinite group " + name());
  }
  std::vector<Element> out;
  switch (family()) {
    case Family::FiniteCyclic:
      for (std::int64_t r = 0; r < node_->modulus; ++r) {
        out.push_back(Element::cyclic(r));
      }
      break;
    case Family::DihedralFinite:
      for (int e = 0; e < 2; ++e) {
        for (std::int64_t k = 0; k < node_->modulus; ++k) {
          out.push_back(Element::dihedral(k, e == 1));
        }
      }
      break;
    case Family::CayleyTable:
      for (std::size_t i = 0; i < table().size(); ++i) {
        out.push_back(Element::table(i));
      }
      break;
    case Family::Product: {
      auto a = left().enumerate();
      auto b = right().enumerate();
      out.reserve(a.size() * b.size());
      for (auto const& x : a) {
        for (auto const& y : b) {
          out.push_back(Element::pair(x, y));
        }
      }
      break;
    }
    default:
      break;
  }
  return out;
}

bool Group::contains(Element const& g) const {
  switch (family()) {
    case Family::FiniteCyclic: {
      auto const* a = std::get_if<nf::Cyclic>(&g.value());
      return a && a->residue >= 0 && a->residue < node_->modulus;
    }
    case Family::IntVector: {
      auto const* a = std::get_if<nf::Vector>(&g.value());
      return a && a->coords.size() == node_->rank;
    }
    case Family::DihedralFinite: {
      auto const* a = std::get_if<nf::Dihedral>(&g.value());
      return a && a->rotation >= 0 && a->rotation < node_->modulus;
    }
    case Family::DihedralInfinite:
      return g.holds<nf::Dihedral>();
    case Family::Heisenberg:
      return g.holds<nf::Heisenberg>();
    case Family::Free: {
      auto const* a = std::get_if<nf::FreeWord>(&g.value());
      if (!a) {
        return false;
      }
      auto const k = static_cast<int>(node_->rank);
      for (std::size_t i = 0; i < a->letters.size(); ++i) {
        int x = a->letters[i];
        if (x == 0 || x > k || x < -k) {
          return false;
        }
        if (i > 0 && a->letters[i - 1] == -x) {
          return false;
        }
      }
      return true;
    }
    case Family::Product: {
      auto const* a = std::get_if<nf::Pair>(&g.value());
      return a && a->parts.size() == 2 && left().contains(a->parts[0])
             && right().contains(a->parts[1]);
    }
    case Family::CayleyTable: {
      auto const* a = std::get_if<nf::TableIndex>(&g.value());
      return a && a->index < table().size();
    }
  }
  return false;
}

void Group::require(Element const& g) const {
  if (!contains(g)) {
    mismatch(*this);
  }
}

}  // namespace wordbound
