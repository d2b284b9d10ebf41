// Symmetric generating sets, generation decisions and quotient maps.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wordbound/group.hpp"
#include "wordbound/smith.hpp"

namespace wordbound {

/// A word is a sequence of symbol ids into a GenSet alphabet.
using Word = std::vector<std::size_t>;

/// Symmetric generating set: a formal alphabet closed under inversion.
///
/// Letters carry pairwise distinct, non-identity elements. Symbol ids are
/// the positions in `letters()`. An involution letter is its own formal
/// inverse.
class GenSet {
 public:
  GenSet(Group group, std::vector<Element> letters);

  Group const& group() const noexcept {
    return group_;
  }
  std::size_t size() const noexcept {
    return letters_.size();
  }
  /// Number of distinct group elements carried by the letters.
  std::size_t cardinality() const noexcept {
    return letters_.size();
  }
  std::vector<Element> const& letters() const noexcept {
    return letters_;
  }
  Element const& letter(std::size_t id) const {
    return letters_.at(id);
  }
  std::size_t inverse_of(std::size_t id) const {
    return inverse_.at(id);
  }
  bool is_involution(std::size_t id) const {
    return inverse_of(id) == id;
  }
  std::optional<std::size_t> find(Element const& g) const;

  /// Product of the letters of `w`; throws DomainError on unknown ids.
  Element evaluate(Word const& w) const;
  /// Formal inverse word: reversed, each letter replaced by its inverse.
  Word inverse_word(Word const& w) const;

  bool operator==(GenSet const& other) const {
    return group_ == other.group_ && letters_ == other.letters_;
  }

 private:
  Group                                               group_;
  std::vector<Element>                                letters_;
  std::vector<std::size_t>                            inverse_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

/// Each element followed by its inverse; identity dropped, duplicates merged.
GenSet make_symmetric(Group const& group, std::span<Element const> elements);

/// Generators of the usual presentation of each family (e.g. a, b for H3).
GenSet standard_genset(Group const& group);

////////////////////////////////////////////////////////////////////////
// Generation decision
////////////////////////////////////////////////////////////////////////

enum class Generation { Yes, No, Inconclusive };

std::string to_string(Generation g);

struct GenerationCertificate {
  Generation  status = Generation::Inconclusive;
  std::string method;
  std::string details;
  // Lattice checks: columns span the (flattened) abelian target iff all
  // invariant factors of `lattice` are 1.
  std::optional<IntMatrix> lattice;
  std::optional<SmithForm> smith;
  // Each word evaluates to the paired element.
  std::vector<std::pair<Element, Word>> witnesses;
  std::uint64_t                         closure_size = 0;
};

/// Family-specific decision whether `s` generates its group.
///
/// `budget` bounds word searches (Heisenberg fallback, free-group witness
/// search); must be positive. `supplied` words are used as free-group
/// witnesses before any search.
GenerationCertificate generates(GenSet const& s, std::int64_t budget,
                                std::vector<Word> const& supplied = {});

/// Re-validates a Yes certificate from scratch.
bool verify_certificate(GenSet const& s, GenerationCertificate const& cert);

/// Whether the columns of `vectors` together with the torsion relations
/// generate Z^free x Z/q_1 x ... (coordinates: free ones first as given).
/// `moduli[i] == 0` marks a free coordinate.
bool lattice_generates(IntMatrix const& vectors,
                       std::vector<Integer> const& moduli,
                       SmithForm* form = nullptr);

////////////////////////////////////////////////////////////////////////
// Quotient maps
////////////////////////////////////////////////////////////////////////

class QuotientMap {
 public:
  enum class Rule { ProjectLeft, ProjectRight, ReduceMod, Abelianize, DihedralReduce };

  /// Product(A, B) -> A.
  static QuotientMap project_left(Group const& product);
  /// Product(A, B) -> B.
  static QuotientMap project_right(Group const& product);
  /// Z -> Z/q.
  static QuotientMap reduce_mod(std::int64_t q);
  /// H3 -> Z^2, a^i b^j c^l -> (i, j).
  static QuotientMap abelianize();
  /// Dinf -> D_2n, t -> r.
  static QuotientMap dihedral_reduce(std::int64_t n);

  Rule rule() const noexcept {
    return rule_;
  }
  Group const& source() const noexcept {
    return source_;
  }
  Group const& target() const noexcept {
    return target_;
  }

  Element apply(Element const& g) const;

 private:
  QuotientMap(Rule rule, Group source, Group target)
      : rule_(rule), source_(std::move(source)), target_(std::move(target)) {}

  Rule  rule_;
  Group source_;
  Group target_;
};

/// Symmetrized nontrivial images of the letters of `s`.
GenSet project_genset(QuotientMap const& pi, GenSet const& s);

}  // namespace wordbound
