// Girth of Cayley graphs and powers of cyclically reduced words as loops.
//
// Words are over the formal alphabet of a GenSet. An involution letter is
// its own inverse, so s*s counts as backtracking.

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "wordbound/genset.hpp"
#include "wordbound/metric.hpp"

namespace wordbound {

/// Free reduction followed by stripping inverse (first, last) pairs.
Word cyclic_reduce(GenSet const& s, Word const& w);

bool is_cyclically_reduced(GenSet const& s, Word const& w);

/// Whether the path of `w` from the identity returns there and visits
/// pairwise distinct vertices before that.
bool is_simple_loop(GenSet const& s, Word const& w);

struct GirthResult {
  std::optional<std::size_t> value;  // nullopt: greater than cap
  std::size_t                cap = 0;
  Word                       witness;

  bool exceeds_cap() const noexcept {
    return !value.has_value();
  }
  /// "5" or "> 12".
  std::string str() const;
};

/// Shortest nonempty cyclically reduced relation of length <= cap.
///
/// Uses one breadth-first search from the identity up to radius
/// ceil(cap / 2) (Cayley graphs are vertex transitive) and scans non-tree
/// edges level by level. `s` is assumed to generate its group; for a
/// proper subgroup the answer is the girth of the subgroup's graph.
GirthResult girth(GenSet const& s, std::size_t cap, SearchOptions const& options = {});

/// Reference implementation: iterative deepening over words without
/// immediate or cyclic backtracking. Exponential; small caps only.
GirthResult girth_by_deepening(GenSet const& s, std::size_t cap);

struct LoopVerdict {
  bool        simple = false;
  std::size_t length = 0;  // n * |w'| when simple
  std::size_t order  = 0;  // n
  Word        reduced;     // w'
  std::string reason;      // why the walk is not a simple loop

  static constexpr std::uint64_t order_cap = 1'000'000;
};

/// Walks the cyclic reduction w' of `w` repeated ord(g) times and checks
/// that it is a simple loop at the identity. Throws DomainError if `w`
/// does not evaluate to `g`, PreconditionError if g has infinite order
/// (or order beyond LoopVerdict::order_cap).
LoopVerdict simple_loop_check(GenSet const& s, Element const& g, Word const& w);

}  // namespace wordbound
