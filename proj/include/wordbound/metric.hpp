// Word length and balls in implicit Cayley graphs.
//
// The Cayley graph of (G, S) has an edge g -> g*s for every letter s. All
// searches are breadth-first over hash sets of normal forms. Within a level,
// letters are tried in increasing symbol id (outer loop) and frontier
// elements in discovery order (inner loop), so the parent letter recorded
// for each element is the lowest symbol id that reaches it from the
// previous level, and geodesic witnesses are reproducible.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wordbound/genset.hpp"

namespace wordbound {

enum class SearchMode { Auto, Unidirectional, Bidirectional };

/// WORDBOUND_MEM_LIMIT (bytes) if set, otherwise 1 GiB.
std::size_t default_memory_limit();

struct SearchOptions {
  std::size_t memory_limit = default_memory_limit();
  SearchMode  mode         = SearchMode::Auto;
};

class Ball {
 public:
  static constexpr std::uint32_t no_parent = UINT32_MAX;

  struct Entry {
    std::uint32_t length;
    std::uint32_t parent;  // last letter of the recorded geodesic
  };

  Ball(GenSet genset, std::size_t radius, SearchOptions const& options = {});

  Ball(Ball const&)            = delete;
  Ball& operator=(Ball const&) = delete;
  Ball(Ball&&)                 = default;
  Ball& operator=(Ball&&)      = default;

  GenSet const& genset() const noexcept {
    return genset_;
  }
  /// Requested radius.
  std::size_t radius() const noexcept {
    return radius_;
  }
  /// True when the whole generated subgroup fit inside the radius.
  bool exhausted() const noexcept {
    return exhausted_;
  }
  std::size_t size() const noexcept {
    return order_.size();
  }

  std::optional<std::size_t> length(Element const& g) const;
  /// Recorded length and parent letter, or nullptr outside the ball.
  Entry const* entry(Element const& g) const {
    auto it = table_.find(g);
    return it == table_.end() ? nullptr : &it->second;
  }
  bool contains(Element const& g) const {
    return table_.count(g) != 0;
  }
  /// Geodesic from the identity; throws DomainError if g is outside.
  Word geodesic(Element const& g) const;

  /// Elements in breadth-first order (identity first).
  std::vector<Element const*> const& elements() const noexcept {
    return order_;
  }
  /// Number of elements at each distance 0..radius.
  std::vector<std::size_t> const& sphere_sizes() const noexcept {
    return spheres_;
  }

 private:
  GenSet                                             genset_;
  std::size_t                                        radius_;
  bool                                               exhausted_ = false;
  std::unordered_map<Element, Entry, ElementHash>    table_;
  std::vector<Element const*>                        order_;
  std::vector<std::size_t>                           spheres_;
};

inline Ball ball(GenSet const& s, std::size_t radius,
                 SearchOptions const& options = {}) {
  return Ball(s, radius, options);
}

struct LengthCert {
  Element                    element;
  std::optional<std::size_t> length;  // nullopt: not within the cap
  Word                       witness;
  std::size_t                cap      = 0;
  std::size_t                explored = 0;
  bool                       bidirectional = false;

  bool found() const noexcept {
    return length.has_value();
  }
};

/// Exact word length of g up to `cap` with a geodesic witness.
LengthCert word_length(GenSet const& s, Element const& g, std::size_t cap,
                       SearchOptions const& options = {});

/// word_length applied to each (label, genset) pair, order preserved.
std::vector<std::pair<std::string, LengthCert>> length_profile(
    std::vector<std::pair<std::string, GenSet>> const& family,
    Element const& g, std::size_t cap, SearchOptions const& options = {});

}  // namespace wordbound
