// Exhaustive computations on small finite groups: automorphism groups,
// automorphism orbits, and the exact supremum of word length over all
// symmetric generating sets. Also conjugacy-orbit growth over balls.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wordbound/genset.hpp"
#include "wordbound/metric.hpp"

namespace wordbound {

/// A finite group with its elements numbered in enumeration order and a
/// full multiplication table.
class IndexedGroup {
 public:
  explicit IndexedGroup(Group g);

  Group const& group() const noexcept {
    return group_;
  }
  std::size_t size() const noexcept {
    return elements_.size();
  }
  Element const& element(std::size_t i) const {
    return elements_.at(i);
  }
  std::size_t index(Element const& x) const;
  std::size_t mul(std::size_t a, std::size_t b) const {
    return table_[a * size() + b];
  }
  std::size_t inverse(std::size_t a) const {
    return inverse_[a];
  }
  std::size_t order_of(std::size_t a) const;

 private:
  Group                                                 group_;
  std::vector<Element>                                  elements_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  std::vector<std::size_t>                              table_;
  std::vector<std::size_t>                              inverse_;
};

/// Bijection of a finite group given as images of element indices.
class Automorphism {
 public:
  /// Throws PreconditionError unless `images` is a multiplicative bijection.
  Automorphism(IndexedGroup const& g, std::vector<std::size_t> images);

  std::vector<std::size_t> const& images() const noexcept {
    return images_;
  }
  std::size_t apply(std::size_t i) const {
    return images_.at(i);
  }
  Element apply(IndexedGroup const& g, Element const& x) const {
    return g.element(images_.at(g.index(x)));
  }

  bool operator==(Automorphism const&) const = default;
  auto operator<=>(Automorphism const& o) const {
    return images_ <=> o.images_;
  }

 private:
  std::vector<std::size_t> images_;
};

/// Whether `images` preserves the product on every pair and is a bijection.
bool is_automorphism(IndexedGroup const& g, std::vector<std::size_t> const& images);

enum class AutMethod { Auto, BijectionFilter, GeneratorImages };

inline constexpr std::size_t bijection_filter_cap = 10;
inline constexpr std::size_t generator_images_cap  = 24;

/// Every automorphism, sorted by image vector. Auto picks the bijection
/// filter up to order 10 and the generator-image search up to order 24.
/// Throws ResourceError beyond the method's cap.
std::vector<Automorphism> aut_group(IndexedGroup const& g, AutMethod method = AutMethod::Auto);

/// Distinct images of element `i`, in increasing index order.
std::vector<std::size_t> aut_orbit(std::vector<Automorphism> const& auts, std::size_t i);

////////////////////////////////////////////////////////////////////////
// Exact uniform length
////////////////////////////////////////////////////////////////////////

inline constexpr std::size_t uniform_length_cap = 16;

struct UniformLength {
  std::size_t max_length = 0;
  GenSet      argmax;
  std::size_t generating_sets = 0;  // symmetric generating subsets examined
};

/// Maximum of l_S(g) over every symmetric generating subset S of G \ {e}.
///
/// Subsets are unions of inverse classes {x, x^-1}; classes are ordered by
/// the enumeration index of their first element and subsets by ascending
/// bitmask, so `argmax` is the first subset attaining the maximum.
UniformLength uniform_length_exact(IndexedGroup const& g, Element const& x,
                                   std::size_t cap = uniform_length_cap);

/// All symmetric generating sets of G, in the order above.
std::vector<GenSet> all_generating_sets(IndexedGroup const& g,
                                        std::size_t cap = uniform_length_cap);

struct OrbitBoundCheck {
  std::vector<std::size_t> orbit;
  std::size_t              bound_m = 0;  // max of l_S(g) over all S
  std::size_t              sets_checked = 0;
  std::vector<std::string> failures;

  bool pass() const noexcept {
    return failures.empty();
  }
};

/// For every generating set S: orbit ⊆ B_S(M) and |orbit| <= |S|^M, where M
/// is the uniform length of g.
OrbitBoundCheck aut_orbit_bound_check(IndexedGroup const& g, Element const& x,
                                      std::vector<Automorphism> const& auts);

////////////////////////////////////////////////////////////////////////
// Conjugacy orbits
////////////////////////////////////////////////////////////////////////

/// For r = 1..radius, the number of distinct x g x^-1 over x in B(r) of the
/// standard generating set.
std::vector<std::pair<std::size_t, std::size_t>> conjugacy_orbit_growth(
    Group const& group, Element const& g, std::size_t radius,
    SearchOptions const& options = {});

}  // namespace wordbound
