#include "wordbound/finite.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace wordbound {

IndexedGroup::IndexedGroup(Group g) : group_(std::move(g)) {
  if (!group_.is_finite()) {
    throw PreconditionError("indexed groups must be finite");
  }
  elements_ = group_.enumerate();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
  }
  std::size_t const n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table_[a * n + b] = index_.at(group_.mul(elements_[a], elements_[b]));
    }
    inverse_[a] = index_.at(group_.inv(elements_[a]));
  }
}

std::size_t IndexedGroup::index(Element const& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) {
    throw DomainError("element does not belong to the indexed group");
  }
  return it->second;
}

std::size_t IndexedGroup::order_of(std::size_t a) const {
  std::size_t const e = index(group_.identity());
  std::size_t       x = a;
  std::size_t       k = 1;
  while (x != e) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool is_automorphism(IndexedGroup const& g, std::vector<std::size_t> const& images) {
  std::size_t const n = g.size();
  if (images.size() != n) {
    return false;
  }
  std::vector<bool> hit(n, false);
  for (auto y : images) {
    if (y >= n || hit[y]) {
      return false;
    }
    hit[y] = true;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (images[g.mul(a, b)] != g.mul(images[a], images[b])) {
        return false;
      }
    }
  }
  return true;
}

Automorphism::Automorphism(IndexedGroup const& g, std::vector<std::size_t> images)
    : images_(std::move(images)) {
  if (!is_automorphism(g, images_)) {
    throw PreconditionError("map is not a multiplicative bijection");
  }
}

namespace {

  std::vector<Automorphism> by_bijection_filter(IndexedGroup const& g) {
    std::size_t const        e = g.index(g.group().identity());
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i != e) {
        rest.push_back(i);
      }
    }
    std::vector<Automorphism> out;
    std::vector<std::size_t>  images(g.size());
    do {
      images[e] = e;
      for (std::size_t k = 0, i = 0; i < g.size(); ++i) {
        if (i != e) {
          images[i] = rest[k++];
        }
      }
      if (is_automorphism(g, images)) {
        out.emplace_back(g, images);
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
  }

  // Greedy generating tuple: elements in index order that enlarge the
  // generated subgroup.
  std::vector<std::size_t> generating_tuple(IndexedGroup const& g) {
    std::size_t const        e = g.index(g.group().identity());
    std::vector<bool>        in(g.size(), false);
    std::vector<std::size_t> members{e};
    in[e] = true;
    std::vector<std::size_t> gens;
    for (std::size_t x = 0; x < g.size() && members.size() < g.size(); ++x) {
      if (in[x]) {
        continue;
      }
      gens.push_back(x);
      for (std::size_t k = 0; k < members.size(); ++k) {
        for (auto s : gens) {
          std::size_t y = g.mul(members[k], s);
          if (!in[y]) {
            in[y] = true;
            members.push_back(y);
          }
        }
      }
    }
    return gens;
  }

  // Extends gens[i] -> imgs[i] along a breadth-first spanning tree; nullopt
  // when the extension is inconsistent or not a bijective homomorphism.
  std::optional<std::vector<std::size_t>> extend(IndexedGroup const&             g,
                                                 std::vector<std::size_t> const& gens,
                                                 std::vector<std::size_t> const& imgs) {
    std::size_t constexpr unset = SIZE_MAX;
    std::size_t const        e  = g.index(g.group().identity());
    std::vector<std::size_t> phi(g.size(), unset);
    phi[e] = e;
    std::vector<std::size_t> queue{e};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      std::size_t x = queue[k];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::size_t y  = g.mul(x, gens[i]);
        std::size_t fy = g.mul(phi[x], imgs[i]);
        if (phi[y] == unset) {
          phi[y] = fy;
          queue.push_back(y);
        } else if (phi[y] != fy) {
          return std::nullopt;
        }
      }
    }
    if (!is_automorphism(g, phi)) {
      return std::nullopt;
    }
    return phi;
  }

  std::vector<Automorphism> by_generator_images(IndexedGroup const& g) {
    auto const gens = generating_tuple(g);
    std::vector<std::vector<std::size_t>> candidates;
    for (auto x : gens) {
      std::vector<std::size_t> c;
      for (std::size_t y = 0; y < g.size(); ++y) {
        if (g.order_of(y) == g.order_of(x)) {
          c.push_back(y);
        }
      }
      candidates.push_back(std::move(c));
    }
    std::vector<Automorphism> out;
    std::vector<std::size_t>  pick(gens.size(), 0);
    std::vector<std::size_t>  imgs(gens.size());
    while (true) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        imgs[i] = candidates[i][pick[i]];
      }
      if (auto phi = extend(g, gens, imgs)) {
        out.emplace_back(g, std::move(*phi));
      }
      std::size_t i = 0;
      while (i < gens.size() && ++pick[i] == candidates[i].size()) {
        pick[i++] = 0;
      }
      if (i == gens.size()) {
        break;
      }
    }
    return out;
  }

}  // namespace

std::vector<Automorphism> aut_group(IndexedGroup const& g, AutMethod method) {
  if (method == AutMethod::Auto) {
    method = g.size() <= bijection_filter_cap ? AutMethod::BijectionFilter
                                              : AutMethod::GeneratorImages;
  }
  std::vector<Automorphism> out;
  if (method == AutMethod::BijectionFilter) {
    if (g.size() > bijection_filter_cap) {
      throw ResourceError("bijection filter is limited to groups of order "
                              + std::to_string(bijection_filter_cap),
                          0);
    }
    out = by_bijection_filter(g);
  } else {
    if (g.size() > generator_images_cap) {
      throw ResourceError("automorphism search is limited to groups of order "
                              + std::to_string(generator_images_cap),
                          0);
    }
    out = by_generator_images(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> aut_orbit(std::vector<Automorphism> const& auts, std::size_t i) {
  std::set<std::size_t> orbit;
  for (auto const& a : auts) {
    orbit.insert(a.apply(i));
  }
  return {orbit.begin(), orbit.end()};
}

////////////////////////////////////////////////////////////////////////
// Exact uniform length
////////////////////////////////////////////////////////////////////////

namespace {

  // Inverse classes, each listed by the enumeration index of its first member.
  std::vector<std::vector<std::size_t>> inverse_classes(IndexedGroup const& g) {
    std::size_t const                     e = g.index(g.group().identity());
    std::vector<bool>                     seen(g.size(), false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (x == e || seen[x]) {
        continue;
      }
      seen[x] = seen[g.inverse(x)] = true;
      classes.push_back(x == g.inverse(x) ? std::vector<std::size_t>{x}
                                          : std::vector<std::size_t>{x, g.inverse(x)});
    }
    return classes;
  }

  template <typename Visit>
  std::size_t for_each_generating_set(IndexedGroup const& g, std::size_t cap, Visit&& visit) {
    if (g.size() > cap) {
      throw ResourceError("exhaustive generating-set enumeration is limited to order "
                              + std::to_string(cap),
                          0);
    }
    auto const        classes = inverse_classes(g);
    std::size_t       count   = 0;
    std::uint64_t const total = std::uint64_t{1} << classes.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      std::vector<Element> letters;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (mask >> c & 1) {
          for (auto x : classes[c]) {
            letters.push_back(g.element(x));
          }
        }
      }
      GenSet s(g.group(), std::move(letters));
      Ball   b(s, g.size());
      if (b.size() != g.size()) {
        continue;
      }
      ++count;
      visit(s, b);
    }
    return count;
  }

}  // namespace

UniformLength uniform_length_exact(IndexedGroup const& g, Element const& x, std::size_t cap) {
  g.index(x);
  std::optional<UniformLength> best;
  std::size_t                  count = for_each_generating_set(g, cap, [&](GenSet const& s, Ball const& b) {
    std::size_t len = *b.length(x);
    if (!best || len > best->max_length) {
      best = UniformLength{len, s, 0};
    }
  });
  if (!best) {
    // Only the trivial group has no nonempty generating set.
    return UniformLength{0, GenSet(g.group(), {}), 0};
  }
  best->generating_sets = count;
  return *best;
}

std::vector<GenSet> all_generating_sets(IndexedGroup const& g, std::size_t cap) {
  std::vector<GenSet> out;
  for_each_generating_set(g, cap, [&](GenSet const& s, Ball const&) { out.push_back(s); });
  return out;
}

namespace {

  std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
      if (base != 0 && r > UINT64_MAX / base) {
        return UINT64_MAX;
      }
      r *= base;
    }
    return r;
  }

}  // namespace

OrbitBoundCheck aut_orbit_bound_check(IndexedGroup const& g, Element const& x,
                                      std::vector<Automorphism> const& auts) {
  OrbitBoundCheck out;
  out.orbit   = aut_orbit(auts, g.index(x));
  out.bound_m = uniform_length_exact(g, x).max_length;
  for (auto const& s : all_generating_sets(g)) {
    ++out.sets_checked;
    Ball b(s, out.bound_m);
    for (auto y : out.orbit) {
      if (!b.contains(g.element(y))) {
        out.failures.push_back("orbit element index " + std::to_string(y)
                               + " lies outside the radius-" + std::to_string(out.bound_m)
                               + " ball");
      }
    }
    if (out.orbit.size() > saturating_pow(s.cardinality(), out.bound_m)) {
      out.failures.push_back("orbit of size " + std::to_string(out.orbit.size()) + " exceeds "
                             + std::to_string(s.cardinality()) + "^"
                             + std::to_string(out.bound_m));
    }
  }
  return out;
}

////////////////////////////////////////////////////////////////////////
// Conjugacy orbits
////////////////////////////////////////////////////////////////////////

std::vector<std::pair<std::size_t, std::size_t>> conjugacy_orbit_growth(
    Group const& group, Element const& g, std::size_t radius, SearchOptions const& options) {
  group.require(g);
  Ball b(standard_genset(group), radius, options);
  std::unordered_set<Element, ElementHash>         conjugates;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t                                      next = 0;
  auto const&                                      elements = b.elements();
  for (std::size_t r = 0; r <= radius; ++r) {
    while (next < elements.size() && *b.length(*elements[next]) <= r) {
      Element const& x = *elements[next++];
      conjugates.insert(group.mul(group.mul(x, g), group.inv(x)));
    }
    if (r >= 1) {
      out.emplace_back(r, conjugates.size());
    }
  }
  return out;
}

}  // namespace wordbound
