#include <doctest.h>

#include <array>
#include <cstdlib>
#include <map>
#include <random>

#include "wordbound/errors.hpp"
#include "wordbound/metric.hpp"

using namespace wordbound;

namespace {

Element vec(std::vector<Integer> v) {
  return Element::vector(std::move(v));
}

// Word lengths in H3 over {a, b}^±1 by plain BFS on integer triples with
// the multiplication written out here.
using Triple = std::array<long long, 3>;

std::map<Triple, int> heisenberg_oracle(int radius) {
  std::array<Triple, 4> gens{Triple{1, 0, 0}, Triple{-1, 0, 0}, Triple{0, 1, 0},
                             Triple{0, -1, 0}};
  std::map<Triple, int> dist{{Triple{0, 0, 0}, 0}};
  std::vector<Triple>   frontier{Triple{0, 0, 0}};
  for (int r = 1; r <= radius; ++r) {
    std::vector<Triple> next;
    for (auto const& x : frontier)
      for (auto const& s : gens) {
        Triple y{x[0] + s[0], x[1] + s[1], x[2] + s[2] - x[1] * s[0]};
        if (dist.emplace(y, r).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return dist;
}

void check_witness(GenSet const& s, LengthCert const& c) {
  REQUIRE(c.found());
  CHECK(c.witness.size() == *c.length);
  CHECK(s.evaluate(c.witness) == c.element);
}

}  // namespace

TEST_CASE("closed forms on Z^d and Z/q") {
  auto s = standard_genset(Group::int_vector(3));
  for (long long x = -3; x <= 3; ++x)
    for (long long y = -2; y <= 2; ++y) {
      Element g = vec({x, y, 1});
      auto    c = word_length(s, g, 20);
      CHECK(*c.length == std::size_t(std::abs(x) + std::abs(y) + 1));
      check_witness(s, c);
    }
  auto z12 = standard_genset(Group::finite_cyclic(12));
  for (int k = 0; k < 12; ++k)
    CHECK(*word_length(z12, Element::cyclic(k), 12).length == std::size_t(std::min(k, 12 - k)));

  // Triangular lattice generators (1,0), (0,1), (1,1).
  Group z2 = Group::int_vector(2);
  std::vector<Element> xs{vec({1, 0}), vec({0, 1}), vec({1, 1})};
  auto t = make_symmetric(z2, xs);
  for (long long x = -5; x <= 5; ++x)
    for (long long y = -5; y <= 5; ++y) {
      std::size_t expect = (x >= 0) == (y >= 0) ? std::max(std::abs(x), std::abs(y))
                                                : std::abs(x) + std::abs(y);
      CHECK(*word_length(t, vec({x, y}), 12).length == expect);
    }
}

TEST_CASE("Heisenberg balls match an independent BFS") {
  auto s      = standard_genset(Group::heisenberg());
  auto oracle = heisenberg_oracle(7);
  Ball b(s, 7);
  CHECK(b.size() == oracle.size());
  std::vector<std::size_t> spheres(8, 0);
  for (auto const& [t, r] : oracle) {
    ++spheres[r];
    CHECK(b.length(Element::heisenberg(t[0], t[1], t[2])) == std::size_t(r));
  }
  CHECK(b.sphere_sizes() == spheres);
  CHECK(b.length(Element::heisenberg(0, 0, 1)) == 4u);
  CHECK(*b.elements().front() == Element::heisenberg(0, 0, 0));
  for (auto const* x : b.elements()) CHECK(s.evaluate(b.geodesic(*x)) == *x);
}

TEST_CASE("bidirectional search agrees with one-sided search") {
  std::mt19937_64 rng(17);
  SearchOptions   uni{default_memory_limit(), SearchMode::Unidirectional};
  SearchOptions   bi{default_memory_limit(), SearchMode::Bidirectional};

  Group h = Group::heisenberg();
  std::vector<Element> hs{Element::heisenberg(1, 1, 0), Element::heisenberg(0, 1, 0),
                          Element::heisenberg(2, 3, 1)};
  auto sh = make_symmetric(h, hs);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int n = 0; n < 40; ++n) {
    Element g = Element::heisenberg(d(rng), d(rng), 2 * d(rng));
    auto    a = word_length(sh, g, 9, uni);
    auto    b = word_length(sh, g, 9, bi);
    CHECK(a.length == b.length);
    CHECK(b.bidirectional);
    if (b.found()) check_witness(sh, b);
  }

  Group f2 = Group::free(2);
  auto  sf = standard_genset(f2);
  for (auto const& w : std::vector<std::vector<int>>{{1, 2, -1, -1, 2}, {2, 2, 2}, {}, {-1}}) {
    auto b = word_length(sf, Element::free_word(w), 10, bi);
    CHECK(*b.length == w.size());
    check_witness(sf, b);
  }

  Group dinf = Group::infinite_dihedral();
  auto  sd   = standard_genset(dinf);
  for (long long k = -6; k <= 6; ++k)
    for (bool e : {false, true}) {
      auto    g = Element::dihedral(k, e);
      auto    b = word_length(sd, g, 15, bi);
      std::size_t expect = std::size_t(std::abs(k)) + (e ? 1 : 0);
      CHECK(*b.length == expect);
      check_witness(sd, b);
    }
}

TEST_CASE("cap, unreachable targets and determinism") {
  auto s = standard_genset(Group::int_vector(2));
  auto c = word_length(s, vec({4, 4}), 7);
  CHECK_FALSE(c.found());
  CHECK(c.cap == 7);
  CHECK(*word_length(s, vec({4, 4}), 8).length == 8);
  CHECK(word_length(s, vec({1, 1}), 3).witness == Word{2, 0});
  CHECK(Ball(s, 2).geodesic(vec({1, 1})) == Word{2, 0});

  // Subgroup 2Z inside Z: odd targets are never reached.
  auto two = make_symmetric(Group::integers(), std::vector<Element>{vec({2})});
  CHECK_FALSE(word_length(two, vec({3}), 20).found());
  SearchOptions bi{default_memory_limit(), SearchMode::Bidirectional};
  CHECK_FALSE(word_length(two, vec({3}), 20, bi).found());
  CHECK_THROWS_AS(word_length(s, Element::cyclic(1), 3), DomainError);
  CHECK_THROWS_AS(Ball(s, 1).geodesic(vec({5, 5})), DomainError);
}

TEST_CASE("exhaustion and sphere sizes") {
  auto z5 = standard_genset(Group::finite_cyclic(5));
  CHECK_FALSE(Ball(z5, 1).exhausted());
  CHECK(Ball(z5, 2).exhausted());
  Ball big(z5, 6);
  CHECK(big.exhausted());
  CHECK(big.size() == 5);
  CHECK(big.sphere_sizes() == std::vector<std::size_t>{1, 2, 2, 0, 0, 0, 0});
}

TEST_CASE("memory budget raises a resource error with partial radius") {
  auto          s = standard_genset(Group::int_vector(3));
  SearchOptions tight{20'000, SearchMode::Unidirectional};
  try {
    Ball b(s, 50, tight);
    FAIL("expected a resource error");
  } catch (ResourceError const& e) {
    CHECK(e.partial_radius() >= 1);
    CHECK(e.partial_radius() < 50);
  }
}

TEST_CASE("length profile keeps order") {
  Group z = Group::integers();
  std::vector<std::pair<std::string, GenSet>> family;
  family.emplace_back("std", standard_genset(z));
  family.emplace_back("2,3", make_symmetric(z, std::vector<Element>{vec({2}), vec({3})}));
  auto out = length_profile(family, vec({7}), 10);
  REQUIRE(out.size() == 2);
  CHECK(out[0].first == "std");
  CHECK(*out[0].second.length == 7);
  CHECK(*out[1].second.length == 3);
}

TEST_CASE("small balls and lengths in Z") {
  CHECK(Ball(standard_genset(Group::integers()), 3).size() == 7);
  CHECK(Ball(standard_genset(Group::int_vector(2)), 2).size() == 13);
  Group z = Group::integers();
  std::vector<std::pair<std::string, GenSet>> family;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 5}, {5, 7}})
    family.emplace_back(std::to_string(p) + "," + std::to_string(q),
                        make_symmetric(z, std::vector<Element>{vec({p}), vec({q})}));
  auto out = length_profile(family, vec({1}), 12);
  CHECK(*out[0].second.length == 2);
  CHECK(*out[1].second.length == 3);
  CHECK(*out[2].second.length == 5);
  CHECK(*word_length(family[0].second, vec({1}), 5).length == 2);
}

TEST_CASE("bidirectional agreement on a thousand random instances") {
  std::mt19937_64                    rng(29);
  std::uniform_int_distribution<int> d(-4, 4), pick(0, 3);
  SearchOptions uni{default_memory_limit(), SearchMode::Unidirectional};
  SearchOptions bi{default_memory_limit(), SearchMode::Bidirectional};
  std::vector<GenSet> sets{
      standard_genset(Group::heisenberg()),
      make_symmetric(Group::int_vector(2), std::vector<Element>{vec({2, 1}), vec({1, 3})}),
      standard_genset(Group::infinite_dihedral()),
      make_symmetric(Group::product(Group::integers(), Group::finite_cyclic(3)),
                     std::vector<Element>{Element::pair(vec({2}), Element::cyclic(1)),
                                          Element::pair(vec({3}), Element::cyclic(0))})};
  for (int n = 0; n < 1000; ++n) {
    auto const& s = sets[pick(rng)];
    // Random element: a random word of length <= 7.
    Element g = s.group().identity();
    int     len = 1 + std::abs(d(rng)) + std::abs(d(rng)) / 2;
    std::uniform_int_distribution<std::size_t> letter(0, s.size() - 1);
    for (int k = 0; k < len; ++k) g = s.group().mul(g, s.letter(letter(rng)));
    auto a = word_length(s, g, 7, uni);
    auto b = word_length(s, g, 7, bi);
    CHECK(a.length == b.length);
    if (b.found()) check_witness(s, b);
  }
}

TEST_CASE("punctured ball is at most n^r") {
  std::vector<GenSet> sets{standard_genset(Group::heisenberg()),
                           standard_genset(Group::free(2)),
                           standard_genset(Group::dihedral(4)),
                           standard_genset(Group::finite_cyclic(7))};
  for (auto const& s : sets) {
    Ball        b(s, 6);
    std::size_t inside = 1, bound = 1;
    for (std::size_t r = 1; r <= 6; ++r) {
      inside += b.sphere_sizes()[r];
      bound *= s.cardinality();
      CHECK(inside - 1 <= bound);
    }
  }
}
