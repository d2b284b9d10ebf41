// Seeded property suites over word metrics, shared by the unit tests and the
// acceptance runner. Each suite returns its sample and failure counts.

#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "wordbound/genset.hpp"
#include "wordbound/metric.hpp"
#include "wordbound/notation.hpp"

namespace wordbound::testing {

struct PropertyResult {
  std::string name;
  std::size_t samples  = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(std::string what) {
    if (failures++ == 0) {
      first_failure = std::move(what);
    }
  }
};

struct BallCase {
  std::unique_ptr<Ball> ball;
  std::size_t           half = 0;  // elements with length <= half come first
};

inline std::vector<BallCase> property_balls() {
  struct Spec {
    char const* group;
    char const* genset;
    std::size_t radius;
  };
  Spec const specs[] = {
      {"Z^2", "[(1,0),(0,1)]", 8},         {"Z^2", "[(2,3),(1,2),(1,0)]", 6},
      {"Z x Z/5", "[(5,1),(6,0)]", 10},    {"H3", "[(1,0,0),(0,1,0)]", 8},
      {"H3", "[(2,0,0),(3,0,0),(0,1,0)]", 6}, {"D8", "[(1,0),(0,1)]", 4},
      {"Dinf", "[(0,1),(1,1)]", 12},       {"F2", "[x1,x2]", 6},
      {"Z x D8", "[(1,0,0),(0,1,0),(0,0,1)]", 6},
  };
  std::vector<BallCase> out;
  for (auto const& s : specs) {
    Group g = parse_group(s.group);
    auto  b = std::make_unique<Ball>(parse_genset(g, s.genset), s.radius);
    std::size_t half = 0;
    for (auto const* x : b->elements()) {
      if (*b->length(*x) * 2 <= s.radius) {
        ++half;
      }
    }
    out.push_back({std::move(b), half});
  }
  return out;
}

inline PropertyResult inverse_symmetry(std::vector<BallCase> const& balls, std::size_t samples,
                                       std::uint64_t seed) {
  PropertyResult  r{"inverse symmetry"};
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < samples; ++n, ++r.samples) {
    auto const&    c = balls[rng() % balls.size()];
    Group const&   G = c.ball->genset().group();
    Element const& x = *c.ball->elements()[rng() % c.ball->size()];
    auto           a = c.ball->length(x), b = c.ball->length(G.inv(x));
    if (!b || *a != *b) {
      r.fail(format_element(G, x) + " in " + format_group(G));
    }
  }
  return r;
}

inline PropertyResult subadditivity(std::vector<BallCase> const& balls, std::size_t samples,
                                    std::uint64_t seed) {
  PropertyResult  r{"subadditivity"};
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < samples; ++n, ++r.samples) {
    auto const&    c = balls[rng() % balls.size()];
    Group const&   G = c.ball->genset().group();
    Element const& x = *c.ball->elements()[rng() % c.half];
    Element const& y = *c.ball->elements()[rng() % c.half];
    auto           xy = c.ball->length(G.mul(x, y));
    if (!xy || *xy > *c.ball->length(x) + *c.ball->length(y)) {
      r.fail(format_element(G, x) + " * " + format_element(G, y));
    }
  }
  return r;
}

/// l_{AS}(Ag) = l_S(g) for random unimodular A acting on Z^2 and Z^3.
inline PropertyResult lattice_equivariance(std::size_t samples, std::uint64_t seed) {
  PropertyResult                     r{"equivariance on Z^d"};
  std::mt19937_64                    rng(seed);
  std::uniform_int_distribution<int> coord(-3, 3), mult(-2, 2), steps(1, 4);
  for (std::size_t n = 0; n < samples; ++n, ++r.samples) {
    std::size_t const d = 2 + rng() % 2;
    Group const       G = Group::int_vector(d);
    // A from elementary row operations and swaps.
    std::vector<std::vector<long long>> a(d, std::vector<long long>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      a[i][i] = 1;
    }
    for (int k = steps(rng); k > 0; --k) {
      std::size_t i = rng() % d, j = rng() % d;
      if (i == j) {
        std::swap(a[i], a[(i + 1) % d]);
        continue;
      }
      long long f = mult(rng);
      for (std::size_t c = 0; c < d; ++c) {
        a[i][c] += f * a[j][c];
      }
    }
    auto apply = [&](Element const& x) {
      auto const&          v = x.as<nf::Vector>().coords;
      std::vector<Integer> w(d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          w[i] += a[i][j] * v[j];
        }
      }
      return Element::vector(w);
    };
    std::vector<Element> letters, images;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Integer> e(d, 0);
      e[i] = 1;
      letters.push_back(Element::vector(e));
    }
    std::vector<Integer> extra(d, 0);
    for (auto& c : extra) {
      c = coord(rng);
    }
    if (Element::vector(extra) != G.identity()) {
      letters.push_back(Element::vector(extra));
    }
    for (auto const& x : letters) {
      images.push_back(apply(x));
    }
    std::vector<Integer> gv(d, 0);
    for (auto& c : gv) {
      c = coord(rng);
    }
    Element g  = Element::vector(gv);
    auto    s  = make_symmetric(G, letters);
    auto    as = make_symmetric(G, images);
    auto    l1 = word_length(s, g, 24);
    auto    l2 = word_length(as, apply(g), 24);
    if (l1.length != l2.length) {
      r.fail(format_element(G, g) + " under " + format_genset(s));
    }
  }
  return r;
}

/// The swap a <-> b with c -> c^-1, (i,j,l) -> (j,i,-ij-l), preserves
/// products and word length.
inline PropertyResult heisenberg_equivariance(std::size_t samples, std::uint64_t seed) {
  PropertyResult r{"equivariance on the Heisenberg group"};
  Group const    H = Group::heisenberg();
  auto           phi = [](Element const& x) {
    auto const& h = x.as<nf::Heisenberg>();
    return Element::heisenberg(h.j, h.i, -h.i * h.j - h.l);
  };
  std::vector<std::vector<Element>> families{
      {Element::heisenberg(1, 0, 0), Element::heisenberg(0, 1, 0)},
      {Element::heisenberg(2, 0, 0), Element::heisenberg(3, 0, 0), Element::heisenberg(0, 1, 0)},
      {Element::heisenberg(1, 1, 0), Element::heisenberg(0, 1, 2)},
      {Element::heisenberg(1, 0, 1), Element::heisenberg(1, 1, 0), Element::heisenberg(0, 0, 1)},
  };
  std::vector<std::unique_ptr<Ball>> balls, images;
  for (auto const& f : families) {
    std::vector<Element> img;
    for (auto const& x : f) {
      img.push_back(phi(x));
    }
    balls.push_back(std::make_unique<Ball>(make_symmetric(H, f), 6));
    images.push_back(std::make_unique<Ball>(make_symmetric(H, img), 6));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < samples; ++n, ++r.samples) {
    std::size_t    k = rng() % balls.size();
    Element const& x = *balls[k]->elements()[rng() % balls[k]->size()];
    Element const& y = *balls[k]->elements()[rng() % balls[k]->size()];
    if (phi(H.mul(x, y)) != H.mul(phi(x), phi(y))) {
      r.fail("swap is not multiplicative at " + format_element(H, x));
      continue;
    }
    if (images[k]->length(phi(x)) != balls[k]->length(x)) {
      r.fail(format_element(H, x) + " under " + format_genset(balls[k]->genset()));
    }
  }
  return r;
}

/// l_{pi(S)}(pi(g)) <= l_S(g) for Z x Z/q -> Z/q and H3 -> Z^2.
inline PropertyResult quotient_monotonicity(std::size_t samples, std::uint64_t seed) {
  PropertyResult r{"quotient monotonicity"};
  struct Case {
    QuotientMap           pi;
    std::unique_ptr<Ball> source;
    std::unique_ptr<Ball> target;
  };
  std::vector<Case> cases;
  auto add = [&](QuotientMap pi, std::string const& genset, std::size_t radius) {
    auto s = parse_genset(pi.source(), genset);
    auto t = project_genset(pi, s);
    cases.push_back({pi, std::make_unique<Ball>(s, radius),
                     std::make_unique<Ball>(t, radius)});
  };
  for (std::int64_t q : {2, 3, 5, 7}) {
    Group zq = Group::product(Group::integers(), Group::finite_cyclic(q));
    add(QuotientMap::project_right(zq), "[(" + std::to_string(q + 2) + ",1),(1,0)]", 10);
    add(QuotientMap::project_right(zq), "[(3,1),(2,0)]", 10);
  }
  add(QuotientMap::abelianize(), "[(1,0,0),(0,1,0)]", 8);
  add(QuotientMap::abelianize(), "[(2,0,0),(3,0,0),(0,1,0)]", 6);
  add(QuotientMap::abelianize(), "[(1,1,0),(0,1,2),(0,0,1)]", 6);

  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < samples; ++n, ++r.samples) {
    auto const&    c = cases[rng() % cases.size()];
    Element const& x = *c.source->elements()[rng() % c.source->size()];
    auto           down = c.target->length(c.pi.apply(x));
    if (!down || *down > *c.source->length(x)) {
      r.fail(format_element(c.pi.source(), x));
    }
  }
  return r;
}

inline std::vector<PropertyResult> all_properties(std::size_t samples, std::uint64_t seed) {
  auto balls = property_balls();
  return {inverse_symmetry(balls, samples, seed),
          subadditivity(balls, samples, seed + 1),
          lattice_equivariance(samples, seed + 2),
          heisenberg_equivariance(samples, seed + 3),
          quotient_monotonicity(samples, seed + 4)};
}

}  // namespace wordbound::testing
