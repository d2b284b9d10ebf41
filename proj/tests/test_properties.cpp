#include <doctest.h>

#include "properties.hpp"

using namespace wordbound;

TEST_CASE("metric properties hold on seeded samples") {
  for (auto const& r : testing::all_properties(10000, 2024)) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.samples == 10000);
    CHECK(r.failures == 0);
  }
}

TEST_CASE("the Heisenberg swap is an involutive automorphism") {
  Group h   = Group::heisenberg();
  auto  phi = [](Element const& x) {
    auto const& e = x.as<nf::Heisenberg>();
    return Element::heisenberg(e.j, e.i, -e.i * e.j - e.l);
  };
  CHECK(phi(Element::heisenberg(1, 0, 0)) == Element::heisenberg(0, 1, 0));
  CHECK(phi(Element::heisenberg(0, 0, 1)) == Element::heisenberg(0, 0, -1));
  for (auto const& x : {Element::heisenberg(2, -3, 5), Element::heisenberg(-1, 4, 0)})
    CHECK(phi(phi(x)) == x);
}

TEST_CASE("the plain coordinate swap is not an automorphism") {
  Group h    = Group::heisenberg();
  auto  swap = [](Element const& x) {
    auto const& e = x.as<nf::Heisenberg>();
    return Element::heisenberg(e.j, e.i, e.l);
  };
  auto a = Element::heisenberg(1, 0, 0), b = Element::heisenberg(0, 1, 0);
  CHECK(swap(h.mul(a, b)) != h.mul(swap(a), swap(b)));
}
