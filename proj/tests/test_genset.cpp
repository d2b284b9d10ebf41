#include <doctest.h>

#include <random>
#include <set>

#include "wordbound/errors.hpp"
#include "wordbound/genset.hpp"
#include "wordbound/metric.hpp"

using namespace wordbound;

namespace {

Element cyc(std::int64_t k) {
  return Element::cyclic(k);
}
Element vec(std::vector<Integer> v) {
  return Element::vector(std::move(v));
}
Element dih(long long k, bool e) {
  return Element::dihedral(k, e);
}

GenSet sym(Group const& g, std::vector<Element> const& xs) {
  return make_symmetric(g, xs);
}

// Closure size of the image of `xs` under `f` inside a finite group `q`,
// computed without the library.
template <typename T, typename Mul>
std::size_t closure(std::vector<T> const& gens, T const& id, Mul mul) {
  std::set<T>    seen{id};
  std::vector<T> stack{id};
  while (!stack.empty()) {
    T x = stack.back();
    stack.pop_back();
    for (auto const& s : gens) {
      T y = mul(x, s);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("make_symmetric order and idempotence") {
  Group z7 = Group::finite_cyclic(7);
  auto  s  = sym(z7, {cyc(2), cyc(0), cyc(5), cyc(3)});
  CHECK(s.letters() == std::vector<Element>{cyc(2), cyc(5), cyc(3), cyc(4)});
  CHECK(s.inverse_of(0) == 1);
  auto again = make_symmetric(z7, s.letters());
  CHECK(again == s);

  Group z4 = Group::finite_cyclic(4);
  auto  t  = sym(z4, {cyc(2)});
  CHECK(t.size() == 1);
  CHECK(t.is_involution(0));
  CHECK_THROWS_AS(sym(z4, {cyc(0)}), PreconditionError);
  CHECK_THROWS_AS(GenSet(z4, {cyc(1)}), PreconditionError);
  CHECK_THROWS_AS(GenSet(z4, {cyc(1), cyc(3), cyc(1)}), PreconditionError);
  CHECK_THROWS_AS(s.evaluate({0, 9}), DomainError);
  CHECK(s.evaluate({0, 0, 2}) == cyc(0));
  CHECK(s.inverse_word({0, 2}) == Word{3, 1});
}

TEST_CASE("standard generating sets") {
  CHECK(standard_genset(Group::finite_cyclic(5)).letters()
        == std::vector<Element>{cyc(1), cyc(4)});
  CHECK(standard_genset(Group::finite_cyclic(2)).size() == 1);
  CHECK(standard_genset(Group::int_vector(2)).letters()
        == std::vector<Element>{vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})});
  CHECK(standard_genset(Group::dihedral(4)).letters()
        == std::vector<Element>{dih(1, false), dih(3, false), dih(0, true)});
  CHECK(standard_genset(Group::dihedral(1)).letters() == std::vector<Element>{dih(0, true)});
  CHECK(standard_genset(Group::heisenberg()).size() == 4);
  CHECK(standard_genset(Group::free(3)).size() == 6);
  auto p = standard_genset(Group::product(Group::integers(), Group::finite_cyclic(3)));
  CHECK(p.letters()
        == std::vector<Element>{Element::pair(vec({1}), cyc(0)),
                                Element::pair(vec({-1}), cyc(0)),
                                Element::pair(vec({0}), cyc(1)),
                                Element::pair(vec({0}), cyc(2))});
  CHECK_THROWS_AS(standard_genset(Group::finite_cyclic(1)), PreconditionError);
}

TEST_CASE("generation on finite groups by closure") {
  Group z6 = Group::finite_cyclic(6);
  CHECK(generates(sym(z6, {cyc(2), cyc(3)}), 10).status == Generation::Yes);
  CHECK(generates(sym(z6, {cyc(2)}), 10).status == Generation::No);
  Group d8 = Group::dihedral(4);
  auto  c  = generates(sym(d8, {dih(0, true), dih(1, true)}), 10);
  CHECK(c.status == Generation::Yes);
  CHECK(verify_certificate(sym(d8, {dih(0, true), dih(1, true)}), c));
  CHECK(generates(sym(d8, {dih(0, true), dih(2, true)}), 10).status == Generation::No);
  CHECK_THROWS_AS(generates(sym(d8, {dih(0, true)}), 0), PreconditionError);
}

TEST_CASE("lattice generation on Z^2 and Z x Z/q against maximal minors") {
  std::mt19937_64                    rng(3);
  std::uniform_int_distribution<int> val(-4, 4), count(1, 3);
  Group                              z2 = Group::int_vector(2);
  for (int n = 0; n < 200; ++n) {
    std::vector<Element> xs;
    std::vector<std::array<long long, 2>> cols;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      long long a = val(rng), b = val(rng);
      cols.push_back({a, b});
      xs.push_back(vec({a, b}));
    }
    if (std::all_of(cols.begin(), cols.end(), [](auto c) { return c[0] == 0 && c[1] == 0; }))
      continue;
    Integer g = 0;
    for (std::size_t i = 0; i < cols.size(); ++i)
      for (std::size_t j = i + 1; j < cols.size(); ++j)
        g = gcd(g, Integer(cols[i][0] * cols[j][1] - cols[i][1] * cols[j][0]));
    auto s = sym(z2, xs);
    auto c = generates(s, 5);
    CHECK(c.status == (g == 1 ? Generation::Yes : Generation::No));
    if (c.status == Generation::Yes) CHECK(verify_certificate(s, c));
  }

  // Z x Z/q: append the relation column (0, q).
  Group zq = Group::product(Group::integers(), Group::finite_cyclic(6));
  for (int n = 0; n < 200; ++n) {
    std::vector<Element> xs;
    std::vector<std::array<long long, 2>> cols{{0, 6}};
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      long long a = val(rng), b = ((val(rng) % 6) + 6) % 6;
      if (a == 0 && b == 0) continue;
      cols.push_back({a, b});
      xs.push_back(Element::pair(vec({a}), cyc(b)));
    }
    if (xs.empty()) continue;
    Integer g = 0;
    for (std::size_t i = 0; i < cols.size(); ++i)
      for (std::size_t j = i + 1; j < cols.size(); ++j)
        g = gcd(g, Integer(cols[i][0] * cols[j][1] - cols[i][1] * cols[j][0]));
    auto c = generates(sym(zq, xs), 5);
    CHECK(c.status == (g == 1 ? Generation::Yes : Generation::No));
  }
}

TEST_CASE("lattice_generates helper") {
  CHECK(lattice_generates(IntMatrix{{2, 3}}, {0}));
  CHECK_FALSE(lattice_generates(IntMatrix{{2, 4}}, {0}));
  CHECK(lattice_generates(IntMatrix{{2}}, {5}));
  CHECK_FALSE(lattice_generates(IntMatrix{{2}}, {4}));
  CHECK_THROWS_AS(lattice_generates(IntMatrix{{1}}, {0, 0}), PreconditionError);
}

TEST_CASE("Z x D8 generation agrees with ball search and finite quotients") {
  Group G = Group::product(Group::integers(), Group::dihedral(4));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> z(-3, 3), k(0, 3), e(0, 1), count(1, 3);
  int yes = 0, no = 0;
  for (int n = 0; n < 120; ++n) {
    std::vector<Element> xs;
    int m = count(rng);
    for (int i = 0; i < m; ++i) xs.push_back(Element::pair(vec({z(rng)}), dih(k(rng), e(rng))));
    std::erase(xs, G.identity());
    if (xs.empty()) continue;
    auto s = sym(G, xs);
    auto c = generates(s, 5);
    REQUIRE(c.status != Generation::Inconclusive);
    if (c.status == Generation::Yes) {
      ++yes;
      CHECK(verify_certificate(s, c));
      Ball b(s, 14);
      CHECK(b.contains(Element::pair(vec({1}), dih(0, false))));
      CHECK(b.contains(Element::pair(vec({0}), dih(1, false))));
      CHECK(b.contains(Element::pair(vec({0}), dih(0, true))));
    } else {
      ++no;
      // Some image Z/N x D8 is not generated, or the Z-part is trivial.
      bool refuted = std::all_of(xs.begin(), xs.end(), [](Element const& x) {
        return x.left() == Element::vector({0});
      });
      for (int N = 2; N <= 8 && !refuted; ++N) {
        using T = std::tuple<long long, long long, bool>;
        std::vector<T> gens;
        for (auto const& x : s.letters()) {
          auto const& d = x.right().as<nf::Dihedral>();
          gens.emplace_back(
              ((x.left().as<nf::Vector>().coords[0].convert_to<long long>() % N) + N) % N,
              d.rotation.convert_to<long long>(), d.reflection);
        }
        auto mul = [N](T const& a, T const& b) {
          auto [z1, k1, e1] = a;
          auto [z2, k2, e2] = b;
          return T{(z1 + z2) % N, ((k1 + (e1 ? -k2 : k2)) % 4 + 4) % 4, e1 != e2};
        };
        refuted = closure(gens, T{0, 0, false}, mul) < std::size_t(8 * N);
      }
      CHECK(refuted);
    }
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("infinite dihedral generation") {
  Group d = Group::infinite_dihedral();
  CHECK(generates(sym(d, {dih(2, false), dih(3, false), dih(0, true)}), 5).status
        == Generation::Yes);
  CHECK(generates(sym(d, {dih(0, true), dih(1, true)}), 5).status == Generation::Yes);
  CHECK(generates(sym(d, {dih(0, true), dih(2, true)}), 5).status == Generation::No);
  CHECK(generates(sym(d, {dih(1, false)}), 5).status == Generation::No);
  CHECK(generates(sym(d, {dih(2, true), dih(5, true), dih(4, false)}), 5).status
        == Generation::Yes);
  CHECK(generates(sym(d, {dih(2, true), dih(5, true), dih(6, false)}), 5).status
        == Generation::No);
  auto s = sym(d, {dih(4, true), dih(7, true), dih(9, true)});
  auto c = generates(s, 5);
  CHECK(c.status == Generation::Yes);
  CHECK(verify_certificate(s, c));
  Ball b(s, 12);
  CHECK(b.contains(dih(1, false)));
  CHECK(b.contains(dih(0, true)));
}

TEST_CASE("Heisenberg generation") {
  Group h = Group::heisenberg();
  auto  H = [](long long i, long long j, long long l) { return Element::heisenberg(i, j, l); };
  auto  s = sym(h, {H(1, 1, 0), H(0, 1, 0)});
  auto  c = generates(s, 5);
  CHECK(c.status == Generation::Yes);
  CHECK(verify_certificate(s, c));
  REQUIRE(c.witnesses.size() == 1);
  CHECK(s.evaluate(c.witnesses[0].second) == H(0, 0, 1));

  CHECK(generates(sym(h, {H(2, 0, 0), H(0, 1, 0)}), 5).status == Generation::No);

  // Commutators are c^{det}; a unimodular pair always generates.
  auto s2 = sym(h, {H(2, 3, 4), H(3, 5, -1)});
  auto c2 = generates(s2, 5);
  CHECK(c2.status == Generation::Yes);
  CHECK(verify_certificate(s2, c2));

  // Three letters whose pairwise determinants have gcd 1 but none is a unit.
  auto s3 = sym(h, {H(2, 0, 0), H(0, 3, 0), H(1, 1, 0)});
  auto c3 = generates(s3, 5);
  CHECK(c3.status == Generation::Yes);
  CHECK(verify_certificate(s3, c3));

  // Surjective abelianization is enough.
  for (auto const& xs : std::vector<std::vector<Element>>{
           {H(1, 0, 0), H(1, 2, 0), H(0, 1, 1)}, {H(3, 1, 7), H(5, 2, -2)}}) {
    auto sx = sym(h, xs);
    auto cx = generates(sx, 1);
    CHECK(cx.status == Generation::Yes);
    CHECK(verify_certificate(sx, cx));
  }
  CHECK(Ball(sym(h, {H(1, 0, 0), H(1, 2, 0), H(0, 1, 1)}), 4).contains(H(0, 1, 0)));
}

TEST_CASE("free group generation") {
  Group f2 = Group::free(2);
  auto  s  = sym(f2, {Element::free_word({1, 2}), Element::free_word({2})});
  auto  c  = generates(s, 4);
  CHECK(c.status == Generation::Yes);
  CHECK(verify_certificate(s, c));
  auto t = sym(f2, {Element::free_word({1, 1}), Element::free_word({2})});
  CHECK(generates(t, 6).status == Generation::Inconclusive);
  // z = x1 x2 x1, y = x1 x2: x1 = y^-1 z, x2 = z^-1 y y.
  auto u = sym(f2, {Element::free_word({1, 2, 1}), Element::free_word({1, 2})});
  CHECK(generates(u, 1).status == Generation::Inconclusive);
  CHECK(generates(u, 1, {Word{3, 0}}).status == Generation::Inconclusive);
  auto cu = generates(u, 1, {Word{3, 0}, Word{1, 2, 2}});
  CHECK(cu.status == Generation::Yes);
  CHECK(verify_certificate(u, cu));
  CHECK(generates(u, 3).status == Generation::Yes);
  CHECK(generates(sym(f2, {Element::free_word({1, 2, 1}), Element::free_word({2})}), 6).status
        == Generation::Inconclusive);
}

TEST_CASE("quotient maps") {
  auto pi = QuotientMap::reduce_mod(5);
  CHECK(pi.apply(vec({-7})) == cyc(3));
  auto ab = QuotientMap::abelianize();
  CHECK(ab.apply(Element::heisenberg(2, -1, 9)) == vec({2, -1}));
  auto dr = QuotientMap::dihedral_reduce(4);
  CHECK(dr.apply(dih(-3, true)) == dih(1, true));
  Group zz = Group::product(Group::integers(), Group::finite_cyclic(4));
  auto  pl = QuotientMap::project_right(zz);
  auto  s  = sym(zz, {Element::pair(vec({1}), cyc(0)), Element::pair(vec({3}), cyc(1))});
  auto  q  = project_genset(pl, s);
  CHECK(q.letters() == std::vector<Element>{cyc(1), cyc(3)});
  CHECK_THROWS_AS(project_genset(pi, s), DomainError);
  CHECK_THROWS_AS(pi.apply(cyc(1)), DomainError);
}
