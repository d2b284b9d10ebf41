#include <doctest.h>

#include <functional>
#include <random>

#include "wordbound/errors.hpp"
#include "wordbound/smith.hpp"

using namespace wordbound;

namespace {

// Determinantal divisors: d_k = gcd of all k x k minors. The invariant
// factors are d_k / d_{k-1}.
Integer minor_det(IntMatrix const& m, std::vector<std::size_t> const& r,
                  std::vector<std::size_t> const& c) {
  IntMatrix sub(r.size(), c.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) sub(i, j) = m(r[i], c[j]);
  return sub.determinant();
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t>            cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<Integer> factors_by_minors(IntMatrix const& m) {
  std::size_t const    n = std::min(m.rows(), m.cols());
  std::vector<Integer> out;
  Integer              prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(m.rows(), k, rs);
    subsets(m.cols(), k, cs);
    Integer g = 0;
    for (auto const& r : rs)
      for (auto const& c : cs) g = gcd(g, minor_det(m, r, c));
    out.push_back(prev == 0 ? Integer(0) : g / prev);
    prev = g;
  }
  return out;
}

}  // namespace

TEST_CASE("small known forms") {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto      f = smith_normal_form(m);
  CHECK(f.invariant_factors() == std::vector<Integer>{2, 6, 12});
  CHECK(verify_smith_form(m, f));

  IntMatrix unit{{5, 8}, {3, 5}};
  CHECK(smith_normal_form(unit).invariant_factors() == std::vector<Integer>{1, 1});

  IntMatrix rank1{{2, 4}, {3, 6}};
  CHECK(smith_normal_form(rank1).invariant_factors() == std::vector<Integer>{1, 0});

  CHECK_THROWS_AS(smith_normal_form(IntMatrix(0, 3)), PreconditionError);
}

TEST_CASE("determinant") {
  CHECK(IntMatrix{{2, 1}, {7, 4}}.determinant() == 1);
  CHECK(IntMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}.determinant() == -2);
  CHECK(IntMatrix{{1, 2}, {2, 4}}.determinant() == 0);
}

TEST_CASE("random matrices agree with determinantal divisors") {
  std::mt19937_64                    rng(11);
  std::uniform_int_distribution<int> dim(1, 4), val(-9, 9);
  for (int n = 0; n < 300; ++n) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
    auto f = smith_normal_form(m);
    CHECK(verify_smith_form(m, f));
    CHECK(f.invariant_factors() == factors_by_minors(m));
  }
}

TEST_CASE("verification rejects a forged form") {
  IntMatrix m{{2, 0}, {0, 3}};
  auto      f = smith_normal_form(m);
  CHECK(f.invariant_factors() == std::vector<Integer>{1, 6});
  auto forged = f;
  forged.diagonal(1, 1) = 5;
  CHECK_FALSE(verify_smith_form(m, forged));
}
