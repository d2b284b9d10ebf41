#include <doctest.h>

#include "golden.hpp"

using namespace wordbound;

TEST_CASE("D8 uniform-length table matches its golden file") {
  auto r = testing::compare_golden("d8_uniform.csv", testing::d8_uniform_csv());
  INFO(r.detail);
  CHECK(r.match);
}

TEST_CASE("Z/5 uniform length") {
  auto r = uniform_length_experiment(Group::finite_cyclic(5));
  REQUIRE(r.rows.size() == 5);
  CHECK(std::get<std::int64_t>(r.rows[1][1].second) == 2);
  CHECK(std::get<std::string>(r.rows[1][2].second) == "[2,3]");
}
