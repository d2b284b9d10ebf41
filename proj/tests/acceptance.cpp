// Acceptance runner: one PASS/FAIL line per criterion. Integer values are
// compared exactly; runtime limits are wall-clock seconds. Exits 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "properties.hpp"
#include "wordbound/cli.hpp"
#include "wordbound/experiments.hpp"
#include "wordbound/finite.hpp"
#include "wordbound/girth.hpp"

using namespace wordbound;

namespace {

struct Outcome {
  bool        pass = true;
  std::string detail;

  void check(bool ok, std::string const& what) {
    if (!detail.empty()) {
      detail += "; ";
    }
    detail += what;
    if (!ok) {
      pass = false;
      detail += " [FAIL]";
    }
  }
};

struct Criterion {
  int                      id;
  std::string              title;
  double                   time_limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

std::string num(std::optional<std::size_t> v) {
  return v ? std::to_string(*v) : std::string("none");
}

Scalar const& cell(Row const& row, std::string const& column) {
  for (auto const& [name, value] : row) {
    if (name == column) {
      return value;
    }
  }
  throw std::out_of_range("no column " + column);
}

std::int64_t int_cell(Row const& row, std::string const& column) {
  return std::get<std::int64_t>(cell(row, column));
}

Outcome zxzq_equality() {
  Outcome o;
  struct Case {
    std::int64_t q, p, expected;
  };
  for (auto [q, p, expected] : {Case{2, 5, 8}, Case{3, 5, 9}, Case{5, 7, 13}}) {
    Group G = Group::product(Group::integers(), Group::finite_cyclic(q));
    auto  s = make_symmetric(G, std::vector<Element>{
                                   Element::pair(Element::vector({p}), Element::cyclic(1)),
                                   Element::pair(Element::vector({q + 1}), Element::cyclic(0))});
    auto  l = word_length(s, Element::pair(Element::vector({0}), Element::cyclic(1)), 32);
    o.check(l.length == std::size_t(expected),
            "(q,p)=(" + std::to_string(q) + "," + std::to_string(p) + ") -> " + num(l.length)
                + " want " + std::to_string(expected));
  }
  return o;
}

Outcome heisenberg_control() {
  Outcome o;
  Group   H = Group::heisenberg();
  Element c = Element::heisenberg(0, 0, 1);
  auto    control = word_length(standard_genset(H), c, 8);
  o.check(control.length == std::size_t(4), "l(c)=" + num(control.length) + " want 4");
  std::vector<std::size_t> lengths;
  for (auto [p, q] : {IntPair{2, 3}, IntPair{3, 5}, IntPair{5, 7}}) {
    auto s = make_symmetric(H, std::vector<Element>{Element::heisenberg(p, 0, 0),
                                                    Element::heisenberg(q, 0, 0),
                                                    Element::heisenberg(0, 1, 0)});
    auto l = word_length(s, c, 40);
    lengths.push_back(l.length.value_or(0));
    if (!l.length) {
      o.check(false, "no length within 40");
    }
  }
  bool increasing = lengths[0] < lengths[1] && lengths[1] < lengths[2];
  o.check(increasing, "l_S(c) along (2,3),(3,5),(5,7) = " + std::to_string(lengths[0]) + ","
                          + std::to_string(lengths[1]) + "," + std::to_string(lengths[2]));
  return o;
}

Outcome center_certificate() {
  Outcome o;
  auto    r = heisenberg_center_experiment(100, default_seed);
  std::size_t failures = 0;
  for (auto const& row : r.rows) {
    auto e = int_cell(row, "exponent");
    auto l = cell(row, "length");
    bool ok = (e == 1 || e == -1) && std::holds_alternative<std::int64_t>(l)
              && std::get<std::int64_t>(l) <= 4;
    failures += ok ? 0 : 1;
  }
  o.check(r.rows.size() == 100, std::to_string(r.rows.size()) + " pairs");
  o.check(failures == 0 && r.passed(), std::to_string(failures) + " failures");
  return o;
}

Outcome prescribed_length() {
  Outcome o;
  auto    ex = prescribe_length_free(2, Element::free_word({1}), 2, 7, 23);
  o.check(ex.length.length == std::size_t(3),
          "(l,u,v)=(2,7,23) -> " + num(ex.length.length) + " want 3");
  auto const& grid = default_prescribe_grid();
  o.check(grid.size() >= 6, std::to_string(grid.size()) + " grid triples");
  auto tally = [&](ExperimentReport const& r, std::string const& label) {
    std::size_t        good = 0;
    std::ostringstream bad;
    for (auto const& row : r.rows) {
      auto l = int_cell(row, "l");
      auto len = cell(row, "length");
      if (std::holds_alternative<std::int64_t>(len) && std::get<std::int64_t>(len) == l + 1) {
        ++good;
      } else {
        bad << " l=" << l << ":" << scalar_text(len);
      }
    }
    o.check(good == r.rows.size() && good == grid.size(),
            label + " " + std::to_string(good) + "/" + std::to_string(grid.size()) + " give l+1"
                + bad.str());
  };
  tally(prescribe_free_experiment(2, Element::free_word({1}), grid), "free");
  tally(prescribe_zd_experiment(2, Element::vector({1, 0}), grid), "Z^2");
  return o;
}

Outcome girth_table() {
  Outcome o;
  auto    g = [](char const* group, char const* genset, std::size_t cap) {
    Group G = parse_group(group);
    return girth(parse_genset(G, genset), cap);
  };
  struct Case {
    char const*                group;
    char const*                genset;
    std::size_t                cap;
    std::optional<std::size_t> expected;
  };
  Case const cases[] = {
      {"Z", "[2,3]", 16, 5},
      {"Z", "[3,5]", 16, 8},
      {"Z^2", "[(1,0),(0,1)]", 16, 4},
      {"D8", "[(1,0),(0,1)]", 16, 4},
      {"F2", "[x1,x2]", 12, std::nullopt},
  };
  for (auto const& c : cases) {
    auto        r    = g(c.group, c.genset, c.cap);
    std::string want = c.expected ? std::to_string(*c.expected) : "> " + std::to_string(c.cap);
    o.check(r.value == c.expected,
            std::string(c.group) + " " + c.genset + " -> " + r.str() + " want " + want);
  }
  return o;
}

Outcome simple_loops() {
  Outcome o;
  auto    sweep = [&](Group const& G, GenSet const& s, std::string const& label) {
    Ball        b(s, 64);
    std::size_t checked = 0, failures = 0;
    std::string first;
    for (auto const& x : G.enumerate()) {
      if (x == G.identity()) {
        continue;
      }
      ++checked;
      auto v = simple_loop_check(s, x, b.geodesic(x));
      if (!v.simple) {
        if (failures++ == 0) {
          first = format_element(G, x) + ": " + v.reason;
        }
      }
    }
    o.check(failures == 0, label + " " + std::to_string(checked - failures) + "/"
                               + std::to_string(checked) + (first.empty() ? "" : " first " + first));
  };
  Group d8 = Group::dihedral(4);
  sweep(d8, standard_genset(d8), "D8");
  for (std::int64_t q = 2; q <= 12; ++q) {
    Group zq = Group::finite_cyclic(q);
    sweep(zq, standard_genset(zq), "Z/" + std::to_string(q));
  }
  return o;
}

Outcome properties() {
  Outcome o;
  for (auto const& r : testing::all_properties(10000, 2024)) {
    o.check(r.samples == 10000 && r.failures == 0,
            r.name + " " + std::to_string(r.failures) + "/" + std::to_string(r.samples)
                + (r.first_failure.empty() ? "" : " at " + r.first_failure));
  }
  return o;
}

Outcome aut_orbit_bound() {
  Outcome o;
  for (auto const& G : {Group::finite_cyclic(5), Group::finite_cyclic(8), Group::dihedral(4)}) {
    IndexedGroup ig(G);
    auto         auts = aut_group(ig);
    std::size_t  failures = 0;
    for (std::size_t i = 0; i < ig.size(); ++i) {
      failures += aut_orbit_bound_check(ig, ig.element(i), auts).failures.size();
    }
    o.check(failures == 0, format_group(G) + " " + std::to_string(ig.size()) + " elements, "
                               + std::to_string(failures) + " failures");
  }
  return o;
}

Outcome zxd8_bounded() {
  Outcome o;
  auto    r = bound_witness_zxd8(200, default_seed, 10);
  std::size_t over = 0;
  for (auto const& row : r.rows) {
    auto l = cell(row, "length");
    over += std::holds_alternative<std::int64_t>(l) && std::get<std::int64_t>(l) <= 4 ? 0 : 1;
  }
  o.check(r.rows.size() == 200, std::to_string(r.rows.size()) + " generating sets");
  o.check(over == 0 && r.passed(), std::to_string(over) + " with length > 4");
  return o;
}

Outcome quotient_orbit() {
  Outcome o;
  for (std::int64_t p : {5, 7, 11}) {
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 1; k < p; ++k) {
      ks.push_back(k);
    }
    auto                  r = quotient_orbit_experiment(p, ks);
    bool                  all_auts = true;
    std::set<std::string> orbit;
    for (auto const& row : r.rows) {
      all_auts = all_auts && std::get<bool>(cell(row, "automorphism"));
      orbit.insert(scalar_text(cell(row, "image")));
    }
    bool ok = all_auts && std::int64_t(orbit.size()) == p - 1 && 2 * orbit.size() >= std::size_t(p)
              && r.passed();
    o.check(ok, "p=" + std::to_string(p) + " orbit " + std::to_string(orbit.size())
                    + (all_auts ? "" : ", non-automorphism"));
  }
  return o;
}

Outcome uniform_length() {
  Outcome      o;
  IndexedGroup z5(Group::finite_cyclic(5));
  auto         u = uniform_length_exact(z5, Element::cyclic(1));
  o.check(u.max_length == 2, "Z/5 at 1 -> " + std::to_string(u.max_length) + " want 2");
  auto g = testing::compare_golden("d8_uniform.csv", testing::d8_uniform_csv());
  o.check(g.match, g.detail);
  return o;
}

Outcome conjugacy_growth() {
  Outcome o;
  Group   H = Group::heisenberg();
  auto    a = conjugacy_orbit_growth(H, Element::heisenberg(1, 0, 0), 4);
  auto    c = conjugacy_orbit_growth(H, Element::heisenberg(0, 0, 1), 4);
  bool    increasing = a.size() == 4, constant = c.size() == 4;
  std::string as, cs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    increasing = increasing && (i == 0 || a[i].second > a[i - 1].second);
    as += (i ? "," : "") + std::to_string(a[i].second);
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    constant = constant && c[i].second == 1;
    cs += (i ? "," : "") + std::to_string(c[i].second);
  }
  o.check(increasing, "a: " + as);
  o.check(constant, "c: " + cs);
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "Z x Z/q length equals p+q+1", 1.0, zxzq_equality},
      {2, "Heisenberg control and growth", 10.0, heisenberg_control},
      {3, "Heisenberg center certificate", 0, center_certificate},
      {4, "prescribed length l+1", 0, prescribed_length},
      {5, "girth table", 5.0, girth_table},
      {6, "simple-loop powers of geodesics", 0, simple_loops},
      {7, "metric property suites", 0, properties},
      {8, "automorphism orbit bound", 0, aut_orbit_bound},
      {9, "Z x D8 central element bounded", 0, zxd8_bounded},
      {10, "dihedral quotient orbit", 0, quotient_orbit},
      {11, "exact uniform length", 0, uniform_length},
      {12, "conjugacy growth", 0, conjugacy_growth},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto    start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out.check(false, std::string("error: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "runtime %.3f s < %.0f s", secs, c.time_limit);
      out.check(secs < c.time_limit, buf);
    }
    failed += out.pass ? 0 : 1;
    std::printf("%s %2d %s (%.3f s): %s\n", out.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                secs, out.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
