#include "wordbound/experiments.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "wordbound/errors.hpp"
#include "wordbound/finite.hpp"
#include "wordbound/notation.hpp"

namespace wordbound {

namespace {

  constexpr std::int64_t generation_budget = 16;

  std::int64_t i64(std::size_t n) {
    return static_cast<std::int64_t>(n);
  }

  std::string join(std::vector<std::int64_t> const& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += (i ? "," : "") + std::to_string(xs[i]);
    }
    return out;
  }

  std::string join_pairs(std::vector<IntPair> const& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += (i ? ";" : "") + std::to_string(xs[i].first) + "," + std::to_string(xs[i].second);
    }
    return out;
  }

  Scalar length_cell(LengthCert const& c) {
    if (c.found()) {
      return i64(*c.length);
    }
    return "> " + std::to_string(c.cap);
  }

  // Strict (or weak) increase of found lengths; any missing length fails.
  bool increasing(std::vector<LengthCert> const& certs, bool strict) {
    for (std::size_t i = 0; i < certs.size(); ++i) {
      if (!certs[i].found()) {
        return false;
      }
      if (i > 0) {
        auto a = *certs[i - 1].length;
        auto b = *certs[i].length;
        if (strict ? b <= a : b < a) {
          return false;
        }
      }
    }
    return true;
  }

  std::string lengths_text(std::vector<LengthCert> const& certs) {
    std::string out = "[";
    for (std::size_t i = 0; i < certs.size(); ++i) {
      out += (i ? "," : "") + scalar_text(length_cell(certs[i]));
    }
    return out + "]";
  }

  void require_generates(GenSet const& s, std::vector<Word> const& supplied = {}) {
    auto cert = generates(s, generation_budget, supplied);
    if (cert.status != Generation::Yes) {
      throw PreconditionError(format_genset(s) + " does not generate " + format_group(s.group())
                              + " (" + to_string(cert.status) + ": " + cert.details + ")");
    }
  }

  // (x, y) with a*x + b*y = gcd(a, b).
  IntPair bezout(std::int64_t a, std::int64_t b) {
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
      std::int64_t q = a / b;
      std::tie(a, b)   = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
      std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    return a < 0 ? IntPair{-x0, -y0} : IntPair{x0, y0};
  }

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

////////////////////////////////////////////////////////////////////////
// Unboundedness witnesses
////////////////////////////////////////////////////////////////////////

ExperimentReport unbounded_witness_zxzq(std::int64_t q, std::vector<std::int64_t> const& primes,
                                        SearchOptions const& options) {
  if (q < 1) {
    throw PreconditionError("q must be positive");
  }
  Group const   G = Group::product(Group::integers(), Group::finite_cyclic(q));
  Element const target = Element::pair(Element::vector({0}), Element::cyclic(1 % q));

  ExperimentReport r;
  r.name   = "zxzq";
  r.params = {{"q", q}, {"primes", join(primes)}};
  std::vector<LengthCert> certs;
  bool                    all_match = true;
  for (auto p : primes) {
    if (!is_prime(p) || p <= q + 1) {
      throw PreconditionError("p = " + std::to_string(p) + " must be a prime above q+1");
    }
    std::vector<Element> letters{Element::pair(Element::vector({p}), Element::cyclic(1 % q)),
                                 Element::pair(Element::vector({q + 1}), Element::cyclic(0))};
    GenSet s = make_symmetric(G, letters);
    require_generates(s);
    std::int64_t expected = p + q + 1;
    auto         c = word_length(s, target, static_cast<std::size_t>(2 * expected + 2), options);
    bool         match = c.found() && i64(*c.length) == expected;
    all_match          = all_match && match;
    r.rows.push_back({{"p", p}, {"length", length_cell(c)}, {"expected", expected},
                      {"match", match}});
    certs.push_back(std::move(c));
  }
  bool grows = increasing(certs, true);
  r.verdicts.push_back({"zxzq.formula", all_match && grows,
                        "lengths " + lengths_text(certs)
                            + (all_match ? " equal p+q+1" : " differ from p+q+1")
                            + (grows ? ", strictly increasing" : ", not strictly increasing")});
  return r;
}

ExperimentReport unbounded_witness_zd(std::size_t d, Element const& x,
                                      std::vector<IntPair> const& pairs,
                                      SearchOptions const& options) {
  if (d < 2) {
    throw PreconditionError("dimension must be at least 2");
  }
  Group const G = Group::int_vector(d);
  G.require(x);
  if (x == G.identity()) {
    throw PreconditionError("the tracked element must be nonzero");
  }
  ExperimentReport r;
  r.name   = "zd";
  r.params = {{"d", i64(d)}, {"x", format_element(G, x)}, {"pairs", join_pairs(pairs)}};
  std::vector<LengthCert> certs;
  for (auto [p, q] : pairs) {
    if (std::gcd(p, q) != 1) {
      throw PreconditionError("pair (" + std::to_string(p) + "," + std::to_string(q)
                              + ") is not coprime");
    }
    // b*p - a*q = 1; all solutions are (a + tp, b + tq). Keep the smallest
    // |a| + |b|, ties to the smaller b.
    auto const [b0, na0] = bezout(p, q);
    std::int64_t a = -na0, b = b0;
    for (std::int64_t t = -2; t <= 2; ++t) {
      std::int64_t a2 = -na0 + t * p, b2 = b0 + t * q;
      if (std::abs(a2) + std::abs(b2) < std::abs(a) + std::abs(b)
          || (std::abs(a2) + std::abs(b2) == std::abs(a) + std::abs(b) && b2 < b)) {
        a = a2;
        b = b2;
      }
    }
    std::vector<Element> letters;
    std::vector<Integer> v1(d, 0), v2(d, 0);
    v1[0] = p, v1[1] = a, v2[0] = q, v2[1] = b;
    letters.push_back(Element::vector(v1));
    letters.push_back(Element::vector(v2));
    for (std::size_t i = 2; i < d; ++i) {
      std::vector<Integer> e(d, 0);
      e[i] = 1;
      letters.push_back(Element::vector(e));
    }
    GenSet s = make_symmetric(G, letters);
    require_generates(s);
    auto c = word_length(s, x, 256, options);
    r.rows.push_back({{"p", p}, {"q", q}, {"a", a}, {"b", b}, {"length", length_cell(c)}});
    certs.push_back(std::move(c));
  }
  bool ok = increasing(certs, false) && certs.size() >= 2
            && *certs.back().length >= *certs.front().length + 1;
  r.verdicts.push_back({"zd.growth", ok,
                        "lengths " + lengths_text(certs)
                            + (ok ? " are nondecreasing and grow across the ladder"
                                  : " do not grow across the ladder")});
  return r;
}

ExperimentReport unbounded_witness_heisenberg(std::int64_t n, std::vector<IntPair> const& pairs,
                                              SearchOptions const& options) {
  if (n == 0) {
    throw PreconditionError("c^n must be nontrivial");
  }
  Group const   H = Group::heisenberg();
  Element const target = Element::heisenberg(0, 0, n);

  ExperimentReport r;
  r.name   = "heisenberg";
  r.params = {{"n", n}, {"pairs", join_pairs(pairs)}};
  std::vector<LengthCert> certs;
  for (auto [p, q] : pairs) {
    if (std::gcd(p, q) != 1) {
      throw PreconditionError("pair (" + std::to_string(p) + "," + std::to_string(q)
                              + ") is not coprime");
    }
    std::vector<Element> letters{Element::heisenberg(p, 0, 0), Element::heisenberg(q, 0, 0),
                                 Element::heisenberg(0, 1, 0)};
    GenSet s = make_symmetric(H, letters);
    require_generates(s);
    auto c = word_length(s, target, 128, options);
    r.rows.push_back({{"p", p}, {"q", q}, {"length", length_cell(c)}});
    certs.push_back(std::move(c));
  }
  bool grows = increasing(certs, true);
  r.verdicts.push_back({"heisenberg.growth", grows,
                        "lengths of c^" + std::to_string(n) + ": " + lengths_text(certs)
                            + (grows ? " strictly increase" : " do not strictly increase")});
  auto control = word_length(standard_genset(H), Element::heisenberg(0, 0, 1), 8, options);
  bool four    = control.found() && *control.length == 4;
  r.verdicts.push_back({"heisenberg.control", four,
                        "l(c) = " + scalar_text(length_cell(control))
                            + " under the standard generators"});
  return r;
}

ExperimentReport unbounded_witness_dinfty(std::vector<IntPair> const& pairs,
                                          SearchOptions const& options) {
  Group const   D = Group::infinite_dihedral();
  Element const t = Element::dihedral(1, false);

  ExperimentReport r;
  r.name   = "dinfty";
  r.params = {{"pairs", join_pairs(pairs)}};
  std::vector<LengthCert> certs;
  for (auto [alpha, beta] : pairs) {
    if (std::gcd(alpha, beta) != 1) {
      throw PreconditionError("pair (" + std::to_string(alpha) + "," + std::to_string(beta)
                              + ") is not coprime, so S does not generate");
    }
    std::vector<Element> letters{Element::dihedral(0, true), Element::dihedral(alpha, true),
                                 Element::dihedral(beta, true)};
    GenSet s = make_symmetric(D, letters);
    require_generates(s);
    auto c = word_length(s, t, 256, options);
    r.rows.push_back({{"alpha", alpha}, {"beta", beta}, {"length", length_cell(c)}});
    certs.push_back(std::move(c));
  }
  bool grows = increasing(certs, true);
  r.verdicts.push_back({"dinfty.growth", grows,
                        "lengths of t: " + lengths_text(certs)
                            + (grows ? " strictly increase" : " do not strictly increase")});
  return r;
}

////////////////////////////////////////////////////////////////////////
// Boundedness certificates
////////////////////////////////////////////////////////////////////////

std::int64_t heisenberg_center_certificate(Element const& x, Element const& y) {
  Group const H = Group::heisenberg();
  H.require(x);
  H.require(y);
  std::vector<Element> letters{x, y};
  auto s = make_symmetric(H, letters);
  if (generates(s, generation_budget).status != Generation::Yes) {
    throw PreconditionError("the pair does not generate the Heisenberg group");
  }
  auto const& k = H.commutator(x, y).as<nf::Heisenberg>();
  if (k.i != 0 || k.j != 0) {
    throw std::logic_error("commutator left the center");
  }
  return k.l.convert_to<std::int64_t>();
}

ExperimentReport heisenberg_center_experiment(std::size_t samples, std::uint64_t seed,
                                              SearchOptions const& options) {
  Group const   H = Group::heisenberg();
  Element const c = Element::heisenberg(0, 0, 1);
  std::mt19937_64                             rng(seed);
  std::uniform_int_distribution<int>          steps(1, 6), row(0, 1), mult(1, 3), sign(0, 1);
  std::uniform_int_distribution<std::int64_t> central(-5, 5);

  ExperimentReport r;
  r.name   = "center";
  r.seed   = seed;
  r.params = {{"samples", i64(samples)}};
  std::size_t failures = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    // Random unimodular matrix from elementary operations.
    std::int64_t m[2][2] = {{1, 0}, {0, 1}};
    for (int k = steps(rng); k > 0; --k) {
      int i = row(rng);
      if (sign(rng) && sign(rng)) {
        std::swap(m[0], m[1]);
        continue;
      }
      std::int64_t f = mult(rng) * (sign(rng) ? 1 : -1);
      m[i][0] += f * m[1 - i][0];
      m[i][1] += f * m[1 - i][1];
    }
    Element x = Element::heisenberg(m[0][0], m[1][0], central(rng));
    Element y = Element::heisenberg(m[0][1], m[1][1], central(rng));
    auto    e = heisenberg_center_certificate(x, y);
    std::vector<Element> letters{x, y};
    auto len = word_length(make_symmetric(H, letters), c, 4, options);
    bool ok  = (e == 1 || e == -1) && len.found() && *len.length <= 4;
    failures += ok ? 0 : 1;
    r.rows.push_back({{"sample", i64(n)}, {"x", format_element(H, x)}, {"y", format_element(H, y)},
                      {"exponent", e}, {"length", length_cell(len)}});
  }
  r.verdicts.push_back({"center.unit-commutator", failures == 0,
                        std::to_string(samples - failures) + " of " + std::to_string(samples)
                            + " pairs have [x,y] = c^±1 and l(c) <= 4"});
  return r;
}

ExperimentReport bound_witness_zxd8(std::size_t samples, std::uint64_t seed, std::int64_t radius,
                                    SearchOptions const& options) {
  if (radius < 1) {
    throw PreconditionError("sampling radius must be positive");
  }
  Group const   G = Group::product(Group::integers(), Group::dihedral(4));
  Element const z = Element::pair(Element::vector({0}), Element::dihedral(2, false));
  std::vector<Element> pool;
  for (std::int64_t k = -radius; k <= radius; ++k) {
    for (int rot = 0; rot < 4; ++rot) {
      for (bool refl : {false, true}) {
        Element x = Element::pair(Element::vector({k}), Element::dihedral(rot, refl));
        if (x != G.identity()) {
          pool.push_back(std::move(x));
        }
      }
    }
  }
  std::mt19937_64                            rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int>         count(2, 4);
  std::size_t const                          attempts_budget = 1000 * std::max<std::size_t>(samples, 1);

  ExperimentReport r;
  r.name   = "zxd8";
  r.seed   = seed;
  r.params = {{"samples", i64(samples)}, {"radius", radius}};
  std::size_t attempts = 0, rejected = 0, failures = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    while (true) {
      if (++attempts > attempts_budget) {
        throw ResourceError("sampler found no generating set within "
                                + std::to_string(attempts_budget) + " attempts",
                            0);
      }
      std::vector<Element> letters;
      for (int k = count(rng); k > 0; --k) {
        letters.push_back(pool[pick(rng)]);
      }
      GenSet s = make_symmetric(G, letters);
      if (generates(s, generation_budget).status != Generation::Yes) {
        ++rejected;
        continue;
      }
      auto len = word_length(s, z, 4, options);
      bool ok  = len.found() && *len.length <= 4;
      failures += ok ? 0 : 1;
      r.rows.push_back({{"sample", i64(n)}, {"genset", format_genset(s)},
                        {"length", length_cell(len)}});
      break;
    }
  }
  r.verdicts.push_back({"zxd8.bounded", failures == 0,
                        std::to_string(samples - failures) + " of " + std::to_string(samples)
                            + " sampled generating sets give l((0,r^2)) <= 4; "
                            + std::to_string(rejected) + " non-generating draws rejected"});
  return r;
}

////////////////////////////////////////////////////////////////////////
// Prescribed length
////////////////////////////////////////////////////////////////////////

namespace {

  void check_prescribe(std::int64_t l, std::int64_t u, std::int64_t v, std::int64_t n) {
    std::int64_t const p = 2 * l + 1;
    if (l < 0) {
      throw PreconditionError("l must be nonnegative");
    }
    if (!is_prime(u) || !is_prime(v) || u >= v) {
      throw PreconditionError("u < v must be primes");
    }
    if (u <= p) {
      throw PreconditionError("u must exceed p = 2l+1 = " + std::to_string(p));
    }
    if (v <= 3 * n * u) {
      throw PreconditionError("v must exceed 3Nu = " + std::to_string(3 * n * u));
    }
  }

  // Words u*a + v*b = 1 over the letters x^±u, x^±v.
  Word basis_witness(GenSet const& s, Group const& G, Element const& x, std::int64_t u,
                     std::int64_t v) {
    auto [a, b] = bezout(u, v);
    Word w;
    auto append = [&](std::int64_t exp, std::int64_t times) {
      auto id = s.find(G.power(x, exp * (times < 0 ? -1 : 1)));
      for (std::int64_t i = 0; i < std::abs(times); ++i) {
        w.push_back(*id);
      }
    };
    append(u, a);
    append(v, b);
    return w;
  }

  PrescribedLength finish_prescribe(GenSet s, std::int64_t p, std::int64_t l,
                                    std::vector<Word> const& supplied, Element const& g,
                                    SearchOptions const& options) {
    PrescribedLength out{std::move(s), p, {}, {}};
    out.generation = generates(out.genset, generation_budget, supplied);
    if (out.generation.status != Generation::Yes) {
      throw PreconditionError("constructed set does not generate: " + out.generation.details);
    }
    SearchOptions o = options;
    if (o.mode == SearchMode::Auto) {
      o.mode = SearchMode::Bidirectional;
    }
    out.length = word_length(out.genset, g, static_cast<std::size_t>(l + 2), o);
    return out;
  }

}  // namespace

PrescribedLength prescribe_length_free(std::size_t k, Element const& g, std::int64_t l,
                                       std::int64_t u, std::int64_t v,
                                       SearchOptions const& options) {
  Group const G = Group::free(k);
  G.require(g);
  if (g == G.identity()) {
    throw PreconditionError("g must be nontrivial");
  }
  auto const&  letters = g.as<nf::FreeWord>().letters;
  std::int64_t n = 0, run = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    run = i > 0 && letters[i] == letters[i - 1] ? run + 1 : 1;
    n   = std::max(n, run);
  }
  check_prescribe(l, u, v, n);
  std::int64_t const   p = 2 * l + 1;
  std::vector<Element> gens{G.power(g, 2), G.power(g, p)};
  for (std::size_t i = 1; i <= k; ++i) {
    Element x = Element::free_word({static_cast<int>(i)});
    gens.push_back(G.power(x, u));
    gens.push_back(G.power(x, v));
  }
  GenSet            s = make_symmetric(G, gens);
  std::vector<Word> supplied;
  for (std::size_t i = 1; i <= k; ++i) {
    supplied.push_back(basis_witness(s, G, Element::free_word({static_cast<int>(i)}), u, v));
  }
  return finish_prescribe(std::move(s), p, l, supplied, g, options);
}

PrescribedLength prescribe_length_zd(std::size_t d, Element const& g, std::int64_t l,
                                     std::int64_t u, std::int64_t v,
                                     SearchOptions const& options) {
  Group const G = Group::int_vector(d);
  G.require(g);
  if (g == G.identity()) {
    throw PreconditionError("g must be nonzero");
  }
  Integer n = 0;
  for (auto const& c : g.as<nf::Vector>().coords) {
    n = std::max(n, Integer(abs(c)));
  }
  check_prescribe(l, u, v, n.convert_to<std::int64_t>());
  std::int64_t const   p = 2 * l + 1;
  std::vector<Element> gens{G.power(g, 2), G.power(g, p)};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Integer> e(d, 0);
    e[i] = 1;
    Element x = Element::vector(e);
    gens.push_back(G.power(x, u));
    gens.push_back(G.power(x, v));
  }
  return finish_prescribe(make_symmetric(G, gens), p, l, {}, g, options);
}

std::vector<PrescribeTriple> const& default_prescribe_grid() {
  static std::vector<PrescribeTriple> const grid{
      {1, 5, 17}, {2, 7, 23}, {3, 11, 37}, {4, 11, 37}, {5, 13, 41}, {6, 17, 53}};
  return grid;
}

namespace {

  template <typename Build>
  ExperimentReport prescribe_experiment(std::string name, std::string claim, Group const& G,
                                        Element const& g, std::vector<PrescribeTriple> const& grid,
                                        Build&& build) {
    ExperimentReport r;
    r.name   = std::move(name);
    r.params = {{"group", format_group(G)}, {"g", format_element(G, g)}};
    std::size_t failures = 0;
    for (auto [l, u, v] : grid) {
      auto out   = build(l, u, v);
      bool match = out.length.found() && i64(*out.length.length) == l + 1;
      failures += match ? 0 : 1;
      r.rows.push_back({{"l", l}, {"u", u}, {"v", v}, {"p", out.p},
                        {"length", length_cell(out.length)}, {"expected", l + 1},
                        {"match", match},
                        {"witness", out.length.found()
                                        ? format_word(out.genset, out.length.witness)
                                        : std::string("none")}});
    }
    r.verdicts.push_back({claim, failures == 0 && !grid.empty(),
                          std::to_string(grid.size() - failures) + " of "
                              + std::to_string(grid.size()) + " parameter sets give length l+1"});
    return r;
  }

}  // namespace

ExperimentReport prescribe_free_experiment(std::size_t k, Element const& g,
                                           std::vector<PrescribeTriple> const& grid,
                                           SearchOptions const& options) {
  return prescribe_experiment("prescribe-free", "prescribe.free", Group::free(k), g, grid,
                              [&](std::int64_t l, std::int64_t u, std::int64_t v) {
                                return prescribe_length_free(k, g, l, u, v, options);
                              });
}

ExperimentReport prescribe_zd_experiment(std::size_t d, Element const& g,
                                         std::vector<PrescribeTriple> const& grid,
                                         SearchOptions const& options) {
  return prescribe_experiment("prescribe-zd", "prescribe.zd", Group::int_vector(d), g, grid,
                              [&](std::int64_t l, std::int64_t u, std::int64_t v) {
                                return prescribe_length_zd(d, g, l, u, v, options);
                              });
}

////////////////////////////////////////////////////////////////////////
// Finite groups
////////////////////////////////////////////////////////////////////////

ExperimentReport quotient_orbit_experiment(std::int64_t p, std::vector<std::int64_t> const& ks) {
  if (p < 3 || !is_prime(p)) {
    throw PreconditionError("p must be an odd prime");
  }
  if (ks.empty()) {
    throw PreconditionError("at least one k is required");
  }
  auto const   pi = QuotientMap::dihedral_reduce(p);
  IndexedGroup D(pi.target());
  Element const r = pi.apply(Element::dihedral(1, false));

  ExperimentReport res;
  res.name   = "quotient-orbit";
  res.params = {{"p", p}, {"ks", join(ks)}};
  std::set<std::size_t>  orbit;
  std::set<std::int64_t> units;
  bool                   all_valid = true;
  for (auto k : ks) {
    std::int64_t km = ((k % p) + p) % p;
    if (km == 0) {
      throw PreconditionError("k = " + std::to_string(k) + " is not a unit mod p");
    }
    units.insert(km);
    std::vector<std::size_t> images(D.size());
    for (std::size_t i = 0; i < D.size(); ++i) {
      auto const&  x = D.element(i).as<nf::Dihedral>();
      std::int64_t m = x.rotation.convert_to<std::int64_t>();
      images[i]      = D.index(Element::dihedral((km * m) % p, x.reflection));
    }
    bool valid = is_automorphism(D, images);
    all_valid  = all_valid && valid;
    std::size_t img = images[D.index(r)];
    orbit.insert(img);
    res.rows.push_back({{"k", k}, {"automorphism", valid},
                        {"image", format_element(D.group(), D.element(img))}});
  }
  bool        full  = i64(units.size()) == p - 1;
  std::string sizes = "orbit of r has " + std::to_string(orbit.size()) + " elements";
  if (full) {
    bool bound = 2 * i64(orbit.size()) >= p;
    res.verdicts.push_back({"quotient.orbit", all_valid && bound,
                            sizes + (bound ? " >= p/2" : " < p/2")
                                + (all_valid ? "; every map is an automorphism"
                                             : "; some map is not an automorphism")});
  } else {
    res.verdicts.push_back({"quotient.orbit", all_valid,
                            sizes + "; bound not asserted for a partial set of units"
                                + (all_valid ? "; every map is an automorphism"
                                             : "; some map is not an automorphism")});
  }
  return res;
}

ExperimentReport uniform_length_experiment(Group const& g) {
  IndexedGroup     G(g);
  ExperimentReport r;
  r.name   = "uniform";
  r.params = {{"group", format_group(g)}, {"order", i64(G.size())}};
  bool ok  = true;
  for (std::size_t i = 0; i < G.size(); ++i) {
    auto u = uniform_length_exact(G, G.element(i));
    auto c = word_length(u.argmax, G.element(i), G.size());
    ok     = ok && u.max_length <= G.size() && c.found() && *c.length == u.max_length;
    r.rows.push_back({{"element", format_element(g, G.element(i))},
                      {"max_length", i64(u.max_length)},
                      {"argmax", format_genset(u.argmax)},
                      {"generating_sets", i64(u.generating_sets)}});
  }
  r.verdicts.push_back({"uniform.exact", ok,
                        ok ? "every maximum is attained by its argmax and is at most |G|"
                           : "some maximum is inconsistent with its argmax"});
  return r;
}

ExperimentReport aut_orbit_experiment(std::vector<Group> const& groups) {
  ExperimentReport r;
  r.name = "aut-orbit";
  std::vector<std::string> names;
  std::size_t              failures = 0, checks = 0;
  for (auto const& g : groups) {
    names.push_back(format_group(g));
    IndexedGroup G(g);
    auto         auts = aut_group(G);
    for (std::size_t i = 0; i < G.size(); ++i) {
      auto c = aut_orbit_bound_check(G, G.element(i), auts);
      ++checks;
      failures += c.pass() ? 0 : 1;
      r.rows.push_back({{"group", format_group(g)}, {"element", format_element(g, G.element(i))},
                        {"automorphisms", i64(auts.size())}, {"orbit", i64(c.orbit.size())},
                        {"m", i64(c.bound_m)}, {"sets", i64(c.sets_checked)},
                        {"pass", c.pass()}});
    }
  }
  std::string list;
  for (std::size_t i = 0; i < names.size(); ++i) {
    list += (i ? ";" : "") + names[i];
  }
  r.params = {{"groups", list}};
  r.verdicts.push_back({"aut.orbit-bound", failures == 0,
                        std::to_string(checks - failures) + " of " + std::to_string(checks)
                            + " elements satisfy the orbit bound for every generating set"});
  return r;
}

ExperimentReport conjugacy_experiment(std::size_t radius, SearchOptions const& options) {
  Group const H = Group::heisenberg();
  Element const a = Element::heisenberg(1, 0, 0);
  Element const c = Element::heisenberg(0, 0, 1);
  ExperimentReport r;
  r.name   = "conjugacy";
  r.params = {{"radius", i64(radius)}};
  auto ga  = conjugacy_orbit_growth(H, a, radius, options);
  auto gc  = conjugacy_orbit_growth(H, c, radius, options);
  for (auto const& [label, growth] : {std::pair{"a", &ga}, std::pair{"c", &gc}}) {
    for (auto [rad, n] : *growth) {
      r.rows.push_back({{"element", std::string(label)}, {"r", i64(rad)}, {"count", i64(n)}});
    }
  }
  bool strict = !ga.empty();
  for (std::size_t i = 1; i < ga.size(); ++i) {
    strict = strict && ga[i].second > ga[i - 1].second;
  }
  bool one = std::all_of(gc.begin(), gc.end(), [](auto const& x) { return x.second == 1; });
  r.verdicts.push_back({"conjugacy.fc", strict && one,
                        std::string(strict ? "conjugates of a strictly increase"
                                           : "conjugates of a do not strictly increase")
                            + (one ? "; c has a single conjugate" : "; c has several conjugates")});
  return r;
}

}  // namespace wordbound
