#include "wordbound/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "wordbound/errors.hpp"
#include "wordbound/experiments.hpp"
#include "wordbound/girth.hpp"
#include "wordbound/metric.hpp"
#include "wordbound/notation.hpp"
#include "wordbound/smith.hpp"

namespace wordbound {

namespace {

  std::vector<std::string> split(std::string const& text, char sep) {
    std::vector<std::string> out;
    std::string              cur;
    std::istringstream       in(text);
    while (std::getline(in, cur, sep)) {
      out.push_back(cur);
    }
    return out;
  }

  std::int64_t to_int(std::string const& s) {
    std::size_t  used = 0;
    std::int64_t v    = 0;
    try {
      v = std::stoll(s, &used);
    } catch (std::exception const&) {
      throw ParseError("not an integer: '" + s + "'");
    }
    while (used < s.size() && s[used] == ' ') {
      ++used;
    }
    if (used != s.size()) {
      throw ParseError("not an integer: '" + s + "'");
    }
    return v;
  }

  std::vector<std::int64_t> int_list(std::string const& text) {
    std::vector<std::int64_t> out;
    for (auto const& part : split(text, ',')) {
      out.push_back(to_int(part));
    }
    if (out.empty()) {
      throw ParseError("empty integer list");
    }
    return out;
  }

  std::vector<IntPair> pair_list(std::string const& text) {
    std::vector<IntPair> out;
    for (auto const& part : split(text, ';')) {
      auto xs = int_list(part);
      if (xs.size() != 2) {
        throw ParseError("expected a pair 'a,b' but got '" + part + "'");
      }
      out.emplace_back(xs[0], xs[1]);
    }
    return out;
  }

  std::vector<PrescribeTriple> triple_list(std::string const& text) {
    std::vector<PrescribeTriple> out;
    for (auto const& part : split(text, ';')) {
      auto xs = int_list(part);
      if (xs.size() != 3) {
        throw ParseError("expected a triple 'l,u,v' but got '" + part + "'");
      }
      out.emplace_back(xs[0], xs[1], xs[2]);
    }
    return out;
  }

  std::vector<Group> group_list(std::string const& text) {
    std::vector<Group> out;
    for (auto const& part : split(text, ';')) {
      out.push_back(parse_group(part));
    }
    return out;
  }

  SearchOptions search_options(std::string const& mode) {
    SearchOptions o;
    if (mode == "unidirectional") {
      o.mode = SearchMode::Unidirectional;
    } else if (mode == "bidirectional") {
      o.mode = SearchMode::Bidirectional;
    }
    return o;
  }

  // Writes to --output when given, otherwise to `out`.
  void emit(std::string const& text, std::string const& path, std::ostream& out) {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      throw PreconditionError("cannot write " + path);
    }
    f << text;
  }

  std::string dump(nlohmann::ordered_json const& j) {
    return j.dump(2) + "\n";
  }

  nlohmann::ordered_json word_json(GenSet const& s, Word const& w) {
    return format_word(s, w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Experiment registry
  ////////////////////////////////////////////////////////////////////////

  std::string const default_pairs = "2,3;3,5;5,7";

  std::vector<ExperimentEntry> build_registry() {
    std::vector<ExperimentEntry> r{
        {"aut-orbit", "automorphism orbits inside balls of the uniform radius", {"aut.orbit-bound"},
         [](std::uint64_t) {
           return aut_orbit_experiment(
               {Group::finite_cyclic(5), Group::finite_cyclic(8), Group::dihedral(4)});
         }},
        {"center", "commutators of generating pairs of the Heisenberg group",
         {"center.unit-commutator"},
         [](std::uint64_t seed) { return heisenberg_center_experiment(100, seed); }},
        {"conjugacy", "conjugacy-class growth over balls in the Heisenberg group",
         {"conjugacy.fc"}, [](std::uint64_t) { return conjugacy_experiment(4); }},
        {"dinfty", "length of the translation in the infinite dihedral group", {"dinfty.growth"},
         [](std::uint64_t) { return unbounded_witness_dinfty(pair_list(default_pairs)); }},
        {"heisenberg", "length of a central element in the Heisenberg group",
         {"heisenberg.growth", "heisenberg.control"},
         [](std::uint64_t) { return unbounded_witness_heisenberg(1, pair_list(default_pairs)); }},
        {"prescribe-free", "generating sets of a free group with prescribed length",
         {"prescribe.free"},
         [](std::uint64_t) {
           return prescribe_free_experiment(2, Element::free_word({1}),
                                            default_prescribe_grid());
         }},
        {"prescribe-zd", "generating sets of Z^d with prescribed length", {"prescribe.zd"},
         [](std::uint64_t) {
           return prescribe_zd_experiment(2, Element::vector({1, 0}), default_prescribe_grid());
         }},
        {"quotient-orbit", "power maps on finite dihedral quotients", {"quotient.orbit"},
         [](std::uint64_t) { return quotient_orbit_experiment(5, {1, 2, 3, 4}); }},
        {"uniform", "exact uniform word length in D8", {"uniform.exact"},
         [](std::uint64_t) { return uniform_length_experiment(Group::dihedral(4)); }},
        {"zd", "length of a fixed vector in Z^d under sheared bases", {"zd.growth"},
         [](std::uint64_t) {
           return unbounded_witness_zd(2, Element::vector({1, 0}), pair_list(default_pairs));
         }},
        {"zxd8", "length of the central element of Z x D8 over sampled generating sets",
         {"zxd8.bounded"}, [](std::uint64_t seed) { return bound_witness_zxd8(200, seed, 10); }},
        {"zxzq", "length of (0,1) in Z x Z/q", {"zxzq.formula"},
         [](std::uint64_t) { return unbounded_witness_zxzq(2, {5, 7, 11}); }},
    };
    std::sort(r.begin(), r.end(), [](auto const& a, auto const& b) { return a.name < b.name; });
    return r;
  }

  ExperimentEntry const& registry_entry(std::string const& name) {
    for (auto const& e : experiment_registry()) {
      if (e.name == name) {
        return e;
      }
    }
    throw PreconditionError("unknown experiment '" + name + "'");
  }

  std::string explain(std::vector<std::string> const& names) {
    std::string text;
    for (auto const& name : names) {
      auto const& e = registry_entry(name);
      text += e.name + ": " + e.summary + "\n";
      for (auto const& id : e.claims) {
        text += "  " + id + ": " + std::string(find_claim(id)->statement) + "\n";
      }
    }
    return text;
  }

}  // namespace

std::vector<ExperimentEntry> const& experiment_registry() {
  static std::vector<ExperimentEntry> const r = build_registry();
  return r;
}

std::vector<ExperimentReport> run_experiments(std::vector<std::string> const& names,
                                              unsigned jobs, std::uint64_t seed) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  std::vector<ExperimentEntry const*> entries;
  for (auto const& n : sorted) {
    entries.push_back(&registry_entry(n));
  }
  std::vector<ExperimentReport>   reports(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t>        next{0};
  auto                            worker = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      try {
        reports[i] = entries[i]->run_default(seed);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned const           n = std::max(1u, std::min<unsigned>(jobs, entries.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }
  for (auto const& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return reports;
}

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word length, girth and bound experiments on finitely generated groups",
               "wordbound"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "wordbound 1.0.0");

  std::vector<std::string> const op_formats{"table", "json"};
  std::vector<std::string> const modes{"auto", "unidirectional", "bidirectional"};

  struct {
    std::string group, genset, element, word, mode = "auto", format = "table", output, matrix;
    std::size_t cap = 32, radius = 3;
    std::int64_t budget = 16;
    bool         witness = false;
  } o;

  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group, "group, e.g. 'Z x Z/2', D8, H3, 'F 2'")->required();
  };
  auto add_genset = [&](CLI::App* c) {
    c->add_option("--genset", o.genset, "generating elements, e.g. '[(5,1),(3,0)]'")->required();
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(op_formats))
        ->capture_default_str();
    c->add_option("--output", o.output, "write output to this file");
  };

  auto* length = app.add_subcommand("length", "word length of an element");
  add_group(length);
  add_genset(length);
  length->add_option("--element", o.element, "element")->required();
  length->add_option("--cap", o.cap, "largest length searched")->capture_default_str();
  length->add_option("--mode", o.mode, "search direction")
      ->check(CLI::IsMember(modes))
      ->capture_default_str();
  length->add_flag("--witness", o.witness, "also print a geodesic word");
  add_format(length);

  auto* girth_cmd = app.add_subcommand("girth", "girth of a Cayley graph up to a cap");
  add_group(girth_cmd);
  add_genset(girth_cmd);
  girth_cmd->add_option("--cap", o.cap, "largest cycle length searched")->capture_default_str();
  girth_cmd->add_flag("--witness", o.witness, "also print a shortest relation");
  add_format(girth_cmd);

  auto* ball_cmd = app.add_subcommand("ball", "ball and sphere sizes");
  add_group(ball_cmd);
  add_genset(ball_cmd);
  ball_cmd->add_option("--radius", o.radius, "radius")->capture_default_str();
  add_format(ball_cmd);

  auto* order = app.add_subcommand("order", "order of an element");
  add_group(order);
  order->add_option("--element", o.element, "element")->required();
  order->add_option("--cap", o.cap, "largest finite order searched")->capture_default_str();
  add_format(order);

  auto* gen = app.add_subcommand("generates", "decide whether a set generates the group");
  add_group(gen);
  add_genset(gen);
  gen->add_option("--budget", o.budget, "word-search budget")->capture_default_str();
  add_format(gen);

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", o.matrix, "rows as JSON, e.g. '[[2,4],[6,8]]'")->required();
  add_format(snf);

  auto* loop = app.add_subcommand("loop", "check that a torsion element gives a simple loop");
  add_group(loop);
  add_genset(loop);
  loop->add_option("--element", o.element, "torsion element")->required();
  loop->add_option("--word", o.word, "symbol ids of a word for the element; default geodesic");
  add_format(loop);

  // Experiments
  struct {
    std::string format = "table", output, primes = "5,7,11", pairs = default_pairs, x = "(1,0)",
                ks, grid, g, groups = "Z/5;Z/8;D8", group = "D8";
    std::int64_t  q = 2, n = 1, radius = 10, p = 5;
    std::size_t   d = 2, k = 2, samples = 0, conj_radius = 4;
    std::uint64_t seed    = default_seed;
    unsigned      jobs    = 1;
    bool          explain = false;
  } e;
  std::vector<std::string> const exp_formats{"table", "json", "csv"};
  auto* exp = app.add_subcommand("experiment", "run a bound experiment and report verdicts");
  exp->fallthrough();
  exp->require_subcommand(1);
  exp->add_option("--format", e.format, "report format")
      ->check(CLI::IsMember(exp_formats))
      ->capture_default_str();
  exp->add_option("--output", e.output, "write the report to this file");
  exp->add_option("--seed", e.seed, "seed for sampled experiments")->capture_default_str();
  exp->add_option("--jobs", e.jobs, "worker threads for 'all'")->capture_default_str();
  exp->add_flag("--explain", e.explain, "describe the checked claims and exit");

  auto* x_zxzq = exp->add_subcommand("zxzq", "length of (0,1) in Z x Z/q");
  x_zxzq->add_option("--q", e.q, "torsion order")->capture_default_str();
  x_zxzq->add_option("--primes", e.primes, "primes above q+1")->capture_default_str();

  auto* x_zd = exp->add_subcommand("zd", "length of a vector under sheared bases of Z^d");
  x_zd->add_option("--d", e.d, "dimension")->capture_default_str();
  x_zd->add_option("--x", e.x, "tracked vector")->capture_default_str();
  x_zd->add_option("--pairs", e.pairs, "coprime pairs 'p,q;p,q'")->capture_default_str();

  auto* x_heis = exp->add_subcommand("heisenberg", "length of c^n in the Heisenberg group");
  x_heis->add_option("--n", e.n, "power of c")->capture_default_str();
  x_heis->add_option("--pairs", e.pairs, "coprime pairs 'p,q;p,q'")->capture_default_str();

  auto* x_dinf = exp->add_subcommand("dinfty", "length of t in the infinite dihedral group");
  x_dinf->add_option("--pairs", e.pairs, "coprime pairs 'a,b;a,b'")->capture_default_str();

  auto* x_center = exp->add_subcommand("center", "commutators of Heisenberg generating pairs");
  x_center->add_option("--samples", e.samples, "number of pairs (default 100)");

  auto* x_zxd8 = exp->add_subcommand("zxd8", "central element of Z x D8 over sampled sets");
  x_zxd8->add_option("--samples", e.samples, "number of generating sets (default 200)");
  x_zxd8->add_option("--radius", e.radius, "bound on the Z coordinate of pool elements")
      ->capture_default_str();

  auto* x_pfree = exp->add_subcommand("prescribe-free", "prescribed length in a free group");
  x_pfree->add_option("--k", e.k, "rank")->capture_default_str();
  x_pfree->add_option("--g", e.g, "element (default x1)");
  x_pfree->add_option("--grid", e.grid, "triples 'l,u,v;l,u,v'");

  auto* x_pzd = exp->add_subcommand("prescribe-zd", "prescribed length in Z^d");
  x_pzd->add_option("--d", e.d, "dimension")->capture_default_str();
  x_pzd->add_option("--g", e.g, "element (default e_1)");
  x_pzd->add_option("--grid", e.grid, "triples 'l,u,v;l,u,v'");

  auto* x_quot = exp->add_subcommand("quotient-orbit", "power maps on D_2p");
  x_quot->add_option("--p", e.p, "odd prime")->capture_default_str();
  x_quot->add_option("--ks", e.ks, "units mod p (default all)");

  auto* x_unif = exp->add_subcommand("uniform", "exact uniform word length in a finite group");
  x_unif->add_option("--group", e.group, "finite group of order at most 16")
      ->capture_default_str();

  auto* x_aut = exp->add_subcommand("aut-orbit", "automorphism orbits and ball radii");
  x_aut->add_option("--groups", e.groups, "finite groups 'G;G'")->capture_default_str();

  auto* x_conj = exp->add_subcommand("conjugacy", "conjugacy growth in the Heisenberg group");
  x_conj->add_option("--radius", e.conj_radius, "largest radius")->capture_default_str();

  auto* x_all = exp->add_subcommand("all", "every experiment with default parameters");

  std::vector<char const*> argv{"wordbound"};
  for (auto const& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& ex) {
    return app.exit(ex, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (exp->parsed()) {
      Format const fmt = *parse_format(e.format);
      std::string  name;
      for (auto* sub : exp->get_subcommands()) {
        name = sub->get_name();
      }
      if (e.explain) {
        std::vector<std::string> names;
        if (name == "all") {
          for (auto const& entry : experiment_registry()) {
            names.push_back(entry.name);
          }
        } else {
          names.push_back(name);
        }
        emit(explain(names), e.output, out);
        return exit_ok;
      }
      std::vector<ExperimentReport> reports;
      if (x_all->parsed()) {
        std::vector<std::string> names;
        for (auto const& entry : experiment_registry()) {
          names.push_back(entry.name);
        }
        reports = run_experiments(names, e.jobs, e.seed);
      } else if (x_zxzq->parsed()) {
        reports.push_back(unbounded_witness_zxzq(e.q, int_list(e.primes)));
      } else if (x_zd->parsed()) {
        Group G = Group::int_vector(e.d);
        reports.push_back(unbounded_witness_zd(e.d, parse_element(G, e.x), pair_list(e.pairs)));
      } else if (x_heis->parsed()) {
        reports.push_back(unbounded_witness_heisenberg(e.n, pair_list(e.pairs)));
      } else if (x_dinf->parsed()) {
        reports.push_back(unbounded_witness_dinfty(pair_list(e.pairs)));
      } else if (x_center->parsed()) {
        reports.push_back(heisenberg_center_experiment(e.samples ? e.samples : 100, e.seed));
      } else if (x_zxd8->parsed()) {
        reports.push_back(bound_witness_zxd8(e.samples ? e.samples : 200, e.seed, e.radius));
      } else if (x_pfree->parsed()) {
        Group G = Group::free(e.k);
        reports.push_back(prescribe_free_experiment(
            e.k, parse_element(G, e.g.empty() ? "x1" : e.g),
            e.grid.empty() ? default_prescribe_grid() : triple_list(e.grid)));
      } else if (x_pzd->parsed()) {
        Group                G = Group::int_vector(e.d);
        std::vector<Integer> unit(e.d, 0);
        unit[0] = 1;
        reports.push_back(prescribe_zd_experiment(
            e.d, e.g.empty() ? Element::vector(unit) : parse_element(G, e.g),
            e.grid.empty() ? default_prescribe_grid() : triple_list(e.grid)));
      } else if (x_quot->parsed()) {
        std::vector<std::int64_t> ks;
        if (e.ks.empty()) {
          for (std::int64_t k = 1; k < e.p; ++k) {
            ks.push_back(k);
          }
        } else {
          ks = int_list(e.ks);
        }
        reports.push_back(quotient_orbit_experiment(e.p, ks));
      } else if (x_unif->parsed()) {
        reports.push_back(uniform_length_experiment(parse_group(e.group)));
      } else if (x_aut->parsed()) {
        reports.push_back(aut_orbit_experiment(group_list(e.groups)));
      } else if (x_conj->parsed()) {
        reports.push_back(conjugacy_experiment(e.conj_radius));
      }
      emit(reports.size() == 1 ? render(reports[0], fmt) : render(reports, fmt), e.output, out);
      bool pass = std::all_of(reports.begin(), reports.end(),
                              [](ExperimentReport const& r) { return r.passed(); });
      return pass ? exit_ok : exit_failed;
    }

    bool const json = o.format == "json";
    if (snf->parsed()) {
      auto      rows = nlohmann::json::parse(o.matrix);
      IntMatrix m;
      if (!rows.is_array() || rows.empty() || !rows[0].is_array()) {
        throw ParseError("matrix must be a nonempty array of rows");
      }
      m = IntMatrix(rows.size(), rows[0].size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != m.cols()) {
          throw ParseError("matrix rows must have equal length");
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (!rows[i][j].is_number_integer()) {
            throw ParseError("matrix entries must be integers");
          }
          m(i, j) = Integer(rows[i][j].get<std::int64_t>());
        }
      }
      auto                     form = smith_normal_form(m);
      std::vector<std::string> factors;
      for (auto const& f : form.invariant_factors()) {
        factors.push_back(to_string(f));
      }
      if (json) {
        nlohmann::ordered_json j;
        j["invariant_factors"] = factors;
        j["diagonal"]          = form.diagonal.str();
        emit(dump(j), o.output, out);
      } else {
        std::string line;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          line += (i ? " " : "") + factors[i];
        }
        emit(line + "\n", o.output, out);
      }
      return exit_ok;
    }

    Group const G = parse_group(o.group);

    if (order->parsed()) {
      auto        x  = parse_element(G, o.element);
      auto        ord = G.element_order(x, o.cap);
      std::string text = ord.is_finite() ? std::to_string(ord.value)
                         : ord.kind == ElementOrder::Kind::Infinite ? "infinite"
                                                                    : "> " + std::to_string(o.cap);
      if (json) {
        nlohmann::ordered_json j;
        j["element"] = format_element(G, x);
        j["order"]   = text;
        emit(dump(j), o.output, out);
      } else {
        emit(text + "\n", o.output, out);
      }
      return exit_ok;
    }

    GenSet const s = parse_genset(G, o.genset);

    if (length->parsed()) {
      auto x = parse_element(G, o.element);
      auto c = word_length(s, x, o.cap, search_options(o.mode));
      std::string text = c.found() ? std::to_string(*c.length) : "> " + std::to_string(o.cap);
      if (json) {
        nlohmann::ordered_json j;
        j["element"] = format_element(G, x);
        j["genset"]  = format_genset(s);
        j["cap"]     = o.cap;
        j["length"]  = c.found() ? nlohmann::ordered_json(*c.length) : nlohmann::ordered_json();
        j["witness"] = c.found() ? word_json(s, c.witness) : nlohmann::ordered_json();
        emit(dump(j), o.output, out);
      } else {
        if (o.witness && c.found()) {
          text += "\nwitness: " + format_word(s, c.witness);
        }
        emit(text + "\n", o.output, out);
      }
      return exit_ok;
    }

    if (girth_cmd->parsed()) {
      auto res = girth(s, o.cap);
      if (json) {
        nlohmann::ordered_json j;
        j["genset"]  = format_genset(s);
        j["cap"]     = o.cap;
        j["girth"]   = res.value ? nlohmann::ordered_json(*res.value) : nlohmann::ordered_json();
        j["witness"] = res.value ? word_json(s, res.witness) : nlohmann::ordered_json();
        emit(dump(j), o.output, out);
      } else {
        std::string text = res.str();
        if (o.witness && res.value) {
          text += "\nwitness: " + format_word(s, res.witness);
        }
        emit(text + "\n", o.output, out);
      }
      return exit_ok;
    }

    if (ball_cmd->parsed()) {
      Ball b(s, o.radius);
      if (json) {
        nlohmann::ordered_json j;
        j["genset"]    = format_genset(s);
        j["radius"]    = o.radius;
        j["size"]      = b.size();
        j["spheres"]   = b.sphere_sizes();
        j["exhausted"] = b.exhausted();
        emit(dump(j), o.output, out);
      } else {
        std::string text = "size " + std::to_string(b.size()) + "\nspheres";
        for (auto n : b.sphere_sizes()) {
          text += " " + std::to_string(n);
        }
        emit(text + "\n", o.output, out);
      }
      return exit_ok;
    }

    if (gen->parsed()) {
      auto cert = generates(s, o.budget);
      if (json) {
        nlohmann::ordered_json j;
        j["genset"]  = format_genset(s);
        j["status"]  = to_string(cert.status);
        j["method"]  = cert.method;
        j["details"] = cert.details;
        emit(dump(j), o.output, out);
      } else {
        emit(to_string(cert.status) + " (" + cert.method + "): " + cert.details + "\n", o.output,
             out);
      }
      return exit_ok;
    }

    if (loop->parsed()) {
      auto x = parse_element(G, o.element);
      Word w;
      if (o.word.empty()) {
        auto ord = G.element_order(x, LoopVerdict::order_cap);
        auto c   = word_length(s, x, ord.is_finite() ? ord.value : o.cap);
        if (!c.found()) {
          throw ResourceError("no word for the element within the search cap", o.cap);
        }
        w = c.witness;
      } else {
        for (auto id : int_list(o.word)) {
          if (id < 0 || static_cast<std::size_t>(id) >= s.size()) {
            throw ParseError("symbol id " + std::to_string(id) + " is out of range");
          }
          w.push_back(static_cast<std::size_t>(id));
        }
      }
      auto v = simple_loop_check(s, x, w);
      if (json) {
        nlohmann::ordered_json j;
        j["element"] = format_element(G, x);
        j["word"]    = format_word(s, w);
        j["simple"]  = v.simple;
        j["order"]   = v.order;
        j["length"]  = v.length;
        j["reason"]  = v.reason;
        emit(dump(j), o.output, out);
      } else {
        emit(v.simple ? "simple loop of length " + std::to_string(v.length) + "\n"
                      : "not a simple loop: " + v.reason + "\n",
             o.output, out);
      }
      return v.simple ? exit_ok : exit_failed;
    }
  } catch (ResourceError const& ex) {
    err << "wordbound: resource limit: " << ex.what() << " (explored radius "
        << ex.partial_radius() << ")\n";
    return exit_resource;
  } catch (nlohmann::json::exception const& ex) {
    err << "wordbound: " << ex.what() << "\n";
    return exit_usage;
  } catch (std::invalid_argument const& ex) {
    err << "wordbound: " << ex.what() << "\n";
    return exit_usage;
  } catch (std::domain_error const& ex) {
    err << "wordbound: " << ex.what() << "\n";
    return exit_usage;
  } catch (UnsupportedError const& ex) {
    err << "wordbound: " << ex.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace wordbound
