#include "wordbound/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordbound {

std::string scalar_text(Scalar const& v) {
  if (auto const* b = std::get_if<bool>(&v)) {
    return *b ? "true" : "false";
  }
  if (auto const* i = std::get_if<std::int64_t>(&v)) {
    return std::to_string(*i);
  }
  return std::get<std::string>(v);
}

bool ExperimentReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](Verdict const& v) { return v.pass; });
}

std::vector<Claim> const& claim_catalog() {
  static std::vector<Claim> const claims{
      {"zxzq.formula", "zxzq",
       "In Z x Z/q with S = {±(p,1), ±(q+1,0)} and p a prime above q+1, the "
       "element (0,1) has word length exactly p+q+1, so its length is unbounded "
       "over generating sets."},
      {"zd.growth", "zd",
       "In Z^d the generating sets {±(p,a,0,..), ±(q,b,0,..), ±e_3, .., ±e_d} "
       "with bp - aq = 1 give a fixed nonzero vector a length that grows along "
       "a ladder of coprime pairs (p,q)."},
      {"heisenberg.growth", "heisenberg",
       "In the Heisenberg group, S = {a^±p, a^±q, b^±1} with p, q coprime "
       "gives the central element c^n a length that grows with p."},
      {"heisenberg.control", "heisenberg",
       "With the standard generators a^±1, b^±1 the central generator c = [a,b] "
       "has word length 4."},
      {"dinfty.growth", "dinfty",
       "In the infinite dihedral group, S = {s, t^α s, t^β s} with α, β coprime "
       "generates, and the translation t gets a length that grows along a "
       "ladder of pairs."},
      {"center.unit-commutator", "center",
       "Any two elements x, y generating the Heisenberg group satisfy "
       "[x,y] = c^±1, so c has length at most 4 with respect to {x^±1, y^±1}."},
      {"zxd8.bounded", "zxd8",
       "In Z x D8 the central element (0, r^2) has word length at most 4 with "
       "respect to every symmetric generating set."},
      {"prescribe.free", "prescribe-free",
       "In the free group F_k, the generating set {g^±2, g^±p} together with "
       "{x_i^±u, x_i^±v}, p = 2l+1, u < v primes with u > p and v > 3Nu, "
       "gives g word length exactly l+1."},
      {"prescribe.zd", "prescribe-zd",
       "In Z^d, the generating set {±2g, ±pg} together with {±u e_i, ±v e_i}, "
       "p = 2l+1, u < v primes with u > p and v > 3Nu, gives g word length "
       "exactly l+1."},
      {"quotient.orbit", "quotient-orbit",
       "On the dihedral group D_2p (p an odd prime), every map r^m s^e -> "
       "r^(km) s^e with k a unit mod p is an automorphism, and the orbit of r "
       "under all of them has p-1 >= p/2 elements."},
      {"uniform.exact", "uniform",
       "In a finite group the supremum of l_S(g) over all symmetric generating "
       "sets S is finite; it is computed exactly by enumerating every S."},
      {"aut.orbit-bound", "aut-orbit",
       "If M bounds l_S(g) over all generating sets, then the automorphism "
       "orbit of g lies in the radius-M ball of every generating set S and has "
       "at most n^M elements, n = |S|."},
      {"conjugacy.fc", "conjugacy",
       "A non-central element of the Heisenberg group has infinitely many "
       "conjugates (the count over growing balls increases), while a central "
       "element has exactly one."},
  };
  return claims;
}

Claim const* find_claim(std::string_view id) {
  for (auto const& c : claim_catalog()) {
    if (c.id == id) {
      return &c;
    }
  }
  return nullptr;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") {
    return Format::Json;
  }
  if (name == "csv") {
    return Format::Csv;
  }
  if (name == "table") {
    return Format::Table;
  }
  return std::nullopt;
}

////////////////////////////////////////////////////////////////////////
// JSON
////////////////////////////////////////////////////////////////////////

namespace {

  nlohmann::ordered_json scalar_json(Scalar const& v) {
    return std::visit([](auto const& x) { return nlohmann::ordered_json(x); }, v);
  }

  Scalar json_scalar(nlohmann::ordered_json const& j) {
    if (j.is_boolean()) {
      return j.get<bool>();
    }
    if (j.is_number_integer()) {
      return j.get<std::int64_t>();
    }
    if (j.is_string()) {
      return j.get<std::string>();
    }
    throw std::invalid_argument("report values must be booleans, integers or strings");
  }

  nlohmann::ordered_json row_json(Row const& row) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (auto const& [k, v] : row) {
      j[k] = scalar_json(v);
    }
    return j;
  }

  Row json_row(nlohmann::ordered_json const& j) {
    if (!j.is_object()) {
      throw std::invalid_argument("report rows and params must be objects");
    }
    Row row;
    for (auto const& [k, v] : j.items()) {
      row.emplace_back(k, json_scalar(v));
    }
    return row;
  }

}  // namespace

nlohmann::ordered_json to_json(ExperimentReport const& r) {
  nlohmann::ordered_json j;
  j["name"]   = r.name;
  j["params"] = row_json(r.params);
  j["rows"]   = nlohmann::ordered_json::array();
  for (auto const& row : r.rows) {
    j["rows"].push_back(row_json(row));
  }
  j["verdicts"] = nlohmann::ordered_json::array();
  for (auto const& v : r.verdicts) {
    nlohmann::ordered_json o;
    o["claim"]   = v.claim;
    o["pass"]    = v.pass;
    o["details"] = v.details;
    j["verdicts"].push_back(std::move(o));
  }
  j["seed"]    = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  j["version"] = r.version;
  return j;
}

ExperimentReport report_from_json(nlohmann::ordered_json const& j) {
  try {
    ExperimentReport r;
    r.name   = j.at("name").get<std::string>();
    r.params = json_row(j.at("params"));
    for (auto const& row : j.at("rows")) {
      r.rows.push_back(json_row(row));
    }
    for (auto const& v : j.at("verdicts")) {
      r.verdicts.push_back(Verdict{v.at("claim").get<std::string>(), v.at("pass").get<bool>(),
                                   v.at("details").get<std::string>()});
    }
    if (!j.at("seed").is_null()) {
      r.seed = j.at("seed").get<std::uint64_t>();
    }
    r.version = j.at("version").get<std::string>();
    return r;
  } catch (nlohmann::json::exception const& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

ExperimentReport parse_report(std::string_view text) {
  try {
    return report_from_json(nlohmann::ordered_json::parse(text));
  } catch (nlohmann::json::exception const& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

////////////////////////////////////////////////////////////////////////
// Text renderings
////////////////////////////////////////////////////////////////////////

namespace {

  std::vector<std::string> columns(std::vector<Row> const& rows) {
    std::vector<std::string> cols;
    for (auto const& row : rows) {
      for (auto const& [k, v] : row) {
        if (std::find(cols.begin(), cols.end(), k) == cols.end()) {
          cols.push_back(k);
        }
      }
    }
    return cols;
  }

  std::string cell(Row const& row, std::string const& col) {
    for (auto const& [k, v] : row) {
      if (k == col) {
        return scalar_text(v);
      }
    }
    return "";
  }

  std::string csv_field(std::string const& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
      return s;
    }
    std::string out = "\"";
    for (char c : s) {
      out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
  }

  std::string render_csv(ExperimentReport const& r) {
    auto        cols = columns(r.rows);
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out += (i ? "," : "") + csv_field(cols[i]);
    }
    out += "\n";
    for (auto const& row : r.rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        out += (i ? "," : "") + csv_field(cell(row, cols[i]));
      }
      out += "\n";
    }
    return out;
  }

  std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ') {
      s.pop_back();
    }
    return s;
  }

  std::string render_table(ExperimentReport const& r) {
    std::string out = "experiment: " + r.name + "\n";
    for (auto const& [k, v] : r.params) {
      out += rstrip("  " + k + " = " + scalar_text(v)) + "\n";
    }
    if (r.seed) {
      out += "  seed = " + std::to_string(*r.seed) + "\n";
    }
    auto cols = columns(r.rows);
    if (cols.empty()) {
      out += "(no rows)\n";
    } else {
      std::vector<std::size_t> width(cols.size());
      for (std::size_t i = 0; i < cols.size(); ++i) {
        width[i] = cols[i].size();
        for (auto const& row : r.rows) {
          width[i] = std::max(width[i], cell(row, cols[i]).size());
        }
      }
      auto line = [&](auto const& get) {
        std::string s;
        for (std::size_t i = 0; i < cols.size(); ++i) {
          std::string c = get(i);
          s += c;
          if (i + 1 < cols.size()) {
            s += std::string(width[i] - c.size() + 2, ' ');
          }
        }
        return rstrip(s) + "\n";
      };
      out += line([&](std::size_t i) { return cols[i]; });
      for (auto const& row : r.rows) {
        out += line([&](std::size_t i) { return cell(row, cols[i]); });
      }
    }
    for (auto const& v : r.verdicts) {
      out += rstrip((v.pass ? "PASS " : "FAIL ") + v.claim + ": " + v.details) + "\n";
    }
    out += r.version + "\n";
    return out;
  }

}  // namespace

std::string render(ExperimentReport const& r, Format f) {
  switch (f) {
    case Format::Json:
      return to_json(r).dump(2) + "\n";
    case Format::Csv:
      return render_csv(r);
    case Format::Table:
      return render_table(r);
  }
  return "";
}

std::string render(std::vector<ExperimentReport> const& rs, Format f) {
  if (f == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (auto const& r : rs) {
      arr.push_back(to_json(r));
    }
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) {
      out += "\n";
    }
    if (f == Format::Csv) {
      out += "# " + rs[i].name + "\n";
    }
    out += render(rs[i], f);
  }
  return out;
}

}  // namespace wordbound
