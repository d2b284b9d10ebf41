#include "wordbound/notation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "wordbound/errors.hpp"

namespace wordbound {

namespace {

  std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
      ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
      --e;
    }
    return std::string(s.substr(b, e - b));
  }

  std::int64_t parse_small(std::string const& text, char const* what) {
    try {
      std::size_t pos   = 0;
      long long   value = std::stoll(text, &pos);
      if (pos != text.size()) {
        throw ParseError("");
      }
      return value;
    } catch (std::exception const&) {
      throw ParseError(std::string("bad ") + what + ": '" + text + "'");
    }
  }

  Integer parse_big(std::string const& text) {
    try {
      return parse_integer(trim(text));
    } catch (std::invalid_argument const&) {
      throw ParseError("bad integer: '" + text + "'");
    }
  }

  //////////////////////////////////////////////////////////////////////
  // Groups
  //////////////////////////////////////////////////////////////////////

  class GroupParser {
   public:
    explicit GroupParser(std::string_view text) {
      std::size_t i = 0;
      while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
        } else if (c == '(' || c == ')') {
          tokens_.emplace_back(1, c);
          ++i;
        } else {
          std::size_t j = i;
          while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))
                 && text[j] != '(' && text[j] != ')') {
            ++j;
          }
          tokens_.emplace_back(text.substr(i, j - i));
          i = j;
        }
      }
    }

    Group parse() {
      Group g = product();
      if (pos_ != tokens_.size()) {
        throw ParseError("unexpected '" + tokens_[pos_] + "' in group");
      }
      return g;
    }

   private:
    std::string const& peek() const {
      static std::string const end;
      return pos_ < tokens_.size() ? tokens_[pos_] : end;
    }

    std::string take() {
      if (pos_ >= tokens_.size()) {
        throw ParseError("group descriptor ends early");
      }
      return tokens_[pos_++];
    }

    Group product() {
      Group g = atom();
      while (peek() == "x") {
        ++pos_;
        g = Group::product(std::move(g), atom());
      }
      return g;
    }

    Group atom() {
      std::string t = take();
      if (t == "(") {
        Group g = product();
        if (take() != ")") {
          throw ParseError("missing ')' in group");
        }
        return g;
      }
      try {
        if (t == "Z") {
          return Group::integers();
        }
        if (t.rfind("Z^", 0) == 0) {
          return Group::int_vector(static_cast<std::size_t>(
              positive(t.substr(2), "dimension")));
        }
        if (t.rfind("Z/", 0) == 0) {
          return Group::finite_cyclic(positive(t.substr(2), "modulus"));
        }
        if (t == "Dinf") {
          return Group::infinite_dihedral();
        }
        if (t == "H3") {
          return Group::heisenberg();
        }
        if (t.size() > 1 && t[0] == 'D') {
          auto order = positive(t.substr(1), "dihedral order");
          if (order % 2 != 0) {
            throw ParseError("dihedral group order must be even: " + t);
          }
          return Group::dihedral(order / 2);
        }
        if (t == "F") {
          return Group::free(static_cast<std::size_t>(positive(take(), "free rank")));
        }
        if (t.size() > 1 && t[0] == 'F') {
          return Group::free(static_cast<std::size_t>(positive(t.substr(1), "free rank")));
        }
        if (t.rfind("table:", 0) == 0) {
          return Group::cayley_table(load_cayley_table(t.substr(6)));
        }
      } catch (PreconditionError const& e) {
        throw ParseError(e.what());
      }
      throw ParseError("unknown group '" + t + "'");
    }

    static std::int64_t positive(std::string const& s, char const* what) {
      auto v = parse_small(s, what);
      if (v < 1) {
        throw ParseError(std::string(what) + " must be positive");
      }
      return v;
    }

    std::vector<std::string> tokens_;
    std::size_t              pos_ = 0;
  };

  //////////////////////////////////////////////////////////////////////
  // Elements
  //////////////////////////////////////////////////////////////////////

  std::vector<std::string> flatten_tokens(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
      if (c != '(' && c != ')') {
        cleaned += c;
      }
    }
    std::vector<std::string> out;
    std::stringstream        ss(cleaned);
    std::string              item;
    while (std::getline(ss, item, ',')) {
      out.push_back(trim(item));
    }
    if (!cleaned.empty() && cleaned.back() == ',') {
      out.emplace_back();
    }
    for (auto const& t : out) {
      if (t.empty()) {
        throw ParseError("empty component in element '" + std::string(text) + "'");
      }
    }
    if (out.empty()) {
      throw ParseError("empty element");
    }
    return out;
  }

  Element parse_free(Group const& g, std::string const& text) {
    if (text == "e" || text == "1") {
      return g.identity();
    }
    std::vector<int>  letters;
    std::stringstream ss(text);
    std::string       part;
    while (std::getline(ss, part, '*')) {
      part = trim(part);
      if (part.size() < 2 || part[0] != 'x') {
        throw ParseError("bad free-group syllable '" + part + "'");
      }
      auto        caret = part.find('^');
      std::string index = part.substr(1, caret == std::string::npos ? std::string::npos
                                                                     : caret - 1);
      auto i = parse_small(index, "generator index");
      if (i < 1 || static_cast<std::size_t>(i) > g.rank()) {
        throw ParseError("generator x" + index + " outside " + g.name());
      }
      auto exponent = caret == std::string::npos
                          ? std::int64_t{1}
                          : parse_small(part.substr(caret + 1), "exponent");
      for (std::int64_t k = 0; k < std::abs(exponent); ++k) {
        letters.push_back(exponent < 0 ? -static_cast<int>(i) : static_cast<int>(i));
      }
    }
    return Element::free_word(letters);
  }

  Element parse_leaves(Group const& g, std::vector<std::string> const& t,
                       std::size_t& pos) {
    auto next = [&]() -> std::string const& {
      if (pos >= t.size()) {
        throw ParseError("element has too few components for " + g.name());
      }
      return t[pos++];
    };
    switch (g.family()) {
      case Family::FiniteCyclic:
        return Element::cyclic(
            floor_mod(parse_big(next()), g.modulus()).convert_to<std::int64_t>());
      case Family::IntVector: {
        std::vector<Integer> v;
        for (std::size_t i = 0; i < g.rank(); ++i) {
          v.push_back(parse_big(next()));
        }
        return Element::vector(std::move(v));
      }
      case Family::DihedralFinite:
      case Family::DihedralInfinite: {
        Integer k = parse_big(next());
        auto    e = parse_small(next(), "reflection flag");
        if (e != 0 && e != 1) {
          throw ParseError("reflection flag must be 0 or 1");
        }
        if (g.family() == Family::DihedralFinite) {
          k = floor_mod(k, g.modulus());
        }
        return Element::dihedral(k, e == 1);
      }
      case Family::Heisenberg: {
        Integer i = parse_big(next());
        Integer j = parse_big(next());
        Integer l = parse_big(next());
        return Element::heisenberg(i, j, l);
      }
      case Family::Free:
        return parse_free(g, next());
      case Family::Product: {
        Element a = parse_leaves(g.left(), t, pos);
        Element b = parse_leaves(g.right(), t, pos);
        return Element::pair(std::move(a), std::move(b));
      }
      case Family::CayleyTable: {
        std::string const& name = next();
        if (auto idx = g.table().index_of(name)) {
          return Element::table(*idx);
        }
        auto i = parse_small(name, "table element");
        if (i < 0 || static_cast<std::size_t>(i) >= g.table().size()) {
          throw ParseError("table element index out of range: " + name);
        }
        return Element::table(static_cast<std::size_t>(i));
      }
    }
    throw ParseError("unknown group family");
  }

  std::string format_free(nf::FreeWord const& w) {
    if (w.letters.empty()) {
      return "e";
    }
    std::string out;
    for (std::size_t i = 0; i < w.letters.size();) {
      std::size_t j = i;
      while (j < w.letters.size() && w.letters[j] == w.letters[i]) {
        ++j;
      }
      long long n = static_cast<long long>(j - i);
      int       x = w.letters[i];
      if (!out.empty()) {
        out += '*';
      }
      out += "x" + std::to_string(std::abs(x));
      if (x < 0 || n > 1) {
        out += "^" + std::to_string(x < 0 ? -n : n);
      }
      i = j;
    }
    return out;
  }

  void format_leaves(Group const& g, Element const& x, std::vector<std::string>& out) {
    switch (g.family()) {
      case Family::FiniteCyclic:
        out.push_back(std::to_string(x.as<nf::Cyclic>().residue));
        break;
      case Family::IntVector:
        for (auto const& c : x.as<nf::Vector>().coords) {
          out.push_back(to_string(c));
        }
        break;
      case Family::DihedralFinite:
      case Family::DihedralInfinite: {
        auto const& d = x.as<nf::Dihedral>();
        out.push_back(to_string(d.rotation));
        out.push_back(d.reflection ? "1" : "0");
        break;
      }
      case Family::Heisenberg: {
        auto const& h = x.as<nf::Heisenberg>();
        out.push_back(to_string(h.i));
        out.push_back(to_string(h.j));
        out.push_back(to_string(h.l));
        break;
      }
      case Family::Free:
        out.push_back(format_free(x.as<nf::FreeWord>()));
        break;
      case Family::Product:
        format_leaves(g.left(), x.left(), out);
        format_leaves(g.right(), x.right(), out);
        break;
      case Family::CayleyTable:
        out.push_back(g.table().name(x.as<nf::TableIndex>().index));
        break;
    }
  }

  std::vector<std::string> split_list(std::string_view text) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
      throw ParseError("generating set must be a bracketed list: '" + t + "'");
    }
    std::vector<std::string> items;
    std::string              cur;
    int                      depth = 0;
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
      char c = t[i];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        --depth;
      }
      if (c == ',' && depth == 0) {
        items.push_back(trim(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!trim(cur).empty() || !items.empty()) {
      items.push_back(trim(cur));
    }
    if (depth != 0) {
      throw ParseError("unbalanced parentheses in '" + t + "'");
    }
    return items;
  }

}  // namespace

Group parse_group(std::string_view text) {
  return GroupParser(text).parse();
}

std::string format_group(Group const& g) {
  return g.name();
}

Element parse_element(Group const& g, std::string_view text) {
  auto        tokens = flatten_tokens(text);
  std::size_t pos    = 0;
  Element     x;
  try {
    x = parse_leaves(g, tokens, pos);
  } catch (PreconditionError const& e) {
    throw ParseError(e.what());
  } catch (DomainError const& e) {
    throw ParseError(e.what());
  }
  if (pos != tokens.size()) {
    throw ParseError("element '" + std::string(text) + "' has too many components for "
                     + g.name());
  }
  return x;
}

std::string format_element(Group const& g, Element const& x) {
  std::vector<std::string> leaves;
  format_leaves(g, x, leaves);
  if (leaves.size() == 1) {
    return leaves[0];
  }
  std::string out = "(";
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    out += (i ? "," : "") + leaves[i];
  }
  return out + ")";
}

std::vector<Element> parse_element_list(Group const& g, std::string_view text) {
  std::vector<Element> out;
  for (auto const& item : split_list(text)) {
    out.push_back(parse_element(g, item));
  }
  if (out.empty()) {
    throw ParseError("generating set is empty");
  }
  return out;
}

GenSet parse_genset(Group const& g, std::string_view text) {
  auto elements = parse_element_list(g, text);
  try {
    return make_symmetric(g, elements);
  } catch (PreconditionError const& e) {
    throw ParseError(e.what());
  }
}

std::string format_genset(GenSet const& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + format_element(s.group(), s.letter(i));
  }
  return out + "]";
}

std::string format_word(GenSet const& s, Word const& w) {
  if (w.empty()) {
    return "e";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += (i ? " * " : "") + format_element(s.group(), s.letter(w[i]));
  }
  return out;
}

////////////////////////////////////////////////////////////////////////
// JSON
////////////////////////////////////////////////////////////////////////

CayleyTable cayley_table_from_json(nlohmann::json const& j) {
  try {
    auto names = j.at("elements").get<std::vector<std::string>>();
    auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    return CayleyTable(std::move(names), std::move(table));
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("bad Cayley table: ") + e.what());
  } catch (PreconditionError const& e) {
    throw ParseError(std::string("bad Cayley table: ") + e.what());
  }
}

CayleyTable load_cayley_table(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open Cayley table file '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (nlohmann::json::exception const& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return cayley_table_from_json(j);
}

nlohmann::ordered_json group_to_json(Group const& g) {
  nlohmann::ordered_json j;
  j["family"] = family_name(g.family());
  switch (g.family()) {
    case Family::FiniteCyclic:
      j["q"] = g.modulus();
      break;
    case Family::IntVector:
      j["d"] = g.rank();
      break;
    case Family::DihedralFinite:
      j["n"] = g.modulus();
      break;
    case Family::Free:
      j["k"] = g.rank();
      break;
    case Family::Product:
      j["left"]  = group_to_json(g.left());
      j["right"] = group_to_json(g.right());
      break;
    case Family::CayleyTable:
      j["elements"] = g.table().names();
      j["table"]    = g.table().rows();
      break;
    default:
      break;
  }
  return j;
}

Group group_from_json(nlohmann::json const& j) {
  try {
    auto f = j.at("family").get<std::string>();
    if (f == "FiniteCyclic") {
      return Group::finite_cyclic(j.at("q").get<std::int64_t>());
    }
    if (f == "IntVector") {
      return Group::int_vector(j.at("d").get<std::size_t>());
    }
    if (f == "DihedralFinite") {
      return Group::dihedral(j.at("n").get<std::int64_t>());
    }
    if (f == "DihedralInfinite") {
      return Group::infinite_dihedral();
    }
    if (f == "Heisenberg") {
      return Group::heisenberg();
    }
    if (f == "Free") {
      return Group::free(j.at("k").get<std::size_t>());
    }
    if (f == "Product") {
      return Group::product(group_from_json(j.at("left")), group_from_json(j.at("right")));
    }
    if (f == "CayleyTable") {
      return Group::cayley_table(cayley_table_from_json(j));
    }
    throw ParseError("unknown group family '" + f + "'");
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("bad group descriptor: ") + e.what());
  } catch (PreconditionError const& e) {
    throw ParseError(std::string("bad group descriptor: ") + e.what());
  }
}

nlohmann::ordered_json genset_to_json(GenSet const& s) {
  nlohmann::ordered_json j;
  j["group"] = group_to_json(s.group());
  auto& arr  = j["elements"] = nlohmann::ordered_json::array();
  for (auto const& x : s.letters()) {
    arr.push_back(format_element(s.group(), x));
  }
  return j;
}

GenSet genset_from_json(nlohmann::json const& j) {
  Group g = group_from_json(j.at("group"));
  std::vector<Element> elements;
  try {
    for (auto const& e : j.at("elements")) {
      elements.push_back(parse_element(g, e.get<std::string>()));
    }
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("bad generating set: ") + e.what());
  }
  if (elements.empty()) {
    throw ParseError("generating set is empty");
  }
  try {
    return make_symmetric(g, elements);
  } catch (PreconditionError const& e) {
    throw ParseError(e.what());
  }
}

}  // namespace wordbound
