// Text and JSON notation for groups, elements and generating sets.
//
// Groups:    Z | Z^d | Z/q | D2n (D8 has n = 4) | Dinf | H3 | F k | Fk
//            | table:<path.json> | A x B (left associative, parentheses allowed)
// Elements:  a flattened tuple of leaf components, e.g. "(5,1)" in Z x Z/2,
//            "(1,0)" = r in D8 (rotation, reflection flag), "(0,0,1)" = c in
//            H3, "x1*x2^-1" in F2, "e" for the free identity, table element
//            names (or indices) for table groups. Parentheses are optional
//            and may nest: "((1,2),3)" equals "(1,2,3)".
// Gensets:   "[(5,1),(3,0)]" or "[2,3]"; symmetrized on construction.
//
// Formatting always produces text that parses back to the same value.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wordbound/genset.hpp"

namespace wordbound {

/// Thrown for malformed notation; the CLI maps it to a usage error.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Group       parse_group(std::string_view text);
std::string format_group(Group const& g);

Element     parse_element(Group const& g, std::string_view text);
std::string format_element(Group const& g, Element const& x);

/// Elements listed in a genset literal, in order, before symmetrization.
std::vector<Element> parse_element_list(Group const& g, std::string_view text);
GenSet               parse_genset(Group const& g, std::string_view text);
std::string          format_genset(GenSet const& s);
std::string          format_word(GenSet const& s, Word const& w);

/// {"elements": [names], "table": [[indices]]}
CayleyTable load_cayley_table(std::string const& path);
CayleyTable cayley_table_from_json(nlohmann::json const& j);

/// {"family": "FiniteCyclic", "q": 5}, {"family": "Product", "left": .., "right": ..}
nlohmann::ordered_json group_to_json(Group const& g);
Group                  group_from_json(nlohmann::json const& j);

/// {"group": <descriptor>, "elements": ["(1,0)", ...]}
nlohmann::ordered_json genset_to_json(GenSet const& s);
GenSet                 genset_from_json(nlohmann::json const& j);

}  // namespace wordbound
