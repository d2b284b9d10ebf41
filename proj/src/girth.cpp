#include "wordbound/girth.hpp"

#include <unordered_set>

#include "wordbound/errors.hpp"

namespace wordbound {

Word cyclic_reduce(GenSet const& s, Word const& w) {
  Word out;
  for (auto id : w) {
    if (id >= s.size()) {
      throw DomainError("word uses unknown symbol id " + std::to_string(id));
    }
    if (!out.empty() && out.back() == s.inverse_of(id)) {
      out.pop_back();
    } else {
      out.push_back(id);
    }
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[hi - 1] == s.inverse_of(out[lo])) {
    ++lo;
    --hi;
  }
  return Word(out.begin() + static_cast<std::ptrdiff_t>(lo),
              out.begin() + static_cast<std::ptrdiff_t>(hi));
}

bool is_cyclically_reduced(GenSet const& s, Word const& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= s.size()) {
      return false;
    }
    if (i + 1 < w.size() && w[i + 1] == s.inverse_of(w[i])) {
      return false;
    }
  }
  return w.size() < 2 || w.back() != s.inverse_of(w.front());
}

bool is_simple_loop(GenSet const& s, Word const& w) {
  if (w.empty()) {
    return false;
  }
  Group const&                             G = s.group();
  Element                                  v = G.identity();
  std::unordered_set<Element, ElementHash> seen{v};
  for (std::size_t k = 0; k < w.size(); ++k) {
    v = G.mul(v, s.letter(w[k]));
    if (k + 1 == w.size()) {
      return v == G.identity();
    }
    if (!seen.insert(v).second) {
      return false;
    }
  }
  return false;
}

std::string GirthResult::str() const {
  return value ? std::to_string(*value) : "> " + std::to_string(cap);
}

GirthResult girth(GenSet const& s, std::size_t cap, SearchOptions const& options) {
  if (cap < 2) {
    throw PreconditionError("girth cap must be at least 2");
  }
  GirthResult result;
  result.cap = cap;
  Ball const  b(s, (cap + 1) / 2, options);

  auto const&  order  = b.elements();
  std::size_t  offset = 0;
  for (std::size_t i = 0; 2 * i + 1 <= cap && !result.value; ++i) {
    if (i >= b.sphere_sizes().size()) {
      break;
    }
    std::size_t const count = b.sphere_sizes()[i];
    for (std::size_t k = offset; k < offset + count; ++k) {
      Element const& x = *order[k];
      for (std::size_t id = 0; id < s.size(); ++id) {
        Element const y     = s.group().mul(x, s.letter(id));
        auto const*   entry = b.entry(y);
        if (!entry) {
          continue;
        }
        std::size_t candidate;
        if (entry->length == i) {
          candidate = 2 * i + 1;
        } else if (entry->length == i + 1 && entry->parent != id) {
          candidate = 2 * i + 2;
        } else {
          continue;
        }
        if (candidate > cap || (result.value && *result.value <= candidate)) {
          continue;
        }
        Word w = b.geodesic(x);
        w.push_back(id);
        Word back = s.inverse_word(b.geodesic(y));
        w.insert(w.end(), back.begin(), back.end());
        result.value   = candidate;
        result.witness = std::move(w);
      }
    }
    offset += count;
  }
  return result;
}

namespace {

  struct Deepening {
    GenSet const& s;
    std::size_t   target;
    Word          word;

    bool search(Element const& current) {
      if (word.size() == target) {
        return current == s.group().identity()
               && (target < 2 || word.back() != s.inverse_of(word.front()));
      }
      for (std::size_t id = 0; id < s.size(); ++id) {
        if (!word.empty() && id == s.inverse_of(word.back())) {
          continue;
        }
        word.push_back(id);
        if (search(s.group().mul(current, s.letter(id)))) {
          return true;
        }
        word.pop_back();
      }
      return false;
    }
  };

}  // namespace

GirthResult girth_by_deepening(GenSet const& s, std::size_t cap) {
  if (cap < 2) {
    throw PreconditionError("girth cap must be at least 2");
  }
  GirthResult result;
  result.cap = cap;
  for (std::size_t n = 1; n <= cap; ++n) {
    Deepening d{s, n, {}};
    if (d.search(s.group().identity())) {
      result.value   = n;
      result.witness = std::move(d.word);
      break;
    }
  }
  return result;
}

LoopVerdict simple_loop_check(GenSet const& s, Element const& g, Word const& w) {
  Group const& G = s.group();
  if (s.evaluate(w) != g) {
    throw DomainError("word does not evaluate to the given element");
  }
  auto ord = G.element_order(g, LoopVerdict::order_cap);
  if (!ord.is_finite()) {
    throw PreconditionError("element is not torsion (or its order exceeds "
                            + std::to_string(LoopVerdict::order_cap) + ")");
  }
  LoopVerdict v;
  v.order   = ord.value;
  v.reduced = cyclic_reduce(s, w);
  if (v.reduced.empty()) {
    v.reason = "cyclic reduction is the empty word";
    return v;
  }
  std::size_t const                        total = v.order * v.reduced.size();
  Element                                  x     = G.identity();
  std::unordered_set<Element, ElementHash> seen{x};
  for (std::size_t k = 1; k <= total; ++k) {
    x = G.mul(x, s.letter(v.reduced[(k - 1) % v.reduced.size()]));
    if (k == total) {
      break;
    }
    if (!seen.insert(x).second) {
      v.reason = "walk revisits a vertex after " + std::to_string(k) + " of "
                 + std::to_string(total) + " steps";
      return v;
    }
  }
  if (x != G.identity()) {
    v.reason = "walk does not return to the identity";
    return v;
  }
  v.simple = true;
  v.length = total;
  return v;
}

}  // namespace wordbound
