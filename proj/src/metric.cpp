#include "wordbound/metric.hpp"

#include <cstdlib>
#include <limits>

#include "wordbound/errors.hpp"

namespace wordbound {

std::size_t default_memory_limit() {
  if (char const* env = std::getenv("WORDBOUND_MEM_LIMIT")) {
    char*              end   = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return std::size_t{1} << 30;
}

namespace {

  // Rough per-entry cost of a hash node plus the order vector slot.
  constexpr std::size_t node_overhead = 64;

  using Table = std::unordered_map<Element, Ball::Entry, ElementHash>;

  class Explorer {
   public:
    Explorer(GenSet const& s, Element root, std::size_t& bytes, std::size_t limit)
        : s_(s), bytes_(bytes), limit_(limit) {
      insert(std::move(root), Ball::Entry{0, Ball::no_parent});
    }

    std::size_t radius() const noexcept {
      return radius_;
    }
    bool frontier_empty() const noexcept {
      return level_begin_ == order_.size();
    }
    std::size_t frontier_size() const noexcept {
      return order_.size() - level_begin_;
    }
    Table const& table() const noexcept {
      return table_;
    }
    std::vector<Element const*> const& order() const noexcept {
      return order_;
    }
    std::size_t level_begin() const noexcept {
      return level_begin_;
    }

    // Expands one full level; returns false when it added nothing.
    bool expand() {
      std::size_t const begin = level_begin_;
      std::size_t const end   = order_.size();
      auto const        next  = static_cast<std::uint32_t>(radius_ + 1);
      for (std::size_t id = 0; id < s_.size(); ++id) {
        Element const& letter = s_.letter(id);
        for (std::size_t k = begin; k < end; ++k) {
          Element y = s_.group().mul(*order_[k], letter);
          if (table_.count(y) == 0) {
            insert(std::move(y), Ball::Entry{next, static_cast<std::uint32_t>(id)});
          }
        }
      }
      level_begin_ = end;
      if (order_.size() == end) {
        return false;
      }
      ++radius_;
      return true;
    }

    // True when some frontier element has a neighbour not yet recorded.
    bool can_grow() const {
      for (std::size_t k = level_begin_; k < order_.size(); ++k) {
        for (auto const& letter : s_.letters()) {
          if (table_.count(s_.group().mul(*order_[k], letter)) == 0) {
            return true;
          }
        }
      }
      return false;
    }

    // Word w with root * w == x, following recorded parent letters.
    Word path(Element x) const {
      Word w;
      while (true) {
        auto const& entry = table_.at(x);
        if (entry.parent == Ball::no_parent) {
          break;
        }
        w.push_back(entry.parent);
        x = s_.group().mul(x, s_.letter(s_.inverse_of(entry.parent)));
      }
      return Word(w.rbegin(), w.rend());
    }

    Table                       take_table() && {
      return std::move(table_);
    }
    std::vector<Element const*> take_order() && {
      return std::move(order_);
    }

   private:
    void insert(Element x, Ball::Entry entry) {
      std::size_t cost = x.footprint() + node_overhead;
      if (bytes_ + cost > limit_) {
        throw ResourceError("search exceeded the memory budget of "
                                + std::to_string(limit_) + " bytes at radius "
                                + std::to_string(radius_ + 1),
                            radius_);
      }
      bytes_ += cost;
      auto it = table_.emplace(std::move(x), entry).first;
      order_.push_back(&it->first);
    }

    GenSet const&               s_;
    std::size_t&                bytes_;
    std::size_t                 limit_;
    Table                       table_;
    std::vector<Element const*> order_;
    std::size_t                 level_begin_ = 0;
    std::size_t                 radius_      = 0;
  };

}  // namespace

Ball::Ball(GenSet genset, std::size_t radius, SearchOptions const& options)
    : genset_(std::move(genset)), radius_(radius) {
  std::size_t bytes = 0;
  Explorer    ex(genset_, genset_.group().identity(), bytes, options.memory_limit);
  spheres_.push_back(1);
  while (ex.radius() < radius_) {
    std::size_t before = ex.order().size();
    if (!ex.expand()) {
      exhausted_ = true;
      break;
    }
    spheres_.push_back(ex.order().size() - before);
  }
  if (!exhausted_) {
    exhausted_ = !ex.can_grow();
  }
  spheres_.resize(radius_ + 1, 0);
  order_ = std::move(ex).take_order();
  table_ = std::move(ex).take_table();
}

std::optional<std::size_t> Ball::length(Element const& g) const {
  auto it = table_.find(g);
  if (it == table_.end()) {
    return std::nullopt;
  }
  return it->second.length;
}

Word Ball::geodesic(Element const& g) const {
  if (!contains(g)) {
    throw DomainError("element is outside the ball");
  }
  Word    w;
  Element x = g;
  while (true) {
    auto const& entry = table_.at(x);
    if (entry.parent == no_parent) {
      break;
    }
    w.push_back(entry.parent);
    x = genset_.group().mul(x, genset_.letter(genset_.inverse_of(entry.parent)));
  }
  return Word(w.rbegin(), w.rend());
}

namespace {

  LengthCert unidirectional(GenSet const& s, Element const& g, std::size_t cap,
                            std::size_t limit) {
    LengthCert  cert{g, std::nullopt, {}, cap, 0, false};
    std::size_t bytes = 0;
    Explorer    ex(s, s.group().identity(), bytes, limit);
    while (true) {
      if (ex.table().count(g) != 0) {
        cert.witness = ex.path(g);
        cert.length  = cert.witness.size();
        break;
      }
      if (ex.radius() >= cap || !ex.expand()) {
        break;
      }
    }
    cert.explored = ex.table().size();
    return cert;
  }

  LengthCert bidirectional(GenSet const& s, Element const& g, std::size_t cap,
                           std::size_t limit) {
    LengthCert  cert{g, std::nullopt, {}, cap, 0, true};
    std::size_t bytes = 0;
    Explorer    fwd(s, s.group().identity(), bytes, limit);
    // Rooted at g: an element m reached by word w satisfies m = g * w, so
    // the path from m to g spells the inverse of w.
    Explorer bwd(s, g, bytes, limit);

    if (fwd.table().count(g) != 0) {
      cert.length   = 0;
      cert.explored = 1;
      return cert;
    }
    while (fwd.radius() + bwd.radius() < cap) {
      bool const forward = fwd.frontier_size() <= bwd.frontier_size();
      Explorer&  grow    = forward ? fwd : bwd;
      Explorer&  other   = forward ? bwd : fwd;
      if (!grow.expand()) {
        break;  // the generated subgroup is finite and g lies outside it
      }
      Element const* meet = nullptr;
      std::size_t    best = std::numeric_limits<std::size_t>::max();
      for (std::size_t k = grow.level_begin(); k < grow.order().size(); ++k) {
        Element const* m  = grow.order()[k];
        auto           it = other.table().find(*m);
        if (it == other.table().end()) {
          continue;
        }
        std::size_t total = grow.radius() + it->second.length;
        if (total < best) {
          best = total;
          meet = m;
        }
      }
      if (meet) {
        Word u = fwd.path(*meet);
        Word w = s.inverse_word(bwd.path(*meet));
        u.insert(u.end(), w.begin(), w.end());
        cert.witness = std::move(u);
        cert.length  = best;
        break;
      }
    }
    cert.explored = fwd.table().size() + bwd.table().size();
    return cert;
  }

}  // namespace

LengthCert word_length(GenSet const& s, Element const& g, std::size_t cap,
                       SearchOptions const& options) {
  s.group().require(g);
  bool bidi = options.mode == SearchMode::Bidirectional
              || (options.mode == SearchMode::Auto && cap > 8
                  && !s.group().is_finite());
  return bidi ? bidirectional(s, g, cap, options.memory_limit)
              : unidirectional(s, g, cap, options.memory_limit);
}

std::vector<std::pair<std::string, LengthCert>> length_profile(
    std::vector<std::pair<std::string, GenSet>> const& family, Element const& g,
    std::size_t cap, SearchOptions const& options) {
  std::vector<std::pair<std::string, LengthCert>> out;
  out.reserve(family.size());
  for (auto const& [label, s] : family) {
    out.emplace_back(label, word_length(s, g, cap, options));
  }
  return out;
}

}  // namespace wordbound
