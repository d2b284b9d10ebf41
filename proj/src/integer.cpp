#include "wordbound/integer.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

namespace wordbound {

Integer floor_mod(Integer const& a, Integer const& m) {
  Integer r = a % m;
  if (r < 0) {
    r += m;
  }
  return r;
}

Integer gcd(Integer const& a, Integer const& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

std::tuple<Integer, Integer, Integer> extended_gcd(Integer const& a,
                                                   Integer const& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

std::optional<std::int64_t> to_int64(Integer const& value) {
  if (value < std::numeric_limits<std::int64_t>::min()
      || value > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return value.convert_to<std::int64_t>();
}

std::int64_t checked_int64(Integer const& value) {
  auto v = to_int64(value);
  if (!v) {
    throw std::overflow_error("integer " + to_string(value)
                              + " does not fit in 64 bits");
  }
  return *v;
}

std::string to_string(Integer const& value) {
  return value.str();
}

Integer parse_integer(std::string const& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("expected an integer, got '" + text + "'");
  }
  Integer result = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("expected an integer, got '" + text + "'");
    }
    result = result * 10 + (c - '0');
  }
  return negative ? Integer(-result) : result;
}

std::size_t hash_integer(Integer const& value) noexcept {
  if (auto small = to_int64(value)) {
    return std::hash<std::int64_t>{}(*small);
  }
  std::size_t seed = value.sign() < 0 ? 1 : 0;
  auto const& backend = value.backend();
  for (std::size_t i = 0; i < backend.size(); ++i) {
    hash_combine(seed, static_cast<std::size_t>(backend.limbs()[i]));
  }
  return seed;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace wordbound
