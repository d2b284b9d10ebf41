// Exact integer arithmetic used by every group family.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace wordbound {

using Integer = boost::multiprecision::cpp_int;

/// Mathematical modulus: result lies in [0, m) for m > 0.
Integer floor_mod(Integer const& a, Integer const& m);

Integer gcd(Integer const& a, Integer const& b);

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(Integer const& a,
                                                   Integer const& b);

std::optional<std::int64_t> to_int64(Integer const& value);

/// Throws std::overflow_error when the value does not fit.
std::int64_t checked_int64(Integer const& value);

std::string to_string(Integer const& value);

/// Parses an optionally signed decimal literal; throws std::invalid_argument.
Integer parse_integer(std::string const& text);

std::size_t hash_integer(Integer const& value) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t value) noexcept {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

bool is_prime(std::uint64_t n);

}  // namespace wordbound
