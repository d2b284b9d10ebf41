#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "wordbound/integer.hpp"

namespace wordbound {

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept {
    return rows_;
  }
  std::size_t cols() const noexcept {
    return cols_;
  }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  Integer const& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix operator*(IntMatrix const& other) const;
  bool operator==(IntMatrix const&) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, Integer const& factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, Integer const& factor);
  void negate_row(std::size_t i);

  /// Exact determinant (fraction-free Bareiss elimination); square only.
  Integer determinant() const;

  std::string str() const;

 private:
  std::size_t          rows_ = 0;
  std::size_t          cols_ = 0;
  std::vector<Integer> data_;
};

/// `left * input * right == diagonal`, with unimodular `left` and `right`,
/// nonnegative diagonal entries d_1 | d_2 | ... (trailing zeros last).
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;

  /// The min(rows, cols) diagonal entries.
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(IntMatrix const& m);

/// Recomputes left * m * right and checks the diagonal shape, divisibility
/// chain and unimodularity. Used to re-validate certificates.
bool verify_smith_form(IntMatrix const& m, SmithForm const& form);

}  // namespace wordbound
