#include "wordbound/smith.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "wordbound/errors.hpp"

namespace wordbound {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (auto const& row : rows) {
    if (row.size() != cols_) {
      throw PreconditionError("ragged matrix literal");
    }
    for (auto x : row) {
      data_.emplace_back(x);
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::operator*(IntMatrix const& other) const {
  if (cols_ != other.rows_) {
    throw PreconditionError("matrix dimension mismatch in product");
  }
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Integer const& a = (*this)(i, k);
      if (a == 0) {
        continue;
      }
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out(i, j) += a * other(k, j);
      }
    }
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    std::swap((*this)(a, j), (*this)(b, j));
  }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    std::swap((*this)(i, a), (*this)(i, b));
  }
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, Integer const& factor) {
  for (std::size_t j = 0; j < cols_; ++j) {
    (*this)(dst, j) += factor * (*this)(src, j);
  }
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, Integer const& factor) {
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, dst) += factor * (*this)(i, src);
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) {
    (*this)(i, j) = -(*this)(i, j);
  }
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) {
    throw PreconditionError("determinant of a non-square matrix");
  }
  std::size_t const n = rows_;
  if (n == 0) {
    return 1;
  }
  IntMatrix a = *this;
  Integer   sign = 1;
  Integer   prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : ",[");
    for (std::size_t j = 0; j < cols_; ++j) {
      os << (j == 0 ? "" : ",") << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  std::size_t const    n = std::min(diagonal.rows(), diagonal.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(diagonal(i, i));
  }
  return out;
}

namespace {

  // Pivot search over the trailing submatrix: least nonzero absolute value.
  bool find_pivot(IntMatrix const& d, std::size_t t, std::size_t& pi,
                  std::size_t& pj) {
    bool    found = false;
    Integer best;
    for (std::size_t i = t; i < d.rows(); ++i) {
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d(i, j) == 0) {
          continue;
        }
        Integer a = abs(d(i, j));
        if (!found || a < best) {
          found = true;
          best  = a;
          pi    = i;
          pj    = j;
        }
      }
    }
    return found;
  }

}  // namespace

SmithForm smith_normal_form(IntMatrix const& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw PreconditionError("Smith normal form of an empty matrix");
  }
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = f.diagonal;
  IntMatrix& u = f.left;
  IntMatrix& v = f.right;

  std::size_t const n = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(d, t, pi, pj)) {
      break;
    }
    while (true) {
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) {
          continue;
        }
        Integer q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        dirty = dirty || d(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) {
          continue;
        }
        Integer q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        dirty = dirty || d(t, j) != 0;
      }
      if (dirty) {
        // A remainder is smaller than the pivot; restart with it.
        find_pivot(d, t, pi, pj);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the rest.
      bool fixed = true;
      for (std::size_t i = t + 1; i < d.rows() && fixed; ++i) {
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            fixed = false;
            break;
          }
        }
      }
      if (fixed) {
        break;
      }
      pi = t;
      pj = t;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return f;
}

bool verify_smith_form(IntMatrix const& m, SmithForm const& form) {
  if (form.left.rows() != m.rows() || form.right.cols() != m.cols()) {
    return false;
  }
  if (form.left * m * form.right != form.diagonal) {
    return false;
  }
  auto const& d = form.diagonal;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) {
        return false;
      }
    }
  }
  auto f = form.invariant_factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0) {
      return false;
    }
    if (i + 1 < f.size()) {
      if (f[i] == 0 ? f[i + 1] != 0 : f[i + 1] % f[i] != 0) {
        return false;
      }
    }
  }
  return abs(form.left.determinant()) == 1 && abs(form.right.determinant()) == 1;
}

}  // namespace wordbound
