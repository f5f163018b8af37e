#pragma once

// Smith normal form over the integers, exact arithmetic.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raag/error.hpp"

namespace raag {

using Integer = boost::multiprecision::cpp_int;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  // Throws InvalidInput on ragged input.
  static IntegerMatrix from_rows(std::vector<std::vector<Integer>> const& rows) {
    IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) {
        throw Error(ErrorKind::invalid_input, "matrix rows differ in length");
      }
      for (std::size_t j = 0; j < m.cols_; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer&       operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Integer const& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap((*this)(a, j), (*this)(b, j));
    }
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) {
      std::swap((*this)(i, a), (*this)(i, b));
    }
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, Integer const& q) {
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(dst, j) += q * (*this)(src, j);
    }
  }
  void add_col(std::size_t dst, std::size_t src, Integer const& q) {
    for (std::size_t i = 0; i < rows_; ++i) {
      (*this)(i, dst) += q * (*this)(i, src);
    }
  }

 private:
  std::size_t          rows_ = 0;
  std::size_t          cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  std::vector<Integer> invariants;  // d1 | d2 | ... | dr, all positive
  std::size_t          rank = 0;
};

inline SmithForm smith_normal_form(IntegerMatrix m) {
  auto const rows = m.rows();
  auto const cols = m.cols();
  SmithForm  out;

  // Smallest nonzero |entry| among the given cells.
  auto smallest = [&](auto&& cells) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (auto [i, j] : cells) {
      if (m(i, j) != 0
          && (!best || abs(m(i, j)) < abs(m(best->first, best->second)))) {
        best = std::make_pair(i, j);
      }
    }
    return best;
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        cells.emplace_back(i, j);
      }
    }
    auto pivot = smallest(cells);
    if (!pivot) {
      break;
    }
    m.swap_rows(t, pivot->first);
    m.swap_cols(t, pivot->second);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) != 0) {
          m.add_row(i, t, -(m(i, t) / m(t, t)));
          dirty = dirty || m(i, t) != 0;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) != 0) {
          m.add_col(j, t, -(m(t, j) / m(t, t)));
          dirty = dirty || m(t, j) != 0;
        }
      }
      if (dirty) {
        // A remainder is now smaller than the pivot; move it in and repeat.
        std::vector<std::pair<std::size_t, std::size_t>> cross{{t, t}};
        for (std::size_t i = t + 1; i < rows; ++i) {
          cross.emplace_back(i, t);
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          cross.emplace_back(t, j);
        }
        auto p = smallest(cross);
        m.swap_rows(t, p->first);
        m.swap_cols(t, p->second);
        continue;
      }
      // Row and column are clear. Enforce divisibility of the rest.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m(i, j) % m(t, t) != 0) {
            offender = i;
            break;
          }
        }
      }
      if (!offender) {
        break;
      }
      m.add_row(t, *offender, 1);
    }
    out.invariants.push_back(abs(m(t, t)));
    ++out.rank;
  }
  return out;
}

}  // namespace raag
