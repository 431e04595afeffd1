#pragma once

#include <optional>
#include <vector>

#include "core/rational.hpp"

namespace valkit {

// Dense exact rational matrices. Everything here runs on matrices of the
// ambient fan dimension (at most 4 in practice), so plain Gauss-Jordan
// without any cleverness is the right tool.
struct MatQ {
  std::size_t rows = 0, cols = 0;
  std::vector<Rat> a;  // row major

  MatQ() = default;
  MatQ(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rat& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static MatQ identity(std::size_t n);
  static MatQ from_columns(const std::vector<std::vector<Rat>>& cols);
  static MatQ from_int_columns(
      const std::vector<std::vector<std::int64_t>>& cols);

  MatQ transpose() const;
};

Rat det(const MatQ& m);
// Inverse of a square matrix; nullopt when singular.
std::optional<MatQ> inverse(const MatQ& m);
// Solve m * x = b for square m; nullopt when singular.
std::optional<std::vector<Rat>> solve(const MatQ& m,
                                      const std::vector<Rat>& b);

std::vector<Rat> mat_vec(const MatQ& m, const std::vector<Rat>& x);

}  // namespace valkit
