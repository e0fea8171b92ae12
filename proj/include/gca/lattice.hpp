#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gca/element.hpp"

namespace gca {

/// Dense row-major integer matrix. Homomorphisms Z^e -> Z^d are d x e.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty = 0);
  static IntMatrix from_columns(const std::vector<Point>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Point column(std::size_t c) const;
  Point apply(const Point& v) const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> a_;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Column echelon basis of the lattice spanned by the given columns: each
/// basis column j has a positive pivot at row pivot_rows[j], zeros above it,
/// and pivot rows strictly increase. Entries left of a pivot are reduced into
/// [0, pivot).
struct LatticeBasis {
  std::size_t dim = 0;
  std::vector<Point> columns;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const noexcept { return columns.size(); }
  /// Integer coordinates of v in this basis if v lies in the lattice.
  std::optional<Point> coordinates(const Point& v) const;
  bool contains(const Point& v) const { return coordinates(v).has_value(); }
  /// Canonical representative of v modulo a full-rank lattice.
  Point reduce(const Point& v) const;
  /// Index |Z^d : L| for a full-rank lattice.
  std::size_t index() const;
  bool is_full_rank() const noexcept { return columns.size() == dim; }

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

LatticeBasis lattice_basis(const std::vector<Point>& generators, std::size_t dim);

}  // namespace gca
