#include "gca/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "gca/error.hpp"

namespace gca {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Point>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == rows, ErrorKind::InvalidArgument, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Point IntMatrix::column(std::size_t c) const {
  Point v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Point IntMatrix::apply(const Point& v) const {
  require(v.size() == cols_, ErrorKind::GroupMismatch, "matrix/vector dimension mismatch");
  Point out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool IntMatrix::is_zero() const {
  for (auto x : a_)
    if (x != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols_ == b.rows_, ErrorKind::GroupMismatch, "matrix product dimension mismatch");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::GroupMismatch,
          "matrix difference dimension mismatch");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

namespace {

void axpy(Point& y, std::int64_t a, const Point& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

bool is_zero(const Point& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

LatticeBasis lattice_basis(const std::vector<Point>& generators, std::size_t dim) {
  std::vector<Point> work;
  for (const auto& g : generators) {
    require(g.size() == dim, ErrorKind::InvalidArgument, "lattice generator has wrong dimension");
    if (!is_zero(g)) work.push_back(g);
  }
  LatticeBasis basis;
  basis.dim = dim;
  std::size_t next = 0;  // columns [next, end) are still unreduced
  for (std::size_t row = 0; row < dim && next < work.size(); ++row) {
    // Euclid on entries of this row across the remaining columns.
    for (;;) {
      std::size_t best = work.size();
      for (std::size_t c = next; c < work.size(); ++c) {
        if (work[c][row] == 0) continue;
        if (best == work.size() || std::llabs(work[c][row]) < std::llabs(work[best][row])) best = c;
      }
      if (best == work.size()) break;
      std::swap(work[next], work[best]);
      bool done = true;
      for (std::size_t c = next + 1; c < work.size(); ++c) {
        if (work[c][row] == 0) continue;
        axpy(work[c], -(work[c][row] / work[next][row]), work[next]);
        if (work[c][row] != 0) done = false;
      }
      if (done) break;
    }
    if (work[next][row] == 0) continue;
    if (work[next][row] < 0)
      for (auto& x : work[next]) x = -x;
    basis.pivot_rows.push_back(row);
    ++next;
    // Drop columns that became zero.
    std::vector<Point> kept(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(next));
    for (std::size_t c = next; c < work.size(); ++c)
      if (!is_zero(work[c])) kept.push_back(work[c]);
    work = std::move(kept);
  }
  work.resize(next);
  // Later columns vanish above their pivot; reduce earlier columns at later pivots.
  for (std::size_t j = 0; j < work.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const std::size_t r = basis.pivot_rows[j];
      const std::int64_t k = floor_div(work[i][r], work[j][r]);
      if (k != 0) axpy(work[i], -k, work[j]);
    }
  }
  basis.columns = std::move(work);
  return basis;
}

std::optional<Point> LatticeBasis::coordinates(const Point& v) const {
  require(v.size() == dim, ErrorKind::GroupMismatch, "point has wrong dimension");
  Point rest = v;
  Point coords(columns.size(), 0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const std::size_t r = pivot_rows[j];
    // Rows above r are already zero in rest for a member of the lattice.
    for (std::size_t i = (j == 0 ? 0 : pivot_rows[j - 1] + 1); i < r; ++i)
      if (rest[i] != 0) return std::nullopt;
    if (rest[r] % columns[j][r] != 0) return std::nullopt;
    coords[j] = rest[r] / columns[j][r];
    axpy(rest, -coords[j], columns[j]);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

Point LatticeBasis::reduce(const Point& v) const {
  require(is_full_rank(), ErrorKind::InvalidArgument, "reduction needs a full-rank lattice");
  require(v.size() == dim, ErrorKind::GroupMismatch, "point has wrong dimension");
  Point p = v;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const std::size_t r = pivot_rows[j];
    const std::int64_t k = floor_div(p[r], columns[j][r]);
    if (k != 0) axpy(p, -k, columns[j]);
  }
  return p;
}

std::size_t LatticeBasis::index() const {
  require(is_full_rank(), ErrorKind::InvalidArgument, "index of a lattice that is not full rank");
  std::size_t n = 1;
  for (std::size_t j = 0; j < columns.size(); ++j)
    n *= static_cast<std::size_t>(columns[j][pivot_rows[j]]);
  return n;
}

}  // namespace gca
