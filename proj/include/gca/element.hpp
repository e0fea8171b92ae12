#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gca {

using Point = std::vector<std::int64_t>;

/// A group element: a Cayley-table index for finite groups or an integer
/// vector for Z^d. The owning Group decides how it is interpreted.
class Element {
 public:
  Element() = default;

  static Element index(std::size_t i) {
    Element e;
    e.coords_.push_back(static_cast<std::int64_t>(i));
    return e;
  }
  static Element point(Point coords) {
    Element e;
    e.coords_ = std::move(coords);
    return e;
  }
  static Element point(std::initializer_list<std::int64_t> coords) {
    return point(Point(coords));
  }

  std::size_t as_index() const { return static_cast<std::size_t>(coords_.at(0)); }
  const Point& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;

 private:
  Point coords_;
};

}  // namespace gca
