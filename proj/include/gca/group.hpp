#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gca/element.hpp"

namespace gca {

enum class Backend { FiniteCayley, FreeAbelian };

/// Immutable group handle. Finite groups are Cayley tables over indices
/// 0..n-1; free abelian groups Z^d use integer vectors with addition.
/// Copies share the underlying table.
class Group {
 public:
  /// Default associativity check bound for table-defined groups.
  static constexpr std::size_t kAssociativityCheckBound = 64;

  /// Validates Latin-square property, identity, inverses and (for
  /// n <= assoc_bound) associativity. The message names the first violation.
  static Group from_table(std::string name, std::size_t n, std::vector<int> table,
                          std::vector<std::string> labels = {},
                          std::size_t assoc_bound = kAssociativityCheckBound);
  static Group free_abelian(std::size_t rank);

  Backend backend() const noexcept;
  bool is_finite() const noexcept { return backend() == Backend::FiniteCayley; }
  const std::string& name() const noexcept;

  std::size_t order() const;  // finite only
  std::size_t rank() const;   // free abelian only

  // Finite fast path over table indices.
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int identity_index() const noexcept { return identity_; }
  std::size_t element_order(int a) const;
  const std::vector<int>& generator_indices() const;

  // Generic element interface.
  Element identity() const;
  Element mul(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  bool contains(const Element& a) const;
  /// Generating set: greedy over indices for finite groups, the standard
  /// basis for Z^d.
  std::vector<Element> generators() const;
  std::vector<Element> elements() const;  // finite only

  bool is_abelian() const;
  std::string format(const Element& a) const;

  friend bool operator==(const Group& a, const Group& b);

 private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl);

  std::shared_ptr<const Impl> impl_;
  // Cached from impl_ for the hot path.
  const int* table_ = nullptr;
  const int* inverse_ = nullptr;
  std::size_t n_ = 0;
  int identity_ = 0;
};

void check_same_group(const Group& a, const Group& b, const char* what);

}  // namespace gca
