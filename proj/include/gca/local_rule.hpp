#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gca/configuration.hpp"
#include "gca/element.hpp"
#include "gca/group.hpp"

namespace gca {

/// Largest table a rule may hold (q^|T| entries).
inline constexpr std::size_t kMaxRuleTable = std::size_t{1} << 24;

/// A local function mu : A^T -> A over an ordered memory set T.
///
/// Patterns are encoded in mixed radix with the first memory element as the
/// least significant digit: index = sum_i p(t_i) q^i.
class LocalRule {
 public:
  LocalRule(Group group, Alphabet alphabet, std::vector<Element> memory, std::vector<Symbol> table);

  static LocalRule identity(const Group& g, const Alphabet& a);
  static LocalRule read_at(const Group& g, const Alphabet& a, const Element& t);
  static LocalRule constant(const Group& g, const Alphabet& a, Symbol c, std::vector<Element> memory = {});
  /// Sum of all memory cells modulo q (XOR for q = 2).
  static LocalRule sum_mod_q(const Group& g, const Alphabet& a, std::vector<Element> memory);
  static LocalRule from_function(const Group& g, const Alphabet& a, std::vector<Element> memory,
                                 const std::function<Symbol(std::span<const Symbol>)>& mu);

  const Group& group() const noexcept { return group_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Element>& memory() const noexcept { return memory_; }
  const std::vector<Symbol>& table() const noexcept { return table_; }
  std::size_t pattern_count() const noexcept { return table_.size(); }

  Symbol operator()(std::size_t pattern_index) const { return table_[pattern_index]; }
  Symbol operator()(std::span<const Symbol> digits) const { return table_[encode(digits)]; }
  Symbol operator()(const Pattern& p) const;
  std::size_t encode(std::span<const Symbol> digits) const;
  std::vector<Symbol> decode(std::size_t pattern_index) const;

  bool is_constant() const;
  /// Invariant under every permutation of the memory cells.
  bool is_symmetric() const;
  /// Positions i such that two patterns differing only at i have different values.
  std::vector<std::size_t> essential_positions() const;
  /// Re-index the table onto a subset of positions; every essential position
  /// must be kept.
  LocalRule project(const std::vector<std::size_t>& positions) const;
  LocalRule minimized() const;
  /// Minimized with memory sorted; two rules define the same function on A^G
  /// iff their canonical forms are equal.
  LocalRule canonical() const;
  /// Extend the memory with cells the rule ignores.
  LocalRule extended(const std::vector<Element>& extra) const;

  friend bool operator==(const LocalRule& a, const LocalRule& b);

 private:
  Group group_;
  Alphabet alphabet_;
  std::vector<Element> memory_;
  std::vector<Symbol> table_;
};

}  // namespace gca
