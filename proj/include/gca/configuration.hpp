#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gca/element.hpp"
#include "gca/group.hpp"
#include "gca/lattice.hpp"
#include "gca/subgroup.hpp"

namespace gca {

using Symbol = std::uint8_t;

/// Symbols 0..q-1 with q >= 2.
class Alphabet {
 public:
  explicit Alphabet(std::size_t q = 2);
  std::size_t size() const noexcept { return q_; }
  bool contains(std::size_t s) const noexcept { return s < q_; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::size_t q_;
};

/// A finite map from group elements to symbols.
using Pattern = std::map<Element, Symbol>;

/// x in A^G. Finite groups use a dense table; Z^d uses either a finitely
/// supported configuration (default symbol plus exceptions) or a periodic one
/// (full-rank period lattice plus a table over its echelon box).
class Configuration {
 public:
  struct Dense {
    std::vector<Symbol> values;
  };
  struct FiniteSupport {
    Symbol fallback = 0;
    std::map<Point, Symbol> support;  // never stores the fallback symbol
  };
  struct Periodic {
    LatticeBasis lattice;
    std::vector<Symbol> domain;  // indexed by box_index(lattice.reduce(p))
  };
  enum class Kind { Dense, FiniteSupport, Periodic };

  static Configuration dense(const Group& g, const Alphabet& a, std::vector<Symbol> values);
  static Configuration finite_support(const Group& g, const Alphabet& a, Symbol fallback,
                                      std::map<Point, Symbol> support = {});
  /// Lattice given by generators (rows); the table follows the echelon box of
  /// the lattice, first coordinate least significant.
  static Configuration periodic(const Group& g, const Alphabet& a, const std::vector<Point>& lattice_generators,
                                std::vector<Symbol> domain);
  /// Constant configuration: dense for finite groups, finite-support otherwise.
  static Configuration constant(const Group& g, const Alphabet& a, Symbol s);

  const Group& group() const noexcept { return group_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  Kind kind() const noexcept { return static_cast<Kind>(storage_.index()); }

  Symbol operator()(const Element& g) const;
  Symbol at(int g) const { return std::get<Dense>(storage_).values[static_cast<std::size_t>(g)]; }
  const std::vector<Symbol>& values() const;  // dense only
  const FiniteSupport& support() const;
  const Periodic& periodic_data() const;

  friend bool operator==(const Configuration& a, const Configuration& b);

 private:
  Configuration(Group g, Alphabet a) : group_(std::move(g)), alphabet_(a) {}

  Group group_;
  Alphabet alphabet_;
  std::variant<Dense, FiniteSupport, Periodic> storage_;
};

/// Index of a reduced point inside the echelon box of a full-rank lattice.
std::size_t box_index(const LatticeBasis& lattice, const Point& reduced);
Point box_point(const LatticeBasis& lattice, std::size_t index);

/// (g . x)(k) = x(g^{-1} k). Storage kind is preserved.
Configuration shift(const Element& g, const Configuration& x);
Symbol evaluate(const Configuration& x, const Element& g);
Pattern restrict(const Configuration& x, const std::vector<Element>& window);

/// x(h) == a exactly when h == g. Decided exactly for all storage kinds.
bool is_characteristic(const Configuration& x, const Element& g, Symbol a);

struct CharacteristicPatterns {
  std::vector<Pattern> patterns;
  /// True when the window is all of a finite group, so the patterns are
  /// complete configurations; otherwise cells off the window are free.
  bool complete = false;
};

/// Every pattern on the window taking value a exactly at g, in odometer order
/// over the window (first window cell least significant).
CharacteristicPatterns characteristic_configurations(const Group& group, const Alphabet& alphabet, const Element& g,
                                                     Symbol a, const std::vector<Element>& window);

/// (k g^{-1}) . chi; the input must be characteristic on g and the output is
/// checked to be characteristic on k.
Configuration translate_characteristic(const Configuration& chi, const Element& g, const Element& k);

/// Duplicate-free set of dense configurations over one finite group.
class ConfigSet {
 public:
  ConfigSet(Group g, Alphabet a) : group_(std::move(g)), alphabet_(a) {}
  void insert(std::vector<Symbol> values);
  bool contains(const Configuration& x) const;
  bool contains(const std::vector<Symbol>& values) const;
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<std::vector<Symbol>>& members() const noexcept { return members_; }
  const Group& group() const noexcept { return group_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

 private:
  Group group_;
  Alphabet alphabet_;
  std::vector<std::vector<Symbol>> members_;  // sorted
};

/// Fix(K): configurations constant on every right coset Kg.
ConfigSet fix_subgroup(const Subgroup& k, const Alphabet& a);

/// Exhaustive enumeration helpers for A^G with G finite.
std::size_t configuration_count(std::size_t cells, std::size_t q);
/// Odometer step (cell 0 least significant); false after the last value.
bool next_configuration(std::vector<Symbol>& values, std::size_t q);
std::size_t encode_configuration(const std::vector<Symbol>& values, std::size_t q);
std::vector<Symbol> decode_configuration(std::size_t index, std::size_t cells, std::size_t q);

// Text format: dense:[s0,...] | support:default=b;{p:s,...} | periodic:lattice=[[..],..];[s0,...]
Configuration parse_configuration(const std::string& text, const Group& g, const Alphabet& a);
std::string format_configuration(const Configuration& x);
std::string format_pattern(const Group& g, const Pattern& p);

}  // namespace gca
