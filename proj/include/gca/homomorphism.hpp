#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gca/element.hpp"
#include "gca/group.hpp"
#include "gca/lattice.hpp"

namespace gca {

/// A verified group homomorphism. Finite domains keep the full image table;
/// Z^e -> Z^d maps keep a d x e integer matrix.
class Homomorphism {
 public:
  enum class Kind { General, CanonicalProjection, Restriction };

  /// Extends images of domain.generators() to the whole (finite) domain.
  /// Throws if the assignment does not define a homomorphism.
  static Homomorphism from_generator_images(const Group& domain, const Group& codomain,
                                            const std::vector<Element>& images);
  /// Full image table over a finite domain, checked on all pairs.
  static Homomorphism from_table(const Group& domain, const Group& codomain,
                                 std::vector<Element> table, Kind kind = Kind::General);
  static Homomorphism from_matrix(const Group& domain, const Group& codomain, IntMatrix matrix);
  static Homomorphism identity(const Group& g);
  static Homomorphism trivial(const Group& domain, const Group& codomain);

  const Group& domain() const noexcept { return domain_; }
  const Group& codomain() const noexcept { return codomain_; }
  Kind kind() const noexcept { return kind_; }

  Element operator()(const Element& h) const;
  /// Finite-to-finite fast path.
  int operator()(int h) const { return index_table_[static_cast<std::size_t>(h)]; }
  const std::vector<int>& index_table() const;
  const std::vector<Element>& table() const;
  const IntMatrix& matrix() const;
  bool is_matrix() const noexcept { return !domain_.is_finite(); }
  bool finite_to_finite() const noexcept { return domain_.is_finite() && codomain_.is_finite(); }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_trivial() const;
  bool is_identity() const;

  /// Generator images, e.g. "1->2" or "[[2]]" for a matrix.
  std::string describe() const;

  friend bool operator==(const Homomorphism& a, const Homomorphism& b);
  /// Lexicographic on image tables / matrix entries.
  friend bool operator<(const Homomorphism& a, const Homomorphism& b);

 private:
  Homomorphism(Group domain, Group codomain) : domain_(std::move(domain)), codomain_(std::move(codomain)) {}
  static Homomorphism trusted_table(const Group& domain, const Group& codomain, std::vector<Element> table,
                                    Kind kind = Kind::General);
  friend Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

  Group domain_;
  Group codomain_;
  Kind kind_ = Kind::General;
  std::vector<Element> table_;
  std::vector<int> index_table_;
  IntMatrix matrix_;
};

/// outer o inner.
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

/// Hom(H, G) in canonical order. Finite H into Z^d yields the trivial map only.
/// Z^e -> Z^d needs an entry bound; without one this throws InfiniteFamily.
std::vector<Homomorphism> enumerate_homomorphisms(const Group& domain, const Group& codomain,
                                                  std::optional<std::int64_t> entry_bound = std::nullopt);
std::vector<Homomorphism> enumerate_endomorphisms(const Group& g,
                                                  std::optional<std::int64_t> entry_bound = std::nullopt);

}  // namespace gca
