#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gca/element.hpp"
#include "gca/group.hpp"
#include "gca/homomorphism.hpp"
#include "gca/lattice.hpp"

namespace gca {

/// A subgroup of a finite group (sorted member indices) or of Z^d (an
/// echelon lattice basis). Carries its own relabelled Group so that
/// configurations over the subgroup are ordinary configurations.
class Subgroup {
 public:
  /// Members must form a subgroup; the error names the failing product.
  static Subgroup from_elements(const Group& parent, const std::vector<Element>& members);
  static Subgroup generated_by(const Group& parent, const std::vector<Element>& generators);
  static Subgroup trivial(const Group& parent);
  static Subgroup whole(const Group& parent);

  const Group& parent() const noexcept { return parent_; }
  bool is_finite() const noexcept { return parent_.is_finite(); }

  const std::vector<int>& indices() const;  // finite only
  std::vector<Element> elements() const;    // finite only
  const LatticeBasis& basis() const;        // Z^d only
  std::size_t order() const;
  std::size_t index_in_parent() const;
  bool is_normal() const noexcept { return normal_; }

  bool contains(const Element& g) const;
  bool contains(int g) const { return member_[static_cast<std::size_t>(g)] != 0; }
  bool is_subset_of(const Subgroup& other) const;

  /// The subgroup as a group in its own right: members relabelled 0..|K|-1
  /// in increasing parent index, or Z^rank in basis coordinates.
  const Group& as_group() const noexcept { return *local_; }
  Element to_parent(const Element& local) const;
  std::optional<Element> to_local(const Element& global) const;

  std::string describe() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  explicit Subgroup(Group parent) : parent_(std::move(parent)) {}
  void finish_finite();

  Group parent_;
  std::vector<int> indices_;
  std::vector<char> member_;
  std::vector<int> local_of_;  // parent index -> local index or -1
  LatticeBasis basis_;
  bool normal_ = true;
  std::shared_ptr<const Group> local_;
};

/// phi(K) as a subgroup of phi's codomain.
Subgroup image(const Homomorphism& phi, const Subgroup& k);
/// Full preimage phi^{-1}(L) for finite domains.
Subgroup preimage(const Homomorphism& phi, const Subgroup& l);

/// Every subgroup of a finite group (|G| <= 64), ordered by (order, members).
std::vector<Subgroup> all_subgroups(const Group& g);
std::vector<Subgroup> normal_subgroups(const Group& g);
Subgroup commutator_subgroup(const Group& g);

/// First k in K with phi(k) outside K, if any.
std::optional<Element> invariance_violation(const Subgroup& k, const Homomorphism& phi);
bool is_invariant_under(const Subgroup& k, const Homomorphism& phi);
/// phi(K) subset K for every phi in End(G); finite parents only.
bool is_fully_invariant(const Subgroup& k);

struct Quotient {
  Group group;
  Homomorphism projection;          // kind CanonicalProjection
  std::vector<int> representatives;  // least parent index in each coset
};

/// G/N for N normal in finite G; cosets are numbered by least member.
Quotient quotient_group(const Group& g, const Subgroup& n);

/// The endomorphism of G/N induced by phi; requires phi(N) subset N. The
/// relation rho o phi = phi_hat o rho is checked on all of G.
Homomorphism induced_endomorphism(const Homomorphism& phi, const Subgroup& n);
Homomorphism induced_endomorphism(const Homomorphism& phi, const Subgroup& n, const Quotient& q);

/// Domain and codomain restriction phi|_K^{phi(K)} between the local groups
/// of K and phi(K).
Homomorphism restrict_homomorphism(const Homomorphism& phi, const Subgroup& k);
Homomorphism restrict_homomorphism(const Homomorphism& phi, const Subgroup& k, const Subgroup& image_of_k);

}  // namespace gca
