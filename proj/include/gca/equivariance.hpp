#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gca/automaton.hpp"
#include "gca/configuration.hpp"
#include "gca/homomorphism.hpp"
#include "gca/subgroup.hpp"

namespace gca {

/// {psi(h)^{-1} phi(h) : h in H}.
struct DifferenceSet {
  bool finite = true;
  std::vector<Element> elements;  // sorted; only when finite
  /// Infinite case over Z^e -> Z^d: an index j with (phi - psi) e_j != 0.
  std::optional<std::size_t> direction;
  bool is_trivial() const { return finite && elements.size() == 1; }
};

DifferenceSet difference_set(const Homomorphism& phi, const Homomorphism& psi);

/// First r = n v, n = 1, -1, 2, -2, ..., with (r + T) disjoint from T. The
/// bad multiples lie in T - T, so at most |T|^2 + 1 candidates are tried.
std::int64_t find_disjoint_multiple(const Group& g, const Element& v, const std::vector<Element>& t);
Element find_disjoint_translate(const Group& g, const Element& v, const std::vector<Element>& t);
/// First r of an explicit candidate list with rT disjoint from T.
std::optional<Element> find_disjoint_translate(const Group& g, const std::vector<Element>& candidates,
                                               const std::vector<Element>& t);

enum class EquivarianceMethod { IdenticalHomomorphism, ConstantRule, Exhaustive, DisjointTranslate };
std::string to_string(EquivarianceMethod m);

struct EquivarianceWitness {
  Element h;
  Configuration x;
  Symbol value_phi = 0;  // value of the phi-automaton at h
  Symbol value_psi = 0;  // value of the psi-automaton with the same rule at h
};

struct EquivarianceVerdict {
  bool equivariant = false;
  EquivarianceMethod method = EquivarianceMethod::Exhaustive;
  std::optional<EquivarianceWitness> witness;
  /// Witness checked again with reference_evaluate.
  bool reverified = false;
};

/// Whether the automaton is also a psi-cellular automaton, i.e. equals
/// psi^* o tau for its own local rule.
EquivarianceVerdict decide_equivariance(const Gca& t, const Homomorphism& psi);

/// Every psi in Hom(H, G) for which t is psi-equivariant; finite groups only.
std::vector<Homomorphism> uhp_scan(const Gca& t);

struct SymmetricCounterexample {
  bool exists = false;
  std::string reason;  // set when no counterexample exists
  std::optional<Subgroup> memory;  // the subgroup generated by the difference set
  std::optional<Gca> tau;          // identity homomorphism, sum mod q over memory
  bool verified = false;           // phi^* o tau == psi^* o tau checked
};

/// A non-constant tau with phi^* o tau = psi^* o tau, built from the subgroup
/// generated by the difference set and the sum-mod-q rule.
SymmetricCounterexample symmetric_counterexample(const Homomorphism& phi, const Homomorphism& psi,
                                                 const Alphabet& a);

/// Sufficient criterion: the rule is symmetric and every difference d fixes
/// the memory set (d T = T). False means the criterion does not apply.
bool symmetric_equivariance_check(const Gca& t, const Homomorphism& psi);

struct CharacteristicCertificate {
  Element g;
  Symbol a = 0;
  Configuration preimage;
  Configuration image;
};

/// Searches tau(A^G) for an a-characteristic configuration. tau must have the
/// identity homomorphism. A certificate implies phi^* o tau has the unique
/// homomorphism property for every phi.
std::optional<CharacteristicCertificate> characteristic_uhp_certificate(const Gca& tau);

}  // namespace gca
