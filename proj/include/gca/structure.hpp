#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gca/automaton.hpp"
#include "gca/configuration.hpp"
#include "gca/subgroup.hpp"

namespace gca {

/// Maps every member of Fix(K) through t and checks it stays in Fix(K).
/// t must be over an endomorphism leaving K invariant.
bool invariance_check(const Gca& t, const Subgroup& k);

struct QuotientPackage {
  Gca original;
  Subgroup normal;
  Quotient quotient;   // G/N and the projection rho
  Homomorphism induced;  // the endomorphism of G/N induced by phi
  Gca quotient_gca;    // minimized
  bool diagram_verified = false;
};

/// The automaton on A^{G/N} conjugate to t through y -> y o rho. Its rule is
/// read off t on every pattern over rho(T); rho^* o hat = t o rho^* is then
/// checked on all of A^{G/N}.
QuotientPackage quotient_gca(const Gca& t, const Subgroup& n);
QuotientPackage quotient_gca(const Gca& t, const Subgroup& n, const Quotient& q);

/// hat(b o a) == hat(b) o hat(a) for every ordered pair of the sample, and
/// the identity goes to the identity. N must be fully invariant.
bool quotient_functoriality_check(const Group& g, const Subgroup& n, const std::vector<Gca>& sample);

/// x restricted to a subgroup, as a configuration over the subgroup's own
/// group. Dense and finite-support storages.
Configuration restrict_to_subgroup(const Configuration& x, const Subgroup& k);

struct RestrictionPackage {
  Gca original;
  Subgroup subgroup;        // K <= H
  Subgroup image_subgroup;  // phi(K) <= G
  Gca restricted;           // over phi|_K^{phi(K)}
  bool diagram_verified = false;  // exhaustive, finite groups only
};

/// Requires the memory set of t inside phi(K).
RestrictionPackage restrict(const Gca& t, const Subgroup& k);

/// Res_K(t(x)) == t_K(Res_{phi(K)}(x)) on the given inputs over G, checked
/// on the given window of K (local coordinates).
bool restriction_window_check(const RestrictionPackage& p, const std::vector<Configuration>& inputs,
                              const std::vector<Element>& window);

/// The phi-automaton with s's rule, memory carried into G. s must be over the
/// restriction of phi to K.
Gca induce(const Gca& s, const Subgroup& k, const Homomorphism& phi);

/// (second o first)_K against second_K o first_{phi(K)} with first over
/// psi : R -> G and second over phi : H -> R.
bool restriction_composition_check(const Gca& first, const Gca& second, const Subgroup& k);

struct TransferReport {
  bool injective = false;
  bool surjective = false;
  bool restricted_injective = false;
  bool restricted_surjective = false;
  bool phi_injective = false;
  bool phi_surjective = false;
  bool restricted_pullback_injective = false;
  bool injectivity_transfer = false;  // injective <=> restricted injective and phi surjective
  bool bijectivity_transfer = false;  // bijective <=> restricted bijective and phi bijective
};

/// Computes every flag independently; a failed biconditional raises Internal
/// with the full instance in the message.
TransferReport transfer_theorem_check(const Gca& t, const Subgroup& k);

struct SubmonoidReport {
  bool fully_invariant = false;
  bool closed = false;
  std::size_t rules = 0;         // distinct minimal rules with memory in K
  std::size_t compositions = 0;  // compositions built
  std::optional<std::string> escape;  // a composition whose minimal memory leaves K
  bool agree() const { return fully_invariant == closed; }
};

/// Enumerates every automaton over End(G) whose minimal memory set lies in K
/// with at most max_memory cells, composes all pairs, and compares closure
/// with full invariance of K. Compositions depend on the second factor only
/// through its rule, so pairs are taken as (first, second rule).
SubmonoidReport gca_submonoid_check(const Group& g, const Subgroup& k, std::size_t max_memory, const Alphabet& a,
                                    std::size_t budget = std::size_t{1} << 26);

/// Every minimal (canonical) rule over G with memory inside the given cells
/// and at most max_memory of them.
std::vector<LocalRule> minimal_rules(const Group& g, const Alphabet& a, const std::vector<Element>& cells,
                                     std::size_t max_memory);

struct SurjectivityTally {
  std::size_t instances = 0;
  // [t surjective][t_K surjective]
  std::size_t counts[2][2] = {{0, 0}, {0, 0}};
};

/// Joint surjectivity of t and t_K over all phi in Hom(H, G), all K <= H and
/// all minimal rules with memory in phi(K) and at most max_memory cells. Data
/// only; no relationship is asserted.
SurjectivityTally surjectivity_experiment(const Group& h, const Group& g, std::size_t max_memory, const Alphabet& a);

}  // namespace gca
