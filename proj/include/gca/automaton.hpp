#pragma once

#include <cstddef>
#include <vector>

#include "gca/configuration.hpp"
#include "gca/homomorphism.hpp"
#include "gca/local_rule.hpp"

namespace gca {

/// A phi-cellular automaton A^G -> A^H for phi : H -> G, given by a local
/// rule over G: T(x)(h) = mu((phi(h^{-1}) . x)|_T), i.e. mu(t -> x(phi(h) t)).
class Gca {
 public:
  Gca(Homomorphism phi, LocalRule rule);

  const Homomorphism& phi() const noexcept { return phi_; }
  const LocalRule& rule() const noexcept { return rule_; }
  /// G: the group of input configurations.
  const Group& source() const noexcept { return phi_.codomain(); }
  /// H: the group of output configurations.
  const Group& target() const noexcept { return phi_.domain(); }
  const Alphabet& alphabet() const noexcept { return rule_.alphabet(); }
  bool is_finite() const noexcept { return source().is_finite() && target().is_finite(); }

 private:
  Homomorphism phi_;
  LocalRule rule_;
};

/// Precomputed neighbourhoods phi(h) t for exhaustive loops over finite groups.
class DenseEvaluator {
 public:
  explicit DenseEvaluator(const Gca& t);
  void operator()(const Symbol* in, Symbol* out) const;
  std::vector<Symbol> operator()(const std::vector<Symbol>& in) const;
  std::size_t input_cells() const noexcept { return in_cells_; }
  std::size_t output_cells() const noexcept { return out_cells_; }

 private:
  std::size_t in_cells_ = 0;
  std::size_t out_cells_ = 0;
  std::size_t memory_ = 0;
  std::size_t q_ = 2;
  std::vector<int> neighbourhood_;  // out_cells x memory, most significant digit first
  std::vector<Symbol> table_;
};

/// Output over a finite H.
Configuration apply(const Gca& t, const Configuration& x);
/// Output on an explicit window of H (any backend); exact for every storage.
Pattern apply_window(const Gca& t, const Configuration& x, const std::vector<Element>& window);
Symbol apply_at(const Gca& t, const Configuration& x, const Element& h);

Gca identity_gca(const Group& g, const Alphabet& a);
/// phi^* : x -> x o phi, memory {e}, rule read-at-identity.
Gca pullback(const Homomorphism& phi, const Alphabet& a);

struct ComposeOptions {
  /// Warn on stderr when the composed memory set exceeds this many cells.
  std::size_t warn_cells = 20;
};

/// second o first. With first over phi : H -> G and second over psi : K -> H
/// the result is a (phi o psi)-automaton with memory phi(S) T (sorted) and a
/// materialized table.
Gca compose(const Gca& first, const Gca& second, const ComposeOptions& options = {});

struct Factorization {
  Gca tau;           // identity homomorphism on G, same memory and table
  Homomorphism phi;  // T = phi^* o tau
};
Factorization factorize(const Gca& t);

std::vector<Element> minimal_memory_set(const Gca& t);
Gca minimized(const Gca& t);
bool is_constant(const Gca& t);

struct InjectivityReport {
  bool injective = false;
  bool surjective = false;
  std::size_t image_size = 0;
};
/// Exhaustive over A^G; both groups finite. Cross-checked against the fact
/// that surjectivity forces phi injective and injectivity forces phi surjective.
InjectivityReport injectivity_surjectivity(const Gca& t);

/// Dense images of every configuration in A^G, indexed by encode_configuration.
std::vector<std::vector<Symbol>> all_images(const Gca& t);

/// Equality of realized maps: canonical local rules must agree; then equal
/// homomorphisms or a constant rule decide it, finite groups are compared
/// exhaustively, and over Z^d distinct homomorphisms give distinct maps.
bool same_map(const Gca& a, const Gca& b);

/// Literal evaluation of g = phi(h^{-1}), (g . x)|_T, mu(...). Independent of
/// the neighbourhood fast path used by apply.
Symbol reference_evaluate(const Gca& t, const Configuration& x, const Element& h);

}  // namespace gca
