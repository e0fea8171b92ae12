#include "gca/equivariance.hpp"

#include <algorithm>
#include <set>

#include "gca/error.hpp"

namespace gca {

namespace {

void check_pair(const Homomorphism& phi, const Homomorphism& psi) {
  check_same_group(phi.domain(), psi.domain(), "homomorphism domains");
  check_same_group(phi.codomain(), psi.codomain(), "homomorphism codomains");
}

Element scaled(const Element& v, std::int64_t n) {
  Point p = v.coords();
  for (auto& c : p) c *= n;
  return Element::point(std::move(p));
}

bool disjoint_translate(const Group& g, const Element& r, const std::vector<Element>& t) {
  const std::set<Element> base(t.begin(), t.end());
  for (const auto& x : t)
    if (base.count(g.mul(r, x))) return false;
  return true;
}

}  // namespace

std::string to_string(EquivarianceMethod m) {
  switch (m) {
    case EquivarianceMethod::IdenticalHomomorphism: return "identical-homomorphism";
    case EquivarianceMethod::ConstantRule: return "constant-rule";
    case EquivarianceMethod::Exhaustive: return "exhaustive";
    case EquivarianceMethod::DisjointTranslate: return "disjoint-translate-witness";
  }
  return "unknown";
}

DifferenceSet difference_set(const Homomorphism& phi, const Homomorphism& psi) {
  check_pair(phi, psi);
  const Group& h = phi.domain();
  const Group& g = phi.codomain();
  DifferenceSet d;
  if (h.is_finite()) {
    std::set<Element> seen;
    for (const auto& x : h.elements()) seen.insert(g.mul(g.inverse(psi(x)), phi(x)));
    d.elements.assign(seen.begin(), seen.end());
    return d;
  }
  require(!g.is_finite(), ErrorKind::Unsupported, "difference set for an infinite domain and finite codomain");
  const IntMatrix diff = phi.matrix() - psi.matrix();
  for (std::size_t j = 0; j < h.rank(); ++j) {
    const Point col = diff.column(j);
    if (std::any_of(col.begin(), col.end(), [](std::int64_t c) { return c != 0; })) {
      d.finite = false;
      d.direction = j;
      return d;
    }
  }
  d.elements = {g.identity()};
  return d;
}

std::int64_t find_disjoint_multiple(const Group& g, const Element& v, const std::vector<Element>& t) {
  require(!g.is_finite(), ErrorKind::Precondition, "multiples search needs a free abelian group");
  if (!(g.contains(v))) fail(ErrorKind::GroupMismatch, "direction not in " + g.name());
  require(!(v == g.identity()), ErrorKind::Precondition, "direction must be nonzero");
  const std::size_t limit = t.size() * t.size() + 1;
  std::size_t tried = 0;
  for (std::int64_t n = 1; tried < limit; ++n)
    for (std::int64_t m : {n, -n}) {
      ++tried;
      if (disjoint_translate(g, scaled(v, m), t)) return m;
    }
  fail(ErrorKind::Internal, "no disjoint translate among the first " + std::to_string(limit) + " multiples");
}

Element find_disjoint_translate(const Group& g, const Element& v, const std::vector<Element>& t) {
  return scaled(v, find_disjoint_multiple(g, v, t));
}

std::optional<Element> find_disjoint_translate(const Group& g, const std::vector<Element>& candidates,
                                               const std::vector<Element>& t) {
  for (const auto& r : candidates) {
    if (!(g.contains(r))) fail(ErrorKind::GroupMismatch, "candidate not in " + g.name());
    if (disjoint_translate(g, r, t)) return r;
  }
  return std::nullopt;
}

namespace {

EquivarianceVerdict exhaustive_verdict(const Gca& t, const Gca& other) {
  EquivarianceVerdict v;
  v.method = EquivarianceMethod::Exhaustive;
  const DenseEvaluator ea(t), eb(other);
  const std::size_t q = t.alphabet().size();
  std::vector<Symbol> x(ea.input_cells(), 0), ya(ea.output_cells()), yb(ea.output_cells());
  do {
    ea(x.data(), ya.data());
    eb(x.data(), yb.data());
    if (ya != yb) {
      const auto at = static_cast<std::size_t>(std::mismatch(ya.begin(), ya.end(), yb.begin()).first - ya.begin());
      v.witness = EquivarianceWitness{Element::index(at), Configuration::dense(t.source(), t.alphabet(), x), ya[at],
                                      yb[at]};
      return v;
    }
  } while (next_configuration(x, q));
  v.equivariant = true;
  return v;
}

EquivarianceVerdict disjoint_witness(const Gca& t, const Gca& other, std::size_t direction) {
  const Group& h = t.target();
  const Group& g = t.source();
  const LocalRule& mu = t.rule();
  const Element e_j = [&] {
    Point p(h.rank(), 0);
    p[direction] = 1;
    return Element::point(std::move(p));
  }();
  // psi(n e_j)^{-1} phi(n e_j) = n (phi - psi) e_j.
  const Element step = g.mul(g.inverse(other.phi()(e_j)), t.phi()(e_j));
  const std::int64_t n = find_disjoint_multiple(g, step, mu.memory());
  const Element hw = scaled(e_j, n);
  const Element base_phi = t.phi()(hw), base_psi = other.phi()(hw);

  std::size_t z2 = 1;
  while (z2 < mu.pattern_count() && mu(z2) == mu(0)) ++z2;
  require(z2 < mu.pattern_count(), ErrorKind::Internal, "non-constant rule without distinct values");
  const auto d1 = mu.decode(0), d2 = mu.decode(z2);

  require(disjoint_translate(g, g.mul(g.inverse(base_psi), base_phi), mu.memory()), ErrorKind::Internal,
          "translated memory sets overlap");
  std::map<Point, Symbol> cells;
  for (std::size_t i = 0; i < mu.memory().size(); ++i) {
    cells[g.mul(base_phi, mu.memory()[i]).coords()] = d1[i];
    cells[g.mul(base_psi, mu.memory()[i]).coords()] = d2[i];
  }

  EquivarianceVerdict v;
  v.method = EquivarianceMethod::DisjointTranslate;
  const Configuration x = Configuration::finite_support(g, t.alphabet(), 0, std::move(cells));
  v.witness = EquivarianceWitness{hw, x, apply_at(t, x, hw), apply_at(other, x, hw)};
  return v;
}

}  // namespace

EquivarianceVerdict decide_equivariance(const Gca& t, const Homomorphism& psi) {
  check_pair(t.phi(), psi);
  EquivarianceVerdict v;
  if (t.phi() == psi) {
    v.equivariant = true;
    v.method = EquivarianceMethod::IdenticalHomomorphism;
    return v;
  }
  if (t.rule().is_constant()) {
    v.equivariant = true;
    v.method = EquivarianceMethod::ConstantRule;
    return v;
  }
  const Gca other(psi, t.rule());
  if (t.is_finite()) {
    v = exhaustive_verdict(t, other);
  } else if (!t.source().is_finite() && !t.target().is_finite()) {
    const DifferenceSet d = difference_set(t.phi(), psi);
    require(!d.finite, ErrorKind::Internal, "distinct matrices with a finite difference set");
    v = disjoint_witness(t, other, *d.direction);
  } else {
    fail(ErrorKind::Unsupported, "equivariance for " + t.target().name() + " -> " + t.source().name());
  }
  if (v.witness) {
    const auto& w = *v.witness;
    const Symbol a = reference_evaluate(t, w.x, w.h), b = reference_evaluate(other, w.x, w.h);
    v.reverified = a == w.value_phi && b == w.value_psi && a != b;
    require(v.reverified, ErrorKind::Internal, "equivariance witness failed re-verification");
  }
  return v;
}

std::vector<Homomorphism> uhp_scan(const Gca& t) {
  require(t.is_finite(), ErrorKind::Unsupported, "uhp scan needs finite groups; decide each psi instead");
  std::vector<Homomorphism> out;
  for (const auto& psi : enumerate_homomorphisms(t.target(), t.source()))
    if (decide_equivariance(t, psi).equivariant) out.push_back(psi);
  return out;
}

SymmetricCounterexample symmetric_counterexample(const Homomorphism& phi, const Homomorphism& psi,
                                                 const Alphabet& a) {
  const DifferenceSet d = difference_set(phi, psi);
  SymmetricCounterexample r;
  if (!d.finite) {
    r.reason = "difference set is infinite; no non-constant rule is equivariant for both homomorphisms";
    return r;
  }
  const Group& g = phi.codomain();
  if (!g.is_finite() && !d.is_trivial()) {
    r.reason = "finite non-trivial difference set in a free abelian group";
    return r;
  }
  const Subgroup memory = Subgroup::generated_by(g, d.elements);
  std::vector<Element> cells = g.is_finite() ? memory.elements() : std::vector<Element>{g.identity()};
  r.exists = true;
  r.memory = memory;
  r.tau = Gca(Homomorphism::identity(g), LocalRule::sum_mod_q(g, a, cells));
  require(!is_constant(*r.tau), ErrorKind::Internal, "sum rule came out constant");
  r.verified = same_map(Gca(phi, r.tau->rule()), Gca(psi, r.tau->rule()));
  require(r.verified, ErrorKind::Internal, "sum rule over the difference subgroup is not equivariant for both");
  return r;
}

bool symmetric_equivariance_check(const Gca& t, const Homomorphism& psi) {
  check_pair(t.phi(), psi);
  if (!t.rule().is_symmetric()) return false;
  const auto& memory = t.rule().memory();
  if (memory.empty()) return true;
  const DifferenceSet d = difference_set(t.phi(), psi);
  if (!d.finite) return false;
  const Group& g = t.source();
  const std::set<Element> base(memory.begin(), memory.end());
  for (const auto& delta : d.elements) {
    std::set<Element> moved;
    for (const auto& m : memory) moved.insert(g.mul(delta, m));
    if (moved != base) return false;
  }
  return true;
}

std::optional<CharacteristicCertificate> characteristic_uhp_certificate(const Gca& tau) {
  require(tau.phi().is_identity(), ErrorKind::Precondition, "certificate search needs the identity homomorphism");
  require(tau.source().is_finite(), ErrorKind::Unsupported, "certificate search needs a finite group");
  const auto images = all_images(tau);
  const std::size_t q = tau.alphabet().size();
  const std::size_t cells = tau.source().order();
  std::vector<Symbol> order;
  for (std::size_t s = 1; s < q; ++s) order.push_back(static_cast<Symbol>(s));
  order.push_back(0);
  for (Symbol a : order)
    for (std::size_t y = 0; y < images.size(); ++y) {
      const auto& img = images[y];
      if (std::count(img.begin(), img.end(), a) != 1) continue;
      const auto g = static_cast<std::size_t>(std::find(img.begin(), img.end(), a) - img.begin());
      return CharacteristicCertificate{Element::index(g), a,
                                       Configuration::dense(tau.source(), tau.alphabet(), decode_configuration(y, cells, q)),
                                       Configuration::dense(tau.source(), tau.alphabet(), img)};
    }
  return std::nullopt;
}

}  // namespace gca
