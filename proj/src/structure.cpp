#include "gca/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gca/error.hpp"

namespace gca {

namespace {

void require_endomorphism(const Gca& t, const char* what) {
  if (!(t.source() == t.target() && t.phi().domain() == t.phi().codomain())) fail(ErrorKind::Precondition, std::string(what) + " needs an automaton over an endomorphism");
  if (!(t.source().is_finite())) fail(ErrorKind::Unsupported, std::string(what) + " needs a finite group");
}

void require_invariant(const Subgroup& k, const Homomorphism& phi) {
  if (const auto bad = invariance_violation(k, phi))
    fail(ErrorKind::Precondition, "subgroup " + k.describe() + " is not invariant: " + k.parent().format(*bad) +
                                      " maps to " + k.parent().format(phi(*bad)));
}

std::string describe_memory(const Group& g, const std::vector<Element>& memory) {
  std::string s = "{";
  for (std::size_t i = 0; i < memory.size(); ++i) s += (i ? "," : "") + g.format(memory[i]);
  return s + "}";
}

std::string describe_gca(const Gca& t) {
  std::ostringstream out;
  out << "phi " << t.phi().describe() << ", memory " << describe_memory(t.source(), t.rule().memory())
      << ", table [";
  for (std::size_t i = 0; i < t.rule().table().size(); ++i) out << (i ? "," : "") << int(t.rule().table()[i]);
  out << "]";
  return out.str();
}

}  // namespace

bool invariance_check(const Gca& t, const Subgroup& k) {
  require_endomorphism(t, "invariance check");
  check_same_group(k.parent(), t.source(), "invariance check subgroup");
  require_invariant(k, t.phi());
  const DenseEvaluator eval(t);
  const ConfigSet fix = fix_subgroup(k, t.alphabet());
  for (const auto& x : fix.members())
    if (!fix.contains(eval(x))) fail(ErrorKind::Internal, "Fix(K) not invariant under " + describe_gca(t));
  return true;
}

QuotientPackage quotient_gca(const Gca& t, const Subgroup& n) {
  require_endomorphism(t, "quotient");
  return quotient_gca(t, n, quotient_group(t.source(), n));
}

QuotientPackage quotient_gca(const Gca& t, const Subgroup& n, const Quotient& q) {
  require_endomorphism(t, "quotient");
  check_same_group(n.parent(), t.source(), "quotient subgroup");
  if (!(n.is_normal())) fail(ErrorKind::Precondition, "subgroup " + n.describe() + " is not normal");
  require_invariant(n, t.phi());
  const Group& g = t.source();
  const Group& gn = q.group;
  const Alphabet& a = t.alphabet();
  const Homomorphism hat_phi = induced_endomorphism(t.phi(), n, q);
  const auto& rho = q.projection;

  std::vector<Element> memory;
  for (const auto& m : t.rule().memory()) memory.push_back(Element::index(static_cast<std::size_t>(rho(int(m.as_index())))));
  std::sort(memory.begin(), memory.end());
  memory.erase(std::unique(memory.begin(), memory.end()), memory.end());

  // Conjugate: extend each pattern by 0, pull back along rho, evaluate at e.
  const auto pull = [&](const std::vector<Symbol>& y) {
    std::vector<Symbol> x(g.order());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[static_cast<std::size_t>(rho(static_cast<int>(i)))];
    return x;
  };
  auto rule = LocalRule::from_function(gn, a, memory, [&](std::span<const Symbol> p) {
    std::vector<Symbol> y(gn.order(), 0);
    for (std::size_t i = 0; i < memory.size(); ++i) y[memory[i].as_index()] = p[i];
    return apply_at(t, Configuration::dense(g, a, pull(y)), g.identity());
  });
  const Gca hat(hat_phi, std::move(rule));

  const DenseEvaluator big(t), small(hat);
  std::vector<Symbol> y(gn.order(), 0), hy(gn.order()), tx(g.order());
  do {
    small(y.data(), hy.data());
    const auto x = pull(y);
    big(x.data(), tx.data());
    if (tx != pull(hy)) fail(ErrorKind::Internal, "quotient diagram fails for " + describe_gca(t));
  } while (next_configuration(y, a.size()));

  return QuotientPackage{t, n, q, hat_phi, minimized(hat), true};
}

bool quotient_functoriality_check(const Group& g, const Subgroup& n, const std::vector<Gca>& sample) {
  check_same_group(n.parent(), g, "functoriality subgroup");
  if (!(is_fully_invariant(n))) fail(ErrorKind::Precondition, "subgroup " + n.describe() + " is not fully invariant");
  const Quotient q = quotient_group(g, n);
  std::vector<Gca> hats;
  for (const auto& t : sample) hats.push_back(quotient_gca(t, n, q).quotient_gca);
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); ++j) {
      const Gca whole = quotient_gca(compose(sample[i], sample[j]), n, q).quotient_gca;
      if (!same_map(whole, compose(hats[i], hats[j]))) return false;
    }
  if (!sample.empty()) {
    const Alphabet& a = sample.front().alphabet();
    if (!same_map(quotient_gca(identity_gca(g, a), n, q).quotient_gca, identity_gca(q.group, a))) return false;
  }
  return true;
}

Configuration restrict_to_subgroup(const Configuration& x, const Subgroup& k) {
  check_same_group(x.group(), k.parent(), "restriction to subgroup");
  const Group& local = k.as_group();
  if (k.is_finite()) {
    std::vector<Symbol> v;
    for (int m : k.indices()) v.push_back(x.at(m));
    return Configuration::dense(local, x.alphabet(), std::move(v));
  }
  require(x.kind() == Configuration::Kind::FiniteSupport, ErrorKind::Unsupported,
          "restriction of periodic configurations to a sublattice");
  std::map<Point, Symbol> support;
  for (const auto& [p, s] : x.support().support)
    if (const auto l = k.to_local(Element::point(p))) support[l->coords()] = s;
  return Configuration::finite_support(local, x.alphabet(), x.support().fallback, std::move(support));
}

RestrictionPackage restrict(const Gca& t, const Subgroup& k) {
  check_same_group(k.parent(), t.target(), "restriction subgroup");
  const Subgroup img = image(t.phi(), k);
  std::vector<Element> memory;
  for (const auto& m : t.rule().memory()) {
    const auto l = img.to_local(m);
    if (!(l.has_value())) fail(ErrorKind::Precondition, "memory element " + t.source().format(m) + " is outside phi(K) = " + img.describe());
    memory.push_back(*l);
  }
  RestrictionPackage p{t, k, img,
                       Gca(restrict_homomorphism(t.phi(), k, img),
                           LocalRule(img.as_group(), t.alphabet(), memory, t.rule().table())),
                       false};
  if (!t.is_finite()) return p;

  const DenseEvaluator whole(t), part(p.restricted);
  const std::size_t q = t.alphabet().size();
  std::vector<Symbol> x(t.source().order(), 0), y(t.target().order()), xr(img.order()), yr(k.order());
  const auto& img_cells = img.indices();
  const auto& k_cells = k.indices();
  do {
    whole(x.data(), y.data());
    for (std::size_t i = 0; i < xr.size(); ++i) xr[i] = x[static_cast<std::size_t>(img_cells[i])];
    part(xr.data(), yr.data());
    for (std::size_t i = 0; i < yr.size(); ++i)
      if (yr[i] != y[static_cast<std::size_t>(k_cells[i])])
        fail(ErrorKind::Internal, "restriction diagram fails for " + describe_gca(t) + " on " + k.describe());
  } while (next_configuration(x, q));
  p.diagram_verified = true;
  return p;
}

bool restriction_window_check(const RestrictionPackage& p, const std::vector<Configuration>& inputs,
                              const std::vector<Element>& window) {
  std::vector<Element> parent_window;
  for (const auto& w : window) parent_window.push_back(p.subgroup.to_parent(w));
  for (const auto& x : inputs) {
    const Pattern big = apply_window(p.original, x, parent_window);
    const Pattern small = apply_window(p.restricted, restrict_to_subgroup(x, p.image_subgroup), window);
    for (std::size_t i = 0; i < window.size(); ++i)
      if (big.at(parent_window[i]) != small.at(window[i])) return false;
  }
  return true;
}

Gca induce(const Gca& s, const Subgroup& k, const Homomorphism& phi) {
  check_same_group(k.parent(), phi.domain(), "induction subgroup");
  const Subgroup img = image(phi, k);
  if (!(s.phi() == restrict_homomorphism(phi, k, img))) fail(ErrorKind::Precondition, "automaton is not over the restriction of " + phi.describe() + " to " + k.describe());
  std::vector<Element> memory;
  for (const auto& m : s.rule().memory()) memory.push_back(img.to_parent(m));
  return Gca(phi, LocalRule(phi.codomain(), s.alphabet(), memory, s.rule().table()));
}

bool restriction_composition_check(const Gca& first, const Gca& second, const Subgroup& k) {
  check_same_group(first.target(), second.source(), "restriction composition");
  const Subgroup mid = image(second.phi(), k);
  const Gca lhs = restrict(compose(first, second), k).restricted;
  const Gca rhs = compose(restrict(first, mid).restricted, restrict(second, k).restricted);
  return same_map(lhs, rhs);
}

TransferReport transfer_theorem_check(const Gca& t, const Subgroup& k) {
  const RestrictionPackage p = restrict(t, k);
  require(t.is_finite(), ErrorKind::Unsupported, "transfer check needs finite groups");
  TransferReport r;
  const auto whole = injectivity_surjectivity(t);
  const auto part = injectivity_surjectivity(p.restricted);
  r.injective = whole.injective;
  r.surjective = whole.surjective;
  r.restricted_injective = part.injective;
  r.restricted_surjective = part.surjective;
  r.phi_injective = t.phi().is_injective();
  r.phi_surjective = t.phi().is_surjective();
  r.restricted_pullback_injective = injectivity_surjectivity(pullback(p.restricted.phi(), t.alphabet())).injective;
  r.injectivity_transfer = r.injective == (r.restricted_injective && r.phi_surjective);
  r.bijectivity_transfer = (r.injective && r.surjective) ==
                           (r.restricted_injective && r.restricted_surjective && r.phi_injective && r.phi_surjective);
  if (!r.injectivity_transfer || !r.bijectivity_transfer || !r.restricted_pullback_injective) {
    std::ostringstream out;
    out << "restriction transfer fails for " << describe_gca(t) << " on K = " << k.describe() << ": injective "
        << r.injective << ", surjective " << r.surjective << ", restricted injective " << r.restricted_injective
        << ", restricted surjective " << r.restricted_surjective << ", phi injective " << r.phi_injective
        << ", phi surjective " << r.phi_surjective << ", restricted pullback injective "
        << r.restricted_pullback_injective;
    fail(ErrorKind::Internal, out.str());
  }
  return r;
}

std::vector<LocalRule> minimal_rules(const Group& g, const Alphabet& a, const std::vector<Element>& cells,
                                     std::size_t max_memory) {
  std::vector<Element> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t q = a.size();
  std::vector<LocalRule> out;
  for (std::size_t size = 0; size <= std::min(max_memory, sorted.size()); ++size) {
    const std::size_t patterns = configuration_count(size, q);
    const std::size_t tables = configuration_count(patterns, q);
    require(tables <= kMaxRuleTable, ErrorKind::BudgetExceeded, "too many rule tables to enumerate");
    // Subsets of the given size in lexicographic order of positions.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Element> memory;
      for (auto i : pick) memory.push_back(sorted[i]);
      std::vector<Symbol> table(patterns, 0);
      do {
        LocalRule rule(g, a, memory, table);
        if (rule.essential_positions().size() == size) out.push_back(std::move(rule));
      } while (next_configuration(table, q));
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == sorted.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

SubmonoidReport gca_submonoid_check(const Group& g, const Subgroup& k, std::size_t max_memory, const Alphabet& a,
                                    std::size_t budget) {
  require(g.is_finite(), ErrorKind::Unsupported, "submonoid check needs a finite group");
  check_same_group(k.parent(), g, "submonoid subgroup");
  SubmonoidReport r;
  r.fully_invariant = is_fully_invariant(k);
  const auto rules = minimal_rules(g, a, k.elements(), max_memory);
  const auto ends = enumerate_endomorphisms(g);
  const Homomorphism id = Homomorphism::identity(g);
  r.rules = rules.size();
  r.closed = true;
  for (const auto& outer : rules) {
    // Homomorphisms of the first factor that differ on the second memory set.
    std::map<std::vector<int>, const Homomorphism*> reps;
    for (const auto& phi : ends) {
      std::vector<int> key;
      for (const auto& s : outer.memory()) key.push_back(phi(static_cast<int>(s.as_index())));
      reps.emplace(std::move(key), &phi);
    }
    const Gca second(id, outer);
    for (const auto& inner : rules)
      for (const auto& [key, phi] : reps) {
        require(++r.compositions <= budget, ErrorKind::BudgetExceeded, "submonoid enumeration budget exceeded");
        const Gca first(*phi, inner);
        const Gca c = compose(first, second);
        for (const auto& m : minimal_memory_set(c))
          if (!k.contains(m)) {
            r.closed = false;
            r.escape = "first " + describe_gca(first) + " then memory " + describe_memory(g, outer.memory()) +
                       " gives minimal memory " + describe_memory(g, minimal_memory_set(c));
            return r;
          }
      }
  }
  return r;
}

SurjectivityTally surjectivity_experiment(const Group& h, const Group& g, std::size_t max_memory, const Alphabet& a) {
  SurjectivityTally tally;
  for (const auto& phi : enumerate_homomorphisms(h, g))
    for (const auto& k : all_subgroups(h)) {
      const Subgroup img = image(phi, k);
      for (const auto& rule : minimal_rules(g, a, img.elements(), max_memory)) {
        const Gca t(phi, rule);
        const auto p = restrict(t, k);
        const bool s1 = injectivity_surjectivity(t).surjective;
        const bool s2 = injectivity_surjectivity(p.restricted).surjective;
        ++tally.instances;
        ++tally.counts[s1][s2];
      }
    }
  return tally;
}

}  // namespace gca
