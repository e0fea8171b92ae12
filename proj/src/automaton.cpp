#include "gca/automaton.hpp"

#include <algorithm>
#include <iostream>
#include <map>

#include "gca/error.hpp"

namespace gca {

Gca::Gca(Homomorphism phi, LocalRule rule) : phi_(std::move(phi)), rule_(std::move(rule)) {
  check_same_group(rule_.group(), phi_.codomain(), "GCA rule group");
}

DenseEvaluator::DenseEvaluator(const Gca& t) {
  require(t.is_finite(), ErrorKind::Unsupported, "dense evaluation needs finite groups");
  const Group& G = t.source();
  const Group& H = t.target();
  in_cells_ = G.order();
  out_cells_ = H.order();
  memory_ = t.rule().memory().size();
  q_ = t.alphabet().size();
  table_ = t.rule().table();
  neighbourhood_.resize(out_cells_ * memory_);
  for (std::size_t h = 0; h < out_cells_; ++h) {
    const int ph = t.phi()(static_cast<int>(h));
    for (std::size_t i = 0; i < memory_; ++i) {
      const int cell = G.mul(ph, static_cast<int>(t.rule().memory()[memory_ - 1 - i].as_index()));
      neighbourhood_[h * memory_ + i] = cell;
    }
  }
}

void DenseEvaluator::operator()(const Symbol* in, Symbol* out) const {
  const int* nb = neighbourhood_.data();
  for (std::size_t h = 0; h < out_cells_; ++h) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < memory_; ++i) index = index * q_ + in[*nb++];
    out[h] = table_[index];
  }
}

std::vector<Symbol> DenseEvaluator::operator()(const std::vector<Symbol>& in) const {
  require(in.size() == in_cells_, ErrorKind::GroupMismatch, "input configuration has wrong size");
  std::vector<Symbol> out(out_cells_);
  (*this)(in.data(), out.data());
  return out;
}

namespace {

void check_input(const Gca& t, const Configuration& x) {
  check_same_group(x.group(), t.source(), "GCA input");
  require(x.alphabet() == t.alphabet(), ErrorKind::GroupMismatch, "GCA input alphabet mismatch");
}

}  // namespace

Symbol apply_at(const Gca& t, const Configuration& x, const Element& h) {
  check_input(t, x);
  const Group& G = t.source();
  const Element ph = t.phi()(h);
  const auto& memory = t.rule().memory();
  std::vector<Symbol> digits(memory.size());
  for (std::size_t i = 0; i < memory.size(); ++i) digits[i] = x(G.mul(ph, memory[i]));
  return t.rule()(std::span<const Symbol>(digits));
}

Configuration apply(const Gca& t, const Configuration& x) {
  check_input(t, x);
  const Group& H = t.target();
  if (!(H.is_finite())) fail(ErrorKind::Unsupported, "output group " + H.name() + " is infinite; use apply_window");
  if (x.kind() == Configuration::Kind::Dense)
    return Configuration::dense(H, t.alphabet(), DenseEvaluator(t)(x.values()));
  std::vector<Symbol> out(H.order());
  for (std::size_t h = 0; h < out.size(); ++h) out[h] = apply_at(t, x, Element::index(h));
  return Configuration::dense(H, t.alphabet(), std::move(out));
}

Pattern apply_window(const Gca& t, const Configuration& x, const std::vector<Element>& window) {
  Pattern out;
  for (const auto& h : window) {
    if (!(t.target().contains(h))) fail(ErrorKind::GroupMismatch, "window element not in " + t.target().name());
    out[h] = apply_at(t, x, h);
  }
  return out;
}

Gca identity_gca(const Group& g, const Alphabet& a) {
  return Gca(Homomorphism::identity(g), LocalRule::identity(g, a));
}

Gca pullback(const Homomorphism& phi, const Alphabet& a) {
  return Gca(phi, LocalRule::identity(phi.codomain(), a));
}

Gca compose(const Gca& first, const Gca& second, const ComposeOptions& options) {
  check_same_group(second.source(), first.target(), "compose");
  require(first.alphabet() == second.alphabet(), ErrorKind::GroupMismatch, "compose: alphabets differ");
  const Group& G = first.source();
  const auto& inner = first.rule();
  const auto& outer = second.rule();
  // U = phi(S) T with S the memory of second and T the memory of first.
  std::vector<Element> shifts;  // phi(s) for each s in S
  for (const auto& s : outer.memory()) shifts.push_back(first.phi()(s));
  std::vector<Element> u;
  for (const auto& ps : shifts)
    for (const auto& t : inner.memory()) u.push_back(G.mul(ps, t));
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (u.size() > options.warn_cells)
    std::cerr << "warning: composed memory set has " << u.size() << " cells; table has q^" << u.size()
              << " entries\n";
  std::map<Element, std::size_t> position;
  for (std::size_t i = 0; i < u.size(); ++i) position[u[i]] = i;
  // where[s][t] = position of phi(s) t inside U
  std::vector<std::vector<std::size_t>> where(shifts.size());
  for (std::size_t si = 0; si < shifts.size(); ++si)
    for (const auto& t : inner.memory()) where[si].push_back(position.at(G.mul(shifts[si], t)));

  std::vector<Symbol> inner_digits(inner.memory().size());
  std::vector<Symbol> outer_digits(outer.memory().size());
  auto rule = LocalRule::from_function(G, first.alphabet(), u, [&](std::span<const Symbol> p) {
    for (std::size_t si = 0; si < shifts.size(); ++si) {
      for (std::size_t ti = 0; ti < inner_digits.size(); ++ti) inner_digits[ti] = p[where[si][ti]];
      outer_digits[si] = inner(std::span<const Symbol>(inner_digits));
    }
    return outer(std::span<const Symbol>(outer_digits));
  });
  return Gca(compose(first.phi(), second.phi()), std::move(rule));
}

Factorization factorize(const Gca& t) {
  return Factorization{Gca(Homomorphism::identity(t.source()), t.rule()), t.phi()};
}

std::vector<Element> minimal_memory_set(const Gca& t) {
  std::vector<Element> out;
  for (auto i : t.rule().essential_positions()) out.push_back(t.rule().memory()[i]);
  return out;
}

Gca minimized(const Gca& t) { return Gca(t.phi(), t.rule().minimized()); }

bool is_constant(const Gca& t) { return t.rule().is_constant(); }

std::vector<std::vector<Symbol>> all_images(const Gca& t) {
  const DenseEvaluator eval(t);
  const std::size_t q = t.alphabet().size();
  const std::size_t count = configuration_count(eval.input_cells(), q);
  require(count <= kMaxRuleTable, ErrorKind::BudgetExceeded, "configuration space too large to enumerate");
  std::vector<std::vector<Symbol>> images;
  images.reserve(count);
  std::vector<Symbol> x(eval.input_cells(), 0);
  do images.push_back(eval(x));
  while (next_configuration(x, q));
  return images;
}

InjectivityReport injectivity_surjectivity(const Gca& t) {
  require(t.is_finite(), ErrorKind::Unsupported, "injectivity is only decided over finite groups");
  const DenseEvaluator eval(t);
  const std::size_t q = t.alphabet().size();
  const std::size_t inputs = configuration_count(eval.input_cells(), q);
  const std::size_t outputs = configuration_count(eval.output_cells(), q);
  require(inputs <= kMaxRuleTable && outputs <= kMaxRuleTable, ErrorKind::BudgetExceeded,
          "configuration space too large to enumerate");
  std::vector<char> seen(outputs, 0);
  InjectivityReport r;
  r.injective = true;
  std::vector<Symbol> x(eval.input_cells(), 0), y(eval.output_cells());
  do {
    eval(x.data(), y.data());
    auto& slot = seen[encode_configuration(y, q)];
    if (slot) r.injective = false;
    else {
      slot = 1;
      ++r.image_size;
    }
  } while (next_configuration(x, q));
  r.surjective = r.image_size == outputs;
  if (r.surjective && !t.phi().is_injective())
    fail(ErrorKind::Internal, "surjective automaton over a non-injective homomorphism");
  if (r.injective && !t.phi().is_surjective())
    fail(ErrorKind::Internal, "injective automaton over a non-surjective homomorphism");
  return r;
}

bool same_map(const Gca& a, const Gca& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()) || !(a.alphabet() == b.alphabet())) return false;
  // T(x)(e) = mu(x|_T) for every homomorphism, so the canonical rules must agree.
  if (!(a.rule().canonical() == b.rule().canonical())) return false;
  if (a.phi() == b.phi() || a.rule().is_constant()) return true;
  if (a.is_finite()) {
    const DenseEvaluator ea(a), eb(b);
    const std::size_t q = a.alphabet().size();
    std::vector<Symbol> x(ea.input_cells(), 0), ya(ea.output_cells()), yb(ea.output_cells());
    do {
      ea(x.data(), ya.data());
      eb(x.data(), yb.data());
      if (ya != yb) return false;
    } while (next_configuration(x, q));
    return true;
  }
  require(!a.source().is_finite(), ErrorKind::Unsupported, "map equality for this backend combination");
  // Z^d is torsion-free abelian: distinct homomorphisms have an infinite
  // difference set, so a non-constant rule separates them.
  return false;
}

Symbol reference_evaluate(const Gca& t, const Configuration& x, const Element& h) {
  check_input(t, x);
  const Element g = t.phi()(t.target().inverse(h));
  const Configuration shifted = shift(g, x);
  const Pattern p = restrict(shifted, t.rule().memory());
  return t.rule()(p);
}

}  // namespace gca
