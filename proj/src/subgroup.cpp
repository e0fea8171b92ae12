#include "gca/subgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

#include "gca/error.hpp"

namespace gca {

void Subgroup::finish_finite() {
  const std::size_t n = parent_.order();
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  member_.assign(n, 0);
  local_of_.assign(n, -1);
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    member_[static_cast<std::size_t>(indices_[i])] = 1;
    local_of_[static_cast<std::size_t>(indices_[i])] = static_cast<int>(i);
  }
  // Closure, identity and inverses.
  require(member_[static_cast<std::size_t>(parent_.identity_index())] != 0, ErrorKind::InvalidArgument,
          "subgroup must contain the identity");
  for (int a : indices_) {
    if (!(member_[static_cast<std::size_t>(parent_.inv(a))] != 0)) fail(ErrorKind::InvalidArgument, "subset not closed under inverses at " + parent_.format(Element::index(static_cast<std::size_t>(a))));
    for (int b : indices_)
      if (!member_[static_cast<std::size_t>(parent_.mul(a, b))])
        fail(ErrorKind::InvalidArgument, "subset not closed under the product " +
                                             parent_.format(Element::index(static_cast<std::size_t>(a))) + "*" +
                                             parent_.format(Element::index(static_cast<std::size_t>(b))));
  }
  normal_ = true;
  for (int g = 0; g < static_cast<int>(n) && normal_; ++g)
    for (int k : indices_)
      if (!member_[static_cast<std::size_t>(parent_.mul(parent_.mul(g, k), parent_.inv(g)))]) {
        normal_ = false;
        break;
      }
  const std::size_t m = indices_.size();
  std::vector<int> table(m * m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(parent_.format(Element::index(static_cast<std::size_t>(indices_[a]))));
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = local_of_[static_cast<std::size_t>(parent_.mul(indices_[a], indices_[b]))];
  }
  local_ = std::make_shared<const Group>(
      Group::from_table(describe() + " <= " + parent_.name(), m, std::move(table), std::move(labels)));
}

Subgroup Subgroup::from_elements(const Group& parent, const std::vector<Element>& members) {
  Subgroup s(parent);
  if (!parent.is_finite()) {
    std::vector<Point> gens;
    for (const auto& m : members) gens.push_back(m.coords());
    s.basis_ = lattice_basis(gens, parent.rank());
    s.local_ = std::make_shared<const Group>(Group::free_abelian(s.basis_.rank()));
    return s;
  }
  for (const auto& m : members) {
    if (!(parent.contains(m))) fail(ErrorKind::InvalidArgument, "subgroup member not in " + parent.name());
    s.indices_.push_back(static_cast<int>(m.as_index()));
  }
  s.finish_finite();
  return s;
}

Subgroup Subgroup::generated_by(const Group& parent, const std::vector<Element>& generators) {
  if (!parent.is_finite()) return from_elements(parent, generators);
  std::vector<char> in(parent.order(), 0);
  std::vector<int> members{parent.identity_index()};
  in[static_cast<std::size_t>(parent.identity_index())] = 1;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (const auto& g : generators) {
      if (!(parent.contains(g))) fail(ErrorKind::InvalidArgument, "generator not in " + parent.name());
      const int p = parent.mul(members[head], static_cast<int>(g.as_index()));
      if (!in[static_cast<std::size_t>(p)]) {
        in[static_cast<std::size_t>(p)] = 1;
        members.push_back(p);
      }
    }
  Subgroup s(parent);
  s.indices_ = std::move(members);
  s.finish_finite();
  return s;
}

Subgroup Subgroup::trivial(const Group& parent) { return generated_by(parent, {}); }

Subgroup Subgroup::whole(const Group& parent) { return generated_by(parent, parent.generators()); }

const std::vector<int>& Subgroup::indices() const {
  require(is_finite(), ErrorKind::Unsupported, "member list of a lattice subgroup");
  return indices_;
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  for (int i : indices()) out.push_back(Element::index(static_cast<std::size_t>(i)));
  return out;
}

const LatticeBasis& Subgroup::basis() const {
  require(!is_finite(), ErrorKind::Unsupported, "lattice basis of a finite subgroup");
  return basis_;
}

std::size_t Subgroup::order() const {
  require(is_finite(), ErrorKind::Unsupported, "order of a lattice subgroup");
  return indices_.size();
}

std::size_t Subgroup::index_in_parent() const {
  if (!is_finite()) return basis_.index();
  return parent_.order() / indices_.size();
}

bool Subgroup::contains(const Element& g) const {
  if (!(parent_.contains(g))) fail(ErrorKind::GroupMismatch, "element not in " + parent_.name());
  if (!is_finite()) return basis_.contains(g.coords());
  return member_[g.as_index()] != 0;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  check_same_group(parent_, other.parent_, "subgroup inclusion");
  if (!is_finite()) {
    for (const auto& c : basis_.columns)
      if (!other.basis_.contains(c)) return false;
    return true;
  }
  return std::all_of(indices_.begin(), indices_.end(), [&](int i) { return other.contains(i); });
}

Element Subgroup::to_parent(const Element& local) const {
  require(local_->contains(local), ErrorKind::GroupMismatch, "element not in subgroup");
  if (is_finite()) return Element::index(static_cast<std::size_t>(indices_[local.as_index()]));
  Point p(basis_.dim, 0);
  for (std::size_t j = 0; j < basis_.rank(); ++j)
    for (std::size_t r = 0; r < basis_.dim; ++r) p[r] += local.coords()[j] * basis_.columns[j][r];
  return Element::point(std::move(p));
}

std::optional<Element> Subgroup::to_local(const Element& global) const {
  if (is_finite()) {
    const int l = local_of_.at(global.as_index());
    if (l < 0) return std::nullopt;
    return Element::index(static_cast<std::size_t>(l));
  }
  auto c = basis_.coordinates(global.coords());
  if (!c) return std::nullopt;
  return Element::point(std::move(*c));
}

std::string Subgroup::describe() const {
  std::ostringstream os;
  if (is_finite()) {
    os << "{";
    for (std::size_t i = 0; i < indices_.size(); ++i)
      os << (i ? "," : "") << parent_.format(Element::index(static_cast<std::size_t>(indices_[i])));
    os << "}";
  } else {
    os << "<";
    for (std::size_t j = 0; j < basis_.rank(); ++j)
      os << (j ? "," : "") << parent_.format(Element::point(basis_.columns[j]));
    os << ">";
  }
  return os.str();
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  if (!(a.parent_ == b.parent_)) return false;
  if (a.is_finite()) return a.indices_ == b.indices_;
  return a.basis_ == b.basis_;
}

Subgroup image(const Homomorphism& phi, const Subgroup& k) {
  check_same_group(k.parent(), phi.domain(), "image of subgroup");
  if (!k.is_finite()) {
    std::vector<Element> gens;
    for (const auto& c : k.basis().columns) gens.push_back(phi(Element::point(c)));
    return Subgroup::from_elements(phi.codomain(), gens);
  }
  std::vector<Element> members;
  for (int i : k.indices()) members.push_back(phi(Element::index(static_cast<std::size_t>(i))));
  if (!phi.codomain().is_finite()) return Subgroup::from_elements(phi.codomain(), members);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Subgroup::from_elements(phi.codomain(), members);
}

Subgroup preimage(const Homomorphism& phi, const Subgroup& l) {
  require(phi.finite_to_finite(), ErrorKind::Unsupported, "preimage needs finite groups");
  check_same_group(l.parent(), phi.codomain(), "preimage of subgroup");
  std::vector<Element> members;
  for (std::size_t h = 0; h < phi.domain().order(); ++h)
    if (l.contains(phi(static_cast<int>(h)))) members.push_back(Element::index(h));
  return Subgroup::from_elements(phi.domain(), members);
}

std::vector<Subgroup> all_subgroups(const Group& g) {
  require(g.is_finite() && g.order() <= 64, ErrorKind::Unsupported, "subgroup lattice needs a finite group of order <= 64");
  const std::size_t n = g.order();
  auto close = [&](std::uint64_t mask) {
    std::vector<int> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) members.push_back(static_cast<int>(i));
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::size_t j = 0; j < members.size(); ++j) {
        const int p = g.mul(members[head], members[j]);
        if (!(mask >> p & 1U)) {
          mask |= std::uint64_t{1} << p;
          members.push_back(p);
        }
      }
    return mask;
  };
  const std::uint64_t e = std::uint64_t{1} << g.identity_index();
  std::vector<std::uint64_t> found{e};
  std::vector<std::uint64_t> cyclic;
  for (std::size_t i = 0; i < n; ++i) cyclic.push_back(close(e | std::uint64_t{1} << i));
  // Join with cyclic subgroups until no new subgroup appears.
  for (std::size_t head = 0; head < found.size(); ++head)
    for (auto c : cyclic) {
      const auto joined = close(found[head] | c);
      if (std::find(found.begin(), found.end(), joined) == found.end()) found.push_back(joined);
    }
  std::vector<Subgroup> out;
  for (auto mask : found) {
    std::vector<Element> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) members.push_back(Element::index(i));
    out.push_back(Subgroup::from_elements(g, members));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.indices() < b.indices();
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(g))
    if (s.is_normal()) out.push_back(std::move(s));
  return out;
}

Subgroup commutator_subgroup(const Group& g) {
  require(g.is_finite(), ErrorKind::Unsupported, "commutator subgroup of an infinite group");
  std::vector<Element> commutators;
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      commutators.push_back(Element::index(static_cast<std::size_t>(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))));
  return Subgroup::generated_by(g, commutators);
}

std::optional<Element> invariance_violation(const Subgroup& k, const Homomorphism& phi) {
  check_same_group(k.parent(), phi.domain(), "invariance check");
  check_same_group(k.parent(), phi.codomain(), "invariance check");
  if (!k.is_finite()) {
    for (const auto& c : k.basis().columns) {
      const auto img = phi(Element::point(c));
      if (!k.contains(img)) return Element::point(c);
    }
    return std::nullopt;
  }
  for (int i : k.indices())
    if (!k.contains(phi(i))) return Element::index(static_cast<std::size_t>(i));
  return std::nullopt;
}

bool is_invariant_under(const Subgroup& k, const Homomorphism& phi) { return !invariance_violation(k, phi); }

bool is_fully_invariant(const Subgroup& k) {
  require(k.is_finite(), ErrorKind::Unsupported, "full invariance is only decided for finite groups");
  for (const auto& phi : enumerate_endomorphisms(k.parent()))
    if (!is_invariant_under(k, phi)) return false;
  return true;
}

Quotient quotient_group(const Group& g, const Subgroup& n) {
  require(g.is_finite(), ErrorKind::Unsupported, "quotients of infinite groups are not supported");
  check_same_group(n.parent(), g, "quotient group");
  if (!(n.is_normal())) fail(ErrorKind::Precondition, "subgroup " + n.describe() + " is not normal in " + g.name());
  const std::size_t size = g.order();
  std::vector<int> coset_of(size, -1);
  std::vector<int> reps;
  for (std::size_t x = 0; x < size; ++x) {
    if (coset_of[x] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(x));
    for (int k : n.indices()) coset_of[static_cast<std::size_t>(g.mul(static_cast<int>(x), k))] = c;
  }
  const std::size_t m = reps.size();
  std::vector<int> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = coset_of[static_cast<std::size_t>(g.mul(reps[a], reps[b]))];
  Group quotient = Group::from_table(g.name() + "/" + n.describe(), m, std::move(table));
  std::vector<Element> proj;
  for (int c : coset_of) proj.push_back(Element::index(static_cast<std::size_t>(c)));
  auto rho = Homomorphism::from_table(g, quotient, std::move(proj), Homomorphism::Kind::CanonicalProjection);
  return Quotient{std::move(quotient), std::move(rho), std::move(reps)};
}

Homomorphism induced_endomorphism(const Homomorphism& phi, const Subgroup& n) {
  return induced_endomorphism(phi, n, quotient_group(phi.domain(), n));
}

Homomorphism induced_endomorphism(const Homomorphism& phi, const Subgroup& n, const Quotient& q) {
  require(phi.finite_to_finite() && phi.domain() == phi.codomain(), ErrorKind::InvalidArgument,
          "induced endomorphism needs an endomorphism of a finite group");
  if (auto bad = invariance_violation(n, phi))
    fail(ErrorKind::Precondition, "phi(N) is not contained in N: phi(" + phi.domain().format(*bad) + ") escapes " +
                                      n.describe());
  const auto& rho = q.projection;
  std::vector<Element> table;
  for (int rep : q.representatives) table.push_back(Element::index(static_cast<std::size_t>(rho(phi(rep)))));
  auto hat = Homomorphism::from_table(q.group, q.group, std::move(table));
  for (std::size_t x = 0; x < phi.domain().order(); ++x) {
    const int g = static_cast<int>(x);
    if (rho(phi(g)) != hat(rho(g)))
      fail(ErrorKind::Internal, "induced endomorphism does not commute with the projection at " +
                                    phi.domain().format(Element::index(x)));
  }
  return hat;
}

Homomorphism restrict_homomorphism(const Homomorphism& phi, const Subgroup& k) {
  return restrict_homomorphism(phi, k, image(phi, k));
}

Homomorphism restrict_homomorphism(const Homomorphism& phi, const Subgroup& k, const Subgroup& image_of_k) {
  check_same_group(k.parent(), phi.domain(), "restrict homomorphism");
  check_same_group(image_of_k.parent(), phi.codomain(), "restrict homomorphism");
  const Group& local_dom = k.as_group();
  const Group& local_cod = image_of_k.as_group();
  if (!k.is_finite()) {
    require(!phi.codomain().is_finite(), ErrorKind::Unsupported, "restriction leaves the supported backends");
    std::vector<Point> cols;
    for (const auto& c : k.basis().columns) {
      auto local = image_of_k.to_local(phi(Element::point(c)));
      require(local.has_value(), ErrorKind::Precondition, "phi(K) does not contain the image of K");
      cols.push_back(local->coords());
    }
    return Homomorphism::from_matrix(local_dom, local_cod, IntMatrix::from_columns(cols, local_cod.rank()));
  }
  std::vector<Element> table;
  for (int i : k.indices()) {
    auto local = image_of_k.to_local(phi(Element::index(static_cast<std::size_t>(i))));
    require(local.has_value(), ErrorKind::Precondition, "phi(K) does not contain the image of K");
    table.push_back(*local);
  }
  return Homomorphism::from_table(local_dom, local_cod, std::move(table), Homomorphism::Kind::Restriction);
}

}  // namespace gca
