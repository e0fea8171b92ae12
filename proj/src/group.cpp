#include "gca/group.hpp"

#include <algorithm>
#include <sstream>

#include "gca/error.hpp"

namespace gca {

struct Group::Impl {
  Backend backend = Backend::FiniteCayley;
  std::string name;
  std::size_t n = 0;
  std::size_t rank = 0;
  std::vector<int> table;
  std::vector<int> inverse;
  int identity = 0;
  std::vector<int> generators;
  std::vector<std::string> labels;
};

Group::Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
  if (impl_->backend == Backend::FiniteCayley) {
    table_ = impl_->table.data();
    inverse_ = impl_->inverse.data();
    n_ = impl_->n;
    identity_ = impl_->identity;
  }
}

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

}  // namespace

Group Group::from_table(std::string name, std::size_t n, std::vector<int> table,
                        std::vector<std::string> labels, std::size_t assoc_bound) {
  require(n >= 1, ErrorKind::InvalidArgument, "group order must be at least 1");
  require(table.size() == n * n, ErrorKind::InvalidArgument,
          "Cayley table must have n*n entries");
  require(labels.empty() || labels.size() == n, ErrorKind::InvalidArgument,
          "element label count must equal the group order");
  const int ni = static_cast<int>(n);
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]; };
  for (int v : table)
    require(v >= 0 && v < ni, ErrorKind::InvalidArgument, "Cayley table entry out of range");
  for (int a = 0; a < ni; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < ni; ++b) {
      if (row[static_cast<std::size_t>(at(a, b))]++)
        fail(ErrorKind::InvalidArgument, "Cayley table is not a Latin square (row " + std::to_string(a) + ")");
      if (col[static_cast<std::size_t>(at(b, a))]++)
        fail(ErrorKind::InvalidArgument, "Cayley table is not a Latin square (column " + std::to_string(a) + ")");
    }
  }
  int identity = -1;
  for (int e = 0; e < ni && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < ni && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = e;
  }
  require(identity >= 0, ErrorKind::InvalidArgument, "Cayley table has no identity");
  std::vector<int> inverse(n, -1);
  for (int a = 0; a < ni; ++a)
    for (int b = 0; b < ni; ++b)
      if (at(a, b) == identity) {
        if (!(at(b, a) == identity)) fail(ErrorKind::InvalidArgument, "left and right inverses differ for element " + std::to_string(a));
        inverse[static_cast<std::size_t>(a)] = b;
      }
  if (n <= assoc_bound) {
    for (int a = 0; a < ni; ++a)
      for (int b = 0; b < ni; ++b)
        for (int c = 0; c < ni; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            fail(ErrorKind::InvalidArgument, "Cayley table is not associative at " + triple(a, b, c));
  }

  auto impl = std::make_shared<Impl>();
  impl->backend = Backend::FiniteCayley;
  impl->name = std::move(name);
  impl->n = n;
  impl->table = std::move(table);
  impl->inverse = std::move(inverse);
  impl->identity = identity;
  impl->labels = std::move(labels);

  // Greedy generating set in index order.
  std::vector<char> in(n, 0);
  for (int g = 0; g < ni; ++g) {
    if (g == identity || in[static_cast<std::size_t>(g)]) continue;
    impl->generators.push_back(g);
    std::fill(in.begin(), in.end(), 0);
    in[static_cast<std::size_t>(identity)] = 1;
    std::vector<int> frontier{identity};
    while (!frontier.empty()) {
      const int x = frontier.back();
      frontier.pop_back();
      for (int s : impl->generators) {
        const int p = impl->table[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(s)];
        if (!in[static_cast<std::size_t>(p)]) {
          in[static_cast<std::size_t>(p)] = 1;
          frontier.push_back(p);
        }
      }
    }
  }
  return Group(std::move(impl));
}

Group Group::free_abelian(std::size_t rank) {
  auto impl = std::make_shared<Impl>();
  impl->backend = Backend::FreeAbelian;
  impl->rank = rank;
  impl->name = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  return Group(std::move(impl));
}

Backend Group::backend() const noexcept { return impl_->backend; }
const std::string& Group::name() const noexcept { return impl_->name; }

std::size_t Group::order() const {
  require(is_finite(), ErrorKind::Unsupported, "order of an infinite group");
  return impl_->n;
}

std::size_t Group::rank() const {
  require(!is_finite(), ErrorKind::Unsupported, "rank of a finite group");
  return impl_->rank;
}

std::size_t Group::element_order(int a) const {
  std::size_t k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

const std::vector<int>& Group::generator_indices() const {
  require(is_finite(), ErrorKind::Unsupported, "generator indices of an infinite group");
  return impl_->generators;
}

Element Group::identity() const {
  if (is_finite()) return Element::index(static_cast<std::size_t>(identity_));
  return Element::point(Point(impl_->rank, 0));
}

bool Group::contains(const Element& a) const {
  if (is_finite()) return a.size() == 1 && a.coords()[0] >= 0 && static_cast<std::size_t>(a.coords()[0]) < n_;
  return a.size() == impl_->rank;
}

Element Group::mul(const Element& a, const Element& b) const {
  if (!(contains(a) && contains(b))) fail(ErrorKind::GroupMismatch, "element not in group " + name());
  if (is_finite())
    return Element::index(static_cast<std::size_t>(mul(static_cast<int>(a.as_index()), static_cast<int>(b.as_index()))));
  Point p = a.coords();
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += b.coords()[i];
  return Element::point(std::move(p));
}

Element Group::inverse(const Element& a) const {
  if (!(contains(a))) fail(ErrorKind::GroupMismatch, "element not in group " + name());
  if (is_finite()) return Element::index(static_cast<std::size_t>(inv(static_cast<int>(a.as_index()))));
  Point p = a.coords();
  for (auto& x : p) x = -x;
  return Element::point(std::move(p));
}

std::vector<Element> Group::generators() const {
  std::vector<Element> gens;
  if (is_finite()) {
    for (int g : impl_->generators) gens.push_back(Element::index(static_cast<std::size_t>(g)));
  } else {
    for (std::size_t i = 0; i < impl_->rank; ++i) {
      Point p(impl_->rank, 0);
      p[i] = 1;
      gens.push_back(Element::point(std::move(p)));
    }
  }
  return gens;
}

std::vector<Element> Group::elements() const {
  if (!(is_finite())) fail(ErrorKind::Unsupported, "cannot enumerate the elements of " + name());
  std::vector<Element> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.push_back(Element::index(i));
  return out;
}

bool Group::is_abelian() const {
  if (!is_finite()) return true;
  const int n = static_cast<int>(n_);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string Group::format(const Element& a) const {
  std::ostringstream os;
  if (is_finite()) {
    const auto i = a.as_index();
    if (!impl_->labels.empty() && i < impl_->labels.size()) return impl_->labels[i];
    os << i;
  } else if (a.size() == 1) {
    os << a.coords()[0];
  } else {
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a.coords()[i];
    os << ")";
  }
  return os.str();
}

bool operator==(const Group& a, const Group& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.impl_->backend != b.impl_->backend) return false;
  if (a.impl_->backend == Backend::FreeAbelian) return a.impl_->rank == b.impl_->rank;
  return a.impl_->n == b.impl_->n && a.impl_->table == b.impl_->table;
}

void check_same_group(const Group& a, const Group& b, const char* what) {
  if (!(a == b))
    fail(ErrorKind::GroupMismatch, std::string(what) + ": expected group " + b.name() + ", got " + a.name());
}

}  // namespace gca
