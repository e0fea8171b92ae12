#include "gca/homomorphism.hpp"

#include <algorithm>
#include <sstream>

#include "gca/error.hpp"

namespace gca {

namespace {

void check_is_homomorphism(const Group& dom, const Group& cod, const std::vector<Element>& table) {
  const int n = static_cast<int>(dom.order());
  require(cod.contains(table[static_cast<std::size_t>(dom.identity_index())]) &&
              table[static_cast<std::size_t>(dom.identity_index())] == cod.identity(),
          ErrorKind::InvalidArgument, "homomorphism must send identity to identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& lhs = table[static_cast<std::size_t>(dom.mul(a, b))];
      const auto rhs = cod.mul(table[static_cast<std::size_t>(a)], table[static_cast<std::size_t>(b)]);
      if (!(lhs == rhs))
        fail(ErrorKind::InvalidArgument, "map is not a homomorphism: phi(" + dom.format(Element::index(static_cast<std::size_t>(a))) +
                                             "*" + dom.format(Element::index(static_cast<std::size_t>(b))) +
                                             ") != phi(a)*phi(b)");
    }
}

// Extends generator images by breadth-first search; nullopt when the
// assignment is inconsistent.
std::optional<std::vector<Element>> extend(const Group& dom, const Group& cod,
                                           const std::vector<Element>& images) {
  const auto& gens = dom.generator_indices();
  const std::size_t n = dom.order();
  std::vector<std::optional<Element>> map(n);
  map[static_cast<std::size_t>(dom.identity_index())] = cod.identity();
  std::vector<int> queue{dom.identity_index()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = dom.mul(x, gens[i]);
      Element value = cod.mul(*map[static_cast<std::size_t>(x)], images[i]);
      auto& slot = map[static_cast<std::size_t>(y)];
      if (!slot) {
        slot = std::move(value);
        queue.push_back(y);
      } else if (!(*slot == value)) {
        return std::nullopt;
      }
    }
  }
  std::vector<Element> table;
  table.reserve(n);
  for (auto& v : map) table.push_back(*v);
  return table;
}

}  // namespace

Homomorphism Homomorphism::from_generator_images(const Group& domain, const Group& codomain,
                                                 const std::vector<Element>& images) {
  if (!domain.is_finite()) {
    require(!codomain.is_finite(), ErrorKind::Unsupported,
            "homomorphisms from Z^d into finite groups are not supported");
    std::vector<Point> cols;
    for (const auto& e : images) {
      require(codomain.contains(e), ErrorKind::InvalidArgument, "generator image not in codomain");
      cols.push_back(e.coords());
    }
    if (!(images.size() == domain.rank())) fail(ErrorKind::InvalidArgument, "need one image per basis vector of " + domain.name());
    return from_matrix(domain, codomain, IntMatrix::from_columns(cols, codomain.rank()));
  }
  const auto& gens = domain.generator_indices();
  if (!(images.size() == gens.size())) fail(ErrorKind::InvalidArgument, "expected " + std::to_string(gens.size()) + " generator images for " + domain.name());
  for (std::size_t i = 0; i < images.size(); ++i) {
    require(codomain.contains(images[i]), ErrorKind::InvalidArgument, "generator image not in codomain");
    if (codomain.is_finite()) {
      const auto img_order = codomain.element_order(static_cast<int>(images[i].as_index()));
      const auto gen_order = domain.element_order(gens[i]);
      if (gen_order % img_order != 0)
        fail(ErrorKind::InvalidArgument, "not a homomorphism: generator " +
                                             domain.format(Element::index(static_cast<std::size_t>(gens[i]))) +
                                             " has order " + std::to_string(gen_order) + " but its image " +
                                             codomain.format(images[i]) + " has order " +
                                             std::to_string(img_order));
    }
  }
  auto table = extend(domain, codomain, images);
  if (!(table.has_value())) fail(ErrorKind::InvalidArgument, "generator images violate a relation of " + domain.name());
  return trusted_table(domain, codomain, std::move(*table));
}

Homomorphism Homomorphism::from_table(const Group& domain, const Group& codomain,
                                      std::vector<Element> table, Kind kind) {
  require(domain.is_finite(), ErrorKind::InvalidArgument, "image tables need a finite domain");
  require(table.size() == domain.order(), ErrorKind::InvalidArgument, "image table has wrong length");
  for (const auto& e : table)
    require(codomain.contains(e), ErrorKind::InvalidArgument, "image table entry not in codomain");
  check_is_homomorphism(domain, codomain, table);
  return trusted_table(domain, codomain, std::move(table), kind);
}

Homomorphism Homomorphism::trusted_table(const Group& domain, const Group& codomain, std::vector<Element> table,
                                         Kind kind) {
  Homomorphism h(domain, codomain);
  h.kind_ = kind;
  if (codomain.is_finite()) {
    h.index_table_.reserve(table.size());
    for (const auto& e : table) h.index_table_.push_back(static_cast<int>(e.as_index()));
  }
  h.table_ = std::move(table);
  return h;
}

Homomorphism Homomorphism::from_matrix(const Group& domain, const Group& codomain, IntMatrix matrix) {
  require(!domain.is_finite() && !codomain.is_finite(), ErrorKind::InvalidArgument,
          "matrix homomorphisms need free abelian domain and codomain");
  require(matrix.rows() == codomain.rank() && matrix.cols() == domain.rank(), ErrorKind::InvalidArgument,
          "matrix must be rank(codomain) x rank(domain)");
  Homomorphism h(domain, codomain);
  h.matrix_ = std::move(matrix);
  return h;
}

Homomorphism Homomorphism::identity(const Group& g) {
  if (!g.is_finite()) return from_matrix(g, g, IntMatrix::identity(g.rank()));
  return trusted_table(g, g, g.elements());
}

Homomorphism Homomorphism::trivial(const Group& domain, const Group& codomain) {
  if (!domain.is_finite()) {
    require(!codomain.is_finite(), ErrorKind::Unsupported,
            "homomorphisms from Z^d into finite groups are not supported");
    return from_matrix(domain, codomain, IntMatrix(codomain.rank(), domain.rank()));
  }
  return trusted_table(domain, codomain, std::vector<Element>(domain.order(), codomain.identity()));
}

Element Homomorphism::operator()(const Element& h) const {
  if (!(domain_.contains(h))) fail(ErrorKind::GroupMismatch, "element not in domain " + domain_.name());
  if (is_matrix()) return Element::point(matrix_.apply(h.coords()));
  return table_[h.as_index()];
}

const std::vector<int>& Homomorphism::index_table() const {
  require(finite_to_finite(), ErrorKind::Unsupported, "index table needs finite groups");
  return index_table_;
}

const std::vector<Element>& Homomorphism::table() const {
  require(domain_.is_finite(), ErrorKind::Unsupported, "image table needs a finite domain");
  return table_;
}

const IntMatrix& Homomorphism::matrix() const {
  require(is_matrix(), ErrorKind::Unsupported, "matrix of a homomorphism with finite domain");
  return matrix_;
}

bool Homomorphism::is_injective() const {
  if (is_matrix()) {
    std::vector<Point> cols;
    for (std::size_t c = 0; c < matrix_.cols(); ++c) cols.push_back(matrix_.column(c));
    return lattice_basis(cols, matrix_.rows()).rank() == matrix_.cols();
  }
  // Kernel is trivial iff only the identity maps to the identity.
  const auto e = codomain_.identity();
  std::size_t kernel = 0;
  for (const auto& x : table_)
    if (x == e) ++kernel;
  return kernel == 1;
}

bool Homomorphism::is_surjective() const {
  if (is_matrix()) {
    std::vector<Point> cols;
    for (std::size_t c = 0; c < matrix_.cols(); ++c) cols.push_back(matrix_.column(c));
    const auto basis = lattice_basis(cols, matrix_.rows());
    return basis.is_full_rank() && basis.index() == 1;
  }
  if (!codomain_.is_finite()) return codomain_.rank() == 0;
  std::vector<char> hit(codomain_.order(), 0);
  for (int x : index_table_) hit[static_cast<std::size_t>(x)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool Homomorphism::is_trivial() const {
  if (is_matrix()) return matrix_.is_zero();
  const auto e = codomain_.identity();
  return std::all_of(table_.begin(), table_.end(), [&](const Element& x) { return x == e; });
}

bool Homomorphism::is_identity() const {
  if (!(domain_ == codomain_)) return false;
  if (is_matrix()) return matrix_ == IntMatrix::identity(domain_.rank());
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i].as_index() != i) return false;
  return true;
}

std::string Homomorphism::describe() const {
  std::ostringstream os;
  if (is_matrix()) {
    os << "[";
    for (std::size_t r = 0; r < matrix_.rows(); ++r) {
      os << (r ? "," : "") << "[";
      for (std::size_t c = 0; c < matrix_.cols(); ++c) os << (c ? "," : "") << matrix_(r, c);
      os << "]";
    }
    os << "]";
    return os.str();
  }
  bool first = true;
  for (int g : domain_.generator_indices()) {
    const auto ge = Element::index(static_cast<std::size_t>(g));
    os << (first ? "" : ", ") << domain_.format(ge) << "->" << codomain_.format(table_[ge.as_index()]);
    first = false;
  }
  if (first) os << "trivial";
  return os.str();
}

bool operator==(const Homomorphism& a, const Homomorphism& b) {
  if (!(a.domain_ == b.domain_) || !(a.codomain_ == b.codomain_)) return false;
  if (a.is_matrix()) return a.matrix_ == b.matrix_;
  return a.table_ == b.table_;
}

bool operator<(const Homomorphism& a, const Homomorphism& b) {
  if (a.is_matrix() && b.is_matrix()) return a.matrix_ < b.matrix_;
  return a.table_ < b.table_;
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  check_same_group(inner.codomain(), outer.domain(), "compose homomorphisms");
  if (inner.is_matrix()) {
    if (outer.is_matrix())
      return Homomorphism::from_matrix(inner.domain(), outer.codomain(), outer.matrix() * inner.matrix());
    fail(ErrorKind::Unsupported, "composition leaves the supported backends");
  }
  std::vector<Element> table;
  table.reserve(inner.domain().order());
  for (const auto& x : inner.table()) table.push_back(outer(x));
  return Homomorphism::trusted_table(inner.domain(), outer.codomain(), std::move(table));
}

namespace {

void search_images(const Group& dom, const Group& cod, std::size_t i, std::vector<Element>& images,
                   std::vector<Homomorphism>& out) {
  const auto& gens = dom.generator_indices();
  if (i == gens.size()) {
    if (auto table = extend(dom, cod, images))
      out.push_back(Homomorphism::from_table(dom, cod, std::move(*table)));
    return;
  }
  const auto gen_order = dom.element_order(gens[i]);
  for (std::size_t c = 0; c < cod.order(); ++c) {
    if (gen_order % cod.element_order(static_cast<int>(c)) != 0) continue;
    images[i] = Element::index(c);
    search_images(dom, cod, i + 1, images, out);
  }
}

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(const Group& domain, const Group& codomain,
                                                  std::optional<std::int64_t> entry_bound) {
  std::vector<Homomorphism> out;
  if (domain.is_finite() && codomain.is_finite()) {
    std::vector<Element> images(domain.generator_indices().size());
    search_images(domain, codomain, 0, images, out);
  } else if (domain.is_finite()) {
    // Z^d is torsion-free, so every element of a finite group maps to 0.
    out.push_back(Homomorphism::trivial(domain, codomain));
  } else if (!codomain.is_finite()) {
    if (!entry_bound)
      fail(ErrorKind::InfiniteFamily, "Hom(" + domain.name() + ", " + codomain.name() +
                                          ") is infinite; supply an entry bound");
    const std::int64_t b = *entry_bound;
    require(b >= 0, ErrorKind::InvalidArgument, "entry bound must be non-negative");
    const std::size_t rows = codomain.rank(), cols = domain.rank(), cells = rows * cols;
    IntMatrix m(rows, cols);
    for (std::size_t k = 0; k < cells; ++k) m(k / cols, k % cols) = -b;
    for (;;) {
      out.push_back(Homomorphism::from_matrix(domain, codomain, m));
      std::size_t k = cells;
      while (k > 0) {
        auto& cell = m((k - 1) / cols, (k - 1) % cols);
        if (cell < b) {
          ++cell;
          break;
        }
        cell = -b;
        --k;
      }
      if (k == 0) break;
    }
  } else {
    fail(ErrorKind::Unsupported, "homomorphisms from Z^d into finite groups are not supported");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Homomorphism> enumerate_endomorphisms(const Group& g, std::optional<std::int64_t> entry_bound) {
  return enumerate_homomorphisms(g, g, entry_bound);
}

}  // namespace gca
