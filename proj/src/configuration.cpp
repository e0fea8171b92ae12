#include "gca/configuration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gca/error.hpp"

namespace gca {

Alphabet::Alphabet(std::size_t q) : q_(q) {
  require(q >= 2 && q <= 255, ErrorKind::InvalidArgument, "alphabet size must be in 2..255");
}

namespace {

void check_symbol(const Alphabet& a, std::size_t s) {
  if (!(a.contains(s))) fail(ErrorKind::InvalidArgument, "symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(a.size()));
}

Point sub(const Point& a, const Point& b) {
  Point p = a;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] -= b[i];
  return p;
}

Point add(const Point& a, const Point& b) {
  Point p = a;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += b[i];
  return p;
}

}  // namespace

std::size_t box_index(const LatticeBasis& lattice, const Point& reduced) {
  std::size_t index = 0, stride = 1;
  for (std::size_t i = 0; i < lattice.dim; ++i) {
    index += static_cast<std::size_t>(reduced[i]) * stride;
    stride *= static_cast<std::size_t>(lattice.columns[i][i]);
  }
  return index;
}

Point box_point(const LatticeBasis& lattice, std::size_t index) {
  Point p(lattice.dim, 0);
  for (std::size_t i = 0; i < lattice.dim; ++i) {
    const auto side = static_cast<std::size_t>(lattice.columns[i][i]);
    p[i] = static_cast<std::int64_t>(index % side);
    index /= side;
  }
  return p;
}

Configuration Configuration::dense(const Group& g, const Alphabet& a, std::vector<Symbol> values) {
  require(g.is_finite(), ErrorKind::Unsupported, "dense configurations need a finite group");
  if (!(values.size() == g.order())) fail(ErrorKind::InvalidArgument, "dense configuration length " + std::to_string(values.size()) + " != |G| = " + std::to_string(g.order()));
  for (auto s : values) check_symbol(a, s);
  Configuration x(g, a);
  x.storage_ = Dense{std::move(values)};
  return x;
}

Configuration Configuration::finite_support(const Group& g, const Alphabet& a, Symbol fallback,
                                            std::map<Point, Symbol> support) {
  require(!g.is_finite(), ErrorKind::Unsupported, "finite-support storage is for Z^d");
  check_symbol(a, fallback);
  FiniteSupport fs{fallback, {}};
  for (auto& [p, s] : support) {
    require(p.size() == g.rank(), ErrorKind::InvalidArgument, "support point has wrong dimension");
    check_symbol(a, s);
    if (s != fallback) fs.support.emplace(p, s);
  }
  Configuration x(g, a);
  x.storage_ = std::move(fs);
  return x;
}

Configuration Configuration::periodic(const Group& g, const Alphabet& a, const std::vector<Point>& lattice_generators,
                                      std::vector<Symbol> domain) {
  require(!g.is_finite(), ErrorKind::Unsupported, "periodic storage is for Z^d");
  auto lattice = lattice_basis(lattice_generators, g.rank());
  require(lattice.is_full_rank(), ErrorKind::InvalidArgument, "period lattice must have full rank");
  if (!(domain.size() == lattice.index())) fail(ErrorKind::InvalidArgument, "fundamental domain size " + std::to_string(domain.size()) + " != lattice index " +
              std::to_string(lattice.index()));
  for (auto s : domain) check_symbol(a, s);
  Configuration x(g, a);
  x.storage_ = Periodic{std::move(lattice), std::move(domain)};
  return x;
}

Configuration Configuration::constant(const Group& g, const Alphabet& a, Symbol s) {
  if (g.is_finite()) return dense(g, a, std::vector<Symbol>(g.order(), s));
  return finite_support(g, a, s);
}

Symbol Configuration::operator()(const Element& g) const {
  if (!(group_.contains(g))) fail(ErrorKind::GroupMismatch, "evaluation point not in " + group_.name());
  switch (kind()) {
    case Kind::Dense:
      return std::get<Dense>(storage_).values[g.as_index()];
    case Kind::FiniteSupport: {
      const auto& fs = std::get<FiniteSupport>(storage_);
      auto it = fs.support.find(g.coords());
      return it == fs.support.end() ? fs.fallback : it->second;
    }
    case Kind::Periodic: {
      const auto& p = std::get<Periodic>(storage_);
      return p.domain[box_index(p.lattice, p.lattice.reduce(g.coords()))];
    }
  }
  return 0;
}

const std::vector<Symbol>& Configuration::values() const {
  require(kind() == Kind::Dense, ErrorKind::Unsupported, "configuration is not dense");
  return std::get<Dense>(storage_).values;
}

const Configuration::FiniteSupport& Configuration::support() const {
  require(kind() == Kind::FiniteSupport, ErrorKind::Unsupported, "configuration is not finitely supported");
  return std::get<FiniteSupport>(storage_);
}

const Configuration::Periodic& Configuration::periodic_data() const {
  require(kind() == Kind::Periodic, ErrorKind::Unsupported, "configuration is not periodic");
  return std::get<Periodic>(storage_);
}

namespace {

// Periodic configurations agree iff they agree on a box whose side is a
// common multiple of both lattice indices (that box contains a fundamental
// domain of the intersection lattice).
bool periodic_equal(const Configuration& a, const Configuration& b) {
  const auto& pa = a.periodic_data();
  const auto& pb = b.periodic_data();
  if (pa.lattice == pb.lattice) return pa.domain == pb.domain;
  const std::size_t side = std::lcm(pa.lattice.index(), pb.lattice.index());
  const std::size_t d = pa.lattice.dim;
  Point p(d, 0);
  for (;;) {
    const auto e = Element::point(p);
    if (a(e) != b(e)) return false;
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (++p[i] < static_cast<std::int64_t>(side)) break;
      p[i] = 0;
    }
    if (i == d) return true;
  }
}

bool periodic_is_constant(const Configuration::Periodic& p, Symbol s) {
  return std::all_of(p.domain.begin(), p.domain.end(), [&](Symbol v) { return v == s; });
}

}  // namespace

bool operator==(const Configuration& a, const Configuration& b) {
  if (!(a.group_ == b.group_) || !(a.alphabet_ == b.alphabet_)) return false;
  using Kind = Configuration::Kind;
  const auto ka = a.kind(), kb = b.kind();
  if (ka == Kind::Dense) return kb == Kind::Dense && a.values() == b.values();
  if (ka == Kind::FiniteSupport && kb == Kind::FiniteSupport)
    return a.support().fallback == b.support().fallback && a.support().support == b.support().support;
  if (ka == Kind::Periodic && kb == Kind::Periodic) return periodic_equal(a, b);
  // A finitely supported configuration is periodic only when it is constant.
  const auto& fs = ka == Kind::FiniteSupport ? a.support() : b.support();
  const auto& per = ka == Kind::Periodic ? a.periodic_data() : b.periodic_data();
  return fs.support.empty() && periodic_is_constant(per, fs.fallback);
}

Configuration shift(const Element& g, const Configuration& x) {
  const Group& G = x.group();
  if (!(G.contains(g))) fail(ErrorKind::GroupMismatch, "shift element not in " + G.name());
  switch (x.kind()) {
    case Configuration::Kind::Dense: {
      const int gi = G.inv(static_cast<int>(g.as_index()));
      std::vector<Symbol> out(G.order());
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = x.at(G.mul(gi, static_cast<int>(k)));
      return Configuration::dense(G, x.alphabet(), std::move(out));
    }
    case Configuration::Kind::FiniteSupport: {
      std::map<Point, Symbol> moved;
      for (const auto& [p, s] : x.support().support) moved.emplace(add(p, g.coords()), s);
      return Configuration::finite_support(G, x.alphabet(), x.support().fallback, std::move(moved));
    }
    case Configuration::Kind::Periodic: {
      const auto& per = x.periodic_data();
      std::vector<Symbol> out(per.domain.size());
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = x(Element::point(sub(box_point(per.lattice, i), g.coords())));
      return Configuration::periodic(G, x.alphabet(), per.lattice.columns, std::move(out));
    }
  }
  fail(ErrorKind::Internal, "unknown configuration storage");
}

Symbol evaluate(const Configuration& x, const Element& g) { return x(g); }

Pattern restrict(const Configuration& x, const std::vector<Element>& window) {
  Pattern p;
  for (const auto& s : window) p[s] = x(s);
  return p;
}

bool is_characteristic(const Configuration& x, const Element& g, Symbol a) {
  if (!(x.group().contains(g))) fail(ErrorKind::GroupMismatch, "element not in " + x.group().name());
  switch (x.kind()) {
    case Configuration::Kind::Dense: {
      const auto& v = x.values();
      for (std::size_t h = 0; h < v.size(); ++h)
        if ((v[h] == a) != (h == g.as_index())) return false;
      return true;
    }
    case Configuration::Kind::FiniteSupport: {
      const auto& fs = x.support();
      if (fs.fallback == a) return false;
      for (const auto& [p, s] : fs.support)
        if ((s == a) != (p == g.coords())) return false;
      return fs.support.count(g.coords()) != 0;
    }
    case Configuration::Kind::Periodic:
      // Every value of a periodic configuration on an infinite group repeats.
      return x.group().rank() == 0 && x(g) == a;
  }
  return false;
}

CharacteristicPatterns characteristic_configurations(const Group& group, const Alphabet& alphabet, const Element& g,
                                                     Symbol a, const std::vector<Element>& window) {
  check_symbol(alphabet, a);
  require(std::find(window.begin(), window.end(), g) != window.end(), ErrorKind::Precondition,
          "characteristic point must lie in the window");
  std::vector<Element> cells;
  for (const auto& w : window) {
    if (!(group.contains(w))) fail(ErrorKind::GroupMismatch, "window element not in " + group.name());
    if (!(w == g) && std::find(cells.begin(), cells.end(), w) == cells.end()) cells.push_back(w);
  }
  std::vector<Symbol> others;
  for (std::size_t s = 0; s < alphabet.size(); ++s)
    if (s != a) others.push_back(static_cast<Symbol>(s));
  CharacteristicPatterns out;
  out.complete = group.is_finite() && cells.size() + 1 == group.order();
  std::vector<std::size_t> digit(cells.size(), 0);
  for (;;) {
    Pattern p;
    p[g] = a;
    for (std::size_t i = 0; i < cells.size(); ++i) p[cells[i]] = others[digit[i]];
    out.patterns.push_back(std::move(p));
    std::size_t i = 0;
    for (; i < cells.size(); ++i) {
      if (++digit[i] < others.size()) break;
      digit[i] = 0;
    }
    if (i == cells.size()) break;
  }
  return out;
}

Configuration translate_characteristic(const Configuration& chi, const Element& g, const Element& k) {
  const Group& G = chi.group();
  const Symbol a = chi(g);
  if (!(is_characteristic(chi, g, a))) fail(ErrorKind::Precondition, "configuration is not characteristic on " + G.format(g));
  auto out = shift(G.mul(k, G.inverse(g)), chi);
  require(is_characteristic(out, k, a), ErrorKind::Internal, "translated configuration lost the characteristic property");
  return out;
}

void ConfigSet::insert(std::vector<Symbol> values) {
  require(values.size() == group_.order(), ErrorKind::InvalidArgument, "config set member has wrong length");
  auto it = std::lower_bound(members_.begin(), members_.end(), values);
  if (it == members_.end() || *it != values) members_.insert(it, std::move(values));
}

bool ConfigSet::contains(const std::vector<Symbol>& values) const {
  return std::binary_search(members_.begin(), members_.end(), values);
}

bool ConfigSet::contains(const Configuration& x) const {
  if (!(x.group() == group_) || !(x.alphabet() == alphabet_)) return false;
  return contains(x.values());
}

ConfigSet fix_subgroup(const Subgroup& k, const Alphabet& a) {
  const Group& G = k.parent();
  require(G.is_finite(), ErrorKind::Unsupported, "Fix(K) is only enumerated over finite groups");
  const std::size_t n = G.order();
  // Right cosets K g, numbered by least member.
  std::vector<int> coset(n, -1);
  std::size_t cosets = 0;
  for (std::size_t g = 0; g < n; ++g) {
    if (coset[g] >= 0) continue;
    for (int m : k.indices()) coset[static_cast<std::size_t>(G.mul(m, static_cast<int>(g)))] = static_cast<int>(cosets);
    ++cosets;
  }
  ConfigSet out(G, a);
  std::vector<Symbol> per_coset(cosets, 0);
  do {
    std::vector<Symbol> values(n);
    for (std::size_t g = 0; g < n; ++g) values[g] = per_coset[static_cast<std::size_t>(coset[g])];
    out.insert(std::move(values));
  } while (next_configuration(per_coset, a.size()));
  return out;
}

std::size_t configuration_count(std::size_t cells, std::size_t q) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    require(n <= std::numeric_limits<std::size_t>::max() / q, ErrorKind::BudgetExceeded,
            "configuration space too large to enumerate");
    n *= q;
  }
  return n;
}

bool next_configuration(std::vector<Symbol>& values, std::size_t q) {
  for (auto& v : values) {
    if (++v < q) return true;
    v = 0;
  }
  return false;
}

std::size_t encode_configuration(const std::vector<Symbol>& values, std::size_t q) {
  std::size_t index = 0;
  for (std::size_t i = values.size(); i-- > 0;) index = index * q + values[i];
  return index;
}

std::vector<Symbol> decode_configuration(std::size_t index, std::size_t cells, std::size_t q) {
  std::vector<Symbol> values(cells);
  for (auto& v : values) {
    v = static_cast<Symbol>(index % q);
    index /= q;
  }
  return values;
}

}  // namespace gca
