#include <cctype>
#include <sstream>

#include "gca/configuration.hpp"
#include "gca/error.hpp"

namespace gca {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool take(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!take(c)) error(std::string("expected '") + c + "'");
  }
  void expect(const std::string& word) {
    skip();
    if (s_.compare(pos_, word.size(), word) != 0) error("expected '" + word + "'");
    pos_ += word.size();
  }
  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
      error("expected an integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }
  Point point() {
    Point p;
    if (take('(')) {
      if (!take(')')) {
        do p.push_back(integer());
        while (take(','));
        expect(')');
      }
    } else {
      p.push_back(integer());
    }
    return p;
  }
  std::vector<std::int64_t> int_list() {
    std::vector<std::int64_t> out;
    expect('[');
    if (take(']')) return out;
    do out.push_back(integer());
    while (take(','));
    expect(']');
    return out;
  }
  void finish() {
    skip();
    if (pos_ != s_.size()) error("trailing characters");
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "configuration text, offset " + std::to_string(pos_) + ": " + what + " in '" + s_ + "'");
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

std::vector<Symbol> symbols(const std::vector<std::int64_t>& raw, const Alphabet& a) {
  std::vector<Symbol> out;
  for (auto v : raw) {
    if (!(v >= 0 && a.contains(static_cast<std::size_t>(v)))) fail(ErrorKind::Parse, "symbol " + std::to_string(v) + " outside alphabet");
    out.push_back(static_cast<Symbol>(v));
  }
  return out;
}

std::string point_text(const Point& p) {
  std::ostringstream os;
  if (p.size() == 1) {
    os << p[0];
  } else {
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
  }
  return os.str();
}

}  // namespace

Configuration parse_configuration(const std::string& text, const Group& g, const Alphabet& a) {
  Cursor c(text);
  c.skip();
  if (c.peek('d')) {
    c.expect("dense:");
    auto values = symbols(c.int_list(), a);
    c.finish();
    return Configuration::dense(g, a, std::move(values));
  }
  if (c.peek('s')) {
    c.expect("support:");
    c.expect("default=");
    const auto fallback = symbols({c.integer()}, a).front();
    c.expect(';');
    std::map<Point, Symbol> support;
    c.expect('{');
    if (!c.take('}')) {
      do {
        Point p = c.point();
        c.expect(':');
        const auto s = symbols({c.integer()}, a).front();
        if (!support.emplace(std::move(p), s).second) c.error("duplicate support point");
      } while (c.take(','));
      c.expect('}');
    }
    c.finish();
    return Configuration::finite_support(g, a, fallback, std::move(support));
  }
  if (c.peek('p')) {
    c.expect("periodic:");
    c.expect("lattice=");
    std::vector<Point> gens;
    c.expect('[');
    if (!c.take(']')) {
      do gens.push_back(c.int_list());
      while (c.take(','));
      c.expect(']');
    }
    c.expect(';');
    auto domain = symbols(c.int_list(), a);
    c.finish();
    return Configuration::periodic(g, a, gens, std::move(domain));
  }
  c.error("unknown configuration kind (dense|support|periodic)");
}

std::string format_configuration(const Configuration& x) {
  std::ostringstream os;
  switch (x.kind()) {
    case Configuration::Kind::Dense: {
      os << "dense:[";
      const auto& v = x.values();
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << int(v[i]);
      os << "]";
      break;
    }
    case Configuration::Kind::FiniteSupport: {
      os << "support:default=" << int(x.support().fallback) << ";{";
      bool first = true;
      for (const auto& [p, s] : x.support().support) {
        os << (first ? "" : ",") << point_text(p) << ":" << int(s);
        first = false;
      }
      os << "}";
      break;
    }
    case Configuration::Kind::Periodic: {
      const auto& per = x.periodic_data();
      os << "periodic:lattice=[";
      for (std::size_t j = 0; j < per.lattice.columns.size(); ++j) {
        os << (j ? "," : "") << "[";
        for (std::size_t i = 0; i < per.lattice.dim; ++i) os << (i ? "," : "") << per.lattice.columns[j][i];
        os << "]";
      }
      os << "];[";
      for (std::size_t i = 0; i < per.domain.size(); ++i) os << (i ? "," : "") << int(per.domain[i]);
      os << "]";
      break;
    }
  }
  return os.str();
}

std::string format_pattern(const Group& g, const Pattern& p) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [e, s] : p) {
    os << (first ? "" : ",") << g.format(e) << ":" << int(s);
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace gca
