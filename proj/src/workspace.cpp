#include "gca/workspace.hpp"

#include <fstream>
#include <sstream>

#include "gca/catalog.hpp"
#include "gca/error.hpp"
#include "json.hpp"

namespace gca {

using nlohmann::json;

Element parse_element(const std::string& text, const Group& g) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (g.is_finite()) {
    for (const auto& e : g.elements())
      if (g.format(e) == s) return e;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "unknown element '" + text + "' of " + g.name());
    }
    if (!(used == s.size() && v >= 0 && static_cast<std::size_t>(v) < g.order())) fail(ErrorKind::Parse, "unknown element '" + text + "' of " + g.name());
    return Element::index(static_cast<std::size_t>(v));
  }
  if (!s.empty() && s.front() == '(') {
    if (!(s.back() == ')')) fail(ErrorKind::Parse, "unterminated tuple '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  Point p;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    try {
      p.push_back(std::stoll(part, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (!(used == part.size() && !part.empty())) fail(ErrorKind::Parse, "bad coordinate '" + part + "' in '" + text + "'");
  }
  const Element e = Element::point(std::move(p));
  if (!(g.contains(e))) fail(ErrorKind::Parse, "'" + text + "' is not an element of " + g.name());
  return e;
}

namespace {

class Loader {
 public:
  Loader(std::string text, std::string origin) : text_(std::move(text)), origin_(std::move(origin)) {}

  // Line of the entity with this name inside the named section, scanning forward.
  Provenance locate(const std::string& section, const std::string& name) {
    auto& cursor = cursors_[section];
    if (cursor == 0) {
      const auto at = text_.find("\"" + section + "\"");
      cursor = at == std::string::npos ? 0 : at;
    }
    std::size_t pos = cursor;
    while ((pos = text_.find("\"name\"", pos)) != std::string::npos) {
      std::size_t p = pos + 6;
      while (p < text_.size() && (std::isspace(static_cast<unsigned char>(text_[p])) || text_[p] == ':')) ++p;
      if (text_.compare(p, name.size() + 2, "\"" + name + "\"") == 0) {
        cursor = p;
        return {origin_, static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + static_cast<long>(pos), '\n')) + 1};
      }
      pos = p;
    }
    return {origin_, 0};
  }

 private:
  std::string text_;
  std::string origin_;
  std::map<std::string, std::size_t> cursors_;
};

const json& field(const json& obj, const char* key, const std::string& what) {
  if (!(obj.is_object() && obj.contains(key))) fail(ErrorKind::Parse, what + ": missing field '" + key + "'");
  return obj.at(key);
}

std::string string_field(const json& obj, const char* key, const std::string& what) {
  const json& v = field(obj, key, what);
  if (!(v.is_string())) fail(ErrorKind::Parse, what + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t size_field(const json& obj, const char* key, const std::string& what) {
  const json& v = field(obj, key, what);
  if (!(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0))) fail(ErrorKind::Parse, what + ": field '" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Element element_from_json(const json& v, const Group& g, const std::string& what) {
  if (v.is_string()) return parse_element(v.get<std::string>(), g);
  if (v.is_number_integer()) {
    if (g.is_finite()) return parse_element(std::to_string(v.get<long long>()), g);
    if (!(g.rank() == 1)) fail(ErrorKind::Parse, what + ": elements of " + g.name() + " are arrays");
    return Element::point({v.get<std::int64_t>()});
  }
  if (v.is_array() && !g.is_finite()) {
    Point p;
    for (const auto& c : v) {
      if (!(c.is_number_integer())) fail(ErrorKind::Parse, what + ": coordinates must be integers");
      p.push_back(c.get<std::int64_t>());
    }
    const Element e = Element::point(std::move(p));
    if (!(g.contains(e))) fail(ErrorKind::Parse, what + ": wrong number of coordinates for " + g.name());
    return e;
  }
  fail(ErrorKind::Parse, what + ": cannot read element " + v.dump());
}

std::vector<Element> elements_from_json(const json& v, const Group& g, const std::string& what) {
  if (!(v.is_array())) fail(ErrorKind::Parse, what + ": expected an array of elements");
  std::vector<Element> out;
  for (const auto& e : v) out.push_back(element_from_json(e, g, what));
  return out;
}

Group group_from_json(const json& obj, const std::string& what) {
  const std::string kind = string_field(obj, "kind", what);
  if (kind == "cyclic") return build_cyclic(size_field(obj, "n", what));
  if (kind == "symmetric") return build_symmetric(size_field(obj, "n", what));
  if (kind == "dihedral") return build_dihedral(size_field(obj, "n", what));
  if (kind == "quaternion") return build_quaternion();
  if (kind == "free-abelian") return Group::free_abelian(size_field(obj, "rank", what));
  if (kind == "cayley") {
    const std::size_t n = size_field(obj, "n", what);
    const json& rows = field(obj, "table", what);
    if (!(rows.is_array() && rows.size() == n)) fail(ErrorKind::Parse, what + ": table must have n rows");
    std::vector<int> table;
    for (const auto& row : rows) {
      if (!(row.is_array() && row.size() == n)) fail(ErrorKind::Parse, what + ": every table row needs n entries");
      for (const auto& c : row) {
        if (!(c.is_number_integer())) fail(ErrorKind::Parse, what + ": table entries must be integers");
        table.push_back(c.get<int>());
      }
    }
    std::vector<std::string> labels;
    if (obj.contains("labels")) labels = obj.at("labels").get<std::vector<std::string>>();
    return Group::from_table(string_field(obj, "name", what), n, std::move(table), std::move(labels));
  }
  fail(ErrorKind::Parse, what + ": unknown group kind '" + kind + "'");
}

IntMatrix matrix_from_json(const json& v, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!(v.is_array() && v.size() == rows)) fail(ErrorKind::Parse, what + ": matrix needs " + std::to_string(rows) + " rows");
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& row : v) {
    if (!(row.is_array() && row.size() == cols)) fail(ErrorKind::Parse, what + ": matrix rows need " + std::to_string(cols) + " entries");
    m.push_back(row.get<std::vector<std::int64_t>>());
  }
  return IntMatrix::from_rows(m, cols);
}

}  // namespace

Workspace Workspace::load(const std::string& path) {
  std::ifstream in(path);
  if (!(in.good())) fail(ErrorKind::Parse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

Workspace Workspace::parse(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, origin + ": " + e.what());
  }
  if (!(doc.is_object())) fail(ErrorKind::Parse, origin + ": the document must be an object");
  for (const auto& [key, value] : doc.items())
    if (!(key == "groups" || key == "subgroups" || key == "homomorphisms" || key == "rules" || key == "gcas")) fail(ErrorKind::Parse, origin + ": unknown top-level field '" + key + "'");

  Workspace ws;
  Loader loader(text, origin);
  const auto section = [&](const char* key) {
    static const json empty = json::array();
    if (!doc.contains(key)) return std::cref(empty);
    if (!(doc.at(key).is_array())) fail(ErrorKind::Parse, origin + ": '" + std::string(key) + "' must be an array");
    return std::cref(doc.at(key));
  };
  // Runs one entity definition, prefixing any error with its location.
  const auto define = [&](const char* kind, const json& obj, auto&& body) {
    if (!(obj.is_object() && obj.contains("name") && obj.at("name").is_string())) fail(ErrorKind::Parse, origin + ": every entry of '" + std::string(kind) + "' needs a string name");
    const std::string name = obj.at("name").get<std::string>();
    const Provenance where = loader.locate(kind, name);
    try {
      body(name, where);
    } catch (const Error& e) {
      fail(e.kind(), where.str() + ": " + std::string(kind) + " '" + name + "': " + e.what());
    } catch (const json::exception& e) {
      fail(ErrorKind::Parse, where.str() + ": " + std::string(kind) + " '" + name + "': " + e.what());
    }
  };
  const auto unique = [](const auto& map, const std::string& name) {
    require(!map.count(name), ErrorKind::Parse, "duplicate name");
  };
  // Rules may live on a named group or on the group of a named subgroup.
  const auto carrier = [&](const std::string& name) -> std::pair<Group, const Subgroup*> {
    if (ws.groups_.count(name)) return {ws.groups_.at(name).value, nullptr};
    if (ws.subgroups_.count(name)) return {ws.subgroups_.at(name).value.as_group(), &ws.subgroups_.at(name).value};
    fail(ErrorKind::Parse, "unknown group or subgroup '" + name + "'");
  };

  for (const auto& obj : section("groups").get())
    define("groups", obj, [&](const std::string& name, const Provenance& where) {
      unique(ws.groups_, name);
      ws.groups_.emplace(name, Named<Group>{group_from_json(obj, "group"), where});
    });

  for (const auto& obj : section("subgroups").get())
    define("subgroups", obj, [&](const std::string& name, const Provenance& where) {
      unique(ws.subgroups_, name);
      const Group& g = ws.group(string_field(obj, "group", "subgroup"));
      std::optional<Subgroup> k;
      if (obj.contains("elements")) k = Subgroup::from_elements(g, elements_from_json(obj.at("elements"), g, "elements"));
      else if (obj.contains("generators"))
        k = Subgroup::generated_by(g, elements_from_json(obj.at("generators"), g, "generators"));
      else fail(ErrorKind::Parse, "needs 'elements' or 'generators'");
      ws.subgroups_.emplace(name, Named<Subgroup>{*k, where});
    });

  for (const auto& obj : section("homomorphisms").get())
    define("homomorphisms", obj, [&](const std::string& name, const Provenance& where) {
      unique(ws.homomorphisms_, name);
      const std::string kind = obj.contains("kind") ? string_field(obj, "kind", "homomorphism") : "general";
      std::optional<Homomorphism> phi;
      if (kind == "identity") {
        phi = Homomorphism::identity(ws.group(string_field(obj, "group", "homomorphism")));
      } else if (kind == "restriction") {
        phi = restrict_homomorphism(ws.homomorphism(string_field(obj, "of", "homomorphism")),
                                   ws.subgroup(string_field(obj, "subgroup", "homomorphism")));
      } else {
        const Group& h = ws.group(string_field(obj, "domain", "homomorphism"));
        const Group& g = ws.group(string_field(obj, "codomain", "homomorphism"));
        if (kind == "trivial") phi = Homomorphism::trivial(h, g);
        else if (kind != "general") fail(ErrorKind::Parse, "unknown homomorphism kind '" + kind + "'");
        else if (obj.contains("matrix"))
          phi = Homomorphism::from_matrix(h, g, matrix_from_json(obj.at("matrix"), g.is_finite() ? 0 : g.rank(),
                                                                 h.is_finite() ? 0 : h.rank(), "matrix"));
        else if (obj.contains("images"))
          phi = Homomorphism::from_generator_images(h, g, elements_from_json(obj.at("images"), g, "images"));
        else if (obj.contains("table"))
          phi = Homomorphism::from_table(h, g, elements_from_json(obj.at("table"), g, "table"));
        else fail(ErrorKind::Parse, "needs 'images', 'table', 'matrix' or a kind");
      }
      ws.homomorphisms_.emplace(name, Named<Homomorphism>{*phi, where});
      ws.hom_order_.push_back(name);
    });

  for (const auto& obj : section("rules").get())
    define("rules", obj, [&](const std::string& name, const Provenance& where) {
      unique(ws.rules_, name);
      const auto [g, sub] = carrier(string_field(obj, "group", "rule"));
      const Alphabet a(obj.contains("q") ? size_field(obj, "q", "rule") : 2);
      std::vector<Element> memory;
      if (obj.contains("memory")) {
        const Group& parent = sub ? sub->parent() : g;
        for (const auto& e : elements_from_json(obj.at("memory"), parent, "memory")) {
          if (!sub) {
            memory.push_back(e);
            continue;
          }
          const auto local = sub->to_local(e);
          if (!(local.has_value())) fail(ErrorKind::InvalidArgument, "memory element " + parent.format(e) + " is outside " + sub->describe());
          memory.push_back(*local);
        }
      }
      std::optional<LocalRule> mu;
      if (obj.contains("builtin")) {
        const std::string b = string_field(obj, "builtin", "rule");
        if (b == "identity") {
          require(memory.empty() || (memory.size() == 1 && memory[0] == g.identity()), ErrorKind::InvalidArgument,
                  "identity rule has memory {e}");
          mu = LocalRule::identity(g, a);
        } else if (b == "xor") {
          require(a.size() == 2, ErrorKind::InvalidArgument, "xor needs q = 2; use sum-mod-q");
          mu = LocalRule::sum_mod_q(g, a, memory);
        } else if (b == "sum-mod-q") {
          mu = LocalRule::sum_mod_q(g, a, memory);
        } else if (b.rfind("constant:", 0) == 0) {
          const int c = std::stoi(b.substr(9));
          require(c >= 0 && a.contains(static_cast<std::size_t>(c)), ErrorKind::InvalidArgument,
                  "constant symbol outside the alphabet");
          mu = LocalRule::constant(g, a, static_cast<Symbol>(c), memory);
        } else if (b.rfind("read-at:", 0) == 0) {
          const Group& parent = sub ? sub->parent() : g;
          Element at = parse_element(b.substr(8), parent);
          if (sub) {
            const auto local = sub->to_local(at);
            require(local.has_value(), ErrorKind::InvalidArgument, "read-at cell outside the subgroup");
            at = *local;
          }
          mu = LocalRule::read_at(g, a, at);
        } else {
          fail(ErrorKind::Parse, "unknown builtin '" + b + "'");
        }
      } else if (obj.contains("table")) {
        const json& t = obj.at("table");
        require(t.is_array(), ErrorKind::Parse, "table must be an array");
        const std::size_t patterns = configuration_count(memory.size(), a.size());
        std::vector<int> raw(patterns, -1);
        if (!t.empty() && t.front().is_array()) {
          for (const auto& row : t) {
            require(row.is_array() && row.size() == 2, ErrorKind::Parse, "table rows are [pattern, symbol]");
            const auto p = row.at(0).get<std::size_t>();
            if (!(p < patterns)) fail(ErrorKind::InvalidArgument, "pattern index " + std::to_string(p) + " out of range");
            if (!(raw[p] < 0)) fail(ErrorKind::InvalidArgument, "pattern " + std::to_string(p) + " listed twice");
            raw[p] = row.at(1).get<int>();
          }
        } else {
          if (!(t.size() == patterns)) fail(ErrorKind::InvalidArgument, "table needs " + std::to_string(patterns) + " entries");
          for (std::size_t i = 0; i < patterns; ++i) raw[i] = t.at(i).get<int>();
        }
        std::vector<Symbol> table;
        for (std::size_t i = 0; i < patterns; ++i) {
          if (!(raw[i] >= 0)) fail(ErrorKind::InvalidArgument, "pattern " + std::to_string(i) + " has no value");
          if (!(a.contains(static_cast<std::size_t>(raw[i])))) fail(ErrorKind::InvalidArgument, "symbol " + std::to_string(raw[i]) + " outside the alphabet");
          table.push_back(static_cast<Symbol>(raw[i]));
        }
        mu = LocalRule(g, a, memory, std::move(table));
      } else {
        fail(ErrorKind::Parse, "needs 'builtin' or 'table'");
      }
      ws.rules_.emplace(name, Named<LocalRule>{*mu, where});
    });

  for (const auto& obj : section("gcas").get())
    define("gcas", obj, [&](const std::string& name, const Provenance& where) {
      unique(ws.gcas_, name);
      ws.gcas_.emplace(name, Named<Gca>{Gca(ws.homomorphism(string_field(obj, "phi", "gca")),
                                            ws.rule(string_field(obj, "rule", "gca"))),
                                        where});
    });
  return ws;
}

namespace {

template <class M>
const auto& lookup(const M& map, const std::string& name, const char* kind) {
  const auto it = map.find(name);
  if (!(it != map.end())) fail(ErrorKind::Parse, std::string("unknown ") + kind + " '" + name + "'");
  return it->second.value;
}

}  // namespace

const Group& Workspace::group(const std::string& name) const { return lookup(groups_, name, "group"); }
const Subgroup& Workspace::subgroup(const std::string& name) const { return lookup(subgroups_, name, "subgroup"); }
const Homomorphism& Workspace::homomorphism(const std::string& name) const {
  return lookup(homomorphisms_, name, "homomorphism");
}
const LocalRule& Workspace::rule(const std::string& name) const { return lookup(rules_, name, "rule"); }
const Gca& Workspace::gca(const std::string& name) const { return lookup(gcas_, name, "gca"); }

std::optional<std::string> Workspace::name_of(const Homomorphism& phi) const {
  for (const auto& name : hom_order_)
    if (homomorphisms_.at(name).value == phi) return name;
  return std::nullopt;
}

std::size_t Workspace::entity_count() const {
  return groups_.size() + subgroups_.size() + homomorphisms_.size() + rules_.size() + gcas_.size();
}

}  // namespace gca
