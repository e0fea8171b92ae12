#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gca/automaton.hpp"
#include "gca/homomorphism.hpp"
#include "gca/local_rule.hpp"
#include "gca/subgroup.hpp"

namespace gca {

/// Where an entity was defined.
struct Provenance {
  std::string file;
  std::size_t line = 0;
  std::string str() const { return file + ":" + std::to_string(line); }
};

template <class T>
struct Named {
  T value;
  Provenance where;
};

/// Named entities from one JSON definition document with top-level arrays
/// groups, subgroups, homomorphisms, rules and gcas. Every entity is
/// validated when loaded; errors name the file, line and entity.
class Workspace {
 public:
  static Workspace load(const std::string& path);
  static Workspace parse(const std::string& text, const std::string& origin = "<input>");

  const Group& group(const std::string& name) const;
  const Subgroup& subgroup(const std::string& name) const;
  const Homomorphism& homomorphism(const std::string& name) const;
  const LocalRule& rule(const std::string& name) const;
  const Gca& gca(const std::string& name) const;

  /// Name of a homomorphism equal to phi, if the workspace defines one.
  std::optional<std::string> name_of(const Homomorphism& phi) const;
  std::size_t entity_count() const;

 private:
  std::map<std::string, Named<Group>> groups_;
  std::map<std::string, Named<Subgroup>> subgroups_;
  std::map<std::string, Named<Homomorphism>> homomorphisms_;
  std::map<std::string, Named<LocalRule>> rules_;
  std::map<std::string, Named<Gca>> gcas_;
  std::vector<std::string> hom_order_;
};

/// "3", "-1" or "(1,-2)" as an element of g; finite groups also accept labels.
Element parse_element(const std::string& text, const Group& g);

}  // namespace gca
