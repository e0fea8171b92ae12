#include "gca/local_rule.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gca/error.hpp"

namespace gca {

LocalRule::LocalRule(Group group, Alphabet alphabet, std::vector<Element> memory, std::vector<Symbol> table)
    : group_(std::move(group)), alphabet_(alphabet), memory_(std::move(memory)), table_(std::move(table)) {
  std::set<Element> seen;
  for (const auto& t : memory_) {
    if (!(group_.contains(t))) fail(ErrorKind::GroupMismatch, "memory element not in " + group_.name());
    if (!(seen.insert(t).second)) fail(ErrorKind::InvalidArgument, "memory set has a repeated element " + group_.format(t));
  }
  const std::size_t expected = configuration_count(memory_.size(), alphabet_.size());
  require(expected <= kMaxRuleTable, ErrorKind::BudgetExceeded, "local rule table too large");
  if (!(table_.size() == expected)) fail(ErrorKind::InvalidArgument, "rule table has " + std::to_string(table_.size()) + " entries, expected q^|T| = " + std::to_string(expected));
  for (auto s : table_)
    require(alphabet_.contains(s), ErrorKind::InvalidArgument, "rule table symbol outside alphabet");
}

LocalRule LocalRule::identity(const Group& g, const Alphabet& a) { return read_at(g, a, g.identity()); }

LocalRule LocalRule::read_at(const Group& g, const Alphabet& a, const Element& t) {
  std::vector<Symbol> table(a.size());
  std::iota(table.begin(), table.end(), Symbol{0});
  return LocalRule(g, a, {t}, std::move(table));
}

LocalRule LocalRule::constant(const Group& g, const Alphabet& a, Symbol c, std::vector<Element> memory) {
  const std::size_t n = configuration_count(memory.size(), a.size());
  return LocalRule(g, a, std::move(memory), std::vector<Symbol>(n, c));
}

LocalRule LocalRule::sum_mod_q(const Group& g, const Alphabet& a, std::vector<Element> memory) {
  const std::size_t q = a.size();
  return from_function(g, a, std::move(memory), [q](std::span<const Symbol> p) {
    std::size_t s = 0;
    for (auto v : p) s += v;
    return static_cast<Symbol>(s % q);
  });
}

LocalRule LocalRule::from_function(const Group& g, const Alphabet& a, std::vector<Element> memory,
                                   const std::function<Symbol(std::span<const Symbol>)>& mu) {
  const std::size_t n = configuration_count(memory.size(), a.size());
  require(n <= kMaxRuleTable, ErrorKind::BudgetExceeded, "local rule table too large");
  std::vector<Symbol> table(n);
  std::vector<Symbol> digits(memory.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    table[i] = mu(digits);
    next_configuration(digits, a.size());
  }
  return LocalRule(g, a, std::move(memory), std::move(table));
}

std::size_t LocalRule::encode(std::span<const Symbol> digits) const {
  std::size_t index = 0;
  for (std::size_t i = digits.size(); i-- > 0;) index = index * alphabet_.size() + digits[i];
  return index;
}

std::vector<Symbol> LocalRule::decode(std::size_t pattern_index) const {
  return decode_configuration(pattern_index, memory_.size(), alphabet_.size());
}

Symbol LocalRule::operator()(const Pattern& p) const {
  std::vector<Symbol> digits;
  digits.reserve(memory_.size());
  for (const auto& t : memory_) {
    auto it = p.find(t);
    if (!(it != p.end())) fail(ErrorKind::InvalidArgument, "pattern misses memory cell " + group_.format(t));
    digits.push_back(it->second);
  }
  return (*this)(std::span<const Symbol>(digits));
}

bool LocalRule::is_constant() const {
  return std::all_of(table_.begin(), table_.end(), [&](Symbol s) { return s == table_.front(); });
}

bool LocalRule::is_symmetric() const {
  // Adjacent transpositions generate Sym(T).
  const std::size_t q = alphabet_.size();
  std::size_t stride = 1;
  for (std::size_t i = 0; i + 1 < memory_.size(); ++i, stride *= q) {
    for (std::size_t p = 0; p < table_.size(); ++p) {
      const std::size_t di = p / stride % q, dj = p / (stride * q) % q;
      const std::size_t swapped = p - di * stride - dj * stride * q + dj * stride + di * stride * q;
      if (table_[p] != table_[swapped]) return false;
    }
  }
  return true;
}

std::vector<std::size_t> LocalRule::essential_positions() const {
  std::vector<std::size_t> out;
  const std::size_t q = alphabet_.size();
  std::size_t stride = 1;
  for (std::size_t i = 0; i < memory_.size(); ++i, stride *= q) {
    bool essential = false;
    for (std::size_t p = 0; p < table_.size() && !essential; ++p) {
      const std::size_t d = p / stride % q;
      if (d != 0) continue;
      for (std::size_t v = 1; v < q && !essential; ++v) essential = table_[p] != table_[p + v * stride];
    }
    if (essential) out.push_back(i);
  }
  return out;
}

LocalRule LocalRule::project(const std::vector<std::size_t>& positions) const {
  const auto essential = essential_positions();
  for (auto e : essential)
    if (!(std::find(positions.begin(), positions.end(), e) != positions.end())) fail(ErrorKind::Precondition, "projection drops essential memory cell " + group_.format(memory_[e]));
  std::vector<Element> memory;
  for (auto i : positions) memory.push_back(memory_.at(i));
  const std::size_t q = alphabet_.size();
  const std::size_t n = configuration_count(positions.size(), q);
  std::vector<Symbol> table(n);
  std::vector<Symbol> digits(positions.size(), 0);
  std::vector<Symbol> full(memory_.size(), 0);  // dropped cells read as 0
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < positions.size(); ++j) full[positions[j]] = digits[j];
    table[i] = (*this)(std::span<const Symbol>(full));
    next_configuration(digits, q);
  }
  return LocalRule(group_, alphabet_, std::move(memory), std::move(table));
}

LocalRule LocalRule::minimized() const { return project(essential_positions()); }

LocalRule LocalRule::canonical() const {
  auto positions = essential_positions();
  std::sort(positions.begin(), positions.end(),
            [&](std::size_t a, std::size_t b) { return memory_[a] < memory_[b]; });
  return project(positions);
}

LocalRule LocalRule::extended(const std::vector<Element>& extra) const {
  std::vector<Element> memory = memory_;
  for (const auto& e : extra)
    if (std::find(memory.begin(), memory.end(), e) == memory.end()) memory.push_back(e);
  const std::size_t k = memory_.size();
  return from_function(group_, alphabet_, std::move(memory),
                       [&](std::span<const Symbol> p) { return (*this)(p.first(k)); });
}

bool operator==(const LocalRule& a, const LocalRule& b) {
  return a.group_ == b.group_ && a.alphabet_ == b.alphabet_ && a.memory_ == b.memory_ && a.table_ == b.table_;
}

}  // namespace gca
